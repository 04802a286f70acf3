//! JSON file formats for algebras, linear maps, representations, morphism
//! triples, deformation generators and cochains.
//!
//! Rationals travel as strings `"p/q"` (or `"p"` when the denominator is 1);
//! parsing accepts an optional leading sign and requires a positive
//! denominator. Basis indices are 1-based in files and reports. Omitted
//! products are zero. Nested objects that reference an algebra accept either
//! an inline algebra object or a path string, resolved relative to the
//! referencing file.

use crate::algebra::{Algebra, Flavor, MorphismTriple};
use crate::cochain::{Cochain, CochainKind};
use crate::deform::DeformationGenerator;
use crate::linalg::Mat;
use crate::rep::Representation;
use crate::scalar::{format_scalar, parse_scalar, ParseScalarError, Scalar};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
    #[error("invalid file: {0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

/// Sparse product entry: `e_i * e_j = sum_k out[k] e_k`, all 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub out: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub flavor: String,
    pub products: Vec<ProductEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

/// Inline object or a path to a JSON file holding one.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InlineOrPath<T> {
    Path(String),
    Inline(T),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub algebra: InlineOrPath<AlgebraFile>,
    pub space_dim: usize,
    pub rho: Vec<MatFile>,
    pub mu: Vec<MatFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TripleFile {
    pub g: InlineOrPath<AlgebraFile>,
    pub h: InlineOrPath<AlgebraFile>,
    pub phi: MatFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub omega: Vec<ProductEntry>,
    pub varpi: Vec<ProductEntry>,
    pub theta: MatFile,
}

/// Witness pair of linear maps, `n` on the source and `s` on the target.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairFile {
    pub n: MatFile,
    pub s: MatFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CochainFile {
    pub degree: usize,
    pub kind: String,
    pub coords: Vec<String>,
}

pub fn flavor_tag(f: Flavor) -> &'static str {
    f.as_str()
}

pub fn flavor_from_tag(tag: &str) -> Result<Flavor, FormatError> {
    match tag {
        "prelie" => Ok(Flavor::PreLie),
        "lie" => Ok(Flavor::Lie),
        "commassoc" => Ok(Flavor::CommAssoc),
        "unchecked" => Ok(Flavor::Unchecked),
        other => Err(invalid(format!("unknown flavor `{other}`"))),
    }
}

fn products_to_entries(tensor_at: impl Fn(usize, usize, usize) -> Scalar, dim: usize) -> Vec<ProductEntry> {
    let mut products = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let mut out = BTreeMap::new();
            for k in 0..dim {
                let c = tensor_at(i, j, k);
                if !c.is_zero() {
                    out.insert((k + 1).to_string(), format_scalar(&c));
                }
            }
            if !out.is_empty() {
                products.push(ProductEntry { i: i + 1, j: j + 1, out });
            }
        }
    }
    products
}

fn entries_to_tensor(
    products: &[ProductEntry],
    dim: usize,
) -> Result<Vec<Vec<Vec<Scalar>>>, FormatError> {
    let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for p in products {
        if p.i == 0 || p.i > dim || p.j == 0 || p.j > dim {
            return Err(invalid(format!(
                "product index ({}, {}) out of range 1..={dim}",
                p.i, p.j
            )));
        }
        for (k_str, coeff) in &p.out {
            let k: usize = k_str
                .parse()
                .map_err(|_| invalid(format!("bad output index `{k_str}`")))?;
            if k == 0 || k > dim {
                return Err(invalid(format!("output index {k} out of range 1..={dim}")));
            }
            c[p.i - 1][p.j - 1][k - 1] = parse_scalar(coeff)?;
        }
    }
    Ok(c)
}

pub fn algebra_to_file(a: &Algebra) -> AlgebraFile {
    AlgebraFile {
        dim: a.dim(),
        basis: Some(a.basis_names().to_vec()),
        flavor: flavor_tag(a.flavor()).to_string(),
        products: products_to_entries(|i, j, k| a.structure_constant(i, j, k).clone(), a.dim()),
    }
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<Algebra, FormatError> {
    let flavor = flavor_from_tag(&f.flavor)?;
    let names = match &f.basis {
        Some(names) => {
            if names.len() != f.dim {
                return Err(invalid(format!(
                    "basis has {} names for dimension {}",
                    names.len(),
                    f.dim
                )));
            }
            names.clone()
        }
        None => (1..=f.dim).map(|i| format!("e{i}")).collect(),
    };
    let c = entries_to_tensor(&f.products, f.dim)?;
    Ok(Algebra::new(names, c, flavor))
}

pub fn mat_to_file(m: &Mat) -> MatFile {
    MatFile {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| format_scalar(&m[(i, j)])).collect())
            .collect(),
    }
}

pub fn mat_from_file(f: &MatFile) -> Result<Mat, FormatError> {
    if f.entries.len() != f.rows || f.entries.iter().any(|r| r.len() != f.cols) {
        return Err(invalid(format!(
            "entry grid does not match {}x{}",
            f.rows, f.cols
        )));
    }
    let mut data = Vec::with_capacity(f.rows * f.cols);
    for row in &f.entries {
        for s in row {
            data.push(parse_scalar(s)?);
        }
    }
    Ok(Mat::new(f.rows, f.cols, data))
}

pub fn generator_to_file(g: &DeformationGenerator) -> GeneratorFile {
    let dg = g.omega.len();
    let dh = g.varpi.len();
    GeneratorFile {
        omega: products_to_entries(|i, j, k| g.omega[i][j][k].clone(), dg),
        varpi: products_to_entries(|i, j, k| g.varpi[i][j][k].clone(), dh),
        theta: mat_to_file(&g.theta),
    }
}

pub fn generator_from_file(
    f: &GeneratorFile,
    dim_g: usize,
    dim_h: usize,
) -> Result<DeformationGenerator, FormatError> {
    let theta = mat_from_file(&f.theta)?;
    if theta.rows() != dim_h || theta.cols() != dim_g {
        return Err(invalid(format!(
            "theta must be {dim_h}x{dim_g}, got {}x{}",
            theta.rows(),
            theta.cols()
        )));
    }
    Ok(DeformationGenerator {
        omega: entries_to_tensor(&f.omega, dim_g)?,
        varpi: entries_to_tensor(&f.varpi, dim_h)?,
        theta,
    })
}

pub fn cochain_to_file(c: &Cochain) -> CochainFile {
    CochainFile {
        degree: c.degree,
        kind: c.kind.as_str().to_string(),
        coords: c.coords.iter().map(format_scalar).collect(),
    }
}

pub fn cochain_from_file(f: &CochainFile) -> Result<Cochain, FormatError> {
    let kind = match f.kind.as_str() {
        "prelie" => CochainKind::PreLie,
        "ce" => CochainKind::CE,
        other => return Err(invalid(format!("unknown cochain kind `{other}`"))),
    };
    let coords = f
        .coords
        .iter()
        .map(|s| parse_scalar(s).map_err(FormatError::from))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Cochain {
        kind,
        degree: f.degree,
        coords,
    })
}

fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn resolve<T: for<'de> Deserialize<'de> + Clone>(
    item: &InlineOrPath<T>,
    base: &Path,
) -> Result<T, FormatError> {
    match item {
        InlineOrPath::Inline(t) => Ok(t.clone()),
        InlineOrPath::Path(p) => {
            let full = base.join(p);
            let text = read_file(&full)?;
            Ok(serde_json::from_str(&text)?)
        }
    }
}

pub fn load_algebra(path: &Path) -> Result<Algebra, FormatError> {
    let f: AlgebraFile = serde_json::from_str(&read_file(path)?)?;
    algebra_from_file(&f)
}

pub fn load_mat(path: &Path) -> Result<Mat, FormatError> {
    let f: MatFile = serde_json::from_str(&read_file(path)?)?;
    mat_from_file(&f)
}

/// Raw (unverified) parts of a triple file: the declared algebras and the
/// morphism matrix. Verification is the caller's concern so that parse
/// errors and mathematical failures stay distinguishable.
pub struct TripleParts {
    pub g: Algebra,
    pub h: Algebra,
    pub phi: Mat,
}

impl TripleParts {
    /// Runs the pre-Lie and homomorphism checks and assembles the triple.
    pub fn verify(self) -> Result<MorphismTriple, crate::algebra::AlgebraError> {
        MorphismTriple::new(self.g, self.h, self.phi)
    }
}

pub fn load_triple_parts(path: &Path) -> Result<TripleParts, FormatError> {
    let f: TripleFile = serde_json::from_str(&read_file(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let g = algebra_from_file(&resolve(&f.g, base)?)?;
    let h = algebra_from_file(&resolve(&f.h, base)?)?;
    let phi = mat_from_file(&f.phi)?;
    Ok(TripleParts { g, h, phi })
}

pub fn triple_to_file(t: &MorphismTriple) -> TripleFile {
    TripleFile {
        g: InlineOrPath::Inline(algebra_to_file(t.g())),
        h: InlineOrPath::Inline(algebra_to_file(t.h())),
        phi: mat_to_file(t.phi()),
    }
}

pub fn load_representation(path: &Path) -> Result<Representation, FormatError> {
    let f: RepresentationFile = serde_json::from_str(&read_file(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let algebra = algebra_from_file(&resolve(&f.algebra, base)?)?;
    representation_from_file(&f, algebra)
}

pub fn representation_from_file(
    f: &RepresentationFile,
    algebra: Algebra,
) -> Result<Representation, FormatError> {
    if f.rho.len() != algebra.dim() || f.mu.len() != algebra.dim() {
        return Err(invalid(format!(
            "need {} rho and mu matrices, got {} and {}",
            algebra.dim(),
            f.rho.len(),
            f.mu.len()
        )));
    }
    let to_mats = |files: &[MatFile]| -> Result<Vec<Mat>, FormatError> {
        files
            .iter()
            .map(|mf| {
                let m = mat_from_file(mf)?;
                if m.rows() != f.space_dim || m.cols() != f.space_dim {
                    return Err(invalid(format!(
                        "action matrix must be {0}x{0}",
                        f.space_dim
                    )));
                }
                Ok(m)
            })
            .collect()
    };
    Ok(Representation {
        algebra,
        space_dim: f.space_dim,
        rho: to_mats(&f.rho)?,
        mu: to_mats(&f.mu)?,
    })
}

pub fn representation_to_file(r: &Representation) -> RepresentationFile {
    RepresentationFile {
        algebra: InlineOrPath::Inline(algebra_to_file(&r.algebra)),
        space_dim: r.space_dim,
        rho: r.rho.iter().map(mat_to_file).collect(),
        mu: r.mu.iter().map(mat_to_file).collect(),
    }
}

pub fn load_generator_file(path: &Path) -> Result<GeneratorFile, FormatError> {
    Ok(serde_json::from_str(&read_file(path)?)?)
}

pub fn load_pair(path: &Path) -> Result<(Mat, Mat), FormatError> {
    let f: PairFile = serde_json::from_str(&read_file(path)?)?;
    Ok((mat_from_file(&f.n)?, mat_from_file(&f.s)?))
}
