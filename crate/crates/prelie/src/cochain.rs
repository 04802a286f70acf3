//! Cochain spaces and coboundary operators as explicit rational matrices.
//!
//! Pre-Lie cochains of degree `n` live in `Hom(wedge^{n-1} g (x) g, V)`; the
//! basis is indexed by `(I, j, v)` with `I` a strictly increasing
//! `(n-1)`-subset of the basis, `j` an unrestricted last index and `v` a
//! module coordinate, all ordered lexicographically. Chevalley-Eilenberg
//! cochains of degree `n` live in `Hom(wedge^n g, W)` with basis `(I, v)`.
//! The fixed orders are what makes the degree-shift identification between
//! the two sides the identity on coordinates.

use crate::linalg::{quotient_complement, LinalgError, Mat};
use crate::rep::{LieRepresentation, Representation};
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::HashMap;
use thiserror::Error;

/// Largest cochain-space dimension the crate will materialize by default.
pub const DEFAULT_SIZE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Error)]
pub enum CochainError {
    #[error("cochain space dimension {dim} exceeds the size limit {limit}")]
    SizeLimit { dim: usize, limit: usize },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("coordinate vector has length {got}, space dimension is {expected}")]
    CoordLength { expected: usize, got: usize },
    #[error("not a complex: d.d has a nonzero entry at ({row},{col})")]
    NotAComplex { row: usize, col: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// All strictly increasing `k`-subsets of `0..d`, in lexicographic order.
pub fn increasing_subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
    if k > d {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + d - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in (i + 1)..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Sorts a tuple of indices; returns `None` on repeats, else the permutation
/// sign that sorts it.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut sorted = tuple.to_vec();
    let mut sign = 1i32;
    // insertion sort, counting transpositions
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((sorted, sign))
    }
}

fn subset_index_map(subsets: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect()
}

/// Basis bookkeeping for `C^n_preLie(g, V) = Hom(wedge^{n-1} g (x) g, V)`.
#[derive(Debug, Clone)]
pub struct PreLieCochainSpace {
    pub degree: usize,
    pub algebra_dim: usize,
    pub module_dim: usize,
    wedge: Vec<Vec<usize>>,
    wedge_index: HashMap<Vec<usize>, usize>,
}

impl PreLieCochainSpace {
    pub fn new(
        degree: usize,
        algebra_dim: usize,
        module_dim: usize,
        limit: usize,
    ) -> Result<Self, CochainError> {
        assert!(degree >= 1, "pre-Lie cochains start at degree 1");
        let wedge = increasing_subsets(algebra_dim, degree - 1);
        let dim = wedge.len() * algebra_dim * module_dim;
        if dim > limit {
            return Err(CochainError::SizeLimit { dim, limit });
        }
        let wedge_index = subset_index_map(&wedge);
        Ok(PreLieCochainSpace {
            degree,
            algebra_dim,
            module_dim,
            wedge,
            wedge_index,
        })
    }

    pub fn dim(&self) -> usize {
        self.wedge.len() * self.algebra_dim * self.module_dim
    }

    pub fn wedge_subsets(&self) -> &[Vec<usize>] {
        &self.wedge
    }

    /// Coordinate index of the basis cochain `(I, j, v)`; `I` must be sorted.
    pub fn index(&self, wedge: &[usize], j: usize, v: usize) -> usize {
        let w = self.wedge_index[wedge];
        (w * self.algebra_dim + j) * self.module_dim + v
    }

    /// Inverse of [`PreLieCochainSpace::index`].
    pub fn label(&self, idx: usize) -> (&[usize], usize, usize) {
        let v = idx % self.module_dim;
        let rest = idx / self.module_dim;
        let j = rest % self.algebra_dim;
        let w = rest / self.algebra_dim;
        (&self.wedge[w], j, v)
    }

    /// Multilinear, wedge-antisymmetrized evaluation of a cochain on
    /// coordinate-vector arguments (`degree` many, the last one unskewed).
    pub fn evaluate(
        &self,
        coords: &[Scalar],
        args: &[Vec<Scalar>],
    ) -> Result<Vec<Scalar>, CochainError> {
        if coords.len() != self.dim() {
            return Err(CochainError::CoordLength {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        if args.len() != self.degree {
            return Err(CochainError::ArityMismatch {
                expected: self.degree,
                got: args.len(),
            });
        }
        let d = self.algebra_dim;
        let n_wedge = self.degree - 1;
        let mut out = vec![Scalar::zero(); self.module_dim];
        let mut tuple = vec![0usize; n_wedge];
        loop {
            let mut coeff = Scalar::from_integer(1.into());
            let mut zero = false;
            for (slot, &i) in tuple.iter().enumerate() {
                if args[slot][i].is_zero() {
                    zero = true;
                    break;
                }
                coeff *= &args[slot][i];
            }
            if !zero {
                if let Some((sorted, sign)) = sort_with_sign(&tuple) {
                    let signed = if sign < 0 { -coeff } else { coeff };
                    for (j, xj) in args[self.degree - 1].iter().enumerate() {
                        if xj.is_zero() {
                            continue;
                        }
                        let c = &signed * xj;
                        for v in 0..self.module_dim {
                            let x = &coords[self.index(&sorted, j, v)];
                            if !x.is_zero() {
                                out[v] += &c * x;
                            }
                        }
                    }
                }
            }
            if !advance_tuple(&mut tuple, d) {
                break;
            }
        }
        Ok(out)
    }
}

/// Basis bookkeeping for `C^n_CE(g, W) = Hom(wedge^n g, W)`.
#[derive(Debug, Clone)]
pub struct CECochainSpace {
    pub degree: usize,
    pub algebra_dim: usize,
    pub module_dim: usize,
    wedge: Vec<Vec<usize>>,
    wedge_index: HashMap<Vec<usize>, usize>,
}

impl CECochainSpace {
    pub fn new(
        degree: usize,
        algebra_dim: usize,
        module_dim: usize,
        limit: usize,
    ) -> Result<Self, CochainError> {
        let wedge = increasing_subsets(algebra_dim, degree);
        let dim = wedge.len() * module_dim;
        if dim > limit {
            return Err(CochainError::SizeLimit { dim, limit });
        }
        let wedge_index = subset_index_map(&wedge);
        Ok(CECochainSpace {
            degree,
            algebra_dim,
            module_dim,
            wedge,
            wedge_index,
        })
    }

    pub fn dim(&self) -> usize {
        self.wedge.len() * self.module_dim
    }

    pub fn wedge_subsets(&self) -> &[Vec<usize>] {
        &self.wedge
    }

    pub fn index(&self, wedge: &[usize], v: usize) -> usize {
        self.wedge_index[wedge] * self.module_dim + v
    }

    pub fn label(&self, idx: usize) -> (&[usize], usize) {
        (&self.wedge[idx / self.module_dim], idx % self.module_dim)
    }

    /// Fully antisymmetrized evaluation on `degree` coordinate vectors.
    pub fn evaluate(
        &self,
        coords: &[Scalar],
        args: &[Vec<Scalar>],
    ) -> Result<Vec<Scalar>, CochainError> {
        if coords.len() != self.dim() {
            return Err(CochainError::CoordLength {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        if args.len() != self.degree {
            return Err(CochainError::ArityMismatch {
                expected: self.degree,
                got: args.len(),
            });
        }
        let d = self.algebra_dim;
        let mut out = vec![Scalar::zero(); self.module_dim];
        let mut tuple = vec![0usize; self.degree];
        loop {
            let mut coeff = Scalar::from_integer(1.into());
            let mut zero = false;
            for (slot, &i) in tuple.iter().enumerate() {
                if args[slot][i].is_zero() {
                    zero = true;
                    break;
                }
                coeff *= &args[slot][i];
            }
            if !zero {
                if let Some((sorted, sign)) = sort_with_sign(&tuple) {
                    let signed = if sign < 0 { -coeff } else { coeff };
                    for v in 0..self.module_dim {
                        let x = &coords[self.index(&sorted, v)];
                        if !x.is_zero() {
                            out[v] += &signed * x;
                        }
                    }
                }
            }
            if !advance_tuple(&mut tuple, d) {
                break;
            }
        }
        Ok(out)
    }
}

fn advance_tuple(tuple: &mut [usize], base: usize) -> bool {
    if base == 0 {
        return false;
    }
    for slot in (0..tuple.len()).rev() {
        tuple[slot] += 1;
        if tuple[slot] < base {
            return true;
        }
        tuple[slot] = 0;
    }
    false
}

/// Pre-Lie coboundary `d: C^n(g,V) -> C^{n+1}(g,V)` as a matrix in the fixed
/// bases. `n >= 1`.
///
/// The coboundary of `f` evaluated at `(x_1, ..., x_n, x_{n+1})` is the sum of
/// four families of terms: `rho(x_i)` acting on `f` with `x_i` deleted,
/// `mu(x_{n+1})` acting on `f` with `x_i` moved to the last slot, `f` with the
/// last slot multiplied by `x_i . x_{n+1}`, and `f` with `[x_i, x_j]` pushed
/// into the wedge part. Signs are literal `(-1)^{i+1}` and `(-1)^{i+j}`.
pub fn prelie_d_matrix(
    n: usize,
    rep: &Representation,
    limit: usize,
) -> Result<Mat, CochainError> {
    assert!(n >= 1, "pre-Lie coboundary starts at degree 1");
    let a = &rep.algebra;
    let d = a.dim();
    let m = rep.space_dim;
    let domain = PreLieCochainSpace::new(n, d, m, limit)?;
    let codomain = PreLieCochainSpace::new(n + 1, d, m, limit)?;
    let mut out = Mat::zeros(codomain.dim(), domain.dim());

    // Accumulates `coeff * op[v', v] * f(wedge, last, v)` over module indices.
    let add_matrix_term = |out: &mut Mat,
                               row_wedge: &[usize],
                               row_last: usize,
                               sign: i64,
                               op: &Mat,
                               col_wedge: &[usize],
                               col_last: usize| {
        for v in 0..m {
            let col = domain.index(col_wedge, col_last, v);
            for vp in 0..m {
                let x = &op[(vp, v)];
                if x.is_zero() {
                    continue;
                }
                let row = codomain.index(row_wedge, row_last, vp);
                let t = &out[(row, col)] + &(x * &crate::scalar::int(sign));
                out[(row, col)] = t;
            }
        }
    };
    let add_scalar_term = |out: &mut Mat,
                           codomain: &PreLieCochainSpace,
                           domain: &PreLieCochainSpace,
                           row_wedge: &[usize],
                           row_last: usize,
                           coeff: &Scalar,
                           col_wedge: &[usize],
                           col_last: usize| {
        if coeff.is_zero() {
            return;
        }
        for v in 0..m {
            let row = codomain.index(row_wedge, row_last, v);
            let col = domain.index(col_wedge, col_last, v);
            let t = &out[(row, col)] + coeff;
            out[(row, col)] = t;
        }
    };

    for wedge in codomain.wedge_subsets() {
        for s in 0..d {
            for (pos, &ti) in wedge.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1i64 } else { -1 };
                let mut rest: Vec<usize> = wedge.clone();
                rest.remove(pos);
                // rho(x_i) f(..., x_{n+1})
                add_matrix_term(&mut out, wedge, s, sign, &rep.rho[ti], &rest, s);
                // mu(x_{n+1}) f(..., x_i)
                add_matrix_term(&mut out, wedge, s, sign, &rep.mu[s], &rest, ti);
                // -f(..., x_i . x_{n+1})
                for (k, c) in a.product_basis(ti, s).iter().enumerate() {
                    let coeff = c * &crate::scalar::int(-sign);
                    add_scalar_term(&mut out, &codomain, &domain, wedge, s, &coeff, &rest, k);
                }
            }
            // f([x_i, x_j], ..., x_{n+1})
            for pos_i in 0..wedge.len() {
                for pos_j in (pos_i + 1)..wedge.len() {
                    let sign = if (pos_i + pos_j) % 2 == 0 { 1i64 } else { -1 };
                    let mut rest: Vec<usize> = wedge.clone();
                    rest.remove(pos_j);
                    rest.remove(pos_i);
                    for (k, c) in a
                        .bracket_basis(wedge[pos_i], wedge[pos_j])
                        .into_iter()
                        .enumerate()
                    {
                        if c.is_zero() {
                            continue;
                        }
                        let mut tuple = vec![k];
                        tuple.extend_from_slice(&rest);
                        let Some((sorted, perm_sign)) = sort_with_sign(&tuple) else {
                            continue;
                        };
                        // (-1)^{i+j} here is (-1)^{pos_i+pos_j} for 0-based
                        // positions because the two shifts cancel.
                        let coeff = &c * &crate::scalar::int(sign * i64::from(perm_sign));
                        add_scalar_term(
                            &mut out, &codomain, &domain, wedge, s, &coeff, &sorted, s,
                        );
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Chevalley-Eilenberg coboundary `d: C^n_CE(g,W) -> C^{n+1}_CE(g,W)` for a
/// Lie algebra representation, as a matrix in the fixed bases. `n >= 0`.
pub fn ce_d_matrix(
    n: usize,
    rep: &LieRepresentation,
    limit: usize,
) -> Result<Mat, CochainError> {
    let lie = &rep.algebra;
    let d = lie.dim();
    let w = rep.space_dim;
    let domain = CECochainSpace::new(n, d, w, limit)?;
    let codomain = CECochainSpace::new(n + 1, d, w, limit)?;
    let mut out = Mat::zeros(codomain.dim(), domain.dim());

    for wedge in codomain.wedge_subsets() {
        for (pos, &ti) in wedge.iter().enumerate() {
            let sign = if pos % 2 == 0 { 1i64 } else { -1 };
            let mut rest: Vec<usize> = wedge.clone();
            rest.remove(pos);
            for v in 0..w {
                let col = domain.index(&rest, v);
                for vp in 0..w {
                    let x = &rep.rho[ti][(vp, v)];
                    if x.is_zero() {
                        continue;
                    }
                    let row = codomain.index(wedge, vp);
                    let t = &out[(row, col)] + &(x * &crate::scalar::int(sign));
                    out[(row, col)] = t;
                }
            }
        }
        for pos_i in 0..wedge.len() {
            for pos_j in (pos_i + 1)..wedge.len() {
                let sign = if (pos_i + pos_j) % 2 == 0 { 1i64 } else { -1 };
                let mut rest: Vec<usize> = wedge.clone();
                rest.remove(pos_j);
                rest.remove(pos_i);
                for (k, c) in lie
                    .product_basis(wedge[pos_i], wedge[pos_j])
                    .iter()
                    .enumerate()
                {
                    if c.is_zero() {
                        continue;
                    }
                    let mut tuple = vec![k];
                    tuple.extend_from_slice(&rest);
                    let Some((sorted, perm_sign)) = sort_with_sign(&tuple) else {
                        continue;
                    };
                    let coeff = c * &crate::scalar::int(sign * i64::from(perm_sign));
                    for v in 0..w {
                        let row = codomain.index(wedge, v);
                        let col = domain.index(&sorted, v);
                        let t = &out[(row, col)] + &coeff;
                        out[(row, col)] = t;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Cohomology of one step of a complex: kernel of `d_high` modulo image of
/// `d_low`, with representatives.
#[derive(Debug, Clone)]
pub struct Cohomology {
    pub dim: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

/// Computes `ker(d_high) / im(d_low)` after verifying `d_high . d_low = 0`.
pub fn cohomology(d_low: &Mat, d_high: &Mat) -> Result<Cohomology, CochainError> {
    if d_low.rows() != d_high.cols() {
        return Err(LinalgError::ShapeMismatch {
            op: "cohomology",
            lhs: format!("{}x{}", d_low.rows(), d_low.cols()),
            rhs: format!("{}x{}", d_high.rows(), d_high.cols()),
        }
        .into());
    }
    if d_low.cols() > 0 {
        let square = d_high.mul(d_low);
        for i in 0..square.rows() {
            for j in 0..square.cols() {
                if !square[(i, j)].is_zero() {
                    return Err(CochainError::NotAComplex { row: i, col: j });
                }
            }
        }
    }
    let kernel = d_high.nullspace_basis();
    let image = d_low.columns();
    let representatives = quotient_complement(&kernel, &image)?;
    Ok(Cohomology {
        dim: representatives.len(),
        representatives,
    })
}

/// Serializable cochain: a coordinate vector in a documented basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub kind: CochainKind,
    pub degree: usize,
    pub coords: Vec<Scalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CochainKind {
    PreLie,
    CE,
}

impl CochainKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CochainKind::PreLie => "prelie",
            CochainKind::CE => "ce",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Flavor};
    use crate::rep::{regular_rep, trivial_rep};
    use crate::scalar::{frac, int};

    const LIMIT: usize = DEFAULT_SIZE_LIMIT;

    #[test]
    fn subsets_are_lex_ordered() {
        assert_eq!(
            increasing_subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(increasing_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(increasing_subsets(2, 3).is_empty());
    }

    #[test]
    fn sort_sign_cases() {
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[0, 1, 2]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }

    #[test]
    fn space_dimensions() {
        // dim C^n_preLie = C(d, n-1) * d * m
        let s = PreLieCochainSpace::new(3, 4, 2, LIMIT).unwrap();
        assert_eq!(s.dim(), 6 * 4 * 2);
        // zero space when n-1 > d
        let s = PreLieCochainSpace::new(4, 2, 1, LIMIT).unwrap();
        assert_eq!(s.dim(), 0);
        let s = CECochainSpace::new(2, 3, 5, LIMIT).unwrap();
        assert_eq!(s.dim(), 3 * 5);
        assert!(matches!(
            PreLieCochainSpace::new(2, 100, 100, 10),
            Err(CochainError::SizeLimit { .. })
        ));
    }

    #[test]
    fn label_round_trip() {
        let s = PreLieCochainSpace::new(3, 4, 3, LIMIT).unwrap();
        for idx in 0..s.dim() {
            let (wedge, j, v) = s.label(idx);
            assert_eq!(s.index(&wedge.to_vec(), j, v), idx);
        }
        let c = CECochainSpace::new(2, 4, 3, LIMIT).unwrap();
        for idx in 0..c.dim() {
            let (wedge, v) = c.label(idx);
            assert_eq!(c.index(&wedge.to_vec(), v), idx);
        }
    }

    #[test]
    fn evaluate_antisymmetry() {
        // degree-3 pre-Lie cochain on a 3-dim algebra, 1-dim module
        let s = PreLieCochainSpace::new(3, 3, 1, LIMIT).unwrap();
        let mut coords = vec![Scalar::zero(); s.dim()];
        coords[s.index(&[0, 1], 2, 0)] = int(5);
        let e = |i: usize| {
            let mut v = vec![Scalar::zero(); 3];
            v[i] = int(1);
            v
        };
        let val = s
            .evaluate(&coords, &[e(0), e(1), e(2)])
            .unwrap();
        assert_eq!(val, vec![int(5)]);
        // one transposition flips the sign
        let val = s.evaluate(&coords, &[e(1), e(0), e(2)]).unwrap();
        assert_eq!(val, vec![int(-5)]);
        // repeated antisymmetric slot kills the value
        let val = s.evaluate(&coords, &[e(0), e(0), e(2)]).unwrap();
        assert_eq!(val, vec![int(0)]);
        // zero cochain evaluates to zero on anything
        let zero = vec![Scalar::zero(); s.dim()];
        let val = s
            .evaluate(&zero, &std::array::from_fn::<_, 3, _>(|_| vec![int(1), int(2), int(3)]))
            .unwrap();
        assert_eq!(val, vec![int(0)]);
        // arity is enforced
        assert!(matches!(
            s.evaluate(&coords, &[e(0), e(1)]),
            Err(CochainError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn evaluate_is_multilinear_with_fractions() {
        let s = PreLieCochainSpace::new(2, 2, 2, LIMIT).unwrap();
        let mut coords = vec![Scalar::zero(); s.dim()];
        coords[s.index(&[0], 1, 0)] = int(2);
        coords[s.index(&[1], 0, 1)] = int(3);
        let x = vec![frac(1, 2), int(1)];
        let y = vec![int(4), frac(1, 3)];
        // f(x, y) = x0*y1*f(e1,e2) + x1*y0*f(e2,e1)
        let val = s.evaluate(&coords, &[x, y]).unwrap();
        assert_eq!(val, vec![frac(1, 2) * frac(1, 3) * int(2), int(4) * int(3)]);
    }

    #[test]
    fn prelie_d_trivial_cases() {
        // abelian algebra with trivial representation: every term vanishes
        let a = Algebra::zero(2, Flavor::PreLie);
        let r = trivial_rep(&a, 1);
        for n in 1..=3 {
            assert!(prelie_d_matrix(n, &r, LIMIT).unwrap().is_zero());
        }
        // empty domain when n-1 > d
        let m = prelie_d_matrix(4, &r, LIMIT).unwrap();
        assert_eq!(m.cols(), 0);
    }

    #[test]
    fn prelie_d_dim1_idempotent() {
        // e1*e1 = e1 with the regular representation, n = 1:
        // d f(e1,e1) = rho(e1) f(e1) + mu(e1) f(e1) - f(e1*e1) = f(e1).
        let a = Algebra::from_products(1, &[(0, 0, 0, int(1))], Flavor::PreLie);
        let r = regular_rep(&a).unwrap();
        let m = prelie_d_matrix(1, &r, LIMIT).unwrap();
        assert_eq!(m, Mat::identity(1));
    }

    #[test]
    fn prelie_d_squares_to_zero() {
        let algebras = [
            Algebra::from_products(2, &[(1, 1, 0, int(1))], Flavor::PreLie),
            Algebra::from_products(
                2,
                &[(0, 1, 0, int(1)), (1, 1, 1, int(1))],
                Flavor::PreLie,
            ),
        ];
        for a in &algebras {
            for r in [
                trivial_rep(a, 1),
                regular_rep(a).unwrap(),
                crate::rep::coregular_rep(a).unwrap(),
            ] {
                for n in 1..=4 {
                    let d_n = prelie_d_matrix(n, &r, LIMIT).unwrap();
                    let d_next = prelie_d_matrix(n + 1, &r, LIMIT).unwrap();
                    assert!(
                        d_next.mul(&d_n).is_zero(),
                        "d.d != 0 at degree {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn ce_d_trivial_cases() {
        let a = Algebra::zero(2, Flavor::Lie);
        let r = LieRepresentation {
            algebra: a.clone(),
            space_dim: 2,
            rho: vec![Mat::zeros(2, 2); 2],
        };
        for n in 0..=2 {
            assert!(ce_d_matrix(n, &r, LIMIT).unwrap().is_zero());
        }
        // n = d: codomain is the zero space above the top wedge
        let m = ce_d_matrix(2, &r, LIMIT).unwrap();
        assert_eq!(m.rows(), 0);
    }

    #[test]
    fn ce_d_dim1_scalar_action() {
        // 1-dim abelian Lie algebra acting by [-1] on a line:
        // d f(e1) = rho(e1) f = -f, so the matrix is [-1].
        let lie = Algebra::zero(1, Flavor::Lie);
        let r = LieRepresentation {
            algebra: lie,
            space_dim: 1,
            rho: vec![Mat::from_i64(&[&[-1]])],
        };
        let m = ce_d_matrix(0, &r, LIMIT).unwrap();
        assert_eq!(m, Mat::from_i64(&[&[-1]]));
    }

    #[test]
    fn ce_d_squares_to_zero_on_so3_type() {
        let so3 = Algebra::from_products(
            3,
            &[
                (0, 1, 2, int(1)),
                (1, 0, 2, int(-1)),
                (1, 2, 0, int(1)),
                (2, 1, 0, int(-1)),
                (2, 0, 1, int(1)),
                (0, 2, 1, int(-1)),
            ],
            Flavor::Lie,
        );
        // adjoint representation
        let rho: Vec<Mat> = (0..3).map(|i| so3.left_mul(i)).collect();
        let r = LieRepresentation {
            algebra: so3.clone(),
            space_dim: 3,
            rho,
        };
        assert!(crate::rep::check_lie_representation(&r).unwrap().passed());
        for n in 0..=3 {
            let d_n = ce_d_matrix(n, &r, LIMIT).unwrap();
            let d_next = ce_d_matrix(n + 1, &r, LIMIT).unwrap();
            assert!(d_next.mul(&d_n).is_zero(), "d.d != 0 at degree {n}");
        }
    }

    #[test]
    fn cohomology_examples() {
        // both maps zero on a 4-dim space: dimension 4
        let low = Mat::zeros(4, 0);
        let high = Mat::zeros(3, 4);
        let h = cohomology(&low, &high).unwrap();
        assert_eq!(h.dim, 4);
        assert_eq!(h.representatives.len(), 4);

        // d_low surjective onto the kernel of d_high: dimension 0
        let low = Mat::from_i64(&[&[1, 0], &[0, 1], &[0, 0]]);
        let high = Mat::from_i64(&[&[0, 0, 1]]);
        let h = cohomology(&low, &high).unwrap();
        assert_eq!(h.dim, 0);

        // broken complex is rejected
        let low = Mat::from_i64(&[&[1], &[0]]);
        let high = Mat::from_i64(&[&[1, 0]]);
        assert!(matches!(
            cohomology(&low, &high),
            Err(CochainError::NotAComplex { row: 0, col: 0 })
        ));
    }

    #[test]
    fn dim1_idempotent_h1_vanishes() {
        // H^1 = ker d_1 with no incoming differential; d_1 = [1] so H^1 = 0.
        let a = Algebra::from_products(1, &[(0, 0, 0, int(1))], Flavor::PreLie);
        let r = regular_rep(&a).unwrap();
        let d1 = prelie_d_matrix(1, &r, LIMIT).unwrap();
        let none = Mat::zeros(d1.cols(), 0);
        let h = cohomology(&none, &d1).unwrap();
        assert_eq!(h.dim, 0);
    }
}
