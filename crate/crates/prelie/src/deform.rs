//! First-order deformations of a pre-Lie-morphism triple.
//!
//! A deformation generator is a triple `(omega, varpi, theta)`: bilinear
//! perturbations of the two products and a linear perturbation of the
//! morphism. The module checks the six defining equations of a generator and
//! the eight equations of an equivalence, always twice: once literally on
//! basis tuples and once through the coboundary matrices of the triple
//! complex, with any disagreement reported as an internal bug.
//!
//! Equation labels in reports follow the source identities:
//! `2-cocycle g`, `omega bracket`, `eq:2-cocycle h`, `varpi bracket`,
//! `1-cocycle phi`, `eq:theta2` for generators and `2-exact`,
//! `integral condition 1`, `eq:con1` (plus their `h` twins), `eq:relation7`,
//! `eq:relation8` for equivalences.

use crate::algebra::{add_vec, basis_vec, sub_vec, Algebra, Flavor, MorphismTriple};
use crate::cochain::{CochainError, DEFAULT_SIZE_LIMIT};
use crate::construct::{check_nijenhuis, ConstructError};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::triple::TripleComplex;
use crate::verdict::{verdict_from_zero_matrix, Report, Verdict};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum DeformError {
    #[error("generators belong to triples of different shapes")]
    TripleMismatch,
    #[error("generator is not closed under the triple coboundary")]
    NotClosed,
    #[error("(N, S) is not a Nijenhuis pair: {clause}")]
    NotNijenhuisPair { clause: String },
    #[error("cross-check mismatch ({0}); this indicates an internal convention bug")]
    CrossCheckMismatch(&'static str),
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Generator data `(omega, varpi, theta)` of a 1-parameter infinitesimal
/// deformation: `omega[i][j]` are the coordinates of `omega(e_i, e_j)`, same
/// for `varpi` on the other side, and `theta` is a `dim(h) x dim(g)` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationGenerator {
    pub omega: Vec<Vec<Vec<Scalar>>>,
    pub varpi: Vec<Vec<Vec<Scalar>>>,
    pub theta: Mat,
}

impl DeformationGenerator {
    pub fn zero(t: &MorphismTriple) -> Self {
        let (dg, dh) = (t.g().dim(), t.h().dim());
        DeformationGenerator {
            omega: vec![vec![vec![Scalar::zero(); dg]; dg]; dg],
            varpi: vec![vec![vec![Scalar::zero(); dh]; dh]; dh],
            theta: Mat::zeros(dh, dg),
        }
    }

    pub fn check_shapes(&self, t: &MorphismTriple) -> Result<(), DeformError> {
        let (dg, dh) = (t.g().dim(), t.h().dim());
        let tensor_ok = |tensor: &Vec<Vec<Vec<Scalar>>>, d: usize| {
            tensor.len() == d
                && tensor
                    .iter()
                    .all(|r| r.len() == d && r.iter().all(|c| c.len() == d))
        };
        if !tensor_ok(&self.omega, dg)
            || !tensor_ok(&self.varpi, dh)
            || self.theta.rows() != dh
            || self.theta.cols() != dg
        {
            return Err(DeformError::TripleMismatch);
        }
        Ok(())
    }

    /// Coordinates in the degree-1 triple cochain space
    /// `C^2(g,g) + C^2(h,h) + C^1(g,h)`, in the shared basis order.
    pub fn pack(&self, t: &MorphismTriple) -> Vec<Scalar> {
        let (dg, dh) = (t.g().dim(), t.h().dim());
        let mut coords = Vec::new();
        for i in 0..dg {
            for j in 0..dg {
                for v in 0..dg {
                    coords.push(self.omega[i][j][v].clone());
                }
            }
        }
        for i in 0..dh {
            for j in 0..dh {
                for v in 0..dh {
                    coords.push(self.varpi[i][j][v].clone());
                }
            }
        }
        for j in 0..dg {
            for v in 0..dh {
                coords.push(self.theta[(v, j)].clone());
            }
        }
        coords
    }
}

/// Coordinates of `(N, S, 0)` in the degree-0 triple cochain space
/// `C^1(g,g) + C^1(h,h)`.
pub fn pack_degree0(t: &MorphismTriple, n: &Mat, s: &Mat) -> Vec<Scalar> {
    let (dg, dh) = (t.g().dim(), t.h().dim());
    let mut coords = Vec::new();
    for j in 0..dg {
        for v in 0..dg {
            coords.push(n[(v, j)].clone());
        }
    }
    for j in 0..dh {
        for v in 0..dh {
            coords.push(s[(v, j)].clone());
        }
    }
    coords
}

/// Bilinear extension of a product tensor to coordinate vectors.
fn tensor_apply(tensor: &[Vec<Vec<Scalar>>], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = tensor.len();
    let mut out = vec![Scalar::zero(); d];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            for k in 0..d {
                if !tensor[i][j][k].is_zero() {
                    out[k] += &c * &tensor[i][j][k];
                }
            }
        }
    }
    out
}

/// Cocycle equation of a product perturbation on one algebra, evaluated on a
/// basis triple: `x w(y,z) - y w(x,z) + w(y,x) z - w(x,y) z - w(y, xz)
/// + w(x, yz) - w([x,y], z)`.
///
/// This is the literal degree-2 pre-Lie coboundary of `w` for the regular
/// representation; the bracket term carries a minus sign (the expansion of
/// the deformed associator produces `w(yx - xy, z)`).
fn cocycle_eq(a: &Algebra, w: &[Vec<Vec<Scalar>>], i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let d = a.dim();
    let e = |n: usize| basis_vec(d, n);
    let mut acc = a.multiply(&e(i), &w[j][k]);
    acc = sub_vec(&acc, &a.multiply(&e(j), &w[i][k]));
    acc = add_vec(&acc, &a.multiply(&w[j][i], &e(k)));
    acc = sub_vec(&acc, &a.multiply(&w[i][j], &e(k)));
    acc = sub_vec(&acc, &tensor_apply(w, &e(j), a.product_basis(i, k)));
    acc = add_vec(&acc, &tensor_apply(w, &e(i), a.product_basis(j, k)));
    acc = sub_vec(&acc, &tensor_apply(w, &a.bracket_basis(i, j), &e(k)));
    acc
}

/// Pre-Lie associator symmetry of the perturbation itself:
/// `w(w(x,y),z) - w(x,w(y,z)) - w(w(y,x),z) + w(y,w(x,z))`.
fn bracket_eq(w: &[Vec<Vec<Scalar>>], i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let d = w.len();
    let e = |n: usize| basis_vec(d, n);
    let mut acc = tensor_apply(w, &w[i][j], &e(k));
    acc = sub_vec(&acc, &tensor_apply(w, &e(i), &w[j][k]));
    acc = sub_vec(&acc, &tensor_apply(w, &w[j][i], &e(k)));
    acc = add_vec(&acc, &tensor_apply(w, &e(j), &w[i][k]));
    acc
}

fn first_failure(
    law: &'static str,
    d: usize,
    arity: usize,
    mut eval: impl FnMut(&[usize]) -> Vec<Scalar>,
) -> Verdict {
    let mut tuple = vec![0usize; arity];
    loop {
        let v = Verdict::from_difference(law, &tuple, eval(&tuple));
        if !v.passed() {
            return v;
        }
        let mut slot = arity;
        loop {
            if slot == 0 {
                return Verdict::Pass;
            }
            slot -= 1;
            tuple[slot] += 1;
            if tuple[slot] < d {
                break;
            }
            tuple[slot] = 0;
            if slot == 0 {
                return Verdict::Pass;
            }
        }
    }
}

/// Checks the six generator equations on all basis tuples, then cross-checks
/// the three cocycle equations against the coboundary matrix and the two
/// bracket equations against the pre-Lie checker.
pub fn check_generator(
    t: &MorphismTriple,
    gen: &DeformationGenerator,
) -> Result<Report, DeformError> {
    gen.check_shapes(t)?;
    let (g, h, phi) = (t.g(), t.h(), t.phi());
    let (dg, dh) = (g.dim(), h.dim());
    let e_g = |n: usize| basis_vec(dg, n);

    let mut report = Report::new();
    report.push(
        "2-cocycle g",
        first_failure("2-cocycle g", dg, 3, |ix| {
            cocycle_eq(g, &gen.omega, ix[0], ix[1], ix[2])
        }),
    );
    report.push(
        "omega bracket",
        first_failure("omega bracket", dg, 3, |ix| {
            bracket_eq(&gen.omega, ix[0], ix[1], ix[2])
        }),
    );
    report.push(
        "eq:2-cocycle h",
        first_failure("eq:2-cocycle h", dh, 3, |ix| {
            cocycle_eq(h, &gen.varpi, ix[0], ix[1], ix[2])
        }),
    );
    report.push(
        "varpi bracket",
        first_failure("varpi bracket", dh, 3, |ix| {
            bracket_eq(&gen.varpi, ix[0], ix[1], ix[2])
        }),
    );
    // phi(x) theta(y) + theta(x) phi(y) - theta(xy) - phi(w(x,y)) + varpi(phi x, phi y)
    report.push(
        "1-cocycle phi",
        first_failure("1-cocycle phi", dg, 2, |ix| {
            let (i, j) = (ix[0], ix[1]);
            let mut acc = h.multiply(&phi.col(i), &gen.theta.col(j));
            acc = add_vec(&acc, &h.multiply(&gen.theta.col(i), &phi.col(j)));
            acc = sub_vec(&acc, &gen.theta.mul_vec(g.product_basis(i, j)));
            acc = sub_vec(&acc, &phi.mul_vec(&tensor_apply(&gen.omega, &e_g(i), &e_g(j))));
            add_vec(&acc, &tensor_apply(&gen.varpi, &phi.col(i), &phi.col(j)))
        }),
    );
    // theta(w(x,y)) - varpi(phi x, theta y) - varpi(theta x, phi y) - theta(x) theta(y)
    report.push(
        "eq:theta2",
        first_failure("eq:theta2", dg, 2, |ix| {
            let (i, j) = (ix[0], ix[1]);
            let mut acc = gen
                .theta
                .mul_vec(&tensor_apply(&gen.omega, &e_g(i), &e_g(j)));
            acc = sub_vec(&acc, &tensor_apply(&gen.varpi, &phi.col(i), &gen.theta.col(j)));
            acc = sub_vec(&acc, &tensor_apply(&gen.varpi, &gen.theta.col(i), &phi.col(j)));
            sub_vec(&acc, &h.multiply(&gen.theta.col(i), &gen.theta.col(j)))
        }),
    );

    // Cross-check 1: the three cocycle equations together are exactly
    // delta_1(omega, varpi, theta) = 0.
    let closed = check_closed(t, gen)?;
    let cocycle_part = report.get("2-cocycle g").unwrap().passed()
        && report.get("eq:2-cocycle h").unwrap().passed()
        && report.get("1-cocycle phi").unwrap().passed();
    if closed.passed() != cocycle_part {
        return Err(DeformError::CrossCheckMismatch(
            "cocycle equations disagree with the coboundary matrix",
        ));
    }
    // Cross-check 2: each bracket equation says the perturbation alone is a
    // pre-Lie product.
    let omega_alg = Algebra::new(
        g.basis_names().to_vec(),
        gen.omega.clone(),
        Flavor::Unchecked,
    );
    if omega_alg.check_pre_lie().passed() != report.get("omega bracket").unwrap().passed() {
        return Err(DeformError::CrossCheckMismatch(
            "omega bracket equation disagrees with the pre-Lie checker",
        ));
    }
    let varpi_alg = Algebra::new(
        h.basis_names().to_vec(),
        gen.varpi.clone(),
        Flavor::Unchecked,
    );
    if varpi_alg.check_pre_lie().passed() != report.get("varpi bracket").unwrap().passed() {
        return Err(DeformError::CrossCheckMismatch(
            "varpi bracket equation disagrees with the pre-Lie checker",
        ));
    }
    Ok(report)
}

/// `delta_1(omega, varpi, theta) = 0` through the assembled matrix.
pub fn check_closed(t: &MorphismTriple, gen: &DeformationGenerator) -> Result<Verdict, DeformError> {
    gen.check_shapes(t)?;
    let delta = crate::triple::delta_prelie_matrix(t, 1, DEFAULT_SIZE_LIMIT)?;
    let image = delta.mul_vec(&gen.pack(t));
    Ok(Verdict::from_difference("closed", &[], image))
}

/// Checks the eight equivalence equations for generators over the same
/// triple, with witness maps `n` on `g` and `s` on `h`, then cross-checks the
/// three linear ones against `delta_0`.
pub fn check_equivalence(
    t: &MorphismTriple,
    gen_a: &DeformationGenerator,
    gen_b: &DeformationGenerator,
    n: &Mat,
    s: &Mat,
) -> Result<Report, DeformError> {
    gen_a.check_shapes(t)?;
    gen_b.check_shapes(t)?;
    let (g, h, phi) = (t.g(), t.h(), t.phi());
    let (dg, dh) = (g.dim(), h.dim());
    if n.rows() != dg || n.cols() != dg || s.rows() != dh || s.cols() != dh {
        return Err(DeformError::ShapeMismatch {
            expected: format!("{dg}x{dg} and {dh}x{dh}"),
            got: format!("{}x{} and {}x{}", n.rows(), n.cols(), s.rows(), s.cols()),
        });
    }

    let mut report = Report::new();
    // one-algebra halves, shared by the g and h sides
    let side = |alg: &Algebra,
                w: &[Vec<Vec<Scalar>>],
                w2: &[Vec<Vec<Scalar>>],
                op: &Mat,
                labels: [&'static str; 3],
                report: &mut Report| {
        let d = alg.dim();
        let e = |k: usize| basis_vec(d, k);
        // w - w' = x N(y) + N(x) y - N(xy)
        report.push(
            labels[0],
            first_failure(labels[0], d, 2, |ix| {
                let (i, j) = (ix[0], ix[1]);
                let lhs = sub_vec(&w[i][j], &w2[i][j]);
                let mut rhs = alg.multiply(&e(i), &op.col(j));
                rhs = add_vec(&rhs, &alg.multiply(&op.col(i), &e(j)));
                rhs = sub_vec(&rhs, &op.mul_vec(alg.product_basis(i, j)));
                sub_vec(&lhs, &rhs)
            }),
        );
        // N w(x,y) = w'(x, Ny) + w'(Nx, y) + N(x) N(y)
        report.push(
            labels[1],
            first_failure(labels[1], d, 2, |ix| {
                let (i, j) = (ix[0], ix[1]);
                let lhs = op.mul_vec(&w[i][j]);
                let mut rhs = tensor_apply(w2, &e(i), &op.col(j));
                rhs = add_vec(&rhs, &tensor_apply(w2, &op.col(i), &e(j)));
                rhs = add_vec(&rhs, &alg.multiply(&op.col(i), &op.col(j)));
                sub_vec(&lhs, &rhs)
            }),
        );
        // w'(Nx, Ny) = 0
        report.push(
            labels[2],
            first_failure(labels[2], d, 2, |ix| {
                tensor_apply(w2, &op.col(ix[0]), &op.col(ix[1]))
            }),
        );
    };
    side(
        g,
        &gen_a.omega,
        &gen_b.omega,
        n,
        ["2-exact", "integral condition 1", "eq:con1"],
        &mut report,
    );
    side(
        h,
        &gen_a.varpi,
        &gen_b.varpi,
        s,
        ["2-exact h", "integral condition 1 h", "eq:con1 h"],
        &mut report,
    );
    // theta - theta' = phi N - S phi
    report.push(
        "eq:relation7",
        verdict_from_zero_matrix(
            "eq:relation7",
            &gen_a
                .theta
                .sub(&gen_b.theta)
                .sub(&phi.mul(n).sub(&s.mul(phi))),
        ),
    );
    // theta' N = S theta
    report.push(
        "eq:relation8",
        verdict_from_zero_matrix("eq:relation8", &gen_b.theta.mul(n).sub(&s.mul(&gen_a.theta))),
    );

    // Cross-check: the three linear equations say
    // gen_a - gen_b = delta_0(N, S, 0).
    let delta0 = crate::triple::delta_prelie_matrix(t, 0, DEFAULT_SIZE_LIMIT)?;
    let packed_diff = sub_vec(&gen_a.pack(t), &gen_b.pack(t));
    let image = delta0.mul_vec(&pack_degree0(t, n, s));
    let matrix_side = sub_vec(&packed_diff, &image).iter().all(|x| x.is_zero());
    let equation_side = report.get("2-exact").unwrap().passed()
        && report.get("2-exact h").unwrap().passed()
        && report.get("eq:relation7").unwrap().passed();
    if matrix_side != equation_side {
        return Err(DeformError::CrossCheckMismatch(
            "linear equivalence equations disagree with delta_0",
        ));
    }
    Ok(report)
}

/// The three clauses of a Nijenhuis pair `(N, S)` on a triple: `N` Nijenhuis
/// on `g`, `S` Nijenhuis on `h`, and `S phi N = S^2 phi`.
pub fn check_nijenhuis_pair(
    t: &MorphismTriple,
    n: &Mat,
    s: &Mat,
) -> Result<Report, DeformError> {
    let mut report = Report::new();
    report.push("N nijenhuis on g", check_nijenhuis(t.g(), n)?);
    report.push("S nijenhuis on h", check_nijenhuis(t.h(), s)?);
    report.push(
        "S.phi.N = S^2.phi",
        verdict_from_zero_matrix(
            "nijenhuis-pair",
            &s.mul(t.phi()).mul(n).sub(&s.mul(s).mul(t.phi())),
        ),
    );
    Ok(report)
}

/// A trivial deformation generated by a Nijenhuis pair, with its
/// certificates.
#[derive(Debug, Clone)]
pub struct TrivialDeformation {
    pub generator: DeformationGenerator,
    /// The six generator equations.
    pub generator_report: Report,
    /// The eight equations of equivalence to the zero generator with witness
    /// `(N, S)`.
    pub equivalence_report: Report,
}

/// Builds the deformation generated by a Nijenhuis pair:
/// `omega = d_g N`, `varpi = d_h S`, `theta = phi N - S phi`.
/// The result is a valid generator and is equivalent to the zero generator.
pub fn trivial_deformation(
    t: &MorphismTriple,
    n: &Mat,
    s: &Mat,
) -> Result<TrivialDeformation, DeformError> {
    let pair = check_nijenhuis_pair(t, n, s)?;
    if let Some((clause, _)) = pair.items.iter().find(|(_, v)| !v.passed()) {
        return Err(DeformError::NotNijenhuisPair {
            clause: clause.clone(),
        });
    }
    let (g, h, phi) = (t.g(), t.h(), t.phi());
    let (dg, dh) = (g.dim(), h.dim());
    let coboundary = |alg: &Algebra, op: &Mat| -> Vec<Vec<Vec<Scalar>>> {
        let d = alg.dim();
        let mut w = vec![vec![vec![Scalar::zero(); d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let mut v = alg.multiply(&basis_vec(d, i), &op.col(j));
                v = add_vec(&v, &alg.multiply(&op.col(i), &basis_vec(d, j)));
                w[i][j] = sub_vec(&v, &op.mul_vec(alg.product_basis(i, j)));
            }
        }
        w
    };
    let generator = DeformationGenerator {
        omega: coboundary(g, n),
        varpi: coboundary(h, s),
        theta: phi.mul(n).sub(&s.mul(phi)),
    };
    let _ = (dg, dh);
    let generator_report = check_generator(t, &generator)?;
    let equivalence_report =
        check_equivalence(t, &generator, &DeformationGenerator::zero(t), n, s)?;
    Ok(TrivialDeformation {
        generator,
        generator_report,
        equivalence_report,
    })
}

/// Class of a closed generator in `H^1` of the triple, as coordinates in the
/// representative basis produced by the cohomology routine.
pub fn cohomology_class(
    t: &MorphismTriple,
    gen: &DeformationGenerator,
) -> Result<Vec<Scalar>, DeformError> {
    if !check_closed(t, gen)?.passed() {
        return Err(DeformError::NotClosed);
    }
    let complex = TripleComplex::new(t, 1, DEFAULT_SIZE_LIMIT)?;
    let h1 = complex.prelie_cohomology(1)?;
    let delta0 = complex.prelie_delta(0);
    // Independent columns of delta_0 plus the representatives form a basis
    // of the kernel of delta_1; read off the representative coordinates.
    let (_, pivots) = delta0.rref();
    let mut basis: Vec<Vec<Scalar>> = pivots.iter().map(|&j| delta0.col(j)).collect();
    let image_dim = basis.len();
    basis.extend(h1.representatives.iter().cloned());
    let coords = crate::linalg::solve_in_span(&basis, &gen.pack(t)).ok_or(
        DeformError::CrossCheckMismatch("closed generator not in span of kernel basis"),
    )?;
    Ok(coords[image_dim..].to_vec())
}

/// Whether two closed generators differ by a coboundary, via a rank test.
pub fn same_class(
    t: &MorphismTriple,
    gen_a: &DeformationGenerator,
    gen_b: &DeformationGenerator,
) -> Result<bool, DeformError> {
    for gen in [gen_a, gen_b] {
        if !check_closed(t, gen)?.passed() {
            return Err(DeformError::NotClosed);
        }
    }
    let delta0 = crate::triple::delta_prelie_matrix(t, 0, DEFAULT_SIZE_LIMIT)?;
    let diff = sub_vec(&gen_a.pack(t), &gen_b.pack(t));
    let mut cols = delta0.columns();
    let base_rank = delta0.rank();
    cols.push(diff);
    let augmented = Mat::from_cols(delta0.rows(), &cols);
    Ok(augmented.rank() == base_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn sympl2() -> Algebra {
        Algebra::from_products(2, &[(0, 1, 0, int(1)), (1, 1, 1, int(1))], Flavor::PreLie)
    }

    fn identity_triple(a: &Algebra) -> MorphismTriple {
        MorphismTriple::new(a.clone(), a.clone(), Mat::identity(a.dim())).unwrap()
    }

    #[test]
    fn zero_generator_passes() {
        let t = identity_triple(&sympl2());
        let gen = DeformationGenerator::zero(&t);
        let report = check_generator(&t, &gen).unwrap();
        assert!(report.passed(), "{report}");
        assert!(check_closed(&t, &gen).unwrap().passed());
    }

    #[test]
    fn product_as_omega_fails_the_phi_cocycle() {
        // omega = the product of g, varpi = 0, theta = 0 on the identity
        // triple: the phi equation reduces to -phi(x y) which is nonzero.
        let a = sympl2();
        let t = identity_triple(&a);
        let mut gen = DeformationGenerator::zero(&t);
        for i in 0..2 {
            for j in 0..2 {
                gen.omega[i][j] = a.product_basis(i, j).to_vec();
            }
        }
        let report = check_generator(&t, &gen).unwrap();
        assert!(!report.get("1-cocycle phi").unwrap().passed());
        // omega = product still satisfies its own bracket equation
        assert!(report.get("omega bracket").unwrap().passed());
        assert!(!check_closed(&t, &gen).unwrap().passed());
    }

    #[test]
    fn equivalence_trivial_witness() {
        let t = identity_triple(&sympl2());
        let gen = DeformationGenerator::zero(&t);
        let report =
            check_equivalence(&t, &gen, &gen, &Mat::zeros(2, 2), &Mat::zeros(2, 2)).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn equivalence_identity_witness_fails_relation7() {
        // genA = genB = 0 with N = id, S = 0 on a triple with phi != 0:
        // eq:relation7 reads 0 = phi - 0.
        let t = identity_triple(&sympl2());
        let gen = DeformationGenerator::zero(&t);
        let report =
            check_equivalence(&t, &gen, &gen, &Mat::identity(2), &Mat::zeros(2, 2)).unwrap();
        assert!(!report.get("eq:relation7").unwrap().passed());
    }

    #[test]
    fn nijenhuis_pair_cases() {
        let t = identity_triple(&sympl2());
        let id = Mat::identity(2);
        let zero = Mat::zeros(2, 2);
        assert!(check_nijenhuis_pair(&t, &id, &id).unwrap().passed());
        assert!(check_nijenhuis_pair(&t, &zero, &zero).unwrap().passed());
        // N = id, S = 0: both sides of the pair condition vanish
        assert!(check_nijenhuis_pair(&t, &id, &zero).unwrap().passed());
        // scalar pair (c, c)
        let c = Mat::identity(2).scale(&frac(-1, 2));
        assert!(check_nijenhuis_pair(&t, &c, &c).unwrap().passed());
        // mismatched scalars break the pair condition
        let report = check_nijenhuis_pair(&t, &id.scale(&int(2)), &id).unwrap();
        assert!(!report.get("S.phi.N = S^2.phi").unwrap().passed());
    }

    #[test]
    fn trivial_deformation_identity_pair() {
        // N = S = id on an identity triple: omega = the product itself,
        // varpi likewise, theta = 0.
        let a = sympl2();
        let t = identity_triple(&a);
        let out = trivial_deformation(&t, &Mat::identity(2), &Mat::identity(2)).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(out.generator.omega[i][j], a.product_basis(i, j).to_vec());
            }
        }
        assert!(out.generator.theta.is_zero());
        assert!(out.generator_report.passed(), "{}", out.generator_report);
        assert!(out.equivalence_report.passed(), "{}", out.equivalence_report);
        // zero pair gives the zero generator
        let out = trivial_deformation(&t, &Mat::zeros(2, 2), &Mat::zeros(2, 2)).unwrap();
        assert_eq!(out.generator, DeformationGenerator::zero(&t));
    }

    #[test]
    fn trivial_deformation_rejects_non_pairs() {
        let t = identity_triple(&sympl2());
        let bad = trivial_deformation(&t, &Mat::identity(2).scale(&int(2)), &Mat::identity(2));
        assert!(matches!(bad, Err(DeformError::NotNijenhuisPair { .. })));
    }

    #[test]
    fn trivial_deformation_class_is_zero() {
        let t = identity_triple(&sympl2());
        let out = trivial_deformation(&t, &Mat::identity(2), &Mat::identity(2)).unwrap();
        let class = cohomology_class(&t, &out.generator).unwrap();
        assert!(class.iter().all(|x| x.is_zero()));
        assert!(same_class(&t, &out.generator, &DeformationGenerator::zero(&t)).unwrap());
    }

    #[test]
    fn same_class_is_shift_invariant() {
        let t = identity_triple(&sympl2());
        let zero = DeformationGenerator::zero(&t);
        let shifted = trivial_deformation(&t, &Mat::identity(2), &Mat::identity(2))
            .unwrap()
            .generator;
        assert!(same_class(&t, &shifted, &zero).unwrap());
        assert!(same_class(&t, &zero, &shifted).unwrap());
        assert!(same_class(&t, &shifted, &shifted).unwrap());
    }

    #[test]
    fn unclosed_generator_is_rejected_for_classes() {
        let a = sympl2();
        let t = identity_triple(&a);
        let mut gen = DeformationGenerator::zero(&t);
        gen.omega[0][0][0] = int(1);
        if !check_closed(&t, &gen).unwrap().passed() {
            assert!(matches!(
                cohomology_class(&t, &gen),
                Err(DeformError::NotClosed)
            ));
        }
    }
}
