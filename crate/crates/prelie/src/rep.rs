//! Representations of pre-Lie algebras and of their sub-adjacent Lie algebras.
//!
//! A pre-Lie representation is a pair of matrix families `(rho, mu)`: `rho` is
//! a Lie-algebra action of the sub-adjacent algebra and `mu` satisfies the
//! pre-Lie compatibility identity
//! `rho(x) mu(y) - mu(y) rho(x) = mu(x*y) - mu(y) mu(x)`.
//!
//! The module builds the trivial, regular, coregular and morphism
//! representations, plus the action on `Hom(g, V)` that turns a pre-Lie
//! representation into a Lie representation of the sub-adjacent algebra.

use crate::algebra::{Algebra, AlgebraError, MorphismTriple};
use crate::linalg::Mat;
use crate::verdict::Verdict;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum RepError {
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
    #[error("representation belongs to a different algebra")]
    AlgebraMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Representation `(V; rho, mu)` of a pre-Lie algebra, one matrix per basis
/// element of the algebra.
#[derive(Debug, Clone)]
pub struct Representation {
    pub algebra: Algebra,
    pub space_dim: usize,
    pub rho: Vec<Mat>,
    pub mu: Vec<Mat>,
}

/// Representation of a Lie algebra.
#[derive(Debug, Clone)]
pub struct LieRepresentation {
    pub algebra: Algebra,
    pub space_dim: usize,
    pub rho: Vec<Mat>,
}

impl Representation {
    fn check_shapes(&self) -> Result<(), RepError> {
        let d = self.algebra.dim();
        let m = self.space_dim;
        if self.rho.len() != d || self.mu.len() != d {
            return Err(RepError::ShapeMismatch {
                expected: format!("{d} matrices"),
                got: format!("{} rho, {} mu", self.rho.len(), self.mu.len()),
            });
        }
        for mat in self.rho.iter().chain(&self.mu) {
            if mat.rows() != m || mat.cols() != m {
                return Err(RepError::ShapeMismatch {
                    expected: format!("{m}x{m}"),
                    got: format!("{}x{}", mat.rows(), mat.cols()),
                });
            }
        }
        Ok(())
    }
}

/// Checks both representation axioms on all basis pairs.
pub fn check_representation(r: &Representation) -> Result<Verdict, RepError> {
    r.check_shapes()?;
    let a = &r.algebra;
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            // rho([e_i, e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i)
            let bracket = a.bracket_basis(i, j);
            let mut lhs = Mat::zeros(r.space_dim, r.space_dim);
            for (k, x) in bracket.iter().enumerate() {
                if !x.is_zero() {
                    lhs = lhs.add(&r.rho[k].scale(x));
                }
            }
            let rhs = r.rho[i].mul(&r.rho[j]).sub(&r.rho[j].mul(&r.rho[i]));
            let v = flat_verdict("lie-action", &[i, j], &lhs.sub(&rhs));
            if !v.passed() {
                return Ok(v);
            }

            // rho(e_i) mu(e_j) - mu(e_j) rho(e_i) = mu(e_i e_j) - mu(e_j) mu(e_i)
            let lhs = r.rho[i].mul(&r.mu[j]).sub(&r.mu[j].mul(&r.rho[i]));
            let mut prod_mu = Mat::zeros(r.space_dim, r.space_dim);
            for (k, x) in a.product_basis(i, j).iter().enumerate() {
                if !x.is_zero() {
                    prod_mu = prod_mu.add(&r.mu[k].scale(x));
                }
            }
            let rhs = prod_mu.sub(&r.mu[j].mul(&r.mu[i]));
            let v = flat_verdict("compatibility", &[i, j], &lhs.sub(&rhs));
            if !v.passed() {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Checks `rho([e_i,e_j]) = [rho(e_i), rho(e_j)]` against the stored bracket.
pub fn check_lie_representation(r: &LieRepresentation) -> Result<Verdict, RepError> {
    let a = &r.algebra;
    let d = a.dim();
    if r.rho.len() != d {
        return Err(RepError::ShapeMismatch {
            expected: format!("{d} matrices"),
            got: format!("{}", r.rho.len()),
        });
    }
    for m in &r.rho {
        if m.rows() != r.space_dim || m.cols() != r.space_dim {
            return Err(RepError::ShapeMismatch {
                expected: format!("{0}x{0}", r.space_dim),
                got: format!("{}x{}", m.rows(), m.cols()),
            });
        }
    }
    for i in 0..d {
        for j in 0..d {
            let mut lhs = Mat::zeros(r.space_dim, r.space_dim);
            for (k, x) in a.product_basis(i, j).iter().enumerate() {
                if !x.is_zero() {
                    lhs = lhs.add(&r.rho[k].scale(x));
                }
            }
            let rhs = r.rho[i].mul(&r.rho[j]).sub(&r.rho[j].mul(&r.rho[i]));
            let v = flat_verdict("lie-action", &[i, j], &lhs.sub(&rhs));
            if !v.passed() {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Pass)
}

fn flat_verdict(law: &'static str, indices: &[usize], diff: &Mat) -> Verdict {
    let mut flat = Vec::with_capacity(diff.rows() * diff.cols());
    for i in 0..diff.rows() {
        for j in 0..diff.cols() {
            flat.push(diff[(i, j)].clone());
        }
    }
    Verdict::from_difference(law, indices, flat)
}

/// All-zero action on a space of the given dimension.
pub fn trivial_rep(a: &Algebra, space_dim: usize) -> Representation {
    Representation {
        algebra: a.clone(),
        space_dim,
        rho: vec![Mat::zeros(space_dim, space_dim); a.dim()],
        mu: vec![Mat::zeros(space_dim, space_dim); a.dim()],
    }
}

/// Regular representation `(g; L, R)`.
pub fn regular_rep(a: &Algebra) -> Result<Representation, RepError> {
    if let Verdict::Fail(cx) = a.check_pre_lie() {
        return Err(AlgebraError::NotPreLie(cx).into());
    }
    let d = a.dim();
    Ok(Representation {
        algebra: a.clone(),
        space_dim: d,
        rho: (0..d).map(|i| a.left_mul(i)).collect(),
        mu: (0..d).map(|i| a.right_mul(i)).collect(),
    })
}

/// Coregular representation `(g*; ad* = L* - R*, -R*)` on the dual space.
///
/// With the dual basis identified with column vectors, `L*_x = -(L_x)^T` and
/// `R*_x = -(R_x)^T`, so `rho(e_i) = -(L_i)^T + (R_i)^T` and
/// `mu(e_i) = (R_i)^T`.
pub fn coregular_rep(a: &Algebra) -> Result<Representation, RepError> {
    if let Verdict::Fail(cx) = a.check_pre_lie() {
        return Err(AlgebraError::NotPreLie(cx).into());
    }
    let d = a.dim();
    Ok(Representation {
        algebra: a.clone(),
        space_dim: d,
        rho: (0..d)
            .map(|i| a.right_mul(i).transpose().sub(&a.left_mul(i).transpose()))
            .collect(),
        mu: (0..d).map(|i| a.right_mul(i).transpose()).collect(),
    })
}

/// Representation of `g` on `h` induced by a morphism triple:
/// `rho(x) u = phi(x) *_h u`, `mu(x) u = u *_h phi(x)`.
pub fn morphism_rep(t: &MorphismTriple) -> Representation {
    let g = t.g();
    let h = t.h();
    let dh = h.dim();
    let mut rho = Vec::with_capacity(g.dim());
    let mut mu = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let mut l = Mat::zeros(dh, dh);
        let mut r = Mat::zeros(dh, dh);
        for (w, coeff) in t.phi().col(i).into_iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            l = l.add(&h.left_mul(w).scale(&coeff));
            r = r.add(&h.right_mul(w).scale(&coeff));
        }
        rho.push(l);
        mu.push(r);
    }
    Representation {
        algebra: g.clone(),
        space_dim: dh,
        rho,
        mu,
    }
}

/// Index of the basis map `e_j -> u_v` inside `Hom(g, V)`, lex in `(j, v)`.
pub fn hom_index(space_dim: usize, j: usize, v: usize) -> usize {
    j * space_dim + v
}

/// Action of the sub-adjacent Lie algebra on `Hom(g, V)`:
/// `(x . F)(y) = rho(x) F(y) + mu(y) F(x) - F(x *_g y)`.
///
/// `Hom(g, V)` is coordinatized by basis pairs `(input j, output v)` in
/// lexicographic order; this order is shared with the cochain spaces so that
/// the degree-shift identification is the identity on coordinates.
pub fn hom_space_rep(a: &Algebra, r: &Representation) -> Result<LieRepresentation, RepError> {
    if r.algebra != *a {
        return Err(RepError::AlgebraMismatch);
    }
    r.check_shapes()?;
    let lie = a.sub_adjacent()?;
    let d = a.dim();
    let m = r.space_dim;
    let w = d * m;
    let mut rho = Vec::with_capacity(d);
    for i in 0..d {
        let mut act = Mat::zeros(w, w);
        for j in 0..d {
            for v in 0..m {
                let col = hom_index(m, j, v);
                // rho(e_i) applied to the output when the input matches j
                for vp in 0..m {
                    let x = &r.rho[i][(vp, v)];
                    if !x.is_zero() {
                        let row = hom_index(m, j, vp);
                        let t = &act[(row, col)] + x;
                        act[(row, col)] = t;
                    }
                }
                // mu(e_{j'}) F(e_i) contributes at every input j' when j = i
                if j == i {
                    for jp in 0..d {
                        for vp in 0..m {
                            let x = &r.mu[jp][(vp, v)];
                            if !x.is_zero() {
                                let row = hom_index(m, jp, vp);
                                let t = &act[(row, col)] + x;
                                act[(row, col)] = t;
                            }
                        }
                    }
                }
                // -F(e_i * e_{j'}) picks the e_j coordinate of the product
                for jp in 0..d {
                    let x = a.structure_constant(i, jp, j);
                    if !x.is_zero() {
                        let row = hom_index(m, jp, v);
                        let t = &act[(row, col)] - x;
                        act[(row, col)] = t;
                    }
                }
            }
        }
        rho.push(act);
    }
    Ok(LieRepresentation {
        algebra: lie,
        space_dim: w,
        rho,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Flavor;
    use crate::scalar::int;

    fn dim2_e22() -> Algebra {
        Algebra::from_products(2, &[(1, 1, 0, int(1))], Flavor::PreLie)
    }

    fn dim1_idem() -> Algebra {
        Algebra::from_products(1, &[(0, 0, 0, int(1))], Flavor::PreLie)
    }

    #[test]
    fn trivial_and_regular_pass() {
        for a in [
            Algebra::zero(3, Flavor::PreLie),
            dim2_e22(),
            dim1_idem(),
        ] {
            assert!(check_representation(&trivial_rep(&a, 1)).unwrap().passed());
            assert!(check_representation(&trivial_rep(&a, 2)).unwrap().passed());
            assert!(check_representation(&regular_rep(&a).unwrap())
                .unwrap()
                .passed());
            assert!(check_representation(&coregular_rep(&a).unwrap())
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn regular_reads_off_structure_constants() {
        let a = dim2_e22();
        let r = regular_rep(&a).unwrap();
        assert_eq!(r.rho[1][(0, 1)], int(1));
        assert_eq!(r.mu[1], r.rho[1]);
        assert!(r.rho[0].is_zero());
    }

    #[test]
    fn broken_mu_fails_compatibility() {
        let a = dim2_e22();

        // mu = 0 keeps both axioms: every term of the compatibility identity
        // carries a mu factor.
        let mut r = regular_rep(&a).unwrap();
        r.mu = vec![Mat::zeros(2, 2); 2];
        assert!(check_representation(&r).unwrap().passed());

        // mu(e_i) = I fails: at (1,1) the identity reads mu(e1*e1) - mu(e1)^2
        // = 0 - I. Oracle: rho(x)mu(y) - mu(y)rho(x) = [rho(x), I] = 0 while
        // mu(e1*e1) = mu(0) = 0 and mu(e1)mu(e1) = I.
        let mut r = regular_rep(&a).unwrap();
        r.mu = vec![Mat::identity(2); 2];
        match check_representation(&r).unwrap() {
            Verdict::Fail(cx) => {
                assert_eq!(cx.law, "compatibility");
                assert_eq!(cx.indices, vec![1, 1]);
            }
            Verdict::Pass => panic!("expected failure"),
        }
    }

    #[test]
    fn coregular_is_dual_of_regular() {
        let a = dim2_e22();
        let reg = regular_rep(&a).unwrap();
        let co = coregular_rep(&a).unwrap();
        for i in 0..2 {
            assert_eq!(
                co.rho[i],
                reg.mu[i].transpose().sub(&reg.rho[i].transpose())
            );
            assert_eq!(co.mu[i], reg.mu[i].transpose());
        }
    }

    #[test]
    fn coregular_dim1() {
        // e1*e1 = e1: L = R = [1], so rho = 0 and mu = [1]
        let a = dim1_idem();
        let co = coregular_rep(&a).unwrap();
        assert!(co.rho[0].is_zero());
        assert_eq!(co.mu[0], Mat::identity(1));
    }

    #[test]
    fn morphism_rep_cases() {
        let a = dim2_e22();
        let zero_phi = MorphismTriple::new(
            a.clone(),
            a.clone(),
            Mat::zeros(2, 2),
        )
        .unwrap();
        let r = morphism_rep(&zero_phi);
        assert!(r.rho.iter().chain(&r.mu).all(|m| m.is_zero()));
        assert!(check_representation(&r).unwrap().passed());

        let id_phi = MorphismTriple::new(a.clone(), a.clone(), Mat::identity(2)).unwrap();
        let r = morphism_rep(&id_phi);
        let reg = regular_rep(&a).unwrap();
        for i in 0..2 {
            assert_eq!(r.rho[i], reg.rho[i]);
            assert_eq!(r.mu[i], reg.mu[i]);
        }
        assert!(check_representation(&r).unwrap().passed());
    }

    #[test]
    fn hom_space_rep_dim1() {
        // e1*e1 = e1 with the regular representation:
        // (e1.F)(e1) = e1 F(e1) + F(e1) e1 - F(e1 e1) = F(e1), action [1].
        let a = dim1_idem();
        let r = regular_rep(&a).unwrap();
        let hr = hom_space_rep(&a, &r).unwrap();
        assert_eq!(hr.space_dim, 1);
        assert_eq!(hr.rho[0], Mat::identity(1));
        assert!(check_lie_representation(&hr).unwrap().passed());
    }

    #[test]
    fn hom_space_rep_is_lie_rep() {
        // Also on a non-commutative dim-2 algebra with nontrivial mu.
        let b = Algebra::from_products(
            2,
            &[(0, 1, 0, int(1)), (1, 1, 1, int(1))],
            Flavor::PreLie,
        );
        for rep in [regular_rep(&b).unwrap(), coregular_rep(&b).unwrap()] {
            let hr = hom_space_rep(&b, &rep).unwrap();
            assert!(check_lie_representation(&hr).unwrap().passed());
        }
        let abelian = Algebra::zero(2, Flavor::PreLie);
        let hr = hom_space_rep(&abelian, &trivial_rep(&abelian, 2)).unwrap();
        assert!(hr.rho.iter().all(|m| m.is_zero()));
    }

    #[test]
    fn hom_space_rep_rejects_foreign_rep() {
        let a = dim2_e22();
        let b = Algebra::zero(2, Flavor::PreLie);
        let r = regular_rep(&a).unwrap();
        assert!(matches!(
            hom_space_rep(&b, &r),
            Err(RepError::AlgebraMismatch)
        ));
    }
}
