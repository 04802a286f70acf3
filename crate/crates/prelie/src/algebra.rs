//! Finite-dimensional algebras given by structure constants, their axiom
//! checkers, and morphism triples.
//!
//! The structure tensor is indexed `c[i][j][k]`, meaning
//! `e_i * e_j = sum_k c[i][j][k] e_k`. This one convention is used everywhere
//! in the crate. Indices are 0-based in code and 1-based in reports and files.

use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::verdict::{Counterexample, Verdict};
use num_traits::Zero;
use thiserror::Error;

/// Which axiom family an algebra claims to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    PreLie,
    Lie,
    CommAssoc,
    /// Raw staged data, not yet validated.
    Unchecked,
}

impl Flavor {
    pub fn as_str(&self) -> &'static str {
        match self {
            Flavor::PreLie => "prelie",
            Flavor::Lie => "lie",
            Flavor::CommAssoc => "commassoc",
            Flavor::Unchecked => "unchecked",
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("algebra is not pre-Lie: {0}")]
    NotPreLie(Counterexample),
    #[error("algebra is not a Lie algebra: {0}")]
    NotLie(Counterexample),
    #[error("algebra is not commutative associative: {0}")]
    NotCommAssoc(Counterexample),
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(Counterexample),
    #[error("flavor mismatch: source is {source_flavor}, target is {target_flavor}")]
    FlavorMismatch {
        source_flavor: &'static str,
        target_flavor: &'static str,
    },
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
}

/// Algebra on a named basis with structure constants over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    dim: usize,
    basis_names: Vec<String>,
    /// `c[i][j][k]`: coordinate of `e_k` in `e_i * e_j`.
    c: Vec<Vec<Vec<Scalar>>>,
    flavor: Flavor,
}

impl Algebra {
    /// Builds an algebra from a full structure tensor. Panics on ragged input.
    pub fn new(basis_names: Vec<String>, c: Vec<Vec<Vec<Scalar>>>, flavor: Flavor) -> Self {
        let dim = basis_names.len();
        assert_eq!(c.len(), dim, "structure tensor must have dim rows");
        for row in &c {
            assert_eq!(row.len(), dim);
            for cell in row {
                assert_eq!(cell.len(), dim);
            }
        }
        Algebra {
            dim,
            basis_names,
            c,
            flavor,
        }
    }

    /// Zero-product algebra with default basis names `e1..en`.
    pub fn zero(dim: usize, flavor: Flavor) -> Self {
        Algebra::new(
            default_names(dim),
            vec![vec![vec![Scalar::zero(); dim]; dim]; dim],
            flavor,
        )
    }

    /// Builds from a sparse product list: `(i, j, k, coefficient)`, 0-based.
    pub fn from_products(
        dim: usize,
        products: &[(usize, usize, usize, Scalar)],
        flavor: Flavor,
    ) -> Self {
        let mut a = Algebra::zero(dim, flavor);
        for (i, j, k, x) in products {
            a.c[*i][*j][*k] = x.clone();
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn set_basis_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names;
    }

    /// Coordinates of `e_i * e_j`.
    pub fn product_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    /// Bilinear product of coordinate vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &coeff * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Coordinates of the commutator `[e_i, e_j] = e_i e_j - e_j e_i`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| &self.c[i][j][k] - &self.c[j][i][k])
            .collect()
    }

    /// Matrix of left multiplication `y -> e_i * y`. Panics when `i >= dim`.
    pub fn left_mul(&self, i: usize) -> Mat {
        assert!(i < self.dim, "basis index {i} out of range for dim {}", self.dim);
        let mut m = Mat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m[(k, j)] = self.c[i][j][k].clone();
            }
        }
        m
    }

    /// Matrix of right multiplication `y -> y * e_i`. Panics when `i >= dim`.
    pub fn right_mul(&self, i: usize) -> Mat {
        assert!(i < self.dim, "basis index {i} out of range for dim {}", self.dim);
        let mut m = Mat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m[(k, j)] = self.c[j][i][k].clone();
            }
        }
        m
    }

    fn associator_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut ei = vec![Scalar::zero(); self.dim];
        ei[i] = num_traits::One::one();
        let mut ej = vec![Scalar::zero(); self.dim];
        ej[j] = num_traits::One::one();
        let mut ek = vec![Scalar::zero(); self.dim];
        ek[k] = num_traits::One::one();
        let left = self.multiply(&self.multiply(&ei, &ej), &ek);
        let right = self.multiply(&ei, &self.multiply(&ej, &ek));
        sub_vec(&left, &right)
    }

    /// Pre-Lie check: the associator is symmetric in its first two arguments.
    pub fn check_pre_lie(&self) -> Verdict {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in 0..self.dim {
                    let diff = sub_vec(
                        &self.associator_basis(i, j, k),
                        &self.associator_basis(j, i, k),
                    );
                    let v = Verdict::from_difference("pre-lie", &[i, j, k], diff);
                    if !v.passed() {
                        return v;
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Antisymmetry plus the Jacobi identity.
    pub fn check_jacobi(&self) -> Verdict {
        for i in 0..self.dim {
            for j in i..self.dim {
                let diff: Vec<Scalar> = (0..self.dim)
                    .map(|k| &self.c[i][j][k] + &self.c[j][i][k])
                    .collect();
                let v = Verdict::from_difference("antisymmetry", &[i, j], diff);
                if !v.passed() {
                    return v;
                }
            }
        }
        // With antisymmetry in hand, triples with a repeated index are
        // automatic. The stored tensor is the bracket itself here.
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let e = |n: usize| basis_vec(self.dim, n);
                    let mut total = self.multiply(self.product_basis(i, j), &e(k));
                    let t2 = self.multiply(self.product_basis(k, i), &e(j));
                    let t3 = self.multiply(self.product_basis(j, k), &e(i));
                    for (a, b) in total.iter_mut().zip(t2.iter().zip(t3.iter())) {
                        *a += b.0;
                        *a += b.1;
                    }
                    let v = Verdict::from_difference("jacobi", &[i, j, k], total);
                    if !v.passed() {
                        return v;
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Commutativity plus associativity.
    pub fn check_comm_assoc(&self) -> Verdict {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let diff: Vec<Scalar> = (0..self.dim)
                    .map(|k| &self.c[i][j][k] - &self.c[j][i][k])
                    .collect();
                let v = Verdict::from_difference("commutativity", &[i, j], diff);
                if !v.passed() {
                    return v;
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let v = Verdict::from_difference(
                        "associativity",
                        &[i, j, k],
                        self.associator_basis(i, j, k),
                    );
                    if !v.passed() {
                        return v;
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Runs the checker matching the declared flavor.
    pub fn check_flavor(&self) -> Verdict {
        match self.flavor {
            Flavor::PreLie => self.check_pre_lie(),
            Flavor::Lie => self.check_jacobi(),
            Flavor::CommAssoc => self.check_comm_assoc(),
            Flavor::Unchecked => Verdict::Pass,
        }
    }

    /// Sub-adjacent Lie algebra: bracket `[x,y] = xy - yx`.
    pub fn sub_adjacent(&self) -> Result<Algebra, AlgebraError> {
        if let Verdict::Fail(cx) = self.check_pre_lie() {
            return Err(AlgebraError::NotPreLie(cx));
        }
        let mut c = vec![vec![vec![Scalar::zero(); self.dim]; self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, x) in self.bracket_basis(i, j).into_iter().enumerate() {
                    c[i][j][k] = x;
                }
            }
        }
        Ok(Algebra::new(self.basis_names.clone(), c, Flavor::Lie))
    }

    /// Replaces the flavor tag without re-checking anything.
    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

pub(crate) fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn basis_vec(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = num_traits::One::one();
    v
}

/// Checks `phi(e_i e_j) = phi(e_i) phi(e_j)` on all basis pairs.
///
/// `phi` is a `dim(h) x dim(g)` matrix. Flavors of the two algebras must
/// match; for Lie flavors the product used *is* the stored bracket tensor.
pub fn check_homomorphism(g: &Algebra, h: &Algebra, phi: &Mat) -> Result<Verdict, AlgebraError> {
    if g.flavor() != h.flavor() {
        return Err(AlgebraError::FlavorMismatch {
            source_flavor: g.flavor().as_str(),
            target_flavor: h.flavor().as_str(),
        });
    }
    if phi.rows() != h.dim() || phi.cols() != g.dim() {
        return Err(AlgebraError::ShapeMismatch {
            expected: format!("{}x{}", h.dim(), g.dim()),
            got: format!("{}x{}", phi.rows(), phi.cols()),
        });
    }
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let lhs = phi.mul_vec(g.product_basis(i, j));
            let rhs = h.multiply(&phi.col(i), &phi.col(j));
            let v = Verdict::from_difference("homomorphism", &[i, j], sub_vec(&lhs, &rhs));
            if !v.passed() {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Two pre-Lie algebras with a verified homomorphism between them.
#[derive(Debug, Clone)]
pub struct MorphismTriple {
    g: Algebra,
    h: Algebra,
    phi: Mat,
}

impl MorphismTriple {
    /// Verifies that both algebras are pre-Lie and that `phi` respects the
    /// products, then assembles the triple.
    pub fn new(g: Algebra, h: Algebra, phi: Mat) -> Result<Self, AlgebraError> {
        if let Verdict::Fail(cx) = g.check_pre_lie() {
            return Err(AlgebraError::NotPreLie(cx));
        }
        if let Verdict::Fail(cx) = h.check_pre_lie() {
            return Err(AlgebraError::NotPreLie(cx));
        }
        let g = g.with_flavor(Flavor::PreLie);
        let h = h.with_flavor(Flavor::PreLie);
        match check_homomorphism(&g, &h, &phi)? {
            Verdict::Pass => Ok(MorphismTriple { g, h, phi }),
            Verdict::Fail(cx) => Err(AlgebraError::NotHomomorphism(cx)),
        }
    }

    pub fn g(&self) -> &Algebra {
        &self.g
    }

    pub fn h(&self) -> &Algebra {
        &self.h
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    /// Independent associator expansion used as the oracle for the checkers:
    /// multiplies coordinate vectors straight from the structure constants
    /// without going through `Algebra::multiply`.
    fn naive_product(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = a.dim();
        let mut out = vec![Scalar::zero(); d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    out[k] += &(&x[i] * &y[j]) * a.structure_constant(i, j, k);
                }
            }
        }
        out
    }

    fn naive_associator_symmetry_holds(a: &Algebra) -> bool {
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let e = |n: usize| basis_vec(d, n);
                    let assoc = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| {
                        sub_vec(
                            &naive_product(a, &naive_product(a, x, y), z),
                            &naive_product(a, x, &naive_product(a, y, z)),
                        )
                    };
                    let lhs = assoc(&e(i), &e(j), &e(k));
                    let rhs = assoc(&e(j), &e(i), &e(k));
                    if sub_vec(&lhs, &rhs).iter().any(|t| !t.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dim2_e22() -> Algebra {
        // e2*e2 = e1
        Algebra::from_products(2, &[(1, 1, 0, int(1))], Flavor::PreLie)
    }

    #[test]
    fn pre_lie_examples() {
        assert!(Algebra::zero(3, Flavor::PreLie).check_pre_lie().passed());

        let a = dim2_e22();
        assert!(naive_associator_symmetry_holds(&a));
        assert!(a.check_pre_lie().passed());

        // e1*e1 = e2 and e2*e1 = e1: fails at (1,2,1) with difference -2*e2
        let bad = Algebra::from_products(
            2,
            &[(0, 0, 1, int(1)), (1, 0, 0, int(1))],
            Flavor::Unchecked,
        );
        assert!(!naive_associator_symmetry_holds(&bad));
        match bad.check_pre_lie() {
            Verdict::Fail(cx) => {
                assert_eq!(cx.indices, vec![1, 2, 1]);
                assert_eq!(cx.difference, vec![int(0), int(-2)]);
            }
            Verdict::Pass => panic!("expected failure"),
        }
    }

    #[test]
    fn jacobi_examples() {
        assert!(Algebra::zero(2, Flavor::Lie).check_jacobi().passed());

        // [e1,e2] = e1
        let aff = Algebra::from_products(
            2,
            &[(0, 1, 0, int(1)), (1, 0, 0, int(-1))],
            Flavor::Lie,
        );
        assert!(aff.check_jacobi().passed());

        // so(3)-type: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
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
        assert!(so3.check_jacobi().passed());

        // not antisymmetric
        let sym = Algebra::from_products(2, &[(0, 1, 0, int(1))], Flavor::Unchecked);
        match sym.check_jacobi() {
            Verdict::Fail(cx) => assert_eq!(cx.law, "antisymmetry"),
            Verdict::Pass => panic!("expected antisymmetry failure"),
        }
    }

    #[test]
    fn sub_adjacent_examples() {
        let abelian = Algebra::zero(2, Flavor::PreLie);
        assert!(abelian.sub_adjacent().unwrap().check_jacobi().passed());

        // commutative product has abelian commutator
        let a = dim2_e22();
        let lie = a.sub_adjacent().unwrap();
        assert!(lie.check_jacobi().passed());
        assert!((0..2).all(|i| (0..2).all(|j| lie.bracket_basis(i, j).iter().all(|x| x.is_zero()))));

        // e1*e2 = e1, e2*e2 = e2 has [e1,e2] = e1
        let b = Algebra::from_products(
            2,
            &[(0, 1, 0, int(1)), (1, 1, 1, int(1))],
            Flavor::PreLie,
        );
        let lie = b.sub_adjacent().unwrap();
        assert_eq!(lie.product_basis(0, 1), &[int(1), int(0)]);
        assert_eq!(lie.product_basis(1, 0), &[int(-1), int(0)]);
        assert!(lie.check_jacobi().passed());

        let bad = Algebra::from_products(
            2,
            &[(0, 0, 1, int(1)), (1, 0, 0, int(1))],
            Flavor::Unchecked,
        );
        assert!(matches!(bad.sub_adjacent(), Err(AlgebraError::NotPreLie(_))));
    }

    #[test]
    fn left_right_mul_examples() {
        let abelian = Algebra::zero(2, Flavor::PreLie);
        assert!(abelian.left_mul(0).is_zero());

        let a = dim2_e22();
        let l2 = a.left_mul(1);
        assert_eq!(l2[(0, 1)], int(1));
        assert!(l2.col(0).iter().all(|x| x.is_zero()));
        // commutative product: left and right multiplications coincide
        for i in 0..2 {
            assert_eq!(a.left_mul(i), a.right_mul(i));
        }
    }

    #[test]
    fn left_minus_right_is_bracket_action() {
        let b = Algebra::from_products(
            2,
            &[(0, 1, 0, int(1)), (1, 1, 1, int(1))],
            Flavor::PreLie,
        );
        let lie = b.sub_adjacent().unwrap();
        for i in 0..2 {
            let lr = b.left_mul(i).sub(&b.right_mul(i));
            // column j of lr = [e_i, e_j]
            for j in 0..2 {
                assert_eq!(lr.col(j), lie.product_basis(i, j).to_vec());
            }
        }
    }

    #[test]
    fn homomorphism_examples() {
        let a = dim2_e22();
        let b = Algebra::zero(2, Flavor::PreLie);
        // zero map is always a homomorphism
        assert!(check_homomorphism(&a, &b, &Mat::zeros(2, 2))
            .unwrap()
            .passed());
        // identity on the same algebra
        assert!(check_homomorphism(&a, &a, &Mat::identity(2))
            .unwrap()
            .passed());
        // identity into the abelian algebra fails at (2,2)
        match check_homomorphism(&a, &b, &Mat::identity(2)).unwrap() {
            Verdict::Fail(cx) => assert_eq!(cx.indices, vec![2, 2]),
            Verdict::Pass => panic!("expected failure"),
        }

        let lie = a.sub_adjacent().unwrap();
        assert!(matches!(
            check_homomorphism(&a, &lie, &Mat::zeros(2, 2)),
            Err(AlgebraError::FlavorMismatch { .. })
        ));
    }

    #[test]
    fn homomorphism_descends_to_sub_adjacent() {
        let b = Algebra::from_products(
            2,
            &[(0, 1, 0, int(1)), (1, 1, 1, int(1))],
            Flavor::PreLie,
        );
        let phi = Mat::identity(2);
        assert!(check_homomorphism(&b, &b, &phi).unwrap().passed());
        let lie = b.sub_adjacent().unwrap();
        assert!(check_homomorphism(&lie, &lie, &phi).unwrap().passed());
    }

    #[test]
    fn triple_construction() {
        let a = dim2_e22();
        let t = MorphismTriple::new(a.clone(), a.clone(), Mat::identity(2)).unwrap();
        assert_eq!(t.g().dim(), 2);
        let bad = MorphismTriple::new(
            a.clone(),
            Algebra::zero(2, Flavor::PreLie),
            Mat::identity(2),
        );
        assert!(matches!(bad, Err(AlgebraError::NotHomomorphism(_))));
    }
}
