//! Named example algebras, operators and morphism triples, plus seeded
//! random families at desk scale (dimension <= 4, small rational heights).
//!
//! These are the fixtures the test suite runs on; they are exported because
//! they are also convenient starting points for CLI experiments.

use crate::algebra::{Algebra, Flavor, MorphismTriple};
use crate::construct::{
    derivation_to_prelie, nijenhuis_triple, o_operator_triple, rota_baxter_triple,
    s_matrix_triple, symplectic_to_prelie,
};
use crate::linalg::Mat;
use crate::rep::regular_rep;
use crate::scalar::{frac, int, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Zero-product algebra.
pub fn abelian(dim: usize) -> Algebra {
    Algebra::zero(dim, Flavor::PreLie)
}

/// One-dimensional algebra with `e1 * e1 = e1`.
pub fn idempotent_line() -> Algebra {
    Algebra::from_products(1, &[(0, 0, 0, int(1))], Flavor::PreLie)
}

/// Two-dimensional commutative algebra with `e2 * e2 = e1`, everything else
/// zero.
pub fn nilpotent2() -> Algebra {
    Algebra::from_products(2, &[(1, 1, 0, int(1))], Flavor::PreLie)
}

/// The non-abelian two-dimensional Lie algebra `[e1, e2] = e1`.
pub fn affine_lie2() -> Algebra {
    Algebra::from_products(2, &[(0, 1, 0, int(1)), (1, 0, 0, int(-1))], Flavor::Lie)
}

/// The standard symplectic form `omega(e1, e2) = 1` in dimension two.
pub fn standard_symplectic2() -> Mat {
    Mat::from_i64(&[&[0, 1], &[-1, 0]])
}

/// Pre-Lie algebra built from the symplectic structure on [`affine_lie2`]:
/// `e1 * e2 = e1`, `e2 * e2 = e2`.
pub fn symplectic_affine2() -> Algebra {
    symplectic_to_prelie(&affine_lie2(), &standard_symplectic2())
        .expect("fixture symplectic data is valid")
}

/// Truncated polynomial algebra `K[x]/(x^n)` for `n = 2` or `3`, with basis
/// `(1, x, ..)`.
pub fn truncated_poly(n: usize) -> Algebra {
    assert!(n == 2 || n == 3, "only x^2 and x^3 truncations are provided");
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                products.push((i, j, i + j, int(1)));
            }
        }
    }
    Algebra::from_products(n, &products, Flavor::CommAssoc)
}

/// The Euler derivation `x d/dx` on `K[x]/(x^2)`.
pub fn euler_derivation2() -> Mat {
    Mat::from_i64(&[&[0, 0], &[0, 1]])
}

/// Pre-Lie algebra from the Gel'fand construction on `K[x]/(x^2)` with the
/// Euler derivation: `e1 * e2 = e2`, everything else zero.
pub fn derivation_truncated2() -> Algebra {
    derivation_to_prelie(&truncated_poly(2), &euler_derivation2())
        .expect("fixture derivation is valid")
}

/// Derivation `(b x + c x^2) d/dx` on `K[x]/(x^3)`; every derivation of that
/// algebra has this form.
pub fn truncated3_derivation(b: &Scalar, c: &Scalar) -> Mat {
    let z = Scalar::from_integer(BigInt::from(0));
    Mat::from_rows(vec![
        vec![z.clone(), z.clone(), z.clone()],
        vec![z.clone(), b.clone(), z.clone()],
        vec![z, c.clone(), b + b],
    ])
}

/// Random rational with numerator and denominator bounded by `height`.
pub fn random_rational(rng: &mut ChaCha8Rng, height: i64) -> Scalar {
    let p = rng.random_range(-height..=height);
    let q = rng.random_range(1..=height);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Random matrix with entries of the given height.
pub fn random_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize, height: i64) -> Mat {
    let mut m = Mat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = random_rational(rng, height);
        }
    }
    m
}

/// Deterministic random pre-Lie algebras of dimension 3, built from random
/// derivations of `K[x]/(x^3)`. Nonzero `c` makes them non-associative.
pub fn random_derived_prelie(seed: u64, count: usize) -> Vec<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = truncated_poly(3);
    (0..count)
        .map(|_| {
            let b = random_rational(&mut rng, 3);
            let c = random_rational(&mut rng, 3);
            derivation_to_prelie(&base, &truncated3_derivation(&b, &c))
                .expect("derivations of K[x]/(x^3) satisfy Leibniz by construction")
        })
        .collect()
}

/// The fixed algebra corpus: named small examples plus `extra` random
/// derivation-built ones.
pub fn corpus_algebras(seed: u64, extra: usize) -> Vec<Algebra> {
    let mut out = vec![
        abelian(1),
        abelian(3),
        idempotent_line(),
        nilpotent2(),
        symplectic_affine2(),
        derivation_truncated2(),
    ];
    out.extend(random_derived_prelie(seed, extra));
    out
}

/// One morphism triple per construction kind: zero map, identity,
/// Nijenhuis-built, Rota-Baxter-built, O-operator-built and s-matrix-built.
pub fn corpus_triples() -> Vec<(String, MorphismTriple)> {
    let affine = symplectic_affine2();
    let nil = nilpotent2();
    let mut out = Vec::new();
    out.push((
        "zero-map".to_string(),
        MorphismTriple::new(affine.clone(), derivation_truncated2(), Mat::zeros(2, 2))
            .expect("zero map is a homomorphism"),
    ));
    out.push((
        "identity".to_string(),
        MorphismTriple::new(affine.clone(), affine.clone(), Mat::identity(2))
            .expect("identity is a homomorphism"),
    ));
    out.push((
        "nijenhuis-built".to_string(),
        nijenhuis_triple(&affine, &Mat::identity(2).scale(&int(2)))
            .expect("scalar operators are Nijenhuis"),
    ));
    out.push((
        "rota-baxter-built".to_string(),
        rota_baxter_triple(&affine, &Mat::identity(2).scale(&int(-2)), &int(2))
            .expect("-lambda id is Rota-Baxter of weight lambda"),
    ));
    let reg = regular_rep(&nil).expect("fixture is pre-Lie");
    out.push((
        "o-operator-built".to_string(),
        o_operator_triple(&nil, &reg, &Mat::from_i64(&[&[0, 1], &[0, 0]]))
            .expect("fixture O-operator is valid"),
    ));
    out.push((
        "s-matrix-built".to_string(),
        s_matrix_triple(&nil, &Mat::from_i64(&[&[1, 1], &[1, 0]]))
            .expect("fixture s-matrix is valid"),
    ));
    out
}

/// The compatible invertible s-matrix pair on [`nilpotent2`]: any symmetric
/// `r` with vanishing lower-right entry solves the s-equation there, and the
/// family is closed under linear combinations.
pub fn compatible_s_matrices() -> (Algebra, Mat, Mat) {
    (
        nilpotent2(),
        Mat::from_i64(&[&[1, 1], &[1, 0]]),
        Mat::from_i64(&[&[0, 1], &[1, 0]]),
    )
}

/// Random deformation-generator data over a triple, heights bounded by 3.
pub fn random_generator(
    rng: &mut ChaCha8Rng,
    t: &MorphismTriple,
) -> crate::deform::DeformationGenerator {
    let (dg, dh) = (t.g().dim(), t.h().dim());
    let tensor = |rng: &mut ChaCha8Rng, d: usize| -> Vec<Vec<Vec<Scalar>>> {
        (0..d)
            .map(|_| {
                (0..d)
                    .map(|_| (0..d).map(|_| random_rational(rng, 3)).collect())
                    .collect()
            })
            .collect()
    };
    crate::deform::DeformationGenerator {
        omega: tensor(rng, dg),
        varpi: tensor(rng, dh),
        theta: random_mat(rng, dh, dg, 3),
    }
}

/// Nijenhuis pairs `(triple, N, S)` covering scalar pairs, nilpotent pairs
/// and pairs produced by compatible O-operators.
pub fn corpus_nijenhuis_pairs() -> Vec<(String, MorphismTriple, Mat, Mat)> {
    use crate::construct::nijenhuis_pair_from_compatible;
    use crate::rep::coregular_rep;

    let affine = symplectic_affine2();
    let nil = nilpotent2();
    let id_affine = MorphismTriple::new(affine.clone(), affine.clone(), Mat::identity(2))
        .expect("identity triple");
    let id_nil =
        MorphismTriple::new(nil.clone(), nil.clone(), Mat::identity(2)).expect("identity triple");
    let zero_map = MorphismTriple::new(affine.clone(), nil.clone(), Mat::zeros(2, 2))
        .expect("zero map triple");
    let e12 = Mat::from_i64(&[&[0, 1], &[0, 0]]);

    let mut out: Vec<(String, MorphismTriple, Mat, Mat)> = vec![
        ("identity pair".into(), id_affine.clone(), Mat::identity(2), Mat::identity(2)),
        ("zero pair".into(), id_affine.clone(), Mat::zeros(2, 2), Mat::zeros(2, 2)),
        (
            "scalar pair 2".into(),
            id_affine.clone(),
            Mat::identity(2).scale(&int(2)),
            Mat::identity(2).scale(&int(2)),
        ),
        (
            "scalar pair -1/2".into(),
            id_affine.clone(),
            Mat::identity(2).scale(&frac(-1, 2)),
            Mat::identity(2).scale(&frac(-1, 2)),
        ),
        ("one-sided pair".into(), id_affine.clone(), e12.clone(), Mat::zeros(2, 2)),
        ("nilpotent pair".into(), id_nil.clone(), e12.clone(), e12.clone()),
        (
            "zero-map pair".into(),
            zero_map,
            e12.clone(),
            Mat::identity(2).scale(&int(3)),
        ),
        ("mixed scale on nilpotent".into(), id_nil, e12.clone(), Mat::zeros(2, 2)),
    ];

    let (base, r1, r2) = compatible_s_matrices();
    let co = coregular_rep(&base).expect("fixture is pre-Lie");
    let pair = nijenhuis_pair_from_compatible(&base, &co, &r1, &r2)
        .expect("fixture s-matrices are compatible");
    // On the O-operator triples the module-side operator S sits on the
    // source and the base-side operator N on the target.
    out.push((
        "compatible pair on T1 triple".into(),
        pair.triple1.clone(),
        pair.s.clone(),
        pair.n.clone(),
    ));
    out.push((
        "compatible pair on T2 triple".into(),
        pair.triple2.clone(),
        pair.s.clone(),
        pair.n.clone(),
    ));
    out
}
