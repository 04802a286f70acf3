//! The graded complex of a pre-Lie-morphism triple, on the pre-Lie side and
//! on the Chevalley-Eilenberg side, together with the degree-shifting
//! identification between them.
//!
//! Degree-`k` cochains on the pre-Lie side are block triples
//! `(f1, f2, f3)` in `C^{k+1}(g,g) + C^{k+1}(h,h) + C^k(g,h)`, the third
//! block being zero at `k = 0` (pre-Lie cochains start at degree 1). The
//! coboundary is
//!
//! `delta(f1, f2, f3) = (d_g f1, d_h f2, d_phi f3 + (-1)^k (phi o f1 - phi* o f2))`
//!
//! with the regular representations on the diagonal blocks and the morphism
//! representation on the mixed block.
//!
//! The CE side uses `C^{k+1}_CE(g, Hom(g,g)) + C^{k+1}_CE(h, Hom(h,h)) +
//! C^k_CE(g, Hom(g,h))` with the hom-space representations, defined for
//! `k >= -1`: the extra bottom degree is the image of the pre-Lie degree 0
//! under the shift, and quotienting by its coboundary is what makes the
//! degree-shift isomorphism hold on cohomology all the way down. The CE
//! coupling carries `(-1)^{k+1}`, matching the pre-Lie sign at the shifted
//! degree, so the identification is the literal identity on coordinates.

use crate::algebra::MorphismTriple;
use crate::cochain::{
    ce_d_matrix, cohomology, prelie_d_matrix, sort_with_sign, CECochainSpace,
    Cohomology, CochainError, CochainKind, PreLieCochainSpace,
};
use crate::linalg::Mat;
use crate::rep::{hom_index, hom_space_rep, morphism_rep, regular_rep, LieRepresentation, Representation};
use crate::scalar::{int, Scalar};
use crate::verdict::{verdict_from_zero_matrix, Verdict};
use num_traits::Zero;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Block dimensions `(g-part, h-part, mixed part)` of the degree-`k` pre-Lie
/// triple cochain space.
pub fn prelie_block_dims(t: &MorphismTriple, k: usize) -> (usize, usize, usize) {
    let (dg, dh) = (t.g().dim(), t.h().dim());
    let b1 = binomial(dg, k) * dg * dg;
    let b2 = binomial(dh, k) * dh * dh;
    let b3 = if k == 0 {
        0
    } else {
        binomial(dg, k - 1) * dg * dh
    };
    (b1, b2, b3)
}

/// Block dimensions of the degree-`k` CE triple cochain space, `k >= -1`.
pub fn ce_block_dims(t: &MorphismTriple, k: isize) -> (usize, usize, usize) {
    assert!(k >= -1);
    let (dg, dh) = (t.g().dim(), t.h().dim());
    let b1 = binomial(dg, (k + 1) as usize) * dg * dg;
    let b2 = binomial(dh, (k + 1) as usize) * dh * dh;
    let b3 = if k == -1 {
        0
    } else {
        binomial(dg, k as usize) * dg * dh
    };
    (b1, b2, b3)
}

fn block_3x3(rows: (usize, usize, usize), cols: (usize, usize, usize), blocks: [[Option<&Mat>; 3]; 3]) -> Mat {
    let row_dims = [rows.0, rows.1, rows.2];
    let col_dims = [cols.0, cols.1, cols.2];
    let total_rows: usize = row_dims.iter().sum();
    let total_cols: usize = col_dims.iter().sum();
    let mut out = Mat::zeros(total_rows, total_cols);
    let mut row_off = 0;
    for (bi, &rd) in row_dims.iter().enumerate() {
        let mut col_off = 0;
        for (bj, &cd) in col_dims.iter().enumerate() {
            if let Some(m) = blocks[bi][bj] {
                assert_eq!((m.rows(), m.cols()), (rd, cd), "block ({bi},{bj}) shape");
                for i in 0..rd {
                    for j in 0..cd {
                        if !m[(i, j)].is_zero() {
                            out[(row_off + i, col_off + j)] = m[(i, j)].clone();
                        }
                    }
                }
            }
            col_off += cd;
        }
        row_off += rd;
    }
    out
}

/// Post-composition `f -> phi o f` on pre-Lie cochains of degree `n`:
/// `C^n(g,g) -> C^n(g,h)`, applying `phi` to the output coordinate.
pub fn prelie_post_compose(
    phi: &Mat,
    n: usize,
    dg: usize,
    dh: usize,
    limit: usize,
) -> Result<Mat, CochainError> {
    let dom = PreLieCochainSpace::new(n, dg, dg, limit)?;
    let cod = PreLieCochainSpace::new(n, dg, dh, limit)?;
    let mut out = Mat::zeros(cod.dim(), dom.dim());
    for wedge in dom.wedge_subsets() {
        for j in 0..dg {
            for vg in 0..dg {
                let col = dom.index(wedge, j, vg);
                for vh in 0..dh {
                    let x = &phi[(vh, vg)];
                    if !x.is_zero() {
                        out[(cod.index(wedge, j, vh), col)] = x.clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Pre-composition `f -> f o (phi, ..., phi)` on pre-Lie cochains of degree
/// `n`: `C^n(h,h) -> C^n(g,h)`, with antisymmetrized evaluation in the wedge
/// slots.
pub fn prelie_pre_compose(
    phi: &Mat,
    n: usize,
    dg: usize,
    dh: usize,
    limit: usize,
) -> Result<Mat, CochainError> {
    let dom = PreLieCochainSpace::new(n, dh, dh, limit)?;
    let cod = PreLieCochainSpace::new(n, dg, dh, limit)?;
    let mut out = Mat::zeros(cod.dim(), dom.dim());
    let n_wedge = n - 1;
    for wedge in cod.wedge_subsets() {
        for s in 0..dg {
            let mut tuple = vec![0usize; n_wedge];
            loop {
                let mut coeff = Scalar::from_integer(1.into());
                let mut zero = dh == 0;
                for (slot, &w) in tuple.iter().enumerate() {
                    let x = &phi[(w, wedge[slot])];
                    if x.is_zero() {
                        zero = true;
                        break;
                    }
                    coeff *= x;
                }
                if !zero {
                    if let Some((sorted, sign)) = sort_with_sign(&tuple) {
                        let signed = if sign < 0 { -coeff } else { coeff };
                        for l in 0..dh {
                            let x = &phi[(l, s)];
                            if x.is_zero() {
                                continue;
                            }
                            let c = &signed * x;
                            for v in 0..dh {
                                let row = cod.index(wedge, s, v);
                                let col = dom.index(&sorted, l, v);
                                let t = &out[(row, col)] + &c;
                                out[(row, col)] = t;
                            }
                        }
                    }
                }
                if !advance(&mut tuple, dh) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Post-composition on CE cochains valued in hom-spaces:
/// `C^n_CE(g, Hom(g,g)) -> C^n_CE(g, Hom(g,h))`.
fn ce_post_compose(
    phi: &Mat,
    n: usize,
    dg: usize,
    dh: usize,
    limit: usize,
) -> Result<Mat, CochainError> {
    let dom = CECochainSpace::new(n, dg, dg * dg, limit)?;
    let cod = CECochainSpace::new(n, dg, dg * dh, limit)?;
    let mut out = Mat::zeros(cod.dim(), dom.dim());
    for wedge in dom.wedge_subsets() {
        for j in 0..dg {
            for vg in 0..dg {
                let col = dom.index(wedge, hom_index(dg, j, vg));
                for vh in 0..dh {
                    let x = &phi[(vh, vg)];
                    if !x.is_zero() {
                        out[(cod.index(wedge, hom_index(dh, j, vh)), col)] = x.clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Pre-composition on CE cochains: `(phi* f)(x_1..x_n)(y) =
/// f(phi x_1, ..., phi x_n)(phi y)`, `C^n_CE(h, Hom(h,h)) -> C^n_CE(g, Hom(g,h))`.
fn ce_pre_compose(
    phi: &Mat,
    n: usize,
    dg: usize,
    dh: usize,
    limit: usize,
) -> Result<Mat, CochainError> {
    let dom = CECochainSpace::new(n, dh, dh * dh, limit)?;
    let cod = CECochainSpace::new(n, dg, dg * dh, limit)?;
    let mut out = Mat::zeros(cod.dim(), dom.dim());
    for wedge in cod.wedge_subsets() {
        let mut tuple = vec![0usize; n];
        loop {
            let mut coeff = Scalar::from_integer(1.into());
            let mut zero = dh == 0;
            for (slot, &w) in tuple.iter().enumerate() {
                let x = &phi[(w, wedge[slot])];
                if x.is_zero() {
                    zero = true;
                    break;
                }
                coeff *= x;
            }
            if !zero {
                if let Some((sorted, sign)) = sort_with_sign(&tuple) {
                    let signed = if sign < 0 { -coeff } else { coeff };
                    for j in 0..dg {
                        for l in 0..dh {
                            let x = &phi[(l, j)];
                            if x.is_zero() {
                                continue;
                            }
                            let c = &signed * x;
                            for v in 0..dh {
                                let row = cod.index(wedge, hom_index(dh, j, v));
                                let col = dom.index(&sorted, hom_index(dh, l, v));
                                let t = &out[(row, col)] + &c;
                                out[(row, col)] = t;
                            }
                        }
                    }
                }
            }
            if !advance(&mut tuple, dh) {
                break;
            }
        }
    }
    Ok(out)
}

fn advance(tuple: &mut [usize], base: usize) -> bool {
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

/// Which side of the triple complex to work on.
pub type Side = CochainKind;

/// Precomputed differentials of a morphism-triple complex up to a degree cap.
#[derive(Debug, Clone)]
pub struct TripleComplex {
    triple: MorphismTriple,
    k_max: usize,
    /// delta_k for k = 0 ..= k_max + 1.
    prelie_delta: Vec<Mat>,
    /// CE delta at degree i - 1 for i = 0 ..= k_max + 2.
    ce_delta: Vec<Mat>,
    /// Shift map at CE degree i - 1 for i = 0 ..= k_max + 2.
    phi_shift: Vec<Mat>,
}

impl TripleComplex {
    /// Assembles all differentials for degrees up to `k_max` (plus the ones
    /// above and below needed for cohomology and the shift identities).
    pub fn new(t: &MorphismTriple, k_max: usize, limit: usize) -> Result<Self, CochainError> {
        let reg_g = regular_rep(t.g()).expect("triple algebra is pre-Lie");
        let reg_h = regular_rep(t.h()).expect("triple algebra is pre-Lie");
        let morph = morphism_rep(t);
        let hom_g = hom_space_rep(t.g(), &reg_g).expect("hom-space rep of the regular rep");
        let hom_h = hom_space_rep(t.h(), &reg_h).expect("hom-space rep of the regular rep");
        let hom_phi = hom_space_rep(t.g(), &morph).expect("hom-space rep of the morphism rep");

        let mut prelie_delta = Vec::new();
        for k in 0..=(k_max + 1) {
            prelie_delta.push(Self::build_prelie_delta(t, &reg_g, &reg_h, &morph, k, limit)?);
        }
        let mut ce_delta = Vec::new();
        let mut phi_shift = Vec::new();
        for i in 0..=(k_max + 2) {
            let k = i as isize - 1;
            ce_delta.push(Self::build_ce_delta(t, &hom_g, &hom_h, &hom_phi, k, limit)?);
            phi_shift.push(Self::build_phi(t, k, limit)?);
        }
        Ok(TripleComplex {
            triple: t.clone(),
            k_max,
            prelie_delta,
            ce_delta,
            phi_shift,
        })
    }

    pub fn triple(&self) -> &MorphismTriple {
        &self.triple
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    fn build_prelie_delta(
        t: &MorphismTriple,
        reg_g: &Representation,
        reg_h: &Representation,
        morph: &Representation,
        k: usize,
        limit: usize,
    ) -> Result<Mat, CochainError> {
        let (dg, dh) = (t.g().dim(), t.h().dim());
        let d_g = prelie_d_matrix(k + 1, reg_g, limit)?;
        let d_h = prelie_d_matrix(k + 1, reg_h, limit)?;
        let rows = prelie_block_dims(t, k + 1);
        let cols = prelie_block_dims(t, k);
        let d_phi = if k == 0 {
            Mat::zeros(rows.2, 0)
        } else {
            prelie_d_matrix(k, morph, limit)?
        };
        let p = prelie_post_compose(t.phi(), k + 1, dg, dh, limit)?;
        let q = prelie_pre_compose(t.phi(), k + 1, dg, dh, limit)?;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let p_signed = p.scale(&int(sign));
        let q_signed = q.scale(&int(-sign));
        Ok(block_3x3(
            rows,
            cols,
            [
                [Some(&d_g), None, None],
                [None, Some(&d_h), None],
                [Some(&p_signed), Some(&q_signed), Some(&d_phi)],
            ],
        ))
    }

    fn build_ce_delta(
        t: &MorphismTriple,
        hom_g: &LieRepresentation,
        hom_h: &LieRepresentation,
        hom_phi: &LieRepresentation,
        k: isize,
        limit: usize,
    ) -> Result<Mat, CochainError> {
        let (dg, dh) = (t.g().dim(), t.h().dim());
        let d_g = ce_d_matrix((k + 1) as usize, hom_g, limit)?;
        let d_h = ce_d_matrix((k + 1) as usize, hom_h, limit)?;
        let rows = ce_block_dims(t, k + 1);
        let cols = ce_block_dims(t, k);
        let d_phi = if k == -1 {
            Mat::zeros(rows.2, 0)
        } else {
            ce_d_matrix(k as usize, hom_phi, limit)?
        };
        let p = ce_post_compose(t.phi(), (k + 1) as usize, dg, dh, limit)?;
        let q = ce_pre_compose(t.phi(), (k + 1) as usize, dg, dh, limit)?;
        // The coupling enters the shifted pre-Lie degree k+1, hence (-1)^{k+1}.
        let sign = if (k + 1).rem_euclid(2) == 0 { 1 } else { -1 };
        let p_signed = p.scale(&int(sign));
        let q_signed = q.scale(&int(-sign));
        Ok(block_3x3(
            rows,
            cols,
            [
                [Some(&d_g), None, None],
                [None, Some(&d_h), None],
                [Some(&p_signed), Some(&q_signed), Some(&d_phi)],
            ],
        ))
    }

    /// The degree shift as an explicit basis relabeling: CE basis element
    /// `(I, (j, v))` of degree `k` goes to the pre-Lie basis element
    /// `(I, j, v)` of degree `k+1`, block by block. With the shared
    /// lexicographic orders this comes out as a permutation matrix.
    fn build_phi(t: &MorphismTriple, k: isize, limit: usize) -> Result<Mat, CochainError> {
        let (dg, dh) = (t.g().dim(), t.h().dim());
        let ce = ce_block_dims(t, k);
        let p = prelie_block_dims(t, (k + 1) as usize);
        let mut out = Mat::zeros(p.0 + p.1 + p.2, ce.0 + ce.1 + ce.2);

        // block 1: C^{k+1}_CE(g, Hom(g,g)) -> C^{k+2}_p(g, g)
        let ce1 = CECochainSpace::new((k + 1) as usize, dg, dg * dg, limit)?;
        let p1 = PreLieCochainSpace::new((k + 2) as usize, dg, dg, limit)?;
        for wedge in ce1.wedge_subsets() {
            for j in 0..dg {
                for v in 0..dg {
                    let col = ce1.index(wedge, hom_index(dg, j, v));
                    let row = p1.index(wedge, j, v);
                    out[(row, col)] = int(1);
                }
            }
        }
        // block 2: C^{k+1}_CE(h, Hom(h,h)) -> C^{k+2}_p(h, h)
        let ce2 = CECochainSpace::new((k + 1) as usize, dh, dh * dh, limit)?;
        let p2 = PreLieCochainSpace::new((k + 2) as usize, dh, dh, limit)?;
        for wedge in ce2.wedge_subsets() {
            for j in 0..dh {
                for v in 0..dh {
                    let col = ce.0 + ce2.index(wedge, hom_index(dh, j, v));
                    let row = p.0 + p2.index(wedge, j, v);
                    out[(row, col)] = int(1);
                }
            }
        }
        // block 3: C^k_CE(g, Hom(g,h)) -> C^{k+1}_p(g, h); empty at k = -1
        if k >= 0 {
            let ce3 = CECochainSpace::new(k as usize, dg, dg * dh, limit)?;
            let p3 = PreLieCochainSpace::new((k + 1) as usize, dg, dh, limit)?;
            for wedge in ce3.wedge_subsets() {
                for j in 0..dg {
                    for v in 0..dh {
                        let col = ce.0 + ce.1 + ce3.index(wedge, hom_index(dh, j, v));
                        let row = p.0 + p.1 + p3.index(wedge, j, v);
                        out[(row, col)] = int(1);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `delta_k` on the pre-Lie side, `k = 0 ..= k_max + 1`.
    pub fn prelie_delta(&self, k: usize) -> &Mat {
        &self.prelie_delta[k]
    }

    /// `delta_k` on the CE side, `k = -1 ..= k_max + 1`.
    pub fn ce_delta(&self, k: isize) -> &Mat {
        &self.ce_delta[(k + 1) as usize]
    }

    /// Shift map at CE degree `k`, `k = -1 ..= k_max + 1`.
    pub fn phi_shift(&self, k: isize) -> &Mat {
        &self.phi_shift[(k + 1) as usize]
    }

    /// `delta . delta = 0` on both sides, for all adjacent pairs in range.
    pub fn check_complex(&self) -> Verdict {
        for k in 0..=self.k_max {
            let square = self.prelie_delta(k + 1).mul(self.prelie_delta(k));
            let v = verdict_from_zero_matrix("delta-prelie-squared", &square);
            if !v.passed() {
                return v;
            }
        }
        for k in -1..=(self.k_max as isize) {
            let square = self.ce_delta(k + 1).mul(self.ce_delta(k));
            let v = verdict_from_zero_matrix("delta-ce-squared", &square);
            if !v.passed() {
                return v;
            }
        }
        Verdict::Pass
    }

    /// Cohomology on the pre-Lie side. `H^0` is the kernel of `delta_0`; for
    /// `k >= 1` the quotient `ker delta_k / im delta_{k-1}`.
    pub fn prelie_cohomology(&self, k: usize) -> Result<Cohomology, CochainError> {
        assert!(k <= self.k_max);
        let high = self.prelie_delta(k);
        if k == 0 {
            let none = Mat::zeros(high.cols(), 0);
            cohomology(&none, high)
        } else {
            cohomology(self.prelie_delta(k - 1), high)
        }
    }

    /// Cohomology on the CE side. The complex extends one degree below zero,
    /// so `H^0` already quotients by the image of the bottom differential.
    pub fn ce_cohomology(&self, k: usize) -> Result<Cohomology, CochainError> {
        assert!(k <= self.k_max);
        cohomology(self.ce_delta(k as isize - 1), self.ce_delta(k as isize))
    }

    /// Checks the shift intertwining `Phi_{k+1} . delta_CE,k =
    /// delta_preLie,k+1 . Phi_k` for `k = -1 ..= k_max` and that each shift
    /// matrix is invertible.
    pub fn verify_cochain_map(&self) -> Verdict {
        for k in -1..=(self.k_max as isize) {
            let lhs = self.phi_shift(k + 1).mul(self.ce_delta(k));
            let rhs = self.prelie_delta((k + 1) as usize).mul(self.phi_shift(k));
            let v = verdict_from_zero_matrix("phi-intertwines-delta", &lhs.sub(&rhs));
            if !v.passed() {
                return v;
            }
        }
        for k in -1..=(self.k_max as isize + 1) {
            let phi = self.phi_shift(k);
            if !phi.is_square() || phi.rank() < phi.rows() {
                return Verdict::Fail(crate::verdict::Counterexample {
                    law: "phi-invertible",
                    indices: vec![(k + 1) as usize],
                    difference: vec![int(1)],
                });
            }
        }
        Verdict::Pass
    }

    /// Per-degree table `(k, dim H^k_preLie, dim H^{k-1}_CE)` for `k >= 1`.
    pub fn dimension_shift_table(&self) -> Result<Vec<(usize, usize, usize)>, CochainError> {
        let mut rows = Vec::new();
        for k in 1..=self.k_max {
            rows.push((
                k,
                self.prelie_cohomology(k)?.dim,
                self.ce_cohomology(k - 1)?.dim,
            ));
        }
        Ok(rows)
    }
}

/// Free-function form of the pre-Lie triple coboundary matrix.
pub fn delta_prelie_matrix(t: &MorphismTriple, k: usize, limit: usize) -> Result<Mat, CochainError> {
    let reg_g = regular_rep(t.g()).expect("triple algebra is pre-Lie");
    let reg_h = regular_rep(t.h()).expect("triple algebra is pre-Lie");
    let morph = morphism_rep(t);
    TripleComplex::build_prelie_delta(t, &reg_g, &reg_h, &morph, k, limit)
}

/// Free-function form of the CE triple coboundary matrix, `k >= -1`.
pub fn delta_ce_matrix(t: &MorphismTriple, k: isize, limit: usize) -> Result<Mat, CochainError> {
    let reg_g = regular_rep(t.g()).expect("triple algebra is pre-Lie");
    let reg_h = regular_rep(t.h()).expect("triple algebra is pre-Lie");
    let morph = morphism_rep(t);
    let hom_g = hom_space_rep(t.g(), &reg_g).expect("hom-space rep");
    let hom_h = hom_space_rep(t.h(), &reg_h).expect("hom-space rep");
    let hom_phi = hom_space_rep(t.g(), &morph).expect("hom-space rep");
    TripleComplex::build_ce_delta(t, &hom_g, &hom_h, &hom_phi, k, limit)
}

/// Free-function form of the shift map at CE degree `k >= -1`.
pub fn phi_matrix(t: &MorphismTriple, k: isize, limit: usize) -> Result<Mat, CochainError> {
    TripleComplex::build_phi(t, k, limit)
}

/// Cohomology of the triple at degree `k` on the chosen side.
pub fn triple_cohomology(
    t: &MorphismTriple,
    k: usize,
    side: Side,
    limit: usize,
) -> Result<Cohomology, CochainError> {
    let complex = TripleComplex::new(t, k, limit)?;
    match side {
        CochainKind::PreLie => complex.prelie_cohomology(k),
        CochainKind::CE => complex.ce_cohomology(k),
    }
}
