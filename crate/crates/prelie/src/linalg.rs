//! Dense exact linear algebra over the rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination on a
//! denominator-cleared integer copy of the matrix, which keeps intermediate
//! coefficients under control. Kernels, inverses and solves go through a
//! rational Gauss-Jordan reduction; everything is exact.

use crate::scalar::{int, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};
use thiserror::Error;

/// Errors raised by the linear-algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is singular (rank {rank} < dimension {dim})")]
    SingularMatrix { rank: usize, dim: usize },
    #[error("shape mismatch in {op}: {lhs} vs {rhs}")]
    ShapeMismatch {
        op: &'static str,
        lhs: String,
        rhs: String,
    },
    #[error("image vector {index} does not lie in the span of the kernel vectors")]
    ImageNotInKernel { index: usize },
}

/// Dense row-major matrix of rational numbers.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::scalar::format_scalar(&self[(i, j)]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mat {
    /// Builds a matrix from row-major entries; `data.len()` must be `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer-entry convenience constructor, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(n_rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Mat::zeros(n_rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), n_rows, "column length mismatch");
            for i in 0..n_rows {
                m[(i, j)] = v[i].clone();
            }
        }
        m
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::new(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x * c).collect(),
        )
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Mat {
        Mat::new(self.rows, self.cols, self.data.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = &out[(i, j)] + &(a * b);
                        out[(i, j)] = t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact rank via fraction-free (Bareiss) elimination over the integers.
    ///
    /// Each row is scaled by its denominator lcm first; divisions inside the
    /// elimination are exact by the Bareiss identity.
    pub fn rank(&self) -> usize {
        let mut a = self.cleared_denominators();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    a.swap(rank * cols + j, p * cols + j);
                }
            }
            let pivot = a[rank * cols + col].clone();
            for i in (rank + 1)..rows {
                let lead = a[i * cols + col].clone();
                for j in (col + 1)..cols {
                    let num = &pivot * &a[i * cols + j] - &lead * &a[rank * cols + j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    a[i * cols + j] = num / &prev;
                }
                a[i * cols + col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    fn cleared_denominators(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = num_integer::lcm(lcm, self[(i, j)].denom().clone());
            }
            for j in 0..self.cols {
                let x = &self[(i, j)];
                out.push(x.numer() * (&lcm / x.denom()));
            }
        }
        out
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(row, j)].clone();
                    m[(row, j)] = tmp;
                }
            }
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let t = &m[(row, j)] * &inv;
                m[(row, j)] = t;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let t = &m[(r, j)] - &(&factor * &m[(row, j)]);
                    m[(r, j)] = t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel; always returns exactly `cols - rank` vectors.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let pivot_row: std::collections::HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_row.contains_key(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (&pc, &pr) in &pivot_row {
                v[pc] = -r[(pr, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse; errors on non-square or singular input.
    pub fn invert(&self) -> Result<Mat, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return Err(LinalgError::SingularMatrix {
                rank: pivots.iter().filter(|&&c| c < n).count(),
                dim: n,
            });
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Unique solution of `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.len() != self.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "solve",
                lhs: format!("{}x{}", self.rows, self.cols),
                rhs: format!("{}", b.len()),
            });
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return Err(LinalgError::SingularMatrix {
                rank: pivots.iter().filter(|&&c| c < n).count(),
                dim: n,
            });
        }
        Ok((0..n).map(|i| r[(i, n)].clone()).collect())
    }
}

/// Extends a basis of `span(image)` to a basis of `span(kernel)`.
///
/// Returns `dim kernel - dim image` kernel vectors whose coordinates vanish at
/// the pivot positions of the image span; they represent the quotient
/// `kernel / image`. Errors when some image vector falls outside the kernel
/// span, which signals a broken complex upstream.
pub fn quotient_complement(
    kernel: &[Vec<Scalar>],
    image: &[Vec<Scalar>],
) -> Result<Vec<Vec<Scalar>>, LinalgError> {
    let n = kernel
        .first()
        .or_else(|| image.first())
        .map_or(0, |v| v.len());
    for v in kernel.iter().chain(image) {
        if v.len() != n {
            return Err(LinalgError::ShapeMismatch {
                op: "quotient_complement",
                lhs: format!("{n}"),
                rhs: format!("{}", v.len()),
            });
        }
    }

    let kernel_mat = Mat::from_cols(n, kernel);
    let kernel_rank = kernel_mat.rank();
    for (idx, v) in image.iter().enumerate() {
        let mut cols: Vec<Vec<Scalar>> = kernel.to_vec();
        cols.push(v.clone());
        if Mat::from_cols(n, &cols).rank() != kernel_rank {
            return Err(LinalgError::ImageNotInKernel { index: idx });
        }
    }

    // Row-reduce the image span once; reducing against it zeroes the
    // coordinates of each kernel vector at the image pivot columns.
    let (image_rref, image_pivots) = Mat::from_rows(image.to_vec()).rref_or_empty(n);

    let reduce = |v: &[Scalar]| -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in image_pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for j in 0..n {
                let t = &w[j] - &(&factor * &image_rref[(row, j)]);
                w[j] = t;
            }
        }
        w
    };

    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    let mut echelon: Vec<Vec<Scalar>> = Vec::new();
    for v in kernel {
        let reduced = reduce(v);
        // Independence test against what we already picked.
        let mut scratch = reduced.clone();
        for row in &echelon {
            let Some(p) = row.iter().position(|x| x.is_one()) else {
                continue;
            };
            if !scratch[p].is_zero() {
                let factor = scratch[p].clone();
                for j in 0..n {
                    let t = &scratch[j] - &(&factor * &row[j]);
                    scratch[j] = t;
                }
            }
        }
        if let Some(p) = scratch.iter().position(|x| !x.is_zero()) {
            let inv = scratch[p].recip();
            let normalized: Vec<Scalar> = scratch.iter().map(|x| x * &inv).collect();
            echelon.push(normalized);
            chosen.push(reduced);
        }
    }
    debug_assert_eq!(
        chosen.len() + image_pivots.len(),
        kernel_rank,
        "complement count must be dim kernel - dim image"
    );
    Ok(chosen)
}

impl Mat {
    /// `rref` that tolerates an empty row list (zero vectors span nothing).
    fn rref_or_empty(&self, width: usize) -> (Mat, Vec<usize>) {
        if self.rows == 0 {
            (Mat::zeros(0, width), Vec::new())
        } else {
            self.rref()
        }
    }
}

/// Expresses `target` as a combination of the given column vectors, if it
/// lies in their span. With independent columns the coefficients are unique;
/// free coefficients are set to zero otherwise.
pub fn solve_in_span(cols: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    if cols.is_empty() {
        return target.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    let n = target.len();
    let mut aug = Mat::zeros(n, cols.len() + 1);
    for (j, c) in cols.iter().enumerate() {
        assert_eq!(c.len(), n, "column length mismatch");
        for i in 0..n {
            aug[(i, j)] = c[i].clone();
        }
    }
    for i in 0..n {
        aug[(i, cols.len())] = target[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.contains(&cols.len()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols.len()];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = r[(row, cols.len())].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::zeros(3, 3).rank(), 0);
        assert_eq!(Mat::identity(3).rank(), 3);
        assert_eq!(Mat::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(
            Mat::from_rows(vec![
                vec![frac(1, 2), frac(1, 3)],
                vec![frac(3, 2), int(1)],
            ])
            .rank(),
            1
        );
    }

    #[test]
    fn nullspace_examples() {
        assert!(Mat::identity(2).nullspace_basis().is_empty());
        assert_eq!(Mat::zeros(2, 3).nullspace_basis().len(), 3);

        let basis = Mat::from_i64(&[&[1, 1]]).nullspace_basis();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        // (1, -1) up to scaling
        assert!(!v[0].is_zero());
        assert_eq!(v[1], -v[0].clone());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Mat::identity(4).invert().unwrap(), Mat::identity(4));
        let half = Mat::from_i64(&[&[2]]).invert().unwrap();
        assert_eq!(half[(0, 0)], frac(1, 2));
        assert!(matches!(
            Mat::from_i64(&[&[1, 1], &[1, 1]]).invert(),
            Err(LinalgError::SingularMatrix { rank: 1, dim: 2 })
        ));
        assert!(matches!(
            Mat::zeros(2, 3).invert(),
            Err(LinalgError::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn invert_round_trip() {
        let m = Mat::from_i64(&[&[2, 1, 0], &[-1, 3, 5], &[0, 7, 1]]);
        let inv = m.invert().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3));
        assert_eq!(inv.invert().unwrap(), m);
    }

    #[test]
    fn solve_matches_mul() {
        let m = Mat::from_i64(&[&[0, 1], &[-1, 0]]);
        let x = m.solve(&[int(0), int(1)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![int(0), int(1)]);
        assert_eq!(x, vec![int(-1), int(0)]);
    }

    #[test]
    fn quotient_complement_examples() {
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        // kernel = {e1, e2}, image = {e1} -> one vector on the e2 line
        let q = quotient_complement(&[e1.clone(), e2.clone()], &[e1.clone()]).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q[0][0].is_zero() && !q[0][1].is_zero());
        // kernel = image -> empty
        let q = quotient_complement(&[e1.clone(), e2.clone()], &[e2, e1.clone()]).unwrap();
        assert!(q.is_empty());
        // image empty -> whole kernel
        let ker3: Vec<Vec<Scalar>> = (0..3)
            .map(|i| (0..3).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(quotient_complement(&ker3, &[]).unwrap().len(), 3);
        // image outside kernel
        let bad = quotient_complement(&[e1], &[vec![int(1), int(1)]]);
        assert!(matches!(bad, Err(LinalgError::ImageNotInKernel { index: 0 })));
    }

    #[test]
    fn rank_plus_nullity() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank() + m.nullspace_basis().len(), m.cols());
        for v in m.nullspace_basis() {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }
}
