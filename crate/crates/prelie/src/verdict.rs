//! Pass/fail verdicts that carry their first counterexample.
//!
//! Every identity checker in this crate reports *where* an identity breaks,
//! not just that it does: the library exists to certify algebraic claims, and
//! a bare boolean is useless for debugging a failing structure.

use crate::linalg::Mat;
use crate::scalar::{format_scalar, Scalar};
use num_traits::Zero;
use std::fmt;

/// First failing basis tuple of a multilinear identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Which law broke, e.g. `"pre-lie"`, `"jacobi"`, `"leibniz"`.
    pub law: &'static str,
    /// 1-based basis indices of the failing tuple.
    pub indices: Vec<usize>,
    /// Coordinates of `lhs - rhs` at that tuple (nonzero).
    pub difference: Vec<Scalar>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        let diff: Vec<String> = self.difference.iter().map(format_scalar).collect();
        write!(
            f,
            "{} fails at ({}) with difference [{}]",
            self.law,
            idx.join(","),
            diff.join(", ")
        )
    }
}

/// Outcome of an identity check on all basis tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
#[must_use]
pub enum Verdict {
    Pass,
    Fail(Counterexample),
}

impl Verdict {
    /// Pass when `difference` vanishes, otherwise record the tuple.
    ///
    /// `indices` are 0-based here; they are stored 1-based for reporting.
    pub fn from_difference(law: &'static str, indices: &[usize], difference: Vec<Scalar>) -> Self {
        if difference.iter().all(|x| x.is_zero()) {
            Verdict::Pass
        } else {
            Verdict::Fail(Counterexample {
                law,
                indices: indices.iter().map(|i| i + 1).collect(),
                difference,
            })
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn failure(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(cx) => Some(cx),
        }
    }

    /// Keeps the first failure.
    pub fn and(self, other: Verdict) -> Verdict {
        match self {
            Verdict::Pass => other,
            fail => fail,
        }
    }
}

/// Zero matrix comparison reported as a verdict with a flat counterexample.
pub fn verdict_from_zero_matrix(law: &'static str, m: &Mat) -> Verdict {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                return Verdict::Fail(Counterexample {
                    law,
                    indices: vec![i + 1, j + 1],
                    difference: vec![m[(i, j)].clone()],
                });
            }
        }
    }
    Verdict::Pass
}

/// A labelled list of verdicts, used by the multi-equation checkers.
#[derive(Debug, Clone)]
pub struct Report {
    pub items: Vec<(String, Verdict)>,
}

impl Report {
    pub fn new() -> Self {
        Report { items: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, verdict: Verdict) {
        self.items.push((label.into(), verdict));
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|(_, v)| v.passed())
    }

    pub fn get(&self, label: &str) -> Option<&Verdict> {
        self.items
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| v)
    }
}

impl Default for Report {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, v) in &self.items {
            match v {
                Verdict::Pass => writeln!(f, "  [pass] {label}")?,
                Verdict::Fail(cx) => writeln!(f, "  [FAIL] {label}: {cx}")?,
            }
        }
        Ok(())
    }
}
