//! Exact-arithmetic computer algebra for finite-dimensional pre-Lie algebras.
//!
//! The crate represents algebras by structure constants over the rationals and
//! provides:
//!
//! * verified constructions of pre-Lie algebras and morphism triples from
//!   derivations, symplectic forms, Rota-Baxter operators, Nijenhuis
//!   operators, O-operators and s-matrices;
//! * the pre-Lie and Chevalley-Eilenberg cochain complexes as explicit
//!   rational matrices, with cohomology dimensions and representatives;
//! * the graded complex of a pre-Lie-morphism triple on both sides, the
//!   degree-shifting isomorphism between them, and first-order deformation
//!   checks (generators, equivalences, Nijenhuis pairs, trivial deformations).
//!
//! Everything is computed exactly; there is no floating point anywhere.

pub mod algebra;
pub mod cochain;
pub mod construct;
pub mod corpus;
pub mod deform;
pub mod format;
pub mod linalg;
pub mod rep;
pub mod scalar;
pub mod triple;
pub mod verdict;

pub use algebra::{Algebra, Flavor, MorphismTriple};
pub use linalg::{quotient_complement, Mat};
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use verdict::{Counterexample, Verdict};
