//! Exact-arithmetic algebra of structure constants.
//!
//! Everything in this crate works over arbitrary-precision rationals; there is
//! no floating point anywhere, so every computation is deterministic and
//! re-runs are bit-identical. The layers, bottom to top:
//!
//! - [`exactnum`]: rational scalars, dense matrices, reduced row echelon form,
//!   kernels, affine solution sets.
//! - [`commalg`]: finite-dimensional unital commutative associative algebras
//!   given by structure constants, with Jacobson radical, socle, locality and
//!   Gorenstein/Poincaré-duality tests.
//! - [`leibniz`]: left Leibniz algebras with Leib ideal, derived series and
//!   solvable radical.
//! - [`algebroid`]: vertex algebroids over a commutative algebra — the five
//!   structure maps, the mode products on the weight-(0,1) truncation, and
//!   exhaustive axiom checkers with stable axiom identifiers.
//! - [`forms`]: the invariant-form machinery attached to a Gorenstein base:
//!   socle generator, the squared pairing `((u,v)) = B(u_1 v, t)`, its radical,
//!   the subspaces `M` and `Ann(t_{-1})`, and orthogonality checks.
//! - [`semiconformal`]: solving for an `L(1)` map, the Heisenberg-element
//!   construction, and loop-module Virasoro commutation checks.
//!
//! Axiom checkers report through [`report::CheckReport`], which carries a
//! machine-readable identifier per axiom so mutation tests can assert exactly
//! which law a perturbation broke.

pub mod algebroid;
pub mod commalg;
pub mod exactnum;
pub mod forms;
pub mod leibniz;
pub mod report;
pub mod samples;
pub mod semiconformal;

pub use exactnum::{AffineSpace, Matrix, Q, Subspace};
pub use report::{CheckReport, Status};
