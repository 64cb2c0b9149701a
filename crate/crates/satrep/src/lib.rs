//! Exact-arithmetic toolkit for lattice-point counting and the structural
//! constants of representation theory.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact`]: arbitrary-precision integers/rationals, exact matrices,
//!   Smith normal form, polynomials and rational functions.
//! - [`polytope`]: rational polytopes in H-representation, exact simplex,
//!   affine spans, lattice-point enumeration.
//! - [`quasipoly`]: quasi-polynomials, interpolation, saturation and
//!   positivity indices, generating functions, positive forms.
//! - [`combinat`]: partitions, Kostka numbers, the Littlewood-Richardson
//!   rule, hive polytopes, symmetric-group characters, Kostant partition
//!   functions, Weyl dimension polynomials.
//! - [`multiplicity`]: Kronecker coefficients (three independent
//!   algorithms), plethysm (two algorithms), branching, Hilbert functions,
//!   and stretching-sequence drivers.
//! - [`satip`]: Ehrhart index computation, saturated integer-programming
//!   decisions, LR nonvanishing by linear programming, and
//!   obstruction-certificate checks.
//!
//! All arithmetic is exact; no floating point is used anywhere in the
//! computational core.

pub mod combinat;
pub mod error;
pub mod exact;
pub mod multiplicity;
pub mod polytope;
pub mod quasipoly;
pub mod satip;

pub use error::{Error, Result};
