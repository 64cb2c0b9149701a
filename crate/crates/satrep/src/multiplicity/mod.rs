//! Structural constants: Kronecker coefficients, plethysm, branching,
//! Hilbert functions, and stretching-sequence drivers.

mod hilbert;
mod kronecker;
mod plethysm;
mod stretch;

pub use hilbert::{partitions_into_at_most, syminv_hilbert};
pub use kronecker::{
    klimyk_branching, kronecker_char, kronecker_klimyk, kronecker_two_row, Embedding,
};
pub use plethysm::{
    plethysm_p_basis, plethysm_variable_count, plethysm_weyl_substitution, SchurExpansion,
};
pub use stretch::{stretching_quasipolynomial, StretchKind, StretchReport, StretchSpec};
