//! Numeric tolerances shared by the dense oracle and the tests.
//!
//! Genuine partial-transpose eigenvalues of lattice states are rationals with
//! denominator at most 32, so a value landing between [`NPT_DECISION`] and
//! [`UNEXPLAINED_BAND`] signals a bug rather than a borderline state.

/// Structural identities (projector algebra, Hermiticity, traces).
pub const STRUCTURAL: f64 = 1e-12;
/// Eigenvalue comparisons against analytic values.
pub const SPECTRAL: f64 = 1e-9;
/// Witness closed form vs dense evaluation.
pub const WITNESS: f64 = 1e-10;
/// Maximum Hermitian deviation accepted by the eigensolver.
pub const HERMITIAN_INPUT: f64 = 1e-10;
/// Sign decision for the smallest partial-transpose eigenvalue.
pub const NPT_DECISION: f64 = 1e-9;
/// Upper edge of the band in which no genuine eigenvalue may fall.
pub const UNEXPLAINED_BAND: f64 = 1e-6;
