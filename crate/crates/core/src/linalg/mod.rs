//! Dense floating-point oracle for the combinatorial formulas.
//!
//! Nothing here makes a PPT/NPT decision on the classification path; the
//! combinatorial module does. These routines exist so that every closed form
//! can be checked against an explicit 16×16 computation.

mod eigen;
mod matrix;
mod state;

pub use eigen::{
    hermitian_eigen, hermitian_eigenvalues, EigenDecomposition, Spectrum, MAX_SWEEPS,
    OFF_DIAGONAL_THRESHOLD,
};
pub use matrix::ComplexMatrix;
pub use state::{
    analytic_pt_spectrum, build_diag_state, build_lattice_state, check_npt_margin,
    partial_transpose, pt_spectrum, DensityMatrix,
};
