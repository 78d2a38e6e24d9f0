use std::ops::Deref;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{hermitian_eigenvalues, ComplexMatrix, Spectrum};
use crate::error::{Error, Result};
use crate::lattice::{k_matrix, LatticeSubset, ProbabilityTable};
use crate::pauli::{projector, PauliPair};
use crate::tolerance::{NPT_DECISION, UNEXPLAINED_BAND};

/// A 16×16 density matrix on `C⁴ ⊗ C⁴`.
#[derive(Clone, Debug)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    /// Wraps a matrix after checking Hermiticity and unit trace.
    pub fn new(m: ComplexMatrix, tol: f64) -> Result<Self> {
        let dev = m.hermitian_deviation();
        if dev > tol {
            return Err(Error::NotHermitian(dev));
        }
        let tr = m.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(Error::OracleMismatch(format!("trace {tr} is not 1")));
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }
}

impl Deref for DensityMatrix {
    type Target = ComplexMatrix;

    fn deref(&self) -> &ComplexMatrix {
        &self.0
    }
}

/// `ρ_I = (1/N_I) Σ_{(α,β)∈I} P_αβ`.
pub fn build_lattice_state(subset: LatticeSubset) -> Result<DensityMatrix> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut m = ComplexMatrix::zeros(16);
    for s in subset.sites() {
        m = &m + projector(s);
    }
    DensityMatrix::new(m.scale_real(1.0 / f64::from(subset.len())), 1e-12)
}

/// `ρ_π = Σ π_αβ P_αβ`.
pub fn build_diag_state(pi: &ProbabilityTable) -> Result<DensityMatrix> {
    let mut m = ComplexMatrix::zeros(16);
    for s in PauliPair::all() {
        let w = pi.get(s).to_f64().unwrap_or(f64::NAN);
        if w != 0.0 {
            m = &m + &projector(s).scale_real(w);
        }
    }
    DensityMatrix::new(m, 1e-12)
}

/// `(id ⊗ T)` on the second tensor factor: entry `(a b, a' b')` of the
/// result is entry `(a b', a' b)` of the input.
pub fn partial_transpose(m: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(m.dim(), 16, "partial transpose is defined on C^4 ⊗ C^4");
    ComplexMatrix::from_fn(16, |r, c| {
        let (a, b) = (r / 4, r % 4);
        let (a2, b2) = (c / 4, c % 4);
        m[(4 * a + b2, 4 * a2 + b)]
    })
}

/// Numeric spectrum of `(id ⊗ T)[ρ_I]`.
pub fn pt_spectrum(subset: LatticeSubset) -> Result<Spectrum> {
    let rho = build_lattice_state(subset)?;
    hermitian_eigenvalues(&partial_transpose(&rho))
}

/// `{1/4 − k^I_{μν}/(2N_I)}` sorted ascending.
pub fn analytic_pt_spectrum(subset: LatticeSubset) -> Result<Spectrum> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = f64::from(subset.len());
    let k = k_matrix(subset);
    Ok(Spectrum::from_unsorted(
        PauliPair::all()
            .map(|p| 0.25 - f64::from(k.get(p)) / (2.0 * n))
            .collect(),
    ))
}

/// Rejects spectra with an eigenvalue strictly inside `(1e-9, 1e-6)` in
/// absolute value, where no analytic value of a lattice state can fall.
pub fn check_npt_margin(subset: LatticeSubset, spectrum: &Spectrum) -> Result<()> {
    for &v in &spectrum.eigenvalues {
        let a = v.abs();
        if a > NPT_DECISION && a < UNEXPLAINED_BAND {
            return Err(Error::ToleranceBand { subset, value: v });
        }
    }
    Ok(())
}
