//! Cross-checks between the combinatorial formulas and dense numerics.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{is_ppt, LatticeSubset};
use crate::linalg::{analytic_pt_spectrum, check_npt_margin, pt_spectrum};
use crate::tolerance::{SPECTRAL, WITNESS};
use crate::witness::witness_scan;

/// What [`check_subset`] established for one subset.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SubsetCheck {
    pub subset: LatticeSubset,
    pub ppt: bool,
    pub min_eigenvalue: f64,
    pub spectrum_deviation: f64,
    pub witnessed: bool,
}

/// Compares PPT, the PT spectrum and (for PPT subsets) the witness values.
///
/// `tolerance` is the PPT decision margin on the minimum eigenvalue.
pub fn check_subset(subset: LatticeSubset, tolerance: f64) -> Result<SubsetCheck> {
    let ppt = is_ppt(subset)?;
    let numeric = pt_spectrum(subset)?;
    check_npt_margin(subset, &numeric)?;
    let min = numeric.min();
    if (min >= -tolerance) != ppt {
        return Err(Error::OracleMismatch(format!(
            "{subset}: combinatorial PPT = {ppt} but minimum PT eigenvalue is {min:e}"
        )));
    }
    let deviation = numeric.max_deviation(&analytic_pt_spectrum(subset)?);
    if deviation.is_nan() || deviation > SPECTRAL {
        return Err(Error::OracleMismatch(format!(
            "{subset}: PT spectrum deviates from the k-matrix formula by {deviation:e}"
        )));
    }
    let mut witnessed = false;
    if ppt {
        let expect = -1.0 / (2.0 * f64::from(subset.len()));
        for r in witness_scan(subset)?.reports {
            if (r.value - expect).abs() > WITNESS {
                return Err(Error::OracleMismatch(format!(
                    "{subset}: witness at {} is {} instead of {expect}",
                    r.site_mu_nu, r.value
                )));
            }
            witnessed = true;
        }
    }
    Ok(SubsetCheck {
        subset,
        ppt,
        min_eigenvalue: min,
        spectrum_deviation: deviation,
        witnessed,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checked: usize,
    pub ppt: usize,
    pub witnessed: usize,
    pub max_spectrum_deviation: f64,
}

/// Runs [`check_subset`] over `subsets` in parallel; fails on the first disagreement.
pub fn verify_subsets(subsets: &[LatticeSubset], tolerance: f64) -> Result<VerifyReport> {
    let checks = subsets
        .par_iter()
        .map(|&s| check_subset(s, tolerance))
        .collect::<Result<Vec<_>>>()?;
    Ok(checks.iter().fold(VerifyReport::default(), |mut acc, c| {
        acc.checked += 1;
        acc.ppt += usize::from(c.ppt);
        acc.witnessed += usize::from(c.witnessed);
        acc.max_spectrum_deviation = acc.max_spectrum_deviation.max(c.spectrum_deviation);
        acc
    }))
}
