//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the real symmetric Jacobi rotation that annihilates
//! it. Sweeps stop once the off-diagonal Frobenius norm drops below
//! [`OFF_DIAGONAL_THRESHOLD`] (relative to the matrix norm when that exceeds 1).

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tolerance::HERMITIAN_INPUT;

pub const OFF_DIAGONAL_THRESHOLD: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Real spectrum of a Hermitian matrix, sorted ascending.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Self { eigenvalues }
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(f64::NAN)
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest pairwise gap after sorting both sides; `INFINITY` on length mismatch.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Eigenvalues with the matching eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    pub vectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }

    /// Max over pairs of `‖A v − λ v‖`.
    pub fn max_residual(&self, a: &ComplexMatrix) -> f64 {
        (0..self.spectrum.len())
            .map(|k| {
                let v = self.vector(k);
                let av = a.mul_vec(&v);
                let lambda = self.spectrum.eigenvalues[k];
                av.iter()
                    .zip(&v)
                    .map(|(x, y)| (x - y * lambda).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    let dev = m.hermitian_deviation();
    if dev > HERMITIAN_INPUT {
        return Err(Error::NotHermitian(dev));
    }
    let n = m.dim();
    let threshold = OFF_DIAGONAL_THRESHOLD * m.frobenius_norm().max(1.0);
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::OracleMismatch(format!(
                "Jacobi did not converge in {MAX_SWEEPS} sweeps"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition {
        spectrum: Spectrum { eigenvalues },
        vectors,
    })
}

pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Spectrum> {
    hermitian_eigen(m).map(|e| e.spectrum)
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U = diag(1, conj(phase)) on (p, q) followed by the real rotation [[c, s], [-s, c]].
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = phase.conj() * (-s);
    let u_qq = phase.conj() * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::zero();
    a[(q, p)] = Complex64::zero();
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}
