//! The extended reduction map `Φ_V[B] = Tr(B)·I − B − V Bᵀ V†` for an
//! antisymmetric unitary `V`, and the lattice-state witness built from it.
//!
//! For a lattice state the conjugated output
//! `(id ⊗ Φ̃_V)[ρ_I] = (I ⊗ V†)(id ⊗ Φ_V)[ρ_I](I ⊗ V)` has diagonal element
//!
//! ```text
//! ⟨Ψ_μν| · |Ψ_μν⟩ = k_μν / 2N − (1/N) Σ_{(α,β)∈I} |v_{i_μ(α) i_ν(β)}|²
//! ```
//!
//! where `v_γδ = Tr(σ_γδ V)/4`. Only sites on the cross through
//! `(μ⊕2, ν⊕2)` (center excluded) contribute, so when that cross holds a
//! single point of `I` the single-Pauli `V` aimed at it drives the element to
//! `−1/2N`. With `κ ≥ 2` no unitary `V` can produce a negative element.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{is_ppt, k_matrix, LatticeSubset};
use crate::linalg::{build_lattice_state, hermitian_eigenvalues, ComplexMatrix, DensityMatrix};
use crate::pauli::{i_map, projector, psi, sigma_pair, PauliIndex, PauliPair};
use crate::tolerance::{STRUCTURAL, WITNESS};

const TWO: PauliIndex = PauliIndex::ALL[2];

/// How a [`VMatrix`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VLabel {
    /// `σ_γδ` with exactly one of `γ, δ` equal to 2.
    Single(PauliPair),
    /// Anything else (random congruence, user supplied).
    General,
}

impl fmt::Display for VLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VLabel::Single(p) => write!(f, "sigma_{}{}", p.col, p.row),
            VLabel::General => f.write_str("random"),
        }
    }
}

impl Serialize for VLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let s = String::deserialize(d)?;
        if s == "random" {
            return Ok(VLabel::General);
        }
        let digits = s
            .strip_prefix("sigma_")
            .filter(|t| t.len() == 2)
            .ok_or_else(|| D::Error::custom(format!("bad V label '{s}'")))?;
        let b = digits.as_bytes();
        let pair = PauliPair::new(b[0].wrapping_sub(b'0'), b[1].wrapping_sub(b'0'))
            .map_err(D::Error::custom)?;
        Ok(VLabel::Single(pair))
    }
}

/// A 4×4 antisymmetric unitary, with its Pauli coefficients `v_γδ`.
#[derive(Clone, Debug)]
pub struct VMatrix {
    matrix: ComplexMatrix,
    label: VLabel,
    coefficients: [Complex64; 16],
}

fn antisymmetric_label(p: PauliPair) -> bool {
    (p.col == TWO) ^ (p.row == TWO)
}

impl VMatrix {
    /// Validates unitarity, antisymmetry and the Pauli support.
    pub fn new(matrix: ComplexMatrix, label: VLabel) -> Result<Self> {
        if matrix.dim() != 4 {
            return Err(Error::InvalidV(format!("dimension {} != 4", matrix.dim())));
        }
        let unit = matrix.unitarity_deviation();
        if unit > STRUCTURAL {
            return Err(Error::InvalidV(format!("not unitary (deviation {unit:e})")));
        }
        let anti = (&matrix + &matrix.transpose()).frobenius_norm();
        if anti > STRUCTURAL {
            return Err(Error::InvalidV(format!(
                "not antisymmetric (deviation {anti:e})"
            )));
        }
        let coefficients: [Complex64; 16] = std::array::from_fn(|bit| {
            let s = sigma_pair(PauliPair::from_bit(bit)).to_complex();
            (&s * &matrix).trace() / 4.0
        });
        for p in PauliPair::all() {
            if !antisymmetric_label(p) && coefficients[p.bit()].norm() > STRUCTURAL {
                return Err(Error::InvalidV(format!(
                    "nonzero coefficient on sigma_{}{}",
                    p.col, p.row
                )));
            }
        }
        Ok(Self {
            matrix,
            label,
            coefficients,
        })
    }

    /// `σ_γδ`; requires exactly one index equal to 2.
    pub fn single(p: PauliPair) -> Result<Self> {
        if !antisymmetric_label(p) {
            return Err(Error::InvalidV(format!(
                "sigma_{}{} is symmetric",
                p.col, p.row
            )));
        }
        Self::new(sigma_pair(p).to_complex(), VLabel::Single(p))
    }

    /// `U σ_20 Uᵀ` for a Haar-random unitary `U`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let base = sigma_pair(PauliPair::new(2, 0).expect("valid")).to_complex();
        loop {
            let u = haar_unitary(4, rng);
            let v = &(&u * &base) * &u.transpose();
            if let Ok(vm) = Self::new(v, VLabel::General) {
                return vm;
            }
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn label(&self) -> VLabel {
        self.label
    }

    /// `v_γδ = Tr(σ_γδ V)/4`.
    pub fn coefficient(&self, p: PauliPair) -> Complex64 {
        self.coefficients[p.bit()]
    }

    fn weight(&self, col: PauliIndex, row: PauliIndex) -> f64 {
        self.coefficients[4 * col.idx() + row.idx()].norm_sqr()
    }
}

/// Haar-distributed unitary from Gram–Schmidt on a complex Ginibre matrix.
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        for q in &cols {
            let proj: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(q) {
                *x -= proj * y;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= norm);
        cols.push(v);
    }
    ComplexMatrix::from_fn(dim, |i, j| cols[j][i])
}

/// `ϑ_V[B] = V Bᵀ V†`.
pub fn theta_v(v: &VMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(&v.matrix * &b.transpose()) * &v.matrix.adjoint()
}

/// `Φ_V[B] = Tr(B)·I − B − ϑ_V[B]`.
pub fn phi_v(v: &VMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let tr = ComplexMatrix::identity(4).scale(b.trace());
    &(&tr - b) - &theta_v(v, b)
}

/// `(id ⊗ Φ_V)` applied block by block on the second factor.
pub fn apply_id_tensor_phi(v: &VMatrix, rho: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(rho.dim(), 16);
    let mut out = ComplexMatrix::zeros(16);
    for a in 0..4 {
        for a2 in 0..4 {
            let block = ComplexMatrix::from_fn(4, |b, b2| rho[(4 * a + b, 4 * a2 + b2)]);
            let image = phi_v(v, &block);
            for b in 0..4 {
                for b2 in 0..4 {
                    out[(4 * a + b, 4 * a2 + b2)] = image[(b, b2)];
                }
            }
        }
    }
    out
}

fn lift(v: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::identity(4).kron(v)
}

/// `(id ⊗ Φ̃_V)[ρ] = (I ⊗ V†)(id ⊗ Φ_V)[ρ](I ⊗ V)`.
pub fn apply_id_tensor_phi_tilde(v: &VMatrix, rho: &ComplexMatrix) -> ComplexMatrix {
    let l = lift(v.matrix());
    &(&l.adjoint() * &apply_id_tensor_phi(v, rho)) * &l
}

/// `(1/2N) Σ k_μν (I⊗V) P_μν (I⊗V†) − ρ_I`.
pub fn ext_red_closed_form(subset: LatticeSubset, v: &VMatrix) -> Result<ComplexMatrix> {
    let rho = build_lattice_state(subset)?;
    let n = f64::from(subset.len());
    let k = k_matrix(subset);
    let l = lift(v.matrix());
    let mut sum = ComplexMatrix::zeros(16);
    for p in PauliPair::all() {
        let kp = k.get(p);
        if kp > 0 {
            sum = &sum
                + &projector(p)
                    .conjugate_by(&l)
                    .scale_real(f64::from(kp) / (2.0 * n));
        }
    }
    Ok(&sum - rho.matrix())
}

/// The single-Pauli `V` aimed at the lone point `site` on the cross through
/// `center = (μ⊕2, ν⊕2)`: `σ_{i_μ(α) 2}` for a row point `(α, ν⊕2)`,
/// `σ_{2 i_ν(β)}` for a column point `(μ⊕2, β)`.
pub fn canonical_v_for(site: PauliPair, center: PauliPair) -> Result<VMatrix> {
    let mu_nu = center.shift2();
    let label = if site.row == center.row && site.col != center.col {
        PauliPair {
            col: i_map(mu_nu.col, site.col),
            row: TWO,
        }
    } else if site.col == center.col && site.row != center.row {
        PauliPair {
            col: TWO,
            row: i_map(mu_nu.row, site.row),
        }
    } else {
        return Err(Error::NotOnCross { site, center });
    };
    VMatrix::single(label)
}

/// `⟨Ψ_μν|(id ⊗ Φ̃_V)[ρ_I]|Ψ_μν⟩` as `k/2N − (1/N) Σ_I |v_{i_μ(α) i_ν(β)}|²`.
pub fn phi_v_tilde_diagonal(subset: LatticeSubset, mu_nu: PauliPair, v: &VMatrix) -> Result<f64> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = f64::from(subset.len());
    let k = f64::from(k_matrix(subset).get(mu_nu));
    let overlap: f64 = subset
        .sites()
        .map(|s| v.weight(i_map(mu_nu.col, s.col), i_map(mu_nu.row, s.row)))
        .sum();
    Ok(k / (2.0 * n) - overlap / n)
}

/// Same element written as a sum over the cross only:
/// `(1/2N) Σ_cross (1 − 2|v|²)`.
pub fn witness_value_closed_form(
    subset: LatticeSubset,
    mu_nu: PauliPair,
    v: &VMatrix,
) -> Result<f64> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = f64::from(subset.len());
    let center = mu_nu.shift2();
    let mut total = 0.0;
    for alpha in PauliIndex::ALL.into_iter().filter(|&a| a != center.col) {
        total += f64::from(subset.chi(alpha, center.row))
            * (1.0 - 2.0 * v.weight(i_map(mu_nu.col, alpha), TWO));
    }
    for beta in PauliIndex::ALL.into_iter().filter(|&b| b != center.row) {
        total += f64::from(subset.chi(center.col, beta))
            * (1.0 - 2.0 * v.weight(TWO, i_map(mu_nu.row, beta)));
    }
    Ok(total / (2.0 * n))
}

/// Dense evaluation of the diagonal element.
pub fn phi_v_tilde_diagonal_dense(rho: &DensityMatrix, mu_nu: PauliPair, v: &VMatrix) -> f64 {
    apply_id_tensor_phi_tilde(v, rho)
        .expectation(&psi(mu_nu))
        .re
}

/// One Prop.-3-type detection: a site `(μ, ν)` with `k_μν = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub site_mu_nu: PauliPair,
    /// `(μ⊕2, ν⊕2)`.
    pub center: PauliPair,
    /// The lone point of `I` on the cross through `center`.
    pub contributing_point: PauliPair,
    pub v: VLabel,
    /// Closed-form value of the diagonal element.
    pub value: f64,
    /// The same element from the dense operator.
    pub dense_value: f64,
    pub center_in_i: bool,
}

/// Output of [`witness_scan`].
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct WitnessScan {
    pub reports: Vec<WitnessReport>,
    /// Sites with `k_μν = 0` whose center lies in `I`: the map is indecisive there.
    pub kappa_zero_undecided: Vec<PauliPair>,
}

impl WitnessScan {
    pub fn detects(&self) -> bool {
        self.reports.iter().any(|r| r.value < 0.0)
    }
}

/// Reports every `k_μν = 1` site of a PPT subset with the canonical `V`,
/// cross-checking the closed form against the dense operator.
pub fn witness_scan(subset: LatticeSubset) -> Result<WitnessScan> {
    if !is_ppt(subset)? {
        return Err(Error::NotPpt(subset));
    }
    let k = k_matrix(subset);
    let mut scan = WitnessScan::default();
    if k.min() >= 2 {
        return Ok(scan);
    }
    let rho = build_lattice_state(subset)?;
    for mu_nu in PauliPair::all() {
        let center = mu_nu.shift2();
        match k.get(mu_nu) {
            0 if subset.contains(center) => scan.kappa_zero_undecided.push(mu_nu),
            1 => {
                let point = subset
                    .sites()
                    .find(|&s| s != center && (s.col == center.col || s.row == center.row))
                    .expect("k = 1 means one point on the cross");
                let v = canonical_v_for(point, center)?;
                let value = witness_value_closed_form(subset, mu_nu, &v)?;
                let dense_value = phi_v_tilde_diagonal_dense(&rho, mu_nu, &v);
                if (value - dense_value).abs() > WITNESS {
                    return Err(Error::OracleMismatch(format!(
                        "witness at {mu_nu} for {subset}: closed form {value} vs dense {dense_value}"
                    )));
                }
                scan.reports.push(WitnessReport {
                    site_mu_nu: mu_nu,
                    center,
                    contributing_point: point,
                    v: v.label(),
                    value,
                    dense_value,
                    center_in_i: subset.contains(center),
                });
            }
            _ => {}
        }
    }
    Ok(scan)
}

/// Smallest eigenvalue of `(id ⊗ Φ_V)[ρ_I]`.
pub fn witness_min_eigenvalue(subset: LatticeSubset, v: &VMatrix) -> Result<f64> {
    let rho = build_lattice_state(subset)?;
    Ok(hermitian_eigenvalues(&apply_id_tensor_phi(v, &rho))?.min())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_subset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pair(a: u8, b: u8) -> PauliPair {
        PauliPair::new(a, b).unwrap()
    }

    fn random_psd(rng: &mut impl Rng) -> ComplexMatrix {
        let g = ComplexMatrix::from_fn(4, |_, _| {
            Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        &g * &g.adjoint()
    }

    fn random_unit(rng: &mut impl Rng) -> Vec<Complex64> {
        haar_unitary(4, rng)
            .as_slice()
            .iter()
            .step_by(4)
            .copied()
            .collect()
    }

    #[test]
    fn single_pauli_validation() {
        assert!(VMatrix::single(pair(3, 2)).is_ok());
        assert!(VMatrix::single(pair(2, 1)).is_ok());
        assert!(VMatrix::single(pair(2, 2)).is_err());
        assert!(VMatrix::single(pair(1, 3)).is_err());
        let v = VMatrix::single(pair(0, 2)).unwrap();
        assert!((v.coefficient(pair(0, 2)) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn theta_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let v = VMatrix::random(&mut rng);
        assert!(
            theta_v(&v, &ComplexMatrix::identity(4)).max_abs_diff(&ComplexMatrix::identity(4))
                < 1e-12
        );
        for _ in 0..200 {
            let psi = random_unit(&mut rng);
            let b = ComplexMatrix::outer(&psi, &psi);
            let t = theta_v(&v, &b);
            assert!((&b * &t).trace().norm() < 1e-12);
            let g = random_psd(&mut rng);
            assert!((theta_v(&v, &g).trace() - g.trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn phi_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let v = VMatrix::single(pair(1, 2)).unwrap();
        let out = phi_v(&v, &ComplexMatrix::identity(4));
        assert!(out.max_abs_diff(&ComplexMatrix::identity(4).scale_real(2.0)) < 1e-14);
        for _ in 0..100 {
            let psi = random_unit(&mut rng);
            let spec =
                hermitian_eigenvalues(&phi_v(&v, &ComplexMatrix::outer(&psi, &psi))).unwrap();
            let expect = [0.0, 0.0, 1.0, 1.0];
            for (a, b) in spec.eigenvalues.iter().zip(expect) {
                assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn phi_preserves_positivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let vs: Vec<VMatrix> = (0..10).map(|_| VMatrix::random(&mut rng)).collect();
        for i in 0..10_000 {
            let b = random_psd(&mut rng);
            let min = hermitian_eigenvalues(&phi_v(&vs[i % vs.len()], &b))
                .unwrap()
                .min();
            assert!(min >= -1e-10, "min eigenvalue {min}");
        }
    }

    #[test]
    fn random_v_is_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let v = VMatrix::random(&mut rng);
            let norm: f64 = PauliPair::all().map(|p| v.coefficient(p).norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-12, "Σ|v|² = Tr(V†V)/4 = 1");
        }
    }

    #[test]
    fn id_tensor_phi_on_maximally_mixed() {
        let v = VMatrix::single(pair(2, 3)).unwrap();
        let mm = ComplexMatrix::identity(16).scale_real(1.0 / 16.0);
        let out = apply_id_tensor_phi(&v, &mm);
        assert!(out.max_abs_diff(&ComplexMatrix::identity(16).scale_real(2.0 / 16.0)) < 1e-14);
    }

    #[test]
    fn ext_red_matches_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let left = parse_subset("..../XX.X/XX../XXX.").unwrap();
        for v in [
            VMatrix::single(pair(3, 2)).unwrap(),
            VMatrix::random(&mut rng),
        ] {
            for s in [left, LatticeSubset(0x1234), LatticeSubset::FULL] {
                let rho = build_lattice_state(s).unwrap();
                let dense = apply_id_tensor_phi(&v, &rho);
                assert!(dense.max_abs_diff(&ext_red_closed_form(s, &v).unwrap()) < 1e-10);
            }
        }
    }

    #[test]
    fn canonical_v_examples() {
        let center = pair(0, 0);
        let row = canonical_v_for(pair(1, 0), center).unwrap();
        assert_eq!(row.label(), VLabel::Single(pair(3, 2)));
        let col = canonical_v_for(pair(0, 3), center).unwrap();
        assert_eq!(col.label(), VLabel::Single(pair(2, 1)));
        assert!(canonical_v_for(pair(0, 0), center).is_err());
        assert!(canonical_v_for(pair(1, 1), center).is_err());
        for c in PauliPair::all() {
            for s in PauliPair::all().filter(|&s| s != c && (s.col == c.col || s.row == c.row)) {
                let v = canonical_v_for(s, c).unwrap();
                assert!((v.matrix() + &v.matrix().transpose()).frobenius_norm() < 1e-15);
            }
        }
    }

    #[test]
    fn diagonal_closed_forms_agree_with_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let s = LatticeSubset(rng.random_range(1..=u16::MAX));
            let v = VMatrix::random(&mut rng);
            let rho = build_lattice_state(s).unwrap();
            for mu_nu in PauliPair::all() {
                let a = phi_v_tilde_diagonal(s, mu_nu, &v).unwrap();
                let b = witness_value_closed_form(s, mu_nu, &v).unwrap();
                let c = phi_v_tilde_diagonal_dense(&rho, mu_nu, &v);
                assert!(
                    (a - b).abs() < 1e-10 && (a - c).abs() < 1e-10,
                    "{s} {mu_nu}: {a} {b} {c}"
                );
            }
        }
    }

    #[test]
    fn unused_coefficients_give_plain_k_term() {
        // center (0,0) cross is empty except what we place; V = σ_02 targets nothing present
        let s = LatticeSubset::from_pairs(&[(1, 1), (3, 3), (1, 0)]);
        let mu_nu = pair(2, 2);
        let v = VMatrix::single(pair(0, 2)).unwrap();
        // i_2(α) = 0 needs α = 2: the row point (2, 0) is absent
        let got = phi_v_tilde_diagonal(s, mu_nu, &v).unwrap();
        let k = f64::from(k_matrix(s).get(mu_nu));
        assert!((got - k / 6.0).abs() < 1e-15);
    }

    #[test]
    fn scan_examples() {
        let right = parse_subset("XX.X/X.X./.X.X/XX.X").unwrap();
        let scan = witness_scan(right).unwrap();
        let r = scan
            .reports
            .iter()
            .find(|r| r.site_mu_nu == pair(0, 0))
            .unwrap();
        assert!(r.center_in_i);
        assert_eq!(r.contributing_point, pair(0, 2));
        assert!((r.value + 0.05).abs() < 1e-12);

        let n11 = parse_subset("XXX./XXXX/XXX./...X").unwrap();
        let scan = witness_scan(n11).unwrap();
        assert!(scan
            .reports
            .iter()
            .any(|r| (r.value + 1.0 / 22.0).abs() < 1e-12));

        assert!(witness_scan(LatticeSubset::FULL)
            .unwrap()
            .reports
            .is_empty());
        assert!(matches!(
            witness_scan(LatticeSubset(1)),
            Err(Error::NotPpt(_))
        ));
    }

    #[test]
    fn flagged_state_has_negative_eigenvalue() {
        let right = parse_subset("XX.X/X.X./.X.X/XX.X").unwrap();
        let scan = witness_scan(right).unwrap();
        let r = &scan.reports[0];
        let v = match r.v {
            VLabel::Single(p) => VMatrix::single(p).unwrap(),
            VLabel::General => unreachable!(),
        };
        assert!(witness_min_eigenvalue(right, &v).unwrap() <= -0.05 + 1e-10);
    }

    #[test]
    fn phi_and_phi_tilde_share_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let v = VMatrix::random(&mut rng);
        let rho = build_lattice_state(LatticeSubset(0x6F96)).unwrap();
        let a = hermitian_eigenvalues(&apply_id_tensor_phi(&v, &rho)).unwrap();
        let b = hermitian_eigenvalues(&apply_id_tensor_phi_tilde(&v, &rho)).unwrap();
        assert!(a.max_deviation(&b) < 1e-9);
    }

    #[test]
    fn label_serde() {
        let json = serde_json::to_string(&VLabel::Single(pair(3, 2))).unwrap();
        assert_eq!(json, "\"sigma_32\"");
        assert_eq!(
            serde_json::from_str::<VLabel>(&json).unwrap(),
            VLabel::Single(pair(3, 2))
        );
        assert_eq!(
            serde_json::from_str::<VLabel>("\"random\"").unwrap(),
            VLabel::General
        );
        assert!(serde_json::from_str::<VLabel>("\"sigma_9\"").is_err());
    }
}
