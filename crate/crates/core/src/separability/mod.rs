//! Separability certificates over the rank-4 PPT lattice states.
//!
//! A target `ρ_I` is certified separable by nonnegative rational weights
//! `w_J` over PPT 4-subsets `J` with `Σ_J w_J χ_J / 4 = χ_I / N_I`.
//! Since every `w_J ≥ 0`, sites outside `I` force `w_J = 0` for all
//! `J ⊄ I`, so only members inside the target enter the program.

pub mod simplex;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{is_ppt, LatticeSubset};
use crate::linalg::{build_lattice_state, ComplexMatrix};
use crate::pauli::PauliPair;
use crate::symmetry::SymmetryGroup;
use crate::tolerance::STRUCTURAL;
use simplex::find_feasible;

/// All PPT lattice subsets with four sites, sorted by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparableBasis {
    members: Vec<LatticeSubset>,
}

impl SeparableBasis {
    pub fn build() -> Self {
        let members = (0..=u16::MAX)
            .map(LatticeSubset)
            .filter(|s| s.len() == 4 && is_ppt(*s).unwrap_or(false))
            .collect();
        Self { members }
    }

    pub fn members(&self) -> &[LatticeSubset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: LatticeSubset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn members_within(
        &self,
        target: LatticeSubset,
    ) -> impl Iterator<Item = LatticeSubset> + '_ {
        self.members
            .iter()
            .copied()
            .filter(move |m| m.is_subset_of(target))
    }
}

/// Exact convex weights over basis members reproducing a lattice state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    pub target: LatticeSubset,
    #[serde(with = "weight_list")]
    pub weights: BTreeMap<LatticeSubset, BigRational>,
}

impl DecompositionCertificate {
    /// Weight carried by each site of the target, `Σ_{J ∋ s} w_J / 4`.
    pub fn site_weight(&self, site: PauliPair) -> BigRational {
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        self.weights
            .iter()
            .filter(|(m, _)| m.contains(site))
            .map(|(_, w)| w * &quarter)
            .sum()
    }

    pub fn total_weight(&self) -> BigRational {
        self.weights.values().sum()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

impl fmt::Display for DecompositionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.target)?;
        for (i, (m, w)) in self.weights.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            write!(f, "{sep}{w}·{m}")?;
        }
        Ok(())
    }
}

mod weight_list {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        member: LatticeSubset,
        weight: String,
    }

    pub fn serialize<S: Serializer>(
        w: &BTreeMap<LatticeSubset, BigRational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = w
            .iter()
            .map(|(m, q)| Entry {
                member: *m,
                weight: format!("{}/{}", q.numer(), q.denom()),
            })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<LatticeSubset, BigRational>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for e in entries {
            let q = parse_ratio(&e.weight).map_err(D::Error::custom)?;
            if out.insert(e.member, q).is_some() {
                return Err(D::Error::custom(format!("duplicate member {}", e.member)));
            }
        }
        Ok(out)
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_ratio(text: &str) -> std::result::Result<BigRational, String> {
    let (n, d) = text.split_once('/').unwrap_or((text, "1"));
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in {text:?}"))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in {text:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(BigRational::new(n, d))
}

fn require_ppt(target: LatticeSubset) -> Result<()> {
    if !is_ppt(target)? {
        return Err(Error::NotPpt(target));
    }
    Ok(())
}

/// Solves the program for `target` itself, without symmetry reduction.
pub fn decompose_direct(
    basis: &SeparableBasis,
    target: LatticeSubset,
) -> Result<Option<DecompositionCertificate>> {
    require_ppt(target)?;
    let candidates: Vec<LatticeSubset> = basis.members_within(target).collect();
    let sites: Vec<PauliPair> = target.sites().collect();
    let n = BigInt::from(target.len());

    // per-site rows scaled by 4: Σ_{J ∋ s} w_J = 4/N, then Σ_J w_J = 1
    let mut a: Vec<Vec<BigRational>> = sites
        .iter()
        .map(|&s| {
            candidates
                .iter()
                .map(|j| {
                    if j.contains(s) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut b = vec![BigRational::new(BigInt::from(4), n); sites.len()];
    a.push(vec![BigRational::one(); candidates.len()]);
    b.push(BigRational::one());

    Ok(find_feasible(&a, &b)
        .solution()
        .map(|x| DecompositionCertificate {
            target,
            weights: candidates
                .into_iter()
                .zip(x)
                .filter(|(_, w)| w.is_positive())
                .collect(),
        }))
}

/// Solves on the orbit representative and maps the certificate back.
pub fn decompose(
    basis: &SeparableBasis,
    group: &SymmetryGroup,
    target: LatticeSubset,
) -> Result<Option<DecompositionCertificate>> {
    require_ppt(target)?;
    let (canonical, g) = group.canonicalize(target);
    let inv = g.inverse();
    Ok(
        decompose_direct(basis, canonical)?.map(|c| DecompositionCertificate {
            target,
            weights: c
                .weights
                .into_iter()
                .map(|(m, w)| (inv.act(m), w))
                .collect(),
        }),
    )
}

/// Exact checks of the certificate invariants followed by a dense reconstruction.
pub fn check_certificate(basis: &SeparableBasis, c: &DecompositionCertificate) -> Result<()> {
    let fail = |msg: String| {
        Err(Error::Consistency(format!(
            "certificate for {}: {msg}",
            c.target
        )))
    };
    if c.target.is_empty() {
        return Err(Error::EmptySubset);
    }
    for (m, w) in &c.weights {
        if !basis.contains(*m) {
            return fail(format!("{m} is not a PPT 4-subset"));
        }
        if w.is_negative() {
            return fail(format!("negative weight {w} on {m}"));
        }
    }
    if !c.total_weight().is_one() {
        return fail(format!("weights sum to {}", c.total_weight()));
    }
    let n = BigInt::from(c.target.len());
    for s in PauliPair::all() {
        let expect = if c.target.contains(s) {
            BigRational::new(BigInt::one(), n.clone())
        } else {
            BigRational::zero()
        };
        let got = c.site_weight(s);
        if got != expect {
            return fail(format!("site {s} carries {got}, expected {expect}"));
        }
    }

    let mut mix = ComplexMatrix::zeros(16);
    for (m, w) in &c.weights {
        let wf = w.to_f64().unwrap_or(f64::NAN);
        mix = &mix + &build_lattice_state(*m)?.scale_real(wf);
    }
    let dev = mix.max_abs_diff(build_lattice_state(c.target)?.matrix());
    if dev.is_nan() || dev > STRUCTURAL {
        return fail(format!("dense reconstruction deviates by {dev:e}"));
    }
    Ok(())
}

pub fn verify_certificate(basis: &SeparableBasis, c: &DecompositionCertificate) -> bool {
    check_certificate(basis, c).is_ok()
}
