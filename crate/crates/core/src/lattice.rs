//! Combinatorics on the 4×4 lattice `L₁₆`.
//!
//! A subset `I ⊆ L₁₆` is a 16-bit mask with site `(α, β)` at bit `4α + β`.
//! Column `C_α` holds the sites with first label `α`, row `R_β` those with
//! second label `β`; the *cross* through a site is `C_α ∪ R_β`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{PauliIndex, PauliPair};

/// Subset of the lattice, the combinatorial identity of `ρ_I`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticeSubset(pub u16);

impl Serialize for LatticeSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

impl<'de> Deserialize<'de> for LatticeSubset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let digits = s
            .strip_prefix("0x")
            .ok_or_else(|| serde::de::Error::custom(format!("expected hex mask, got '{s}'")))?;
        u16::from_str_radix(digits, 16)
            .map(LatticeSubset)
            .map_err(serde::de::Error::custom)
    }
}

impl LatticeSubset {
    pub const EMPTY: LatticeSubset = LatticeSubset(0);
    pub const FULL: LatticeSubset = LatticeSubset(0xFFFF);

    pub const fn mask(self) -> u16 {
        self.0
    }

    pub fn from_sites(sites: impl IntoIterator<Item = PauliPair>) -> Self {
        Self(sites.into_iter().fold(0u16, |m, s| m | (1 << s.bit())))
    }

    /// From `(α, β)` pairs. Panics on out-of-range labels; intended for literals.
    pub fn from_pairs(pairs: &[(u8, u8)]) -> Self {
        Self::from_sites(
            pairs
                .iter()
                .map(|&(a, b)| PauliPair::new(a, b).expect("label in 0..=3")),
        )
    }

    /// `N_I`.
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, site: PauliPair) -> bool {
        self.0 >> site.bit() & 1 == 1
    }

    /// `χ_I(α, β)`.
    pub fn chi(self, col: PauliIndex, row: PauliIndex) -> u32 {
        u32::from(self.0 >> (4 * col.idx() + row.idx()) & 1)
    }

    pub fn with(self, site: PauliPair) -> Self {
        Self(self.0 | 1 << site.bit())
    }

    pub fn without(self, site: PauliPair) -> Self {
        Self(self.0 & !(1 << site.bit()))
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn sites(self) -> impl Iterator<Item = PauliPair> {
        (0..16)
            .filter(move |b| self.0 >> b & 1 == 1)
            .map(PauliPair::from_bit)
    }

    pub fn column_count(self, col: PauliIndex) -> u32 {
        (self.0 >> (4 * col.idx()) & 0xF).count_ones()
    }

    pub fn row_count(self, row: PauliIndex) -> u32 {
        (self.0 & (0x1111 << row.idx())).count_ones()
    }

    /// Points of `I` on `C_α ∪ R_β` other than `(α, β)` itself.
    pub fn cross_count(self, site: PauliPair) -> u32 {
        self.column_count(site.col) + self.row_count(site.row) - 2 * u32::from(self.contains(site))
    }

    /// All nonempty subsets in mask order.
    pub fn all_nonempty() -> impl Iterator<Item = LatticeSubset> {
        (1..=u16::MAX).map(LatticeSubset)
    }

    pub fn hex(self) -> String {
        format!("0x{:04X}", self.0)
    }
}

impl fmt::Debug for LatticeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeSubset({})", self.hex())
    }
}

impl fmt::Display for LatticeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

/// `k^I_{μν}`: points of `I` on the cross through `(μ⊕2, ν⊕2)`, center excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KMatrix {
    /// Indexed `[μ][ν]`.
    pub entries: [[u8; 4]; 4],
}

impl KMatrix {
    pub fn get(&self, mu_nu: PauliPair) -> u8 {
        self.entries[mu_nu.col.idx()][mu_nu.row.idx()]
    }

    pub fn min(&self) -> u8 {
        self.entries.iter().flatten().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> u8 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The sixteen entries sorted ascending.
    pub fn sorted_entries(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.entries.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn sites_with(&self, value: u8) -> impl Iterator<Item = PauliPair> + '_ {
        PauliPair::all().filter(move |&p| self.get(p) == value)
    }
}

pub fn k_matrix(subset: LatticeSubset) -> KMatrix {
    let mut entries = [[0u8; 4]; 4];
    for mu_nu in PauliPair::all() {
        entries[mu_nu.col.idx()][mu_nu.row.idx()] = subset.cross_count(mu_nu.shift2()) as u8;
    }
    KMatrix { entries }
}

/// `κ`, the smallest entry of the k-matrix.
pub fn kappa(subset: LatticeSubset) -> u8 {
    k_matrix(subset).min()
}

fn nonempty(subset: LatticeSubset) -> Result<()> {
    if subset.is_empty() {
        Err(Error::EmptySubset)
    } else {
        Ok(())
    }
}

/// PPT test: every cross count is at most `N_I / 2`.
pub fn is_ppt(subset: LatticeSubset) -> Result<bool> {
    nonempty(subset)?;
    let n = subset.len();
    Ok(PauliPair::all().all(|site| 2 * subset.cross_count(site) <= n))
}

/// Same decision read off the k-matrix.
pub fn is_ppt_via_k(subset: LatticeSubset) -> Result<bool> {
    nonempty(subset)?;
    Ok(2 * u32::from(k_matrix(subset).max()) <= subset.len())
}

/// A site `(α, β) ∉ I` whose cross meets `I` in exactly one point, if any.
/// Its existence certifies entanglement of a PPT lattice state.
pub fn prop1b_entangled(subset: LatticeSubset) -> Result<Option<PauliPair>> {
    if !is_ppt(subset)? {
        return Err(Error::NotPpt(subset));
    }
    Ok(PauliPair::all().find(|&s| !subset.contains(s) && subset.cross_count(s) == 1))
}

/// Exact nonnegative weights `π_αβ` summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityTable {
    /// Indexed `[α][β]`.
    entries: [[BigRational; 4]; 4],
}

impl ProbabilityTable {
    pub fn new(entries: [[BigRational; 4]; 4]) -> Result<Self> {
        if entries.iter().flatten().any(|p| p.is_negative()) {
            return Err(Error::InvalidProbabilities("negative entry".into()));
        }
        let total: BigRational = entries.iter().flatten().sum();
        if !total.is_one() {
            return Err(Error::InvalidProbabilities(format!(
                "entries sum to {total}"
            )));
        }
        Ok(Self { entries })
    }

    /// `χ_I / N_I`.
    pub fn uniform_on(subset: LatticeSubset) -> Result<Self> {
        nonempty(subset)?;
        let w = BigRational::new(BigInt::one(), BigInt::from(subset.len()));
        Self::new(std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                if subset.contains(PauliPair::from_bit(4 * a + b)) {
                    w.clone()
                } else {
                    BigRational::zero()
                }
            })
        }))
    }

    pub fn get(&self, site: PauliPair) -> &BigRational {
        &self.entries[site.col.idx()][site.row.idx()]
    }

    pub fn cross_sum(&self, site: PauliPair) -> BigRational {
        let mut s = BigRational::zero();
        for other in PauliPair::all() {
            if other != site && (other.col == site.col || other.row == site.row) {
                s += self.get(other);
            }
        }
        s
    }
}

/// PPT test for `ρ_π = Σ π_αβ P_αβ`: every cross sum is at most `1/2`.
pub fn diag_state_is_ppt(pi: &ProbabilityTable) -> bool {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    PauliPair::all().all(|s| pi.cross_sum(s) <= half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_subset;

    /// Literal double sum for `k^I_{μν}`.
    fn k_brute(subset: LatticeSubset, mu: u8, nu: u8) -> u32 {
        let (m2, n2) = ((mu + 2) % 4, (nu + 2) % 4);
        let chi = |a: u8, b: u8| u32::from(subset.contains(PauliPair::new(a, b).unwrap()));
        let col: u32 = (0..4).filter(|&a| a != m2).map(|a| chi(a, n2)).sum();
        let row: u32 = (0..4).filter(|&b| b != n2).map(|b| chi(m2, b)).sum();
        col + row
    }

    fn grid(s: &str) -> LatticeSubset {
        parse_subset(s).unwrap()
    }

    #[test]
    fn k_matrix_examples() {
        assert_eq!(k_matrix(LatticeSubset::EMPTY).entries, [[0; 4]; 4]);
        assert_eq!(k_matrix(LatticeSubset::FULL).entries, [[6; 4]; 4]);
        let single = LatticeSubset::from_pairs(&[(0, 0)]);
        let k = k_matrix(single);
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let expect = u8::from((mu == 2) ^ (nu == 2));
                assert_eq!(k.entries[mu as usize][nu as usize], expect, "({mu},{nu})");
            }
        }
    }

    #[test]
    fn k_matrix_matches_double_sum_exhaustively() {
        for s in (0..=u16::MAX).map(LatticeSubset) {
            let k = k_matrix(s);
            for mu in 0..4u8 {
                for nu in 0..4u8 {
                    assert_eq!(
                        u32::from(k.entries[mu as usize][nu as usize]),
                        k_brute(s, mu, nu)
                    );
                }
            }
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(LatticeSubset::EMPTY), 0);
        assert_eq!(kappa(LatticeSubset::FULL), 6);
        let right = grid("XX.X/X.X./.X.X/XX.X");
        let k = k_matrix(right);
        assert_eq!(k.min(), 1);
        assert_eq!(k.entries[0][0], 1);
    }

    #[test]
    fn ppt_examples() {
        assert!(is_ppt(grid("..../XX.X/XX../XXX.")).unwrap());
        for bit in 0..16 {
            assert!(!is_ppt(LatticeSubset(1 << bit)).unwrap());
        }
        assert!(matches!(
            is_ppt(LatticeSubset::EMPTY),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn ppt_routes_agree_and_large_subsets_are_ppt() {
        for s in LatticeSubset::all_nonempty() {
            let a = is_ppt(s).unwrap();
            assert_eq!(a, is_ppt_via_k(s).unwrap(), "{s}");
            if s.len() >= 14 {
                assert!(a);
            }
            if matches!(s.len(), 1 | 2 | 3 | 5 | 7) {
                assert!(!a, "{s}");
            }
        }
    }

    #[test]
    fn lone_point_examples() {
        let left = grid("..../XX.X/XX../XXX.");
        let site = prop1b_entangled(left)
            .unwrap()
            .expect("left grid has a unit cross");
        assert!(!left.contains(site));
        assert_eq!(left.cross_count(site), 1);
        let s33 = PauliPair::new(3, 3).unwrap();
        assert!(!left.contains(s33) && left.cross_count(s33) == 1);

        assert_eq!(prop1b_entangled(grid("XX.X/X.X./.X.X/XX.X")).unwrap(), None);
        assert_eq!(prop1b_entangled(LatticeSubset::FULL).unwrap(), None);
        assert!(matches!(
            prop1b_entangled(LatticeSubset::from_pairs(&[(0, 0)])),
            Err(Error::NotPpt(_))
        ));
    }

    #[test]
    fn prop1b_sites_only_up_to_ten_points() {
        for s in LatticeSubset::all_nonempty() {
            if is_ppt(s).unwrap() && prop1b_entangled(s).unwrap().is_some() {
                assert!(s.len() <= 10, "{s}");
            }
        }
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn diag_state_examples() {
        let uniform =
            ProbabilityTable::new(std::array::from_fn(|_| std::array::from_fn(|_| rat(1, 16))))
                .unwrap();
        assert!(diag_state_is_ppt(&uniform));
        assert_eq!(uniform.cross_sum(PauliPair::new(1, 2).unwrap()), rat(6, 16));

        let mut point: [[BigRational; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| rat(0, 1)));
        point[0][0] = rat(1, 1);
        assert!(!diag_state_is_ppt(&ProbabilityTable::new(point).unwrap()));

        let bad: [[BigRational; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| rat(1, 15)));
        assert!(ProbabilityTable::new(bad).is_err());
    }

    #[test]
    fn diag_state_specialises_to_lattice_criterion() {
        for s in LatticeSubset::all_nonempty().step_by(7) {
            let pi = ProbabilityTable::uniform_on(s).unwrap();
            assert_eq!(diag_state_is_ppt(&pi), is_ppt(s).unwrap(), "{s}");
        }
    }
}
