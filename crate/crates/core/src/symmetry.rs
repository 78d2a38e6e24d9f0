//! Local-unitary symmetries of the lattice states, acting on `L₁₆`.
//!
//! Three families of local unitaries permute the projectors `P_αβ`:
//! conjugation of the second party by `σ_γδ` (the involutions `i_γ × i_δ`),
//! rotations of one qubit exchanging two nonzero Pauli labels, and the
//! qubit swap inside both parties (which exchanges columns and rows).
//! The group is generated by closure and is never assumed.

use std::collections::{HashSet, VecDeque};
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LatticeSubset;
use crate::linalg::ComplexMatrix;
use crate::pauli::{index_map, pauli, projector, qubit_swap, sigma_pair, PauliIndex, PauliPair};

/// Permutation of `{0, 1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4(pub [u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &x in &images {
            if x > 3 || seen[x as usize] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x as usize] = true;
        }
        Ok(Self(images))
    }

    pub fn transposition(i: u8, j: u8) -> Self {
        let mut p = Self::IDENTITY.0;
        p.swap(i as usize, j as usize);
        Self(p)
    }

    pub fn apply(self, x: PauliIndex) -> PauliIndex {
        PauliIndex::ALL[self.0[x.idx()] as usize]
    }

    /// `self ∘ other`.
    pub fn compose(self, other: Perm4) -> Perm4 {
        Perm4(other.0.map(|x| self.0[x as usize]))
    }

    pub fn inverse(self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm4(inv)
    }
}

/// Site map `(α, β) ↦ (col_perm(α'), row_perm(β'))` where `(α', β')` is
/// `(β, α)` when `swap_axes` is set and `(α, β)` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub col_perm: [u8; 4],
    pub row_perm: [u8; 4],
    pub swap_axes: bool,
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement = SymmetryElement {
        col_perm: Perm4::IDENTITY.0,
        row_perm: Perm4::IDENTITY.0,
        swap_axes: false,
    };

    pub fn new(col_perm: Perm4, row_perm: Perm4, swap_axes: bool) -> Self {
        Self {
            col_perm: col_perm.0,
            row_perm: row_perm.0,
            swap_axes,
        }
    }

    fn cols(self) -> Perm4 {
        Perm4(self.col_perm)
    }

    fn rows(self) -> Perm4 {
        Perm4(self.row_perm)
    }

    pub fn act_site(self, site: PauliPair) -> PauliPair {
        let s = if self.swap_axes { site.swapped() } else { site };
        PauliPair {
            col: self.cols().apply(s.col),
            row: self.rows().apply(s.row),
        }
    }

    pub fn act(self, subset: LatticeSubset) -> LatticeSubset {
        LatticeSubset::from_sites(subset.sites().map(|s| self.act_site(s)))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: SymmetryElement) -> SymmetryElement {
        let (oc, or) = if self.swap_axes {
            (other.rows(), other.cols())
        } else {
            (other.cols(), other.rows())
        };
        SymmetryElement::new(
            self.cols().compose(oc),
            self.rows().compose(or),
            self.swap_axes ^ other.swap_axes,
        )
    }

    pub fn inverse(self) -> SymmetryElement {
        if self.swap_axes {
            SymmetryElement::new(self.rows().inverse(), self.cols().inverse(), true)
        } else {
            SymmetryElement::new(self.cols().inverse(), self.rows().inverse(), false)
        }
    }

    /// Images of the sixteen bit positions.
    pub fn site_map(self) -> [u8; 16] {
        std::array::from_fn(|bit| self.act_site(PauliPair::from_bit(bit)).bit() as u8)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    Columns,
    Rows,
}

/// Which local unitary realises a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GeneratorKind {
    /// `i_γ` on one axis, from conjugating the second party by a Pauli.
    PauliShift { axis: Axis, gamma: u8 },
    /// Exchange of the nonzero labels `i, j` on one axis, from a qubit rotation.
    Transposition { axis: Axis, i: u8, j: u8 },
    /// Columns ↔ rows, from swapping the two qubits of each party.
    AxisSwap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub element: SymmetryElement,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::PauliShift { axis, gamma } => write!(f, "i_{gamma} on {axis:?}"),
            GeneratorKind::Transposition { axis, i, j } => write!(f, "({i} {j}) on {axis:?}"),
            GeneratorKind::AxisSwap => f.write_str("axis swap"),
        }
    }
}

pub fn generators() -> Vec<Generator> {
    let mut out = Vec::with_capacity(13);
    for axis in [Axis::Columns, Axis::Rows] {
        let place = |p: Perm4| match axis {
            Axis::Columns => SymmetryElement::new(p, Perm4::IDENTITY, false),
            Axis::Rows => SymmetryElement::new(Perm4::IDENTITY, p, false),
        };
        for gamma in 1..4u8 {
            let table = index_map(PauliIndex::ALL[gamma as usize])
                .table
                .map(|x| x.value());
            out.push(Generator {
                kind: GeneratorKind::PauliShift { axis, gamma },
                element: place(Perm4(table)),
            });
        }
        for (i, j) in [(1u8, 2u8), (1, 3), (2, 3)] {
            out.push(Generator {
                kind: GeneratorKind::Transposition { axis, i, j },
                element: place(Perm4::transposition(i, j)),
            });
        }
    }
    out.push(Generator {
        kind: GeneratorKind::AxisSwap,
        element: SymmetryElement::new(Perm4::IDENTITY, Perm4::IDENTITY, true),
    });
    out
}

/// The local unitary `A ⊗ B` on `C⁴ ⊗ C⁴` realising a generator.
pub fn generator_unitary(kind: GeneratorKind) -> ComplexMatrix {
    let id4 = ComplexMatrix::identity(4);
    let (a, b) = match kind {
        GeneratorKind::PauliShift { axis, gamma } => {
            let p = match axis {
                Axis::Columns => PauliPair::new(gamma, 0),
                Axis::Rows => PauliPair::new(0, gamma),
            }
            .expect("label in range");
            (id4, sigma_pair(p).to_complex())
        }
        GeneratorKind::Transposition { axis, i, j } => {
            let rot = (&pauli(PauliIndex::ALL[i as usize]).to_complex()
                + &pauli(PauliIndex::ALL[j as usize]).to_complex())
                .scale_real(FRAC_1_SQRT_2);
            let id2 = ComplexMatrix::identity(2);
            let w = match axis {
                Axis::Columns => rot.kron(&id2),
                Axis::Rows => id2.kron(&rot),
            };
            let partner = w.conj();
            (w, partner)
        }
        GeneratorKind::AxisSwap => (qubit_swap(), qubit_swap()),
    };
    a.kron(&b)
}

/// Max over sites of `‖L P_s L† − P_{g(s)}‖_max` for the generator's unitary `L`.
pub fn generator_deviation(generator: &Generator) -> f64 {
    let l = generator_unitary(generator.kind);
    PauliPair::all()
        .map(|s| {
            projector(s)
                .conjugate_by(&l)
                .max_abs_diff(projector(generator.element.act_site(s)))
        })
        .fold(0.0, f64::max)
}

/// Checks that the generator's local unitary maps every `P_s` onto `P_{g(s)}`.
pub fn verify_generator_numerically(generator: &Generator) -> Result<()> {
    let dev = generator_deviation(generator);
    if dev > 1e-10 {
        return Err(Error::OracleMismatch(format!(
            "generator {generator} deviates by {dev:e}"
        )));
    }
    Ok(())
}

/// Orbit summary of a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    /// Smallest mask in the orbit.
    pub canonical: LatticeSubset,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
}

/// The group generated by [`generators`], with precomputed site maps.
pub struct SymmetryGroup {
    elements: Vec<SymmetryElement>,
    site_maps: Vec<[u8; 16]>,
}

impl SymmetryGroup {
    /// Breadth-first closure of the generators.
    pub fn generate() -> Self {
        let gens: Vec<SymmetryElement> = generators().into_iter().map(|g| g.element).collect();
        let mut seen = HashSet::from([SymmetryElement::IDENTITY]);
        let mut elements = vec![SymmetryElement::IDENTITY];
        let mut queue = VecDeque::from([SymmetryElement::IDENTITY]);
        while let Some(e) = queue.pop_front() {
            for &g in &gens {
                let next = g.compose(e);
                if seen.insert(next) {
                    elements.push(next);
                    queue.push_back(next);
                }
            }
        }
        elements.sort();
        let site_maps = elements.iter().map(|e| e.site_map()).collect();
        Self {
            elements,
            site_maps,
        }
    }

    /// Process-wide instance.
    pub fn shared() -> &'static SymmetryGroup {
        static GROUP: OnceLock<SymmetryGroup> = OnceLock::new();
        GROUP.get_or_init(Self::generate)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SymmetryElement] {
        &self.elements
    }

    pub fn contains(&self, e: &SymmetryElement) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    fn apply_map(map: &[u8; 16], mask: u16) -> u16 {
        let mut out = 0u16;
        let mut m = mask;
        while m != 0 {
            let bit = m.trailing_zeros() as usize;
            out |= 1 << map[bit];
            m &= m - 1;
        }
        out
    }

    /// Image of `subset` under the `index`-th element.
    pub fn act_by_index(&self, index: usize, subset: LatticeSubset) -> LatticeSubset {
        LatticeSubset(Self::apply_map(&self.site_maps[index], subset.0))
    }

    pub fn images(&self, subset: LatticeSubset) -> impl Iterator<Item = LatticeSubset> + '_ {
        self.site_maps
            .iter()
            .map(move |m| LatticeSubset(Self::apply_map(m, subset.0)))
    }

    /// The smallest image and an element reaching it.
    pub fn canonicalize(&self, subset: LatticeSubset) -> (LatticeSubset, SymmetryElement) {
        let (index, image) = self
            .images(subset)
            .enumerate()
            .min_by_key(|&(_, img)| img)
            .expect("group is nonempty");
        (image, self.elements[index])
    }

    pub fn canonical_form(&self, subset: LatticeSubset) -> OrbitRecord {
        let mut images: Vec<u16> = self.images(subset).map(|s| s.0).collect();
        let stabilizer_order = images.iter().filter(|&&m| m == subset.0).count();
        images.sort_unstable();
        images.dedup();
        OrbitRecord {
            canonical: LatticeSubset(images[0]),
            orbit_size: images.len(),
            stabilizer_order,
        }
    }

    /// Every orbit of the 65 536 subsets, sorted by canonical mask.
    pub fn all_orbits(&self) -> Vec<OrbitRecord> {
        let mut visited = vec![false; 1 << 16];
        let mut out = Vec::new();
        for mask in 0..=u16::MAX {
            if visited[mask as usize] {
                continue;
            }
            let mut size = 0;
            for img in self.images(LatticeSubset(mask)) {
                if !visited[img.0 as usize] {
                    visited[img.0 as usize] = true;
                    size += 1;
                }
            }
            out.push(OrbitRecord {
                canonical: LatticeSubset(mask),
                orbit_size: size,
                stabilizer_order: self.order() / size,
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_ppt, k_matrix};
    use crate::notation::parse_subset;
    use proptest::prelude::*;

    fn pair(a: u8, b: u8) -> PauliPair {
        PauliPair::new(a, b).unwrap()
    }

    #[test]
    fn pauli_shift_by_two_on_columns() {
        let g = generators()
            .into_iter()
            .find(|g| {
                g.kind
                    == GeneratorKind::PauliShift {
                        axis: Axis::Columns,
                        gamma: 2,
                    }
            })
            .unwrap();
        for s in PauliPair::all() {
            assert_eq!(
                g.element.act_site(s),
                PauliPair {
                    col: s.col.shift2(),
                    row: s.row
                }
            );
        }
    }

    #[test]
    fn group_order_and_closure() {
        let g = SymmetryGroup::generate();
        assert_eq!(g.order(), 1152);
        let els = g.elements();
        for (i, &a) in els.iter().enumerate().step_by(7) {
            assert!(g.contains(&a.inverse()));
            assert_eq!(a.compose(a.inverse()), SymmetryElement::IDENTITY);
            for &b in els.iter().skip(i % 5).step_by(11) {
                let ab = a.compose(b);
                assert!(g.contains(&ab));
                for s in PauliPair::all() {
                    assert_eq!(ab.act_site(s), a.act_site(b.act_site(s)));
                }
            }
        }
    }

    #[test]
    fn swap_transposes_grids() {
        let swap = SymmetryElement::new(Perm4::IDENTITY, Perm4::IDENTITY, true);
        let s = parse_subset(".XXX/XXXX/.XXX/....").unwrap();
        let t = swap.act(s);
        for site in PauliPair::all() {
            assert_eq!(t.contains(site), s.contains(site.swapped()));
        }
        assert_eq!(swap.act(t), s);
    }

    #[test]
    fn every_generator_is_realised_by_a_local_unitary() {
        for g in generators() {
            assert!(generator_unitary(g.kind).unitarity_deviation() < 1e-12);
            verify_generator_numerically(&g).unwrap_or_else(|e| panic!("{e}"));
        }
    }

    #[test]
    fn specific_conjugations() {
        // V = σ_12 on the second party: P_00 ↦ P_12
        let l = ComplexMatrix::identity(4).kron(&sigma_pair(pair(1, 2)).to_complex());
        assert!(
            projector(pair(0, 0))
                .conjugate_by(&l)
                .max_abs_diff(projector(pair(1, 2)))
                < 1e-12
        );

        // transposing columns 1, 2 fixes column 3
        let g = generators()
            .into_iter()
            .find(|g| {
                g.kind
                    == GeneratorKind::Transposition {
                        axis: Axis::Columns,
                        i: 1,
                        j: 2,
                    }
            })
            .unwrap();
        for b in 0..4 {
            assert_eq!(g.element.act_site(pair(3, b)), pair(3, b));
            assert_eq!(g.element.act_site(pair(0, b)), pair(0, b));
        }
    }

    #[test]
    fn flip_on_one_party_alone_is_not_a_lattice_symmetry() {
        let l = ComplexMatrix::identity(4).kron(&qubit_swap());
        let s = pair(1, 3);
        assert!(
            projector(s)
                .conjugate_by(&l)
                .max_abs_diff(projector(s.swapped()))
                > 0.1
        );
    }

    #[test]
    fn canonical_forms() {
        let g = SymmetryGroup::shared();
        let empty = g.canonical_form(LatticeSubset::EMPTY);
        assert_eq!(
            (empty.canonical, empty.orbit_size, empty.stabilizer_order),
            (LatticeSubset::EMPTY, 1, 1152)
        );
        let full = g.canonical_form(LatticeSubset::FULL);
        assert_eq!((full.canonical, full.orbit_size), (LatticeSubset::FULL, 1));

        let rho8 = parse_subset(".XXX/.X.X/.XXX/....").unwrap();
        let nine = parse_subset(".XXX/.XXX/.XXX/....").unwrap();
        let target = g.canonical_form(rho8).canonical;
        for site in nine.sites() {
            assert_eq!(g.canonical_form(nine.without(site)).canonical, target);
        }
        let (c, e) = g.canonicalize(rho8);
        assert_eq!(e.act(rho8), c);
        assert_eq!(c, target);
    }

    #[test]
    fn orbit_sizes_partition_the_power_set() {
        let g = SymmetryGroup::shared();
        let orbits = g.all_orbits();
        assert_eq!(orbits.iter().map(|o| o.orbit_size).sum::<usize>(), 1 << 16);
        for o in orbits.iter().step_by(13) {
            assert_eq!(o.orbit_size * o.stabilizer_order, 1152);
            assert_eq!(g.canonical_form(o.canonical), *o);
        }
    }

    proptest! {
        #[test]
        fn action_preserves_invariants(mask in any::<u16>(), index in 0usize..1152) {
            let g = SymmetryGroup::shared();
            let s = LatticeSubset(mask);
            let t = g.act_by_index(index, s);
            prop_assert_eq!(t, g.elements()[index].act(s));
            prop_assert_eq!(t.len(), s.len());
            prop_assert_eq!(k_matrix(t).sorted_entries(), k_matrix(s).sorted_entries());
            if !s.is_empty() {
                prop_assert_eq!(is_ppt(t).unwrap(), is_ppt(s).unwrap());
            }
            prop_assert_eq!(g.elements()[index].inverse().act(t), s);
        }
    }
}
