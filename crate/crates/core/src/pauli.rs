//! Pauli matrices, their two-qubit tensor products, the Bell-type basis
//! `|Ψ_αβ⟩ = (I₄ ⊗ σ_αβ)|Ψ₊⟩` of `C⁴ ⊗ C⁴`, and the multiplication tables
//! `η^α` with the index maps `i_α` they induce.
//!
//! Everything with entries in `{0, ±1, ±i}` is kept exact as Gaussian
//! integers ([`GaussMatrix`]); the floating mirror is produced on demand for
//! the dense oracle.
//!
//! Basis conventions: `C⁴ = C² ⊗ C²` with index `2·q₁ + q₂`, and
//! `C¹⁶ = C⁴ ⊗ C⁴` with index `4·a + b` where `a` is the first party.

use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Gaussian integer.
pub type Gauss = Complex<i32>;

const ZERO: Gauss = Complex::new(0, 0);
const ONE: Gauss = Complex::new(1, 0);
const I: Gauss = Complex::new(0, 1);

/// Label `0..=3` of a Pauli matrix (`σ₀ = I₂`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct PauliIndex(u8);

impl PauliIndex {
    pub const ALL: [PauliIndex; 4] = [PauliIndex(0), PauliIndex(1), PauliIndex(2), PauliIndex(3)];

    pub fn new(value: u8) -> Result<Self> {
        if value < 4 {
            Ok(Self(value))
        } else {
            Err(Error::IndexOutOfRange(value.into()))
        }
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn idx(self) -> usize {
        self.0 as usize
    }

    /// `self ⊕ 2` (addition mod 4).
    pub const fn shift2(self) -> Self {
        Self((self.0 + 2) % 4)
    }
}

impl TryFrom<u8> for PauliIndex {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PauliIndex> for u8 {
    fn from(p: PauliIndex) -> u8 {
        p.0
    }
}

impl fmt::Display for PauliIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A pair `(α, β)`: labels `σ_αβ = σ_α ⊗ σ_β` and doubles as the lattice
/// site in column `α`, row `β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PauliPair {
    pub col: PauliIndex,
    pub row: PauliIndex,
}

impl PauliPair {
    pub fn new(col: u8, row: u8) -> Result<Self> {
        Ok(Self {
            col: PauliIndex::new(col)?,
            row: PauliIndex::new(row)?,
        })
    }

    /// Site from its bit position `4·α + β`.
    pub fn from_bit(bit: usize) -> Self {
        assert!(bit < 16, "bit {bit} out of range");
        Self {
            col: PauliIndex((bit / 4) as u8),
            row: PauliIndex((bit % 4) as u8),
        }
    }

    pub const fn bit(self) -> usize {
        4 * self.col.idx() + self.row.idx()
    }

    /// All sixteen pairs in bit order.
    pub fn all() -> impl Iterator<Item = PauliPair> {
        (0..16).map(Self::from_bit)
    }

    pub fn shift2(self) -> Self {
        Self {
            col: self.col.shift2(),
            row: self.row.shift2(),
        }
    }

    pub fn swapped(self) -> Self {
        Self {
            col: self.row,
            row: self.col,
        }
    }
}

impl fmt::Display for PauliPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Square matrix over the Gaussian integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussMatrix {
    dim: usize,
    data: Vec<Gauss>,
}

impl GaussMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Gauss) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| ZERO)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Gauss {
        self.data[i * self.dim + j]
    }

    pub fn kron(&self, other: &Self) -> Self {
        let m = other.dim;
        Self::from_fn(self.dim * m, |i, j| {
            self.get(i / m, j / m) * other.get(i % m, j % m)
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Gauss {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: Gauss) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * c)
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn is_unitary(&self) -> bool {
        self * &self.adjoint() == Self::identity(self.dim)
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, |i, j| {
            let z = self.get(i, j);
            Complex64::new(z.re.into(), z.im.into())
        })
    }
}

impl Mul for &GaussMatrix {
    type Output = GaussMatrix;

    fn mul(self, rhs: &GaussMatrix) -> GaussMatrix {
        assert_eq!(self.dim, rhs.dim);
        GaussMatrix::from_fn(self.dim, |i, j| {
            (0..self.dim).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

/// `σ_α` in the standard convention.
pub fn pauli(alpha: PauliIndex) -> GaussMatrix {
    let rows: [[Gauss; 2]; 2] = match alpha.value() {
        0 => [[ONE, ZERO], [ZERO, ONE]],
        1 => [[ZERO, ONE], [ONE, ZERO]],
        2 => [[ZERO, -I], [I, ZERO]],
        _ => [[ONE, ZERO], [ZERO, -ONE]],
    };
    GaussMatrix::from_fn(2, |i, j| rows[i][j])
}

/// `σ_αβ = σ_α ⊗ σ_β`.
pub fn sigma_pair(p: PauliPair) -> GaussMatrix {
    pauli(p.col).kron(&pauli(p.row))
}

/// Sign of `σ_α` under transposition: `σ_αᵀ = ε_αα σ_α`.
pub fn transpose_sign(alpha: PauliIndex) -> i32 {
    if alpha.value() == 2 {
        -1
    } else {
        1
    }
}

/// `|Ψ₊⟩ = ½ Σᵢ |ii⟩`.
pub fn psi_plus() -> Vec<Complex64> {
    (0..16)
        .map(|k| {
            if k / 4 == k % 4 {
                Complex64::new(0.5, 0.0)
            } else {
                Complex64::zero()
            }
        })
        .collect()
}

/// `2 |Ψ_αβ⟩` as Gaussian integers: entry `4a + b` equals `(σ_αβ)_{b a}`.
fn psi_scaled(p: PauliPair) -> Vec<Gauss> {
    let s = sigma_pair(p);
    (0..16).map(|k| s.get(k % 4, k / 4)).collect()
}

/// `|Ψ_αβ⟩ = (I₄ ⊗ σ_αβ)|Ψ₊⟩`.
pub fn psi(p: PauliPair) -> Vec<Complex64> {
    psi_scaled(p)
        .into_iter()
        .map(|z| Complex64::new(f64::from(z.re) * 0.5, f64::from(z.im) * 0.5))
        .collect()
}

/// `4 P_αβ`, exact.
pub fn projector_scaled(p: PauliPair) -> GaussMatrix {
    let v = psi_scaled(p);
    GaussMatrix::from_fn(16, |i, j| v[i] * v[j].conj())
}

fn projector_table() -> &'static [ComplexMatrix; 16] {
    static TABLE: OnceLock<[ComplexMatrix; 16]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|bit| {
            projector_scaled(PauliPair::from_bit(bit))
                .to_complex()
                .scale_real(0.25)
        })
    })
}

/// `P_αβ = |Ψ_αβ⟩⟨Ψ_αβ|`.
pub fn projector(p: PauliPair) -> &'static ComplexMatrix {
    &projector_table()[p.bit()]
}

/// Multiplication table `η^α_{βμ} = ½ Tr(σ_α σ_β σ_μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaTable {
    pub alpha: PauliIndex,
    pub entries: [[Gauss; 4]; 4],
}

impl EtaTable {
    pub fn get(&self, beta: PauliIndex, mu: PauliIndex) -> Gauss {
        self.entries[beta.idx()][mu.idx()]
    }

    pub fn as_matrix(&self) -> GaussMatrix {
        GaussMatrix::from_fn(4, |i, j| self.entries[i][j])
    }
}

/// Computes `η^α` from the trace formula.
pub fn eta(alpha: PauliIndex) -> EtaTable {
    let sa = pauli(alpha);
    let mut entries = [[ZERO; 4]; 4];
    for beta in PauliIndex::ALL {
        let sab = &sa * &pauli(beta);
        for mu in PauliIndex::ALL {
            let tr = (&sab * &pauli(mu)).trace();
            debug_assert!(tr.re % 2 == 0 && tr.im % 2 == 0);
            entries[beta.idx()][mu.idx()] = Complex::new(tr.re / 2, tr.im / 2);
        }
    }
    EtaTable { alpha, entries }
}

/// The explicit tables `η¹, η², η³` as written out in the literature.
pub fn eta_reference(alpha: PauliIndex) -> EtaTable {
    let entries = match alpha.value() {
        0 => [
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, ONE, ZERO, ZERO],
            [ZERO, ZERO, ONE, ZERO],
            [ZERO, ZERO, ZERO, ONE],
        ],
        1 => [
            [ZERO, ONE, ZERO, ZERO],
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, ZERO, ZERO, I],
            [ZERO, ZERO, -I, ZERO],
        ],
        2 => [
            [ZERO, ZERO, ONE, ZERO],
            [ZERO, ZERO, ZERO, -I],
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, I, ZERO, ZERO],
        ],
        _ => [
            [ZERO, ZERO, ZERO, ONE],
            [ZERO, ZERO, I, ZERO],
            [ZERO, -I, ZERO, ZERO],
            [ONE, ZERO, ZERO, ZERO],
        ],
    };
    EtaTable { alpha, entries }
}

/// `i_α`: `σ_α σ_β = η^α_{β, i_α(β)} σ_{i_α(β)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IndexMap {
    pub alpha: PauliIndex,
    pub table: [PauliIndex; 4],
}

impl IndexMap {
    pub fn apply(&self, beta: PauliIndex) -> PauliIndex {
        self.table[beta.idx()]
    }
}

pub fn index_map(alpha: PauliIndex) -> IndexMap {
    let e = eta(alpha);
    let table = PauliIndex::ALL.map(|beta| {
        let mut nonzero = PauliIndex::ALL
            .into_iter()
            .filter(|&mu| !e.get(beta, mu).is_zero());
        let mu = nonzero.next().expect("η row has a nonzero entry");
        assert!(nonzero.next().is_none(), "η row has a single nonzero entry");
        mu
    });
    IndexMap { alpha, table }
}

/// Cached `i_α(β)`.
pub fn i_map(alpha: PauliIndex, beta: PauliIndex) -> PauliIndex {
    static MAPS: OnceLock<[IndexMap; 4]> = OnceLock::new();
    let maps = MAPS.get_or_init(|| {
        let maps = PauliIndex::ALL.map(index_map);
        for a in PauliIndex::ALL {
            assert_eq!(
                eta(a),
                eta_reference(a),
                "η^{a} disagrees with the reference table"
            );
        }
        maps
    });
    maps[alpha.idx()].apply(beta)
}

/// The flip `F |x⟩|y⟩ = |y⟩|x⟩` on `C⁴ ⊗ C⁴`.
pub fn flip_operator() -> ComplexMatrix {
    ComplexMatrix::from_fn(16, |r, c| {
        let (a, b) = (c / 4, c % 4);
        if r == 4 * b + a {
            Complex64::one()
        } else {
            Complex64::zero()
        }
    })
}

/// The two-qubit swap on `C² ⊗ C²`, realised inside one party.
pub fn qubit_swap() -> ComplexMatrix {
    ComplexMatrix::from_fn(4, |r, c| {
        let (a, b) = (c / 2, c % 2);
        if r == 2 * b + a {
            Complex64::one()
        } else {
            Complex64::zero()
        }
    })
}
