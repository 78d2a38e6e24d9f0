//! Entanglement classification of two-ququart lattice states.
//!
//! A lattice state is the uniform mixture of Bell projectors indexed by a
//! subset of the 4 x 4 grid of Pauli pairs. The crate decides PPT from point
//! counts on crosses, detects PPT entanglement with an extended-reduction
//! witness, and certifies separability with exact rational decompositions
//! into rank-4 PPT lattice states. Everything is reduced modulo a symmetry
//! group of order 1152.
//!
//! ```
//! use lattice16::classifier::{Classifier, Label};
//! use lattice16::notation::parse_subset;
//!
//! let c = Classifier::default();
//! let s = parse_subset("XXX./X.X./.X.X/XXX.").unwrap();
//! assert_eq!(c.classify(s).unwrap().label, Label::PptEntangled);
//! ```

pub mod census;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod notation;
pub mod oracle;
pub mod pauli;
pub mod separability;
pub mod symmetry;
pub mod tolerance;
pub mod witness;

pub use error::{Error, Result};
pub use lattice::LatticeSubset;
pub use pauli::{PauliIndex, PauliPair};
