//! Fock-space state vectors for a coupled fermion-boson system, its
//! quasiparticle product states, and separability tests for degrees of
//! freedom tied together by a projector.

pub mod cli;
pub mod compare;
pub mod error;
pub mod fock;
pub mod model;
pub mod multimode;
pub mod separability;

pub use error::{Error, Result};
pub use fock::{BasisKet, ModeKind, ModeSpec, StateVector};
pub use model::{Branch, JcParams};
