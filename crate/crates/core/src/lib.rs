//! Endomorphic presentations, self-similar groups on rooted trees, and the
//! oracles used to check one against the other.

pub mod catalog;
pub mod cli;
pub mod contract;
pub mod coset;
pub mod dsl;
pub mod error;
pub mod lpres;
pub mod treeauto;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use lpres::{FinitePresentation, LPresentation};
pub use words::{Alphabet, Endomorphism, Letter, Word};
