//! Self-referential integer sieves and the closed forms that describe them.

pub mod double;
pub mod error;
pub mod golden;
pub mod ground;
pub mod hiccup;
pub mod oeis;
pub mod par;
pub mod quad;
pub mod rank_transform;
pub mod squares;
pub mod verify;
pub mod word;
pub mod working_set;

pub use error::{Error, Result};
pub use ground::GroundSequence;
pub use working_set::WorkingSet;
