//! Exact computation with Pascal lines of six points on a conic.
//!
//! Points and lines of the plane are binary quadratics; joins, meets and
//! incidences are transvectants. On top of that the crate synthesizes all
//! sixty Pascal lines of a rational sextuple, reconstructs the sextuple from
//! four special Pascals, and checks the transvectant identities the
//! reconstruction depends on by symbolic expansion.

pub mod error;
pub mod forms;
pub mod hexagram;
pub mod identities;
pub mod linalg;
pub mod poly;
pub mod projective;
pub mod reconstruct;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
pub use forms::{BinaryForm, QForm};
pub use hexagram::{Label, PascalArray, PascalLine, SextupleParams};
pub use poly::MultiPoly;
pub use projective::{Line, Point};
pub use reconstruct::{reconstruct, ReconstructionResult};
pub use scalar::{Ring, Scalar};
