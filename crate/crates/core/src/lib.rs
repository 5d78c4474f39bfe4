//! Exact Seifert-matrix computations for satellite and cable knots.
//!
//! The crate builds Seifert matrices of satellites, produces machine-checked
//! Alexander-trivial block certificates for them, and turns signatures,
//! branched-cover homology and Alexander-polynomial degrees into verified
//! intervals for the topological 4-genus, the Z-slice genus, the algebraic
//! genus and the 3-genus. All arithmetic is exact.

pub mod bounds;
pub mod error;
pub mod exactalg;
pub mod invariants;
pub mod oracles;
pub mod samples;
pub mod satellite;
pub mod seifert;

pub use error::{Error, Result};
pub use exactalg::{IntMatrix, IntPoly, LaurentPoly, RatMatrix, UnitCirclePoint};
pub use seifert::{AbelianGroup, SeifertMatrix, TrivialBlockCertificate};
pub use satellite::Pattern;
