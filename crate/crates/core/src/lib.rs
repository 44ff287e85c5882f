//! Unique expansions in non-integer bases, the thresholds at which periodic
//! unique expansions first appear, and their link to trapezoid maps.

pub mod algebraic;
pub mod error;
pub mod oracle;
pub mod expansions;
pub mod poly;
pub mod seq;
pub mod thresholds;
pub mod trapezoid;
pub mod verify;
pub mod words;

pub use algebraic::AlgebraicReal;
pub use error::{Error, Result};
pub use expansions::{BetaValue, FiniteFlag, GreedyExpansion};
pub use poly::{IntPolynomial, Rational};
pub use words::{BinaryWord, PeriodicSeq};
