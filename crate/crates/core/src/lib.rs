//! Exact classification of numerical semigroup rings `k[[H]]` by the rank of
//! the Sally module of their canonical ideal: Gorenstein (rank 0), almost
//! Gorenstein (rank 1), 2-almost Gorenstein (rank 2) and beyond.
//!
//! Everything is computed at the level of exponent sets. Monomial fractional
//! ideals of `k[[H]]` are [`RelativeIdeal`]s, products are sumsets, colons are
//! set colons and lengths are exponent counts.

mod bits;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod families;
pub mod threegen;
pub mod ideal;
pub mod semigroup;

pub use classify::{Classification, InvariantDossier};
pub use error::{Error, Result};
pub use ideal::{canonical_ideal, RelativeIdeal};
pub use semigroup::NumericalSemigroup;
