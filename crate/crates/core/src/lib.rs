//! Exact invariants of semisimple Hopf algebra actions on connected graded algebras.

#![allow(clippy::needless_range_loop)]

pub mod cpoly;
pub mod divisors;
pub mod hopf;
pub mod input;
pub mod invariants;
pub mod linalg;
pub mod ncalg;
pub mod poly;
pub mod presets;
pub mod scalars;
pub mod series;
pub mod smash;

pub use scalars::Scalar;
