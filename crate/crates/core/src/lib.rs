//! Exact character polynomials for families of symmetric-group
//! representations: symmetric and exterior powers, Weyl modules restricted to
//! `S_n`, and Specht modules, together with their moments and the stable
//! restriction and Kronecker coefficients they determine.

pub mod charpoly;
pub mod cli;
pub mod error;
pub mod moments;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod reference;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use poly::{BinomialExpansion, Monomial, Polynomial};
pub use rational::Rational;
