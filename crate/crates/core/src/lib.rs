//! Exact certification of lower bounds for Hilbert-Kunz multiplicities.
//!
//! Everything is computed with arbitrary-precision rationals:
//!
//! - [`slab`]: volumes `v_s` of hypercube slabs, pointwise and piecewise.
//! - [`zigzag`]: the coefficients `m_d` of `sec + tan` and thresholds `1 + m_d`.
//! - [`bounds`]: volume, duality, quadric, interval and radical-extension bounds.
//! - [`monomial`]: Frobenius colengths of monomial ideals by lattice counting.
//! - [`tables`] and [`report`]: table re-verification and report output.
//!
//! ```
//! use hilbert_kunz::{bounds::{wy_volume_bound, BoundQuery}, Rational};
//!
//! let q = BoundQuery::uniform(7, 5u64, 3, "3.32".parse().unwrap()).unwrap();
//! assert!(wy_volume_bound(&q) > "1.112".parse::<Rational>().unwrap());
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod monomial;
pub mod poly;
pub mod rational;
pub mod report;
pub mod slab;
pub mod tables;
pub mod zigzag;

pub use error::{Error, Result};
pub use poly::RationalPolynomial;
pub use rational::Rational;
