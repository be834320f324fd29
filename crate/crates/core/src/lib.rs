//! Exact construction and verification of matrix solutions of
//! `XA - AX = X^p`, including the `p = 2` Riccati pathway through Jordan
//! chains and the coefficient families that appear when commuting powers of
//! `A` and `X`.

pub mod comb;
pub mod error;
pub mod exactmat;
pub mod golden;
pub mod riccati;
pub mod solver;

pub use error::{Error, Result};
pub use exactmat::{JordanSpec, Mat, Rational};
