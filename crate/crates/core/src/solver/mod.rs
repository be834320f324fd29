//! Constructing and checking solutions of `XA - AX = X^p`.

mod band;
mod catalog;
mod existence;
mod normalize;
mod structure;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::exactmat::{commutator_xa, nilpotency_index, Mat};

pub use band::{solve_full_jordan, x0_special, FreeAssignment};
pub use catalog::{catalog_family, verify_catalog_families, CatalogEntry, CatalogExponent, CatalogReport};
pub use existence::{has_only_trivial_solution, nontrivial_witness};
pub use normalize::normalize_to_x0;
pub use structure::{
    check_block_split, check_combination_nilpotency, check_generalized_eigenspace_invariance, subspace_is_invariant,
};

/// `XA - AX - X^p`; zero exactly when `x` solves the equation.
pub fn residual(a: &Mat, x: &Mat, p: u32) -> Result<Mat> {
    let comm = commutator_xa(x, a)?;
    Ok(&comm - &x.pow(p)?)
}

pub fn is_solution(a: &Mat, x: &Mat, p: u32) -> Result<bool> {
    Ok(residual(a, x, p)?.is_zero())
}

/// A candidate solution together with its verification data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub x: Mat,
    pub residual: Mat,
    /// Smallest `m` with `x^m = 0`, or `None` if `x` is not nilpotent.
    pub nilpotency_index: Option<usize>,
    pub strictly_upper: bool,
}

impl SolutionReport {
    pub fn new(a: &Mat, x: Mat, p: u32) -> Result<Self> {
        let residual = residual(a, &x, p)?;
        let nilpotency_index = nilpotency_index(&x)?;
        let strictly_upper = x.is_strictly_upper();
        Ok(SolutionReport {
            x,
            residual,
            nilpotency_index,
            strictly_upper,
        })
    }

    pub fn residual_zero(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Serialize)]
struct SolutionReportJson<'a> {
    x: &'a Mat,
    residual_zero: bool,
    nilpotency_index: Option<usize>,
    strictly_upper: bool,
}

impl Serialize for SolutionReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SolutionReportJson {
            x: &self.x,
            residual_zero: self.residual_zero(),
            nilpotency_index: self.nilpotency_index,
            strictly_upper: self.strictly_upper,
        }
        .serialize(s)
    }
}
