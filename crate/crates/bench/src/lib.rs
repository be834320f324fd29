//! Inputs shared by the benchmarks.

use nilmat::exactmat::{frac, int};
use nilmat::solver::FreeAssignment;
use nilmat::{JordanSpec, Mat};

/// Free values `1, 1/2, 1/3, ...` for `J(n)`.
pub fn harmonic_free(n: usize, p: u32) -> FreeAssignment {
    let values = (1..n as i64).map(|k| frac(1, k)).collect();
    FreeAssignment::from_first_row(n, p, values).expect("no poles for positive x12")
}

/// Dense integer matrix with a fixed pseudo-random pattern.
pub fn dense(n: usize) -> Mat {
    Mat::from_fn(n, n, |i, j| int(((i * 7 + j * 13 + i * j) % 11) as i64 - 5))
}

pub fn two_blocks() -> Mat {
    JordanSpec::from_ints(&[(2, 0), (2, 0)]).expect("valid").matrix()
}
