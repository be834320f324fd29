//! Band recursion for `A = J(n)`.
//!
//! A solution is strictly upper triangular and determined by its first row.
//! Comparing entry `(i, j)` of `XA - AX` and `X^p` gives
//! `x[i][j-1] - x[i+1][j] = (X^p)[i][j]`, which is solved for `x[i+1][j]`
//! band by band (constant `j - i`), rows top-down inside a band. For `p >= 3`
//! the right side only involves earlier bands. For `p = 2` the unknown shows
//! up once more, multiplied by `x[i][i+1]`, so it is divided out by
//! `1 + x[i][i+1]`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::SolutionReport;
use crate::error::{Error, Result};
use crate::exactmat::{format_rational, int, parse_rational, JordanSpec, Mat, Rational};

/// First-row parameters `x_{1,2}, ..., x_{1,n}` for the `J(n)` recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FreeAssignmentJson", into = "FreeAssignmentJson")]
pub struct FreeAssignment {
    n: usize,
    p: u32,
    /// `values[j - 2]` is `x_{1,j}`.
    values: Vec<Rational>,
}

impl FreeAssignment {
    /// `values` keyed by the one-based column `j` in `2..=n`.
    pub fn new(n: usize, p: u32, values: BTreeMap<usize, Rational>) -> Result<Self> {
        let keys: Vec<usize> = values.keys().copied().collect();
        let expected: Vec<usize> = (2..=n).collect();
        if keys != expected {
            return Err(Error::Domain(format!(
                "free values must be given for exactly the indices 2..={n}, got {keys:?}"
            )));
        }
        Self::from_first_row(n, p, values.into_values().collect())
    }

    /// `values = [x_{1,2}, ..., x_{1,n}]`.
    pub fn from_first_row(n: usize, p: u32, values: Vec<Rational>) -> Result<Self> {
        if !(p > 1 && (p as usize) < n) {
            return Err(Error::Domain(format!("need 1 < p < n, got p = {p}, n = {n}")));
        }
        if values.len() != n - 1 {
            return Err(Error::Domain(format!(
                "expected {} free values, got {}",
                n - 1,
                values.len()
            )));
        }
        if p == 2 {
            for k in 1..=n as i64 - 2 {
                let d = Rational::one() + int(k) * &values[0];
                if d.is_zero() {
                    return Err(Error::SingularParameter {
                        denominator: pole_name(k),
                    });
                }
            }
        }
        Ok(FreeAssignment { n, p, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn first_row(&self) -> &[Rational] {
        &self.values
    }

    /// Same first row with every value multiplied by `t`.
    pub fn scaled(&self, t: &Rational) -> Result<Self> {
        Self::from_first_row(self.n, self.p, self.values.iter().map(|v| v * t).collect())
    }
}

fn pole_name(k: i64) -> String {
    format!("1+{k}*x_(1,2)")
}

#[derive(Serialize, Deserialize)]
struct FreeAssignmentJson {
    n: usize,
    p: u32,
    free: BTreeMap<String, String>,
}

impl TryFrom<FreeAssignmentJson> for FreeAssignment {
    type Error = Error;

    fn try_from(j: FreeAssignmentJson) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (k, v) in &j.free {
            let idx: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad free index {k:?}")))?;
            values.insert(idx, parse_rational(v)?);
        }
        FreeAssignment::new(j.n, j.p, values)
    }
}

impl From<FreeAssignment> for FreeAssignmentJson {
    fn from(f: FreeAssignment) -> Self {
        FreeAssignmentJson {
            n: f.n,
            p: f.p,
            free: f
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| ((i + 2).to_string(), format_rational(v)))
                .collect(),
        }
    }
}

/// Entry `(i, j)` of `x^p`, computed as a row-vector product. Entries not yet
/// filled in are zero and do not contribute.
fn power_entry(x: &Mat, p: u32, i: usize, j: usize) -> Rational {
    let n = x.rows();
    let mut row: Vec<Rational> = x.row(i).to_vec();
    for _ in 1..p {
        let mut next = vec![Rational::zero(); n];
        for (k, rk) in row.iter().enumerate() {
            if rk.is_zero() {
                continue;
            }
            for (c, slot) in next.iter_mut().enumerate().skip(k + 1) {
                let xkc = x.get(k, c);
                if !xkc.is_zero() {
                    *slot += rk * xkc;
                }
            }
        }
        row = next;
    }
    row.swap_remove(j)
}

/// The unique solution of `XJ(n) - J(n)X = X^p` with the given first row.
pub fn solve_full_jordan(assign: &FreeAssignment) -> Result<SolutionReport> {
    let (n, p) = (assign.n, assign.p);
    let mut x = Mat::zeros(n, n);
    for (j, v) in assign.values.iter().enumerate() {
        *x.get_mut(0, j + 1) = v.clone();
    }
    for band in 1..n - 1 {
        for i in 0..n - 1 - band {
            let j = i + 1 + band;
            let rhs = power_entry(&x, p, i, j);
            let lhs = x.get(i, j - 1) - rhs;
            let value = if p == 2 {
                let pivot = Rational::one() + x.get(i, i + 1);
                if pivot.is_zero() {
                    return Err(Error::SingularParameter {
                        denominator: pole_name(i as i64 + 1),
                    });
                }
                lhs / pivot
            } else {
                lhs
            };
            *x.get_mut(i + 1, j) = value;
        }
    }
    let report = SolutionReport::new(&JordanSpec::full(n).matrix(), x, p)?;
    if !report.residual_zero() {
        return Err(Error::Internal("band recursion left a nonzero residual".into()));
    }
    Ok(report)
}

/// Bidiagonal solution for `p = 2` with superdiagonal `alpha / (1 + k alpha)`,
/// `k = 0..n-2`.
pub fn x0_special(n: usize, alpha: &Rational) -> Result<Mat> {
    if n < 2 {
        return Err(Error::Domain(format!("x0 needs n >= 2, got {n}")));
    }
    let mut x = Mat::zeros(n, n);
    for k in 0..n - 1 {
        let d = Rational::one() + int(k as i64) * alpha;
        if d.is_zero() {
            return Err(Error::SingularParameter {
                denominator: pole_name(k as i64),
            });
        }
        *x.get_mut(k, k + 1) = alpha / d;
    }
    Ok(x)
}
