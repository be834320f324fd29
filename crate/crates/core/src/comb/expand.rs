//! Brute-force checks of the commutation expansions on concrete solutions
//! of `XA - AX = X^p`.

use num_bigint::BigInt;
use serde::Serialize;

use super::coeffs::{a_coeff, binom_big, is_negative, CoeffTable};
use crate::error::{Error, Result};
use crate::exactmat::{format_rational, one, JordanSpec, Mat, Rational};
use crate::solver::{residual, solve_full_jordan, FreeAssignment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// `X^l A^m = sum_k a_l(k) C(m,k) A^{m-k} X^{l+k(p-1)}`
    XlAm,
    /// `A^m X^l = sum_k (-1)^k a_l(k) C(m,k) X^{l+k(p-1)} A^{m-k}`
    AmXl,
    /// `(AX)^l = sum_{k<l} c(l,k) A^{l-k} X^{l+k(p-1)}`
    AxPower,
    /// `X^l A = A X^l + l X^{l+p-1}`
    XlA,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryDifference {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionReport {
    pub identity: Identity,
    pub l: usize,
    pub m: usize,
    pub p: u32,
    pub n: usize,
    pub equal: bool,
    pub first_difference: Option<EntryDifference>,
}

fn compare(identity: Identity, l: usize, m: usize, p: u32, lhs: &Mat, rhs: &Mat) -> ExpansionReport {
    let n = lhs.rows();
    let first_difference = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| lhs.get(i, j) != rhs.get(i, j))
        .map(|(row, col)| EntryDifference {
            row,
            col,
            lhs: format_rational(lhs.get(row, col)),
            rhs: format_rational(rhs.get(row, col)),
        });
    ExpansionReport {
        identity,
        l,
        m,
        p,
        n,
        equal: first_difference.is_none(),
        first_difference,
    }
}

/// `x^0, ..., x^max`.
struct Powers {
    list: Vec<Mat>,
}

impl Powers {
    fn new(x: &Mat, max: usize) -> Result<Self> {
        Ok(Powers {
            list: x.powers(max as u32)?,
        })
    }

    fn get(&self, k: usize) -> &Mat {
        &self.list[k]
    }
}

fn big_scale(m: &Mat, c: &BigInt) -> Mat {
    m.scale(&Rational::from_integer(c.clone()))
}

fn require_pair(a: &Mat, x: &Mat, p: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::Domain(format!("need p >= 2, got {p}")));
    }
    if !residual(a, x, p)?.is_zero() {
        return Err(Error::NotASolution { p });
    }
    Ok(())
}

pub fn check_xl_am(a: &Mat, x: &Mat, l: usize, m: usize, p: u32) -> Result<ExpansionReport> {
    require_pair(a, x, p)?;
    let step = p as usize - 1;
    let xp = Powers::new(x, l + m * step)?;
    let ap = Powers::new(a, m)?;
    let lhs = xp.get(l) * ap.get(m);
    let mut rhs = Mat::zeros(a.rows(), a.rows());
    for k in 0..=m {
        let c = a_coeff(l, k, p) * binom_big(m, k);
        rhs = &rhs + &big_scale(&(ap.get(m - k) * xp.get(l + k * step)), &c);
    }
    Ok(compare(Identity::XlAm, l, m, p, &lhs, &rhs))
}

pub fn check_am_xl(a: &Mat, x: &Mat, l: usize, m: usize, p: u32) -> Result<ExpansionReport> {
    require_pair(a, x, p)?;
    let step = p as usize - 1;
    let xp = Powers::new(x, l + m * step)?;
    let ap = Powers::new(a, m)?;
    let lhs = ap.get(m) * xp.get(l);
    let mut rhs = Mat::zeros(a.rows(), a.rows());
    for (k, b) in super::coeffs::b_coeffs(p, l, m).iter().enumerate() {
        rhs = &rhs + &big_scale(&(xp.get(l + k * step) * ap.get(m - k)), b);
    }
    Ok(compare(Identity::AmXl, l, m, p, &lhs, &rhs))
}

pub fn check_ax_power(a: &Mat, x: &Mat, l: usize, p: u32) -> Result<ExpansionReport> {
    if l == 0 {
        return Err(Error::Domain("(AX)^l needs l >= 1".into()));
    }
    require_pair(a, x, p)?;
    let step = p as usize - 1;
    let xp = Powers::new(x, l + (l - 1) * step)?;
    let ap = Powers::new(a, l)?;
    let lhs = (a * x).pow(l as u32)?;
    let table = CoeffTable::by_recurrence(p, l);
    let mut rhs = Mat::zeros(a.rows(), a.rows());
    for k in 0..l {
        let c = table.get(l, k).expect("in range");
        rhs = &rhs + &(ap.get(l - k) * xp.get(l + k * step)).scale(c);
    }
    Ok(compare(Identity::AxPower, l, 0, p, &lhs, &rhs))
}

pub fn check_xl_a(a: &Mat, x: &Mat, l: usize, p: u32) -> Result<ExpansionReport> {
    require_pair(a, x, p)?;
    let xl = x.pow(l as u32)?;
    let lhs = &xl * a;
    let tail = x.pow((l + p as usize - 1) as u32)?;
    let rhs = &(a * &xl) + &tail.scale(&Rational::from_integer((l as i64).into()));
    Ok(compare(Identity::XlA, l, 1, p, &lhs, &rhs))
}

/// `A = J(n)` and the solution with every free parameter equal to 1.
pub fn generic_solution(p: u32, n: usize) -> Result<(Mat, Mat)> {
    let f = FreeAssignment::from_first_row(n, p, vec![one(); n - 1])?;
    let x = solve_full_jordan(&f)?.x;
    Ok((JordanSpec::full(n).matrix(), x))
}

pub fn expand_xl_am(l: usize, m: usize, p: u32, n: usize) -> Result<ExpansionReport> {
    let (a, x) = generic_solution(p, n)?;
    check_xl_am(&a, &x, l, m, p)
}

pub fn expand_am_xl(l: usize, m: usize, p: u32, n: usize) -> Result<ExpansionReport> {
    let (a, x) = generic_solution(p, n)?;
    check_am_xl(&a, &x, l, m, p)
}

pub fn expand_ax_l(l: usize, p: u32, n: usize) -> Result<ExpansionReport> {
    let (a, x) = generic_solution(p, n)?;
    check_ax_power(&a, &x, l, p)
}

/// `top + 2` clamped to `[p + 1, cap]`.
pub fn expansion_dim(top: usize, p: u32, cap: usize) -> usize {
    (top + 2).min(cap).max(p as usize + 1)
}

/// Signs of the `b_j` alternate, starting positive.
pub fn b_signs_alternate(b: &[BigInt]) -> bool {
    b.iter().enumerate().all(|(j, v)| is_negative(v) == (j % 2 == 1))
}
