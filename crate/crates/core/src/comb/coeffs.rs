use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::Rational;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn factorial(n: usize) -> BigInt {
    (1..=n as i64).map(BigInt::from).product()
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `a_l(k) = prod_{j<k} (l + j (p - 1))`, the coefficients of `X^l A^m`.
pub fn a_coeff(l: usize, k: usize, p: u32) -> BigInt {
    (0..k)
        .map(|j| big(l as i64 + j as i64 * (p as i64 - 1)))
        .product()
}

/// `k! * C(l + k - 1, l - 1)`, equal to `a_coeff(l, k, 2)`.
pub fn a_coeff_p2_binomial(l: usize, k: usize) -> BigInt {
    assert!(l >= 1);
    factorial(k) * binom(l + k - 1, l - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoeffSource {
    Recurrence,
    ClosedForm,
}

/// Rows `l = 1..=lmax` of `c(l, k, p)` for `0 <= k <= l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub p: u32,
    pub lmax: usize,
    pub source: CoeffSource,
    values: Vec<Vec<Rational>>,
}

impl CoeffTable {
    /// `c(l, 0) = 1`, `c(l, l) = 0`,
    /// `c(l + 1, k) = c(l, k) + [l + (p - 1)(k - 1)] c(l, k - 1)`.
    pub fn by_recurrence(p: u32, lmax: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(lmax);
        if lmax >= 1 {
            rows.push(vec![BigInt::one(), BigInt::zero()]);
        }
        for l in 1..lmax {
            let prev = &rows[l - 1];
            let mut row = vec![BigInt::one()];
            for k in 1..l {
                let w = big(l as i64 + (p as i64 - 1) * (k as i64 - 1));
                row.push(&prev[k] + w * &prev[k - 1]);
            }
            // k = l: c(l, l) = 0 contributes nothing
            row.push(big(l as i64 + (p as i64 - 1) * (l as i64 - 1)) * &prev[l - 1]);
            row.push(BigInt::zero());
            rows.push(row);
        }
        CoeffTable {
            p,
            lmax,
            source: CoeffSource::Recurrence,
            values: rows
                .into_iter()
                .map(|r| r.into_iter().map(Rational::from_integer).collect())
                .collect(),
        }
    }

    /// Same shape, filled from the closed form; `c(l, l) = 0` by definition.
    pub fn by_closed_form(p: u32, lmax: usize) -> Result<Self> {
        let values = (1..=lmax)
            .map(|l| {
                (0..=l)
                    .map(|k| if k == l { Ok(Rational::zero()) } else { c_coeff_closed(l, k, p) })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoeffTable {
            p,
            lmax,
            source: CoeffSource::ClosedForm,
            values,
        })
    }

    pub fn get(&self, l: usize, k: usize) -> Option<&Rational> {
        self.values.get(l.checked_sub(1)?)?.get(k)
    }

    /// `(l, k, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.values
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(k, v)| (i + 1, k, v)))
    }

    pub fn all_integral(&self) -> bool {
        self.entries().all(|(_, _, v)| v.is_integer())
    }
}

/// `c(l, k, p)` from the recurrence.
pub fn c_coeff_rec(l: usize, k: usize, p: u32) -> Result<BigInt> {
    if l == 0 || k > l {
        return Err(Error::Domain(format!("c(l, k) needs 1 <= l and 0 <= k <= l, got ({l}, {k})")));
    }
    let t = CoeffTable::by_recurrence(p, l);
    Ok(t.get(l, k).expect("in range").numer().clone())
}

/// `(p-1)^{k-l+1} sum_{r=1}^{l-k} (-1)^{r-1} / ((r-1)! (l-k-r)!)
///   prod_{j=1}^{l-1} [p j + (1-p) r]`.
pub fn c_coeff_closed(l: usize, k: usize, p: u32) -> Result<Rational> {
    if l == 0 || k >= l || p < 2 {
        return Err(Error::Domain(format!(
            "closed form needs l >= 1, 0 <= k <= l-1, p >= 2; got ({l}, {k}, {p})"
        )));
    }
    let (pi, li, ki) = (p as i64, l as i64, k as i64);
    let mut sum = Rational::zero();
    for r in 1..=(l - k) {
        let ri = r as i64;
        let prod: BigInt = (1..li).map(|j| big(pi * j + (1 - pi) * ri)).product();
        let denom = factorial(r - 1) * factorial(l - k - r);
        let term = Rational::new(prod, denom);
        if r % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let base = Rational::from_integer(big(pi - 1));
    let e = ki - li + 1;
    let scale = if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    };
    Ok(sum * scale)
}

/// `C(l + k - 1, 2k) * prod_{j=1}^{k} (2j - 1)`, the `p = 2` closed form.
pub fn c_coeff_p2(l: usize, k: usize) -> Result<BigInt> {
    if l == 0 || k >= l {
        return Err(Error::Domain(format!("need l >= 1 and k <= l-1, got ({l}, {k})")));
    }
    let odd: BigInt = (1..=k as i64).map(|j| big(2 * j - 1)).product();
    Ok(binom(l + k - 1, 2 * k) * odd)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormDiscrepancy {
    pub l: usize,
    pub k: usize,
    pub p: u32,
    pub recurrence: String,
    pub closed_form: String,
}

/// All `(l, k, p)` where the closed form disagrees with the recurrence,
/// ordered by `(l, k, p)` so the first one is a minimal counterexample.
pub fn closed_form_discrepancies(lmax: usize, ps: &[u32]) -> Result<Vec<ClosedFormDiscrepancy>> {
    let mut out = Vec::new();
    for &p in ps {
        let rec = CoeffTable::by_recurrence(p, lmax);
        let closed = CoeffTable::by_closed_form(p, lmax)?;
        for ((l, k, r), (_, _, c)) in rec.entries().zip(closed.entries()) {
            if r != c {
                out.push(ClosedFormDiscrepancy {
                    l,
                    k,
                    p,
                    recurrence: crate::exactmat::format_rational(r),
                    closed_form: crate::exactmat::format_rational(c),
                });
            }
        }
    }
    out.sort_by_key(|d| (d.l, d.k, d.p));
    Ok(out)
}

/// `c(l, 1)`, `c(l, 2)` and `c(l, l - 1)` from their closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValues {
    pub c1: BigInt,
    pub c2: BigInt,
    pub c_last: BigInt,
}

pub fn special_c_values(l: usize, p: u32) -> Result<SpecialValues> {
    if l < 2 {
        return Err(Error::Domain(format!("special values need l >= 2, got {l}")));
    }
    let (li, pi) = (l as i64, p as i64);
    let c1 = big(li * (li - 1) / 2);
    let c2_num = big(li * (li - 1) * (li - 2)) * big(3 * li + 4 * pi - 5);
    if !(&c2_num % big(24)).is_zero() {
        return Err(Error::Internal("c(l, 2) closed form is not integral".into()));
    }
    let c2 = c2_num / big(24);
    let c_last = (1..=li - 2).map(|j| big(1 + j * pi)).product();
    Ok(SpecialValues { c1, c2, c_last })
}

/// Whether the special closed forms agree with the recurrence.
pub fn special_values_agree(l: usize, p: u32) -> Result<bool> {
    let s = special_c_values(l, p)?;
    Ok(s.c1 == c_coeff_rec(l, 1, p)?
        && s.c2 == c_coeff_rec(l, 2.min(l), p)?
        && s.c_last == c_coeff_rec(l, l - 1, p)?)
}

pub(crate) fn signed_binomial_term(j: usize, a: BigInt, s: usize) -> BigInt {
    let v = a * binom(s, j);
    if j % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `b_j = (-1)^j a_l(j) C(s, j)`, `j = 0..=s`: the coefficients of
/// `A^s X^l = sum_j b_j X^{l + j(p-1)} A^{s-j}`.
pub fn b_coeffs(p: u32, l: usize, s: usize) -> Vec<BigInt> {
    (0..=s)
        .map(|j| signed_binomial_term(j, a_coeff(l, j, p), s))
        .collect()
}

pub(crate) fn binom_big(n: usize, k: usize) -> BigInt {
    binom(n, k)
}

pub(crate) fn is_negative(b: &BigInt) -> bool {
    b.is_negative()
}
