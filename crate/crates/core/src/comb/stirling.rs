use num_traits::{One, Zero};
use serde::Serialize;

use super::coeffs::CoeffTable;
use crate::exactmat::{format_rational, int, Rational};

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(int).product()
}

/// Weighted degenerate Stirling number `S(n, k, lambda | theta)` from
/// `S(0, 0) = 1` and `S(n+1, k) = (k + lambda - theta n) S(n, k) + S(n, k-1)`.
/// Zero outside `0 <= k <= n`.
pub fn stirling_weighted(n: usize, k: usize, lambda: &Rational, theta: &Rational) -> Rational {
    stirling_rows(n, lambda, theta)
        .pop()
        .and_then(|row| row.get(k).cloned())
        .unwrap_or_else(Rational::zero)
}

/// Rows `0..=n` of the recurrence.
pub fn stirling_rows(n: usize, lambda: &Rational, theta: &Rational) -> Vec<Vec<Rational>> {
    let mut rows = vec![vec![Rational::one()]];
    for m in 0..n {
        let prev = &rows[m];
        let shift = lambda - theta * int(m as i64);
        let row = (0..=m + 1)
            .map(|k| {
                let stay = prev
                    .get(k)
                    .map(|s| (int(k as i64) + &shift) * s)
                    .unwrap_or_else(Rational::zero);
                let up = if k > 0 { prev[k - 1].clone() } else { Rational::zero() };
                stay + up
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `sum_{r=0}^{k} (-1)^{k+r} / (r! (k-r)!) prod_{j=0}^{n-1} (lambda + r - j theta)`.
pub fn stirling_explicit(n: usize, k: usize, lambda: &Rational, theta: &Rational) -> Rational {
    let mut sum = Rational::zero();
    for r in 0..=k {
        let prod: Rational = (0..n)
            .map(|j| lambda + int(r as i64) - theta * int(j as i64))
            .product();
        let term = prod / (factorial(r) * factorial(k - r));
        if (k + r).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Checks `c(l, l-k, p) = S(l, k, 0 | theta) (1-p)^{l-k}` for `1 <= l <= lmax`
/// and `0 <= k <= l`.
pub fn bridge_holds(p: u32, lmax: usize, theta: &Rational) -> bool {
    let table = CoeffTable::by_recurrence(p, lmax);
    let rows = stirling_rows(lmax, &Rational::zero(), theta);
    let one_minus_p = int(1 - p as i64);
    (1..=lmax).all(|l| {
        (0..=l).all(|k| {
            let rhs = &rows[l][k] * num_traits::pow(one_minus_p.clone(), l - k);
            table.get(l, l - k) == Some(&rhs)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaCandidate {
    pub label: &'static str,
    pub theta: String,
    pub bridge_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaResolution {
    pub p: u32,
    pub lmax: usize,
    pub candidates: Vec<ThetaCandidate>,
    /// The unique candidate for which the bridge holds, if any.
    pub resolved: Option<String>,
}

/// Tests both `theta = p/(p-1)` and `theta = p/(1-p)` against the bridge
/// identity and reports which one reproduces the recurrence.
pub fn resolve_theta(p: u32, lmax: usize) -> ThetaResolution {
    assert!(p >= 2, "theta needs p >= 2");
    let pi = p as i64;
    let candidates: Vec<ThetaCandidate> = [
        ("p/(p-1)", Rational::new(pi.into(), (pi - 1).into())),
        ("p/(1-p)", Rational::new(pi.into(), (1 - pi).into())),
    ]
    .into_iter()
    .map(|(label, theta)| ThetaCandidate {
        label,
        bridge_holds: bridge_holds(p, lmax, &theta),
        theta: format_rational(&theta),
    })
    .collect();
    let holding: Vec<_> = candidates.iter().filter(|c| c.bridge_holds).collect();
    let resolved = (holding.len() == 1).then(|| holding[0].label.to_string());
    ThetaResolution {
        p,
        lmax,
        candidates,
        resolved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::frac;

    #[test]
    fn base_cases() {
        let (l, t) = (frac(2, 3), frac(-5, 4));
        for n in 0..7 {
            assert_eq!(stirling_weighted(n, n, &l, &t), Rational::one());
            let s2: Rational = (0..n).map(|j| &l - &t * int(j as i64)).product();
            assert_eq!(stirling_weighted(n, 0, &l, &t), s2);
            assert_eq!(stirling_weighted(n, n + 1, &l, &t), Rational::zero());
        }
    }

    #[test]
    fn small_value() {
        let t = frac(7, 3);
        assert_eq!(stirling_weighted(2, 1, &Rational::zero(), &t), int(1) - &t);
        // classical Stirling numbers of the second kind at lambda = theta = 0
        assert_eq!(stirling_weighted(5, 2, &Rational::zero(), &Rational::zero()), int(15));
    }

    #[test]
    fn explicit_matches_recurrence() {
        for (l, t) in [(int(0), int(0)), (frac(1, 2), frac(3, 7)), (int(-2), frac(5, 3))] {
            for n in 0..8 {
                for k in 0..=n {
                    assert_eq!(stirling_weighted(n, k, &l, &t), stirling_explicit(n, k, &l, &t));
                }
            }
        }
    }

    #[test]
    fn theta_resolves_to_p_over_p_minus_one() {
        for p in 2..7 {
            let r = resolve_theta(p, 10);
            assert_eq!(r.resolved.as_deref(), Some("p/(p-1)"), "p={p}");
        }
    }
}
