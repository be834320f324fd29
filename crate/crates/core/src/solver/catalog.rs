//! Representative solution families for `A = diag(J(2), J(2))`, up to
//! conjugation by the centralizer of `A`.

use num_traits::Zero;
use serde::Serialize;

use super::residual;
use crate::error::{Error, Result};
use crate::exactmat::{format_rational, frac, int, one, zero, JordanSpec, Mat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CatalogExponent {
    P2,
    P3,
}

impl CatalogExponent {
    pub fn p(self) -> u32 {
        match self {
            CatalogExponent::P2 => 2,
            CatalogExponent::P3 => 3,
        }
    }

    /// Family names with their number of parameters.
    pub fn families(self) -> &'static [(&'static str, usize)] {
        match self {
            CatalogExponent::P2 => &[("X1", 0), ("X2", 0), ("X3", 1), ("X4", 2), ("X5", 1)],
            CatalogExponent::P3 => &[("X1", 2), ("X2", 1), ("X3", 2), ("X4", 1)],
        }
    }
}

fn grid(rows: [[Rational; 4]; 4]) -> Mat {
    Mat::from_rows(rows.into_iter().map(Vec::from).collect()).expect("4x4")
}

/// Instantiates a family; unused parameters are ignored.
pub fn catalog_family(which: CatalogExponent, family: &str, alpha: &Rational, beta: &Rational) -> Result<Mat> {
    let (o, i, a, b) = (zero(), one(), alpha.clone(), beta.clone());
    let m = match (which, family) {
        (CatalogExponent::P2, "X1") => grid([
            [o.clone(), -i.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), i.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), i.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
        ]),
        (CatalogExponent::P2, "X2") => grid([
            [o.clone(), -i.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), i.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
        ]),
        (CatalogExponent::P2, "X3") => grid([
            [o.clone(), o.clone(), i.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), a.clone()],
            [o.clone(), o.clone(), o.clone(), &i - &a],
            [o.clone(), o.clone(), o.clone(), o.clone()],
        ]),
        (CatalogExponent::P2, "X4") | (CatalogExponent::P3, "X3") => grid([
            [o.clone(), a.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), b.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
        ]),
        (CatalogExponent::P2, "X5") | (CatalogExponent::P3, "X4") => grid([
            [o.clone(), a.clone(), o.clone(), i.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), a.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
        ]),
        (CatalogExponent::P3, "X1") => {
            if a.is_zero() || b.is_zero() {
                return Err(Error::SingularParameter {
                    denominator: "alpha*beta".into(),
                });
            }
            let corner = (&a - &b) / (&a * &b);
            grid([
                [o.clone(), o.clone(), a.clone(), o.clone()],
                [o.clone(), o.clone(), o.clone(), b.clone()],
                [o.clone(), corner, o.clone(), o.clone()],
                [o.clone(), o.clone(), o.clone(), o.clone()],
            ])
        }
        (CatalogExponent::P3, "X2") => grid([
            [o.clone(), a.clone(), i.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), i.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), o.clone()],
        ]),
        _ => return Err(Error::Domain(format!("unknown family {family} for {which:?}"))),
    };
    Ok(m)
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub family: &'static str,
    #[serde(with = "crate::exactmat::serde_vec")]
    pub params: Vec<Rational>,
    pub residual_zero: bool,
    /// `X^3 != 0`, recorded for the two-parameter `p = 3` family only.
    pub cube_nonzero: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub exponent: CatalogExponent,
    pub entries: Vec<CatalogEntry>,
}

/// Parameter samples: all nonzero, pairwise `alpha != beta`.
fn samples() -> Vec<(Rational, Rational)> {
    vec![
        (int(1), int(2)),
        (int(2), frac(-1, 3)),
        (frac(-3, 4), int(5)),
        (frac(7, 2), frac(2, 7)),
    ]
}

/// Instantiates every family at several parameter values and checks the
/// residual against `A = diag(J(2), J(2))`.
pub fn verify_catalog_families(which: CatalogExponent) -> Result<CatalogReport> {
    let a = JordanSpec::from_ints(&[(2, 0), (2, 0)])?.matrix();
    let p = which.p();
    let mut entries = Vec::new();
    for &(family, arity) in which.families() {
        let mut points = if arity == 0 {
            vec![(zero(), zero())]
        } else {
            samples()
        };
        if which == CatalogExponent::P2 && family == "X4" {
            points.push((zero(), zero()));
        }
        for (alpha, beta) in points {
            let x = catalog_family(which, family, &alpha, &beta)?;
            let params: Vec<Rational> = [alpha.clone(), beta.clone()].into_iter().take(arity).collect();
            let residual_zero = residual(&a, &x, p)?.is_zero();
            let cube_nonzero = (which == CatalogExponent::P3 && family == "X1").then(|| !x.pow(3).unwrap().is_zero());
            let params_str = params.iter().map(format_rational).collect::<Vec<_>>().join(",");
            if !residual_zero {
                return Err(Error::CatalogFailure {
                    family: family.into(),
                    params: params_str,
                });
            }
            if cube_nonzero == Some(false) && alpha != beta {
                return Err(Error::CatalogFailure {
                    family: format!("{family} (X^3 = 0 with alpha != beta)"),
                    params: params_str,
                });
            }
            entries.push(CatalogEntry {
                family,
                params,
                residual_zero,
                cube_nonzero,
            });
        }
    }
    Ok(CatalogReport { exponent: which, entries })
}
