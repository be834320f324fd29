use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{format_rational, int, Rational};

/// Dense univariate polynomial in `p`, coefficients in ascending degree,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn product(factors: &[Poly]) -> Poly {
        factors
            .iter()
            .fold(Poly::new(vec![Rational::one()]), |acc, f| acc.mul(f))
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
        let mut acc = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Poly::new(vec![Rational::one()]);
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                if xi == xj {
                    return Err(Error::Domain("interpolation nodes must be distinct".into()));
                }
                basis = basis.mul(&Poly::new(vec![-xj.clone(), Rational::one()]));
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, c) in basis.coeffs.iter().enumerate() {
                acc[k] += c * &scale;
            }
        }
        Ok(Poly::new(acc))
    }
}

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `36p^2+70p+31`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, "-")?,
                (false, false) => write!(f, "+")?,
                (true, false) => {}
            }
            first = false;
            let body = match d {
                0 => format_rational(&mag),
                _ if mag.is_one() => String::new(),
                _ => format_rational(&mag),
            };
            let var = match d {
                0 => String::new(),
                1 => "p".to_string(),
                _ => format!("p^{d}"),
            };
            write!(f, "{body}{var}")?;
        }
        Ok(())
    }
}
