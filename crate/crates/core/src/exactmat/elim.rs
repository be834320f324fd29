//! Exact Gauss-Jordan elimination, fraction-free determinants and the
//! Kronecker product.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::mat::Mat;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced row-echelon form and the pivot columns, in increasing order.
pub fn rref(a: &Mat) -> (Mat, Vec<usize>) {
    let (rows, cols) = a.shape();
    let mut m = a.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Mat::from_rows(m).expect("rref keeps the shape"), pivots)
}

pub fn rank(a: &Mat) -> usize {
    rref(a).1.len()
}

/// Basis of `{v : a v = 0}` as column vectors, one per free column.
pub fn nullspace(a: &Mat) -> Vec<Mat> {
    nullspace_vectors(a).into_iter().map(Mat::column_vector).collect()
}

pub(crate) fn nullspace_vectors(a: &Mat) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(a);
    let cols = a.cols();
    let free = (0..cols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, f).clone();
        }
        v
    })
    .collect()
}

/// Rank of the span of a list of vectors of equal length.
pub fn span_rank(vectors: &[Vec<Rational>]) -> usize {
    match Mat::from_columns(vectors) {
        Ok(m) => rank(&m),
        Err(_) => 0,
    }
}

pub fn inverse(a: &Mat) -> Result<Mat> {
    a.require_square("inverse")?;
    let n = a.rows();
    let (r, pivots) = rref(&a.hstack(&Mat::identity(n))?);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(r.block(0, n, n, n))
}

/// Determinant by Bareiss elimination. Each row is first scaled to integers
/// by the lcm of its denominators, which multiplies the determinant by the
/// product of those scales.
pub fn det_bareiss(a: &Mat) -> Result<Rational> {
    a.require_square("det")?;
    let n = a.rows();
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let l = a
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &l;
            a.row(i)
                .iter()
                .map(|q| q.numer() * (&l / q.denom()))
                .collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's identity
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(Rational::new(sign * &m[n - 1][n - 1], scale))
}

/// Kronecker product: block `(i, j)` is `a[i][j] * b`.
pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (br, bc) = b.shape();
    Mat::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        let x = a.get(i / br, j / bc);
        if x.is_zero() {
            Rational::zero()
        } else {
            x * b.get(i % br, j % bc)
        }
    })
}

/// Characteristic polynomial coefficients `[c_0, ..., c_{n-1}, 1]` of
/// `det(tE - a)`, by Faddeev-LeVerrier.
pub fn char_poly(a: &Mat) -> Result<Vec<Rational>> {
    a.require_square("char_poly")?;
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    // am holds A * M_{k-1}; M_k = A * M_{k-1} + c_{n-k+1} E
    let mut am = Mat::zeros(n, n);
    for k in 1..=n {
        let m = &am + &Mat::identity(n).scale(&coeffs[n - k + 1]);
        am = a * &m;
        coeffs[n - k] = -am.trace()? / Rational::from_integer(BigInt::from(k));
    }
    Ok(coeffs)
}
