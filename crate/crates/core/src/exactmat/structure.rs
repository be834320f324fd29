use num_traits::Zero;

use super::elim::{det_bareiss, inverse, kron, nullspace_vectors, rank};
use super::mat::Mat;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanBlock {
    pub size: usize,
    pub eigenvalue: Rational,
}

/// Ordered Jordan blocks `J(size, eigenvalue)` of a canonical-form matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanSpec {
    blocks: Vec<JordanBlock>,
}

impl JordanSpec {
    pub fn new(blocks: Vec<(usize, Rational)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Domain("Jordan spec needs at least one block".into()));
        }
        if blocks.iter().any(|(s, _)| *s == 0) {
            return Err(Error::Domain("Jordan block sizes must be positive".into()));
        }
        Ok(JordanSpec {
            blocks: blocks
                .into_iter()
                .map(|(size, eigenvalue)| JordanBlock { size, eigenvalue })
                .collect(),
        })
    }

    /// Blocks with integer eigenvalues, e.g. `[(2, 0), (2, 1)]`.
    pub fn from_ints(blocks: &[(usize, i64)]) -> Result<Self> {
        Self::new(blocks.iter().map(|&(s, l)| (s, int(l))).collect())
    }

    /// The single block `J(n)`.
    pub fn full(n: usize) -> Self {
        Self::from_ints(&[(n, 0)]).expect("n > 0")
    }

    pub fn blocks(&self) -> &[JordanBlock] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.size).sum()
    }

    /// Distinct eigenvalues in order of first appearance.
    pub fn eigenvalues(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        for b in &self.blocks {
            if !out.contains(&b.eigenvalue) {
                out.push(b.eigenvalue.clone());
            }
        }
        out
    }

    pub fn matrix(&self) -> Mat {
        jordan_matrix(self)
    }
}

/// `J(r, lambda)`: `lambda` on the diagonal, ones on the superdiagonal.
pub fn jordan_block(size: usize, eigenvalue: &Rational) -> Mat {
    Mat::from_fn(size, size, |i, j| {
        if i == j {
            eigenvalue.clone()
        } else if j == i + 1 {
            int(1)
        } else {
            Rational::zero()
        }
    })
}

pub fn jordan_matrix(spec: &JordanSpec) -> Mat {
    let blocks: Vec<Mat> = spec
        .blocks
        .iter()
        .map(|b| jordan_block(b.size, &b.eigenvalue))
        .collect();
    Mat::block_diag(&blocks).expect("spec is nonempty")
}

/// `XA - AX`.
pub fn commutator_xa(x: &Mat, a: &Mat) -> Result<Mat> {
    square_pair("commutator_xa", x, a)?;
    Ok(&(x * a) - &(a * x))
}

pub fn is_nilpotent(x: &Mat) -> Result<bool> {
    x.require_square("is_nilpotent")?;
    Ok(x.pow(x.rows() as u32)?.is_zero())
}

/// Smallest `m >= 1` with `x^m = 0`, if any.
pub fn nilpotency_index(x: &Mat) -> Result<Option<usize>> {
    x.require_square("nilpotency_index")?;
    let mut power = x.clone();
    for m in 1..=x.rows() {
        if power.is_zero() {
            return Ok(Some(m));
        }
        power = &power * x;
    }
    Ok(None)
}

/// Matrix of `S -> S a - a S` acting on row-major `vec(S)`.
fn commutator_operator(a: &Mat) -> Mat {
    let id = Mat::identity(a.rows());
    &kron(&id, &a.transpose()) - &kron(a, &id)
}

/// Whether `XA - AX = X` has a nonzero solution, decided by the singularity of
/// the `n^2 x n^2` matrix of `X -> XA - (A + E) X`.
pub fn sylvester_singular(a: &Mat) -> Result<bool> {
    a.require_square("sylvester_singular")?;
    let n = a.rows();
    let id = Mat::identity(n);
    let shifted = &(a + &id);
    let op = &kron(&id, &a.transpose()) - &kron(shifted, &id);
    Ok(det_bareiss(&op)?.is_zero())
}

/// Basis of the centralizer `{S : SA = AS}`.
pub fn centralizer_basis(a: &Mat) -> Result<Vec<Mat>> {
    a.require_square("centralizer_basis")?;
    let n = a.rows();
    Ok(nullspace_vectors(&commutator_operator(a))
        .into_iter()
        .map(|v| Mat::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect())
}

/// `S X S^{-1}`.
pub fn conjugate(s: &Mat, x: &Mat) -> Result<Mat> {
    square_pair("conjugate", s, x)?;
    if rank(s) < s.rows() {
        return Err(Error::Singular);
    }
    let s_inv = inverse(s)?;
    Ok(&(s * x) * &s_inv)
}

/// Linear combination `sum c_i m_i` of equally shaped matrices.
pub fn combine(coeffs: &[Rational], mats: &[Mat]) -> Mat {
    assert_eq!(coeffs.len(), mats.len());
    assert!(!mats.is_empty());
    let (r, c) = mats[0].shape();
    mats.iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(Mat::zeros(r, c), |acc, (m, k)| &acc + &m.scale(k))
}

pub(crate) fn square_pair(op: &'static str, x: &Mat, a: &Mat) -> Result<()> {
    x.require_square(op)?;
    if x.shape() != a.shape() {
        return Err(Error::Shape {
            op,
            lhs: x.shape(),
            rhs: a.shape(),
        });
    }
    Ok(())
}
