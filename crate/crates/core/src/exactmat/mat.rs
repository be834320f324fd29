use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
///
/// Values are immutable from the outside: every operation returns a fresh
/// matrix. Both dimensions are at least 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Mat {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::Domain("matrix must have at least one row and column".into()));
        }
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::Shape {
                op: "from_rows",
                lhs: (r, c),
                rhs: (1, bad.len()),
            });
        }
        Ok(Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer literal matrix, mostly for fixtures.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |i, j| int(rows[i][j]))
    }

    pub fn column_vector(v: Vec<Rational>) -> Self {
        assert!(!v.is_empty(), "empty column vector");
        Mat {
            rows: v.len(),
            cols: 1,
            entries: v,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if c == 0 || r == 0 {
            return Err(Error::Domain("need at least one nonempty column".into()));
        }
        if cols.iter().any(|v| v.len() != r) {
            return Err(Error::Domain("columns have different lengths".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at zero-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    /// Copy of `self` with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: Rational) -> Mat {
        let mut m = self.clone();
        *m.get_mut(i, j) = value;
        m
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_strictly_upper(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i + 1)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Mat {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square("trace")?;
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    pub fn checked_add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape("add", other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape("sub", other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn checked_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "mul",
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// `self^k` by repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, k: u32) -> Result<Mat> {
        self.require_square("pow")?;
        let mut result = Mat::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// All powers `self^0 ..= self^max`.
    pub fn powers(&self, max: u32) -> Result<Vec<Mat>> {
        self.require_square("powers")?;
        let mut out = Vec::with_capacity(max as usize + 1);
        out.push(Mat::identity(self.rows));
        for k in 1..=max as usize {
            let next = &out[k - 1] * self;
            out.push(next);
        }
        Ok(out)
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[Mat]) -> Result<Mat> {
        if blocks.is_empty() {
            return Err(Error::Domain("block_diag of no blocks".into()));
        }
        let rows: usize = blocks.iter().map(Mat::rows).sum();
        let cols: usize = blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    *out.get_mut(r0 + i, c0 + j) = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows {
            return Err(Error::Shape {
                op: "hstack",
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        Ok(Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::Shape {
                op: "vstack",
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        Ok(Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        }))
    }

    /// Sub-block with rows `r0..r0+h` and columns `c0..c0+w`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Mat {
        assert!(r0 + h <= self.rows && c0 + w <= self.cols, "block out of range");
        Mat::from_fn(h, w, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Shape {
                op: "mul_vec",
                lhs: self.shape(),
                rhs: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn same_shape(&self, op: &'static str, other: &Mat) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::Shape {
                op,
                lhs: self.shape(),
                rhs: other.shape(),
            })
        }
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(&Rational, &Rational) -> Rational) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<'a> Add for &'a Mat {
    type Output = Mat;
    fn add(self, rhs: &'a Mat) -> Mat {
        self.checked_add(rhs).expect("shape mismatch in +")
    }
}

impl<'a> Sub for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &'a Mat) -> Mat {
        self.checked_sub(rhs).expect("shape mismatch in -")
    }
}

impl<'a> Mul for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &'a Mat) -> Mat {
        self.checked_mul(rhs).expect("shape mismatch in *")
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}{:?}", self.rows, self.cols, self.to_string_rows())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_string_rows();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Mat {
    fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }
}

/// Wire form: `{"rows": n, "cols": m, "entries": [["p/q", ...], ...]}`.
#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl TryFrom<MatrixJson> for Mat {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Mat> {
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(Error::Parse(format!(
                "entries do not form a {}x{} grid",
                j.rows, j.cols
            )));
        }
        let rows = j
            .entries
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Mat::from_rows(rows)
    }
}

impl From<Mat> for MatrixJson {
    fn from(m: Mat) -> Self {
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            entries: m.to_string_rows(),
        }
    }
}
