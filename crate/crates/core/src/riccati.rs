//! The `p = 2` case through the Riccati linearization.
//!
//! `X` solves `XA - AX = X^2` iff the graph `im [E; X]` is invariant under
//! `T = [[A, -E], [0, A]]`. Invariant subspaces are spanned by Jordan chains
//! of `T`; choosing `n` chain vectors `[y_i; z_i]` with invertible
//! `Y = [y_1 .. y_n]` yields the solution `X = Z Y^{-1}`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::{
    format_rational, inverse, nullspace_vectors, parse_rational, rank, span_rank, zero, Mat,
    Rational,
};
use crate::solver::residual;

pub type Vector = Vec<Rational>;

/// Jordan chains `(x_1, .., x_r)` of one eigenvalue:
/// `(T - lambda E) x_1 = 0`, `(T - lambda E) x_k = x_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ChainSetJson", into = "ChainSetJson")]
pub struct ChainSet {
    pub eigenvalue: Rational,
    pub chains: Vec<Vec<Vector>>,
}

impl ChainSet {
    pub fn vectors(&self) -> impl Iterator<Item = &Vector> {
        self.chains.iter().flatten()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ChainSetJson {
    eigenvalue: String,
    chains: Vec<Vec<Vec<String>>>,
}

impl TryFrom<ChainSetJson> for ChainSet {
    type Error = Error;

    fn try_from(j: ChainSetJson) -> Result<Self> {
        let chains = j
            .chains
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| v.iter().map(|s| parse_rational(s)).collect::<Result<Vector>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainSet {
            eigenvalue: parse_rational(&j.eigenvalue)?,
            chains,
        })
    }
}

impl From<ChainSet> for ChainSetJson {
    fn from(c: ChainSet) -> Self {
        ChainSetJson {
            eigenvalue: format_rational(&c.eigenvalue),
            chains: c
                .chains
                .iter()
                .map(|ch| ch.iter().map(|v| v.iter().map(format_rational).collect()).collect())
                .collect(),
        }
    }
}

/// `[[A, -E], [0, A]]`.
pub fn build_t(a: &Mat) -> Result<Mat> {
    a.require_square("build_t")?;
    let n = a.rows();
    let top = a.hstack(&-&Mat::identity(n))?;
    let bottom = Mat::zeros(n, n).hstack(a)?;
    top.vstack(&bottom)
}

/// Whether `im [E; X]` is `T`-invariant.
pub fn graph_is_invariant(a: &Mat, x: &Mat) -> Result<bool> {
    crate::exactmat::square_pair("graph_is_invariant", x, a)?;
    let n = a.rows();
    let graph = Mat::identity(n).vstack(x)?;
    let image = &build_t(a)? * &graph;
    Ok(rank(&graph.hstack(&image)?) == n)
}

/// Full Jordan-chain basis of a nilpotent `t` by kernel filtration.
///
/// Working down from the top level `k = m` (the nilpotency index), vectors of
/// `ker t^k` are taken greedily, in the order of the kernel basis, whenever
/// they are independent of `ker t^{k-1}` plus the images of chains already
/// started above. Each one starts a chain of length `k`.
pub fn jordan_chains_nilpotent(t: &Mat) -> Result<ChainSet> {
    t.require_square("jordan_chains_nilpotent")?;
    let dim = t.rows();
    let powers = t.powers(dim as u32)?;
    let Some(m) = (1..=dim).find(|&k| powers[k].is_zero()) else {
        return Err(Error::Domain(
            "matrix is not nilpotent; only eigenvalue 0 is supported".into(),
        ));
    };
    let kernels: Vec<Vec<Vector>> = (0..=m)
        .map(|k| if k == 0 { Vec::new() } else { nullspace_vectors(&powers[k]) })
        .collect();

    let mut chains = Vec::new();
    let mut carried: Vec<Vector> = Vec::new();
    for k in (1..=m).rev() {
        let mut span: Vec<Vector> = kernels[k - 1].iter().chain(&carried).cloned().collect();
        let mut current_rank = span_rank(&span);
        let mut starts = Vec::new();
        for cand in &kernels[k] {
            span.push(cand.clone());
            let r = span_rank(&span);
            if r > current_rank {
                current_rank = r;
                starts.push(cand.clone());
            } else {
                span.pop();
            }
        }
        for top in &starts {
            let mut chain = vec![top.clone()];
            for _ in 1..k {
                let next = t.mul_vec(chain.last().expect("nonempty"))?;
                chain.push(next);
            }
            chain.reverse();
            chains.push(chain);
        }
        carried = carried
            .iter()
            .chain(&starts)
            .map(|v| t.mul_vec(v))
            .collect::<Result<_>>()?;
    }
    Ok(ChainSet {
        eigenvalue: zero(),
        chains,
    })
}

/// Exact check of the chain relations and `x_1 != 0` for every chain.
pub fn validate_chains(t: &Mat, chains: &ChainSet) -> Result<bool> {
    t.require_square("validate_chains")?;
    let dim = t.rows();
    let shifted = t - &Mat::identity(dim).scale(&chains.eigenvalue);
    for chain in &chains.chains {
        if chain.is_empty() || chain.iter().any(|v| v.len() != dim) {
            return Ok(false);
        }
        if chain[0].iter().all(Zero::is_zero) {
            return Ok(false);
        }
        let mut prev: Vector = vec![zero(); dim];
        for v in chain {
            if shifted.mul_vec(v)? != prev {
                return Ok(false);
            }
            prev = v.clone();
        }
    }
    Ok(true)
}

/// `X = Z Y^{-1}` from `n` vectors `[y_i; z_i]` spanning a `T`-invariant
/// subspace.
pub fn solution_from_chains(a: &Mat, vectors: &[Vector]) -> Result<Mat> {
    a.require_square("solution_from_chains")?;
    let n = a.rows();
    if vectors.len() != n || vectors.iter().any(|v| v.len() != 2 * n) {
        return Err(Error::Domain(format!(
            "need {n} vectors of length {}",
            2 * n
        )));
    }
    let t = build_t(a)?;
    let mut with_images = vectors.to_vec();
    for v in vectors {
        with_images.push(t.mul_vec(v)?);
    }
    if span_rank(&with_images) != span_rank(vectors) {
        return Err(Error::InvalidSelection);
    }
    let v = Mat::from_columns(vectors)?;
    let y = v.block(0, 0, n, n);
    let z = v.block(n, 0, n, n);
    let y_inv = inverse(&y).map_err(|_| Error::GraphCondition)?;
    let x = &z * &y_inv;
    if !residual(a, &x, 2)?.is_zero() {
        return Err(Error::Internal("Z Y^-1 does not solve the equation".into()));
    }
    Ok(x)
}

/// Every way of taking a prefix of each chain so that `n` vectors are used
/// in total. Prefixes of chains span `T`-invariant subspaces.
pub fn chain_prefix_selections(chains: &ChainSet, n: usize) -> Vec<Vec<Vector>> {
    fn rec(chains: &[Vec<Vector>], left: usize, acc: &mut Vec<Vector>, out: &mut Vec<Vec<Vector>>) {
        let Some((first, rest)) = chains.split_first() else {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        };
        let remaining: usize = rest.iter().map(Vec::len).sum();
        for take in 0..=first.len().min(left) {
            if left - take > remaining {
                continue;
            }
            acc.extend(first[..take].iter().cloned());
            rec(rest, left - take, acc, out);
            acc.truncate(acc.len() - take);
        }
    }
    let mut out = Vec::new();
    rec(&chains.chains, n, &mut Vec::new(), &mut out);
    out
}

/// Distinct solutions reachable from prefix selections of the computed chain
/// basis of `T` for nilpotent `a`.
pub fn enumerate_chain_solutions(a: &Mat) -> Result<Vec<Mat>> {
    let n = a.rows();
    let chains = jordan_chains_nilpotent(&build_t(a)?)?;
    let mut out: Vec<Mat> = Vec::new();
    for sel in chain_prefix_selections(&chains, n) {
        match solution_from_chains(a, &sel) {
            Ok(x) => {
                if !out.contains(&x) {
                    out.push(x);
                }
            }
            Err(Error::GraphCondition) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
