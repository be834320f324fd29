//! Structural checks on solutions: invariant subspaces, block splitting over
//! disjoint spectra and nilpotency of `A^i X^k A^j` combinations.

use rand::Rng;

use super::residual;
use crate::error::{Error, Result};
use crate::exactmat::{int, is_nilpotent, nullspace_vectors, span_rank, JordanSpec, Mat, Rational};

/// Whether `x` maps `span(basis)` into itself.
pub fn subspace_is_invariant(x: &Mat, basis: &[Vec<Rational>]) -> Result<bool> {
    if basis.is_empty() {
        return Ok(true);
    }
    let mut all = basis.to_vec();
    for v in basis {
        all.push(x.mul_vec(v)?);
    }
    Ok(span_rank(&all) == span_rank(basis))
}

fn require_solution(a: &Mat, x: &Mat, p: u32) -> Result<()> {
    let n = a.rows();
    if !(p > 1 && (p as usize) < n) {
        return Err(Error::Domain(format!("need 1 < p < n, got p = {p}, n = {n}")));
    }
    if !residual(a, x, p)?.is_zero() {
        return Err(Error::NotASolution { p });
    }
    Ok(())
}

/// Checks `X H_lambda ⊆ H_lambda` for every generalized eigenspace
/// `H_lambda = ker (A - lambda E)^n` of `A = spec.matrix()`.
pub fn check_generalized_eigenspace_invariance(spec: &JordanSpec, x: &Mat, p: u32) -> Result<bool> {
    let a = spec.matrix();
    require_solution(&a, x, p)?;
    let n = a.rows();
    for lambda in spec.eigenvalues() {
        let shifted = &a - &Mat::identity(n).scale(&lambda);
        let h = nullspace_vectors(&shifted.pow(n as u32)?);
        if !subspace_is_invariant(x, &h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// With `A = diag(A1, A2)` for eigenvalue-disjoint `first` and `second`,
/// checks that `x` is block diagonal and that each block solves its own
/// equation.
pub fn check_block_split(first: &JordanSpec, second: &JordanSpec, x: &Mat, p: u32) -> Result<bool> {
    let shared: Vec<Rational> = first
        .eigenvalues()
        .into_iter()
        .filter(|l| second.eigenvalues().contains(l))
        .collect();
    if !shared.is_empty() {
        return Err(Error::Precondition(format!(
            "the two groups share {} eigenvalue(s)",
            shared.len()
        )));
    }
    let (a1, a2) = (first.matrix(), second.matrix());
    let a = Mat::block_diag(&[a1.clone(), a2.clone()])?;
    require_solution(&a, x, p)?;
    let (r, s) = (a1.rows(), a2.rows());
    if !x.block(0, r, r, s).is_zero() || !x.block(r, 0, s, r).is_zero() {
        return Ok(false);
    }
    let x1 = x.block(0, 0, r, r);
    let x2 = x.block(r, r, s, s);
    Ok(residual(&a1, &x1, p)?.is_zero() && residual(&a2, &x2, p)?.is_zero())
}

/// Draws `trials` random five-term combinations `sum c A^i X^k A^j`
/// (`k >= 1`, `i, j <= n`, small nonzero integer `c`) and checks each one
/// is nilpotent. Meaningful when `x` solves the equation for `a`.
pub fn check_combination_nilpotency<R: Rng + ?Sized>(a: &Mat, x: &Mat, trials: usize, rng: &mut R) -> Result<bool> {
    crate::exactmat::square_pair("check_combination_nilpotency", x, a)?;
    let n = a.rows();
    let ap = a.powers(n as u32)?;
    let xp = x.powers(n as u32)?;
    for _ in 0..trials {
        let mut sum = Mat::zeros(n, n);
        for _ in 0..5 {
            let i = rng.gen_range(0..=n);
            let k = rng.gen_range(1..=n);
            let j = rng.gen_range(0..=n);
            let mut c = rng.gen_range(-3i64..=2);
            if c >= 0 {
                c += 1;
            }
            let term = &(&ap[i] * &xp[k]) * &ap[j];
            sum = &sum + &term.scale(&int(c));
        }
        if !is_nilpotent(&sum)? {
            return Ok(false);
        }
    }
    Ok(true)
}
