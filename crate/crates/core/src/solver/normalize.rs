use num_traits::{One, Zero};

use super::{residual, x0_special};
use crate::error::{Error, Result};
use crate::exactmat::{combine, conjugate, nullspace_vectors, JordanSpec, Mat, Rational};

/// Finds `S = c_1 E + c_2 A + ... + c_n A^{n-1}` with `c_1 != 0` and
/// `S X0 S^{-1} = x`, where `A = J(n)` and `X0 = x0_special(n, x[0][1])`.
///
/// `S X0 = x S` is linear in the `c_k`. The first kernel vector with
/// `c_1 != 0` is scaled to `c_1 = 1`.
pub fn normalize_to_x0(x: &Mat) -> Result<Mat> {
    x.require_square("normalize_to_x0")?;
    let n = x.rows();
    if n < 2 {
        return Err(Error::Domain("normalize_to_x0 needs n >= 2".into()));
    }
    let a = JordanSpec::full(n).matrix();
    if !residual(&a, x, 2)?.is_zero() {
        return Err(Error::NotASolution { p: 2 });
    }
    let alpha = x.get(0, 1);
    if alpha.is_zero() {
        return Err(Error::NotNormalizable);
    }
    let x0 = x0_special(n, alpha)?;
    let powers = a.powers(n as u32 - 1)?;

    // column k of the system: vec(A^k X0 - x A^k)
    let terms: Vec<Mat> = powers.iter().map(|pk| &(pk * &x0) - &(x * pk)).collect();
    let system = Mat::from_fn(n * n, n, |r, k| terms[k].get(r / n, r % n).clone());
    let kernel = nullspace_vectors(&system);
    let Some(c) = kernel.iter().find(|v| !v[0].is_zero()) else {
        return Err(Error::Internal(
            "no invertible centralizer element conjugates X0 to X".into(),
        ));
    };
    let c1 = c[0].clone();
    let coeffs: Vec<Rational> = c.iter().map(|ck| ck / &c1).collect();
    debug_assert!(coeffs[0].is_one());
    let s = combine(&coeffs, &powers);
    if conjugate(&s, &x0)? != *x {
        return Err(Error::Internal("conjugator check failed".into()));
    }
    Ok(s)
}
