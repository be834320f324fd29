//! Coefficient families of the commutation expansions: `a_l(k)`,
//! `c(l, k, p)` and weighted degenerate Stirling numbers.

mod coeffs;
mod expand;
mod poly;
mod stirling;

pub use coeffs::{
    a_coeff, a_coeff_p2_binomial, b_coeffs, c_coeff_closed, c_coeff_p2, c_coeff_rec,
    closed_form_discrepancies, special_c_values, special_values_agree, ClosedFormDiscrepancy,
    CoeffSource, CoeffTable, SpecialValues,
};
pub use expand::{
    b_signs_alternate, check_am_xl, check_ax_power, check_xl_a, check_xl_am, expand_am_xl,
    expand_ax_l, expand_xl_am, expansion_dim, generic_solution, EntryDifference, ExpansionReport,
    Identity,
};
pub use poly::Poly;
pub use stirling::{
    bridge_holds, resolve_theta, stirling_explicit, stirling_rows, stirling_weighted,
    ThetaCandidate, ThetaResolution,
};

use crate::error::Result;
use crate::exactmat::{int, Rational};

/// Entry `c(l, k, .)` of the recurrence table as a polynomial in `p`,
/// interpolated through `p = 2, ..., l + 2`. The degree in `p` is below `l`.
pub fn symbolic_entry(l: usize, k: usize) -> Result<Poly> {
    let points = (2..=(l as u32 + 2))
        .map(|p| Ok((int(p as i64), Rational::from_integer(c_coeff_rec(l, k, p)?))))
        .collect::<Result<Vec<_>>>()?;
    Poly::interpolate(&points)
}

/// All `(l, k, poly)` with `1 <= l <= lmax` and `0 <= k < l`.
pub fn symbolic_table(lmax: usize) -> Result<Vec<(usize, usize, Poly)>> {
    let mut out = Vec::new();
    for l in 1..=lmax {
        for k in 0..l {
            out.push((l, k, symbolic_entry(l, k)?));
        }
    }
    Ok(out)
}

