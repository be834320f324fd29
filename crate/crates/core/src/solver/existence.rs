use crate::error::{Error, Result};
use crate::exactmat::{one, JordanSpec, Mat};

/// For `p >= 2`, `X = 0` is the only solution exactly when `A` has no
/// repeated eigenvalue.
pub fn has_only_trivial_solution(spec: &JordanSpec, p: u32) -> Result<bool> {
    if p < 2 {
        return Err(Error::Domain(format!("need p >= 2, got {p}")));
    }
    let simple = spec.blocks().iter().all(|b| b.size == 1);
    Ok(simple && spec.eigenvalues().len() == spec.blocks().len())
}

/// Nonzero solution for a spec with a repeated eigenvalue: a single 1 in the
/// top-right corner of the first block of size `>= 2`, or, when every block
/// is `1x1`, the off-diagonal entry linking two blocks with equal eigenvalues.
pub fn nontrivial_witness(spec: &JordanSpec, p: u32) -> Result<Mat> {
    if p < 2 {
        return Err(Error::Domain(format!("need p >= 2, got {p}")));
    }
    let n = spec.dim();
    let mut offset = 0;
    for b in spec.blocks() {
        if b.size >= 2 {
            return Ok(Mat::zeros(n, n).with_entry(offset, offset + b.size - 1, one()));
        }
        offset += b.size;
    }
    // all blocks 1x1: A is diagonal, and E_ij with a_ii = a_jj commutes with A
    let blocks = spec.blocks();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if blocks[i].eigenvalue == blocks[j].eigenvalue {
                return Ok(Mat::zeros(n, n).with_entry(i, j, one()));
            }
        }
    }
    Err(Error::NoWitness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;
    use crate::solver::residual;

    #[test]
    fn trivial_dichotomy() {
        let s = |b: &[(usize, i64)]| JordanSpec::from_ints(b).unwrap();
        assert!(has_only_trivial_solution(&s(&[(1, 0), (1, 1), (1, 2)]), 2).unwrap());
        assert!(!has_only_trivial_solution(&s(&[(2, 0)]), 2).unwrap());
        assert!(!has_only_trivial_solution(&s(&[(2, 0)]), 5).unwrap());
        assert!(!has_only_trivial_solution(&s(&[(1, 3), (1, 3)]), 2).unwrap());
        assert!(has_only_trivial_solution(&s(&[(1, 3)]), 1).is_err());
    }

    #[test]
    fn witnesses_solve() {
        let spec = JordanSpec::from_ints(&[(2, 0)]).unwrap();
        let w = nontrivial_witness(&spec, 2).unwrap();
        assert_eq!(w, Mat::from_ints(&[[0, 1], [0, 0]]));

        let spec = JordanSpec::from_ints(&[(3, 7)]).unwrap();
        let w = nontrivial_witness(&spec, 2).unwrap();
        assert_eq!(w, Mat::zeros(3, 3).with_entry(0, 2, int(1)));
        assert!(residual(&spec.matrix(), &w, 2).unwrap().is_zero());

        let spec = JordanSpec::from_ints(&[(1, 4), (2, 0), (1, 4)]).unwrap();
        for p in 2..5 {
            let w = nontrivial_witness(&spec, p).unwrap();
            assert!(!w.is_zero());
            assert!(residual(&spec.matrix(), &w, p).unwrap().is_zero());
        }

        let spec = JordanSpec::from_ints(&[(1, 3), (1, 1), (1, 3)]).unwrap();
        let w = nontrivial_witness(&spec, 2).unwrap();
        assert!(residual(&spec.matrix(), &w, 2).unwrap().is_zero());

        let spec = JordanSpec::from_ints(&[(1, 0), (1, 1)]).unwrap();
        assert_eq!(nontrivial_witness(&spec, 2), Err(Error::NoWitness));
    }
}
