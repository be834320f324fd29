//! Exact rational scalars, dense matrices and the linear-algebra kernels the
//! rest of the crate builds on.

mod elim;
mod mat;
mod rational;
mod structure;

pub use elim::{char_poly, det_bareiss, inverse, kron, nullspace, rank, rref, span_rank};
pub(crate) use elim::nullspace_vectors;
pub use mat::Mat;
pub use rational::{format_rational, frac, int, one, parse_rational, zero, Rational};
pub use rational::{serde_str, serde_vec};
pub use structure::{
    centralizer_basis, combine, commutator_xa, conjugate, is_nilpotent, jordan_block,
    jordan_matrix, nilpotency_index, sylvester_singular, JordanBlock, JordanSpec,
};
pub(crate) use structure::square_pair;
