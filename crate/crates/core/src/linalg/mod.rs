//! Small matrix toolkit: Kronecker products, direct sums, signed
//! permutations, the `H2`/`T2×3`/`T3×2` combiners and the block templates.

mod mat;
mod perm;
mod templates;

use thiserror::Error;

pub use mat::{dirsum, kron, Mat};
pub use perm::{signed_perm_matrix, SignMatrix, SignedPermutation};
pub use templates::{
    template_ab, template_ab_blocks, template_ab_factored, template_ef, template_ef_blocks,
    template_ef_factored,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("malformed permutation: {0}")]
    BadPermutation(String),
    #[error("entry ({0}, {1}) is not in {{-1, 0, +1}}")]
    NotSign(usize, usize),
    #[error("matrix text: {0}")]
    Parse(String),
}
