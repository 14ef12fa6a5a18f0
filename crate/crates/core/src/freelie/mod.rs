//! The free Lie algebra on the underlying space of a Lie algebra: Lyndon
//! bases of each degree inside the tensor algebra, the diagonal adjoint
//! action and the evaluation maps `τ_r` with their kernels.

mod degree;
mod lyndon;
mod tau;
mod tensor;

pub use degree::{
    lyndon_degree, lyndon_degree_with, monomial_count, set_limits, tensor_to_lyndon, FreeDegree, Limits,
    DEFAULT_MAX_DEGREE, DEFAULT_MAX_MONOMIALS,
};
pub use lyndon::{is_lyndon, lyndon_words, LyndonWord};
pub use tau::{ker_tau, ker_tau_lyndon, tau_degree, tau_r, truncated_current_dim, LieEvaluator, TauDegree};
pub use tensor::{ad_t, index_word, word_index, TensorPoly};
pub(crate) use tensor::ad_t_sparse;
