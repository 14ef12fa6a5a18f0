//! Modules over the current algebra `a[t]` given by a pair `(ρ, η)`:
//! verification, the induced action of `x t^r`, standard operations on
//! modules, hom spaces and highest-weight data.

pub mod io;
mod module;
mod ops;
mod weights;

pub use module::{act, associative_nilpotency, c2_failure, check_c3, verify_pair, Certificate, PairModule};
pub use ops::{
    direct_sum, dual_module, evaluation_module, find_invertible, find_isomorphism, hom_module_space,
    rep_hom_space, tensor_module, twist_eps, twist_gamma, IsoSearch, EVALUATION,
};
pub use weights::{
    annihilated_by, annihilator_poly_test, charpoly, find_annihilating_polynomial, highest_vectors,
    highest_weight_spaces, poly_from_roots, rational_roots, WeightSpace,
};

#[cfg(test)]
mod tests;
