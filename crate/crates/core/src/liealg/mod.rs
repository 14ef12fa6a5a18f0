//! Lie algebras from structure constants, representations given by
//! matrices, equivariant hom spaces and invariant forms.

mod algebra;
mod classical;
pub mod io;
mod rep;

pub use algebra::{is_perfect, make_algebra, BracketEntry, LieAlgebra, Triangular};
pub(crate) use algebra::unit;
pub use classical::{basis_index, builtin_algebra, sl2_irrep, classical_algebra, classical_with_natural, from_matrix_basis, Family};
pub use rep::{
    adjoint_rep, hom_space, intertwiner_rows, invariant_symmetric_form, lin_comb, trivial, unvec, Rep,
};
pub(crate) use rep::{same_algebra, tensor_mats};

#[cfg(test)]
mod tests;
