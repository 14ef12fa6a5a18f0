mod graded;
mod ideal;
mod kostant;
mod kr;

pub use graded::{restrict_to_coordinates, GradedModule, GradedModuleReport};
pub use ideal::{ideal_module_sym, ideal_module_tensor, tensor_ideal_components, sym_dual_module, sym_gram, sym_monomials, Flavor, IdealSpec, TENSOR_IDEAL};
pub use kostant::{even_odd_submodules, exterior_gram, kostant_dual_module, kostant_module, DegreeBound, KostantModule, Parity};
pub use kr::{kr_module, KrModule};
