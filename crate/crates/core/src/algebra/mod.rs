//! Finite-dimensional commutative algebras and the universal constructions
//! for relative quadratic maps: tensor squares, the diagonal subalgebra,
//! `Q = (S (x)_R S) (x)_Delta S`, its augmentation kernel `W`, and the two
//! alternative presentations of `Q`.

mod exterior;
mod fdalg;
mod models;
mod module;
mod morphism;
mod qphi;
mod tensor;

pub use exterior::{exterior_model_check, inseparable_relation, ExteriorReport, Identity};
pub use fdalg::FiniteDimAlgebra;
pub use models::{frobenius_model, i_squared_model, model_for, ModelReport, Presentation};
pub use module::AlgebraModule;
pub use morphism::AlgebraMorphism;
pub use qphi::{q_phi, QPhi};
pub use tensor::{
    c2_fixed, check_ideal, delta_subalgebra, epimorphism_check, flatness_comparison, flip_matrix,
    kron, quotient_algebra, squares_subalgebra, tensor_product, tensor_square, AlgebraOver,
    FlatnessComparison, QuotientAlgebra, TensorSquare,
};
