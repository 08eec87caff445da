//! Quadratic maps on `M = S^rank`: carriers, constructions, axiom checks,
//! direct-sum splitting and the free-resolution formula.

mod axioms;
mod carrier;
mod forms;
mod resolution;
mod samples;
mod split;

pub use axioms::{
    axiom_check, check_all, Axiom, AxiomReport, Mode, ModeKind, TestSet, Verdict, Witness,
    EXHAUSTIVE_GUARD,
};
pub use carrier::{subalgebra_generated, AlgebraCarrier, FiniteScalars, QuadCarrier, RingCarrier};
pub use forms::{
    derivation_form, derivation_form_ring, domain_size, exotic_form, higher_derivative_form,
    plane_carrier, polarize, universal_cross_map, vector_index, QuadForm, Variant,
};
pub use resolution::{
    direct_quad_count, resolution_quad, Presentation, ResolutionQuad, RESOLUTION_GUARD,
};
pub use samples::{
    bounded_degree_polys, bounded_degree_test_set, higher_derivative_matrix, univariate_test_set,
};
pub use split::{split_form, SplitForm};
