//! Closed-form structure of the standard modules M(λ): weights, intertwiner
//! transitions, norms, the exceptional hyperplanes, closed sets and the
//! submodule lattice, finite-dimensionality certificates and Clifford descent.

pub mod clifford;
pub mod findim;
pub mod lattice;
pub mod norm;
pub mod spectrum;
pub mod transitions;
pub mod weights;

pub use clifford::{clifford_split, mcore_dominance_filter, orbit_k, CliffordReport};
pub use findim::{corner_chains, findim_check, l_dimension, CornerChain, FinDimCertificate, LDimension};
pub use lattice::{
    calibration_edges, closed_generators, cyclic_submodule_contains, graded_count, lattice_graded_dims,
    solve_generator_equations, submodule_contains, CalibrationEdge, ClosedGenerator, EdgeKind, GradedDims,
    SubmoduleExpr,
};
pub use norm::norm;
pub use spectrum::{
    exceptional_hyperplanes, is_simple_spectrum, require_simple_spectrum, HyperplaneFamily, SpectrumReport,
};
pub use transitions::{phi_transition, psi_transition, sigma_transition, sigma_transition_at, TransitionScalar};
pub use weights::{z_weight, Weight};
