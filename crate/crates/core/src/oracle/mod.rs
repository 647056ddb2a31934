//! Brute-force model of M(λ) truncated by degree, independent of the
//! closed formulas.

mod blocks;
mod module;
mod suite;

pub use blocks::{Eigenfunction, GramBlock, ZForm};
pub use module::{Label, ModuleElement, TruncatedModule};
pub use suite::{
    apply_sigma, check_gram, check_intertwiner_products, check_norms, check_sigma_relations, check_transitions,
    check_triangular, check_vanishing, verify_suite, CheckResult, CheckStatus, Eigenbasis, VerifyReport,
};
