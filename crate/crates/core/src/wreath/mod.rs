//! Irreducible G(r,1,n)-modules in the seminormal basis.

pub mod group;
pub mod seminormal;

pub use group::GroupElement;
pub use seminormal::{build_rep, is_gamma_unitary, JMData, SeminormalRep};
