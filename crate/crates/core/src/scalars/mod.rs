//! Exact scalars: rationals, cyclotomic numbers, affine forms in the
//! parameters (κ, c₀, d₁, …, d_{r−1}) and factored products of such forms.

pub mod cyclotomic;
pub mod factored;
pub mod linform;
pub mod point;
pub mod rational;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use factored::FactoredScalar;
pub use linform::LinearForm;
pub use point::ParamPoint;
pub use rational::{int, parse_rational, rat, Rational};
