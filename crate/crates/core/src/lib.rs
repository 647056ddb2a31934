pub mod cherednik;
pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod scalars;
pub mod wreath;

pub use combinatorics::{Cell, Composition, GammaSetDescriptor, MultiPartition, Partition, Perm, StandardTableau};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use scalars::{Cyclotomic, FactoredScalar, LinearForm, ParamPoint, Rational};
pub use wreath::{build_rep, GroupElement, SeminormalRep};
