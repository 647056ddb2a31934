//! Partitions, r-partitions, standard tableaux, compositions with their
//! sorting permutations and orders, and the Γ index sets.

pub mod composition;
pub mod gamma;
pub mod partition;
pub mod tableau;

pub use composition::{dominance_leq, Composition, Perm};
pub use gamma::{gamma_contains, inversion_set, GammaSetDescriptor};
pub use partition::{Cell, MultiPartition, Partition};
pub use tableau::{syt_count, syt_enumerate, StandardTableau};
