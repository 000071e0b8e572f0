//! Classification of the closed subsets of irreducible root systems up to
//! conjugacy by the Weyl group, with the finite-topology correspondence for
//! type A and conjugacy of regular-subalgebra toral parts.
//!
//! The enumeration works entirely with exact integer data: roots as
//! coordinate vectors over the simple roots, the Weyl group as a
//! permutation group on root indices, and closed sets as bitmasks. Special
//! classes come from a successor recursion pruned by dominant-weight
//! invariants; symmetric classes from the extended-diagram recursion; mixed
//! classes from attaching symmetric subsets of the maximal hull of each
//! special class. A brute-force oracle validates small ranks exhaustively.
//!
//! See the `examples/` directory for runnable entry points per capability,
//! and the `rootclosed` binary for the command-line interface.

pub mod closed;
pub mod enumerate;
pub mod export;
pub mod golden;
pub mod group;
pub mod perm;
pub mod ratio;
pub mod regular;
pub mod root_system;
pub mod sampling;
pub mod setspec;
pub mod topology;
pub mod weyl;

pub use closed::RootSet;
pub use enumerate::{
    brute_force_classify, classify_all, ClassKind, ClassRecord, ClassificationResult, Counts,
};
pub use group::PermGroup;
pub use perm::Perm;
pub use root_system::{Family, RootSystem, RootSystemType, Weight};
pub use weyl::{InvariantKey, WeylAction};
