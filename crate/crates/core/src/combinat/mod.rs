//! Trees, parking functions, permutations and their statistics.

mod parking;
mod perm;
mod prufer;
mod tree;

pub use parking::{is_parking_function, ParkingFunction};
pub use perm::Permutation;
pub use prufer::PruferCode;
pub use tree::Tree;

pub(crate) use parking::{cosum, excedances, park};
pub(crate) use perm::descents;
pub(crate) use prufer::DecodeScratch;
pub(crate) use tree::{inversions as tree_inversions, leaves as tree_leaves};
