//! Finite permutation groups with base-and-strong-generating-set machinery:
//! order, membership, normal closure, simplicity testing, and the randomized
//! Heisenberg subgroup search.

mod group;
mod parse;
mod permutation;
mod witness;

pub use group::{GroupError, PermGroup};
pub use parse::{load_perm_group_file, LoadedGroup, PermFileError};
pub use permutation::{PermError, Permutation};
pub use witness::{find_heisenberg_subgroup, HeisenbergOutcome, HeisenbergWitness, WitnessError};
