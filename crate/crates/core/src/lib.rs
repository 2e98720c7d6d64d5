pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod complement;
pub mod constructions;
pub mod error;
pub mod group;
pub mod lattice;
pub mod structure;
pub mod verify;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use group::{ActionSpec, FiniteGroup};
pub use lattice::{Subgroup, SubgroupLattice};
