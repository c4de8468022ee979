//! Exact Bredon homology and equivariant K- and KO-homology for proper
//! classifying spaces of discrete groups.

pub mod arithmetic_k;
pub mod bredon;
pub mod error;
pub mod exactlinalg;
pub mod fuchsian;
pub mod groups;
pub mod ko_assembly;
pub mod par;
pub mod reprings;
pub mod verify;

pub use error::{Error, Result};
pub use exactlinalg::{FinAbGroup, IntChainComplex, IntMatrix};
pub use groups::GroupId;
pub use ko_assembly::GradedGroup;
pub use par::Execution;
