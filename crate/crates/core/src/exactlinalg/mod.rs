//! Exact integer linear algebra: Smith normal form, chain-complex homology,
//! and the finitely generated abelian groups those produce.

mod abelian;
mod complex;
mod matrix;
mod snf;

pub use abelian::{direct_sum, tensor_z2, tor_z2, FinAbGroup};
pub use complex::{homology, IntChainComplex};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, smith_normal_form, SnfResult};
