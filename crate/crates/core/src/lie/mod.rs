//! Lie algebras by structure constants and type-A Chevalley bases.

mod algebra;
mod chevalley;

pub use algebra::LieAlgebra;
pub use chevalley::{build_sl, root_data, BasisKind, Chevalley, Root, RootSystem};
