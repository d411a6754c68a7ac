//! Projective subspaces, counting formulas, quadrics, Hermitian varieties,
//! field reduction, pencils and spreads.

pub mod census;
pub mod hermitian;
pub mod pencil;
pub mod quadric;
pub mod reduction;
pub mod spread;
pub mod subspace;

pub use hermitian::HermitianVariety;
pub use pencil::{
    common_generator_set, common_generators_from, hermitian_pencil, pencil_parameters, quadric_pencil, HermitianPencil, QuadricPencil,
};
pub use quadric::Quadric;
pub use reduction::FieldReduction;
pub use spread::{desarguesian_spread, partial_line_spread, SpreadFamily, SpreadKind};
pub use subspace::{enumerate_subspaces, Subspace, DEFAULT_SUBSPACE_BUDGET};
