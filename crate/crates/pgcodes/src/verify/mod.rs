//! Independent checks of minimum distance, covering, cardinality and the
//! rank-metric code.

mod cardinality;
mod cover;
mod distance;
mod report;

pub use cardinality::{cardinality_check, expected_families, mrd_linear_check};
pub use cover::{covering_check, exact_cover_check, DEFAULT_INCIDENCE_BUDGET};
pub use distance::min_distance;
pub use report::{
    code_identity, CheckResult, Mode, VerificationReport, Witness, DEFAULT_PAIR_BUDGET, DEFAULT_SAMPLES, DEFAULT_SEED,
    WITNESS_CAP,
};
