//! Assembly of the constant-dimension codes.

mod assemble;
mod code;
mod families;
mod klein;
mod pg7;

pub use assemble::{code_even, code_odd, code_prop32, spread_pairs};
pub use code::{valid_tag, CodeBuilder, SubspaceCode};
pub use families::{
    alternating_matrices, family_d_prime, generator_families, is_alternating, odd_generator_families,
    GeneratorFamilies, SystemFamilies,
};
pub use klein::{klein_map, klein_quadric};
pub use pg7::{
    closure_order, code_pg7, code_pg7_with_report, exchange_orbit, expected_stabilizer_order, orbit, orbit_yh,
    seed_orbits, spread_stabilizer, Pg7Report, Pg7Route, SeedOrbit,
};

use crate::error::{Error, Result};

/// Names accepted by [`construct`].
pub const CONSTRUCTIONS: [&str; 4] = ["prop32", "even", "odd", "pg7"];

/// Builds the named code.
pub fn construct(name: &str, n: usize, q: u32) -> Result<SubspaceCode> {
    match name {
        "prop32" => code_prop32(n, q),
        "even" => code_even(n, q),
        "odd" => code_odd(n, q),
        "pg7" if n == 4 => code_pg7(q),
        "pg7" => Err(Error::Parameter(alloc::format!("pg7 needs n = 4, got {n}"))),
        _ => Err(Error::Parameter(alloc::format!("unknown construction {name:?}"))),
    }
}
