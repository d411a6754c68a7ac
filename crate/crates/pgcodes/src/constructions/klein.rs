use alloc::vec::Vec;

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::geometry::{Quadric, Subspace};

/// Coordinate pairs of `(p12, p13, p14, p23, p24, p34)`, zero-based.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Normalized Plücker coordinates of a line of `GF(q)^4`.
pub fn klein_map(line: &Subspace, f: &Field) -> Result<Vec<u32>> {
    if line.ambient() != 4 || line.dim() != 2 {
        return Err(Error::Shape("the Klein map takes a line of PG(3, q)".into()));
    }
    let u = line.row_vec(0);
    let v = line.row_vec(1);
    let mut p: Vec<u32> = PAIRS
        .iter()
        .map(|&(i, j)| f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i])))
        .collect();
    let lead = *p.iter().find(|&&x| x != 0).expect("independent rows give a nonzero point");
    let inv = f.inv(lead)?;
    for x in p.iter_mut() {
        *x = f.mul(*x, inv);
    }
    Ok(p)
}

/// `p12 p34 - p13 p24 + p14 p23`.
pub fn klein_quadric(f: &Field) -> Result<Quadric> {
    Quadric::klein(f)
}
