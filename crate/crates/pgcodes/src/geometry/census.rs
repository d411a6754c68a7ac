//! Closed-form counts, evaluated exactly with arbitrary-precision integers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn qpow(q: u64, e: u64) -> BigUint {
    num_traits::pow(big(q), e as usize)
}

fn domain(msg: String) -> Error {
    Error::Parameter(msg)
}

fn check_q(q: u64) -> Result<()> {
    let (p, _) = crate::algebra::prime_power(q as u32)?;
    if p as u64 > q {
        return Err(domain(format!("q = {q}")));
    }
    Ok(())
}

/// Number of `r`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(n: u64, r: u64, q: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= qpow(q, n - i) - 1u32;
        den *= qpow(q, i + 1) - 1u32;
    }
    num / den
}

/// `theta_{n,q} = q^n + ... + q + 1`, the number of points of `PG(n, q)`.
pub fn theta(n: u64, q: u64) -> BigUint {
    gaussian_binomial(n + 1, 1, q)
}

fn require_even(n: u64, min: u64, what: &str) -> Result<()> {
    if n < min || n % 2 != 0 {
        return Err(domain(format!("{what} needs even n >= {min}, got {n}")));
    }
    Ok(())
}

fn require_odd(n: u64, min: u64, what: &str) -> Result<()> {
    if n < min || n % 2 == 0 {
        return Err(domain(format!("{what} needs odd n >= {min}, got {n}")));
    }
    Ok(())
}

/// Points of the non-degenerate Hermitian variety `H(n-1, q^2)`, `n` even.
pub fn hermitian_points(n: u64, q: u64) -> Result<BigUint> {
    require_even(n, 2, "hermitian_points")?;
    Ok((qpow(q, n) - 1u32) * (qpow(q, n - 1) + 1u32) / (qpow(q, 2) - 1u32))
}

/// Generators of `H(n-1, q^2)`, `n` even: `(q+1)(q^3+1)...(q^{n-1}+1)`.
pub fn hermitian_generators(n: u64, q: u64) -> Result<BigUint> {
    require_even(n, 2, "hermitian_generators")?;
    Ok((1..n)
        .step_by(2)
        .fold(BigUint::one(), |acc, i| acc * (qpow(q, i) + 1u32)))
}

/// Points of `Q+(2n-1, q)`.
pub fn quadric_points(n: u64, q: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(domain("quadric_points needs n >= 1".into()));
    }
    Ok((qpow(q, n) - 1u32) * (qpow(q, n - 1) + 1u32) / (big(q) - 1u32))
}

/// Generators of `Q+(2n-1, q)`: `2(q+1)(q^2+1)...(q^{n-1}+1)`.
pub fn quadric_generators(n: u64, q: u64) -> Result<BigUint> {
    Ok(big(2) * generators_per_system(n, q)?)
}

/// Generators in one system of `Q+(2n-1, q)`.
pub fn generators_per_system(n: u64, q: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(domain("generators_per_system needs n >= 1".into()));
    }
    Ok((1..n).fold(BigUint::one(), |acc, i| acc * (qpow(q, i) + 1u32)))
}

/// Size of the base locus of the Hermitian pencil in `PG(n-1, q^2)`.
pub fn base_locus_hermitian(n: u64, q: u64) -> Result<BigUint> {
    require_even(n, 4, "base_locus_hermitian")?;
    Ok((qpow(q, n - 2) + 1u32) * (qpow(q, n) - 1u32) / (qpow(q, 2) - 1u32))
}

/// Size of the base locus of the quadric pencil in `PG(2n-1, q)`.
pub fn base_locus_quadric(n: u64, q: u64) -> Result<BigUint> {
    require_even(n, 4, "base_locus_quadric")?;
    Ok((qpow(q, n - 2) + 1u32) * (qpow(q, n) - 1u32) / (big(q) - 1u32))
}

/// Generators common to every quadric of the pencil and meeting both
/// distinguished generators: the sum of `[n/2, r]_{q^2}` for `1 <= r <= (n-2)/2`.
pub fn common_generators(n: u64, q: u64) -> Result<BigUint> {
    require_even(n, 4, "common_generators")?;
    Ok((1..=(n - 2) / 2).fold(BigUint::zero(), |acc, r| {
        acc + gaussian_binomial(n / 2, r, q * q)
    }))
}

/// Number of `n x n` alternating matrices over `GF(q)` of the given rank.
///
/// For even `n` and rank `n` this is `q^{n(n-2)/4} prod_{i=0}^{(n-2)/2} (q^{2i+1}-1)`;
/// for odd `n` and rank `n-1` it is `q^{(n-1)(n-3)/4} prod_{i=1}^{(n-1)/2} (q^{2i+1}-1)`.
/// Other even ranks use the general count
/// `q^{h(h-1)} prod_{i<2h} (q^{n-i}-1) / prod_{i=1}^{h} (q^{2i}-1)` with `rank = 2h`.
pub fn skew_rank_count(n: u64, rank: u64, q: u64) -> Result<BigUint> {
    if rank > n || rank % 2 != 0 {
        return Err(domain(format!(
            "alternating matrices have even rank <= n; got rank {rank} for n = {n}"
        )));
    }
    if rank == n {
        let e = n * (n - 2) / 4;
        return Ok((0..=(n - 2) / 2).fold(qpow(q, e), |acc, i| acc * (qpow(q, 2 * i + 1) - 1u32)));
    }
    if n % 2 == 1 && rank == n - 1 {
        let e = (n - 1) * (n - 3) / 4;
        return Ok((1..=(n - 1) / 2).fold(qpow(q, e), |acc, i| acc * (qpow(q, 2 * i + 1) - 1u32)));
    }
    let h = rank / 2;
    let mut num = qpow(q, h * h.saturating_sub(1));
    for i in 0..2 * h {
        num *= qpow(q, n - i) - 1u32;
    }
    let den = (1..=h).fold(BigUint::one(), |acc, i| acc * (qpow(q, 2 * i) - 1u32));
    Ok(num / den)
}

/// Size of the rank-`r` constant-rank subcode of a linear `(n, n, n-1)` MRD code:
/// `[n, r]_q sum_{j=2}^{r} (-1)^{r-j} [r, j]_q q^{binom(r-j, 2)} (q^{n(j-1)} - 1)`.
pub fn crc_cardinality(n: u64, r: u64, q: u64) -> Result<BigUint> {
    if r < 2 || r + 2 > n {
        return Err(domain(format!("constant-rank code needs 2 <= r <= n-2; got r = {r}, n = {n}")));
    }
    let mut sum = BigInt::zero();
    for j in 2..=r {
        let k = r - j;
        let term = BigInt::from(gaussian_binomial(r, j, q))
            * BigInt::from(qpow(q, k * k.saturating_sub(1) / 2))
            * BigInt::from(qpow(q, n * (j - 1)) - 1u32);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let total = BigInt::from(gaussian_binomial(n, r, q)) * sum;
    total
        .to_biguint()
        .ok_or_else(|| Error::Verification("negative constant-rank count".into()))
}

/// Upper bound on an `(m, n, d, r)` constant-rank code: `[n, r]_q prod_{i=0}^{r-d} (q^m - q^i)`.
pub fn crc_upper_bound(m: u64, n: u64, d: u64, r: u64, q: u64) -> Result<BigUint> {
    if d == 0 || d > r || r > n {
        return Err(domain(format!("need 1 <= d <= r <= n; got d = {d}, r = {r}, n = {n}")));
    }
    let prod = (0..=r - d).fold(BigUint::one(), |acc, i| acc * (qpow(q, m) - qpow(q, i)));
    Ok(gaussian_binomial(n, r, q) * prod)
}

/// Cited size `y = q^{n-2} + q^{n-4} + ... + q^3 + 1` of a partial line spread
/// of `PG(n-1, q)`, `n >= 5` odd.
pub fn partial_spread_y(n: u64, q: u64) -> Result<BigUint> {
    require_odd(n, 5, "partial_spread_y")?;
    let mut y = BigUint::one();
    let mut e = 3;
    while e <= n - 2 {
        y += qpow(q, e);
        e += 2;
    }
    Ok(y)
}

fn crc_sum(n: u64, q: u64) -> Result<BigUint> {
    let mut s = BigUint::zero();
    for r in 2..=n.saturating_sub(2) {
        s += crc_cardinality(n, r, q)?;
    }
    Ok(s)
}

/// Lifted MRD code plus the lifted constant-rank codes.
pub fn m_prop32(n: u64, q: u64) -> Result<BigUint> {
    if n < 4 {
        return Err(domain(format!("needs n >= 4, got {n}")));
    }
    check_q(q)?;
    Ok(qpow(q, n * n - n) + crc_sum(n, q)?)
}

/// Code size for even `n` built from the quadric pencil.
pub fn m_even(n: u64, q: u64) -> Result<BigUint> {
    require_even(n, 4, "m_even")?;
    check_q(q)?;
    let half = qpow(q, n * (n - 1) / 2);
    let skew = skew_rank_count(n, n, q)?;
    let m1 = generators_per_system(n, q)?;
    let g = common_generators(n, q)?;
    let th = gaussian_binomial(n / 2, 1, q * q);
    let plus = qpow(q, n * n - n) + crc_sum(n, q)? + big(q + 1) * (m1 + skew) + &th * (&th - 1u32) + 1u32;
    let minus = big(2) * big(q + 1) * half + big(q) * g;
    Ok(plus - minus)
}

/// Code size for odd `n` built from a partial line spread.
pub fn m_odd(n: u64, q: u64) -> Result<BigUint> {
    require_odd(n, 5, "m_odd")?;
    check_q(q)?;
    let half = qpow(q, n * (n - 1) / 2);
    let y = partial_spread_y(n, q)?;
    let plus = qpow(q, n * n - n)
        + crc_sum(n, q)?
        + generators_per_system(n, q)?
        + skew_rank_count(n, n - 1, q)?
        + &y * (&y - 1u32)
        + 1u32;
    Ok(plus - big(2) * half)
}

/// `q^12 + q^2 (q^2+1)^2 (q^2+q+1) + 1`.
pub fn m_pg7(q: u64) -> Result<BigUint> {
    check_q(q)?;
    let q2 = qpow(q, 2);
    let s = &q2 + 1u32;
    Ok(qpow(q, 12) + &q2 * &s * &s * (&q2 + big(q) + 1u32) + 1u32)
}

/// Family sizes of the generator partition of the system containing `S`, `n` even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenFamilies {
    pub system: BigUint,
    pub disjoint_from_s: BigUint,
    pub disjoint_from_s_prime_meeting_s: BigUint,
    pub meeting_both: BigUint,
    pub common: BigUint,
    pub pencil_union: BigUint,
    pub spread_pairs: BigUint,
}

pub fn even_families(n: u64, q: u64) -> Result<EvenFamilies> {
    require_even(n, 4, "even_families")?;
    let half = qpow(q, n * (n - 1) / 2);
    let skew = skew_rank_count(n, n, q)?;
    let system = generators_per_system(n, q)?;
    let meeting_both = &system + &skew - big(2) * &half;
    let common = common_generators(n, q)?;
    let th = gaussian_binomial(n / 2, 1, q * q);
    Ok(EvenFamilies {
        pencil_union: big(q) * (&meeting_both - &common),
        disjoint_from_s_prime_meeting_s: &half - &skew,
        disjoint_from_s: half,
        spread_pairs: &th * (&th - 1u32),
        system,
        meeting_both,
        common,
    })
}

/// Named census values for `(q, n)`; entries outside a formula's domain are errors.
pub fn formula_table(q: u64, n: u64) -> Vec<(&'static str, Result<BigUint>)> {
    let mut rows: Vec<(&'static str, Result<BigUint>)> = Vec::new();
    rows.push(("gaussian_binomial[n,2]", Ok(gaussian_binomial(n, 2, q))));
    rows.push(("theta(n-1)", Ok(theta(n.saturating_sub(1), q))));
    rows.push(("hermitian_points", hermitian_points(n, q)));
    rows.push(("hermitian_generators", hermitian_generators(n, q)));
    rows.push(("quadric_points", quadric_points(n, q)));
    rows.push(("quadric_generators", quadric_generators(n, q)));
    rows.push(("base_locus_hermitian", base_locus_hermitian(n, q)));
    rows.push(("base_locus_quadric", base_locus_quadric(n, q)));
    rows.push(("common_generators", common_generators(n, q)));
    rows.push(("skew_rank_count(n)", skew_rank_count(n, n, q)));
    rows.push(("skew_rank_count(n-1)", skew_rank_count(n, n.saturating_sub(1), q)));
    for r in 2..=n.saturating_sub(2) {
        let name: &'static str = match r {
            2 => "crc_cardinality(r=2)",
            3 => "crc_cardinality(r=3)",
            4 => "crc_cardinality(r=4)",
            5 => "crc_cardinality(r=5)",
            6 => "crc_cardinality(r=6)",
            _ => "crc_cardinality(r>6)",
        };
        rows.push((name, crc_cardinality(n, r, q)));
    }
    rows.push(("crc_upper_bound(r=2,d=2)", crc_upper_bound(n, n, 2, 2, q)));
    rows.push(("partial_spread_y", partial_spread_y(n, q)));
    rows.push(("M_prop32", m_prop32(n, q)));
    rows.push(("M_even", m_even(n, q)));
    rows.push(("M_odd", m_odd(n, q)));
    rows.push((
        "M_pg7",
        if n == 4 {
            m_pg7(q)
        } else {
            Err(Error::Parameter(format!("m_pg7 needs n = 4, got {n}")))
        },
    ));
    rows
}
