//! Arithmetic in `GF(p^m)`.
//!
//! Elements are integers `0..q`: the polynomial `c_0 + c_1 x + ... + c_{m-1} x^{m-1}`
//! is stored as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. The modulus is the Conway
//! polynomial, so `x` (or the least primitive root when `m = 1`) is the canonical
//! primitive element.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::conway::conway_polynomial;
use crate::error::{Error, Result};

/// A finite field together with its log/exp tables.
#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    omega: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    neg_table: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.m)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for Field {}

/// Splits `q` into `(p, m)` with `q = p^m`.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, m))
}

impl Field {
    /// The field `GF(p^m)` with its Conway modulus.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        let modulus = conway_polynomial(p, m).ok_or(Error::UnsupportedField { p, m })?;
        Self::with_modulus(p, modulus)
    }

    /// The field of order `q`.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q)?;
        Self::new(p, m)
    }

    /// Builds the field from an explicit monic primitive modulus.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        let m = (modulus.len() - 1) as u32;
        if m == 0 || modulus[m as usize] != 1 {
            return Err(Error::Parameter("modulus must be monic of positive degree".into()));
        }
        let q = p.pow(m);
        let mut field = Field {
            p,
            m,
            q,
            modulus: modulus.to_vec(),
            omega: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            neg_table: Vec::new(),
        };
        if q <= 256 && p != 2 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = field.add_digits(a, b);
                }
            }
            field.add_table = Some(t);
        }
        field.neg_table = (0..q)
            .map(|a| {
                let d: Vec<u32> = field.digits(a).iter().map(|&c| (p - c) % p).collect();
                field.from_digits(&d)
            })
            .collect();
        field.omega = if m == 1 { (p - modulus[0]) % p } else { p };
        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1u32;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            *slot = x;
            if log[x as usize] != u32::MAX {
                return Err(Error::Parameter("modulus is not primitive".into()));
            }
            log[x as usize] = i as u32;
            x = field.mul_by_omega(x);
        }
        if x != 1 {
            return Err(Error::Parameter("modulus is not primitive".into()));
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.m as usize];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul_by_omega(&self, a: u32) -> u32 {
        if self.m == 1 {
            return ((a as u64 * self.omega as u64) % self.p as u64) as u32;
        }
        let mut d = self.digits(a);
        let top = d[self.m as usize - 1];
        for i in (1..self.m as usize).rev() {
            d[i] = d[i - 1];
        }
        d[0] = 0;
        if top != 0 {
            for (i, slot) in d.iter_mut().enumerate() {
                let sub = (top * self.modulus[i]) % self.p;
                *slot = (*slot + self.p - sub) % self.p;
            }
        }
        self.from_digits(&d)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The canonical primitive element.
    pub fn omega(&self) -> u32 {
        self.omega
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if let Some(t) = &self.add_table {
            t[(a * self.q + b) as usize]
        } else {
            self.add_digits(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg_table[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse { q: self.q });
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % order)) % order) as usize]
    }

    /// `omega^k`.
    pub fn omega_pow(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to base `omega`.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `x -> x^(p^d)`, the Frobenius relative to the subfield of degree `d`.
    pub fn frobenius(&self, a: u32, d: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(d))
    }

    /// Relative trace onto the subfield of degree `d`: the sum of `z^(Q^i)` for
    /// `i = 1..=e`, where `Q = p^d` and `e = m / d`.
    pub fn trace(&self, z: u32, d: u32) -> Result<u32> {
        if d == 0 || self.m % d != 0 {
            return Err(Error::Parameter("trace degree must divide the extension degree".into()));
        }
        let e = self.m / d;
        let mut acc = 0;
        let mut y = z;
        for _ in 0..e {
            y = self.frobenius(y, d);
            acc = self.add(acc, y);
        }
        Ok(acc)
    }

    /// Integer embedding of the prime field.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    /// Checked element constructor.
    pub fn element(&self, value: u32) -> Result<FieldElement<'_>> {
        if value >= self.q {
            return Err(Error::Parameter("element index out of range".into()));
        }
        Ok(FieldElement { field: self, value })
    }

    /// Evaluates a polynomial with coefficients in this field at `x`.
    pub fn eval_poly(&self, coeffs: &[u32], x: u32) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

/// A field element bound to its field, for checked mixed arithmetic.
#[derive(Clone, Copy)]
pub struct FieldElement<'a> {
    field: &'a Field,
    value: u32,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.value, self.field.q)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}

impl<'a> FieldElement<'a> {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &'a Field {
        self.field
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.q,
                right: other.field.q,
            });
        }
        Ok(())
    }

    fn wrap(&self, value: u32) -> Self {
        FieldElement {
            field: self.field,
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(self.field.pow(self.value, e))
    }

    pub fn frobenius(&self, d: u32) -> Self {
        self.wrap(self.field.frobenius(self.value, d))
    }

    pub fn trace(&self, d: u32) -> Result<Self> {
        Ok(self.wrap(self.field.trace(self.value, d)?))
    }
}

/// The embedding of `GF(p^d)` into `GF(p^m)` sending the small field's
/// primitive element to a root of its modulus in the big field.
#[derive(Clone, Debug)]
pub struct Embedding {
    small: Field,
    big: Field,
    forward: Vec<u32>,
    backward: Vec<Option<u32>>,
}

impl Embedding {
    pub fn new(small: &Field, big: &Field) -> Result<Self> {
        if small.p != big.p || big.m % small.m != 0 {
            return Err(Error::NotSubfield {
                small: small.q,
                big: big.q,
            });
        }
        let step = ((big.q - 1) / (small.q - 1)) as u64;
        let lifted_modulus: Vec<u32> = small.modulus.clone();
        let is_root = |x: u32| big.eval_poly(&lifted_modulus, x) == 0;
        let mut image = big.omega_pow(step);
        if !is_root(image) {
            // Only reachable with a non-Conway modulus: search the conjugates.
            let mut found = None;
            for k in 1..(small.q - 1) as u64 {
                let cand = big.omega_pow(step * k);
                if is_root(cand) {
                    found = Some(cand);
                    break;
                }
            }
            image = found.ok_or(Error::NotSubfield {
                small: small.q,
                big: big.q,
            })?;
        }
        let mut forward = vec![0u32; small.q as usize];
        let mut backward = vec![None; big.q as usize];
        backward[0] = Some(0);
        for k in 0..(small.q - 1) {
            let s = small.omega_pow(k as u64);
            let b = big.pow(image, k as u64);
            forward[s as usize] = b;
            backward[b as usize] = Some(s);
        }
        Ok(Embedding {
            small: small.clone(),
            big: big.clone(),
            forward,
            backward,
        })
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    #[inline]
    pub fn embed(&self, a: u32) -> u32 {
        self.forward[a as usize]
    }

    /// Pulls back an element of the big field lying in the subfield.
    #[inline]
    pub fn restrict(&self, a: u32) -> Option<u32> {
        self.backward[a as usize]
    }
}
