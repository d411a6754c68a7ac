use pgcodes::algebra::conway::{conway_polynomial, CONWAY};
use pgcodes::algebra::{prime_power, Embedding, Field};
use pgcodes::Error;
use proptest::prelude::*;

// Naive polynomial arithmetic over GF(p), coefficients constant term first.

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (m..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        // f is monic: x^m = -(f_0 + ... + f_{m-1} x^{m-1})
        for t in 0..m {
            prod[k - m + t] = (prod[k - m + t] + (p - c) * f[t] % p) % p;
        }
        prod[k] = 0;
    }
    prod.truncate(m);
    prod.resize(m, 0);
    prod
}

fn poly_powmod(base: &[u64], mut e: u128, f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    let mut acc = vec![0u64; m];
    acc[0] = 1;
    let mut b = base.to_vec();
    b.resize(m, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn is_one(v: &[u64]) -> bool {
    v[0] == 1 && v[1..].iter().all(|&c| c == 0)
}

fn factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// x has order exactly p^m - 1 modulo f; for m = 1 the root -f_0 is primitive.
fn is_primitive(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        let g = (p - f[0] % p) % p;
        if g == 0 {
            return false;
        }
        let order = p as u128 - 1;
        let pw = |e: u128| (0..e).fold(1u64, |a, _| a * g % p);
        return factors(order).iter().all(|&r| pw(order / r) != 1);
    }
    let order = (p as u128).pow(m as u32) - 1;
    let x = {
        let mut v = vec![0u64; m];
        v[1] = 1;
        v
    };
    is_one(&poly_powmod(&x, order, f, p)) && factors(order).iter().all(|&r| !is_one(&poly_powmod(&x, order / r, f, p)))
}

/// Value of f_d at x^k modulo f_m, for the compatibility condition.
fn eval_at_power(fd: &[u64], k: u128, fm: &[u64], p: u64) -> Vec<u64> {
    let m = fm.len() - 1;
    let mut x = vec![0u64; m];
    if m == 1 {
        x[0] = (p - fm[0] % p) % p;
    } else {
        x[1] = 1;
    }
    let r = poly_powmod(&x, k, fm, p);
    let mut acc = vec![0u64; m];
    let mut pw = vec![0u64; m];
    pw[0] = 1;
    for &c in fd {
        for t in 0..m {
            acc[t] = (acc[t] + c * pw[t]) % p;
        }
        pw = poly_mulmod(&pw, &r, fm, p);
    }
    acc
}

fn compatible(p: u64, m: u32, fm: &[u64]) -> bool {
    (1..m).filter(|d| m % d == 0).all(|d| {
        let fd: Vec<u64> = conway_polynomial(p as u32, d)
            .expect("divisor degrees are tabulated")
            .iter()
            .map(|&c| c as u64)
            .collect();
        let k = ((p as u128).pow(m) - 1) / ((p as u128).pow(d) - 1);
        eval_at_power(&fd, k, fm, p).iter().all(|&c| c == 0)
    })
}

/// Conway ordering key: coefficient of x^i enters as (-1)^{m-i} c_i, read from x^{m-1} down.
fn conway_key(f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    (0..m)
        .rev()
        .map(|i| if (m - i) % 2 == 0 { f[i] } else { (p - f[i]) % p })
        .collect()
}

#[test]
fn table_entries_are_primitive_and_compatible() {
    for &(p, m, coeffs) in CONWAY {
        let f: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
        assert_eq!(f.len(), m as usize + 1, "GF({p}^{m}) degree");
        assert_eq!(*f.last().unwrap(), 1, "GF({p}^{m}) monic");
        assert!(is_primitive(&f, p as u64), "GF({p}^{m}) modulus is not primitive");
        assert!(compatible(p as u64, m, &f), "GF({p}^{m}) modulus fails subfield compatibility");
    }
}

#[test]
fn small_table_entries_are_least_in_conway_order() {
    for &(p, m, coeffs) in CONWAY {
        let (p, q) = (p as u64, (p as u64).pow(m));
        if q > 1 << 12 {
            continue;
        }
        let table: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
        let mut best: Option<Vec<u64>> = None;
        for code in 0..q {
            let mut f: Vec<u64> = (0..m).map(|i| code / p.pow(i) % p).collect();
            f.push(1);
            if is_primitive(&f, p) && compatible(p, m, &f) && best.as_ref().is_none_or(|b| conway_key(&f, p) < conway_key(b, p)) {
                best = Some(f);
            }
        }
        assert_eq!(best.as_deref(), Some(table.as_slice()), "GF({p}^{m})");
    }
}

#[test]
fn known_moduli() {
    assert_eq!(conway_polynomial(2, 4), Some(&[1, 1, 0, 0, 1][..]));
    assert_eq!(conway_polynomial(3, 2), Some(&[2, 2, 1][..]));
    assert_eq!(conway_polynomial(5, 2), Some(&[2, 4, 1][..]));
    assert_eq!(conway_polynomial(2, 17), None);
}

#[test]
fn unsupported_and_composite_orders() {
    assert!(matches!(Field::of_order(6), Err(Error::NotPrimePower(6))));
    assert!(matches!(Field::new(37, 1), Err(Error::UnsupportedField { p: 37, m: 1 })));
    assert_eq!(prime_power(64).unwrap(), (2, 6));
    assert_eq!(prime_power(49).unwrap(), (7, 2));
    assert!(prime_power(1).is_err());
}

#[test]
fn multiplication_matches_polynomial_product() {
    for q in [4u32, 8, 9, 16, 25, 27] {
        let f = Field::of_order(q).unwrap();
        let p = f.characteristic() as u64;
        let modulus: Vec<u64> = f.modulus().iter().map(|&c| c as u64).collect();
        let m = f.degree() as usize;
        let digits = |a: u32| -> Vec<u64> { (0..m).map(|i| (a as u64 / p.pow(i as u32)) % p).collect() };
        for a in 0..q {
            for b in 0..q {
                let expect = poly_mulmod(&digits(a), &digits(b), &modulus, p);
                assert_eq!(digits(f.mul(a, b)), expect, "GF({q}): {a} * {b}");
            }
        }
    }
}

#[test]
fn subfield_embedding_is_a_ring_map() {
    for (small, big) in [(2u32, 4u32), (2, 16), (4, 16), (3, 9), (3, 27), (2, 32)] {
        let s = Field::of_order(small).unwrap();
        let b = Field::of_order(big).unwrap();
        let e = Embedding::new(&s, &b).unwrap();
        for x in 0..small {
            assert_eq!(e.restrict(e.embed(x)), Some(x));
            for y in 0..small {
                assert_eq!(e.embed(s.add(x, y)), b.add(e.embed(x), e.embed(y)));
                assert_eq!(e.embed(s.mul(x, y)), b.mul(e.embed(x), e.embed(y)));
            }
        }
        let fixed = (0..big).filter(|&z| b.pow(z, small as u64) == z).count();
        assert_eq!(fixed, small as usize);
        assert_eq!((0..big).filter(|&z| e.restrict(z).is_some()).count(), small as usize);
    }
    let s = Field::of_order(4).unwrap();
    let b = Field::of_order(8).unwrap();
    assert!(matches!(Embedding::new(&s, &b), Err(Error::NotSubfield { .. })));
}

#[test]
fn trace_is_onto_the_subfield() {
    let big = Field::of_order(16).unwrap();
    let mut counts = std::collections::BTreeMap::new();
    for z in 0..16 {
        let t = big.trace(z, 2).unwrap();
        assert_eq!(big.pow(t, 4), t, "trace lands in GF(4)");
        *counts.entry(t).or_insert(0) += 1;
    }
    assert_eq!(counts.len(), 4);
    assert!(counts.values().all(|&c| c == 4));
    assert!(big.trace(1, 3).is_err());
}

fn field_and_elements() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 31, 32, 49, 64, 81, 121, 125, 243, 256])
        .prop_flat_map(|q| (Just(q), 0..q, 0..q, 0..q))
}

proptest! {
    #[test]
    fn field_axioms((q, a, b, c) in field_and_elements()) {
        let f = Field::of_order(q).unwrap();
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.pow(a, q as u64 - 1), 1);
            prop_assert_eq!(f.omega_pow(f.log(a).unwrap() as u64), a);
        } else {
            prop_assert!(f.inv(0).is_err());
        }
        prop_assert_eq!(f.pow(a, q as u64), a);
    }

    #[test]
    fn frobenius_is_additive((q, a, b, _c) in field_and_elements()) {
        let f = Field::of_order(q).unwrap();
        let p = f.characteristic();
        prop_assert_eq!(f.pow(f.add(a, b), p as u64), f.add(f.pow(a, p as u64), f.pow(b, p as u64)));
    }
}
