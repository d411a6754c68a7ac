//! The Hermitian pencil of `PG(n-1, q^2)` and its field-reduced quadric pencil.
//!
//! Members are `h_lambda(v) = Tr(lambda x . y^q)` for `v = (x | y)` split in
//! halves and `lambda = a + b w` with `(a : b)` in `PG(1, q)`; `lambda = 1`
//! is `X_1 X_{n/2+1}^q + ... + X_{n/2} X_n^q + conjugate`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::census;
use super::hermitian::HermitianVariety;
use super::quadric::Quadric;
use super::reduction::FieldReduction;
use super::spread::{SpreadFamily, SpreadKind};
use super::subspace::Subspace;
use crate::algebra::singer::minimal_polynomial;
use crate::algebra::{Embedding, Field, Matrix, SingerFrame};
use crate::error::{Error, Result};

fn cardinality(what: &str, expected: BigUint, found: usize) -> Result<()> {
    if expected != BigUint::from(found) {
        return Err(Error::Cardinality {
            what: what.into(),
            expected: format!("{expected}"),
            found: format!("{found}"),
        });
    }
    Ok(())
}

/// The parameters `(1:0), (0:1), (1:1), ..., (a:1)` of `PG(1, q)`, in this order.
pub fn pencil_parameters(f: &Field) -> Vec<(u32, u32)> {
    let mut out = vec![(1, 0), (0, 1)];
    out.extend((1..f.order()).map(|a| (a, 1)));
    out
}

/// The `q + 1` Hermitian varieties of the pencil with their base locus.
#[derive(Clone, Debug)]
pub struct HermitianPencil {
    n: usize,
    small: Field,
    big: Field,
    embedding: Embedding,
    params: Vec<(u32, u32)>,
    lambdas: Vec<u32>,
    members: Vec<HermitianVariety>,
    base_locus: Vec<Vec<u32>>,
    sigma: Subspace,
    sigma_prime: Subspace,
}

impl HermitianPencil {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    /// `GF(q^2)`.
    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn params(&self) -> &[(u32, u32)] {
        &self.params
    }

    /// `lambda = a + b w` for each member.
    pub fn lambdas(&self) -> &[u32] {
        &self.lambdas
    }

    pub fn members(&self) -> &[HermitianVariety] {
        &self.members
    }

    /// Points common to every member.
    pub fn base_locus(&self) -> &[Vec<u32>] {
        &self.base_locus
    }

    /// `X_1 = ... = X_{n/2} = 0`.
    pub fn sigma(&self) -> &Subspace {
        &self.sigma
    }

    /// `X_{n/2+1} = ... = X_n = 0`.
    pub fn sigma_prime(&self) -> &Subspace {
        &self.sigma_prime
    }
}

/// The Hermitian pencil for even `n >= 4`.
pub fn hermitian_pencil(n: usize, q: u32) -> Result<HermitianPencil> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::Parameter(format!("the Hermitian pencil needs even n >= 4, got {n}")));
    }
    let small = Field::of_order(q)?;
    let big = Field::new(small.characteristic(), 2 * small.degree())?;
    let embedding = Embedding::new(&small, &big)?;
    let half = n / 2;
    let params = pencil_parameters(&small);
    let mut lambdas = Vec::new();
    let mut members = Vec::new();
    for &(a, b) in &params {
        let lambda = big.add(embedding.embed(a), big.mul(embedding.embed(b), big.omega()));
        let conj = big.pow(lambda, q as u64);
        let mut gram = Matrix::zeros(big.order(), n, n);
        for i in 0..half {
            gram.set(i, half + i, lambda);
            gram.set(half + i, i, conj);
        }
        let h = HermitianVariety::new(gram, &big, q)?;
        if !h.is_nondegenerate(&big)? {
            return Err(Error::DegenerateForm);
        }
        lambdas.push(lambda);
        members.push(h);
    }
    let all = Subspace::full(big.order(), n).points(&big)?;
    let base_locus: Vec<Vec<u32>> = all
        .into_iter()
        .filter(|v| members[0].value(v, &big) == 0 && members[1].value(v, &big) == 0)
        .collect();
    cardinality(
        "Hermitian base locus",
        census::base_locus_hermitian(n as u64, q as u64)?,
        base_locus.len(),
    )?;
    let sigma = Subspace::coordinate(big.order(), n, half..n);
    let sigma_prime = Subspace::coordinate(big.order(), n, 0..half);
    Ok(HermitianPencil {
        n,
        small,
        big,
        embedding,
        params,
        lambdas,
        members,
        base_locus,
        sigma,
        sigma_prime,
    })
}

/// The reduction `GF(q^2)^n -> GF(q)^{2n}` matched to the pencil: the first
/// half goes to `x` with `phi(w x~) = phi(x~) T`, the second to `y`, and
/// `phi(x~) . phi(y~) = Tr(x~ . y~^q)`. Returns the reduction and `T`.
pub fn hermitian_reduction(n: usize, small: &Field, big: &Field) -> Result<(FieldReduction, Matrix)> {
    let q = small.order();
    let half = n / 2;
    let frame = SingerFrame::new(n, small)?;
    let t = frame.subfield_generator(2)?;
    let embedding = Embedding::new(small, big)?;
    let poly = minimal_polynomial(big.omega(), &embedding)?;
    let mut value = Matrix::zeros(q, n, n);
    let mut power = Matrix::identity(q, n);
    for &c in &poly {
        value = value.add(&power.scale(c, small)?, small)?;
        power = power.mul(&t, small)?;
    }
    if !value.is_zero() {
        return Err(Error::Verification("Singer subfield generator has the wrong minimal polynomial".into()));
    }
    // x-side basis b_i, b_i T with each b_i lexicographically least.
    let mut xrows: Vec<Vec<u32>> = Vec::new();
    let total = (q as u64).pow(n as u32);
    for idx in 1..total {
        if xrows.len() == n {
            break;
        }
        let mut v = vec![0u32; n];
        let mut r = idx;
        for slot in v.iter_mut().rev() {
            *slot = (r % q as u64) as u32;
            r /= q as u64;
        }
        let vt = t.vec_mul(&v, small);
        let mut trial = xrows.clone();
        trial.push(v.clone());
        trial.push(vt.clone());
        if Matrix::from_rows(q, &trial)?.rank(small)? == trial.len() {
            xrows.push(v);
            xrows.push(vt);
        }
    }
    let xm = Matrix::from_rows(q, &xrows)?;
    let basis = [1, big.omega()];
    let mut g = Matrix::zeros(q, n, n);
    for i in 0..half {
        for j in 0..2 {
            for k in 0..2 {
                let z = big.mul(basis[j], big.pow(basis[k], q as u64));
                let tr = big.trace(z, small.degree())?;
                let v = embedding
                    .restrict(tr)
                    .ok_or_else(|| Error::Verification("trace left the subfield".into()))?;
                g.set(2 * i + j, 2 * i + k, v);
            }
        }
    }
    let ym = g.transpose().mul(&xm.inverse(small)?.transpose(), small)?;
    let mut images = Matrix::zeros(q, 2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            images.set(r, c, xm.get(r, c));
            images.set(n + r, n + c, ym.get(r, c));
        }
    }
    let red = FieldReduction::with_images(embedding, n, basis.to_vec(), images)?;
    Ok((red, t))
}

/// The field-reduced pencil of hyperbolic quadrics in `PG(2n-1, q)`.
#[derive(Clone, Debug)]
pub struct QuadricPencil {
    n: usize,
    field: Field,
    params: Vec<(u32, u32)>,
    pairings: Vec<Matrix>,
    members: Vec<Quadric>,
    base_locus: Vec<Vec<u32>>,
    s: Subspace,
    s_prime: Subspace,
    reduction: FieldReduction,
    structure_x: Matrix,
    structure_y: Matrix,
}

impl QuadricPencil {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn params(&self) -> &[(u32, u32)] {
        &self.params
    }

    /// `P` with `Q(x, y) = x P y^T` for each member.
    pub fn pairings(&self) -> &[Matrix] {
        &self.pairings
    }

    pub fn members(&self) -> &[Quadric] {
        &self.members
    }

    pub fn base_locus(&self) -> &[Vec<u32>] {
        &self.base_locus
    }

    /// `phi(Sigma)`: the last `n` coordinates.
    pub fn s(&self) -> &Subspace {
        &self.s
    }

    /// `phi(Sigma')`: the first `n` coordinates.
    pub fn s_prime(&self) -> &Subspace {
        &self.s_prime
    }

    pub fn reduction(&self) -> &FieldReduction {
        &self.reduction
    }

    /// Multiplication by `w` on the `x` half.
    pub fn structure_x(&self) -> &Matrix {
        &self.structure_x
    }

    /// Multiplication by `w` on the `y` half.
    pub fn structure_y(&self) -> &Matrix {
        &self.structure_y
    }

    /// The Desarguesian line spread of `S` (images of the points of `Sigma`).
    pub fn spread_s(&self) -> Result<SpreadFamily> {
        self.spread_of(self.n / 2..self.n, &self.s)
    }

    /// The Desarguesian line spread of `S'`.
    pub fn spread_s_prime(&self) -> Result<SpreadFamily> {
        self.spread_of(0..self.n / 2, &self.s_prime)
    }

    fn spread_of(&self, coords: core::ops::Range<usize>, ambient: &Subspace) -> Result<SpreadFamily> {
        let big = self.reduction.big();
        let sigma = Subspace::coordinate(big.order(), self.n, coords);
        let mut lines = Vec::new();
        for p in sigma.points(big)? {
            lines.push(self.reduction.image_point(&p)?);
        }
        SpreadFamily::new(ambient.clone(), lines, SpreadKind::DesarguesianLine, &self.field)
    }
}

/// Applies the matched reduction to every member of a Hermitian pencil.
pub fn quadric_pencil(hp: &HermitianPencil) -> Result<QuadricPencil> {
    let n = hp.n;
    let small = hp.small.clone();
    let big = &hp.big;
    let (reduction, t) = hermitian_reduction(n, &small, big)?;
    let q = small.order();
    let mut pairings = Vec::new();
    let mut members = Vec::new();
    let basis_vectors: Vec<Vec<u32>> = (0..n)
        .flat_map(|i| {
            reduction.basis().iter().map(move |&b| {
                let mut v = vec![0u32; n];
                v[i] = b;
                v
            })
        })
        .collect();
    let images: Vec<Vec<u32>> = basis_vectors.iter().map(|v| reduction.image_vector(v)).collect();
    let restrict = |z: u32| {
        hp.embedding
            .restrict(z)
            .ok_or_else(|| Error::Verification("Hermitian value outside GF(q)".into()))
    };
    for (k, &(a, b)) in hp.params.iter().enumerate() {
        let p = Matrix::identity(q, n)
            .scale(a, &small)?
            .add(&t.scale(b, &small)?, &small)?;
        let mult = reduction.multiplication_matrix(hp.lambdas[k])?;
        if mult.submatrix(0..n, 0..n) != p {
            return Err(Error::Verification("pencil pairing disagrees with the reduction".into()));
        }
        let quad = Quadric::from_pairing(&p, &small)?;
        let h = &hp.members[k];
        // A quadratic form is fixed by its values and polar values on a basis.
        for (i, u) in basis_vectors.iter().enumerate() {
            if restrict(h.value(u, big))? != quad.value(&images[i], &small) {
                return Err(Error::Verification("reduced form disagrees with the Hermitian form".into()));
            }
            for (j, v) in basis_vectors.iter().enumerate().skip(i + 1) {
                let polar = big.add(h.sesquilinear(u, v, big), h.sesquilinear(v, u, big));
                if restrict(polar)? != quad.polar_value(&images[i], &images[j], &small) {
                    return Err(Error::Verification("reduced polar form disagrees".into()));
                }
            }
        }
        if !quad.is_nondegenerate(&small)? {
            return Err(Error::DegenerateForm);
        }
        pairings.push(p);
        members.push(quad);
    }
    let s = reduction.image(&hp.sigma)?;
    let s_prime = reduction.image(&hp.sigma_prime)?;
    if s != Subspace::coordinate(q, 2 * n, n..2 * n) || s_prime != Subspace::coordinate(q, 2 * n, 0..n) {
        return Err(Error::Verification("S and S' are not the coordinate halves".into()));
    }
    for m in &members {
        // A totally singular n-space in dimension 2n makes the quadric hyperbolic.
        if !m.is_totally_singular(&s, &small)? || !m.is_totally_singular(&s_prime, &small)? {
            return Err(Error::Verification("pencil member is not hyperbolic".into()));
        }
    }
    let base_locus: Vec<Vec<u32>> = Subspace::full(q, 2 * n)
        .points(&small)?
        .into_iter()
        .filter(|v| members[0].value(v, &small) == 0 && members[1].value(v, &small) == 0)
        .collect();
    cardinality(
        "quadric base locus",
        census::base_locus_quadric(n as u64, q as u64)?,
        base_locus.len(),
    )?;
    let omega = reduction.multiplication_matrix(big.omega())?;
    let structure_x = omega.submatrix(0..n, 0..n);
    let structure_y = omega.submatrix(n..2 * n, n..2 * n);
    Ok(QuadricPencil {
        n,
        field: small,
        params: hp.params.clone(),
        pairings,
        members,
        base_locus,
        s,
        s_prime,
        reduction,
        structure_x,
        structure_y,
    })
}

/// Generators common to every member of the pencil that meet both `S` and
/// `S'` nontrivially, checked against the census count.
pub fn common_generator_set(fp: &QuadricPencil) -> Result<Vec<Subspace>> {
    let f = &fp.field;
    let first = fp.members[0].generators(f)?;
    common_generators_from(fp, &first)
}

/// As [`common_generator_set`], reusing the generators of the first member.
pub fn common_generators_from(fp: &QuadricPencil, first: &[Subspace]) -> Result<Vec<Subspace>> {
    let f = &fp.field;
    let mut out = Vec::new();
    for g in first {
        if g.meet_dim(&fp.s, f)? == 0 || g.meet_dim(&fp.s_prime, f)? == 0 {
            continue;
        }
        let mut common = true;
        for m in &fp.members[1..] {
            if !m.is_totally_singular(g, f)? {
                common = false;
                break;
            }
        }
        if common {
            out.push(g.clone());
        }
    }
    cardinality(
        "common generators",
        census::common_generators(fp.n as u64, f.order() as u64)?,
        out.len(),
    )?;
    Ok(out)
}
