//! Exact arithmetic in F_p, its quadratic extension F_p(η), and the
//! extension F_{p^L} that holds both η and the n-th roots of unity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::{self, Poly};

/// Arithmetic over a finite field whose elements are plain values.
pub trait Field {
    type Elem: poly::Coeff;

    fn characteristic(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Embeds an element of the prime subfield.
    fn from_fp(&self, x: u32) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    fn pow(&self, x: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The prime field F_p. Elements are `u32` values in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !arith::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into `0..p`.
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.p
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_fp(&self, x: u32) -> u32 {
        x % self.p
    }
    fn add(&self, x: &u32, y: &u32) -> u32 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, x: &u32, y: &u32) -> u32 {
        if x >= y {
            x - y
        } else {
            x + self.p - y
        }
    }
    fn neg(&self, x: &u32) -> u32 {
        if *x == 0 {
            0
        } else {
            self.p - x
        }
    }
    fn mul(&self, x: &u32, y: &u32) -> u32 {
        ((*x as u64 * *y as u64) % self.p as u64) as u32
    }
    fn inv(&self, x: &u32) -> Result<u32> {
        if *x == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(arith::pow_mod(*x as u64, self.p as u64 - 2, self.p as u64) as u32)
    }
}

/// An element `a + ηb` of F_p(η).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadElem {
    pub a: u32,
    pub b: u32,
}

impl QuadElem {
    pub const fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "η"),
            (0, b) => write!(f, "{b}η"),
            (a, 1) => write!(f, "{a}+η"),
            (a, b) => write!(f, "{a}+{b}η"),
        }
    }
}

/// F_p(η) where η is a root of μ(Y) = Y² − c₁Y − c₀.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadField {
    fp: PrimeField,
    c0: u32,
    c1: u32,
}

impl QuadField {
    /// Checks that μ has no root in F_p.
    pub fn new(fp: PrimeField, c0: u32, c1: u32) -> Result<Self> {
        let p = fp.p();
        if c0 >= p || c1 >= p {
            return Err(Error::InvalidInput(format!(
                "coefficients must lie in 0..{p}"
            )));
        }
        let field = Self { fp, c0, c1 };
        if (0..p).any(|y| field.mu_at(y) == 0) {
            return Err(Error::InvalidInput(format!(
                "Y^2 - {c1}Y - {c0} has a root in F_{p}"
            )));
        }
        Ok(field)
    }

    /// The canonical irreducible quadratic: Y² + Y + 1 for p = 2, otherwise
    /// Y² − c₀ with the smallest quadratic non-residue c₀.
    pub fn canonical(fp: PrimeField) -> Self {
        let p = fp.p();
        if p == 2 {
            return Self { fp, c0: 1, c1: 1 };
        }
        (1..p)
            .map(|c0| Self { fp, c0, c1: 0 })
            .find(|f| (0..p).all(|y| f.mu_at(y) != 0))
            .expect("every odd prime field has a quadratic non-residue")
    }

    fn mu_at(&self, y: u32) -> u32 {
        let fp = &self.fp;
        let y2 = fp.mul(&y, &y);
        fp.sub(&fp.sub(&y2, &fp.mul(&self.c1, &y)), &self.c0)
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.fp
    }
    pub fn c0(&self) -> u32 {
        self.c0
    }
    pub fn c1(&self) -> u32 {
        self.c1
    }

    pub fn eta(&self) -> QuadElem {
        QuadElem::new(0, 1)
    }

    /// η^p = c₁ − η, the other root of μ.
    pub fn eta_conj(&self) -> QuadElem {
        QuadElem::new(self.c1, self.fp.neg(&1))
    }

    /// x ↦ x^p, computed from the conjugate root.
    pub fn frobenius(&self, x: &QuadElem) -> QuadElem {
        let fp = &self.fp;
        QuadElem::new(fp.add(&x.a, &fp.mul(&self.c1, &x.b)), fp.neg(&x.b))
    }

    /// x · x^p, which lies in F_p.
    pub fn norm(&self, x: &QuadElem) -> u32 {
        let n = self.mul(x, &self.frobenius(x));
        debug_assert_eq!(n.b, 0);
        n.a
    }

    pub fn is_in_prime_field(&self, x: &QuadElem) -> bool {
        x.b == 0
    }

    /// Every element, ordered by (b, a).
    pub fn elements(&self) -> impl Iterator<Item = QuadElem> + '_ {
        let p = self.fp.p();
        (0..p).flat_map(move |b| (0..p).map(move |a| QuadElem::new(a, b)))
    }
}

impl Field for QuadField {
    type Elem = QuadElem;

    fn characteristic(&self) -> u32 {
        self.fp.p()
    }
    fn zero(&self) -> QuadElem {
        QuadElem::new(0, 0)
    }
    fn one(&self) -> QuadElem {
        QuadElem::new(self.fp.one(), 0)
    }
    fn from_fp(&self, x: u32) -> QuadElem {
        QuadElem::new(self.fp.from_fp(x), 0)
    }
    fn add(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem::new(self.fp.add(&x.a, &y.a), self.fp.add(&x.b, &y.b))
    }
    fn sub(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem::new(self.fp.sub(&x.a, &y.a), self.fp.sub(&x.b, &y.b))
    }
    fn neg(&self, x: &QuadElem) -> QuadElem {
        QuadElem::new(self.fp.neg(&x.a), self.fp.neg(&x.b))
    }
    fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        // (a + ηb)(c + ηd) with η² = c₀ + c₁η
        let fp = &self.fp;
        let ac = fp.mul(&x.a, &y.a);
        let bd = fp.mul(&x.b, &y.b);
        let cross = fp.add(&fp.mul(&x.a, &y.b), &fp.mul(&x.b, &y.a));
        QuadElem::new(
            fp.add(&ac, &fp.mul(&self.c0, &bd)),
            fp.add(&cross, &fp.mul(&self.c1, &bd)),
        )
    }
    fn inv(&self, x: &QuadElem) -> Result<QuadElem> {
        if self.is_zero(x) {
            return Err(Error::ZeroInverse);
        }
        let n_inv = self.fp.inv(&self.norm(x))?;
        let c = self.frobenius(x);
        Ok(QuadElem::new(
            self.fp.mul(&c.a, &n_inv),
            self.fp.mul(&c.b, &n_inv),
        ))
    }
}

/// Element of F_{p^L}: coefficient vector of length L in the polynomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtElem(pub Vec<u32>);

/// F_p[Z]/(modulus) for a monic irreducible modulus of degree L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    fp: PrimeField,
    modulus: Vec<u32>,
}

impl ExtField {
    /// First monic irreducible polynomial of the given degree, scanning
    /// candidates in increasing base-p order of their low coefficients.
    pub fn new(fp: PrimeField, degree: usize) -> Self {
        assert!(degree >= 1, "extension degree must be positive");
        let p = fp.p() as u128;
        let mut counter: u128 = 0;
        loop {
            let mut coeffs = Vec::with_capacity(degree + 1);
            let mut c = counter;
            for _ in 0..degree {
                coeffs.push((c % p) as u32);
                c /= p;
            }
            coeffs.push(1);
            let candidate = Poly::new(coeffs.clone());
            if poly::is_irreducible(&fp, &candidate) {
                return Self {
                    fp,
                    modulus: coeffs,
                };
            }
            counter += 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.fp
    }

    /// Monic modulus, low-degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u128 {
        (self.fp.p() as u128).pow(self.degree() as u32)
    }

    /// The element whose coefficients are the base-p digits of `index`.
    pub fn element_from_index(&self, mut index: u128) -> ExtElem {
        let p = self.fp.p() as u128;
        let mut v = vec![0u32; self.degree()];
        for slot in v.iter_mut() {
            *slot = (index % p) as u32;
            index /= p;
        }
        ExtElem(v)
    }

    pub fn generator_z(&self) -> ExtElem {
        let mut v = vec![0u32; self.degree()];
        if v.len() > 1 {
            v[1] = 1;
        } else {
            // degree one: Z ≡ −modulus[0]
            v[0] = self.fp.neg(&self.modulus[0]);
        }
        ExtElem(v)
    }

    /// Returns `Some(c)` when the element is the constant `c ∈ F_p`.
    pub fn as_prime(&self, x: &ExtElem) -> Option<u32> {
        if x.0[1..].iter().all(|&c| c == 0) {
            Some(x.0[0])
        } else {
            None
        }
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn characteristic(&self) -> u32 {
        self.fp.p()
    }
    fn zero(&self) -> ExtElem {
        ExtElem(vec![0; self.degree()])
    }
    fn one(&self) -> ExtElem {
        let mut v = vec![0; self.degree()];
        v[0] = 1;
        ExtElem(v)
    }
    fn from_fp(&self, x: u32) -> ExtElem {
        let mut v = vec![0; self.degree()];
        v[0] = self.fp.from_fp(x);
        ExtElem(v)
    }
    fn add(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        ExtElem(
            x.0.iter()
                .zip(&y.0)
                .map(|(a, b)| self.fp.add(a, b))
                .collect(),
        )
    }
    fn sub(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        ExtElem(
            x.0.iter()
                .zip(&y.0)
                .map(|(a, b)| self.fp.sub(a, b))
                .collect(),
        )
    }
    fn neg(&self, x: &ExtElem) -> ExtElem {
        ExtElem(x.0.iter().map(|a| self.fp.neg(a)).collect())
    }
    fn is_zero(&self, x: &ExtElem) -> bool {
        x.0.iter().all(|&c| c == 0)
    }
    fn mul(&self, x: &ExtElem, y: &ExtElem) -> ExtElem {
        let l = self.degree();
        let p = self.fp.p() as u64;
        let mut prod = vec![0u64; 2 * l - 1];
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        for i in (l..2 * l - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in self.modulus[..l].iter().enumerate() {
                let sub = c * mj as u64 % p;
                prod[i - l + j] = (prod[i - l + j] + p - sub) % p;
            }
        }
        ExtElem(prod[..l].iter().map(|&c| c as u32).collect())
    }
    fn inv(&self, x: &ExtElem) -> Result<ExtElem> {
        if self.is_zero(x) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(x, self.order() - 2))
    }
}

/// One field F_{p^L}, L = lcm(2, ord_n(p)), containing both F_p(η) and a
/// primitive n-th root of unity β.
#[derive(Debug, Clone)]
pub struct SplitField {
    n: usize,
    quad: QuadField,
    ext: ExtField,
    eta: ExtElem,
    beta: ExtElem,
    beta_powers: Vec<ExtElem>,
}

impl SplitField {
    pub fn new(quad: QuadField, n: usize) -> Result<Self> {
        let fp = *quad.prime_field();
        let p = fp.p();
        if n == 0 || arith::gcd(n as u64, p as u64) != 1 {
            return Err(Error::NotCoprime { n, p });
        }
        let order = arith::mult_order(p as u64, n as u64) as u64;
        let degree = arith::lcm(2, order) as usize;
        let ext = ExtField::new(fp, degree);
        let eta = embed_quadratic_root(&ext, &quad);
        let beta = primitive_nth_root(&ext, n)?;
        let mut beta_powers = Vec::with_capacity(n);
        let mut cur = ext.one();
        for _ in 0..n {
            beta_powers.push(cur.clone());
            cur = ext.mul(&cur, &beta);
        }
        Ok(Self {
            n,
            quad,
            ext,
            eta,
            beta,
            beta_powers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn quad(&self) -> &QuadField {
        &self.quad
    }
    pub fn ext(&self) -> &ExtField {
        &self.ext
    }
    pub fn prime_field(&self) -> &PrimeField {
        self.quad.prime_field()
    }
    /// Image of η.
    pub fn eta(&self) -> &ExtElem {
        &self.eta
    }
    pub fn beta(&self) -> &ExtElem {
        &self.beta
    }

    /// β^i for any integer exponent.
    pub fn beta_pow(&self, i: i64) -> &ExtElem {
        &self.beta_powers[arith::rem_euclid(i, self.n)]
    }

    pub fn lift_fp(&self, x: u32) -> ExtElem {
        self.ext.from_fp(x)
    }

    pub fn lift_quad(&self, x: &QuadElem) -> ExtElem {
        let b = self.ext.mul(&self.ext.from_fp(x.b), &self.eta);
        self.ext.add(&self.ext.from_fp(x.a), &b)
    }

    pub fn project_fp(&self, x: &ExtElem) -> Result<u32> {
        self.ext.as_prime(x).ok_or(Error::NotInSubfield)
    }

    /// Writes `x` as `a + ηb`; fails when `x ∉ F_p(η)`.
    pub fn project_quad(&self, x: &ExtElem) -> Result<QuadElem> {
        let fp = self.prime_field();
        let k = (1..self.ext.degree())
            .find(|&k| self.eta.0[k] != 0)
            .expect("η is not in the prime field");
        let b = fp.div(&x.0[k], &self.eta.0[k])?;
        let a = fp.sub(&x.0[0], &fp.mul(&b, &self.eta.0[0]));
        let q = QuadElem::new(a, b);
        if self.lift_quad(&q) == *x {
            Ok(q)
        } else {
            Err(Error::NotInSubfield)
        }
    }

    pub fn lift_fp_poly(&self, f: &Poly<u32>) -> Poly<ExtElem> {
        Poly::new(f.coeffs().iter().map(|&c| self.lift_fp(c)).collect())
    }

    pub fn lift_quad_poly(&self, f: &Poly<QuadElem>) -> Poly<ExtElem> {
        Poly::new(f.coeffs().iter().map(|c| self.lift_quad(c)).collect())
    }
}

/// A root of μ inside F_{p^L}; found by searching the subfield F_{p²}
/// spanned by 1 and a non-prime element of it.
fn embed_quadratic_root(ext: &ExtField, quad: &QuadField) -> ExtElem {
    let p = ext.prime_field().p();
    let q = ext.order();
    let cofactor = (q - 1) / ((p as u128) * (p as u128) - 1);
    for index in 1..q {
        let z = ext.element_from_index(index);
        let w = ext.pow(&z, cofactor);
        if ext.pow(&w, p as u128) == w {
            continue;
        }
        for b in 0..p {
            for a in 0..p {
                let y = ext.add(&ext.from_fp(a), &ext.mul(&ext.from_fp(b), &w));
                let mu = ext.sub(
                    &ext.sub(&ext.mul(&y, &y), &ext.mul(&ext.from_fp(quad.c1()), &y)),
                    &ext.from_fp(quad.c0()),
                );
                if ext.is_zero(&mu) {
                    return y;
                }
            }
        }
    }
    unreachable!("F_(p^L) with even L contains F_(p^2)")
}

/// Deterministic element of multiplicative order exactly `n`: the first
/// `z^((p^L−1)/n)`, scanning `z` by index, that passes the order test.
pub fn primitive_nth_root(ext: &ExtField, n: usize) -> Result<ExtElem> {
    let p = ext.prime_field().p();
    if n == 0 || arith::gcd(n as u64, p as u64) != 1 {
        return Err(Error::NotCoprime { n, p });
    }
    let q = ext.order();
    if !(q - 1).is_multiple_of(n as u128) {
        return Err(Error::InvalidInput(format!(
            "{n} does not divide |F_(p^L)^*| = {}",
            q - 1
        )));
    }
    if n == 1 {
        return Ok(ext.one());
    }
    let cofactor = (q - 1) / n as u128;
    let primes = arith::prime_factors(n as u128);
    for index in 1..q {
        let z = ext.element_from_index(index);
        let beta = ext.pow(&z, cofactor);
        if primes
            .iter()
            .all(|&r| ext.pow(&beta, n as u128 / r) != ext.one())
        {
            return Ok(beta);
        }
    }
    unreachable!("cyclic group of order q-1 has an element of every order dividing q-1")
}

/// Multiplicative order of `x`, by brute iteration (test and diagnostics use).
pub fn element_order<F: Field>(field: &F, x: &F::Elem) -> Option<u64> {
    if field.is_zero(x) {
        return None;
    }
    let one = field.one();
    let mut cur = x.clone();
    let mut k = 1u64;
    while cur != one {
        cur = field.mul(&cur, x);
        k += 1;
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> QuadField {
        QuadField::canonical(PrimeField::new(2).unwrap())
    }

    #[test]
    fn prime_field_basics() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.add(&1, &1), 0);
        assert!(PrimeField::new(9).is_err());
        let f7 = PrimeField::new(7).unwrap();
        for x in 1..7 {
            assert_eq!(f7.mul(&x, &f7.inv(&x).unwrap()), 1);
        }
        assert_eq!(f7.inv(&0), Err(Error::ZeroInverse));
    }

    #[test]
    fn f4_arithmetic() {
        let f = f4();
        let eta = f.eta();
        assert_eq!(f.mul(&eta, &eta), QuadElem::new(1, 1));
        assert_eq!(f.inv(&eta).unwrap(), QuadElem::new(1, 1));
        assert_eq!(f.frobenius(&eta), QuadElem::new(1, 1));
        assert_eq!(f.frobenius(&f.one()), f.one());
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn canonical_quadratics() {
        let f = f4();
        assert_eq!((f.c1(), f.c0()), (1, 1));
        let f3 = QuadField::canonical(PrimeField::new(3).unwrap());
        assert_eq!((f3.c1(), f3.c0()), (0, 2));
        for p in [3u32, 5, 7, 11, 13] {
            let q = QuadField::canonical(PrimeField::new(p).unwrap());
            let fp = PrimeField::new(p).unwrap();
            for y in 0..p {
                let v = fp.sub(&fp.sub(&fp.mul(&y, &y), &fp.mul(&q.c1(), &y)), &q.c0());
                assert_ne!(v, 0, "p={p} y={y}");
            }
        }
        assert!(QuadField::new(PrimeField::new(5).unwrap(), 1, 0).is_err());
    }

    #[test]
    fn frobenius_matches_power_and_is_additive() {
        for p in [2u32, 3, 5] {
            let f = QuadField::canonical(PrimeField::new(p).unwrap());
            let elems: Vec<_> = f.elements().collect();
            for x in &elems {
                assert_eq!(f.frobenius(x), f.pow(x, p as u128));
                assert_eq!(f.frobenius(&f.frobenius(x)), *x);
                for y in &elems {
                    assert_eq!(
                        f.frobenius(&f.add(x, y)),
                        f.add(&f.frobenius(x), &f.frobenius(y))
                    );
                }
            }
            for a in 0..p {
                assert_eq!(f.frobenius(&f.from_fp(a)), f.from_fp(a));
            }
            // μ(η) = 0
            let eta = f.eta();
            let mu = f.sub(
                &f.sub(&f.mul(&eta, &eta), &f.mul(&f.from_fp(f.c1()), &eta)),
                &f.from_fp(f.c0()),
            );
            assert_eq!(mu, f.zero());
        }
        // p = 3, μ = Y² + 1: η³ = −η
        let f = QuadField::canonical(PrimeField::new(3).unwrap());
        assert_eq!(f.pow(&f.eta(), 3), QuadElem::new(0, 2));
    }

    #[test]
    fn split_field_roots() {
        for (n, p, degree) in [
            (5usize, 2u32, 4usize),
            (9, 2, 6),
            (13, 2, 12),
            (1, 2, 2),
            (5, 3, 4),
        ] {
            let quad = QuadField::canonical(PrimeField::new(p).unwrap());
            let sf = SplitField::new(quad, n).unwrap();
            assert_eq!(sf.ext().degree(), degree);
            let ext = sf.ext();
            assert_eq!(element_order(ext, sf.beta()), Some(n as u64));
            let eta = sf.eta();
            let mu = ext.sub(
                &ext.sub(&ext.mul(eta, eta), &ext.mul(&ext.from_fp(quad.c1()), eta)),
                &ext.from_fp(quad.c0()),
            );
            assert!(ext.is_zero(&mu));
            for x in quad.elements() {
                assert_eq!(sf.project_quad(&sf.lift_quad(&x)).unwrap(), x);
            }
            assert!(sf.project_quad(sf.beta()).is_err() || n <= 3);
        }
    }

    #[test]
    fn nth_root_rejects_multiples_of_p() {
        let ext = ExtField::new(PrimeField::new(2).unwrap(), 4);
        assert!(matches!(
            primitive_nth_root(&ext, 6),
            Err(Error::NotCoprime { .. })
        ));
        let beta = primitive_nth_root(&ext, 5).unwrap();
        assert_eq!(element_order(&ext, &beta), Some(5));
        assert_eq!(primitive_nth_root(&ext, 1).unwrap(), ext.one());
    }

    #[test]
    fn ext_inverse() {
        let ext = ExtField::new(PrimeField::new(3).unwrap(), 4);
        for i in 1..81 {
            let x = ext.element_from_index(i);
            assert_eq!(ext.mul(&x, &ext.inv(&x).unwrap()), ext.one());
        }
    }
}
