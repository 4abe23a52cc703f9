//! Dense univariate polynomials over any [`Field`], the cyclotomic ring
//! F[X]/(Xⁿ−1), and the factorization of Xⁿ−1 through cyclotomic cosets.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{ExtElem, Field, PrimeField, QuadElem, SplitField};

/// A coefficient type that knows its own zero.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug {
    fn is_zero_coeff(&self) -> bool;
}

impl Coeff for u32 {
    fn is_zero_coeff(&self) -> bool {
        *self == 0
    }
}

impl Coeff for QuadElem {
    fn is_zero_coeff(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Coeff for ExtElem {
    fn is_zero_coeff(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

/// Coefficients low-degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Coeff> Poly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_coeff()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Coefficient of Xⁱ.
    pub fn coeff(&self, i: usize, zero: &E) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| zero.clone())
    }

    /// Coefficient vector padded to length `n`. Panics if the degree is ≥ n.
    pub fn to_dense(&self, n: usize, zero: &E) -> Vec<E> {
        assert!(self.coeffs.len() <= n, "degree exceeds dense length");
        let mut v = self.coeffs.clone();
        v.resize(n, zero.clone());
        v
    }

    pub fn map<T: Coeff>(&self, f: impl FnMut(&E) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<E: fmt::Debug> fmt::Debug for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Polynomial arithmetic over the implementing field.
pub trait PolyArith: Field {
    fn pconst(&self, c: Self::Elem) -> Poly<Self::Elem> {
        Poly::new(vec![c])
    }

    fn pone(&self) -> Poly<Self::Elem> {
        self.pconst(self.one())
    }

    /// The monomial c·Xᵏ.
    fn pmonomial(&self, c: Self::Elem, k: usize) -> Poly<Self::Elem> {
        let mut v = vec![self.zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    fn padd(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let zero = self.zero();
        let len = f.coeffs().len().max(g.coeffs().len());
        Poly::new(
            (0..len)
                .map(|i| self.add(&f.coeff(i, &zero), &g.coeff(i, &zero)))
                .collect(),
        )
    }

    fn psub(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let zero = self.zero();
        let len = f.coeffs().len().max(g.coeffs().len());
        Poly::new(
            (0..len)
                .map(|i| self.sub(&f.coeff(i, &zero), &g.coeff(i, &zero)))
                .collect(),
        )
    }

    fn pscale(&self, f: &Poly<Self::Elem>, c: &Self::Elem) -> Poly<Self::Elem> {
        Poly::new(f.coeffs().iter().map(|x| self.mul(x, c)).collect())
    }

    fn pmul(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.zero(); f.coeffs().len() + g.coeffs().len() - 1];
        for (i, a) in f.coeffs().iter().enumerate() {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in g.coeffs().iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(a, b));
            }
        }
        Poly::new(out)
    }

    fn pdivrem(
        &self,
        f: &Poly<Self::Elem>,
        g: &Poly<Self::Elem>,
    ) -> Result<(Poly<Self::Elem>, Poly<Self::Elem>)> {
        let dg = g.degree().ok_or(Error::ZeroInverse)?;
        let lead_inv = self.inv(g.leading().expect("nonzero"))?;
        let mut rem = f.coeffs().to_vec();
        if rem.len() <= dg {
            return Ok((Poly::zero(), f.clone()));
        }
        let mut quot = vec![self.zero(); rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            let c = self.mul(&rem[i], &lead_inv);
            if c.is_zero_coeff() {
                continue;
            }
            for (j, gj) in g.coeffs().iter().enumerate() {
                rem[i - dg + j] = self.sub(&rem[i - dg + j], &self.mul(&c, gj));
            }
            quot[i - dg] = c;
        }
        rem.truncate(dg);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    fn prem(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Result<Poly<Self::Elem>> {
        Ok(self.pdivrem(f, g)?.1)
    }

    /// Quotient f/g, failing unless g divides f.
    fn pdiv_exact(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Result<Poly<Self::Elem>> {
        let (q, r) = self.pdivrem(f, g)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    fn pmonic(&self, f: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        match f.leading() {
            None => Poly::zero(),
            Some(l) => self.pscale(f, &self.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd (zero only if both inputs are zero).
    fn pgcd(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.prem(&a, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        self.pmonic(&a)
    }

    /// Returns (d, s, t) with s·f + t·g = d, d monic.
    fn pxgcd(
        &self,
        f: &Poly<Self::Elem>,
        g: &Poly<Self::Elem>,
    ) -> (Poly<Self::Elem>, Poly<Self::Elem>, Poly<Self::Elem>) {
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (self.pone(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.pone());
        while !r1.is_zero() {
            let (q, r) = self.pdivrem(&r0, &r1).expect("nonzero divisor");
            let s = self.psub(&s0, &self.pmul(&q, &s1));
            let t = self.psub(&t0, &self.pmul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = self.inv(&l).expect("nonzero");
                (
                    self.pscale(&r0, &li),
                    self.pscale(&s0, &li),
                    self.pscale(&t0, &li),
                )
            }
        }
    }

    /// Horner evaluation at a point of the same field.
    fn peval(&self, f: &Poly<Self::Elem>, x: &Self::Elem) -> Self::Elem {
        f.coeffs()
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    fn ppowmod(
        &self,
        f: &Poly<Self::Elem>,
        mut e: u128,
        modulus: &Poly<Self::Elem>,
    ) -> Result<Poly<Self::Elem>> {
        let mut base = self.prem(f, modulus)?;
        let mut acc = self.prem(&self.pone(), modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.prem(&self.pmul(&acc, &base), modulus)?;
            }
            base = self.prem(&self.pmul(&base, &base), modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Xⁿ − 1.
    fn x_n_minus_1(&self, n: usize) -> Poly<Self::Elem> {
        let mut v = vec![self.zero(); n + 1];
        v[0] = self.neg(&self.one());
        v[n] = self.add(&v[n], &self.one());
        Poly::new(v)
    }

    /// Reduction modulo Xⁿ − 1 by folding exponents.
    fn cyc_reduce(&self, f: &Poly<Self::Elem>, n: usize) -> Poly<Self::Elem> {
        let mut out = vec![self.zero(); n];
        for (i, c) in f.coeffs().iter().enumerate() {
            out[i % n] = self.add(&out[i % n], c);
        }
        Poly::new(out)
    }

    fn cyc_mul(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>, n: usize) -> Poly<Self::Elem> {
        self.cyc_reduce(&self.pmul(f, g), n)
    }

    fn cyc_pow(&self, f: &Poly<Self::Elem>, mut e: u128, n: usize) -> Poly<Self::Elem> {
        let mut base = self.cyc_reduce(f, n);
        let mut acc = self.cyc_reduce(&self.pone(), n);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.cyc_mul(&acc, &base, n);
            }
            base = self.cyc_mul(&base, &base, n);
            e >>= 1;
        }
        acc
    }

    /// Chinese remaindering: the unique result of degree below Σ deg mᵢ
    /// congruent to each value modulo its modulus.
    fn crt_combine(
        &self,
        residues: &[(Poly<Self::Elem>, Poly<Self::Elem>)],
    ) -> Result<Poly<Self::Elem>> {
        let mut acc = Poly::zero();
        let mut modulus = self.pone();
        for (value, m) in residues {
            if m.is_zero() {
                return Err(Error::InvalidInput("zero modulus".into()));
            }
            let (d, s, _) = self.pxgcd(&modulus, m);
            if d.degree() != Some(0) {
                return Err(Error::NonCoprimeModuli);
            }
            // acc + modulus·k ≡ value (mod m), with k = (value − acc)·modulus⁻¹
            let diff = self.prem(&self.psub(value, &acc), m)?;
            let k = self.prem(&self.pmul(&diff, &s), m)?;
            acc = self.padd(&acc, &self.pmul(&modulus, &k));
            modulus = self.pmul(&modulus, m);
            acc = self.prem(&acc, &modulus)?;
        }
        Ok(acc)
    }
}

impl<F: Field> PolyArith for F {}

/// Rabin's irreducibility test for a monic polynomial over F_p.
pub fn is_irreducible(fp: &PrimeField, f: &Poly<u32>) -> bool {
    let Some(degree) = f.degree() else {
        return false;
    };
    if degree == 0 {
        return false;
    }
    if degree == 1 {
        return true;
    }
    let p = fp.p() as u128;
    let x = fp.pmonomial(1, 1);
    // frob[k] = X^(p^k) mod f
    let mut frob = Vec::with_capacity(degree + 1);
    frob.push(fp.prem(&x, f).expect("nonzero modulus"));
    for k in 1..=degree {
        let next = fp.ppowmod(&frob[k - 1], p, f).expect("nonzero modulus");
        frob.push(next);
    }
    if frob[degree] != frob[0] {
        return false;
    }
    arith::prime_factors(degree as u128).into_iter().all(|r| {
        let k = degree / r as usize;
        let diff = fp.psub(&frob[k], &x);
        fp.pgcd(&diff, f).degree() == Some(0)
    })
}

/// Orbits of i ↦ q·i mod n, each listed in orbit order from its smallest
/// element, sorted by that element.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Vec<Vec<usize>> {
    assert!(arith::gcd(n as u64, q) == 1, "q must be coprime to n");
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = ((i as u128 * q as u128) % n as u128) as usize;
        }
        cosets.push(coset);
    }
    cosets
}

/// An irreducible factor of Xⁿ−1 named by the smallest exponent of β
/// among its roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor<E> {
    pub index: usize,
    pub coset: Vec<usize>,
    pub poly: Poly<E>,
}

impl<E: Coeff> Factor<E> {
    pub fn degree(&self) -> usize {
        self.coset.len()
    }
}

/// The complete factorization of Xⁿ−1 over F_p or F_{p²}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet<E> {
    pub n: usize,
    /// Coset multiplier: p for F_p factors, p² for F_{p²} factors.
    pub q: u64,
    pub factors: Vec<Factor<E>>,
}

impl<E: Coeff> FactorSet<E> {
    pub fn get(&self, index: usize) -> Result<&Factor<E>> {
        self.factors
            .iter()
            .find(|f| f.index == index)
            .ok_or(Error::UnknownFactor(index))
    }

    /// Index of the factor having β^exponent as a root.
    pub fn index_of_root(&self, exponent: usize) -> usize {
        self.factors
            .iter()
            .find(|f| f.coset.contains(&(exponent % self.n)))
            .expect("cosets partition Z_n")
            .index
    }
}

fn minimal_polynomial(split: &SplitField, coset: &[usize]) -> Poly<ExtElem> {
    let ext = split.ext();
    coset.iter().fold(ext.pone(), |acc, &i| {
        let root = split.beta_pow(i as i64);
        let linear = Poly::new(vec![ext.neg(root), ext.one()]);
        ext.pmul(&acc, &linear)
    })
}

/// Factors of Xⁿ−1 over F_p: products ∏_{i∈C}(X − βⁱ) over p-cosets C.
pub fn factor_over_prime(split: &SplitField) -> Result<FactorSet<u32>> {
    let n = split.n();
    let p = split.prime_field().p() as u64;
    let factors = cyclotomic_cosets(n, p)
        .into_iter()
        .map(|coset| {
            let poly = minimal_polynomial(split, &coset);
            let coeffs = poly
                .coeffs()
                .iter()
                .map(|c| split.project_fp(c))
                .collect::<Result<Vec<_>>>()?;
            Ok(Factor {
                index: coset[0],
                coset,
                poly: Poly::new(coeffs),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorSet { n, q: p, factors })
}

/// Factors of Xⁿ−1 over F_p(η): products over p²-cosets.
pub fn factor_over_quad(split: &SplitField) -> Result<FactorSet<QuadElem>> {
    let n = split.n();
    let p = split.prime_field().p() as u64;
    let factors = cyclotomic_cosets(n, p * p)
        .into_iter()
        .map(|coset| {
            let poly = minimal_polynomial(split, &coset);
            let coeffs = poly
                .coeffs()
                .iter()
                .map(|c| split.project_quad(c))
                .collect::<Result<Vec<_>>>()?;
            Ok(Factor {
                index: coset[0],
                coset,
                poly: Poly::new(coeffs),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorSet {
        n,
        q: p * p,
        factors,
    })
}

/// The substitution a(X) ↦ a(X^{−m}) on a dense length-n residue: the
/// coefficient at i moves to −m·i mod n.
pub fn frobenius_substitute<E: Clone>(a: &[E], m: i64) -> Result<Vec<E>> {
    let n = a.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if arith::rem_euclid(m * m, n) != 1 % n {
        return Err(Error::NotInvolution { m, n });
    }
    let mut out = a.to_vec();
    for (i, c) in a.iter().enumerate() {
        out[arith::rem_euclid(-m * i as i64, n)] = c.clone();
    }
    Ok(out)
}

/// Coefficientwise Frobenius of an F_{p²} polynomial.
pub fn conjugate_poly(quad: &crate::field::QuadField, f: &Poly<QuadElem>) -> Poly<QuadElem> {
    f.map(|c| quad.frobenius(c))
}
