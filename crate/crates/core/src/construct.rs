//! Construction of σ_m-isotropic ideals: S generated by g(X)·h(X,η) over
//! F_p(η), with centralizer generated by h(X,η).

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::distance;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, QuadElem, QuadField, SplitField};
use crate::poly::{self, FactorSet, Poly, PolyArith};
use crate::symplectic::{self, PauliVector, SigmaInvolution, SubspaceBasis};

/// (n, p, m) together with the smallest t such that n | p^t + m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodTriplet {
    pub n: usize,
    pub p: u32,
    pub m: i64,
    pub t: u32,
}

impl GoodTriplet {
    pub fn sigma(&self) -> SigmaInvolution {
        SigmaInvolution::new(self.m, self.n).expect("validated involution")
    }

    pub fn route(&self) -> Route {
        if arith::rem_euclid(self.m, self.n) == arith::rem_euclid(-1, self.n) {
            Route::MinusOne
        } else {
            Route::PowerOfP
        }
    }
}

/// Which square root of unity the construction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// m ≡ −1: σ is i ↦ −i and t = 0.
    MinusOne,
    /// m ≡ −p^t with t even.
    PowerOfP,
}

pub fn validate_good_triplet(n: usize, p: u32, m: i64) -> Result<GoodTriplet> {
    PrimeField::new(p)?;
    if n < 2 || arith::gcd(n as u64, p as u64) != 1 {
        return Err(Error::NotCoprime { n, p });
    }
    SigmaInvolution::new(m, n)?;
    let order = arith::mult_order(p as u64, n as u64);
    if order % 2 == 1 {
        return Err(Error::OddOrder { n, p, order });
    }
    let target = arith::rem_euclid(-m, n) as u64;
    if target == 1 {
        return Ok(GoodTriplet { n, p, m, t: 0 });
    }
    let t = (1..=order)
        .find(|&t| arith::pow_mod(p as u64, t as u64, n as u64) == target)
        .ok_or(Error::NotGood { n, p, m })?;
    if t % 2 == 1 {
        return Err(Error::OddExponent { n, p, m, t });
    }
    Ok(GoodTriplet { n, p, m, t })
}

/// Picks m: when ord_n(p) = 4s the route m = −p^{2s}, otherwise m = −1.
pub fn strategy_select(n: usize, p: u32) -> Result<GoodTriplet> {
    if n < 2 || arith::gcd(n as u64, p as u64) != 1 {
        return Err(Error::NotCoprime { n, p });
    }
    let order = arith::mult_order(p as u64, n as u64);
    if order % 2 == 1 {
        return Err(Error::OddOrder { n, p, order });
    }
    if order.is_multiple_of(4) {
        let half = arith::pow_mod(p as u64, (order / 2) as u64, n as u64) as i64;
        let m = if half as usize == n - 1 { 1 } else { -half };
        return validate_good_triplet(n, p, m);
    }
    validate_good_triplet(n, p, -1)
}

/// The field tower and both factorizations of Xⁿ−1 for one (n, p).
#[derive(Debug, Clone)]
pub struct FactorContext {
    pub split: SplitField,
    pub over_prime: FactorSet<u32>,
    pub over_quad: FactorSet<QuadElem>,
}

impl FactorContext {
    pub fn new(n: usize, p: u32) -> Result<Self> {
        let quad = QuadField::canonical(PrimeField::new(p)?);
        let split = SplitField::new(quad, n)?;
        let over_prime = poly::factor_over_prime(&split)?;
        let over_quad = poly::factor_over_quad(&split)?;
        Ok(Self {
            split,
            over_prime,
            over_quad,
        })
    }

    pub fn n(&self) -> usize {
        self.split.n()
    }

    pub fn quad(&self) -> &QuadField {
        self.split.quad()
    }

    pub fn prime_field(&self) -> &PrimeField {
        self.split.prime_field()
    }

    /// The F_{p²} factor conjugate to the given one (roots raised to p).
    pub fn conjugate_index(&self, index: usize) -> usize {
        let p = self.prime_field().p() as usize;
        self.over_quad.index_of_root(index * p % self.n())
    }
}

/// Returns g and the sorted indices of its F_p factors: every odd-degree
/// factor plus the requested extras.
pub fn build_g(ctx: &FactorContext, extra: &[usize]) -> Result<(Poly<u32>, Vec<usize>)> {
    let mut indices: Vec<usize> = ctx
        .over_prime
        .factors
        .iter()
        .filter(|f| f.degree() % 2 == 1)
        .map(|f| f.index)
        .collect();
    for &e in extra {
        ctx.over_prime.get(e)?;
        indices.push(e);
    }
    indices.sort_unstable();
    indices.dedup();
    let fp = ctx.prime_field();
    let mut g = fp.pone();
    for &i in &indices {
        g = fp.pmul(&g, &ctx.over_prime.get(i)?.poly);
    }
    Ok((g, indices))
}

/// A Frobenius-conjugate pair of F_{p²} factors, smaller index first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugatePair {
    pub first: usize,
    pub second: usize,
}

fn in_g(ctx: &FactorContext, g_indices: &[usize], quad_index: usize) -> bool {
    g_indices.contains(&ctx.over_prime.index_of_root(quad_index))
}

/// Groups the F_{p²} factors of (Xⁿ−1)/g into conjugate pairs.
pub fn pair_conjugate_factors(
    ctx: &FactorContext,
    g_indices: &[usize],
) -> Result<Vec<ConjugatePair>> {
    let mut pairs = Vec::new();
    for f in &ctx.over_quad.factors {
        if in_g(ctx, g_indices, f.index) {
            continue;
        }
        let conj = ctx.conjugate_index(f.index);
        if conj == f.index {
            return Err(Error::UnpairedFactor(f.index));
        }
        if f.index < conj {
            pairs.push(ConjugatePair {
                first: f.index,
                second: conj,
            });
        }
    }
    Ok(pairs)
}

/// How to pick one member from each conjugate pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HSelection {
    Explicit(Vec<usize>),
    /// Longest BCH run, ties to the lexicographically smallest index list.
    Auto,
}

const AUTO_SELECTION_LIMIT: usize = 20;

/// Returns the sorted F_{p²} factor indices forming h.
pub fn choose_h(
    ctx: &FactorContext,
    pairs: &[ConjugatePair],
    selection: &HSelection,
) -> Result<Vec<usize>> {
    match selection {
        HSelection::Explicit(chosen) => {
            let mut chosen = chosen.clone();
            chosen.sort_unstable();
            chosen.dedup();
            for &c in &chosen {
                ctx.over_quad.get(c)?;
                if !pairs.iter().any(|pr| pr.first == c || pr.second == c) {
                    return Err(Error::InvalidSelection(format!(
                        "factor {c} divides g and cannot be part of h"
                    )));
                }
            }
            for pr in pairs {
                let hits = chosen
                    .iter()
                    .filter(|&&c| c == pr.first || c == pr.second)
                    .count();
                if hits != 1 {
                    return Err(Error::InvalidSelection(format!(
                        "exactly one of factors {} and {} must be selected",
                        pr.first, pr.second
                    )));
                }
            }
            Ok(chosen)
        }
        HSelection::Auto => {
            if pairs.len() > AUTO_SELECTION_LIMIT {
                return Err(Error::InvalidSelection(format!(
                    "{} conjugate pairs is too many for automatic selection",
                    pairs.len()
                )));
            }
            let mut best: Option<(usize, Vec<usize>)> = None;
            for mask in 0u32..(1 << pairs.len()) {
                let mut chosen: Vec<usize> = pairs
                    .iter()
                    .enumerate()
                    .map(|(i, pr)| {
                        if mask >> i & 1 == 1 {
                            pr.second
                        } else {
                            pr.first
                        }
                    })
                    .collect();
                chosen.sort_unstable();
                let d = distance::bch_distance(ctx.n(), &root_exponents(ctx, &chosen)).d();
                let better = match &best {
                    None => true,
                    Some((bd, bc)) => d > *bd || (d == *bd && chosen < *bc),
                };
                if better {
                    best = Some((d, chosen));
                }
            }
            Ok(best.map(|(_, c)| c).unwrap_or_default())
        }
    }
}

/// Sorted exponents i with h(βⁱ) = 0.
pub fn root_exponents(ctx: &FactorContext, h_indices: &[usize]) -> Vec<usize> {
    let mut roots: Vec<usize> = h_indices
        .iter()
        .flat_map(|&i| ctx.over_quad.get(i).expect("known factor").coset.clone())
        .collect();
    roots.sort_unstable();
    roots
}

fn product_quad(ctx: &FactorContext, indices: &[usize]) -> Result<Poly<QuadElem>> {
    let quad = ctx.quad();
    let mut acc = quad.pone();
    for &i in indices {
        acc = quad.pmul(&acc, &ctx.over_quad.get(i)?.poly);
    }
    Ok(acc)
}

fn lift(quad: &QuadField, f: &Poly<u32>) -> Poly<QuadElem> {
    f.map(|&c| quad.from_fp(c))
}

/// The unique a of degree < n with a ≡ 0 mod g, a ≡ η^p mod h and
/// a ≡ η mod h̄, required to have all coefficients in F_p.
pub fn compute_a(
    quad: &QuadField,
    g: &Poly<u32>,
    h: &Poly<QuadElem>,
    hbar: &Poly<QuadElem>,
) -> Result<Poly<u32>> {
    let residues = [
        (Poly::zero(), lift(quad, g)),
        (quad.pconst(quad.eta_conj()), h.clone()),
        (quad.pconst(quad.eta()), hbar.clone()),
    ];
    let a = quad.crt_combine(&residues)?;
    let coeffs = a
        .coeffs()
        .iter()
        .map(|c| {
            if c.b == 0 {
                Ok(c.a)
            } else {
                Err(Error::NotInSubfield)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// μ(a) = a² − c₁a − c₀ reduced mod Xⁿ − 1.
pub fn mu_of(quad: &QuadField, a: &Poly<u32>, n: usize) -> Poly<u32> {
    let fp = quad.prime_field();
    let sq = fp.cyc_mul(a, a, n);
    let lin = fp.pscale(a, &quad.c1());
    fp.psub(&fp.psub(&sq, &lin), &fp.pconst(quad.c0()))
}

/// Everything needed to rebuild a code, in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeBlueprint {
    pub n: usize,
    pub p: u32,
    pub m: i64,
    pub t: u32,
    pub route: Route,
    /// μ(Y) = Y² − c1·Y − c0.
    pub c0: u32,
    pub c1: u32,
    /// Requested even-degree F_p factors of g.
    pub g_extra: Vec<usize>,
    /// All F_p factor indices of g.
    pub g_factors: Vec<usize>,
    pub h_factors: Vec<usize>,
    pub hbar_factors: Vec<usize>,
    pub g: Vec<u32>,
    pub h: Vec<QuadElem>,
    pub hbar: Vec<QuadElem>,
    pub a: Vec<u32>,
    pub f: Vec<u32>,
    pub k: usize,
    /// Exponents i with h(βⁱ) = 0, one list per factor of h.
    pub root_cosets: Vec<Vec<usize>>,
}

impl CodeBlueprint {
    pub fn triplet(&self) -> GoodTriplet {
        GoodTriplet {
            n: self.n,
            p: self.p,
            m: self.m,
            t: self.t,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("blueprint serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

/// A constructed code with its stabilizer and centralizer bases.
#[derive(Debug, Clone)]
pub struct Code {
    pub blueprint: CodeBlueprint,
    pub ctx: FactorContext,
    pub sigma: SigmaInvolution,
    /// F_p basis of S.
    pub stabilizer: SubspaceBasis,
    /// F_p basis of C(S), the σ_m-centralizer.
    pub centralizer: SubspaceBasis,
}

impl Code {
    pub fn construct(
        n: usize,
        p: u32,
        m: i64,
        g_extra: &[usize],
        selection: &HSelection,
    ) -> Result<Self> {
        let triplet = validate_good_triplet(n, p, m)?;
        let ctx = FactorContext::new(n, p)?;
        Self::from_parts(triplet, ctx, g_extra, selection)
    }

    pub fn construct_auto(
        n: usize,
        p: u32,
        g_extra: &[usize],
        selection: &HSelection,
    ) -> Result<Self> {
        let triplet = strategy_select(n, p)?;
        let ctx = FactorContext::new(n, p)?;
        Self::from_parts(triplet, ctx, g_extra, selection)
    }

    pub fn from_parts(
        triplet: GoodTriplet,
        ctx: FactorContext,
        g_extra: &[usize],
        selection: &HSelection,
    ) -> Result<Self> {
        let n = triplet.n;
        let quad = *ctx.quad();
        let fp = *ctx.prime_field();
        let (g, g_factors) = build_g(&ctx, g_extra)?;
        let pairs = pair_conjugate_factors(&ctx, &g_factors)?;
        let h_factors = choose_h(&ctx, &pairs, selection)?;
        let mut hbar_factors: Vec<usize> =
            h_factors.iter().map(|&i| ctx.conjugate_index(i)).collect();
        hbar_factors.sort_unstable();
        let h = product_quad(&ctx, &h_factors)?;
        let hbar = product_quad(&ctx, &hbar_factors)?;
        if quad.pmul(&quad.pmul(&lift(&quad, &g), &h), &hbar) != quad.x_n_minus_1(n) {
            return Err(Error::Invariant("g·h·h̄ ≠ Xⁿ − 1".into()));
        }
        if poly::conjugate_poly(&quad, &h) != hbar {
            return Err(Error::Invariant("h̄ is not the conjugate of h".into()));
        }
        let a = compute_a(&quad, &g, &h, &hbar)?;
        let q = fp.pdiv_exact(&fp.x_n_minus_1(n), &g)?;
        if !fp.prem(&mu_of(&quad, &a, n), &q)?.is_zero() {
            return Err(Error::Invariant("μ(a) is not divisible by (Xⁿ−1)/g".into()));
        }
        let c0_inv = fp.inv(&quad.c0())?;
        let f = fp.pscale(&fp.cyc_mul(&a, &g, n), &c0_inv);
        let k = g.degree().unwrap_or(0);
        let root_cosets = h_factors
            .iter()
            .map(|&i| ctx.over_quad.get(i).map(|f| f.coset.clone()))
            .collect::<Result<Vec<_>>>()?;
        let mut g_extra: Vec<usize> = g_extra.to_vec();
        g_extra.sort_unstable();
        g_extra.dedup();
        let blueprint = CodeBlueprint {
            n,
            p: triplet.p,
            m: triplet.m,
            t: triplet.t,
            route: triplet.route(),
            c0: quad.c0(),
            c1: quad.c1(),
            g_extra,
            g_factors,
            h_factors,
            hbar_factors,
            g: g.to_dense(n + 1, &0),
            h: h.coeffs().to_vec(),
            hbar: hbar.coeffs().to_vec(),
            a: a.to_dense(n, &0),
            f: f.to_dense(n, &0),
            k,
            root_cosets,
        };
        Self::assemble(blueprint, ctx)
    }

    /// Builds S and C(S) from a blueprint and checks every structural invariant.
    pub fn assemble(blueprint: CodeBlueprint, ctx: FactorContext) -> Result<Self> {
        let n = blueprint.n;
        let triplet = blueprint.triplet();
        let sigma = triplet.sigma();
        let quad = *ctx.quad();
        let fp = *ctx.prime_field();
        let g = Poly::new(blueprint.g.clone());
        let f = Poly::new(blueprint.f.clone());
        let generator = PauliVector::new(dense(&fp, &g, n), dense(&fp, &f, n))?;
        let mut gens = Vec::with_capacity(2 * n);
        let mut cur = generator.clone();
        for _ in 0..n {
            gens.push(symplectic::eta_action(&quad, &cur));
            gens.push(cur.clone());
            cur = symplectic::simultaneous_shift(&cur);
        }
        let stabilizer = SubspaceBasis::span(fp, n, &gens)?;
        let expected = n - blueprint.k;
        if stabilizer.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: stabilizer.dim(),
            });
        }
        if !symplectic::is_sigma_isotropic(&stabilizer, &sigma) {
            return Err(Error::Invariant("S is not σ-isotropic".into()));
        }
        let centralizer = symplectic::centralizer(&stabilizer, &sigma);
        if centralizer.dim() != n + blueprint.k || !centralizer.contains_subspace(&stabilizer) {
            return Err(Error::Invariant("centralizer has the wrong shape".into()));
        }
        Ok(Self {
            blueprint,
            ctx,
            sigma,
            stabilizer,
            centralizer,
        })
    }

    /// Rebuilds a code from the indices in a blueprint and requires the
    /// result to reproduce it exactly.
    pub fn load(blueprint: &CodeBlueprint) -> Result<Self> {
        let triplet = validate_good_triplet(blueprint.n, blueprint.p, blueprint.m)?;
        let ctx = FactorContext::new(blueprint.n, blueprint.p)?;
        let code = Self::from_parts(
            triplet,
            ctx,
            &blueprint.g_extra,
            &HSelection::Explicit(blueprint.h_factors.clone()),
        )?;
        if code.blueprint != *blueprint {
            return Err(Error::InvalidInput(
                "blueprint polynomials disagree with its factor indices".into(),
            ));
        }
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.blueprint.n
    }

    pub fn k(&self) -> usize {
        self.blueprint.k
    }

    pub fn prime_field(&self) -> &PrimeField {
        self.ctx.prime_field()
    }

    pub fn quad(&self) -> &QuadField {
        self.ctx.quad()
    }

    pub fn g(&self) -> Poly<u32> {
        Poly::new(self.blueprint.g.clone())
    }

    /// g reduced mod Xⁿ − 1 as a length-n vector (zero for the trivial code).
    pub fn g_dense(&self) -> Vec<u32> {
        dense(self.prime_field(), &self.g(), self.n())
    }

    pub fn a(&self) -> Poly<u32> {
        Poly::new(self.blueprint.a.clone())
    }

    pub fn f(&self) -> Poly<u32> {
        Poly::new(self.blueprint.f.clone())
    }

    pub fn h(&self) -> Poly<QuadElem> {
        Poly::new(self.blueprint.h.clone())
    }

    pub fn hbar(&self) -> Poly<QuadElem> {
        Poly::new(self.blueprint.hbar.clone())
    }

    /// (Xⁿ − 1)/g.
    pub fn q(&self) -> Poly<u32> {
        let fp = self.prime_field();
        fp.pdiv_exact(&fp.x_n_minus_1(self.n()), &self.g())
            .expect("g divides Xⁿ−1")
    }

    /// Exponents of the roots of h.
    pub fn root_exponents(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self
            .blueprint
            .root_cosets
            .iter()
            .flatten()
            .copied()
            .collect();
        r.sort_unstable();
        r
    }

    /// Generator of the centralizer ideal over F_p(η).
    pub fn centralizer_generator(&self) -> Poly<QuadElem> {
        self.h()
    }

    /// The explicit set {(u, c₀⁻¹·ã·u + v·Q̃)} where ã = a(X^{−m}) and
    /// Q̃ = (Xⁿ − 1)/gcd(Xⁿ − 1, g(X^{−m})); for m = −1 these are a and Q.
    pub fn z_set(&self) -> Result<SubspaceBasis> {
        let n = self.n();
        let fp = *self.prime_field();
        let m = self.blueprint.m;
        let a_sub = Poly::new(poly::frobenius_substitute(&self.blueprint.a, m)?);
        let g_sub = Poly::new(poly::frobenius_substitute(&dense(&fp, &self.g(), n), m)?);
        let xn = fp.x_n_minus_1(n);
        let q_sub = fp.pdiv_exact(&xn, &fp.pgcd(&xn, &g_sub))?;
        let c0_inv = fp.inv(&self.quad().c0())?;
        let au = fp.pscale(&a_sub, &c0_inv);
        let mut gens = Vec::new();
        for j in 0..n {
            let u = fp.pmonomial(1, j);
            gens.push(PauliVector::new(
                dense(&fp, &u, n),
                dense(&fp, &fp.cyc_mul(&au, &u, n), n),
            )?);
            let v = fp.cyc_mul(&q_sub, &u, n);
            gens.push(PauliVector::new(vec![0; n], dense(&fp, &v, n))?);
        }
        SubspaceBasis::span(fp, n, &gens)
    }
}

fn dense(fp: &PrimeField, f: &Poly<u32>, n: usize) -> Vec<u32> {
    fp.cyc_reduce(f, n).to_dense(n, &0)
}
