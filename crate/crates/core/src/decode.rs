//! Syndrome computation and algebraic decoding: r′ = g·e₂(X^{−m}) − f·e₁(X^{−m}),
//! reduction modulo h, Berlekamp–Massey over the BCH run, and the split of
//! the recovered error polynomial back into (e₁, e₂).

use std::collections::HashMap;

use serde::Serialize;

use crate::arith;
use crate::construct::Code;
use crate::distance;
use crate::error::{Error, Result};
use crate::field::{ExtElem, Field, QuadElem};
use crate::poly::{self, Poly, PolyArith};
use crate::symplectic::{self, PauliVector};

/// The syndrome polynomial before and after reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromePoly {
    /// r′ in F_p[X]/(Xⁿ − 1).
    pub rprime: Poly<u32>,
    /// (r′/g) mod h over F_p(η).
    pub r: Poly<QuadElem>,
}

/// Result of decoding one syndrome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodedError {
    pub e1: Vec<u32>,
    pub e2: Vec<u32>,
    pub success: bool,
}

/// Σᵢ ⟨Nⁱ(g, f), (e₁, e₂)⟩_σ · X^{−i}: each shifted generator measured
/// against the error under the σ-form.
pub fn form_sum_syndrome(code: &Code, e: &PauliVector) -> Poly<u32> {
    let n = code.n();
    let fp = code.prime_field();
    let mut gen = PauliVector {
        a: code.g_dense(),
        b: code.f().to_dense(n, &0),
    };
    let mut out = vec![0u32; n];
    for i in 0..n {
        out[(n - i) % n] = symplectic::sigma_form(fp, &gen, e, &code.sigma);
        gen = symplectic::simultaneous_shift(&gen);
    }
    Poly::new(out)
}

/// g(X)·e₂(X^{−m}) − f(X)·e₁(X^{−m}) mod Xⁿ − 1.
pub fn closed_form_syndrome(code: &Code, e: &PauliVector) -> Result<Poly<u32>> {
    let n = code.n();
    let fp = code.prime_field();
    let m = code.blueprint.m;
    let e1s = Poly::new(poly::frobenius_substitute(&e.a, m)?);
    let e2s = Poly::new(poly::frobenius_substitute(&e.b, m)?);
    let g = Poly::new(code.g_dense());
    Ok(fp.psub(&fp.cyc_mul(&g, &e2s, n), &fp.cyc_mul(&code.f(), &e1s, n)))
}

/// Computes r′ both ways, requires agreement, and reduces it.
pub fn simulate_syndrome(code: &Code, e: &PauliVector) -> Result<SyndromePoly> {
    if e.n() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            got: e.n(),
        });
    }
    let by_forms = form_sum_syndrome(code, e);
    let closed = closed_form_syndrome(code, e)?;
    if by_forms != closed {
        return Err(Error::Invariant(
            "shifted-form syndrome differs from the closed form".into(),
        ));
    }
    let r = reduce_syndrome(code, &closed)?;
    Ok(SyndromePoly { rprime: closed, r })
}

/// (r′/g) mod h, lifted to F_p(η).
pub fn reduce_syndrome(code: &Code, rprime: &Poly<u32>) -> Result<Poly<QuadElem>> {
    let fp = code.prime_field();
    let quad = code.quad();
    let n = code.n();
    let g = code.g();
    let quotient = if g.degree() == Some(n) {
        if !rprime.is_zero() {
            return Err(Error::InexactDivision);
        }
        Poly::zero()
    } else {
        fp.pdiv_exact(rprime, &g)?
    };
    quad.prem(&quotient.map(|&c| quad.from_fp(c)), &code.h())
}

/// ⌊(d − 1)/4⌋ for the code's BCH distance.
pub fn correction_radius(code: &Code) -> usize {
    let d = distance::bch_distance(code.n(), &code.root_exponents()).d();
    (d - 1) / 4
}

/// Berlekamp–Massey on s₀, s₁, …; returns the connection polynomial Λ
/// (low degree first, Λ₀ = 1) and its length.
fn berlekamp_massey<F: Field>(field: &F, s: &[F::Elem]) -> (Vec<F::Elem>, usize) {
    let mut lambda = vec![field.one()];
    let mut prev = vec![field.one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut prev_disc = field.one();
    for k in 0..s.len() {
        let mut disc = s[k].clone();
        for i in 1..=len.min(lambda.len() - 1) {
            disc = field.add(&disc, &field.mul(&lambda[i], &s[k - i]));
        }
        if field.is_zero(&disc) {
            shift += 1;
            continue;
        }
        let coef = field.div(&disc, &prev_disc).expect("nonzero discrepancy");
        let mut next = lambda.clone();
        if next.len() < prev.len() + shift {
            next.resize(prev.len() + shift, field.zero());
        }
        for (i, b) in prev.iter().enumerate() {
            next[i + shift] = field.sub(&next[i + shift], &field.mul(&coef, b));
        }
        if 2 * len <= k {
            prev = lambda;
            len = k + 1 - len;
            prev_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
        lambda = next;
    }
    lambda.truncate(len + 1);
    (lambda, len)
}

/// Solves the square system M x = y over a field by elimination.
fn solve<F: Field>(
    field: &F,
    mut m: Vec<Vec<F::Elem>>,
    mut y: Vec<F::Elem>,
) -> Option<Vec<F::Elem>> {
    let k = y.len();
    for c in 0..k {
        let r = (c..k).find(|&r| !field.is_zero(&m[r][c]))?;
        m.swap(c, r);
        y.swap(c, r);
        let inv = field.inv(&m[c][c]).ok()?;
        for x in m[c].iter_mut() {
            *x = field.mul(x, &inv);
        }
        y[c] = field.mul(&y[c], &inv);
        for r in 0..k {
            if r == c || field.is_zero(&m[r][c]) {
                continue;
            }
            let f = m[r][c].clone();
            for j in 0..k {
                let t = field.mul(&f, &m[c][j]);
                m[r][j] = field.sub(&m[r][j], &t);
            }
            let t = field.mul(&f, &y[c]);
            y[r] = field.sub(&y[r], &t);
        }
    }
    Some(y)
}

/// Finds E with at most 2τ nonzero coefficients and E ≡ r mod h, using
/// 4τ syndromes at consecutive roots of h. `None` on decoding failure.
pub fn bmw_decode(code: &Code, r: &Poly<QuadElem>, tau: usize) -> Option<Vec<QuadElem>> {
    let n = code.n();
    let quad = code.quad();
    let zero = quad.zero();
    if r.is_zero() {
        return Some(vec![zero; n]);
    }
    if tau == 0 {
        return None;
    }
    let split = &code.ctx.split;
    let ext = split.ext();
    let run = distance::bch_distance(n, &code.root_exponents()).best;
    let nsyn = 4 * tau;
    if run.len < nsyn {
        return None;
    }
    // roots γ^{c+j} with γ = β^{u⁻¹}, so that γ^{c+j} = β^{u⁻¹(c+j)}
    let u_inv = arith::inverse_mod(run.multiplier, n).expect("unit") as i64;
    let gamma_pow = |e: i64| split.beta_pow(u_inv * e).clone();
    let r_ext = split.lift_quad_poly(r);
    let syndromes: Vec<ExtElem> = (0..nsyn)
        .map(|j| ext.peval(&r_ext, &gamma_pow(run.start as i64 + j as i64)))
        .collect();
    let (lambda, nu) = berlekamp_massey(ext, &syndromes);
    if nu == 0 || nu > 2 * tau {
        return None;
    }
    let lambda = Poly::new(lambda);
    let positions: Vec<usize> = (0..n)
        .filter(|&l| ext.is_zero(&ext.peval(&lambda, &gamma_pow(-(l as i64)))))
        .collect();
    if positions.len() != nu {
        return None;
    }
    // Σ_l Y_l X_l^j = S_j with X_l = γ^l and Y_l = E_l γ^{lc}
    let matrix: Vec<Vec<ExtElem>> = (0..nu)
        .map(|j| {
            positions
                .iter()
                .map(|&l| gamma_pow((l * j) as i64))
                .collect()
        })
        .collect();
    let values = solve(ext, matrix, syndromes[..nu].to_vec())?;
    let mut e = vec![zero; n];
    for (&l, y) in positions.iter().zip(&values) {
        let el = ext.mul(y, &gamma_pow(-((l * run.start) as i64)));
        e[l] = split.project_quad(&el).ok()?;
    }
    let check = quad.prem(&Poly::new(e.clone()), &code.h()).ok()?;
    if check != *r {
        return None;
    }
    Some(e)
}

/// Writes each E_j = e₂′_j − κ·e₁′_j with κ = c₀⁻¹η^p and undoes the
/// substitution X ↦ X^{−m}.
pub fn split_error(code: &Code, e: &[QuadElem]) -> (Vec<u32>, Vec<u32>) {
    let n = code.n();
    let quad = code.quad();
    let fp = quad.prime_field();
    let (c0, c1) = (quad.c0(), quad.c1());
    let m = code.blueprint.m;
    let mut e1 = vec![0u32; n];
    let mut e2 = vec![0u32; n];
    for l in 0..n {
        let coef = e[arith::rem_euclid(-m * l as i64, n)];
        let y = fp.mul(&c0, &coef.b);
        let x = fp.add(&coef.a, &fp.mul(&c1, &coef.b));
        e1[l] = y;
        e2[l] = x;
    }
    (e1, e2)
}

/// Decodes from r′ alone.
pub fn decode_syndrome(code: &Code, rprime: &Poly<u32>) -> Result<DecodedError> {
    let n = code.n();
    let r = reduce_syndrome(code, rprime)?;
    match bmw_decode(code, &r, correction_radius(code)) {
        Some(e) => {
            let (e1, e2) = split_error(code, &e);
            Ok(DecodedError {
                e1,
                e2,
                success: true,
            })
        }
        None => Ok(DecodedError {
            e1: vec![0; n],
            e2: vec![0; n],
            success: false,
        }),
    }
}

/// Full pipeline: syndrome of (e₁, e₂), reduction, BMW and split.
pub fn decode_error(code: &Code, e: &PauliVector) -> Result<DecodedError> {
    let s = simulate_syndrome(code, e)?;
    decode_syndrome(code, &s.rprime)
}

/// Physical error (x, z) to the (e₁, e₂) = (x, σz) convention of the σ-form.
pub fn physical_to_code(code: &Code, x: &[u32], z: &[u32]) -> PauliVector {
    PauliVector {
        a: x.to_vec(),
        b: code.sigma.apply(z),
    }
}

/// Weight that decoding guarantees are stated in: wt(e₁, σe₂).
pub fn sigma_weight(code: &Code, e: &PauliVector) -> usize {
    distance::weight_in_mode(code, e, distance::DistanceMode::Sigma)
}

/// Lookup table from syndromes (σ-form values against the basis of S) to
/// minimum-weight leaders.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    n: usize,
    p: u32,
    basis: Vec<PauliVector>,
    /// Leaders in (e₁, e₂) form, keyed by the syndrome index.
    entries: HashMap<u64, (usize, PauliVector)>,
    capacity: u128,
    max_weight_built: usize,
}

/// Default cap on the number of syndromes, p^{n−k}.
pub const DEFAULT_TABLE_BUDGET: u128 = 1 << 24;

impl SyndromeTable {
    /// Enumerates physical errors by ascending weight up to `max_weight`
    /// (or until every syndrome has a leader), keeping the first leader
    /// per syndrome; ties go to the lexicographically smallest (e₁, e₂).
    pub fn build(code: &Code, max_weight: usize, budget: u128) -> Result<Self> {
        let p = code.prime_field().p();
        let n = code.n();
        let capacity = code.stabilizer.size();
        if capacity > budget {
            return Err(Error::BudgetExceeded {
                required: capacity,
                budget,
            });
        }
        let mut table = Self {
            n,
            p,
            basis: code.stabilizer.rows().to_vec(),
            entries: HashMap::new(),
            capacity,
            max_weight_built: 0,
        };
        table.entries.insert(0, (0, PauliVector::zero(n)));
        let pairs: Vec<(u32, u32)> = (0..p)
            .flat_map(|x| (0..p).map(move |z| (x, z)))
            .filter(|&(x, z)| x != 0 || z != 0)
            .collect();
        for w in 1..=max_weight.min(n) {
            if table.entries.len() as u128 >= capacity {
                break;
            }
            let mut found: HashMap<u64, PauliVector> = HashMap::new();
            for support in combinations(n, w) {
                let mut digits = vec![0usize; w];
                loop {
                    let mut x = vec![0u32; n];
                    let mut z = vec![0u32; n];
                    for (i, &pos) in support.iter().enumerate() {
                        x[pos] = pairs[digits[i]].0;
                        z[pos] = pairs[digits[i]].1;
                    }
                    let e = physical_to_code(code, &x, &z);
                    let s = table.syndrome_index(code, &e);
                    if !table.entries.contains_key(&s) {
                        let slot = found.entry(s).or_insert_with(|| e.clone());
                        if lex_key(&e) < lex_key(slot) {
                            *slot = e;
                        }
                    }
                    if !advance(&mut digits, pairs.len()) {
                        break;
                    }
                }
            }
            for (s, e) in found {
                table.entries.insert(s, (w, e));
            }
            table.max_weight_built = w;
        }
        Ok(table)
    }

    /// The syndrome as a base-p integer of σ-form values.
    pub fn syndrome_index(&self, code: &Code, e: &PauliVector) -> u64 {
        let fp = code.prime_field();
        self.basis.iter().rev().fold(0u64, |acc, row| {
            acc * self.p as u64 + symplectic::sigma_form(fp, row, e, &code.sigma) as u64
        })
    }

    /// The leader for a syndrome, if one was tabulated.
    pub fn lookup(&self, syndrome: u64) -> Option<&PauliVector> {
        self.entries.get(&syndrome).map(|(_, e)| e)
    }

    pub fn leader_weight(&self, syndrome: u64) -> Option<usize> {
        self.entries.get(&syndrome).map(|(w, _)| *w)
    }

    /// Leader for the error's syndrome, or `None` if uncorrectable.
    pub fn decode(&self, code: &Code, e: &PauliVector) -> Option<&PauliVector> {
        self.lookup(self.syndrome_index(code, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.entries.len() as u128 == self.capacity
    }

    pub fn capacity(&self) -> u128 {
        self.capacity
    }

    pub fn max_weight_built(&self) -> usize {
        self.max_weight_built
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn lex_key(e: &PauliVector) -> (Vec<u32>, Vec<u32>) {
    (e.a.clone(), e.b.clone())
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// All w-subsets of 0..n in lexicographic order.
fn combinations(n: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..w).collect();
    if w > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..w).rev().find(|&i| cur[i] < n - w + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..w {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
