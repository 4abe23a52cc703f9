//! BCH bounds and exhaustive joint-weight distances of C(S) \ S.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::construct::Code;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::symplectic::{PauliVector, SubspaceBasis};

/// Default cap on |C(S)| for exhaustive search.
pub const DEFAULT_BUDGET: u128 = 1 << 26;

/// A cyclic run of consecutive exponents u·i (mod n) over roots βⁱ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BchRun {
    pub start: usize,
    pub len: usize,
    pub multiplier: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BchAnalysis {
    /// Longest run for β itself.
    pub natural: BchRun,
    /// Longest run over all primitive n-th roots β^u.
    pub best: BchRun,
}

impl BchAnalysis {
    pub fn d(&self) -> usize {
        self.best.len + 1
    }
}

fn longest_run(n: usize, present: &[bool]) -> (usize, usize) {
    if present.iter().all(|&x| x) {
        return (0, n);
    }
    let mut best = (0, 0);
    for start in 0..n {
        if !present[start] || present[(start + n - 1) % n] {
            continue;
        }
        let len = (0..n).take_while(|&j| present[(start + j) % n]).count();
        if len > best.1 {
            best = (start, len);
        }
    }
    best
}

/// Longest run of consecutive exponents among the roots of h, searched
/// over every unit multiplier (u = 1 first; ties keep the earlier one).
pub fn bch_distance(n: usize, roots: &[usize]) -> BchAnalysis {
    let run_for = |u: usize| {
        let mut present = vec![false; n];
        for &r in roots {
            present[r * u % n] = true;
        }
        let (start, len) = longest_run(n, &present);
        BchRun {
            start,
            len,
            multiplier: u,
        }
    };
    let natural = run_for(1);
    let mut best = natural;
    for u in arith::units(n) {
        let r = run_for(u);
        if r.len > best.len {
            best = r;
        }
    }
    BchAnalysis { natural, best }
}

/// (detect, correct) = (⌊(d+1)/2⌋ − 1, ⌊(d−1)/4⌋).
pub fn thm8_bounds(d: usize) -> (usize, usize) {
    assert!(d >= 1);
    (d.div_ceil(2) - 1, (d - 1) / 4)
}

/// (detect, correct) = (d − 1, ⌊(d − 1)/2⌋).
pub fn detect_correct_from_distance(d: usize) -> (usize, usize) {
    assert!(d >= 1);
    (d - 1, (d - 1) / 2)
}

/// Whether the second half is weighed as b or as σb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMode {
    Raw,
    Sigma,
}

/// Which nonzero elements of C(S) are searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// C(S) \ S: the errors that go undetected and act nontrivially.
    Nontrivial,
    /// C(S) \ {0}: the distance of C(S) as a classical additive code.
    Centralizer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteResult {
    /// `None` when the searched set is empty.
    pub distance: Option<usize>,
    /// A minimum-weight element of the searched set, in (a, b) form.
    pub witness: Option<PauliVector>,
    pub enumerated: u128,
}

/// Basis of C(S) listed as [basis of S; complement].
pub fn split_basis(s: &SubspaceBasis, c: &SubspaceBasis) -> (Vec<PauliVector>, Vec<PauliVector>) {
    let s_rows = s.rows().to_vec();
    let mut current = SubspaceBasis::span(*s.prime_field(), s.n(), &s_rows).expect("same n");
    let mut complement = Vec::new();
    for r in c.rows() {
        if !current.contains(r) {
            complement.push(r.clone());
            let mut all = current.rows().to_vec();
            all.push(r.clone());
            current = SubspaceBasis::span(*s.prime_field(), s.n(), &all).expect("same n");
        }
    }
    (s_rows, complement)
}

fn weigh(code: &Code, v: &PauliVector, mode: DistanceMode) -> usize {
    let b = match mode {
        DistanceMode::Raw => v.b.clone(),
        DistanceMode::Sigma => code.sigma.apply(&v.b),
    };
    v.a.iter()
        .zip(&b)
        .filter(|(x, y)| **x != 0 || **y != 0)
        .count()
}

/// Minimum joint weight of (a, b) (raw) or (a, σb) (sigma) over the
/// elements of C(S) selected by `scope`.
pub fn brute_force_distance(
    code: &Code,
    mode: DistanceMode,
    scope: Scope,
    budget: u128,
) -> Result<BruteResult> {
    let required = code.centralizer.size();
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let (s_rows, t_rows) = split_basis(&code.stabilizer, &code.centralizer);
    let empty = match scope {
        Scope::Nontrivial => t_rows.is_empty(),
        Scope::Centralizer => code.centralizer.dim() == 0,
    };
    if empty {
        return Ok(BruteResult {
            distance: None,
            witness: None,
            enumerated: 0,
        });
    }
    if code.prime_field().p() == 2 && code.n() <= 64 {
        Ok(binary_scan(code, &s_rows, &t_rows, mode, scope))
    } else {
        Ok(generic_scan(code, &s_rows, &t_rows, mode, scope))
    }
}

fn pack(code: &Code, v: &PauliVector, mode: DistanceMode) -> u128 {
    let b = match mode {
        DistanceMode::Raw => v.b.clone(),
        DistanceMode::Sigma => code.sigma.apply(&v.b),
    };
    let mut w = 0u128;
    for i in 0..v.n() {
        w |= (v.a[i] as u128) << i;
        w |= (b[i] as u128) << (64 + i);
    }
    w
}

#[inline]
fn packed_weight(v: u128) -> u32 {
    ((v as u64) | ((v >> 64) as u64)).count_ones()
}

/// Gray-code walk over all combinations of the C(S) basis, listed as
/// [complement; S] so the complement coordinates sit in the low bits of
/// the combination index. Chunks of consecutive indices are scanned in
/// parallel; for the nontrivial scope a combination whose complement part
/// is zero lies in S and is not weighed.
fn binary_scan(
    code: &Code,
    s_rows: &[PauliVector],
    t_rows: &[PauliVector],
    mode: DistanceMode,
    scope: Scope,
) -> BruteResult {
    let basis: Vec<u128> = t_rows
        .iter()
        .chain(s_rows)
        .map(|v| pack(code, v, mode))
        .collect();
    let total_bits = basis.len();
    let t_mask: u128 = match scope {
        Scope::Nontrivial => (1u128 << t_rows.len()) - 1,
        Scope::Centralizer => (1u128 << total_bits) - 1,
    };
    let chunk_bits = total_bits.min(22);
    let chunks: u128 = 1u128 << (total_bits - chunk_bits);
    let gray = |x: u128| x ^ (x >> 1);
    let combine = |g: u128| {
        (0..total_bits)
            .filter(|&b| g >> b & 1 == 1)
            .fold(0u128, |acc, b| acc ^ basis[b])
    };
    let best = (0..chunks as u64)
        .into_par_iter()
        .map(|c| {
            let base = (c as u128) << chunk_bits;
            let mut v = combine(gray(base));
            let mut best = (u32::MAX, 0u128);
            if gray(base) & t_mask != 0 {
                best = (packed_weight(v), gray(base));
            }
            for j in 1..(1u128 << chunk_bits) {
                let x = base + j;
                v ^= basis[x.trailing_zeros() as usize];
                let w = packed_weight(v);
                if w < best.0 && gray(x) & t_mask != 0 {
                    best = (w, gray(x));
                }
            }
            best
        })
        .min()
        .expect("at least one chunk");
    let coeffs = |i: usize| {
        // combine_rows lists S first, then the complement
        let bit = if i < s_rows.len() {
            t_rows.len() + i
        } else {
            i - s_rows.len()
        };
        (best.1 >> bit & 1) as u32
    };
    let witness = combine_rows(code, s_rows, t_rows, coeffs);
    let enumerated = match scope {
        Scope::Nontrivial => ((1u128 << t_rows.len()) - 1) << s_rows.len(),
        Scope::Centralizer => (1u128 << total_bits) - 1,
    };
    BruteResult {
        distance: Some(best.0 as usize),
        witness: Some(witness),
        enumerated,
    }
}

fn combine_rows(
    code: &Code,
    s_rows: &[PauliVector],
    t_rows: &[PauliVector],
    coeff: impl Fn(usize) -> u32,
) -> PauliVector {
    let fp = code.prime_field();
    let n = code.n();
    let mut out = PauliVector::zero(n);
    for (i, r) in s_rows.iter().chain(t_rows).enumerate() {
        let c = coeff(i);
        if c == 0 {
            continue;
        }
        for j in 0..n {
            out.a[j] = fp.add(&out.a[j], &fp.mul(&c, &r.a[j]));
            out.b[j] = fp.add(&out.b[j], &fp.mul(&c, &r.b[j]));
        }
    }
    out
}

/// Odometer walk for any p over every combination of the C(S) basis.
fn generic_scan(
    code: &Code,
    s_rows: &[PauliVector],
    t_rows: &[PauliVector],
    mode: DistanceMode,
    scope: Scope,
) -> BruteResult {
    let fp = *code.prime_field();
    let p = fp.p();
    let n = code.n();
    let rows: Vec<Vec<u32>> = s_rows
        .iter()
        .chain(t_rows)
        .map(|v| {
            let mut r = v.a.clone();
            r.extend(match mode {
                DistanceMode::Raw => v.b.clone(),
                DistanceMode::Sigma => code.sigma.apply(&v.b),
            });
            r
        })
        .collect();
    let dim_s = s_rows.len();
    let total = rows.len();
    let weight = |v: &[u32]| (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count();
    let mut digits = vec![0u32; total];
    let mut v = vec![0u32; 2 * n];
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut enumerated = 0u128;
    loop {
        // advance the odometer by one
        let mut d = 0;
        loop {
            if d == total {
                let witness_digits = best.as_ref().map(|b| b.1.clone()).expect("nonempty");
                let witness = combine_rows(code, s_rows, t_rows, |i| witness_digits[i]);
                return BruteResult {
                    distance: best.map(|b| b.0),
                    witness: Some(witness),
                    enumerated,
                };
            }
            for (x, y) in v.iter_mut().zip(&rows[d]) {
                *x = fp.add(x, y);
            }
            digits[d] = (digits[d] + 1) % p;
            if digits[d] != 0 {
                break;
            }
            d += 1;
        }
        if scope == Scope::Nontrivial && digits[dim_s..].iter().all(|&x| x == 0) {
            continue;
        }
        enumerated += 1;
        let w = weight(&v);
        if w == 0 {
            continue;
        }
        if best.as_ref().is_none_or(|b| w < b.0) {
            best = Some((w, digits.clone()));
        }
    }
}

/// Everything reported for one code, in table column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub n: usize,
    pub k: usize,
    pub g: String,
    pub h: String,
    pub bch: BchAnalysis,
    pub bch_d: usize,
    pub thm8_detect: usize,
    pub thm8_correct: usize,
    /// Detect/correct counts from the σ-weight distance of C(S).
    pub brute_detect: Option<usize>,
    pub brute_correct: Option<usize>,
    /// Minimum σ-weight over C(S)^σ \ {0}.
    pub brute_distance_sigma: Option<usize>,
    /// Minimum σ-weight over C(S)^σ \ S^σ.
    pub nontrivial_distance_sigma: Option<usize>,
    /// Minimum plain joint weight over C(S) \ S.
    pub nontrivial_distance_raw: Option<usize>,
    /// |C(S)| when a brute-force search was skipped for budget.
    pub skipped_required: Option<u128>,
}

/// Which parts of the report to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// σ-weight distance of C(S), the table's brute-force columns.
    pub centralizer_sigma: bool,
    pub nontrivial_sigma: bool,
    pub nontrivial_raw: bool,
    pub budget: u128,
}

impl ReportOptions {
    pub fn bounds_only() -> Self {
        Self {
            centralizer_sigma: false,
            nontrivial_sigma: false,
            nontrivial_raw: false,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn table(budget: u128) -> Self {
        Self {
            centralizer_sigma: true,
            nontrivial_sigma: false,
            nontrivial_raw: false,
            budget,
        }
    }

    pub fn all(budget: u128) -> Self {
        Self {
            centralizer_sigma: true,
            nontrivial_sigma: true,
            nontrivial_raw: true,
            budget,
        }
    }
}

pub fn factor_label(prefix: char, indices: &[usize]) -> String {
    if indices.is_empty() {
        return "1".into();
    }
    indices.iter().map(|i| format!("{prefix}{i}")).collect()
}

pub fn run_label(run: &BchRun) -> String {
    match run.len {
        0 => "-".into(),
        1 => format!("b^{}", run.start),
        _ => format!("b^{}..b^{}", run.start, run.start + run.len - 1),
    }
}

/// Sentinel for an empty search set.
pub const INFINITE: usize = usize::MAX;

impl DistanceReport {
    pub fn compute(code: &Code, opts: ReportOptions) -> Result<Self> {
        let bch = bch_distance(code.n(), &code.root_exponents());
        let bch_d = bch.d();
        let (thm8_detect, thm8_correct) = thm8_bounds(bch_d);
        let mut skipped_required = None;
        let mut run = |mode, scope, enabled: bool| -> Result<Option<usize>> {
            if !enabled {
                return Ok(None);
            }
            match brute_force_distance(code, mode, scope, opts.budget) {
                Ok(r) => Ok(Some(r.distance.unwrap_or(INFINITE))),
                Err(Error::BudgetExceeded { required, .. }) => {
                    skipped_required = Some(required);
                    Ok(None)
                }
                Err(e) => Err(e),
            }
        };
        let centralizer = run(
            DistanceMode::Sigma,
            Scope::Centralizer,
            opts.centralizer_sigma,
        )?;
        let nontrivial_sigma = run(
            DistanceMode::Sigma,
            Scope::Nontrivial,
            opts.nontrivial_sigma,
        )?;
        let nontrivial_raw = run(DistanceMode::Raw, Scope::Nontrivial, opts.nontrivial_raw)?;
        let dc = centralizer.map(|d| {
            if d == INFINITE {
                (INFINITE, INFINITE)
            } else {
                detect_correct_from_distance(d)
            }
        });
        Ok(Self {
            n: code.n(),
            k: code.k(),
            g: factor_label('g', &code.blueprint.g_factors),
            h: factor_label('h', &code.blueprint.h_factors),
            bch,
            bch_d,
            thm8_detect,
            thm8_correct,
            brute_detect: dc.map(|x| x.0),
            brute_correct: dc.map(|x| x.1),
            brute_distance_sigma: centralizer,
            nontrivial_distance_sigma: nontrivial_sigma,
            nontrivial_distance_raw: nontrivial_raw,
            skipped_required,
        })
    }

    pub const CSV_HEADER: &'static str =
        "n,k,g,h,run,thm8_detect,thm8_correct,brute_detect,brute_correct,\
bch_d,best_run,best_multiplier,sigma_distance,nontrivial_sigma_distance,nontrivial_raw_distance";

    pub fn csv_row(&self) -> String {
        let opt = |x: Option<usize>| match x {
            None => "skipped".to_string(),
            Some(INFINITE) => "inf".to_string(),
            Some(v) => v.to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.g,
            self.h,
            run_label(&self.bch.natural),
            self.thm8_detect,
            self.thm8_correct,
            opt(self.brute_detect),
            opt(self.brute_correct),
            self.bch_d,
            run_label(&self.bch.best),
            self.bch.best.multiplier,
            opt(self.brute_distance_sigma),
            opt(self.nontrivial_distance_sigma),
            opt(self.nontrivial_distance_raw),
        )
    }
}

/// Joint weight of (a, σb) or (a, b) for one vector; exposed for tests.
pub fn weight_in_mode(code: &Code, v: &PauliVector, mode: DistanceMode) -> usize {
    weigh(code, v, mode)
}
