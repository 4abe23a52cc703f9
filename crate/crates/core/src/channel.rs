//! Monte Carlo block-error simulation through a Pauli channel with
//! syndrome-table decoding, and crossing points between QBER curves.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::Code;
use crate::decode::{physical_to_code, SyndromeTable};
use crate::error::{Error, Result};
use crate::symplectic::PauliVector;

/// Trials per RNG substream; fixed so results do not depend on the worker count.
const BLOCK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChannelModel {
    /// Each position is hit with probability `prob`, the nonzero (x, z)
    /// pair drawn uniformly (X, Y, Z each prob/3 for qubits).
    DepolarizingSplit,
    /// x and z flipped independently, each with probability `prob`.
    IndependentXz,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub prob: f64,
    pub model: ChannelModel,
}

impl ChannelParams {
    pub fn new(prob: f64, model: ChannelModel) -> Result<Self> {
        if !(0.0..=1.0).contains(&prob) {
            return Err(Error::InvalidInput(format!(
                "probability {prob} outside [0, 1]"
            )));
        }
        Ok(Self { prob, model })
    }
}

fn nonzero_digit<R: Rng>(p: u32, rng: &mut R) -> u32 {
    rng.gen_range(1..p)
}

/// Draws a physical error (x, z) on n qudits of characteristic p.
pub fn sample_error<R: Rng>(
    params: &ChannelParams,
    p: u32,
    n: usize,
    rng: &mut R,
) -> (Vec<u32>, Vec<u32>) {
    let mut x = vec![0u32; n];
    let mut z = vec![0u32; n];
    match params.model {
        ChannelModel::DepolarizingSplit => {
            let choices = p * p - 1;
            for i in 0..n {
                if rng.gen::<f64>() < params.prob {
                    // index 1..p²−1 of the pair (x, z) = (k mod p, k div p)
                    let k = rng.gen_range(1..=choices);
                    x[i] = k % p;
                    z[i] = k / p;
                }
            }
        }
        ChannelModel::IndependentXz => {
            for i in 0..n {
                if rng.gen::<f64>() < params.prob {
                    x[i] = nonzero_digit(p, rng);
                }
                if rng.gen::<f64>() < params.prob {
                    z[i] = nonzero_digit(p, rng);
                }
            }
        }
    }
    (x, z)
}

/// One point of a QBER curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QberPoint {
    pub code: String,
    pub prob: f64,
    pub trials: u64,
    pub errors: u64,
    pub qber: f64,
    pub stderr: f64,
}

impl QberPoint {
    pub fn new(code: &str, prob: f64, trials: u64, errors: u64) -> Self {
        let qber = errors as f64 / trials as f64;
        let stderr = (qber * (1.0 - qber) / trials as f64).sqrt();
        Self {
            code: code.to_string(),
            prob,
            trials,
            errors,
            qber,
            stderr,
        }
    }
}

/// Bit-packed syndrome evaluation and leaders for qubit codes up to 64 positions.
struct BinaryDecoder {
    /// Per basis row of S: (a, σb) masks; the syndrome bit is a·z + σb·x.
    rows: Vec<(u64, u64)>,
    /// Physical (x, z) leader masks indexed by syndrome.
    leaders: Vec<Option<(u64, u64)>>,
}

fn mask(v: &[u32]) -> u64 {
    v.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &b)| acc | ((b as u64 & 1) << i))
}

impl BinaryDecoder {
    fn new(code: &Code, table: &SyndromeTable) -> Option<Self> {
        if code.prime_field().p() != 2 || code.n() > 64 || code.stabilizer.dim() > 26 {
            return None;
        }
        let rows: Vec<(u64, u64)> = code
            .stabilizer
            .rows()
            .iter()
            .map(|r| (mask(&r.a), mask(&code.sigma.apply(&r.b))))
            .collect();
        let leaders = (0..1u64 << rows.len())
            .map(|s| {
                table
                    .lookup(s)
                    .map(|e| (mask(&e.a), mask(&code.sigma.apply(&e.b))))
            })
            .collect();
        Some(Self { rows, leaders })
    }

    fn syndrome(&self, x: u64, z: u64) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &(a, sb))| {
                acc | ((((a & z).count_ones() + (sb & x).count_ones()) & 1) as u64) << i
            })
    }

    /// True when decoding leaves a nonzero residual.
    fn block_error(&self, x: u64, z: u64) -> bool {
        match self.leaders[self.syndrome(x, z) as usize] {
            Some((lx, lz)) => lx != x || lz != z,
            None => true,
        }
    }
}

fn generic_block_error(code: &Code, table: &SyndromeTable, x: &[u32], z: &[u32]) -> bool {
    let e: PauliVector = physical_to_code(code, x, z);
    match table.decode(code, &e) {
        Some(leader) => *leader != e,
        None => true,
    }
}

/// The RNG for one block of trials at one grid index.
pub fn substream(seed: u64, prob_index: usize, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((prob_index as u64) << 40) | block);
    rng
}

/// Simulates `trials` blocks per probability; every nonzero residual is a
/// block error, including residuals that lie in S.
pub fn run_qber(
    code: &Code,
    table: &SyndromeTable,
    label: &str,
    model: ChannelModel,
    probs: &[f64],
    trials: u64,
    seed: u64,
) -> Result<Vec<QberPoint>> {
    if trials == 0 {
        return Err(Error::InvalidInput("trials must be at least 1".into()));
    }
    if table.n() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            got: table.n(),
        });
    }
    let binary = BinaryDecoder::new(code, table);
    let n = code.n();
    let p = code.prime_field().p();
    probs
        .iter()
        .enumerate()
        .map(|(pi, &prob)| {
            let params = ChannelParams::new(prob, model)?;
            let blocks = trials.div_ceil(BLOCK);
            let errors: u64 = (0..blocks)
                .into_par_iter()
                .map(|b| {
                    let mut rng = substream(seed, pi, b);
                    let count = BLOCK.min(trials - b * BLOCK);
                    (0..count)
                        .filter(|_| {
                            let (x, z) = sample_error(&params, p, n, &mut rng);
                            match &binary {
                                Some(d) => d.block_error(mask(&x), mask(&z)),
                                None => generic_block_error(code, table, &x, &z),
                            }
                        })
                        .count() as u64
                })
                .sum();
            Ok(QberPoint::new(label, prob, trials, errors))
        })
        .collect()
}

/// Parses `start:stop:step` into an inclusive grid.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<f64> = spec
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::InvalidInput(format!("bad grid {spec:?}: {e}")))?;
    let [start, stop, step] = parts[..] else {
        return Err(Error::InvalidInput(format!(
            "grid {spec:?} is not start:stop:step"
        )));
    };
    if step <= 0.0 || stop < start {
        return Err(Error::InvalidInput(format!("grid {spec:?} is empty")));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

pub const CSV_HEADER: &str = "code,prob,trials,errors,qber,stderr";

pub fn to_csv(points: &[QberPoint]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for q in points {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            q.code, q.prob, q.trials, q.errors, q.qber, q.stderr
        )
        .unwrap();
    }
    out
}

pub fn from_csv(text: &str) -> Result<Vec<QberPoint>> {
    let bad = |line: &str| Error::InvalidInput(format!("bad QBER row {line:?}"));
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 6 {
                return Err(bad(line));
            }
            let prob = f[1].parse().map_err(|_| bad(line))?;
            let trials = f[2].parse().map_err(|_| bad(line))?;
            let errors = f[3].parse().map_err(|_| bad(line))?;
            Ok(QberPoint::new(f[0], prob, trials, errors))
        })
        .collect()
}

/// Whitespace-separated columns: prob, then qber and stderr per curve.
pub fn plot_data(curves: &[Vec<QberPoint>]) -> Result<String> {
    check_grids(curves)?;
    let mut out = String::from("# prob");
    for c in curves {
        let name = c.first().map_or("", |q| q.code.as_str());
        write!(out, " {name}_qber {name}_stderr").unwrap();
    }
    out.push('\n');
    for i in 0..curves.first().map_or(0, Vec::len) {
        write!(out, "{}", curves[0][i].prob).unwrap();
        for c in curves {
            write!(out, " {} {}", c[i].qber, c[i].stderr).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn check_grids(curves: &[Vec<QberPoint>]) -> Result<()> {
    let Some(first) = curves.first() else {
        return Ok(());
    };
    for c in curves {
        let same = c.len() == first.len()
            && c.iter()
                .zip(first)
                .all(|(a, b)| (a.prob - b.prob).abs() < 1e-12);
        if !same {
            return Err(Error::InvalidInput(
                "QBER curves are on different probability grids".into(),
            ));
        }
    }
    Ok(())
}

/// Where the QBER difference of two curves changes sign.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Crossing {
    pub first: String,
    pub second: String,
    /// `None` when the ordering never changes on the grid.
    pub prob: Option<f64>,
}

/// First crossing of curve `a` and curve `b`: an exact tie, or a sign
/// change interpolated linearly. Points where both curves are zero carry
/// no information and are skipped.
pub fn crossing(a: &[QberPoint], b: &[QberPoint]) -> Option<f64> {
    let mut prev: Option<(f64, f64)> = None;
    for (x, y) in a.iter().zip(b) {
        if x.qber == 0.0 && y.qber == 0.0 {
            continue;
        }
        let d = x.qber - y.qber;
        if d == 0.0 {
            return Some(x.prob);
        }
        if let Some((p0, d0)) = prev {
            if d0.signum() != d.signum() {
                return Some(p0 + (x.prob - p0) * d0 / (d0 - d));
            }
        }
        prev = Some((x.prob, d));
    }
    None
}

/// Crossings for every pair of curves.
pub fn find_threshold(curves: &[Vec<QberPoint>]) -> Result<Vec<Crossing>> {
    if curves.len() < 2 {
        return Err(Error::InvalidInput("need at least two curves".into()));
    }
    check_grids(curves)?;
    let name = |c: &[QberPoint]| c.first().map_or(String::new(), |q| q.code.clone());
    let mut out = Vec::new();
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            out.push(Crossing {
                first: name(&curves[i]),
                second: name(&curves[j]),
                prob: crossing(&curves[i], &curves[j]),
            });
        }
    }
    Ok(out)
}
