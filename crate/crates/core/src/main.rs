use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cyclic_stabilizer::channel::{self, ChannelModel};
use cyclic_stabilizer::construct::{Code, CodeBlueprint, FactorContext, HSelection};
use cyclic_stabilizer::decode::{self, SyndromeTable};
use cyclic_stabilizer::distance::{self, DistanceReport, ReportOptions};
use cyclic_stabilizer::symplectic::PauliVector;
use cyclic_stabilizer::table1;

/// Environment variable holding the worker count for parallel scans.
const THREADS_ENV: &str = "CYCLIC_STABILIZER_THREADS";

#[derive(Parser)]
#[command(
    name = "cyclic-stabilizer",
    version,
    about = "Linear cyclic stabilizer codes over F_p"
)]
#[command(arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the irreducible factors of X^n - 1 over F_p and F_p(eta) as JSON.
    Factors {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Build a code and print its blueprint as JSON.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Involution parameter m (m^2 = 1 mod n).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "auto_m")]
        m: Option<i64>,
        /// Pick m from the multiplicative order of p.
        #[arg(long)]
        auto_m: bool,
        /// Extra F_p factor indices for g (odd-degree factors are always included).
        #[arg(long, value_delimiter = ',')]
        g_extra: Vec<usize>,
        /// F_p(eta) factor indices forming h, or "auto".
        #[arg(long, default_value = "auto")]
        h_select: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance bounds and exhaustive distances for a blueprint.
    Distance {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_enum, default_value_t = DistanceModeArg::All)]
        mode: DistanceModeArg,
        /// Maximum |C(S)| to enumerate, as an integer or 2^k.
        #[arg(long, default_value = "2^26")]
        budget: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode errors (e1, e2) with the algebraic decoder.
    Decode {
        #[arg(long)]
        code: PathBuf,
        /// Comma-separated digits or a 0x bit mask (p = 2).
        #[arg(long, requires = "e2")]
        e1: Option<String>,
        #[arg(long, requires = "e1")]
        e2: Option<String>,
        /// File with one "e1 e2" pair per line.
        #[arg(long, conflicts_with_all = ["e1", "e2"])]
        errors: Option<PathBuf>,
    },
    /// Monte Carlo QBER with a syndrome-table decoder.
    Simulate {
        #[arg(long)]
        code: PathBuf,
        /// Probability grid start:stop:step.
        #[arg(long, default_value = "0.005:0.25:0.005")]
        probs: String,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModelArg::DepolarizingSplit)]
        model: ModelArg,
        /// Largest error weight tabulated (default: until every syndrome has a leader).
        #[arg(long)]
        max_weight: Option<usize>,
        /// Curve name in the CSV (default nN_kK).
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write whitespace-separated columns for plotting.
        #[arg(long)]
        plot_data: Option<PathBuf>,
    },
    /// Crossing probabilities between QBER curves.
    Threshold {
        /// Two or more CSV files written by `simulate`.
        #[arg(required = true, num_args = 2..)]
        curves: Vec<PathBuf>,
    },
    /// Rebuild the reference table of binary codes.
    Table1 {
        #[arg(long, default_value = "2^26")]
        budget: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceModeArg {
    Bch,
    Thm8,
    BruteRaw,
    BruteSigma,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    DepolarizingSplit,
    IndependentXz,
}

impl From<ModelArg> for ChannelModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::DepolarizingSplit => ChannelModel::DepolarizingSplit,
            ModelArg::IndependentXz => ChannelModel::IndependentXz,
        }
    }
}

fn parse_budget(s: &str) -> Result<u128> {
    if let Some(exp) = s.strip_prefix("2^") {
        let e: u32 = exp.parse().context("budget exponent")?;
        if e > 100 {
            bail!("budget 2^{e} is too large");
        }
        return Ok(1u128 << e);
    }
    s.parse().with_context(|| format!("invalid budget {s:?}"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_code(path: &Path) -> Result<Code> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let bp = CodeBlueprint::from_json(&text)?;
    Ok(Code::load(&bp)?)
}

fn parse_vector(s: &str, n: usize, p: u32) -> Result<Vec<u32>> {
    let s = s.trim();
    if let Some(hex) = s.strip_prefix("0x") {
        if p != 2 {
            bail!("bit masks are only accepted for p = 2");
        }
        let bits = u128::from_str_radix(hex, 16).context("hex mask")?;
        if n < 128 && bits >> n != 0 {
            bail!("mask {s} has bits beyond position {}", n - 1);
        }
        return Ok((0..n).map(|i| (bits >> i & 1) as u32).collect());
    }
    let v: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("invalid vector {s:?}"))?;
    if v.len() != n {
        bail!("vector has {} entries, expected {n}", v.len());
    }
    if let Some(x) = v.iter().find(|&&x| x >= p) {
        bail!("entry {x} is not in F_{p}");
    }
    Ok(v)
}

fn cmd_factors(n: usize, p: u32) -> Result<String> {
    let ctx = FactorContext::new(n, p)?;
    let over_prime: Vec<_> = ctx
        .over_prime
        .factors
        .iter()
        .map(|f| {
            serde_json::json!({
                "index": f.index,
                "degree": f.degree(),
                "coset": f.coset,
                "coefficients": f.poly.coeffs(),
            })
        })
        .collect();
    let over_quad: Vec<_> = ctx
        .over_quad
        .factors
        .iter()
        .map(|f| {
            serde_json::json!({
                "index": f.index,
                "degree": f.degree(),
                "coset": f.coset,
                "coefficients": f.poly.coeffs(),
                "conjugate": ctx.conjugate_index(f.index),
            })
        })
        .collect();
    let value = serde_json::json!({
        "n": n,
        "p": p,
        "c0": ctx.quad().c0(),
        "c1": ctx.quad().c1(),
        "over_prime": over_prime,
        "over_quad": over_quad,
    });
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

fn cmd_construct(
    n: usize,
    p: u32,
    m: Option<i64>,
    auto_m: bool,
    g_extra: &[usize],
    h_select: &str,
) -> Result<String> {
    let selection = if h_select.trim() == "auto" {
        HSelection::Auto
    } else {
        let idx = h_select
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .context("--h-select takes factor indices or \"auto\"")?;
        HSelection::Explicit(idx)
    };
    let code = match (m, auto_m) {
        (Some(m), false) => Code::construct(n, p, m, g_extra, &selection)?,
        (None, true) => Code::construct_auto(n, p, g_extra, &selection)?,
        (None, false) => Code::construct(n, p, -1, g_extra, &selection)?,
        (Some(_), true) => bail!("--m and --auto-m are exclusive"),
    };
    Ok(code.blueprint.to_json() + "\n")
}

fn cmd_distance(code: &Code, mode: DistanceModeArg, budget: u128) -> Result<String> {
    let opts = match mode {
        DistanceModeArg::Bch | DistanceModeArg::Thm8 => ReportOptions::bounds_only(),
        DistanceModeArg::BruteRaw => ReportOptions {
            centralizer_sigma: false,
            nontrivial_sigma: false,
            nontrivial_raw: true,
            budget,
        },
        DistanceModeArg::BruteSigma => ReportOptions {
            centralizer_sigma: true,
            nontrivial_sigma: true,
            nontrivial_raw: false,
            budget,
        },
        DistanceModeArg::All => ReportOptions::all(budget),
    };
    let report = DistanceReport::compute(code, opts)?;
    if let Some(req) = report.skipped_required {
        eprintln!("brute force skipped: |C(S)| = {req} exceeds the budget {budget}");
    }
    Ok(format!(
        "{}\n{}\n",
        DistanceReport::CSV_HEADER,
        report.csv_row()
    ))
}

fn cmd_decode(code: &Code, pairs: Vec<(String, String)>) -> Result<String> {
    let n = code.n();
    let p = code.prime_field().p();
    let mut out = String::new();
    for (s1, s2) in pairs {
        let e = PauliVector::new(parse_vector(&s1, n, p)?, parse_vector(&s2, n, p)?)?;
        let d = decode::decode_error(code, &e)?;
        let exact = d.success && d.e1 == e.a && d.e2 == e.b;
        let value = serde_json::json!({
            "e1": d.e1,
            "e2": d.e2,
            "success": d.success,
            "matches_input": exact,
            "sigma_weight": decode::sigma_weight(code, &e),
        });
        out += &(value.to_string() + "\n");
    }
    Ok(out)
}

fn cmd_table1(budget: u128) -> Result<String> {
    let mut out = String::from(
        "n,k,g,h,consecutive_roots,thm8_detect,thm8_correct,brute_detect,brute_correct\n",
    );
    for row in &table1::ROWS {
        let o = table1::evaluate(row, budget)?;
        let r = &o.report;
        if !o.thm8_matches() || o.brute_matches() == Some(false) {
            eprintln!(
                "n={} k={}: computed thm8=({},{}) brute={:?}, reference thm8={:?} brute={:?}",
                r.n,
                r.k,
                r.thm8_detect,
                r.thm8_correct,
                r.brute_detect.zip(r.brute_correct),
                row.thm8,
                row.brute
            );
        }
        let opt = |x: Option<usize>| x.map_or("skipped".to_string(), |v| v.to_string());
        out += &format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.k,
            r.g,
            r.h,
            distance::run_label(&r.bch.natural),
            r.thm8_detect,
            r.thm8_correct,
            opt(r.brute_detect),
            opt(r.brute_correct)
        );
    }
    Ok(out)
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize = v.parse().with_context(|| format!("{THREADS_ENV}={v:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Factors { n, p } => emit(&cmd_factors(n, p)?, None),
        Command::Construct {
            n,
            p,
            m,
            auto_m,
            g_extra,
            h_select,
            out,
        } => emit(
            &cmd_construct(n, p, m, auto_m, &g_extra, &h_select)?,
            out.as_deref(),
        ),
        Command::Distance {
            code,
            mode,
            budget,
            out,
        } => {
            let code = load_code(&code)?;
            emit(
                &cmd_distance(&code, mode, parse_budget(&budget)?)?,
                out.as_deref(),
            )
        }
        Command::Decode {
            code,
            e1,
            e2,
            errors,
        } => {
            let code = load_code(&code)?;
            let pairs = match (e1, e2, errors) {
                (Some(a), Some(b), None) => vec![(a, b)],
                (None, None, Some(path)) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(|l| {
                            let mut it = l.split_whitespace();
                            match (it.next(), it.next(), it.next()) {
                                (Some(a), Some(b), None) => Ok((a.to_string(), b.to_string())),
                                _ => bail!("expected \"e1 e2\" on line {l:?}"),
                            }
                        })
                        .collect::<Result<Vec<_>>>()?
                }
                _ => bail!("give either --e1 and --e2, or --errors"),
            };
            emit(&cmd_decode(&code, pairs)?, None)
        }
        Command::Simulate {
            code,
            probs,
            trials,
            seed,
            model,
            max_weight,
            label,
            out,
            plot_data,
        } => {
            let code = load_code(&code)?;
            let grid = channel::parse_grid(&probs)?;
            let table = SyndromeTable::build(
                &code,
                max_weight.unwrap_or(code.n()),
                decode::DEFAULT_TABLE_BUDGET,
            )?;
            let label = label.unwrap_or_else(|| format!("n{}_k{}", code.n(), code.k()));
            let points =
                channel::run_qber(&code, &table, &label, model.into(), &grid, trials, seed)?;
            if let Some(path) = plot_data {
                let data = channel::plot_data(std::slice::from_ref(&points))?;
                fs::write(&path, data).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(&channel::to_csv(&points), out.as_deref())
        }
        Command::Threshold { curves } => {
            let loaded = curves
                .iter()
                .map(|p| {
                    let text = fs::read_to_string(p)
                        .with_context(|| format!("reading {}", p.display()))?;
                    Ok(channel::from_csv(&text)?)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut out = String::from("first,second,crossing\n");
            for c in channel::find_threshold(&loaded)? {
                let at = c.prob.map_or("none".to_string(), |x| format!("{x:.6}"));
                out += &format!("{},{},{}\n", c.first, c.second, at);
            }
            emit(&out, None)
        }
        Command::Table1 { budget, out } => {
            emit(&cmd_table1(parse_budget(&budget)?)?, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
