//! The reference table of binary codes with σ = (i ↦ −i): factor choices,
//! expected root runs and expected detection/correction counts.

use serde::Serialize;

use crate::construct::{Code, HSelection};
use crate::distance::{self, DistanceReport, ReportOptions};
use crate::error::{Error, Result};

/// One reference row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub g_extra: &'static [usize],
    pub h: &'static [usize],
    /// β exponents (start, length) of the listed root run.
    pub run: (usize, usize),
    pub thm8: (usize, usize),
    pub brute: (usize, usize),
}

const fn row(
    n: usize,
    k: usize,
    g_extra: &'static [usize],
    h: &'static [usize],
    run: (usize, usize),
    thm8: (usize, usize),
    brute: (usize, usize),
) -> TableRow {
    TableRow {
        n,
        k,
        g_extra,
        h,
        run,
        thm8,
        brute,
    }
}

/// The thirteen rows. The n = 21 row takes h = h₂h₇, the selection whose
/// roots include the listed run β⁷, β⁸.
pub const ROWS: [TableRow; 13] = [
    row(5, 1, &[], &[2], (2, 2), (1, 0), (1, 0)),
    row(9, 1, &[], &[2, 6], (5, 2), (1, 0), (1, 0)),
    row(11, 1, &[], &[1], (3, 3), (1, 0), (2, 1)),
    row(13, 1, &[], &[2], (5, 4), (2, 1), (4, 2)),
    row(15, 1, &[], &[1, 5, 6, 7], (4, 4), (2, 1), (3, 1)),
    row(15, 5, &[7], &[1, 5, 6], (4, 3), (1, 0), (2, 1)),
    row(15, 9, &[3, 7], &[1, 5], (4, 2), (1, 0), (1, 0)),
    row(17, 1, &[], &[2, 6], (6, 6), (3, 1), (5, 2)),
    row(19, 1, &[], &[1], (4, 4), (2, 1), (3, 1)),
    row(21, 13, &[3, 5, 9], &[2, 7], (7, 2), (1, 0), (1, 0)),
    row(25, 1, &[], &[1, 5], (4, 3), (1, 0), (2, 1)),
    row(27, 7, &[3], &[1, 9], (9, 2), (1, 0), (1, 0)),
    row(29, 1, &[], &[1], (4, 4), (2, 1), (3, 1)),
];

/// Budget large enough for every row (the largest centralizer has 2³⁴ elements).
pub const FULL_BUDGET: u128 = 1 << 34;

impl TableRow {
    pub fn build(&self) -> Result<Code> {
        Code::construct(
            self.n,
            2,
            -1,
            self.g_extra,
            &HSelection::Explicit(self.h.to_vec()),
        )
    }
}

/// Computed values for one row beside the expected ones.
#[derive(Debug, Clone, Serialize)]
pub struct RowOutcome {
    pub expected: TableRow,
    pub report: DistanceReport,
}

impl RowOutcome {
    pub fn run_matches(&self) -> bool {
        let r = self.report.bch.natural;
        (r.start, r.len) == self.expected.run
    }

    pub fn thm8_matches(&self) -> bool {
        (self.report.thm8_detect, self.report.thm8_correct) == self.expected.thm8
    }

    /// `None` if the brute-force column was skipped.
    pub fn brute_matches(&self) -> Option<bool> {
        Some((self.report.brute_detect?, self.report.brute_correct?) == self.expected.brute)
    }
}

/// Builds a row and computes its report; k and the root run must match.
pub fn evaluate(row: &TableRow, budget: u128) -> Result<RowOutcome> {
    let code = row.build()?;
    let report = DistanceReport::compute(&code, ReportOptions::table(budget))?;
    let outcome = RowOutcome {
        expected: *row,
        report,
    };
    if code.k() != row.k {
        return Err(Error::Invariant(format!(
            "n={}: k = {} but the table lists {}",
            row.n,
            code.k(),
            row.k
        )));
    }
    if !outcome.run_matches() {
        return Err(Error::Invariant(format!(
            "n={}: root run {} but the table lists b^{}..b^{}",
            row.n,
            distance::run_label(&outcome.report.bch.natural),
            row.run.0,
            row.run.0 + row.run.1 - 1
        )));
    }
    Ok(outcome)
}
