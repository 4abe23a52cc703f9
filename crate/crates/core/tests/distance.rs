mod common;

use common::*;
use cyclic_stabilizer::construct::{Code, HSelection};
use cyclic_stabilizer::distance::*;

const BUDGET: u128 = 1 << 26;

fn brute(code: &Code, mode: DistanceMode, scope: Scope) -> Option<usize> {
    brute_force_distance(code, mode, scope, BUDGET)
        .unwrap()
        .distance
}

#[test]
fn n5_matches_exhaustive_scan_in_every_mode() {
    let code = row_code(5, 1);
    for (mode, sigma) in [(DistanceMode::Sigma, true), (DistanceMode::Raw, false)] {
        for (scope, nontrivial) in [(Scope::Centralizer, false), (Scope::Nontrivial, true)] {
            assert_eq!(
                brute(&code, mode, scope),
                exhaustive_distance(&code, sigma, nontrivial)
            );
        }
    }
    assert_eq!(
        brute(&code, DistanceMode::Sigma, Scope::Centralizer),
        Some(2)
    );
}

#[test]
fn n9_matches_exhaustive_scan() {
    let code = row_code(9, 1);
    assert_eq!(
        brute(&code, DistanceMode::Sigma, Scope::Centralizer),
        exhaustive_distance(&code, true, false)
    );
    assert_eq!(
        brute(&code, DistanceMode::Sigma, Scope::Nontrivial),
        exhaustive_distance(&code, true, true)
    );
}

#[test]
fn ternary_code_matches_exhaustive_scan() {
    let code = Code::construct_auto(5, 3, &[], &HSelection::Auto).unwrap();
    for (mode, sigma) in [(DistanceMode::Sigma, true), (DistanceMode::Raw, false)] {
        for (scope, nontrivial) in [(Scope::Centralizer, false), (Scope::Nontrivial, true)] {
            assert_eq!(
                brute(&code, mode, scope),
                exhaustive_distance(&code, sigma, nontrivial)
            );
        }
    }
}

#[test]
fn witnesses_are_centralizer_elements_of_the_reported_weight() {
    for (n, k) in [(11, 1), (13, 1), (15, 5)] {
        let code = row_code(n, k);
        for mode in [DistanceMode::Sigma, DistanceMode::Raw] {
            let r = brute_force_distance(&code, mode, Scope::Nontrivial, BUDGET).unwrap();
            let w = r.witness.unwrap();
            assert!(in_centralizer(&code, &w));
            assert!(!code.stabilizer.contains(&w));
            assert_eq!(
                weight(&code, &w, mode == DistanceMode::Sigma),
                r.distance.unwrap()
            );
        }
    }
}

#[test]
fn small_rows_match_ascending_weight_oracle() {
    let rows = [
        (11, 1),
        (13, 1),
        (15, 1),
        (15, 5),
        (15, 9),
        (17, 1),
        (19, 1),
    ];
    for (n, k) in rows {
        let code = row_code(n, k);
        let d = brute(&code, DistanceMode::Sigma, Scope::Centralizer).unwrap();
        assert_eq!(
            ascending_distance(&code, true, false, d),
            Some(d),
            "n={n} k={k}"
        );
        let dn = brute(&code, DistanceMode::Sigma, Scope::Nontrivial).unwrap();
        assert_eq!(
            ascending_distance(&code, true, true, dn),
            Some(dn),
            "n={n} k={k}"
        );
    }
}

#[test]
fn raw_distance_matches_ascending_oracle() {
    for (n, k) in [(11, 1), (13, 1), (15, 5)] {
        let code = row_code(n, k);
        let d = brute(&code, DistanceMode::Raw, Scope::Nontrivial).unwrap();
        assert_eq!(ascending_distance(&code, false, true, d), Some(d));
    }
}

#[test]
fn trivial_code_has_distance_one() {
    let ctx = cyclic_stabilizer::construct::FactorContext::new(5, 2).unwrap();
    let all: Vec<usize> = ctx.over_prime.factors.iter().map(|f| f.index).collect();
    let code = Code::construct(5, 2, -1, &all, &HSelection::Explicit(vec![])).unwrap();
    assert_eq!(
        brute(&code, DistanceMode::Sigma, Scope::Centralizer),
        Some(1)
    );
    assert_eq!(
        brute(&code, DistanceMode::Sigma, Scope::Nontrivial),
        Some(1)
    );
}

#[test]
fn budget_is_enforced() {
    let code = row_code(17, 1);
    let err =
        brute_force_distance(&code, DistanceMode::Sigma, Scope::Centralizer, 1 << 10).unwrap_err();
    assert!(
        matches!(err, cyclic_stabilizer::Error::BudgetExceeded { required, .. } if required == 1 << 18)
    );
    let report = DistanceReport::compute(&code, ReportOptions::table(1 << 10)).unwrap();
    assert_eq!(report.brute_detect, None);
    assert!(report.csv_row().contains("skipped"));
}
