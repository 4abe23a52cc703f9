//! Independent oracles shared by the integration tests. They test
//! centralizer membership directly against the rows of S instead of using
//! the library's centralizer basis.
#![allow(dead_code)]

use cyclic_stabilizer::construct::Code;
use cyclic_stabilizer::field::{Field, PrimeField};
use cyclic_stabilizer::symplectic::{sigma_form, PauliVector};
use cyclic_stabilizer::table1::ROWS;

pub fn row_code(n: usize, k: usize) -> Code {
    ROWS.iter()
        .find(|r| r.n == n && r.k == k)
        .unwrap()
        .build()
        .unwrap()
}

pub fn in_centralizer(code: &Code, v: &PauliVector) -> bool {
    let fp = code.prime_field();
    code.stabilizer
        .rows()
        .iter()
        .all(|r| sigma_form(fp, v, r, &code.sigma) == 0)
}

/// Weight of (a, b) when b is read through σ (`sigma`) or as is.
pub fn weight(code: &Code, v: &PauliVector, sigma: bool) -> usize {
    let b = if sigma {
        code.sigma.apply(&v.b)
    } else {
        v.b.clone()
    };
    v.a.iter()
        .zip(&b)
        .filter(|(x, y)| **x != 0 || **y != 0)
        .count()
}

/// Every vector of F_p^{2n}, as (a, b) pairs, for tiny n.
pub fn all_vectors(p: u32, n: usize) -> impl Iterator<Item = PauliVector> {
    let total = (p as u64).pow(2 * n as u32);
    (0..total).map(move |mut idx| {
        let mut row = Vec::with_capacity(2 * n);
        for _ in 0..2 * n {
            row.push((idx % p as u64) as u32);
            idx /= p as u64;
        }
        PauliVector::from_row(&row)
    })
}

/// Minimum weight over C(S) \ {0} (or C(S) \ S) by scanning every vector.
pub fn exhaustive_distance(code: &Code, sigma: bool, nontrivial: bool) -> Option<usize> {
    all_vectors(code.prime_field().p(), code.n())
        .filter(|v| !v.is_zero() && in_centralizer(code, v))
        .filter(|v| !nontrivial || !code.stabilizer.contains(v))
        .map(|v| weight(code, &v, sigma))
        .min()
}

fn bits(v: &[u32]) -> u64 {
    v.iter()
        .enumerate()
        .fold(0, |acc, (i, &x)| acc | ((x as u64 & 1) << i))
}

fn next_subset(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Binary codes only: the smallest w ≤ `max_weight` such that some error of
/// weight w lies in C(S) (and outside S when `nontrivial`), with weight
/// measured on (x, z) where the code vector is (x, σz) (`sigma`) or (x, z).
/// Errors are enumerated by support and Pauli type in ascending weight.
pub fn ascending_distance(
    code: &Code,
    sigma: bool,
    nontrivial: bool,
    max_weight: usize,
) -> Option<usize> {
    assert_eq!(code.prime_field().p(), 2);
    let n = code.n();
    assert!(n <= 63);
    // For e = (x, z'), ⟨e, r⟩ = x·σ(r.b) + z'·σ(r.a); with z' = σz the
    // second term is z·r.a.
    let masks: Vec<(u64, u64)> = code
        .stabilizer
        .rows()
        .iter()
        .map(|r| {
            let zmask = if sigma {
                bits(&r.a)
            } else {
                bits(&code.sigma.apply(&r.a))
            };
            (bits(&code.sigma.apply(&r.b)), zmask)
        })
        .collect();
    for w in 1..=max_weight.min(n) {
        let mut support: u64 = (1u64 << w) - 1;
        while support < 1u64 << n {
            let positions: Vec<usize> = (0..n).filter(|i| support >> i & 1 == 1).collect();
            for kinds in 0..3u64.pow(w as u32) {
                let (mut x, mut z, mut t) = (0u64, 0u64, kinds);
                for &pos in &positions {
                    match t % 3 {
                        0 => x |= 1 << pos,
                        1 => {
                            x |= 1 << pos;
                            z |= 1 << pos
                        }
                        _ => z |= 1 << pos,
                    }
                    t /= 3;
                }
                let hit = masks
                    .iter()
                    .all(|&(mx, mz)| ((x & mx).count_ones() + (z & mz).count_ones()) % 2 == 0);
                if hit && (!nontrivial || !contains_error(code, x, z, sigma)) {
                    return Some(w);
                }
            }
            support = next_subset(support);
        }
    }
    None
}

fn contains_error(code: &Code, x: u64, z: u64, sigma: bool) -> bool {
    let n = code.n();
    let unpack = |m: u64| (0..n).map(|i| (m >> i & 1) as u32).collect::<Vec<_>>();
    let zv = unpack(z);
    let b = if sigma { code.sigma.apply(&zv) } else { zv };
    code.stabilizer
        .contains(&PauliVector::new(unpack(x), b).unwrap())
}

/// Reference F_p arithmetic for spot checks.
pub fn fp(p: u32) -> PrimeField {
    let f = PrimeField::new(p).unwrap();
    assert_eq!(f.characteristic(), p);
    f
}
