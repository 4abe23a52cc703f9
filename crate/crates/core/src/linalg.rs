//! Gaussian elimination over F_p on row vectors of `u32`.

use crate::field::{Field, PrimeField};

/// Reduced row echelon form of the given rows. Returns the nonzero rows
/// and the pivot column of each.
pub fn rref(fp: &PrimeField, rows: &[Vec<u32>]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, k);
        let inv = fp.inv(&m[r][c]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = fp.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = fp.sub(x, &fp.mul(&f, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(fp: &PrimeField, rows: &[Vec<u32>]) -> usize {
    rref(fp, rows).0.len()
}

/// Basis of {x : M x = 0} for the matrix with the given rows and `ncols` columns.
pub fn kernel(fp: &PrimeField, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let (red, pivots) = rref(fp, rows);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; ncols];
            v[free] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = fp.neg(&row[free]);
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the row span of `rows`.
pub fn in_span(fp: &PrimeField, rows: &[Vec<u32>], v: &[u32]) -> bool {
    let base = rank(fp, rows);
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(fp, &ext) == base
}

/// Whether the two row sets span the same space.
pub fn same_span(fp: &PrimeField, a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    let ra = rank(fp, a);
    if ra != rank(fp, b) {
        return false;
    }
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    rank(fp, &all) == ra
}

pub fn dot(fp: &PrimeField, x: &[u32], y: &[u32]) -> u32 {
    x.iter()
        .zip(y)
        .fold(0, |acc, (a, b)| fp.add(&acc, &fp.mul(a, b)))
}
