//! Vectors of F_pⁿ × F_pⁿ, the σ_m-symplectic form and its isotropy and
//! centralizer computations.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, QuadField};
use crate::linalg;

/// A pair (a, b) standing for the Pauli operator U_a V_b.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliVector {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl PauliVector {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        Ok(Self { a, b })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            a: vec![0; n],
            b: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// The concatenation a ‖ b.
    pub fn to_row(&self) -> Vec<u32> {
        let mut r = self.a.clone();
        r.extend_from_slice(&self.b);
        r
    }

    pub fn from_row(row: &[u32]) -> Self {
        let n = row.len() / 2;
        Self {
            a: row[..n].to_vec(),
            b: row[n..].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }
}

/// The permutation i ↦ m·i mod n, with m² ≡ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaInvolution {
    m: i64,
    n: usize,
}

impl SigmaInvolution {
    pub fn new(m: i64, n: usize) -> Result<Self> {
        if n == 0 || arith::rem_euclid(m * m, n) != 1 % n {
            return Err(Error::NotInvolution { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn identity(n: usize) -> Self {
        Self { m: 1, n }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self, i: usize) -> usize {
        arith::rem_euclid(self.m * i as i64, self.n)
    }

    /// (σv)_k = v_{σ(k)}.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        (0..self.n).map(|k| v[self.index(k)].clone()).collect()
    }
}

/// An F_p-basis of a subspace of F_pⁿ × F_pⁿ, kept in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    fp: PrimeField,
    n: usize,
    rows: Vec<PauliVector>,
}

impl SubspaceBasis {
    /// Row-reduces the spanning set; dependent rows are dropped.
    pub fn span(fp: PrimeField, n: usize, generators: &[PauliVector]) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: g.n(),
            });
        }
        let rows: Vec<_> = generators.iter().map(PauliVector::to_row).collect();
        let (red, _) = linalg::rref(&fp, &rows);
        Ok(Self {
            fp,
            n,
            rows: red.iter().map(|r| PauliVector::from_row(r)).collect(),
        })
    }

    pub fn zero(fp: PrimeField, n: usize) -> Self {
        Self {
            fp,
            n,
            rows: Vec::new(),
        }
    }

    pub fn full(fp: PrimeField, n: usize) -> Self {
        let rows = (0..2 * n)
            .map(|i| {
                let mut r = vec![0; 2 * n];
                r[i] = 1;
                PauliVector::from_row(&r)
            })
            .collect();
        Self { fp, n, rows }
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.fp
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[PauliVector] {
        &self.rows
    }

    pub fn matrix(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(PauliVector::to_row).collect()
    }

    pub fn contains(&self, v: &PauliVector) -> bool {
        linalg::in_span(&self.fp, &self.matrix(), &v.to_row())
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_space(&self, other: &SubspaceBasis) -> bool {
        self.n == other.n && linalg::same_span(&self.fp, &self.matrix(), &other.matrix())
    }

    /// Number of elements, p^dim.
    pub fn size(&self) -> u128 {
        (self.fp.p() as u128).pow(self.dim() as u32)
    }

    pub fn is_shift_closed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| self.contains(&simultaneous_shift(r)))
    }

    /// Closure under (a, b) ↦ (c₀b, a + c₁b), the action of η.
    pub fn is_eta_closed(&self, quad: &QuadField) -> bool {
        self.rows
            .iter()
            .all(|r| self.contains(&eta_action(quad, r)))
    }
}

/// Number of positions where (a_i, b_i) ≠ (0, 0).
pub fn joint_weight(v: &PauliVector) -> usize {
    v.a.iter()
        .zip(&v.b)
        .filter(|(x, y)| **x != 0 || **y != 0)
        .count()
}

/// ⟨(a,b),(c,d)⟩_σ = aᵀσd − bᵀσc.
pub fn sigma_form(
    fp: &PrimeField,
    u: &PauliVector,
    v: &PauliVector,
    sigma: &SigmaInvolution,
) -> u32 {
    let ad = linalg::dot(fp, &u.a, &sigma.apply(&v.b));
    let bc = linalg::dot(fp, &u.b, &sigma.apply(&v.a));
    fp.sub(&ad, &bc)
}

/// (a, b) ↦ (a, σb) on every basis row.
pub fn apply_sigma(s: &SubspaceBasis, sigma: &SigmaInvolution) -> SubspaceBasis {
    let rows: Vec<_> = s
        .rows
        .iter()
        .map(|r| PauliVector {
            a: r.a.clone(),
            b: sigma.apply(&r.b),
        })
        .collect();
    SubspaceBasis::span(s.fp, s.n, &rows).expect("lengths preserved")
}

pub fn is_sigma_isotropic(s: &SubspaceBasis, sigma: &SigmaInvolution) -> bool {
    let rows = s.rows();
    (0..rows.len())
        .all(|i| (i..rows.len()).all(|j| sigma_form(&s.fp, &rows[i], &rows[j], sigma) == 0))
}

/// {x : ⟨x, u⟩_σ = 0 for all u ∈ S}.
pub fn centralizer(s: &SubspaceBasis, sigma: &SigmaInvolution) -> SubspaceBasis {
    let fp = s.fp;
    // ⟨x, u⟩_σ for x = (c, d), u = (a, b) is cᵀσb − dᵀσa
    let functionals: Vec<Vec<u32>> = s
        .rows
        .iter()
        .map(|u| {
            let mut row = sigma.apply(&u.b);
            row.extend(sigma.apply(&u.a).iter().map(|x| fp.neg(x)));
            row
        })
        .collect();
    let ker = linalg::kernel(&fp, &functionals, 2 * s.n);
    let gens: Vec<_> = ker.iter().map(|r| PauliVector::from_row(r)).collect();
    SubspaceBasis::span(fp, s.n, &gens).expect("lengths match")
}

/// Right cyclic shift of both halves.
pub fn simultaneous_shift(v: &PauliVector) -> PauliVector {
    let n = v.n();
    let shift = |x: &[u32]| (0..n).map(|i| x[(i + n - 1) % n]).collect();
    PauliVector {
        a: shift(&v.a),
        b: shift(&v.b),
    }
}

/// The action of η on the encoding a + ηb: (a, b) ↦ (c₀b, a + c₁b).
pub fn eta_action(quad: &QuadField, v: &PauliVector) -> PauliVector {
    let fp = quad.prime_field();
    let (c0, c1) = (quad.c0(), quad.c1());
    PauliVector {
        a: v.b.iter().map(|b| fp.mul(&c0, b)).collect(),
        b: v.a
            .iter()
            .zip(&v.b)
            .map(|(a, b)| fp.add(a, &fp.mul(&c1, b)))
            .collect(),
    }
}

/// Whether a(X)d(X^{−m}) − b(X)c(X^{−m}) ≡ 0 mod Xⁿ − 1, i.e. every
/// cyclic shift of u is σ_m-orthogonal to v.
pub fn polynomial_isotropy_check(
    fp: &PrimeField,
    u: &PauliVector,
    v: &PauliVector,
    m: i64,
) -> Result<bool> {
    let n = u.n();
    SigmaInvolution::new(m, n)?;
    let mut acc = vec![0u32; n];
    for j in 0..n {
        for i in 0..n {
            let k = arith::rem_euclid(j as i64 - m * i as i64, n);
            let term = fp.sub(&fp.mul(&u.a[j], &v.b[i]), &fp.mul(&u.b[j], &v.a[i]));
            acc[k] = fp.add(&acc[k], &term);
        }
    }
    Ok(acc.iter().all(|&x| x == 0))
}
