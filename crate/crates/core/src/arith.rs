//! Small integer helpers shared by the field and construction code.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `p` modulo `n`. Requires gcd(p, n) = 1; `n = 1` gives 1.
pub fn mult_order(p: u64, n: u64) -> u32 {
    if n == 1 {
        return 1;
    }
    let mut x = p % n;
    let mut k = 1u32;
    while x != 1 {
        x = x * (p % n) % n;
        k += 1;
    }
    k
}

/// `x mod n` for a signed `x`, in `0..n`.
pub fn rem_euclid(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

/// Units of Z_n in increasing order.
pub fn units(n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&j| gcd(j as u64, n as u64) == 1).collect()
}

pub fn inverse_mod(a: usize, n: usize) -> Option<usize> {
    if n == 1 {
        return Some(0);
    }
    (1..n).find(|&x| a * x % n == 1)
}
