//! Small exact number-theoretic helpers: Euler's totient, the Möbius
//! function, and Ramanujan sums.

use num_integer::Integer;

pub fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

fn prime_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Euler's totient; `phi(1) = 1`.
pub fn totient(m: u64) -> u64 {
    prime_factors(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(m: u64) -> i64 {
    let factors = prime_factors(m);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Ramanujan's sum `c_m(r)`, the sum of `r`-th powers of the primitive
/// `m`-th roots of unity, via `c_m(r) = mu(m/g) phi(m) / phi(m/g)` with
/// `g = gcd(r, m)`.
pub fn ramanujan_sum(m: u64, r: i64) -> i64 {
    assert!(m >= 1, "ramanujan_sum needs m >= 1");
    let g = (r.rem_euclid(m as i64) as u64).gcd(&m);
    let q = m / g;
    mobius(q) * (totient(m) / totient(q)) as i64
}
