//! The operators `Ω` and `Ψ` on subsets of `{0, ..., n}`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Field;

/// `C(m, j) mod p` by Lucas' theorem, for a prime `p < 2^32`.
pub fn binomial_mod_p(m: u64, j: u64, p: u64) -> u64 {
    let (mut m, mut j) = (m, j);
    let mut acc = 1;
    while m > 0 || j > 0 {
        let (a, b) = (m % p, j % p);
        if b > a {
            return 0;
        }
        acc = acc * digit_binomial(a, b, p) % p;
        m /= p;
        j /= p;
    }
    acc
}

/// `C(a, b) mod p` for `b <= a < p`.
fn digit_binomial(a: u64, b: u64, p: u64) -> u64 {
    let num = (0..b).fold(1, |acc, i| acc * (a - i) % p);
    let den = (1..=b).fold(1, |acc, i| acc * i % p);
    num * mod_pow(den, p - 2, p) % p
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn check_prime(p: u64) -> Result<()> {
    Field::prime(u32::try_from(p).unwrap_or(0)).map(|_| ())
}

/// `Ω(j) = { m : 0 <= m <= n, C(m, j) ≠ 0 mod p }`.
pub fn omega_set(j: usize, n: usize, p: u64) -> Result<BTreeSet<usize>> {
    check_prime(p)?;
    if j > n {
        return Err(Error::Precondition(format!("Ω needs j <= n, got j={j} > n={n}")));
    }
    Ok((0..=n).filter(|&m| binomial_mod_p(m as u64, j as u64, p) != 0).collect())
}

/// `Ω(J) = ⋃_{j ∈ J} Ω(j)`.
pub fn omega_closure(set: &BTreeSet<usize>, n: usize, p: u64) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for &j in set {
        out.extend(omega_set(j, n, p)?);
    }
    Ok(out)
}

/// `Ψ(J) = ⋃_{j ∈ J} {j, n - j}`.
pub fn psi_closure(set: &BTreeSet<usize>, n: usize) -> Result<BTreeSet<usize>> {
    if let Some(&bad) = set.iter().find(|&&j| j > n) {
        return Err(Error::Precondition(format!("{bad} is outside {{0..{n}}}")));
    }
    Ok(set.iter().flat_map(|&j| [j, n - j]).collect())
}
