//! Brute-force reference computations.
//!
//! Each function here recomputes a quantity by a different method from the
//! main implementation, so the two can be compared.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::field::{Field, P1Point, Poly, PolyMatrix, RationalFunction};

/// Integer polynomial in `m` variables, keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct MPoly(BTreeMap<Vec<u32>, i64>);

impl MPoly {
    fn constant(m: usize, c: i64) -> Self {
        let mut t = BTreeMap::new();
        if c != 0 {
            t.insert(vec![0; m], c);
        }
        MPoly(t)
    }

    fn add_term(&mut self, e: Vec<u32>, c: i64) {
        let slot = self.0.entry(e.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.0.remove(&e);
        }
    }

    fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, &c) in &other.0 {
            out.add_term(e.clone(), c);
        }
        out
    }

    fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ea, &ca) in &self.0 {
            for (eb, &cb) in &other.0 {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    fn coefficient(&self, e: &[u32]) -> i64 {
        self.0.get(e).copied().unwrap_or(0)
    }
}

/// All exponent vectors of length `m` with total degree `d`.
fn compositions(m: usize, d: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(m - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_k` in `m` variables.
fn complete_homogeneous(m: usize, k: i64) -> MPoly {
    if k < 0 {
        return MPoly::default();
    }
    let mut p = MPoly::default();
    for e in compositions(m, k as u32) {
        p.add_term(e, 1);
    }
    p
}

/// All permutations of `0..n` with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `s_λ` in `m` variables by the Jacobi-Trudi determinant `det(h_{λ_i - i + j})`.
fn schur_jacobi_trudi(lambda: &Partition, m: usize) -> MPoly {
    let l = lambda.len();
    if l == 0 {
        return MPoly::constant(m, 1);
    }
    let mut total = MPoly::default();
    for (perm, sign) in signed_permutations(l) {
        let mut term = MPoly::constant(m, sign);
        for (i, &j) in perm.iter().enumerate() {
            let k = lambda.part(i) as i64 - i as i64 + j as i64;
            term = term.mul(&complete_homogeneous(m, k));
            if term.0.is_empty() {
                break;
            }
        }
        total = total.add(&term);
    }
    total
}

/// The Vandermonde `a_δ = ∏_{i<j} (x_i - x_j)` in `m` variables.
fn vandermonde(m: usize) -> MPoly {
    let mut p = MPoly::constant(m, 1);
    for i in 0..m {
        for j in i + 1..m {
            let mut f = MPoly::default();
            let mut ei = vec![0; m];
            ei[i] = 1;
            let mut ej = vec![0; m];
            ej[j] = 1;
            f.add_term(ei, 1);
            f.add_term(ej, -1);
            p = p.mul(&f);
        }
    }
    p
}

fn shifted(nu: &Partition, m: usize) -> Vec<u32> {
    (0..m).map(|i| (nu.part(i) + m - 1 - i) as u32).collect()
}

/// `c^ν_{λμ}` as the coefficient of `x^{ν+δ}` in `a_δ · s_λ · s_μ`, with Schur
/// polynomials from the Jacobi-Trudi identity.
pub fn lr_by_expansion(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.size() + mu.size() != nu.size() {
        // the product is homogeneous of degree |λ| + |μ|
        return 0;
    }
    let m = nu.len().max(lambda.len()).max(mu.len()).max(1);
    let product = vandermonde(m).mul(&schur_jacobi_trudi(lambda, m)).mul(&schur_jacobi_trudi(mu, m));
    product.coefficient(&shifted(nu, m))
}

/// `χ^λ(ρ)` by the Frobenius formula: the coefficient of `x^{λ+δ}` in `a_δ · p_ρ`.
pub fn character_by_frobenius(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.size() != rho.size() {
        return 0;
    }
    let m = lambda.len().max(1);
    let mut p = vandermonde(m);
    for &k in rho.parts() {
        let mut power_sum = MPoly::default();
        for i in 0..m {
            let mut e = vec![0; m];
            e[i] = k as u32;
            power_sum.add_term(e, 1);
        }
        p = p.mul(&power_sum);
    }
    p.coefficient(&shifted(lambda, m))
}

/// `z_ρ = ∏_k k^{m_k} m_k!`.
pub fn centralizer_order(rho: &Partition) -> BigUint {
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for &k in rho.parts() {
        *counts.entry(k).or_insert(0) += 1;
    }
    counts.iter().fold(BigUint::one(), |acc, (&k, &m)| {
        let fact: BigUint = (1..=m).fold(BigUint::one(), |f, i| f * i);
        acc * BigUint::from(k).pow(m) * fact
    })
}

/// All partitions of `n` by recursive generation on the largest part (order irrelevant).
pub fn partitions_recursive(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()).expect("decreasing by construction"));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `k^ν_{λμ} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ` with Frobenius-formula characters.
pub fn kronecker_by_frobenius(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let n = nu.size();
    if lambda.size() != n || mu.size() != n {
        return 0;
    }
    let mut sum = num_rational::BigRational::zero();
    for rho in partitions_recursive(n) {
        let prod = character_by_frobenius(lambda, &rho) * character_by_frobenius(mu, &rho) * character_by_frobenius(nu, &rho);
        sum += num_rational::BigRational::new(prod.into(), num_bigint::BigInt::from(centralizer_order(&rho)));
    }
    assert!(sum.is_integer(), "Kronecker coefficient must be an integer");
    i64::try_from(sum.to_integer()).expect("small coefficient")
}

/// Determinant by the Leibniz permutation expansion.
pub fn leibniz_determinant(field: &Field, rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    let mut total = Poly::zero(field);
    for (perm, sign) in signed_permutations(n) {
        let mut term = Poly::one(field);
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &rows[i][j];
            if term.is_zero() {
                break;
            }
        }
        total = if sign > 0 { &total + &term } else { &total - &term };
    }
    total
}

/// `k`-subsets of `0..n`, lexicographic.
fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in index_subsets(n, k - 1).into_iter().filter(|r| r.first().is_none_or(|&f| f > first)) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// Monic gcd of all `i × i` minors, for `i = 1..=min(m, n)`, by exhaustive minor enumeration.
/// A zero entry means every `i × i` minor vanishes.
pub fn determinantal_divisors(a: &PolyMatrix) -> Vec<Poly> {
    let (m, n) = (a.nrows(), a.ncols());
    let field = a.field();
    (1..=m.min(n))
        .map(|i| {
            let mut g = Poly::zero(field);
            for rs in index_subsets(m, i) {
                for cs in index_subsets(n, i) {
                    let minor: Vec<Vec<Poly>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| a.get(r, c).clone()).collect()).collect();
                    g = g.gcd(&leibniz_determinant(field, &minor));
                }
            }
            g
        })
        .collect()
}

/// Number of `k`-dimensional subspaces of `GF(p)^m` for a prime `p`, found by
/// growing spans one vector at a time and deduplicating the resulting vector sets.
pub fn count_subspaces_by_span(p: u32, m: usize, k: usize) -> u64 {
    let total = (p as u64).pow(m as u32);
    let add = |a: u64, b: u64| -> u64 {
        let (mut a, mut b, mut out, mut place) = (a, b, 0u64, 1u64);
        for _ in 0..m {
            out += ((a % p as u64 + b % p as u64) % p as u64) * place;
            a /= p as u64;
            b /= p as u64;
            place *= p as u64;
        }
        out
    };
    let scale = |a: u64, c: u64| -> u64 {
        let (mut a, mut out, mut place) = (a, 0u64, 1u64);
        for _ in 0..m {
            out += ((a % p as u64) * c % p as u64) * place;
            a /= p as u64;
            place *= p as u64;
        }
        out
    };
    let mut level: HashSet<Vec<u64>> = HashSet::from([vec![0u64]]);
    for _ in 0..k {
        let mut next = HashSet::new();
        for space in &level {
            let mut covered: HashSet<u64> = space.iter().copied().collect();
            for v in 0..total {
                if covered.contains(&v) {
                    continue;
                }
                let mut span: BTreeSet<u64> = BTreeSet::new();
                for &s in space {
                    for c in 0..p as u64 {
                        span.insert(add(s, scale(v, c)));
                    }
                }
                covered.extend(span.iter().copied());
                next.insert(span.into_iter().collect::<Vec<_>>());
            }
        }
        level = next;
    }
    level.len() as u64
}

/// `Ω(j)` with binomials computed exactly as big integers.
pub fn omega_set_plain(j: usize, n: usize, p: u64) -> BTreeSet<usize> {
    (0..=n)
        .filter(|&m| {
            if j > m {
                return false;
            }
            let mut c = BigUint::one();
            for i in 0..j {
                c = c * BigUint::from(m - i) / BigUint::from(i + 1);
            }
            !(c % BigUint::from(p)).is_zero()
        })
        .collect()
}

/// Multiplicities of the fibre `φ^{-1}(y)`: finite points from repeated division
/// of `f - y g` (or `g` when `y = ∞`) by linear factors, plus the point at
/// infinity by degree comparison. `None` unless the fibre has `deg φ` points
/// counted with multiplicity over the base field.
pub fn split_fiber(phi: &RationalFunction, y: P1Point) -> Option<Vec<(P1Point, usize)>> {
    let (f, g) = (phi.numerator(), phi.denominator());
    let deg = phi.degree();
    let h = match y {
        P1Point::Finite(v) => f - &g.scale(v),
        P1Point::Infinity => g.clone(),
    };
    let field = phi.field();
    let mut out = Vec::new();
    let mut rest = h.clone();
    for a in field.values() {
        let lin = Poly::linear_root(field, a);
        let mut m = 0;
        while let Some(q) = rest.exact_div(&lin) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            out.push((P1Point::Finite(a), m));
        }
    }
    let finite_total: usize = out.iter().map(|x| x.1).sum();
    let at_infinity = deg - h.degree().unwrap_or(0);
    if at_infinity > 0 {
        out.push((P1Point::Infinity, at_infinity));
    }
    (finite_total + at_infinity == deg && !h.is_zero()).then_some(out)
}

/// `∏_{i<j} (t_j - t_i)` over the finite parameters; the point at infinity
/// contributes only a sign, so it is skipped.
pub fn vandermonde_product(field: &Field, params: &[P1Point]) -> u32 {
    let finite: Vec<u32> = params
        .iter()
        .filter_map(|p| match p {
            P1Point::Finite(v) => Some(*v),
            P1Point::Infinity => None,
        })
        .collect();
    let infinities = params.len() - finite.len();
    if infinities > 1 {
        return 0;
    }
    let mut acc = 1;
    for i in 0..finite.len() {
        for j in i + 1..finite.len() {
            acc = field.mul(acc, field.sub(finite[j], finite[i]));
        }
    }
    acc
}
