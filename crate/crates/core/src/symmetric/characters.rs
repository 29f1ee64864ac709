use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{factorial, partitions_of, Partition};
use crate::error::{Error, Result};

/// The cycle type of a permutation in `S_n`, i.e. a conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        Self(cycles)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// The degree `n` of the ambient symmetric group.
    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// `z_ρ = Π_i i^{m_i} m_i!`, the centralizer order.
    pub fn centralizer_order(&self) -> BigUint {
        self.0
            .multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigUint::from(1u32), |acc, (i, &m)| {
                acc * BigUint::from(i).pow(m as u32) * factorial(m as u64)
            })
    }
}

/// `|C_ρ| = n! / z_ρ`.
pub fn class_size(rho: &CycleType) -> BigUint {
    factorial(rho.degree() as u64) / rho.centralizer_order()
}

/// `χ_λ(ρ)` by the Murnaghan-Nakayama rule, removing border strips of
/// length `ρ_1, ρ_2, ...` in turn.
///
/// Shapes are tracked as beta-sets: removing a border strip of length `k`
/// moves one bead from `b` to `b - k`, with sign `(-1)^{beads strictly between}`.
pub fn character_value(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.size() != rho.degree() {
        return Err(Error::SizeMismatch(format!(
            "character of {lambda} (size {}) evaluated on cycle type {} of degree {}",
            lambda.size(),
            rho.partition(),
            rho.degree()
        )));
    }
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    let mut memo = HashMap::new();
    Ok(mn_rec(beta, rho.partition().parts(), &mut memo))
}

fn mn_rec(beta: Vec<usize>, strips: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&k, rest)) = strips.split_first() else {
        return 1;
    };
    let key = (beta, strips.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = &key.0;
    let mut total = 0;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[pos] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `k_{λμν} = (1/n!) Σ_ρ |C_ρ| χ_λ(ρ) χ_μ(ρ) χ_ν(ρ)`, exact.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "Kronecker coefficient needs equal sizes, got {}, {}, {}",
            n,
            mu.size(),
            nu.size()
        )));
    }
    let mut sum = BigInt::zero();
    for rho in partitions_of(n) {
        let rho = CycleType::new(rho);
        let chars = character_value(lambda, &rho)? * character_value(mu, &rho)? * character_value(nu, &rho)?;
        sum += BigInt::from(class_size(&rho)) * chars;
    }
    let order = BigInt::from(factorial(n as u64));
    let (q, r) = sum.div_rem(&order);
    if !r.is_zero() || q.is_negative() {
        unreachable!("character inner product {sum} is not a nonnegative multiple of {order}");
    }
    Ok(q.to_u64().expect("Kronecker coefficient fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(p(parts))
    }

    #[test]
    fn character_examples() {
        for rho in partitions_of(4) {
            assert_eq!(character_value(&p(&[4]), &CycleType::new(rho)).unwrap(), 1);
        }
        assert_eq!(character_value(&p(&[1, 1]), &ct(&[2])).unwrap(), -1);
        assert_eq!(character_value(&p(&[2, 1]), &ct(&[3])).unwrap(), -1);
        assert_eq!(character_value(&p(&[2, 1]), &ct(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character_value(&p(&[2, 1]), &ct(&[2, 1])).unwrap(), 0);
        assert_eq!(character_value(&Partition::empty(), &ct(&[])).unwrap(), 1);
        assert!(character_value(&p(&[2]), &ct(&[3])).is_err());
    }

    #[test]
    fn dimension_of_standard_module() {
        // χ_(3,2)(1^5) = number of standard tableaux = 5
        assert_eq!(character_value(&p(&[3, 2]), &ct(&[1, 1, 1, 1, 1])).unwrap(), 5);
        assert_eq!(character_value(&p(&[3, 2, 1]), &ct(&[1; 6])).unwrap(), 16);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&ct(&[2, 1])), BigUint::from(3u32));
        assert_eq!(class_size(&ct(&[3])), BigUint::from(2u32));
        assert_eq!(class_size(&ct(&[2, 2])), BigUint::from(3u32));
        for n in 0..=7 {
            let total: BigUint = partitions_of(n).into_iter().map(|r| class_size(&CycleType::new(r))).sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    #[test]
    fn orthogonality() {
        for n in 0..=6 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    let mut sum = BigInt::zero();
                    for rho in &parts {
                        let rho = CycleType::new(rho.clone());
                        sum += BigInt::from(class_size(&rho))
                            * character_value(a, &rho).unwrap()
                            * character_value(b, &rho).unwrap();
                    }
                    let expected = if a == b { BigInt::from(factorial(n as u64)) } else { BigInt::zero() };
                    assert_eq!(sum, expected, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_coefficient(&p(&[1, 1]), &p(&[1, 1]), &p(&[2])).unwrap(), 1);
        assert_eq!(kronecker_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(kronecker_coefficient(&p(&[2, 1]), &p(&[3]), &p(&[3])).unwrap(), 0);
        assert!(kronecker_coefficient(&p(&[2]), &p(&[1]), &p(&[2])).is_err());
        for n in 1..=6 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    let k = kronecker_coefficient(a, b, &p(&[n])).unwrap();
                    assert_eq!(k, u64::from(a == b));
                }
            }
        }
    }
}
