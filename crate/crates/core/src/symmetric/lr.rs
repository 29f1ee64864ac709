use serde::Serialize;

use crate::combinatorics::{partitions_of, Partition};

/// `c^ν_{λμ}`, the multiplicity of `s_ν` in `s_λ · s_μ`.
///
/// Counts Littlewood-Richardson tableaux: semistandard fillings of the skew
/// shape `ν/λ` with content `μ` whose reverse reading word (rows right to
/// left, top to bottom) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // cells in reverse reading order
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|row| (lambda.part(row)..nu.part(row)).rev().map(move |col| (row, col)))
        .collect();
    let mut filling: Vec<Vec<usize>> = nu.parts().iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![0usize; mu.len()];
    let mut count = 0;
    search(&cells, 0, lambda, mu, &mut filling, &mut used, &mut count);
    count
}

fn search(
    cells: &[(usize, usize)],
    at: usize,
    lambda: &Partition,
    mu: &Partition,
    filling: &mut [Vec<usize>],
    used: &mut [usize],
    count: &mut u64,
) {
    let Some(&(row, col)) = cells.get(at) else {
        *count += 1;
        return;
    };
    // weakly increasing along rows: bounded by the (already filled) right neighbour
    let hi = if col + 1 < filling[row].len() { filling[row][col + 1] } else { mu.len() };
    // strictly increasing down columns: the cell above is filled if it lies in the skew shape
    let lo = if row > 0 && col >= lambda.part(row - 1) { filling[row - 1][col] + 1 } else { 1 };
    for v in lo..=hi.min(mu.len()) {
        let idx = v - 1;
        if used[idx] == mu.part(idx) {
            continue;
        }
        if idx > 0 && used[idx] + 1 > used[idx - 1] {
            continue;
        }
        filling[row][col] = v;
        used[idx] += 1;
        search(cells, at + 1, lambda, mu, filling, used, count);
        used[idx] -= 1;
    }
    filling[row][col] = 0;
}

/// A support point `(λ, μ, ν)` with `c^ν_{λμ} > 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SupportTriple {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub coefficient: u64,
}

/// All triples with `|λ| + |μ| = |ν| = n` and a positive LR coefficient,
/// sorted by `(λ, μ, ν)`. Their convex hull is the Newton polytope of
/// `Σ c^ν_{λμ} x^λ y^μ z^ν`.
pub fn lr_support(n: usize) -> Vec<SupportTriple> {
    let mut out = Vec::new();
    for nu in partitions_of(n) {
        for k in 0..=n {
            for lambda in partitions_of(k) {
                for mu in partitions_of(n - k) {
                    let c = lr_coefficient(&lambda, &mu, &nu);
                    if c > 0 {
                        out.push(SupportTriple {
                            lambda: lambda.clone(),
                            mu,
                            nu: nu.clone(),
                            coefficient: c,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(lr_coefficient(&p(&[]), &p(&[2]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[3])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn symmetric_in_lambda_mu() {
        for n in 0..=6 {
            for nu in partitions_of(n) {
                for k in 0..=n {
                    for lambda in partitions_of(k) {
                        for mu in partitions_of(n - k) {
                            assert_eq!(
                                lr_coefficient(&lambda, &mu, &nu),
                                lr_coefficient(&mu, &lambda, &nu),
                                "{lambda} {mu} {nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn support_small() {
        let one = lr_support(1);
        assert_eq!(one.len(), 2);
        assert_eq!((one[0].lambda.clone(), one[0].mu.clone()), (p(&[]), p(&[1])));
        assert_eq!((one[1].lambda.clone(), one[1].mu.clone()), (p(&[1]), p(&[])));

        let two: Vec<(Partition, Partition, Partition)> =
            lr_support(2).into_iter().map(|t| (t.lambda, t.mu, t.nu)).collect();
        let mut expected = vec![
            (p(&[]), p(&[2]), p(&[2])),
            (p(&[]), p(&[1, 1]), p(&[1, 1])),
            (p(&[2]), p(&[]), p(&[2])),
            (p(&[1, 1]), p(&[]), p(&[1, 1])),
            (p(&[1]), p(&[1]), p(&[2])),
            (p(&[1]), p(&[1]), p(&[1, 1])),
        ];
        expected.sort();
        assert_eq!(two, expected);

        for t in lr_support(3) {
            assert_eq!(t.lambda.size() + t.mu.size(), 3);
            assert_eq!(t.nu.size(), 3);
        }
    }
}
