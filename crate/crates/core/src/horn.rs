//! Horn's inductively defined index-triple sets.
//!
//! `U^n_r` holds the triples `(I, J, K)` of `r`-subsets of `{1..n}` with
//! `ΣI + ΣJ = ΣK + r(r+1)/2`. `T^n_r` keeps those that also satisfy
//! `Σ_{f∈F} i_f + Σ_{g∈G} j_g ≤ Σ_{h∈H} k_h + p(p+1)/2` for every `p < r` and
//! every `(F, G, H) ∈ T^r_p`, where `i_f` is the element of `I` at 1-based
//! position `f`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{k_subsets, partition_from_index_set, IndexSet, Partition};
use crate::error::{Error, Result};
use crate::symmetric::lr_coefficient;

/// Three index sets of the same size `r` inside `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexTriple {
    pub i: IndexSet,
    pub j: IndexSet,
    pub k: IndexSet,
}

impl IndexTriple {
    pub fn new(i: IndexSet, j: IndexSet, k: IndexSet) -> Result<Self> {
        if i.len() != j.len() || j.len() != k.len() {
            return Err(Error::InvalidIndexSet(format!("sets {i}, {j}, {k} differ in size")));
        }
        if i.ambient() != j.ambient() || j.ambient() != k.ambient() {
            return Err(Error::InvalidIndexSet("sets have different ambient sizes".into()));
        }
        Ok(Self { i, j, k })
    }

    pub fn r(&self) -> usize {
        self.i.len()
    }

    /// Parses the golden-file line format `{1,2}|{1,3}|{1,3}`.
    pub fn parse(line: &str, n: usize) -> Result<Self> {
        let sets: Vec<&str> = line.trim().split('|').collect();
        let [i, j, k] = sets.as_slice() else {
            return Err(Error::Parse(format!("expected three '|'-separated sets in {line:?}")));
        };
        Self::new(IndexSet::parse(i, n)?, IndexSet::parse(j, n)?, IndexSet::parse(k, n)?)
    }

    /// The partitions `(λ(I), μ(J), ν(K))`.
    pub fn partitions(&self) -> (Partition, Partition, Partition) {
        let r = self.r();
        let to_partition = |s: &IndexSet| partition_from_index_set(s, r).expect("sizes checked");
        (to_partition(&self.i), to_partition(&self.j), to_partition(&self.k))
    }
}

impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.i, self.j, self.k)
    }
}

fn check_range(n: usize, r: usize) -> Result<()> {
    if r == 0 || r >= n {
        return Err(Error::Precondition(format!("need 1 <= r < n, got (n, r) = ({n}, {r})")));
    }
    Ok(())
}

/// `U^n_r`, sorted lexicographically by `(I, J, K)`.
pub fn u_set(n: usize, r: usize) -> Result<Vec<IndexTriple>> {
    check_range(n, r)?;
    Ok(u_set_raw(n, r))
}

fn u_set_raw(n: usize, r: usize) -> Vec<IndexTriple> {
    let subsets: Vec<IndexSet> = k_subsets(n, r)
        .into_iter()
        .map(|s| IndexSet::new(s, n).expect("k_subsets yields valid sets"))
        .collect();
    let shift = r * (r + 1) / 2;
    let mut out = Vec::new();
    for i in &subsets {
        for j in &subsets {
            for k in &subsets {
                if i.sum() + j.sum() == k.sum() + shift {
                    out.push(IndexTriple { i: i.clone(), j: j.clone(), k: k.clone() });
                }
            }
        }
    }
    out
}

/// `T^n_r`, sorted lexicographically by `(I, J, K)`.
pub fn t_set(n: usize, r: usize) -> Result<Vec<IndexTriple>> {
    check_range(n, r)?;
    Ok(HornTables::default().t_set(n, r))
}

/// Memo table for `T^n_r`, keyed by `(n, r)`. Owned by one caller at a time.
#[derive(Debug, Default)]
pub struct HornTables {
    cache: HashMap<(usize, usize), Vec<IndexTriple>>,
}

impl HornTables {
    pub fn t_set(&mut self, n: usize, r: usize) -> Vec<IndexTriple> {
        if let Some(hit) = self.cache.get(&(n, r)) {
            return hit.clone();
        }
        let candidates = u_set_raw(n, r);
        let result = if r == 1 {
            candidates
        } else {
            let lower: Vec<Vec<IndexTriple>> = (1..r).map(|p| self.t_set(r, p)).collect();
            candidates
                .into_iter()
                .filter(|t| lower.iter().flatten().all(|sub| satisfies(sub, t)))
                .collect()
        };
        self.cache.insert((n, r), result.clone());
        result
    }
}

fn satisfies(sub: &IndexTriple, t: &IndexTriple) -> bool {
    let p = sub.r();
    let lhs: usize = t.i.select(sub.i.elements()).iter().sum::<usize>()
        + t.j.select(sub.j.elements()).iter().sum::<usize>();
    let rhs: usize = t.k.select(sub.k.elements()).iter().sum::<usize>() + p * (p + 1) / 2;
    lhs <= rhs
}

/// One row of the Horn/LR cross-check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornLrEntry {
    pub triple: IndexTriple,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub coefficient: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornLrReport {
    pub n: usize,
    pub r: usize,
    /// Triples of `T^n_r`.
    pub in_t: Vec<HornLrEntry>,
    /// Triples of `U^n_r \ T^n_r`.
    pub outside_t: Vec<HornLrEntry>,
}

impl HornLrReport {
    /// Positive coefficients on `T`, zero coefficients on `U \ T`.
    pub fn is_consistent(&self) -> bool {
        self.in_t.iter().all(|e| e.coefficient > 0) && self.outside_t.iter().all(|e| e.coefficient == 0)
    }
}

/// Maps each triple of `U^n_r` to `c^{ν(K)}_{λ(I) μ(J)}`, split by membership in `T^n_r`.
pub fn horn_lr_consistency(n: usize, r: usize) -> Result<HornLrReport> {
    let u = u_set(n, r)?;
    let t = t_set(n, r)?;
    let entry = |triple: IndexTriple| {
        let (lambda, mu, nu) = triple.partitions();
        let coefficient = lr_coefficient(&lambda, &mu, &nu);
        HornLrEntry { triple, lambda, mu, nu, coefficient }
    };
    let (in_t, outside_t): (Vec<_>, Vec<_>) = u.into_iter().partition(|x| t.binary_search(x).is_ok());
    Ok(HornLrReport {
        n,
        r,
        in_t: in_t.into_iter().map(entry).collect(),
        outside_t: outside_t.into_iter().map(entry).collect(),
    })
}

/// Formats triples one per line, as in the golden files.
pub fn format_triples(triples: &[IndexTriple]) -> String {
    triples.iter().map(|t| format!("{t}\n")).collect()
}

pub fn parse_triples(text: &str, n: usize) -> Result<Vec<IndexTriple>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| IndexTriple::parse(l, n))
        .collect()
}

/// The printed appendix tables, one golden file per `(set, n, r)`.
pub mod golden {
    use super::*;

    /// Which of the two sets a golden file holds.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
    pub enum HornSet {
        U,
        T,
    }

    /// `(set, n, r, file contents)` for the six tabulated `(n, r)` pairs.
    pub const APPENDIX: [(HornSet, usize, usize, &str); 12] = [
        (HornSet::U, 2, 1, include_str!("../golden/appendix/u_2_1.txt")),
        (HornSet::T, 2, 1, include_str!("../golden/appendix/t_2_1.txt")),
        (HornSet::U, 3, 1, include_str!("../golden/appendix/u_3_1.txt")),
        (HornSet::T, 3, 1, include_str!("../golden/appendix/t_3_1.txt")),
        (HornSet::U, 3, 2, include_str!("../golden/appendix/u_3_2.txt")),
        (HornSet::T, 3, 2, include_str!("../golden/appendix/t_3_2.txt")),
        (HornSet::U, 4, 1, include_str!("../golden/appendix/u_4_1.txt")),
        (HornSet::T, 4, 1, include_str!("../golden/appendix/t_4_1.txt")),
        (HornSet::U, 4, 2, include_str!("../golden/appendix/u_4_2.txt")),
        (HornSet::T, 4, 2, include_str!("../golden/appendix/t_4_2.txt")),
        (HornSet::U, 4, 3, include_str!("../golden/appendix/u_4_3.txt")),
        (HornSet::T, 4, 3, include_str!("../golden/appendix/t_4_3.txt")),
    ];

    /// Cardinalities printed next to each table row. The `(3, 2)` row prints
    /// 10 while listing 6 triples.
    pub fn printed_cardinality(set: HornSet, n: usize, r: usize) -> Option<usize> {
        match (set, n, r) {
            (_, 2, 1) => Some(3),
            (_, 3, 1) => Some(6),
            (_, 3, 2) => Some(10),
            (_, 4, 1) => Some(10),
            (HornSet::U, 4, 2) => Some(27),
            (HornSet::T, 4, 2) => Some(21),
            (_, 4, 3) => Some(10),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(i: &[usize], j: &[usize], k: &[usize], n: usize) -> IndexTriple {
        IndexTriple::new(
            IndexSet::new(i.to_vec(), n).unwrap(),
            IndexSet::new(j.to_vec(), n).unwrap(),
            IndexSet::new(k.to_vec(), n).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn u_2_1() {
        let u = u_set(2, 1).unwrap();
        assert_eq!(u, vec![
            triple(&[1], &[1], &[1], 2),
            triple(&[1], &[2], &[2], 2),
            triple(&[2], &[1], &[2], 2)
        ]);
    }

    #[test]
    fn cardinalities() {
        assert_eq!(u_set(3, 2).unwrap().len(), 6);
        assert_eq!(u_set(4, 2).unwrap().len(), 27);
        assert_eq!(t_set(4, 2).unwrap().len(), 21);
        assert_eq!(t_set(3, 1).unwrap(), u_set(3, 1).unwrap());
        assert_eq!(t_set(4, 3).unwrap(), u_set(4, 3).unwrap());
        assert_eq!(t_set(4, 3).unwrap().len(), 10);
    }

    #[test]
    fn rejects_r_out_of_range() {
        assert!(u_set(3, 3).is_err());
        assert!(t_set(2, 0).is_err());
    }

    #[test]
    fn t_within_u() {
        for n in 2..=6 {
            for r in 1..n {
                let u = u_set(n, r).unwrap();
                let t = t_set(n, r).unwrap();
                assert!(t.iter().all(|x| u.contains(x)), "({n}, {r})");
                if r == 1 {
                    assert_eq!(t, u);
                }
                for x in &u {
                    let (l, m, nu) = x.partitions();
                    assert_eq!(l.size() + m.size(), nu.size());
                }
            }
        }
    }

    #[test]
    fn consistency_examples() {
        let small = horn_lr_consistency(2, 1).unwrap();
        assert_eq!(small.in_t.len(), 3);
        assert!(small.in_t.iter().all(|e| e.coefficient == 1));

        let report = horn_lr_consistency(4, 2).unwrap();
        let outlier = report
            .outside_t
            .iter()
            .find(|e| e.triple == triple(&[1, 2], &[1, 4], &[2, 3], 4))
            .unwrap();
        assert_eq!(outlier.lambda, Partition::empty());
        assert_eq!(outlier.mu, Partition::new(vec![2]).unwrap());
        assert_eq!(outlier.nu, Partition::new(vec![1, 1]).unwrap());
        assert_eq!(outlier.coefficient, 0);
        assert_eq!(report.in_t.len(), 21);
        assert!(report.is_consistent());
    }

    #[test]
    fn line_format_round_trip() {
        let t = triple(&[1, 2], &[1, 3], &[1, 3], 4);
        assert_eq!(t.to_string(), "{1,2}|{1,3}|{1,3}");
        assert_eq!(IndexTriple::parse("{1,2}|{1,3}|{1,3}", 4).unwrap(), t);
        assert!(IndexTriple::parse("{1,2}|{1,3}", 4).is_err());
        assert!(IndexTriple::parse("{1,2}|{1}|{1,3}", 4).is_err());
    }
}
