//! Fixed-`ν` slices of the LR and Kronecker coefficient arrays, and the
//! experiment multiplying them.

use serde::Serialize;

use crate::combinatorics::{partitions_of, Partition};

use super::{kronecker_coefficient, lr_coefficient};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientKind {
    LittlewoodRichardson,
    Kronecker,
}

/// How rows and columns of a slice are indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexConvention {
    /// `λ, μ` range over the partitions of `|ν|`, giving a `p(n) × p(n)` matrix.
    SameSize,
    /// `λ, μ` range over all partitions of size at most `|ν|` (ordered by
    /// size, then lexicographically decreasing), so LR entries with
    /// `|λ| + |μ| = |ν|` appear.
    Graded,
}

impl IndexConvention {
    pub fn index(self, n: usize) -> Vec<Partition> {
        match self {
            Self::SameSize => partitions_of(n),
            Self::Graded => (0..=n).flat_map(partitions_of).collect(),
        }
    }
}

/// A square integer matrix indexed by partitions on both axes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientSlice {
    pub nu: Partition,
    pub kind: CoefficientKind,
    pub order: Vec<Partition>,
    /// Row-major entries; `entries[i][j]` belongs to `(order[i], order[j])`.
    pub entries: Vec<Vec<i64>>,
}

/// The slice `(c^ν_{λμ})` or `(k^ν_{λμ})` with `λ, μ ⊢ |ν|`.
///
/// With this indexing every LR entry vanishes for nonempty `ν`, since
/// `|λ| + |μ| = 2|ν|`.
pub fn coefficient_matrix_slice(nu: &Partition, kind: CoefficientKind) -> CoefficientSlice {
    slice_with(nu, kind, IndexConvention::SameSize)
}

fn slice_with(nu: &Partition, kind: CoefficientKind, convention: IndexConvention) -> CoefficientSlice {
    let order = convention.index(nu.size());
    let entries = order
        .iter()
        .map(|lambda| {
            order
                .iter()
                .map(|mu| match kind {
                    CoefficientKind::LittlewoodRichardson => lr_coefficient(lambda, mu, nu) as i64,
                    CoefficientKind::Kronecker => {
                        if lambda.size() == nu.size() && mu.size() == nu.size() {
                            kronecker_coefficient(lambda, mu, nu).expect("sizes checked") as i64
                        } else {
                            0
                        }
                    }
                })
                .collect()
        })
        .collect();
    CoefficientSlice { nu: nu.clone(), kind, order, entries }
}

/// Outcome of multiplying the LR slice by the Kronecker slice under one indexing convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConventionReport {
    pub convention: IndexConvention,
    pub order: Vec<Partition>,
    pub lr: Vec<Vec<i64>>,
    pub kronecker: Vec<Vec<i64>>,
    pub product: Vec<Vec<i64>>,
    pub is_identity: bool,
    pub lr_is_zero: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub nu: Partition,
    pub conventions: Vec<ConventionReport>,
}

impl ExperimentReport {
    /// True when at least one convention yields the identity.
    pub fn any_identity(&self) -> bool {
        self.conventions.iter().any(|c| c.is_identity)
    }
}

/// Computes `C^ν · K^ν` under both indexing conventions and records whether
/// the product is the identity. Nothing is asserted about the outcome.
pub fn matrix_product_experiment(nu: &Partition) -> ExperimentReport {
    let conventions = [IndexConvention::SameSize, IndexConvention::Graded]
        .into_iter()
        .map(|convention| {
            let lr = slice_with(nu, CoefficientKind::LittlewoodRichardson, convention);
            let kr = slice_with(nu, CoefficientKind::Kronecker, convention);
            let product = mat_mul(&lr.entries, &kr.entries);
            let is_identity = is_identity(&product);
            let lr_is_zero = lr.entries.iter().flatten().all(|&x| x == 0);
            let note = match (is_identity, lr_is_zero) {
                (true, _) => "product equals the identity".to_string(),
                (false, true) => format!(
                    "LR slice is identically zero (|λ|+|μ| never equals |ν| = {} on this index set); product is zero",
                    nu.size()
                ),
                (false, false) => {
                    let off = count_identity_mismatches(&product);
                    format!("product differs from the identity in {off} entries")
                }
            };
            ConventionReport {
                convention,
                order: lr.order,
                lr: lr.entries,
                kronecker: kr.entries,
                product,
                is_identity,
                lr_is_zero,
                note,
            }
        })
        .collect();
    ExperimentReport { nu: nu.clone(), conventions }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum()).collect())
        .collect()
}

fn is_identity(m: &[Vec<i64>]) -> bool {
    count_identity_mismatches(m) == 0
}

fn count_identity_mismatches(m: &[Vec<i64>]) -> usize {
    m.iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &x)| (i, j, x)))
        .filter(|&(i, j, x)| x != i64::from(i == j))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn kronecker_slices() {
        let one = coefficient_matrix_slice(&p(&[1]), CoefficientKind::Kronecker);
        assert_eq!(one.entries, vec![vec![1]]);
        let two = coefficient_matrix_slice(&p(&[2]), CoefficientKind::Kronecker);
        assert_eq!(two.order, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(two.entries, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn lr_slice_vanishes_by_size() {
        let two = coefficient_matrix_slice(&p(&[2]), CoefficientKind::LittlewoodRichardson);
        assert_eq!(two.entries, vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn experiment_is_reported_not_asserted() {
        let r = matrix_product_experiment(&p(&[1]));
        let same = &r.conventions[0];
        assert_eq!(same.convention, IndexConvention::SameSize);
        assert!(same.lr_is_zero);
        assert_eq!(same.product, vec![vec![0]]);
        let graded = &r.conventions[1];
        assert_eq!(graded.order, vec![Partition::empty(), p(&[1])]);
        assert_eq!(graded.lr, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(r, matrix_product_experiment(&p(&[1])));
        let r3 = matrix_product_experiment(&p(&[2, 1]));
        assert_eq!(r3.conventions[0].product.len(), 3);
    }

    #[test]
    fn empty_nu() {
        let r = matrix_product_experiment(&Partition::empty());
        assert!(r.conventions.iter().all(|c| c.is_identity));
    }
}
