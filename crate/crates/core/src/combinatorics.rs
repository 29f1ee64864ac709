//! Partitions, index sets and the counting functions built on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored with weakly decreasing positive parts.
///
/// The empty partition has size 0 and length 0. Text form is the parts joined
/// by commas (`5,3,3,1`), with `[]` for the empty partition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from a weakly decreasing sequence, dropping zero parts.
    pub fn from_weak(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        Self::new(parts)
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The sum of the parts, written `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of parts, written `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True if the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Multiplicity of each part size: `result[i]` counts parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("[]");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Every partition of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The transposed Young diagram.
pub fn conjugate(p: &Partition) -> Partition {
    let width = p.part(0);
    let parts = (0..width)
        .map(|j| p.parts.iter().take_while(|&&row| row > j).count())
        .collect();
    Partition { parts }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of `(r+1)`-dimensional subspaces of an `(n+1)`-dimensional space
/// over a `q`-element field, i.e. the length of the Grassmann code `C(r, n)`.
pub fn q_binomial(n: u32, r: u32, q: u64) -> Result<BigUint> {
    if r > n {
        return Err(Error::Precondition(format!("q_binomial needs r <= n, got r={r} > n={n}")));
    }
    if q < 2 {
        return Err(Error::Precondition(format!("q_binomial needs q >= 2, got {q}")));
    }
    let q = BigUint::from(q);
    let top = q.pow(n + 1);
    let bottom = q.pow(r + 1);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..=r {
        let qi = q.pow(i);
        num *= &top - &qi;
        den *= &bottom - &qi;
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// A strictly increasing subset of `{1, ..., ambient}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    elements: Vec<usize>,
    ambient: usize,
}

impl IndexSet {
    pub fn new(elements: Vec<usize>, ambient: usize) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(format!("{elements:?} is not strictly increasing")));
        }
        if let (Some(&lo), Some(&hi)) = (elements.first(), elements.last()) {
            if lo < 1 || hi > ambient {
                return Err(Error::InvalidIndexSet(format!(
                    "{elements:?} is not contained in {{1..{ambient}}}"
                )));
            }
        }
        Ok(Self { elements, ambient })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.elements.iter().sum()
    }

    /// Picks the elements at the given 1-based positions.
    pub fn select(&self, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&p| self.elements[p - 1]).collect()
    }

    /// Parses `{1,3}` (braces optional) against the given ambient size.
    pub fn parse(s: &str, ambient: usize) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        let elements = if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad index {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(elements, ambient)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for x in start..=n {
            if n - x + 1 < need {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Maps `I = {i_1 < ... < i_r}` to `(i_r - r, ..., i_1 - 1)` with zeros stripped.
pub fn partition_from_index_set(set: &IndexSet, r: usize) -> Result<Partition> {
    if set.len() != r {
        return Err(Error::Precondition(format!(
            "index set {set} has {} elements, expected r = {r}",
            set.len()
        )));
    }
    let parts = set
        .elements
        .iter()
        .enumerate()
        .rev()
        .map(|(pos, &i)| i - (pos + 1))
        .collect();
    Partition::from_weak(parts)
}

/// Membership in the hypersimplex `{c in Q^n : 0 <= c_i <= 1, sum c_i = d + 1}`.
pub fn hypersimplex_contains(c: &[BigRational], d: u64, n: usize) -> Result<bool> {
    if c.len() != n {
        return Err(Error::SizeMismatch(format!("point has {} coordinates, expected {n}", c.len())));
    }
    let zero = BigRational::zero();
    let one = BigRational::one();
    if c.iter().any(|x| *x < zero || *x > one) {
        return Ok(false);
    }
    let total: BigRational = c.iter().sum();
    Ok(total == BigRational::from_integer((d + 1).into()))
}
