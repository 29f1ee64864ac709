use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::combinatorics::{binomial, q_binomial};
use crate::error::{Error, Result};
use crate::field::Field;

use super::linalg::{self, Matrix};
use super::projective::for_each_subset;

/// Largest number of subspaces enumerated for a brute-force Grassmann dimension.
pub const MAX_ENUMERATED_SUBSPACES: u64 = 200_000;

/// Every `k`-dimensional subspace of `F^m`, each as its reduced row-echelon basis,
/// in lexicographic order of that basis.
pub fn subspaces(field: &Field, m: usize, k: usize) -> Vec<Matrix> {
    let q = field.order() as u64;
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    for_each_subset(m, k, &mut |pivots| {
        // free positions: row i, columns after pivot i that are not pivots
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (pivots[i] + 1..m).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
            .collect();
        let count = q.pow(free.len() as u32);
        for idx in 0..count {
            let mut rows = vec![vec![0u32; m]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            let mut rest = idx;
            for &(i, c) in free.iter().rev() {
                rows[i][c] = (rest % q) as u32;
                rest /= q;
            }
            out.push(rows);
        }
        true
    });
    out.sort();
    out
}

/// The `k × k` minors of a `k × m` matrix over all column subsets, in lexicographic order.
pub fn plucker_coordinates(field: &Field, basis: &[Vec<u32>]) -> Vec<u32> {
    let k = basis.len();
    let m = basis.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for_each_subset(m, k, &mut |cols| {
        let minor: Matrix = basis.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
        out.push(linalg::determinant(field, &minor));
        true
    });
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrassmannParams {
    pub n: u32,
    pub r: u32,
    pub q: u32,
    /// Number of `(r+1)`-subspaces of `F_q^{n+1}`.
    pub length: BigUint,
    /// `C(n, r)`.
    pub dimension_printed: BigUint,
    /// `C(n+1, r+1)`, the number of Plücker coordinates.
    pub plucker_coordinates: BigUint,
    /// Rank of the Plücker evaluation matrix, when the Grassmannian is small enough to enumerate.
    pub dimension_bruteforce: Option<usize>,
}

/// Length and both dimension conventions of the Grassmann code `C(r, n)` over `GF(q)`.
pub fn grassmann_code_params(field: &Field, n: u32, r: u32) -> Result<GrassmannParams> {
    if r > n {
        return Err(Error::Precondition(format!("Grassmann code needs r <= n, got r={r} > n={n}")));
    }
    let q = field.order();
    let length = q_binomial(n, r, q as u64)?;
    let dimension_bruteforce = if length <= BigUint::from(MAX_ENUMERATED_SUBSPACES) {
        let subs = subspaces(field, n as usize + 1, r as usize + 1);
        let columns: Vec<Vec<u32>> = subs.iter().map(|s| plucker_coordinates(field, s)).collect();
        Some(linalg::rank(field, &columns))
    } else {
        None
    };
    Ok(GrassmannParams {
        n,
        r,
        q,
        length,
        dimension_printed: binomial(n as u64, r as u64),
        plucker_coordinates: binomial(n as u64 + 1, r as u64 + 1),
        dimension_bruteforce,
    })
}

/// The orbit of `rowspace(U)` under right multiplication by the group generated
/// by `generators`, each subspace given by its reduced row-echelon basis.
pub fn grassmann_orbit(field: &Field, u: &[Vec<u32>], generators: &[Matrix]) -> Result<BTreeSet<Matrix>> {
    let n = u.first().map_or(0, Vec::len);
    linalg::check_shape(field, u, n, "subspace basis")?;
    if u.is_empty() || linalg::rank(field, u) != u.len() {
        return Err(Error::Precondition("the subspace basis must be nonempty with full row rank".into()));
    }
    for g in generators {
        if g.len() != n {
            return Err(Error::DimensionMismatch(format!("generators must be {n}x{n}")));
        }
        linalg::check_shape(field, g, n, "generator")?;
        if linalg::determinant(field, g) == 0 {
            return Err(Error::Singular);
        }
    }
    let start = linalg::rref(field, u).0;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for g in generators {
            let image = linalg::rref(field, &linalg::mat_mul(field, &s, g)).0;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(seen)
}

/// A permutation of `{1, ..., n}` in one-line notation: `images[i - 1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::Precondition(format!("{images:?} is not a permutation of 1..{n}")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Moves the entry at position `i` to position `σ(i)`.
    pub fn apply<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        let mut out = tuple.to_vec();
        for (i, &target) in self.images.iter().enumerate() {
            out[target - 1] = tuple[i].clone();
        }
        out
    }

    /// Parses one-line notation `2,3,1` or cycle notation `(1 2 3)(4 5)` on `{1..n}`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('(') {
            let mut images: Vec<usize> = (1..=n).collect();
            for cycle in t.split(')').map(|c| c.trim()).filter(|c| !c.is_empty()) {
                let body = cycle
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
                let elems = body
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|e| !e.is_empty())
                    .map(|e| e.parse::<usize>().map_err(|_| Error::Parse(format!("bad cycle entry {e:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                if elems.iter().any(|&e| e == 0 || e > n) {
                    return Err(Error::Precondition(format!("cycle {cycle}) leaves 1..{n}")));
                }
                for (i, &e) in elems.iter().enumerate() {
                    images[e - 1] = elems[(i + 1) % elems.len()];
                }
            }
            return Self::new(images);
        }
        let images = t
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|e| !e.is_empty())
            .map(|e| e.parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {e:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(Error::Precondition(format!("permutation {s:?} does not act on 1..{n}")));
        }
        Self::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TupleMode {
    /// Configurations are compared as multisets.
    Unordered,
    Ordered,
}

/// The orbit of a configuration under the permutation group generated by `generators`.
/// In unordered mode each configuration is reported sorted.
pub fn configuration_orbits<T: Ord + Clone>(
    config: &[T],
    generators: &[Permutation],
    mode: TupleMode,
) -> Result<BTreeSet<Vec<T>>> {
    if let Some(g) = generators.iter().find(|g| g.degree() != config.len()) {
        return Err(Error::DimensionMismatch(format!(
            "permutation {g} has degree {} but the configuration has {} points",
            g.degree(),
            config.len()
        )));
    }
    let canon = |t: Vec<T>| -> Vec<T> {
        match mode {
            TupleMode::Ordered => t,
            TupleMode::Unordered => {
                let mut t = t;
                t.sort();
                t
            }
        }
    };
    let start = canon(config.to_vec());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for g in generators {
            let image = canon(g.apply(&c));
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(seen)
}
