use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;

use super::linalg;

/// A point of `PG(n, q)`: homogeneous coordinates scaled so the first nonzero one is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    field: Field,
    coords: Vec<u32>,
}

impl ProjectivePoint {
    pub fn new(field: &Field, coords: Vec<u32>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch("a projective point needs at least 2 coordinates".into()));
        }
        if coords.iter().any(|&c| c >= field.order()) {
            return Err(Error::Precondition(format!("coordinate out of range for GF({})", field.order())));
        }
        let lead = coords
            .iter()
            .find(|&&c| c != 0)
            .copied()
            .ok_or_else(|| Error::Precondition("the zero vector is not a projective point".into()))?;
        let inv = field.inv(lead).expect("nonzero");
        Ok(Self { field: field.clone(), coords: coords.into_iter().map(|c| field.mul(c, inv)).collect() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// The `n` of `PG(n, q)`.
    pub fn dimension(&self) -> usize {
        self.coords.len() - 1
    }

    /// Parses `(c0:c1:...:cn)`; brackets and commas are accepted too.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t);
        let sep = if body.contains(':') { ':' } else { ',' };
        let coords = body.split(sep).map(|c| field.parse(c)).collect::<Result<Vec<_>>>()?;
        Self::new(field, coords)
    }
}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|&c| self.field.format(c)).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Every point of `PG(n, q)`, in lexicographic order of normalized coordinates.
pub fn all_points(field: &Field, n: usize) -> Vec<ProjectivePoint> {
    let q = field.order();
    let mut out = Vec::new();
    for lead in 0..=n {
        let free = n - lead;
        let count = (q as u64).pow(free as u32);
        for idx in 0..count {
            let mut coords = vec![0; n + 1];
            coords[lead] = 1;
            let mut rest = idx;
            for c in coords.iter_mut().skip(lead + 1).rev() {
                *c = (rest % q as u64) as u32;
                rest /= q as u64;
            }
            out.push(ProjectivePoint { field: field.clone(), coords });
        }
    }
    out.sort();
    out
}

/// The points `(1, t, t^2, ..., t^n)` for `t` in the field, in raw-value order,
/// followed by `(0, ..., 0, 1)`.
pub fn nrc_points(field: &Field, n: usize) -> Result<Vec<ProjectivePoint>> {
    if n == 0 {
        return Err(Error::Precondition("the rational normal curve needs n >= 1".into()));
    }
    let mut out: Vec<ProjectivePoint> = field
        .values()
        .map(|t| ProjectivePoint { field: field.clone(), coords: (0..=n).map(|i| field.pow(t, i as u64)).collect() })
        .collect();
    let mut inf = vec![0; n + 1];
    inf[n] = 1;
    out.push(ProjectivePoint { field: field.clone(), coords: inf });
    Ok(out)
}

/// `[x, y] ↦ [x^d, x^{d-1} y, ..., y^d]`.
pub fn veronese_map(point: &ProjectivePoint, d: usize) -> Result<ProjectivePoint> {
    if point.coords.len() != 2 {
        return Err(Error::DimensionMismatch(format!("{point} is not a point of the projective line")));
    }
    if d == 0 {
        return Err(Error::Precondition("Veronese degree must be positive".into()));
    }
    let f = &point.field;
    let (x, y) = (point.coords[0], point.coords[1]);
    let coords = (0..=d).map(|i| f.mul(f.pow(x, (d - i) as u64), f.pow(y, i as u64))).collect();
    ProjectivePoint::new(f, coords)
}

fn common_dimension(points: &[ProjectivePoint]) -> Result<Option<usize>> {
    let Some(first) = points.first() else { return Ok(None) };
    if points.iter().any(|p| p.field != first.field) {
        return Err(Error::FieldMismatch);
    }
    if points.iter().any(|p| p.dimension() != first.dimension()) {
        return Err(Error::DimensionMismatch("points live in different projective spaces".into()));
    }
    Ok(Some(first.dimension()))
}

/// True when every `min(n + 1, k)` of the `k` points are linearly independent.
pub fn is_k_arc(points: &[ProjectivePoint]) -> Result<bool> {
    let Some(n) = common_dimension(points)? else { return Ok(true) };
    let field = points[0].field.clone();
    let s = (n + 1).min(points.len());
    let mut independent = true;
    for_each_subset(points.len(), s, &mut |idx| {
        let rows: Vec<Vec<u32>> = idx.iter().map(|&i| points[i].coords.clone()).collect();
        if linalg::rank(&field, &rows) < s {
            independent = false;
        }
        independent
    });
    Ok(independent)
}

/// Calls `visit` on each `k`-subset of `0..n` in lexicographic order until it returns false.
pub(crate) fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The largest number of the given points on one line of `PG(2, q)`.
pub fn max_collinear(points: &[ProjectivePoint]) -> Result<usize> {
    let Some(n) = common_dimension(points)? else { return Ok(0) };
    if n != 2 {
        return Err(Error::DimensionMismatch(format!("max_collinear needs points of PG(2, q), got PG({n}, q)")));
    }
    let field = &points[0].field;
    let distinct: BTreeSet<&ProjectivePoint> = points.iter().collect();
    let best = all_points(field, 2)
        .iter()
        .map(|line| {
            distinct
                .iter()
                .filter(|p| {
                    p.coords.iter().zip(&line.coords).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b))) == 0
                })
                .count()
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollineationCheck {
    /// `diag(1, a, a^2, ...)` or `reversal`.
    pub collineation: String,
    pub preserved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollineationReport {
    pub n: usize,
    pub q: u32,
    pub checks: Vec<CollineationCheck>,
}

impl CollineationReport {
    pub fn all_preserved(&self) -> bool {
        self.checks.iter().all(|c| c.preserved)
    }
}

/// Applies `x_i ↦ a^i x_i` for every nonzero `a`, and the coordinate reversal,
/// to the rational normal curve and records whether its point set is preserved.
pub fn collineation_invariance_check(field: &Field, n: usize) -> Result<CollineationReport> {
    let curve = nrc_points(field, n)?;
    let original: BTreeSet<ProjectivePoint> = curve.iter().cloned().collect();
    let image_of = |map: &dyn Fn(&[u32]) -> Vec<u32>| -> Result<BTreeSet<ProjectivePoint>> {
        curve.iter().map(|p| ProjectivePoint::new(field, map(&p.coords))).collect()
    };
    let mut checks = Vec::new();
    for a in field.values().skip(1) {
        let image = image_of(&|c: &[u32]| {
            c.iter().enumerate().map(|(i, &x)| field.mul(field.pow(a, i as u64), x)).collect()
        })?;
        checks.push(CollineationCheck {
            collineation: format!("diag(a^i) with a = {}", field.format(a)),
            preserved: image == original,
        });
    }
    let image = image_of(&|c: &[u32]| c.iter().rev().copied().collect())?;
    checks.push(CollineationCheck { collineation: "reversal".into(), preserved: image == original });
    Ok(CollineationReport { n, q: field.order(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    fn texts(ps: &[ProjectivePoint]) -> Vec<String> {
        ps.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn nrc_examples() {
        assert_eq!(texts(&nrc_points(&gf(2), 1).unwrap()), ["(1:0)", "(1:1)", "(0:1)"]);
        assert_eq!(texts(&nrc_points(&gf(3), 2).unwrap()), ["(1:0:0)", "(1:1:1)", "(1:2:1)", "(0:0:1)"]);
        for q in [4, 5, 7, 8, 9] {
            let pts = nrc_points(&gf(q), 3).unwrap();
            let set: BTreeSet<_> = pts.iter().collect();
            assert_eq!(set.len(), q as usize + 1);
        }
        assert!(nrc_points(&gf(3), 0).is_err());
    }

    #[test]
    fn veronese_examples() {
        let f5 = gf(5);
        let p = |c: Vec<u32>| ProjectivePoint::new(&f5, c).unwrap();
        assert_eq!(veronese_map(&p(vec![1, 0]), 3).unwrap().to_string(), "(1:0:0:0)");
        assert_eq!(veronese_map(&p(vec![1, 1]), 2).unwrap().to_string(), "(1:1:1)");
        assert_eq!(veronese_map(&p(vec![1, 2]), 2).unwrap().to_string(), "(1:2:4)");
        assert!(veronese_map(&p(vec![1, 2, 3]), 2).is_err());
    }

    #[test]
    fn arcs_and_lines() {
        let f = gf(7);
        assert!(is_k_arc(&nrc_points(&f, 3).unwrap()).unwrap());
        let f3 = gf(3);
        let p = |c: Vec<u32>| ProjectivePoint::new(&f3, c).unwrap();
        let repeated = vec![p(vec![1, 0, 0]), p(vec![2, 0, 0]), p(vec![0, 1, 0])];
        assert!(!is_k_arc(&repeated).unwrap());
        let collinear = vec![p(vec![1, 0, 0]), p(vec![0, 1, 0]), p(vec![1, 1, 0]), p(vec![0, 0, 1])];
        assert!(!is_k_arc(&collinear).unwrap());
        assert_eq!(max_collinear(&collinear).unwrap(), 3);
        assert_eq!(max_collinear(&collinear[..2]).unwrap(), 2);
        assert_eq!(max_collinear(&nrc_points(&gf(5), 2).unwrap()).unwrap(), 2);
        assert!(max_collinear(&nrc_points(&gf(5), 3).unwrap()).is_err());
        let mixed = vec![p(vec![1, 0]), p(vec![1, 0, 0])];
        assert!(is_k_arc(&mixed).is_err());
    }

    #[test]
    fn collineations() {
        for (q, n) in [(3, 2), (5, 3), (4, 2), (9, 4)] {
            assert!(collineation_invariance_check(&gf(q), n).unwrap().all_preserved());
        }
    }

    #[test]
    fn point_round_trip() {
        let f = gf(9);
        for p in all_points(&f, 2).into_iter().step_by(7) {
            assert_eq!(ProjectivePoint::parse(&f, &p.to_string()).unwrap(), p);
        }
        assert_eq!(all_points(&gf(3), 2).len(), 13);
        assert!(ProjectivePoint::parse(&f, "(0:0)").is_err());
    }
}
