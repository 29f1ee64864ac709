use serde::Serialize;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

use super::{Field, Poly, PolyMatrix};

/// `U · A · V = diag(factors)` with `U`, `V` unimodular.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    /// Monic invariant factors `d_1 | d_2 | ...`, zeros last.
    pub factors: Vec<Poly>,
    pub left: PolyMatrix,
    pub right: PolyMatrix,
}

impl SmithForm {
    /// The rectangular diagonal matrix `U · A · V`.
    pub fn diagonal_matrix(&self) -> PolyMatrix {
        let field = self.left.field();
        let mut d = PolyMatrix::zeros(field, self.left.nrows(), self.right.ncols());
        for (i, f) in self.factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }
}

struct Work {
    field: Field,
    a: Vec<Vec<Poly>>,
    u: Vec<Vec<Poly>>,
    v: Vec<Vec<Poly>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// `row_dst -= c · row_src`
    fn row_axpy(&mut self, dst: usize, src: usize, c: &Poly) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m[dst].len() {
                let t = &m[dst][j] - &(c * &m[src][j]);
                m[dst][j] = t;
            }
        }
    }

    /// `col_dst -= c · col_src`
    fn col_axpy(&mut self, dst: usize, src: usize, c: &Poly) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let t = &row[dst] - &(c * &row[src]);
                row[dst] = t;
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: u32) {
        for m in [&mut self.a, &mut self.u] {
            for p in m[i].iter_mut() {
                *p = p.scale(c);
            }
        }
    }

    /// Position of a nonzero entry of least degree in the block `[t.., t..]`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in self.a.iter().enumerate().skip(t) {
            for (j, p) in row.iter().enumerate().skip(t) {
                if let Some(d) = p.degree() {
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clears row and column `t` by division; false when a nonzero remainder was left behind.
    fn clear(&mut self, t: usize) -> bool {
        let mut clean = true;
        let pivot = self.a[t][t].clone();
        for i in t + 1..self.a.len() {
            if self.a[i][t].is_zero() {
                continue;
            }
            let (q, r) = self.a[i][t].div_rem(&pivot).expect("nonzero pivot");
            self.row_axpy(i, t, &q);
            clean &= r.is_zero();
        }
        for j in t + 1..self.a[t].len() {
            if self.a[t][j].is_zero() {
                continue;
            }
            let (q, r) = self.a[t][j].div_rem(&pivot).expect("nonzero pivot");
            self.col_axpy(j, t, &q);
            clean &= r.is_zero();
        }
        clean
    }
}

/// Smith normal form over `GF(q)[x]` by pivoting on entries of least degree.
pub fn smith_normal_form(a: &PolyMatrix) -> SmithForm {
    let field = a.field().clone();
    let (m, n) = (a.nrows(), a.ncols());
    let mut w = Work {
        field: field.clone(),
        a: a.to_rows(),
        u: PolyMatrix::identity(&field, m).to_rows(),
        v: PolyMatrix::identity(&field, n).to_rows(),
    };
    let steps = m.min(n);
    let mut factors = Vec::with_capacity(steps);
    for t in 0..steps {
        while let Some((i, j)) = w.min_pivot(t) {
            w.swap_rows(t, i);
            w.swap_cols(t, j);
            if !w.clear(t) {
                continue;
            }
            let pivot = w.a[t][t].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !pivot.divides(&w.a[i][j])));
            match offender {
                Some(i) => {
                    let one = Poly::constant(&w.field, w.field.neg(1));
                    w.row_axpy(t, i, &one);
                }
                None => break,
            }
        }
        let lc = w.a[t][t].leading_coeff();
        if let Some(inv) = w.field.inv(lc) {
            w.scale_row(t, inv);
        }
        factors.push(w.a[t][t].clone());
    }
    let left = PolyMatrix::new(&field, w.u).expect("consistent shape");
    let right = PolyMatrix::new(&field, w.v).expect("consistent shape");
    SmithForm { factors, left, right }
}

/// `ord_x` of each invariant factor of a nonsingular square matrix, as a partition.
pub fn invariant_factor_partition(a: &PolyMatrix) -> Result<Partition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", a.nrows(), a.ncols())));
    }
    let snf = smith_normal_form(a);
    let mut parts = Vec::with_capacity(snf.factors.len());
    for d in &snf.factors {
        parts.push(d.valuation().ok_or(Error::Singular)?);
    }
    Ok(Partition::from_unsorted(parts))
}

/// `d_1, d_1 d_2, d_1 d_2 d_3, ...`: the gcds of the `i × i` minors implied by the invariant factors.
pub fn determinantal_divisors_from_factors(factors: &[Poly]) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::with_capacity(factors.len());
    for f in factors {
        let next = match out.last() {
            Some(prev) => prev * f,
            None => f.clone(),
        };
        out.push(next);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornInstance {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub product: PolyMatrix,
}

/// Invariant-factor partitions of `A`, `B` and `C = A · B`.
pub fn horn_instance(a: &PolyMatrix, b: &PolyMatrix) -> Result<HornInstance> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if !a.is_square() || !b.is_square() || a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "need square matrices of equal size, got {}x{} and {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    let alpha = invariant_factor_partition(a)?;
    let beta = invariant_factor_partition(b)?;
    let product = a.mul(b)?;
    let gamma = invariant_factor_partition(&product)?;
    Ok(HornInstance { alpha, beta, gamma, product })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn mat(f: &Field, s: &str) -> PolyMatrix {
        PolyMatrix::parse(f, s).unwrap()
    }

    fn factor_strings(m: &PolyMatrix) -> Vec<String> {
        smith_normal_form(m).factors.iter().map(ToString::to_string).collect()
    }

    fn check(m: &PolyMatrix) {
        let snf = smith_normal_form(m);
        let d = snf.left.mul(m).unwrap().mul(&snf.right).unwrap();
        assert_eq!(d, snf.diagonal_matrix());
        assert!(snf.left.is_unimodular());
        assert!(snf.right.is_unimodular());
        for w in snf.factors.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
    }

    #[test]
    fn examples() {
        let f = field(2);
        assert_eq!(factor_strings(&PolyMatrix::identity(&f, 3)), ["1", "1", "1"]);
        assert_eq!(factor_strings(&mat(&f, "x^2; 0\n0; x")), ["x", "x^2"]);
        assert_eq!(factor_strings(&mat(&f, "x; 1\n0; x")), ["1", "x^2"]);
        for s in ["x^2; 0\n0; x", "x; 1\n0; x", "x; x^2; 1\n1 + x; 0; x\n0; x; x"] {
            check(&mat(&f, s));
        }
    }

    #[test]
    fn rank_deficient_and_rectangular() {
        let f = field(3);
        let m = mat(&f, "x; 2*x\nx^2; 2*x^2");
        assert_eq!(factor_strings(&m), ["x", "0"]);
        check(&m);
        let r = mat(&f, "x; x + 1; 2");
        assert_eq!(factor_strings(&r), ["1"]);
        check(&r);
        let empty = PolyMatrix::zeros(&f, 0, 0);
        assert!(smith_normal_form(&empty).factors.is_empty());
    }

    #[test]
    fn partitions() {
        let f = field(3);
        assert_eq!(invariant_factor_partition(&PolyMatrix::identity(&f, 2)).unwrap(), Partition::empty());
        assert_eq!(invariant_factor_partition(&mat(&f, "x^2; 0\n0; x")).unwrap().to_string(), "2,1");
        assert_eq!(invariant_factor_partition(&mat(&f, "x; 0\n0; x")).unwrap().to_string(), "1,1");
        assert_eq!(invariant_factor_partition(&mat(&f, "x; x\nx; x")), Err(Error::Singular));
        assert!(invariant_factor_partition(&mat(&f, "x; 1")).is_err());
    }

    #[test]
    fn horn_instances() {
        let f = field(2);
        let id = PolyMatrix::identity(&f, 2);
        let h = horn_instance(&id, &id).unwrap();
        assert!(h.alpha.is_empty() && h.beta.is_empty() && h.gamma.is_empty());
        let h = horn_instance(&mat(&f, "x; 0\n0; 1"), &mat(&f, "1; 0\n0; x")).unwrap();
        assert_eq!((h.alpha.to_string(), h.beta.to_string(), h.gamma.to_string()), ("1".into(), "1".into(), "1,1".into()));
        let h = horn_instance(&mat(&f, "x^2; 0\n0; x"), &mat(&f, "x; 0\n0; 1")).unwrap();
        assert_eq!(h.gamma.size(), 4);
        assert_eq!(h.gamma.to_string(), "3,1");
        assert!(horn_instance(&id, &PolyMatrix::identity(&f, 3)).is_err());
        assert!(horn_instance(&id, &PolyMatrix::identity(&field(3), 2)).is_err());
    }

    #[test]
    fn determinantal_divisors() {
        let f = field(5);
        let factors = smith_normal_form(&mat(&f, "x^2; 0\n0; x")).factors;
        let dd = determinantal_divisors_from_factors(&factors);
        assert_eq!(dd.iter().map(ToString::to_string).collect::<Vec<_>>(), ["x", "x^3"]);
    }
}
