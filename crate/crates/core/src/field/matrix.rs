use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::{Field, Poly};

/// A rectangular matrix over `GF(q)[x]`, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(field: &Field, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("rows have different lengths".into()));
        }
        if rows.iter().flatten().any(|p| p.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let nrows = if cols == 0 { 0 } else { rows.len() };
        Ok(Self { field: field.clone(), rows: nrows, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, entries: vec![Poly::zero(field); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    pub fn diagonal(field: &Field, diag: &[Poly]) -> Self {
        let mut m = Self::zeros(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert!(p.field() == &self.field, "entry from a different field");
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.field);
                for l in 0..self.cols {
                    acc = &acc + &(self.get(i, l) * other.get(l, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(&self.field));
        }
        let mut a = self.to_rows();
        let mut prev = Poly::one(&self.field);
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(Poly::zero(&self.field)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    /// A square matrix whose determinant is a nonzero constant.
    pub fn is_unimodular(&self) -> bool {
        self.determinant().map(|d| d.is_unit()).unwrap_or(false)
    }

    /// Parses rows separated by newlines or `|`, entries separated by `;`.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let rows = s
            .split(['\n', '|'])
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| line.split(';').map(|e| Poly::parse(field, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, rows)
    }

    /// One row per line, entries separated by `"; "`.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix[{}x{} over {}]\n{}", self.rows, self.cols, self.field, self.to_text())
    }
}

/// Serialized as a list of rows of polynomial strings.
impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        rows.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f = Field::prime(2).unwrap();
        let m = PolyMatrix::parse(&f, "x; 1\n0; x").unwrap();
        assert_eq!(m.to_text(), "x; 1\n0; x");
        assert_eq!(PolyMatrix::parse(&f, "x; 1 | 0; x").unwrap(), m);
        assert!(PolyMatrix::parse(&f, "x; 1\n0").is_err());
    }

    #[test]
    fn determinant_matches_cofactor() {
        let f = Field::prime(3).unwrap();
        let m = PolyMatrix::parse(&f, "0; x; 1\nx; 1; 0\n1; 0; x^2").unwrap();
        // cofactor expansion: 0 - x(x^3) + 1(0 - 1) = -x^4 - 1
        assert_eq!(m.determinant().unwrap(), Poly::parse(&f, "2 + 2*x^4").unwrap());
        let singular = PolyMatrix::parse(&f, "x; x\nx; x").unwrap();
        assert!(singular.determinant().unwrap().is_zero());
        assert!(PolyMatrix::zeros(&f, 2, 3).determinant().is_err());
    }

    #[test]
    fn product_shapes() {
        let f = Field::prime(5).unwrap();
        let a = PolyMatrix::parse(&f, "x; 1").unwrap();
        let b = PolyMatrix::parse(&f, "1\nx").unwrap();
        assert_eq!(a.mul(&b).unwrap().to_text(), "2*x");
        assert!(a.mul(&a).is_err());
        assert_eq!(b.transpose(), PolyMatrix::parse(&f, "1; x").unwrap());
    }
}
