//! Dense linear algebra over a finite field on raw element values.

use crate::error::{Error, Result};
use crate::field::Field;

pub type Matrix = Vec<Vec<u32>>;

/// Reduced row-echelon form with zero rows dropped, plus the pivot columns.
pub fn rref(field: &Field, rows: &[Vec<u32>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Vec<u32>]) -> usize {
    rref(field, rows).1.len()
}

/// Determinant of a square matrix by elimination.
pub fn determinant(field: &Field, rows: &[Vec<u32>]) -> u32 {
    let n = rows.len();
    let mut m: Matrix = rows.to_vec();
    let mut det = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| m[i][c] != 0) else { return 0 };
        if p != c {
            m.swap(p, c);
            det = field.neg(det);
        }
        det = field.mul(det, m[c][c]);
        let inv = field.inv(m[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if m[i][c] == 0 {
                continue;
            }
            let factor = field.mul(m[i][c], inv);
            let (top, bottom) = m.split_at_mut(i);
            for (x, &y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
    }
    det
}

pub fn mat_mul(field: &Field, a: &[Vec<u32>], b: &[Vec<u32>]) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(0, |acc, (&x, brow)| field.add(acc, field.mul(x, brow[j]))))
                .collect()
        })
        .collect()
}

/// Checks that every entry is a valid element and all rows have `cols` entries.
pub fn check_shape(field: &Field, m: &[Vec<u32>], cols: usize, what: &str) -> Result<()> {
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("{what}: every row needs {cols} entries")));
    }
    if m.iter().flatten().any(|&v| v >= field.order()) {
        return Err(Error::Precondition(format!("{what}: entry out of range for GF({})", field.order())));
    }
    Ok(())
}

/// Parses rows separated by newlines, `|` or `;`, entries separated by whitespace or `,`.
pub fn parse_matrix(field: &Field, s: &str) -> Result<Matrix> {
    s.split(['\n', '|', ';'])
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            line.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| field.parse(t))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

pub fn format_matrix(field: &Field, m: &[Vec<u32>]) -> String {
    m.iter()
        .map(|row| row.iter().map(|&v| field.format(v)).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}
