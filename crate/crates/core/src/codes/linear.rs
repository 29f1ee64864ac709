use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, P1Point, RationalFunction};

use super::divisor::{riemann_roch_basis, Divisor};
use super::linalg::{self, Matrix};

/// Default cap on the number of messages `q^k` enumerated by [`min_distance`].
pub const DEFAULT_EXHAUSTION_BOUND: u128 = 1_000_000;

/// A linear code given by a generator matrix (rows need not be independent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    length: usize,
    generator: Matrix,
}

impl LinearCode {
    pub fn new(field: &Field, length: usize, generator: Matrix) -> Result<Self> {
        linalg::check_shape(field, &generator, length, "generator matrix")?;
        Ok(Self { field: field.clone(), length, generator })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// The rank of the generator matrix.
    pub fn dimension(&self) -> usize {
        linalg::rank(&self.field, &self.generator)
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// A generator matrix with independent rows (reduced row-echelon form).
    pub fn basis(&self) -> Matrix {
        linalg::rref(&self.field, &self.generator).0
    }

    /// Header `n k d q` (with `?` when `d` is unknown) followed by the generator rows.
    pub fn to_text(&self, d: Option<usize>) -> String {
        let d = d.map_or_else(|| "?".to_string(), |d| d.to_string());
        let mut out = format!("{} {} {} {}", self.length, self.dimension(), d, self.field.order());
        for row in &self.generator {
            out.push('\n');
            out.push_str(&row.iter().map(|&v| self.field.format(v)).collect::<Vec<_>>().join(" "));
        }
        out
    }

    /// Parses the [`LinearCode::to_text`] format; the header's `k` and `d` are not trusted.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::Parse(format!("code header must be \"n k d q\", got {header:?}")));
        }
        let n: usize = fields[0].parse().map_err(|_| Error::Parse(format!("bad length in {header:?}")))?;
        let q: u32 = fields[3].parse().map_err(|_| Error::Parse(format!("bad field order in {header:?}")))?;
        if q != field.order() {
            return Err(Error::FieldMismatch);
        }
        let rows = lines
            .map(|l| l.split_whitespace().map(|t| field.parse(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Matrix>>()?;
        Self::new(field, n, rows)
    }
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            k: usize,
            q: u32,
            field: String,
            generator: Vec<Vec<String>>,
        }
        Repr {
            n: self.length,
            k: self.dimension(),
            q: self.field.order(),
            field: self.field.to_string(),
            generator: self.generator.iter().map(|r| r.iter().map(|&v| self.field.format(v)).collect()).collect(),
        }
        .serialize(serializer)
    }
}

/// Minimum Hamming weight over all nonzero codewords, by enumerating the
/// `q^k` messages of an echelon basis.
pub fn min_distance(code: &LinearCode, bound: u128) -> Result<usize> {
    let basis = code.basis();
    let k = basis.len();
    if k == 0 {
        return Err(Error::Precondition("the zero code has no minimum distance".into()));
    }
    let field = &code.field;
    let q = field.order() as usize;
    let needed = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if needed > bound {
        return Err(Error::ExhaustionBound { needed, bound });
    }
    let n = code.length;
    // multiples[i][c] = c · basis[i]
    let multiples: Vec<Vec<Vec<u32>>> = basis
        .iter()
        .map(|row| (0..q as u32).map(|c| row.iter().map(|&x| field.mul(c, x)).collect()).collect())
        .collect();
    let mut message = vec![0usize; k];
    let mut word = vec![0u32; n];
    let mut best = n;
    while let Some(i) = (0..k).find(|&i| message[i] + 1 < q) {
        for (j, m) in message.iter_mut().enumerate().take(i) {
            for (w, &x) in word.iter_mut().zip(&multiples[j][*m]) {
                *w = field.sub(*w, x);
            }
            *m = 0;
        }
        for (w, (&old, &new)) in word.iter_mut().zip(multiples[i][message[i]].iter().zip(&multiples[i][message[i] + 1])) {
            *w = field.add(field.sub(*w, old), new);
        }
        message[i] += 1;
        let weight = word.iter().filter(|&&x| x != 0).count();
        best = best.min(weight);
    }
    Ok(best)
}

fn check_points(d: &Divisor, points: &[P1Point]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &p in points {
        if !seen.insert(p) {
            return Err(Error::Precondition(format!("evaluation point {} repeated", p.format(d.field()))));
        }
        if d.multiplicity(p) != 0 {
            return Err(Error::Precondition(format!(
                "evaluation point {} lies in the support of {d}",
                p.format(d.field())
            )));
        }
        if let P1Point::Finite(v) = p {
            if v >= d.field().order() {
                return Err(Error::Precondition(format!("point {v} out of range")));
            }
        }
    }
    Ok(())
}

/// The code `{ (f(P_1), ..., f(P_n)) : f ∈ L(D) }`, one generator row per basis function.
pub fn evaluation_code(d: &Divisor, points: &[P1Point]) -> Result<LinearCode> {
    check_points(d, points)?;
    let rows = riemann_roch_basis(d)
        .iter()
        .map(|b| evaluate_all(b, points))
        .collect::<Result<Matrix>>()?;
    LinearCode::new(d.field(), points.len(), rows)
}

fn evaluate_all(phi: &RationalFunction, points: &[P1Point]) -> Result<Vec<u32>> {
    points
        .iter()
        .map(|&p| match phi.evaluate(p) {
            P1Point::Finite(v) => Ok(v),
            P1Point::Infinity => Err(Error::Pole(format!("{}: {phi}", p.format(phi.field())))),
        })
        .collect()
}

/// The evaluation vector `(φ(P_1), ..., φ(P_n))`, rejecting poles.
pub fn rational_map_code(phi: &RationalFunction, points: &[P1Point]) -> Result<Vec<u32>> {
    evaluate_all(phi, points)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreePointCode {
    pub divisor: Divisor,
    pub points: Vec<String>,
    pub code: LinearCode,
}

/// The evaluation code of `a·[0] + b·[1] + c·[∞]` over `GF(q^2)`, evaluated at
/// every field element other than 0 and 1. Requires `d | q^2 - 1`.
pub fn three_point_code(a: i64, b: i64, c: i64, d: u64, q: u64) -> Result<ThreePointCode> {
    let order = q.checked_mul(q).ok_or_else(|| Error::InvalidField(format!("{q}^2 overflows")))?;
    let field = Field::of_order(order)?;
    if d == 0 || (order - 1) % d != 0 {
        return Err(Error::Precondition(format!("d = {d} does not divide q^2 - 1 = {}", order - 1)));
    }
    let divisor = Divisor::new(&field, [(P1Point::Finite(0), a), (P1Point::Finite(1), b), (P1Point::Infinity, c)])?;
    let points: Vec<P1Point> = field.values().skip(2).map(P1Point::Finite).collect();
    if points.is_empty() {
        return Err(Error::Precondition("no evaluation points outside {0, 1, inf}".into()));
    }
    let code = evaluation_code(&divisor, &points)?;
    let points = points.iter().map(|p| p.format(&field)).collect();
    Ok(ThreePointCode { divisor, points, code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    fn finite(vs: &[u32]) -> Vec<P1Point> {
        vs.iter().map(|&v| P1Point::Finite(v)).collect()
    }

    #[test]
    fn reed_solomon_examples() {
        let f5 = gf(5);
        let c = evaluation_code(&Divisor::parse(&f5, "1*[inf]").unwrap(), &finite(&[0, 1, 2, 3])).unwrap();
        assert_eq!((c.length(), c.dimension()), (4, 2));
        assert_eq!(min_distance(&c, DEFAULT_EXHAUSTION_BOUND).unwrap(), 3);

        let f7 = gf(7);
        let all: Vec<P1Point> = f7.values().map(P1Point::Finite).collect();
        let c = evaluation_code(&Divisor::parse(&f7, "2*[inf]").unwrap(), &all).unwrap();
        assert_eq!((c.length(), c.dimension()), (7, 3));
        assert_eq!(min_distance(&c, DEFAULT_EXHAUSTION_BOUND).unwrap(), 5);

        let full = evaluation_code(&Divisor::parse(&f7, "3*[inf]").unwrap(), &finite(&[1, 2, 3, 4])).unwrap();
        assert_eq!((full.length(), full.dimension()), (4, 4));
    }

    #[test]
    fn repetition_code() {
        let f = gf(3);
        let c = LinearCode::new(&f, 5, vec![vec![1, 1, 1, 1, 1]]).unwrap();
        assert_eq!(min_distance(&c, 10).unwrap(), 5);
        let z = LinearCode::new(&f, 3, vec![]).unwrap();
        assert!(min_distance(&z, 10).is_err());
    }

    #[test]
    fn exhaustion_bound() {
        let f = gf(7);
        let all: Vec<P1Point> = f.values().map(P1Point::Finite).collect();
        let c = evaluation_code(&Divisor::parse(&f, "4*[inf]").unwrap(), &all).unwrap();
        assert_eq!(min_distance(&c, 100), Err(Error::ExhaustionBound { needed: 16807, bound: 100 }));
    }

    #[test]
    fn precondition_errors() {
        let f = gf(5);
        let d = Divisor::parse(&f, "1*[0] + 1*[inf]").unwrap();
        assert!(evaluation_code(&d, &finite(&[0, 1])).is_err());
        assert!(evaluation_code(&d, &finite(&[1, 1])).is_err());
        assert!(evaluation_code(&d, &[P1Point::Infinity]).is_err());
    }

    #[test]
    fn rational_maps() {
        let f = gf(3);
        let phi = RationalFunction::parse(&f, "x/(x + 1)").unwrap();
        assert_eq!(rational_map_code(&phi, &finite(&[0, 1])).unwrap(), vec![0, 2]);
        assert!(matches!(rational_map_code(&phi, &finite(&[2])), Err(Error::Pole(_))));
        let poly = RationalFunction::parse(&f, "x^2 + 1").unwrap();
        let d = Divisor::parse(&f, "2*[inf]").unwrap();
        let code = evaluation_code(&d, &finite(&[0, 1, 2])).unwrap();
        let expected: Vec<u32> = (0..3).map(|j| f.add(code.generator()[0][j], code.generator()[2][j])).collect();
        assert_eq!(rational_map_code(&poly, &finite(&[0, 1, 2])).unwrap(), expected);
    }

    #[test]
    fn three_point_examples() {
        let c = three_point_code(0, 0, 2, 3, 2).unwrap();
        assert_eq!((c.code.length(), c.code.dimension()), (2, 2));
        let c = three_point_code(0, 0, 2, 8, 3).unwrap();
        assert_eq!((c.code.length(), c.code.dimension()), (7, 3));
        assert_eq!(min_distance(&c.code, DEFAULT_EXHAUSTION_BOUND).unwrap(), 5);
        let c = three_point_code(0, 0, 0, 1, 3).unwrap();
        assert_eq!(c.code.dimension(), 1);
        assert_eq!(min_distance(&c.code, DEFAULT_EXHAUSTION_BOUND).unwrap(), 7);
        let c = three_point_code(-1, 0, 0, 1, 3).unwrap();
        assert_eq!(c.code.dimension(), 0);
        assert!(three_point_code(0, 0, 1, 5, 3).is_err());
        let c = three_point_code(1, 1, 1, 4, 3).unwrap();
        assert_eq!(c.code.dimension(), 4);
    }

    #[test]
    fn text_round_trip() {
        let f = gf(4);
        let all: Vec<P1Point> = f.values().map(P1Point::Finite).collect();
        let c = evaluation_code(&Divisor::parse(&f, "1*[inf]").unwrap(), &all).unwrap();
        let text = c.to_text(Some(3));
        assert!(text.starts_with("4 2 3 4\n"));
        assert_eq!(LinearCode::parse(&f, &text).unwrap(), c);
    }
}
