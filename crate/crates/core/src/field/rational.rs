use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::{Field, Poly};

/// A point of the projective line over a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Point {
    /// A finite point, as a raw field value.
    Finite(u32),
    Infinity,
}

impl P1Point {
    /// All `q + 1` points: the finite ones in raw-value order, then infinity.
    pub fn all(field: &Field) -> Vec<P1Point> {
        field.values().map(P1Point::Finite).chain(std::iter::once(P1Point::Infinity)).collect()
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, P1Point::Infinity)
    }

    /// `"inf"` or the element text format.
    pub fn format(self, field: &Field) -> String {
        match self {
            P1Point::Finite(v) => field.format(v),
            P1Point::Infinity => "inf".to_string(),
        }
    }

    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(P1Point::Infinity)
        } else {
            field.parse(t).map(P1Point::Finite)
        }
    }
}

/// `f / g` in lowest terms with `g` monic. The zero function is `0 / 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(num));
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.field().inv(den.leading_coeff()).expect("nonzero");
        Ok(Self { num: num.scale(lc), den: den.scale(lc) })
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.field());
        Self { num: p, den }
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `max(deg f, deg g)`; constants (including zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// The value at a point of `P^1`, possibly infinity.
    pub fn evaluate(&self, at: P1Point) -> P1Point {
        let f = self.field();
        match at {
            P1Point::Finite(a) => {
                let d = self.den.eval(a);
                match f.div(self.num.eval(a), d) {
                    Some(v) => P1Point::Finite(v),
                    None => P1Point::Infinity,
                }
            }
            P1Point::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree().expect("nonzero denominator");
                match dn {
                    None => P1Point::Finite(0),
                    Some(n) if n > dd => P1Point::Infinity,
                    Some(n) if n < dd => P1Point::Finite(0),
                    Some(_) => P1Point::Finite(
                        f.div(self.num.leading_coeff(), self.den.leading_coeff()).expect("nonzero"),
                    ),
                }
            }
        }
    }

    /// The value at a finite point, rejecting poles.
    pub fn evaluate_finite(&self, a: u32) -> Result<u32> {
        match self.evaluate(P1Point::Finite(a)) {
            P1Point::Finite(v) => Ok(v),
            P1Point::Infinity => Err(Error::Pole(format!("{}: {self}", self.field().format(a)))),
        }
    }

    /// `ord_P(f)` at a point of `P^1`: positive for zeros, negative for poles.
    /// Returns `None` for the zero function.
    pub fn order_at(&self, at: P1Point) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        match at {
            P1Point::Finite(a) => {
                let lin = Poly::linear_root(self.field(), a);
                Some(multiplicity(&self.num, &lin) as i64 - multiplicity(&self.den, &lin) as i64)
            }
            P1Point::Infinity => {
                Some(self.den.degree().unwrap_or(0) as i64 - self.num.degree().unwrap_or(0) as i64)
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Self::new(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Self::new(&(&self.num * &other.den) - &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Parses `f`, `f/g`, or `(f)/(g)`.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' | '{' => depth += 1,
                ')' | '}' => depth -= 1,
                '/' if depth == 0 => {
                    if split.is_some() {
                        return Err(Error::Parse(format!("more than one '/' in {s:?}")));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        match split {
            None => Ok(Self::from_poly(Poly::parse(field, strip_parens(s))?)),
            Some(i) => {
                let num = Poly::parse(field, strip_parens(&s[..i]))?;
                let den = Poly::parse(field, strip_parens(&s[i + 1..]))?;
                Self::new(num, den)
            }
        }
    }
}

fn multiplicity(p: &Poly, lin: &Poly) -> usize {
    let mut rest = p.clone();
    let mut m = 0;
    while let Some(q) = rest.exact_div(lin) {
        rest = q;
        m += 1;
    }
    m
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        // only strip when the parens enclose the whole expression
        let mut depth = 0i32;
        for (i, ch) in t.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i != t.len() - 1 {
                        return t;
                    }
                }
                _ => {}
            }
        }
        return &t[1..t.len() - 1];
    }
    t
}

/// `f` when the denominator is 1, otherwise `(f)/(g)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    #[test]
    fn lowest_terms() {
        let f = gf(5);
        let r = RationalFunction::parse(&f, "(x^2 + 4)/(2*x + 2)").unwrap();
        // (x-1)(x+1) / 2(x+1) = (3x + 2) / 1
        assert!(r.is_polynomial());
        assert_eq!(r.to_string(), "2 + 3*x");
        assert!(RationalFunction::parse(&f, "x/0").is_err());
    }

    #[test]
    fn evaluation() {
        let f = gf(3);
        let r = RationalFunction::parse(&f, "x/(x + 1)").unwrap();
        assert_eq!(r.evaluate(P1Point::Finite(0)), P1Point::Finite(0));
        assert_eq!(r.evaluate(P1Point::Finite(1)), P1Point::Finite(2));
        assert_eq!(r.evaluate(P1Point::Finite(2)), P1Point::Infinity);
        assert_eq!(r.evaluate(P1Point::Infinity), P1Point::Finite(1));
        assert!(r.evaluate_finite(2).is_err());
    }

    #[test]
    fn orders() {
        let f = gf(5);
        let r = RationalFunction::parse(&f, "x^2/(x + 4)").unwrap();
        assert_eq!(r.order_at(P1Point::Finite(0)), Some(2));
        assert_eq!(r.order_at(P1Point::Finite(1)), Some(-1));
        assert_eq!(r.order_at(P1Point::Infinity), Some(-1));
    }

    #[test]
    fn round_trip() {
        let f = gf(9);
        let r = RationalFunction::parse(&f, "(a*x + 1)/(x^2 + a^3)").unwrap();
        assert_eq!(RationalFunction::parse(&f, &r.to_string()).unwrap(), r);
        assert_eq!(P1Point::parse(&f, "inf").unwrap(), P1Point::Infinity);
        assert_eq!(P1Point::parse(&f, &P1Point::Finite(5).format(&f)).unwrap(), P1Point::Finite(5));
    }

    #[test]
    fn arithmetic() {
        let f = gf(7);
        let a = RationalFunction::parse(&f, "1/x").unwrap();
        let b = RationalFunction::parse(&f, "1/(x + 1)").unwrap();
        let s = a.checked_add(&b).unwrap();
        assert_eq!(s, RationalFunction::parse(&f, "(2*x + 1)/(x^2 + x)").unwrap());
        assert_eq!(s.checked_sub(&b).unwrap(), a);
        assert_eq!(a.checked_mul(&a.recip().unwrap()).unwrap(), RationalFunction::parse(&f, "1").unwrap());
        assert!(RationalFunction::parse(&f, "0").unwrap().recip().is_err());
    }
}
