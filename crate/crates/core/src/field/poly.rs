use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::{text, Field, FieldElement};

/// A univariate polynomial over a finite field, ascending coefficients with no
/// trailing zeros. The zero polynomial has degree `None` (i.e. `-∞`).
///
/// The arithmetic operators panic when the operands live in different fields;
/// the public entry points that combine user-supplied values check this first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds a polynomial from raw ascending coefficients, trimming trailing zeros.
    pub fn new(field: &Field, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.order();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    pub fn from_elements(field: &Field, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::new(field, coeffs.iter().map(FieldElement::value).collect()))
    }

    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &Field) -> Self {
        Self::monomial(field, 1, 1)
    }

    /// `c x^d`.
    pub fn monomial(field: &Field, c: u32, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self::new(field, coeffs)
    }

    /// `x - a`.
    pub fn linear_root(field: &Field, a: u32) -> Self {
        Self::new(field, vec![field.neg(a), 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Raw coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// A nonzero constant, i.e. a unit of the polynomial ring.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    /// `ord_x`, the largest power of `x` dividing the polynomial; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading_coeff()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(&self.field), |acc, &c| {
            &(&acc * inner) + &Self::constant(&self.field, c)
        })
    }

    /// Coefficients of `x^d · self(1/x)` for `d >= deg self`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c;
        }
        Self::new(&self.field, coeffs)
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if self.field != divisor.field {
            return Err(Error::FieldMismatch);
        }
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let lead_inv = f.inv(divisor.leading_coeff()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let q = f.mul(c, lead_inv);
            quot[top - dd] = q;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(q, dc));
            }
        }
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// True when `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s·self + t·other` and `g` monic (or zero).
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match f.inv(r0.leading_coeff()) {
            Some(inv) => (r0.scale(inv), s0.scale(inv), t0.scale(inv)),
            None => (r0, s0, t0),
        }
    }

    /// Roots in the base field, with multiplicity, found by repeated division by `x - a`.
    pub fn roots_with_multiplicity(&self) -> Vec<(u32, usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut rest = self.clone();
        for a in self.field.values() {
            let lin = Self::linear_root(&self.field, a);
            let mut m = 0;
            while let Some(q) = rest.exact_div(&lin) {
                rest = q;
                m += 1;
            }
            if m > 0 {
                out.push((a, m));
            }
        }
        out
    }

    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        Ok(Self::new(field, text::parse_poly(field, s)?))
    }

    fn assert_same_field(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.assert_same_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_same_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_same_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly_with(&self.coeffs, |c| self.field.format(c)))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {})", self.field)
    }
}

impl Serialize for Poly {
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

    fn poly(f: &Field, s: &str) -> Poly {
        Poly::parse(f, s).unwrap()
    }

    #[test]
    fn divmod_examples() {
        let f = gf(3);
        let g = poly(&f, "1 + x^2");
        assert_eq!(g.div_rem(&g).unwrap(), (Poly::one(&f), Poly::zero(&f)));
        let (q, r) = g.div_rem(&Poly::x(&f)).unwrap();
        assert_eq!((q.to_string(), r.to_string()), ("x".to_string(), "1".to_string()));
        let small = poly(&f, "x");
        assert_eq!(small.div_rem(&g).unwrap(), (Poly::zero(&f), small.clone()));
        assert_eq!(g.div_rem(&Poly::zero(&f)), Err(Error::DivisionByZero));
        assert_eq!(g.div_rem(&Poly::one(&gf(5))), Err(Error::FieldMismatch));
    }

    #[test]
    fn degree_and_valuation() {
        let f = gf(5);
        assert_eq!(Poly::zero(&f).degree(), None);
        assert!(Poly::zero(&f).degree() < Some(0));
        assert_eq!(poly(&f, "3*x^2 + x^4").valuation(), Some(2));
        assert_eq!(poly(&f, "3*x^2 + x^4").degree(), Some(4));
    }

    #[test]
    fn gcd_and_xgcd() {
        let f = gf(7);
        let a = &poly(&f, "x + 1") * &poly(&f, "x^2 + 1");
        let b = &poly(&f, "x + 1") * &poly(&f, "x + 5");
        assert_eq!(a.gcd(&b), poly(&f, "1 + x"));
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, poly(&f, "1 + x"));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(Poly::zero(&f).gcd(&Poly::zero(&f)).is_zero());
    }

    #[test]
    fn compose_and_reverse() {
        let f = gf(5);
        let p = poly(&f, "x^2");
        assert_eq!(p.compose(&poly(&f, "1 + x")), poly(&f, "1 + 2*x + x^2"));
        assert_eq!(poly(&f, "1 + 2*x").reversed(3), poly(&f, "2*x^2 + x^3"));
    }

    #[test]
    fn roots() {
        let f = gf(5);
        let p = &(&poly(&f, "x + 4") * &poly(&f, "x + 4")) * &poly(&f, "x^2 + 2");
        assert_eq!(p.roots_with_multiplicity(), vec![(1, 2)]);
    }

    #[test]
    fn display_round_trip() {
        let f = gf(9);
        let p = Poly::new(&f, vec![0, f.generator(), 1, 0, 2]);
        let s = p.to_string();
        assert_eq!(s, "a*x + x^2 + 2*x^4");
        assert_eq!(Poly::parse(&f, &s).unwrap(), p);
        assert_eq!(Poly::zero(&f).to_string(), "0");
    }
}
