//! Exact arithmetic in `GF(p^k)` and in the polynomial and rational-function
//! rings over it, plus the polynomial-matrix machinery (Smith normal form,
//! invariant factors) used for the Horn product problem.
//!
//! Elements are stored as `u32` values encoding their power-basis coordinates
//! in base `p`: the element `c_0 + c_1 α + ... + c_{k-1} α^{k-1}` has value
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. [`Field`] performs arithmetic on these
//! raw values; [`FieldElement`] pairs a value with its field.

mod euclid;
mod local_degree;
mod matrix;
mod poly;
pub mod random;
mod rational;
mod smith;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use euclid::{continued_fraction, euclid_quotients, quotient_matrix};
pub use local_degree::local_degree;
pub use matrix::PolyMatrix;
pub use poly::Poly;
pub use rational::{P1Point, RationalFunction};
pub use smith::{
    determinantal_divisors_from_factors, horn_instance, invariant_factor_partition, smith_normal_form,
    HornInstance, SmithForm,
};

/// Largest prime accepted as a characteristic.
const MAX_CHARACTERISTIC: u32 = 1 << 16;
/// Largest field order accepted.
const MAX_ORDER: u64 = 1 << 24;
/// Extension fields up to this order get full multiplication tables.
const TABLE_ORDER: u32 = 256;
/// Discrete-log tables are built up to this order.
const LOG_ORDER: u32 = 1 << 16;

/// The data defining `GF(p^k)`.
#[derive(Debug)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    order: u32,
    /// Monic irreducible modulus over `GF(p)`, ascending coefficients, length
    /// `k + 1`. Empty for prime fields.
    modulus: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    inv_table: Option<Vec<u32>>,
    /// `exp[i] = α^i` when `α` generates the multiplicative group.
    exp: Option<Vec<u32>>,
    log: Option<Vec<u32>>,
}

/// A shared handle to a validated [`FieldSpec`]. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl Field {
    /// The prime field `GF(p)`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::extension(p, 1, None)
    }

    /// The field with `q` elements, using the default modulus when `q` is not prime.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::extension(p, k, None)
    }

    /// `GF(p^k)` with an explicit monic modulus (ascending coefficients), or the
    /// default modulus when `None`: the first monic irreducible polynomial, in
    /// order of its lower coefficients read as a base-`p` number, whose root
    /// generates the multiplicative group.
    pub fn extension(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !(2..=MAX_CHARACTERISTIC).contains(&p) || !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("characteristic {p} is not a supported prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let order = (p as u64).checked_pow(k).filter(|&q| q <= MAX_ORDER).ok_or_else(|| {
            Error::InvalidField(format!("{p}^{k} exceeds the supported field size {MAX_ORDER}"))
        })? as u32;
        if k == 1 {
            if let Some(m) = modulus.filter(|m| !m.is_empty()) {
                if m.len() != 2 || m[1] % p != 1 {
                    return Err(Error::InvalidField(format!("modulus {m:?} is not monic of degree 1")));
                }
            }
            return Ok(Self(Arc::new(FieldSpec {
                p,
                k,
                order,
                modulus: Vec::new(),
                mul_table: None,
                inv_table: None,
                exp: None,
                log: None,
            })));
        }
        match modulus {
            Some(m) => {
                let m: Vec<u32> = m.into_iter().map(|c| c % p).collect();
                if m.len() != k as usize + 1 || m[k as usize] != 1 {
                    return Err(Error::InvalidField(format!("modulus {m:?} is not monic of degree {k}")));
                }
                if !gfp::is_irreducible(&m, p) {
                    return Err(Error::InvalidField(format!("modulus {m:?} is reducible over GF({p})")));
                }
                Ok(Self::build(p, k, order, m))
            }
            None => {
                let candidates = (0..order as u64).map(|lower| {
                    let mut m = gfp::digits(lower, p, k as usize);
                    m.push(1);
                    m
                });
                for m in candidates {
                    if !gfp::is_irreducible(&m, p) {
                        continue;
                    }
                    let field = Self::build(p, k, order, m);
                    if field.0.exp.is_some() || order > LOG_ORDER {
                        return Ok(field);
                    }
                }
                Err(Error::InvalidField(format!("no primitive modulus found for GF({p}^{k})")))
            }
        }
    }

    fn build(p: u32, k: u32, order: u32, modulus: Vec<u32>) -> Self {
        let mut spec = FieldSpec {
            p,
            k,
            order,
            modulus,
            mul_table: None,
            inv_table: None,
            exp: None,
            log: None,
        };
        if order <= TABLE_ORDER {
            let q = order as usize;
            let mut table = vec![0; q * q];
            for a in 0..order {
                for b in a..order {
                    let v = spec.slow_mul(a, b);
                    table[a as usize * q + b as usize] = v;
                    table[b as usize * q + a as usize] = v;
                }
            }
            let mut inv = vec![0; q];
            for a in 1..q {
                inv[a] = (1..order).find(|&b| table[a * q + b as usize] == 1).expect("field has inverses");
            }
            spec.mul_table = Some(table);
            spec.inv_table = Some(inv);
        }
        if order <= LOG_ORDER {
            let alpha = p; // coordinates (0, 1, 0, ...)
            let mut exp = Vec::with_capacity(order as usize - 1);
            let mut cur = 1;
            loop {
                exp.push(cur);
                cur = spec.mul(cur, alpha);
                if cur == 1 || exp.len() >= order as usize - 1 {
                    break;
                }
            }
            if cur == 1 && exp.len() == order as usize - 1 {
                let mut log = vec![0; order as usize];
                for (i, &v) in exp.iter().enumerate() {
                    log[v as usize] = i as u32;
                }
                spec.exp = Some(exp);
                spec.log = Some(log);
            }
        }
        Self(Arc::new(spec))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    /// `q = p^k`.
    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// The modulus coefficients (ascending), empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Raw values of every element, `0..q`.
    pub fn values(&self) -> std::ops::Range<u32> {
        0..self.0.order
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.values().map(move |v| self.element(v))
    }

    /// Wraps a raw value, reducing it modulo `q`.
    pub fn element(&self, value: u32) -> FieldElement {
        FieldElement { field: self.clone(), value: value % self.0.order }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }

    /// The class `α` of `x` modulo the defining polynomial (1 for prime fields).
    pub fn generator(&self) -> u32 {
        if self.0.k == 1 {
            1
        } else {
            self.0.p
        }
    }

    /// Power-basis coordinates of a raw value.
    pub fn coordinates(&self, v: u32) -> Vec<u32> {
        gfp::digits(v as u64, self.0.p, self.0.k as usize)
    }

    pub fn from_coordinates(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() > self.0.k as usize {
            return Err(Error::Parse(format!(
                "{} coordinates given for a degree-{} field",
                coords.len(),
                self.0.k
            )));
        }
        Ok(coords.iter().rev().fold(0, |acc, &c| acc * self.0.p + c % self.0.p))
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.0.add(a, b)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.0.add(a, self.0.neg(b))
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg(a)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.0.mul(a, b)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        self.0.inv(a)
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        self.0.pow(a, e)
    }

    /// `a / b`, `None` when `b` is zero.
    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    /// The exponent `i` with `α^i = v`, when `α` is primitive and `v != 0`.
    pub fn log(&self, v: u32) -> Option<u32> {
        if v == 0 {
            return None;
        }
        self.0.log.as_ref().map(|l| l[v as usize])
    }

    /// True when the defining polynomial's root generates the multiplicative group.
    pub fn has_primitive_generator(&self) -> bool {
        self.0.exp.is_some()
    }

    /// Whether a raw value lies in the prime subfield.
    pub fn is_in_prime_subfield(&self, v: u32) -> bool {
        v < self.0.p
    }

    /// Renders a raw value in the element text format.
    pub fn format(&self, v: u32) -> String {
        text::format_element(self, v)
    }

    /// Parses an element: an integer (prime-subfield image), `a`, `a^i`, or
    /// power-basis coordinates `{c0,c1,...}`.
    pub fn parse(&self, s: &str) -> Result<u32> {
        text::parse_element(self, s)
    }
}

impl FieldSpec {
    fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if let Some(t) = &self.mul_table {
            return t[a as usize * self.order as usize + b as usize];
        }
        self.slow_mul(a, b)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let k = self.k as usize;
        let prod = gfp::mul(&gfp::digits(a as u64, self.p, k), &gfp::digits(b as u64, self.p, k), self.p);
        let rem = gfp::rem(&prod, &self.modulus, self.p);
        rem.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.inv_table {
            return Some(t[a as usize]);
        }
        Some(self.pow(a, self.order as u64 - 2))
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.0.p, self.0.k, &self.0.modulus).hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

/// `p` for prime fields, `p^k/<modulus>` otherwise.
impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "{}", self.0.p)
        } else {
            write!(f, "{}^{}/{}", self.0.p, self.0.k, text::format_prime_poly(&self.0.modulus))
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    /// Accepts `p`, `q` (a prime power, default modulus), `p^k`, or `p^k/<modulus>`.
    fn from_str(s: &str) -> Result<Self> {
        text::parse_field(s)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// An element of a specific finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

/// Binary and unary operations for [`field_arithmetic`].
#[derive(Debug, Clone)]
pub enum FieldOp<'a> {
    Add(&'a FieldElement),
    Sub(&'a FieldElement),
    Mul(&'a FieldElement),
    Div(&'a FieldElement),
    Inv,
    Pow(u64),
}

/// Applies `op` to `a`. Operands must share a field; division and inversion
/// reject zero.
pub fn field_arithmetic(a: &FieldElement, op: FieldOp<'_>) -> Result<FieldElement> {
    match op {
        FieldOp::Add(b) => a.checked_add(b),
        FieldOp::Sub(b) => a.checked_sub(b),
        FieldOp::Mul(b) => a.checked_mul(b),
        FieldOp::Div(b) => a.checked_div(b),
        FieldOp::Inv => a.inverse(),
        FieldOp::Pow(e) => Ok(a.pow(e)),
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> Result<Self> {
        if value >= field.order() {
            return Err(Error::Precondition(format!("value {value} out of range for {field}")));
        }
        Ok(field.element(value))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coordinates(&self) -> Vec<u32> {
        self.field.coordinates(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.add(self.value, other.value)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.sub(self.value, other.value)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.mul(self.value, other.value)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let v = self.field.div(self.value, other.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.element(v))
    }

    pub fn inverse(&self) -> Result<Self> {
        let v = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.element(v))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.field.element(self.field.pow(self.value, e))
    }

    pub fn neg(&self) -> Self {
        self.field.element(self.field.neg(self.value))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by field (characteristic, degree, modulus) and then by raw value.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.0.p, self.field.0.k, &self.field.0.modulus, self.value).cmp(&(
            other.field.0.p,
            other.field.0.k,
            &other.field.0.modulus,
            other.value,
        ))
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.0.p.hash(state);
        self.field.0.k.hash(state);
        self.value.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in GF({})", self, self.field.order())
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^k`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, k))
}

/// Dense polynomials over `GF(p)` as ascending digit vectors, for modulus work.
mod gfp {
    pub(super) fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
        let mut out = vec![0; len];
        for d in out.iter_mut() {
            *d = (v % p as u64) as u32;
            v /= p as u64;
        }
        out
    }

    pub(super) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        out.into_iter().map(|c| c as u32).collect()
    }

    /// Remainder of `a` modulo the monic `m`, padded to `deg m` coefficients.
    pub(super) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let dm = m.len() - 1;
        let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
        for top in (dm..r.len()).rev() {
            let c = r[top] % p as u64;
            if c == 0 {
                continue;
            }
            for (i, &mc) in m.iter().enumerate() {
                let idx = top - dm + i;
                r[idx] = (r[idx] + (p as u64 - c) * mc as u64) % p as u64;
            }
        }
        r.truncate(dm);
        r.resize(dm, 0);
        r.into_iter().map(|c| c as u32).collect()
    }

    /// Exhaustive trial division by every monic polynomial of degree `1..=deg/2`.
    pub(super) fn is_irreducible(m: &[u32], p: u32) -> bool {
        let k = m.len() - 1;
        for d in 1..=k / 2 {
            let count = (p as u64).pow(d as u32);
            for lower in 0..count {
                let mut h = digits(lower, p, d);
                h.push(1);
                if rem(m, &h, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }
}
