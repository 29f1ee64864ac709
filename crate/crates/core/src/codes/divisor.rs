use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Field, P1Point, Poly, RationalFunction};

/// A divisor on the projective line: finitely many points with nonzero multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct Divisor {
    field: Field,
    terms: BTreeMap<P1Point, i64>,
}

impl Divisor {
    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn new(field: &Field, terms: impl IntoIterator<Item = (P1Point, i64)>) -> Result<Self> {
        let mut d = Self::zero(field);
        for (p, m) in terms {
            if let P1Point::Finite(v) = p {
                if v >= field.order() {
                    return Err(Error::Precondition(format!("point {v} out of range for GF({})", field.order())));
                }
            }
            d.add(p, m);
        }
        Ok(d)
    }

    /// `m · [P]`.
    pub fn point(field: &Field, p: P1Point, m: i64) -> Result<Self> {
        Self::new(field, [(p, m)])
    }

    fn add(&mut self, p: P1Point, m: i64) {
        let e = self.terms.entry(p).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, p: P1Point) -> i64 {
        self.terms.get(&p).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = P1Point> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (P1Point, i64)> + '_ {
        self.terms.iter().map(|(&p, &m)| (p, m))
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// Parses `2*[inf] + 1*[0] - 1*[3]`; a bare `[P]` has multiplicity 1, and `0` is the zero divisor.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "0" || t.is_empty() {
            return Ok(Self::zero(field));
        }
        let mut terms = Vec::new();
        let mut sign = 1i64;
        let mut rest = t;
        loop {
            rest = rest.trim_start();
            let open = rest.find('[').ok_or_else(|| Error::Parse(format!("expected '[' in divisor {s:?}")))?;
            let close = rest[open..]
                .find(']')
                .map(|c| c + open)
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in divisor {s:?}")))?;
            let coef = rest[..open].trim();
            let coef = coef.strip_suffix('*').map(str::trim).unwrap_or(coef);
            let m: i64 = match coef {
                "" | "+" => 1,
                "-" => -1,
                c => c.replace(' ', "").parse().map_err(|_| Error::Parse(format!("bad multiplicity {c:?} in {s:?}")))?,
            };
            let point = P1Point::parse(field, &rest[open + 1..close])?;
            terms.push((point, sign * m));
            rest = rest[close + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            sign = match rest.as_bytes()[0] {
                b'+' => 1,
                b'-' => -1,
                _ => return Err(Error::Parse(format!("expected '+' or '-' in divisor {s:?}"))),
            };
            rest = &rest[1..];
        }
        Self::new(field, terms)
    }
}

/// Infinity first, then finite points in raw-value order.
impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let ordered = self
            .terms
            .get(&P1Point::Infinity)
            .map(|&m| (P1Point::Infinity, m))
            .into_iter()
            .chain(self.terms.iter().filter(|(p, _)| !p.is_infinity()).map(|(&p, &m)| (p, m)));
        for (i, (p, m)) in ordered.enumerate() {
            let pt = p.format(&self.field);
            match (i, m < 0) {
                (0, false) => write!(f, "{m}*[{pt}]")?,
                (0, true) => write!(f, "-{}*[{pt}]", -m)?,
                (_, false) => write!(f, " + {m}*[{pt}]")?,
                (_, true) => write!(f, " - {}*[{pt}]", -m)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Divisor({self})")
    }
}

impl Serialize for Divisor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A basis of `L(D) = { f : div(f) + D >= 0 } ∪ {0}` on the projective line.
///
/// With `h = ∏ (x - a)^{n_a}` over the finite part of `D`, the space is
/// `{ p / h : deg p <= deg D }`, so the basis is `x^i / h` for `0 <= i <= deg D`.
pub fn riemann_roch_basis(d: &Divisor) -> Vec<RationalFunction> {
    let deg = d.degree();
    if deg < 0 {
        return Vec::new();
    }
    let field = d.field();
    let mut poles = Poly::one(field);
    let mut zeros = Poly::one(field);
    for (p, m) in d.terms() {
        if let P1Point::Finite(a) = p {
            let lin = Poly::linear_root(field, a).pow(m.unsigned_abs() as u32);
            if m > 0 {
                poles = &poles * &lin;
            } else {
                zeros = &zeros * &lin;
            }
        }
    }
    (0..=deg as usize)
        .map(|i| {
            let num = &Poly::monomial(field, 1, i) * &zeros;
            RationalFunction::new(num, poles.clone()).expect("nonzero denominator")
        })
        .collect()
}

/// True when `div(f) + D >= 0`.
pub fn in_riemann_roch_space(f: &RationalFunction, d: &Divisor) -> bool {
    if f.is_zero() {
        return true;
    }
    let mut points: Vec<P1Point> = d.support().collect();
    points.push(P1Point::Infinity);
    for a in f.numerator().roots_with_multiplicity().iter().chain(&f.denominator().roots_with_multiplicity()) {
        points.push(P1Point::Finite(a.0));
    }
    // irreducible factors of the denominator without roots are poles not in the support
    let den_linear: usize = f.denominator().roots_with_multiplicity().iter().map(|r| r.1).sum();
    if Some(den_linear) != f.denominator().degree() {
        return false;
    }
    points.iter().all(|&p| f.order_at(p).expect("nonzero") + d.multiplicity(p) >= 0)
}
