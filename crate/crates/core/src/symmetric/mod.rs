//! Symmetric polynomials, Schur functions and the representation-theoretic
//! coefficients indexed by partitions.

mod characters;
mod lr;
mod schur;
mod slices;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

pub use characters::{character_value, class_size, kronecker_coefficient, CycleType};
pub use lr::{lr_coefficient, lr_support, SupportTriple};
pub use schur::schur_polynomial;
pub use slices::{
    coefficient_matrix_slice, matrix_product_experiment, CoefficientKind, CoefficientSlice,
    ConventionReport, ExperimentReport, IndexConvention,
};

/// A polynomial with integer coefficients in `x_1..x_m`, invariant under
/// permuting the variables. Terms map exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    variable_count: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl SymmetricPolynomial {
    pub fn zero(variable_count: usize) -> Self {
        Self { variable_count, terms: BTreeMap::new() }
    }

    pub fn one(variable_count: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; variable_count], 1);
        Self { variable_count, terms }
    }

    /// Builds a polynomial from raw terms, rejecting non-symmetric input.
    pub fn from_terms(
        variable_count: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, i64)>,
    ) -> Result<Self> {
        let mut poly = Self::zero(variable_count);
        for (exp, c) in terms {
            if exp.len() != variable_count {
                return Err(Error::SizeMismatch(format!(
                    "exponent vector {exp:?} has length {}, expected {variable_count}",
                    exp.len()
                )));
            }
            poly.add_term(exp, c);
        }
        if !poly.is_symmetric() {
            return Err(Error::Precondition("terms do not form a symmetric polynomial".into()));
        }
        Ok(poly)
    }

    pub(crate) fn add_term(&mut self, exp: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Checks invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.variable_count).all(|i| {
            self.terms.iter().all(|(exp, &c)| {
                let mut swapped = exp.clone();
                swapped.swap(i - 1, i);
                self.coefficient(&swapped) == c
            })
        })
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.variable_count);
        for (exp, &c) in &self.terms {
            out.add_term(exp.clone(), c * k);
        }
        out
    }

    /// Expands the polynomial in the Schur basis `s_λ(x_1..x_m)` by repeatedly
    /// subtracting the Schur function of the leading (lex-largest) monomial.
    pub fn schur_expansion(&self) -> Result<BTreeMap<Partition, i64>> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((lead, &c)) = rest.terms.iter().next_back() {
            let parts: Vec<usize> = lead.iter().map(|&e| e as usize).collect();
            let shape = Partition::from_weak(parts).map_err(|_| {
                Error::Precondition("leading monomial is not a partition; input not symmetric".into())
            })?;
            let s = schur_polynomial(&shape, self.variable_count);
            rest = &rest - &s.scale(c);
            out.insert(shape, c);
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(
            self.variable_count, other.variable_count,
            "symmetric polynomials in different numbers of variables"
        );
    }
}

impl Add for &SymmetricPolynomial {
    type Output = SymmetricPolynomial;

    fn add(self, rhs: Self) -> SymmetricPolynomial {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (exp, &c) in &rhs.terms {
            out.add_term(exp.clone(), c);
        }
        out
    }
}

impl Sub for &SymmetricPolynomial {
    type Output = SymmetricPolynomial;

    fn sub(self, rhs: Self) -> SymmetricPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &SymmetricPolynomial {
    type Output = SymmetricPolynomial;

    fn neg(self) -> SymmetricPolynomial {
        self.scale(-1)
    }
}

/// Panics if the operands live in different numbers of variables.
impl Mul for &SymmetricPolynomial {
    type Output = SymmetricPolynomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> SymmetricPolynomial {
        self.check_compatible(rhs);
        let mut out = SymmetricPolynomial::zero(self.variable_count);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for SymmetricPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, &c) in self.terms.iter().rev() {
            let monomial: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (monomial.is_empty(), mag) {
                (true, m) => write!(f, "{m}")?,
                (false, 1) => write!(f, "{}", monomial.join("*"))?,
                (false, m) => write!(f, "{m}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Serialize for SymmetricPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&Vec<u32>, i64)> = self.terms.iter().rev().map(|(e, &c)| (e, c)).collect();
        let mut st = serializer.serialize_struct("SymmetricPolynomial", 3)?;
        st.serialize_field("variable_count", &self.variable_count)?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}
