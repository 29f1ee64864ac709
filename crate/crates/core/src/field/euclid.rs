use crate::error::{Error, Result};

use super::{Poly, PolyMatrix, RationalFunction};

/// Quotients `q_1, ..., q_k` of the Euclidean remainder chain
/// `f_{i+1} = f_{i-1} mod f_i`, starting from `f_0 = f`, `f_1 = g` and stopping
/// at the first zero remainder.
pub fn euclid_quotients(f: &Poly, g: &Poly) -> Result<Vec<Poly>> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if f.degree() < g.degree() {
        return Err(Error::Precondition(format!("deg f < deg g for f = {f}, g = {g}")));
    }
    let mut out = Vec::new();
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (q, r) = a.div_rem(&b)?;
        out.push(q);
        a = b;
        b = r;
    }
    Ok(out)
}

/// Evaluates `q_1 + 1/(q_2 + 1/(... + 1/q_k))`.
pub fn continued_fraction(quotients: &[Poly]) -> Result<RationalFunction> {
    let (last, rest) = quotients
        .split_last()
        .ok_or_else(|| Error::Precondition("empty quotient list".into()))?;
    let mut acc = RationalFunction::from_poly(last.clone());
    for q in rest.iter().rev() {
        acc = RationalFunction::from_poly(q.clone()).checked_add(&acc.recip()?)?;
    }
    Ok(acc)
}

/// The diagonal matrix of the Euclid quotients of `numerator / denominator`.
pub fn quotient_matrix(phi: &RationalFunction) -> Result<PolyMatrix> {
    let qs = euclid_quotients(phi.numerator(), phi.denominator())?;
    Ok(PolyMatrix::diagonal(phi.field(), &qs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn poly(f: &Field, s: &str) -> Poly {
        Poly::parse(f, s).unwrap()
    }

    fn strings(ps: &[Poly]) -> Vec<String> {
        ps.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn examples() {
        let f3 = Field::prime(3).unwrap();
        let q = euclid_quotients(&poly(&f3, "x^2 + 1"), &poly(&f3, "x")).unwrap();
        assert_eq!(strings(&q), ["x", "x"]);

        let exact = euclid_quotients(&poly(&f3, "x^2 + 2*x"), &poly(&f3, "x")).unwrap();
        assert_eq!(strings(&exact), ["2 + x"]);

        let f2 = Field::prime(2).unwrap();
        let q = euclid_quotients(&poly(&f2, "x^3 + x + 1"), &poly(&f2, "x^2")).unwrap();
        // x^3+x+1 = x·x^2 + (x+1); x^2 = (x+1)(x+1) + 1; x+1 = (x+1)·1
        assert_eq!(strings(&q), ["x", "1 + x", "1 + x"]);
    }

    #[test]
    fn errors() {
        let f = Field::prime(5).unwrap();
        assert_eq!(euclid_quotients(&poly(&f, "x"), &Poly::zero(&f)), Err(Error::DivisionByZero));
        assert!(matches!(euclid_quotients(&poly(&f, "x"), &poly(&f, "x^2")), Err(Error::Precondition(_))));
        assert!(continued_fraction(&[]).is_err());
    }

    #[test]
    fn reconstruction() {
        let f = Field::prime(5).unwrap();
        let phi = RationalFunction::parse(&f, "(x^3 + 2*x + 1)/(x^2 + 1)").unwrap();
        let q = euclid_quotients(phi.numerator(), phi.denominator()).unwrap();
        assert_eq!(strings(&q), ["x", "4 + x", "3 + 3*x"]);
        assert_eq!(continued_fraction(&q).unwrap(), phi);
        let m = quotient_matrix(&phi).unwrap();
        assert_eq!(m.nrows(), 3);
        assert!(m.is_diagonal());
    }

    #[test]
    fn polynomial_case() {
        let f = Field::prime(7).unwrap();
        let phi = RationalFunction::parse(&f, "x^2 + 3").unwrap();
        let m = quotient_matrix(&phi).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (1, 1));
        assert_eq!(m.get(0, 0), phi.numerator());
    }
}
