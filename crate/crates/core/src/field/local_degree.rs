use crate::error::{Error, Result};

use super::{P1Point, Poly, RationalFunction};

/// The multiplicity `m_φ(x0)`: the order at `z = 0` of `σ2 ∘ φ ∘ σ1`, where `σ1`
/// moves 0 to `x0` and `σ2` moves `φ(x0)` to 0 (translations, with `z ↦ 1/z`
/// at infinity).
pub fn local_degree(phi: &RationalFunction, x0: P1Point) -> Result<usize> {
    if phi.is_constant() {
        return Err(Error::Precondition(format!("{phi} is constant")));
    }
    let field = phi.field();
    let d = phi.degree();
    let (f, g) = (phi.numerator(), phi.denominator());
    // numerator and denominator of φ ∘ σ1, still coprime
    let (fz, gz) = match x0 {
        P1Point::Finite(a) => {
            let shift = Poly::new(field, vec![a, 1]);
            (f.compose(&shift), g.compose(&shift))
        }
        P1Point::Infinity => (f.reversed(d), g.reversed(d)),
    };
    let num = match phi.evaluate(x0) {
        P1Point::Finite(y) => &fz - &gz.scale(y),
        P1Point::Infinity => gz,
    };
    num.valuation()
        .ok_or_else(|| Error::Precondition(format!("{phi} is constant near {}", x0.format(field))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn rf(f: &Field, s: &str) -> RationalFunction {
        RationalFunction::parse(f, s).unwrap()
    }

    #[test]
    fn examples() {
        let f = Field::prime(5).unwrap();
        for x0 in P1Point::all(&f) {
            assert_eq!(local_degree(&rf(&f, "x"), x0).unwrap(), 1);
        }
        assert_eq!(local_degree(&rf(&f, "x^2"), P1Point::Finite(0)).unwrap(), 2);
        assert_eq!(local_degree(&rf(&f, "x^2"), P1Point::Finite(1)).unwrap(), 1);
        assert_eq!(local_degree(&rf(&f, "x^2"), P1Point::Infinity).unwrap(), 2);
        assert!(local_degree(&rf(&f, "3"), P1Point::Finite(0)).is_err());
    }

    #[test]
    fn poles_and_infinity() {
        let f = Field::prime(7).unwrap();
        let phi = rf(&f, "1/(x^3 + 6)");
        // x^3 - 1 has the three simple roots 1, 2, 4 mod 7
        for a in [1, 2, 4] {
            assert_eq!(local_degree(&phi, P1Point::Finite(a)).unwrap(), 1);
        }
        assert_eq!(local_degree(&phi, P1Point::Infinity).unwrap(), 3);
        assert_eq!(local_degree(&rf(&f, "1/(x^2 + 5*x + 1)"), P1Point::Finite(1)).unwrap(), 2);
    }

    #[test]
    fn fiber_sum() {
        let f = Field::prime(5).unwrap();
        let phi = rf(&f, "(x^2 + 2)/(x + 2)");
        // the fibre over infinity is {-2, inf}
        let total: usize = P1Point::all(&f)
            .into_iter()
            .filter(|&x| phi.evaluate(x) == P1Point::Infinity)
            .map(|x| local_degree(&phi, x).unwrap())
            .sum();
        assert_eq!(total, 2);
    }
}
