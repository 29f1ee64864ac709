//! Seeded random polynomials and matrices for property checks.

use rand::Rng;

use super::{Field, Poly, PolyMatrix, RationalFunction};

/// Uniform polynomial of degree at most `max_deg` (possibly zero).
pub fn poly<R: Rng + ?Sized>(rng: &mut R, field: &Field, max_deg: usize) -> Poly {
    Poly::new(field, (0..=max_deg).map(|_| rng.random_range(0..field.order())).collect())
}

/// Polynomial of exact degree `deg`.
pub fn poly_of_degree<R: Rng + ?Sized>(rng: &mut R, field: &Field, deg: usize) -> Poly {
    let mut coeffs: Vec<u32> = (0..deg).map(|_| rng.random_range(0..field.order())).collect();
    coeffs.push(rng.random_range(1..field.order()));
    Poly::new(field, coeffs)
}

/// Nonzero polynomial of degree at most `max_deg`.
pub fn nonzero_poly<R: Rng + ?Sized>(rng: &mut R, field: &Field, max_deg: usize) -> Poly {
    loop {
        let p = poly(rng, field, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Matrix with independent entries of degree at most `max_deg`.
pub fn matrix<R: Rng + ?Sized>(rng: &mut R, field: &Field, rows: usize, cols: usize, max_deg: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, poly(rng, field, max_deg));
        }
    }
    m
}

/// Product of `steps` elementary row operations and unit scalings, so the
/// determinant is a nonzero constant.
pub fn unimodular<R: Rng + ?Sized>(rng: &mut R, field: &Field, n: usize, steps: usize, max_deg: usize) -> PolyMatrix {
    let mut rows = PolyMatrix::identity(field, n).to_rows();
    if n == 0 {
        return PolyMatrix::zeros(field, 0, 0);
    }
    for _ in 0..steps {
        let i = rng.random_range(0..n);
        let c = rng.random_range(1..field.order());
        for p in rows[i].iter_mut() {
            *p = p.scale(c);
        }
        if n > 1 {
            let j = (i + rng.random_range(1..n)) % n;
            let mult = poly(rng, field, max_deg);
            let source = rows[j].clone();
            for (entry, s) in rows[i].iter_mut().zip(&source) {
                *entry = &*entry + &(&mult * s);
            }
        }
    }
    PolyMatrix::new(field, rows).expect("square")
}

/// `U · diag(x^{v_1}, ..., x^{v_n}) · V` with random valuations `v_i <= max_val`
/// and random unimodular `U`, `V`.
pub fn x_power_matrix<R: Rng + ?Sized>(rng: &mut R, field: &Field, n: usize, max_val: usize) -> PolyMatrix {
    let diag: Vec<Poly> = (0..n).map(|_| Poly::monomial(field, 1, rng.random_range(0..=max_val))).collect();
    let u = unimodular(rng, field, n, 2 * n, 1);
    let v = unimodular(rng, field, n, 2 * n, 1);
    u.mul(&PolyMatrix::diagonal(field, &diag)).and_then(|m| m.mul(&v)).expect("square and same field")
}

/// Nonconstant rational function `f / g` with `deg f, deg g <= max_deg`.
pub fn rational_function<R: Rng + ?Sized>(rng: &mut R, field: &Field, max_deg: usize) -> RationalFunction {
    loop {
        let f = poly(rng, field, max_deg);
        let g = nonzero_poly(rng, field, max_deg);
        let phi = RationalFunction::new(f, g).expect("nonzero denominator");
        if !phi.is_constant() {
            return phi;
        }
    }
}
