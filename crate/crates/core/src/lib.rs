//! Exact computational algebra around the Horn problem.
//!
//! * [`combinatorics`]: partitions, index sets, Gaussian binomials.
//! * [`symmetric`]: Schur polynomials, Littlewood-Richardson and Kronecker
//!   coefficients, symmetric-group characters.
//! * [`horn`]: Horn's inductive index-triple sets `U^n_r` and `T^n_r`.
//! * [`field`]: arithmetic in `GF(p^k)`, polynomials, rational functions,
//!   continued fractions, Smith normal form of polynomial matrices.
//! * [`codes`]: projective geometry over finite fields, the rational normal
//!   curve, Riemann-Roch spaces on the projective line and evaluation codes.
//!
//! [`oracle`] holds brute-force reference computations and [`verify`] runs
//! the acceptance checks built from them.

pub mod codes;
pub mod combinatorics;
pub mod error;
pub mod field;
pub mod horn;
pub mod oracle;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
