//! Projective geometry over finite fields, the rational normal curve, divisors
//! and Riemann-Roch spaces on the projective line, evaluation codes, Grassmann
//! codes and orbit constructions.

mod divisor;
mod grassmann;
pub mod linalg;
mod linear;
mod omega;
mod projective;

pub use divisor::{in_riemann_roch_space, riemann_roch_basis, Divisor};
pub use grassmann::{
    configuration_orbits, grassmann_code_params, grassmann_orbit, plucker_coordinates, subspaces, GrassmannParams,
    Permutation, TupleMode, MAX_ENUMERATED_SUBSPACES,
};
pub use linear::{
    evaluation_code, min_distance, rational_map_code, three_point_code, LinearCode, ThreePointCode,
    DEFAULT_EXHAUSTION_BOUND,
};
pub use omega::{binomial_mod_p, omega_closure, omega_set, psi_closure};
pub use projective::{
    all_points, collineation_invariance_check, is_k_arc, max_collinear, nrc_points, veronese_map,
    CollineationCheck, CollineationReport, ProjectivePoint,
};

pub(crate) use projective::for_each_subset;
