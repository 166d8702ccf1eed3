//! Numeric tolerances used across the crate.
//!
//! The circle roots of the constructed polynomials are provably simple, so
//! refinement converges quadratically and residual floors sit near machine
//! precision; these guards detect conditioning collapse, not expected error.

/// Accepted root residual `|P(e^{iθ})|`, relative to `max|coeffs|`.
pub const ROOT_RESIDUAL_REL: f64 = 1e-10;

/// Minimum admissible gap between refined phases (radians). Roots are
/// simple, so a smaller gap signals a conditioning failure rather than a
/// true near-multiplicity.
pub const SEPARATION_TOL: f64 = 1e-6;

/// Guard band on the boundary modulus of the Taylor section: a grid
/// minimum of `|s(e^{iθ})|` inside this band makes zero-freeness
/// indeterminate.
pub const BOUNDARY_TOL: f64 = 1e-8;

/// A grid modulus below this (times the coefficient scale) is treated as an
/// exact zero on the circle.
pub const ON_CIRCLE_ZERO_REL: f64 = 1e-13;

/// Initial sign-change grid density: samples per polynomial degree.
pub const GRID_FACTOR_MIN: usize = 32;

/// Maximum grid density before the root count is declared unresolved.
pub const GRID_FACTOR_MAX: usize = 1024;

/// A leading Taylor coefficient of the interpolation defect below this is
/// counted as vanished.
pub const ORDER_TOL: f64 = 1e-8;

/// Agreement required between root-side and coefficient-side power sums,
/// relative to `1 + |S|`.
pub const ROUTE_AGREEMENT_TOL: f64 = 1e-9;

/// Truncation target for generator-series evaluation.
pub const SERIES_TRUNCATION_TOL: f64 = 1e-12;

/// Tolerance on the head identities `S_{j+1} = a_j`, `j < n`. They are
/// exact in exact arithmetic; this absorbs root-refinement error amplified
/// by power-sum evaluation up to order `n`.
pub fn head_tol(n: usize, max_abs_a: f64) -> f64 {
    let big_n = (2 * n + 1) as f64;
    1e-8 * (1.0 + max_abs_a) * big_n
}

/// Tolerance on extracted harmonics: linear in the phase-set size and in
/// the signal's coefficient mass `Σ(|a_m|+|b_m|)`.
pub fn extract_tol(n: usize, coeff_mass: f64) -> f64 {
    let big_n = (2 * n + 1) as f64;
    1e-8 * big_n * (1.0 + coeff_mass)
}
