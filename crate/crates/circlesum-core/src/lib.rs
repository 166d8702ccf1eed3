//! Unit-weight power-sum representations on the unit circle.
//!
//! Given targets `a₀..a_{n-1}`, the crate finds `N = 2n+1` pairwise
//! distinct unimodular points `λ_k` whose pure power sums reproduce the
//! targets, `S_{j+1}(λ) = λ₁^{j+1} + … + λ_N^{j+1} = a_j` for `j < n`,
//! with computable bounds on the tail `j >= n`. The construction reflects
//! the Taylor section of `exp(∫f)`, `f = Σ(-a_j)z^j`, into a self-inversive
//! polynomial whose roots all sit on the unit circle; the `λ_k` are the
//! conjugate-reciprocal roots.
//!
//! On top of the representation kernel sit four applications:
//!
//! - simple partial fractions `Σ 1/(z - z_k)` with unimodular poles
//!   approximating bounded analytic functions on subdisks ([`approx`]);
//! - sums of unimodular exponentials `Σ λ_k e^{λ_k z}` ([`approx`]);
//! - `h`-sums `Σ λ_k h(λ_k z)` for a fixed disk-analytic generator `h`
//!   ([`approx`]);
//! - integration-free extraction of single harmonics (and linear
//!   combinations of initial harmonics) from real trigonometric signals by
//!   pure phase shifts ([`harmonics`]).
//!
//! The [`oracle`] module re-derives every certificate by an independent
//! route (Newton identities, brute-force series) and is used by the test
//! suite and by downstream verification tooling.
//!
//! The crate is `no_std`-compatible (with `alloc`): disable default
//! features and enable `libm` instead of `std`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod approx;
pub mod cpoly;
pub mod error;
pub mod harmonics;
pub mod oracle;
pub mod represent;
pub mod series;
pub mod tol;

pub use approx::{
    exp_sum_bound, exp_sum_eval, h_sum_build, h_sum_eval, h_sum_first_kind_eval,
    spf_eval, spf_interpolation_order, HSeries, HSumValue,
};
pub use cpoly::{
    disk_zero_free, real_form_on_circle, roots_on_circle, smallest_zero_free_order, CPolynomial,
    CirclePhases,
};
pub use error::{Error, Result};
pub use harmonics::{
    combination_phases, extract_harmonic, extraction_phases, fourier_coeffs, ExtractionOperator,
    ExtractionTarget, TrigPolynomial,
};
pub use num_complex::Complex64;
pub use oracle::{newton_power_sums, SymmetricFunctions};
pub use represent::{
    best_tail_bound, power_sum, represent, tail_bound_bounded_coeff, tail_bound_free_params,
    BoundParams, Representation, TailBound, TailBoundFamily,
};
pub use series::{eval_deriv, eval_poly, exp_antiderivative_taylor, CoeffSeq, TaylorPolynomial};
