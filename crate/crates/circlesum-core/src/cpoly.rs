//! Self-inversive polynomial construction and unit-circle root localization.
//!
//! From a Taylor section `s` of order `n` (with `s(0) = 1`) we build
//!
//! ```text
//! P(z) = s(z) + z^N · s̄(1/z),        N = 2n + 1,
//! ```
//!
//! whose coefficients satisfy `c_k = conj(c_{N-k})`. When `s` has no zeros
//! in the closed unit disk, all `N` roots of `P` are simple and lie on the
//! unit circle, and `e^{-iNθ/2} P(e^{iθ})` is real-valued in θ, so the
//! roots are located by bracketing sign changes of that real profile and
//! polishing with safeguarded Newton steps.
//!
//! Zero-freeness on the closed disk is certified without a general root
//! finder: a boundary-modulus guard plus the winding number of
//! `θ ↦ s(e^{iθ})` (argument principle).

use alloc::vec::Vec;

use core::f64::consts::{FRAC_PI_2, TAU};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::series::{eval_deriv, eval_poly, exp_antiderivative_taylor, CoeffSeq, TaylorPolynomial};
use crate::tol;

/// Degree-`N = 2n+1` self-inversive polynomial built from a Taylor section.
///
/// Invariants: `coeffs[k] = conj(coeffs[N-k])` exactly, `coeffs[0] = 1`,
/// and the low half `coeffs[k] = g_k` for `k <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CPolynomial {
    coeffs: Vec<Complex64>,
    n: usize,
}

impl CPolynomial {
    /// Builds `P(z) = s(z) + z^N s̄(1/z)` from the Taylor half. Needs
    /// `s.order() >= 1` so that the degree `N = 2n+1` is at least 3.
    pub fn from_taylor_half(s: &TaylorPolynomial) -> Result<Self> {
        let n = s.order();
        if n < 1 {
            return Err(Error::InvalidParameter {
                what: "Taylor section order must be >= 1",
            });
        }
        let big_n = 2 * n + 1;
        let mut coeffs = alloc::vec![Complex64::default(); big_n + 1];
        for (k, &g) in s.coeffs().iter().enumerate() {
            coeffs[k] = g;
            coeffs[big_n - k] = g.conj();
        }
        Ok(Self { coeffs, n })
    }

    /// Taylor-section order `n`.
    pub fn half_order(&self) -> usize {
        self.n
    }

    /// Degree `N = 2n + 1`.
    pub fn degree(&self) -> usize {
        2 * self.n + 1
    }

    /// Ascending coefficients, length `N + 1`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Exact coefficient-level check of `c_k = conj(c_{N-k})`.
    pub fn is_self_inversive(&self) -> bool {
        let big_n = self.degree();
        (0..=big_n).all(|k| self.coeffs[k] == self.coeffs[big_n - k].conj())
    }

    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        eval_poly(&self.coeffs, z)
    }

    pub fn eval_deriv(&self, z: Complex64) -> Complex64 {
        eval_deriv(&self.coeffs, z)
    }
}

/// The `N` circle phases of a located root set, sorted ascending in
/// `[0, 2π)`, with the residuals `|P(e^{iθ_k})|` at acceptance.
#[derive(Debug, Clone, PartialEq)]
pub struct CirclePhases {
    phases: Vec<f64>,
    residuals: Vec<f64>,
}

impl CirclePhases {
    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    /// Roots `z_k = e^{iθ_k}` as complex points.
    pub fn roots(&self) -> Vec<Complex64> {
        self.phases
            .iter()
            .map(|&t| Complex64::from_polar(1.0, t))
            .collect()
    }
}

/// Real profile of a self-inversive polynomial on the circle:
/// `Re(e^{-iNθ/2} P(e^{iθ}))`.
///
/// The full expression is real up to rounding (imaginary part below
/// `1e-12·(1+|P|)`), and its zeros on `[0, 2π)` are exactly the circle
/// roots of `P`. With `N` odd the profile is 2π-antiperiodic; the zero
/// sets at `θ` and `θ + 2π` coincide.
pub fn real_form_on_circle(p: &CPolynomial, theta: f64) -> f64 {
    rotated_value(p, theta).re
}

fn rotated_value(p: &CPolynomial, theta: f64) -> Complex64 {
    let z = Complex64::from_polar(1.0, theta);
    let rot = Complex64::from_polar(1.0, -0.5 * p.degree() as f64 * theta);
    rot * p.eval(z)
}

/// θ-derivative of the real profile:
/// `Re(e^{-iNθ/2} · i·(z P'(z) - (N/2) P(z)))` at `z = e^{iθ}`.
fn real_form_deriv_on_circle(p: &CPolynomial, theta: f64) -> f64 {
    let z = Complex64::from_polar(1.0, theta);
    let rot = Complex64::from_polar(1.0, -0.5 * p.degree() as f64 * theta);
    let inner = z * p.eval_deriv(z) - 0.5 * p.degree() as f64 * p.eval(z);
    (rot * Complex64::i() * inner).re
}

/// Decides whether the Taylor section has no zeros in the closed unit disk.
///
/// Boundary grid minimum of `|s(e^{iθ})|` at or below the exact-zero floor
/// means a root sits on the circle: not zero-free. A minimum inside the
/// guard band `(floor, BOUNDARY_TOL]` is indeterminate and raises
/// [`Error::Borderline`] rather than guessing. Otherwise the winding number
/// of `θ ↦ s(e^{iθ})` counts the zeros inside the open disk.
pub fn disk_zero_free(s: &TaylorPolynomial) -> Result<bool> {
    let coeffs = s.coeffs();
    let scale = coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max);
    let mut k = usize::max(256, 64 * coeffs.len());
    loop {
        let vals: Vec<Complex64> = (0..k)
            .map(|j| eval_poly(coeffs, Complex64::from_polar(1.0, TAU * j as f64 / k as f64)))
            .collect();
        let min_mod = vals.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
        if min_mod <= tol::ON_CIRCLE_ZERO_REL * scale {
            return Ok(false);
        }
        if min_mod <= tol::BOUNDARY_TOL {
            return Err(Error::Borderline {
                min_modulus: min_mod,
            });
        }

        let mut total = 0.0;
        let mut resolved = true;
        for j in 0..k {
            let step = (vals[(j + 1) % k] * vals[j].conj()).arg();
            if step.abs() > FRAC_PI_2 {
                resolved = false;
                break;
            }
            total += step;
        }
        if resolved {
            let winding = total / TAU;
            if (winding - winding.round()).abs() < 0.25 {
                return Ok(winding.round() == 0.0);
            }
        }
        if k >= (1 << 22) {
            return Err(Error::Borderline {
                min_modulus: min_mod,
            });
        }
        k *= 2;
    }
}

/// Smallest order `n` in `1..=n_max` whose Taylor section of `exp(∫f)` is
/// certifiably zero-free on the closed unit disk.
///
/// Orders whose zero-freeness is indeterminate (borderline boundary
/// modulus) are skipped, not certified.
pub fn smallest_zero_free_order(f: &CoeffSeq, n_max: usize) -> Result<usize> {
    for n in 1..=n_max {
        let s = exp_antiderivative_taylor(f, n)?;
        match disk_zero_free(&s) {
            Ok(true) => return Ok(n),
            Ok(false) | Err(Error::Borderline { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ZeroFreeOrderNotFound { n_max })
}

/// Locates all `N` roots of a self-inversive polynomial on the unit circle.
///
/// Sign changes of the real profile are bracketed on a grid of
/// `GRID_FACTOR_MIN·N` offset samples, doubling up to `GRID_FACTOR_MAX·N`
/// until exactly `N` brackets appear, then each bracket is polished by
/// bisection with guarded Newton steps. Fewer or more than `N` brackets at
/// the densest grid signals a precondition violation (section not
/// zero-free) or a conditioning failure.
pub fn roots_on_circle(p: &CPolynomial) -> Result<CirclePhases> {
    let big_n = p.degree();
    let res_tol = tol::ROOT_RESIDUAL_REL * p.max_coeff_abs();

    let mut factor = tol::GRID_FACTOR_MIN;
    let mut phases: Vec<f64> = Vec::with_capacity(big_n);
    loop {
        phases.clear();
        let k = factor * big_n;
        // Offset grid keeps common symmetric roots (θ = π, π/3, ...) off
        // the sample points.
        let theta = |j: usize| TAU * (j as f64 + 0.5) / k as f64;
        let q: Vec<f64> = (0..k).map(|j| real_form_on_circle(p, theta(j))).collect();
        let mut brackets: Vec<(f64, f64, f64)> = Vec::with_capacity(big_n);
        for j in 0..k {
            let a = q[j];
            if a == 0.0 {
                phases.push(theta(j));
                continue;
            }
            // 2π-antiperiodicity supplies the wrap sample.
            let b = if j + 1 < k { q[j + 1] } else { -q[0] };
            if b != 0.0 && (a < 0.0) != (b < 0.0) {
                brackets.push((theta(j), theta(j + 1), a));
            }
        }
        let found = phases.len() + brackets.len();
        if found == big_n {
            for (lo, hi, q_lo) in brackets {
                phases.push(refine_root(p, lo, hi, q_lo));
            }
            break;
        }
        if factor >= tol::GRID_FACTOR_MAX {
            return Err(Error::RootCount {
                expected: big_n,
                found,
            });
        }
        factor *= 2;
    }

    for t in phases.iter_mut() {
        *t = wrap_phase(*t);
    }
    phases.sort_by(|a, b| a.partial_cmp(b).expect("phases are finite"));

    let mut residuals = Vec::with_capacity(big_n);
    for &t in &phases {
        let r = p.eval(Complex64::from_polar(1.0, t)).norm();
        if r > res_tol {
            return Err(Error::RootResidual {
                residual: r,
                tol: res_tol,
            });
        }
        residuals.push(r);
    }

    let mut min_gap = f64::INFINITY;
    for i in 0..phases.len() {
        let next = if i + 1 < phases.len() {
            phases[i + 1]
        } else {
            phases[0] + TAU
        };
        min_gap = min_gap.min(next - phases[i]);
    }
    if min_gap <= tol::SEPARATION_TOL {
        return Err(Error::RootSeparation {
            gap: min_gap,
            tol: tol::SEPARATION_TOL,
        });
    }

    Ok(CirclePhases { phases, residuals })
}

fn wrap_phase(t: f64) -> f64 {
    let mut x = t % TAU;
    if x < 0.0 {
        x += TAU;
    }
    x
}

/// Bisection with Newton acceleration on the real profile; the bracket
/// keeps every step safe, quadratic convergence does the work.
fn refine_root(p: &CPolynomial, mut lo: f64, mut hi: f64, mut q_lo: f64) -> f64 {
    let mut x = 0.5 * (lo + hi);
    let mut best = x;
    let mut best_abs = f64::INFINITY;
    for _ in 0..120 {
        let qx = real_form_on_circle(p, x);
        if qx.abs() < best_abs {
            best_abs = qx.abs();
            best = x;
        }
        if qx == 0.0 {
            return x;
        }
        if (qx < 0.0) == (q_lo < 0.0) {
            lo = x;
            q_lo = qx;
        } else {
            hi = x;
        }
        if hi - lo <= 1e-15 {
            break;
        }
        let dq = real_form_deriv_on_circle(p, x);
        let newton = x - qx / dq;
        let next = if dq != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if next == x {
            break;
        }
        x = next;
    }
    best
}
