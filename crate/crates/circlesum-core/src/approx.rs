//! Function-approximation applications of the representation kernel:
//! simple partial fractions with unimodular poles, sums of unimodular
//! exponentials, and `h`-sums for a fixed disk-analytic generator.
//!
//! A simple partial fraction `Σ 1/(z - z_k)` over the located circle roots
//! is the logarithmic derivative `P'/P`; its Taylor expansion matches the
//! input `f` through order `n - 1`, and explicit error bounds are
//! available on subdisks. Exponential sums and `h`-sums reuse the same
//! point sets with rescaled targets (`a_j = p_j` resp. `a_j = f_j/h_j`).

use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::TAU;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::cpoly::{disk_zero_free, smallest_zero_free_order, CPolynomial};
use crate::error::{Error, Result};
use crate::represent::{represent, BoundParams, Representation};
use crate::series::{eval_poly, exp_antiderivative_taylor, CoeffSeq};
use crate::tol;

/// Distance at which an evaluation point is considered to sit on a pole.
pub const POLE_TOL: f64 = 1e-12;

/// Sum of simple fractions `Σ_k 1/(z - e^{iθ_k})` over a circle phase set.
///
/// Equals `P'(z)/P(z)` when the phases are the roots of `P`.
pub fn spf_eval(phases: &[f64], z: Complex64) -> Result<Complex64> {
    let mut acc = Complex64::default();
    for &t in phases {
        let d = z - Complex64::from_polar(1.0, t);
        let dist = d.norm();
        if dist <= POLE_TOL {
            return Err(Error::PoleProximity { distance: dist });
        }
        acc += d.inv();
    }
    Ok(acc)
}

/// Uniform bound `(a+ε)^{n+1} / (2ε(1-a-ε))` for `|P'/P - f|` on the disk
/// `|z| <= a`, valid for all large enough `n` (advisory below that
/// threshold).
pub fn spf_bound_disk(n: usize, p: &BoundParams) -> Result<f64> {
    let (a, eps) = (p.a_radius(), p.eps());
    if a + eps >= 1.0 {
        return Err(Error::InvalidParameter {
            what: "need a_radius + eps < 1",
        });
    }
    Ok((a + eps).powi(n as i32 + 1) / (2.0 * eps * (1.0 - a - eps)))
}

/// Pointwise bound `15|z|^n/(1-|z|^{n+1}) · (n + 2/(1-|z|))`, certified for
/// every `n >= 1` under the decay hypothesis `|f_j| <= (j+2)^{-2}`.
pub fn spf_bound_bounded_coeff(n: usize, z_abs: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter { what: "need n >= 1" });
    }
    if !(0.0..1.0).contains(&z_abs) {
        return Err(Error::InvalidParameter {
            what: "need 0 <= |z| < 1",
        });
    }
    let nf = n as f64;
    Ok(15.0 * z_abs.powi(n as i32) / (1.0 - z_abs.powi(n as i32 + 1))
        * (nf + 2.0 / (1.0 - z_abs)))
}

/// Taylor coefficients of `P'/P` through order `m`, by series division
/// (`P(0) = 1`). Stays clear of the root finder so it doubles as an
/// independent route in cross-checks.
pub fn log_deriv_series(p: &CPolynomial, m: usize) -> Vec<Complex64> {
    let den = p.coeffs();
    let mut out = vec![Complex64::default(); m + 1];
    for k in 0..=m {
        let mut acc = if k + 1 < den.len() {
            den[k + 1] * (k + 1) as f64
        } else {
            Complex64::default()
        };
        for i in 1..=usize::min(k, den.len() - 1) {
            acc -= den[i] * out[k - i];
        }
        out[k] = acc;
    }
    out
}

/// Number of leading Taylor coefficients of `P'/P - f` that vanish below
/// [`tol::ORDER_TOL`]; at least `n` by the interpolation property.
pub fn spf_interpolation_order(f: &CoeffSeq, n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidParameter { what: "need n >= 1" });
    }
    let s = exp_antiderivative_taylor(f, n)?;
    if !disk_zero_free(&s)? {
        let n0 = smallest_zero_free_order(f, usize::max(2 * n, 32)).ok();
        return Err(Error::ZeroInDisk { n, n0 });
    }
    let p = CPolynomial::from_taylor_half(&s)?;
    let series = log_deriv_series(&p, 2 * n + 2);
    let mut m = 0;
    for (k, d) in series.iter().enumerate() {
        if (d - f.coeff(k)).norm() < tol::ORDER_TOL {
            m = k + 1;
        } else {
            break;
        }
    }
    Ok(m)
}

/// `Σ_k λ_k e^{λ_k z}`, entire in `z`.
pub fn exp_sum_eval(lambdas: &[Complex64], z: Complex64) -> Complex64 {
    lambdas.iter().map(|&l| l * (l * z).exp()).sum()
}

/// Whole-plane bound for the exponential-sum error with targets
/// `p_j` satisfying `|p_j| <= (j+2)^{-2}`:
///
/// ```text
/// (|z|^n/n!) · 15/(1-r^{n+1}) · (n + 2/(1-r)) · (1 + |z|e^{|z|/r}/(rn+r))
/// ```
pub fn exp_sum_bound(n: usize, z_abs: f64, r: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter { what: "need n >= 1" });
    }
    if !(0.0 < r && r < 1.0) {
        return Err(Error::InvalidParameter { what: "need 0 < r < 1" });
    }
    if z_abs < 0.0 || z_abs.is_nan() {
        return Err(Error::InvalidParameter { what: "need |z| >= 0" });
    }
    if z_abs == 0.0 {
        return Ok(0.0);
    }
    let nf = n as f64;
    let ln_lead = nf * z_abs.ln() - ln_factorial(n);
    let lead = ln_lead.exp();
    Ok(lead * 15.0 / (1.0 - r.powi(n as i32 + 1))
        * (nf + 2.0 / (1.0 - r))
        * (1.0 + z_abs * (z_abs / r).exp() / (r * nf + r)))
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Generator series `h(z) = Σ h_j z^j` with `0 < |h_j| <= M` for `j >= 1`.
/// The constant term is either nonzero (plain sums) or exactly zero
/// (first-kind sums).
#[derive(Debug, Clone, PartialEq)]
pub struct HSeries {
    coeffs: Vec<Complex64>,
    m_bound: f64,
}

impl HSeries {
    pub fn new(coeffs: Vec<Complex64>, m_bound: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        if !m_bound.is_finite() || m_bound <= 0.0 {
            return Err(Error::InvalidParameter {
                what: "generator bound M must be positive and finite",
            });
        }
        let slack = m_bound * (1.0 + 1e-12);
        for (j, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite);
            }
            let norm = c.norm();
            if norm > slack {
                return Err(Error::InvalidGenerator {
                    index: j,
                    reason: "modulus exceeds the declared bound M",
                });
            }
            if j >= 1 && norm == 0.0 {
                return Err(Error::InvalidGenerator {
                    index: j,
                    reason: "must be nonzero",
                });
            }
        }
        Ok(Self { coeffs, m_bound })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn m_bound(&self) -> f64 {
        self.m_bound
    }

    /// First-kind generators vanish at the origin.
    pub fn is_first_kind(&self) -> bool {
        self.coeffs[0] == Complex64::default()
    }
}

/// Representation targeting `a_j = f_j / h_j`, so that
/// `Σ λ_k h(λ_k z) ≈ f(z)`.
///
/// Generator coefficients must be available and nonzero wherever `f` has a
/// nonzero coefficient. The boundedness of `F(z) = Σ (f_j/h_j) z^j` beyond
/// the stored prefix is the caller's assertion; only the computable prefix
/// is validated.
pub fn h_sum_build(f: &CoeffSeq, h: &HSeries, n: usize) -> Result<Representation> {
    let len = usize::max(n, f.len());
    let mut a = vec![Complex64::default(); len];
    for (j, slot) in a.iter_mut().enumerate() {
        let fj = f.coeff(j);
        if fj == Complex64::default() {
            continue;
        }
        if j >= h.len() {
            return Err(Error::InvalidGenerator {
                index: j,
                reason: "missing coefficient for a nonzero target",
            });
        }
        let hj = h.coeff(j);
        if hj == Complex64::default() {
            return Err(Error::InvalidGenerator {
                index: j,
                reason: "zero divisor",
            });
        }
        *slot = fj / hj;
    }
    represent(&CoeffSeq::new(a)?, n)
}

/// Representation for first-kind sums `Σ h(λ_k z)`: targets come from the
/// shifted ratio series `a_j = f_{j+1}/h_{j+1}`.
pub fn h_sum_first_kind_build(f: &CoeffSeq, h: &HSeries, n: usize) -> Result<Representation> {
    if !h.is_first_kind() {
        return Err(Error::InvalidGenerator {
            index: 0,
            reason: "must vanish for first-kind sums",
        });
    }
    if f.coeff(0) != Complex64::default() {
        return Err(Error::InvalidParameter {
            what: "first-kind target must have zero constant term",
        });
    }
    let len = usize::max(n, f.len().saturating_sub(1));
    let mut a = vec![Complex64::default(); len];
    for (j, slot) in a.iter_mut().enumerate() {
        let fj = f.coeff(j + 1);
        if fj == Complex64::default() {
            continue;
        }
        if j + 1 >= h.len() {
            return Err(Error::InvalidGenerator {
                index: j + 1,
                reason: "missing coefficient for a nonzero target",
            });
        }
        let hj = h.coeff(j + 1);
        if hj == Complex64::default() {
            return Err(Error::InvalidGenerator {
                index: j + 1,
                reason: "zero divisor",
            });
        }
        *slot = fj / hj;
    }
    represent(&CoeffSeq::new(a)?, n)
}

/// An evaluated generator sum together with the reported series-truncation
/// error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HSumValue {
    pub value: Complex64,
    pub truncation_bound: f64,
}

fn truncated_terms(h: &HSeries, z_abs: f64) -> (usize, f64) {
    let m = h.m_bound();
    let mut used = 1usize;
    while used < h.len()
        && m * z_abs.powi(used as i32) / (1.0 - z_abs) > tol::SERIES_TRUNCATION_TOL
    {
        used += 1;
    }
    let bound = if z_abs == 0.0 {
        0.0
    } else {
        m * z_abs.powi(used as i32) / (1.0 - z_abs)
    };
    (used, bound)
}

/// `H_N(λ; z) = Σ_k λ_k h(λ_k z)` for `|z| < 1`, summing the stored
/// generator prefix down to a truncation tail below
/// [`tol::SERIES_TRUNCATION_TOL`] (or as far as the prefix allows, with
/// the actual tail bound reported).
pub fn h_sum_eval(h: &HSeries, lambdas: &[Complex64], z: Complex64) -> Result<HSumValue> {
    let z_abs = z.norm();
    if z_abs >= 1.0 {
        return Err(Error::OutOfDomain {
            what: "h-sum evaluation needs |z| < 1",
        });
    }
    let (used, truncation_bound) = truncated_terms(h, z_abs);
    let head = &h.coeffs()[..used];
    let value = lambdas
        .iter()
        .map(|&l| l * eval_poly(head, l * z))
        .sum();
    Ok(HSumValue {
        value,
        truncation_bound,
    })
}

/// First-kind sum `H_N^{(1)}(λ; z) = Σ_k h(λ_k z)`, requiring `h(0) = 0`.
pub fn h_sum_first_kind_eval(
    h: &HSeries,
    lambdas: &[Complex64],
    z: Complex64,
) -> Result<HSumValue> {
    if !h.is_first_kind() {
        return Err(Error::InvalidGenerator {
            index: 0,
            reason: "must vanish for first-kind sums",
        });
    }
    let z_abs = z.norm();
    if z_abs >= 1.0 {
        return Err(Error::OutOfDomain {
            what: "h-sum evaluation needs |z| < 1",
        });
    }
    let (used, truncation_bound) = truncated_terms(h, z_abs);
    let head = &h.coeffs()[..used];
    let value = lambdas.iter().map(|&l| eval_poly(head, l * z)).sum();
    Ok(HSumValue {
        value,
        truncation_bound,
    })
}

/// Closed-form `h`-sum error bound
/// `|z|^n (5-|z|)^{n+1}/4^{n-1} · (2M/3) · (3+|z|)/(1-|z|)^4` on `|z| < 1`.
pub fn h_sum_bound(n: usize, z_abs: f64, m_bound: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter { what: "need n >= 1" });
    }
    if !(0.0..1.0).contains(&z_abs) {
        return Err(Error::InvalidParameter {
            what: "need 0 <= |z| < 1",
        });
    }
    Ok(z_abs.powi(n as i32) * (5.0 - z_abs).powi(n as i32 + 1) / 4.0f64.powi(n as i32 - 1)
        * (2.0 * m_bound / 3.0)
        * (3.0 + z_abs)
        / (1.0 - z_abs).powi(4))
}

/// First-kind closed-form bound
/// `(5|z|-|z|²)^{n+1}/4^{n-1} · (2M/3) · (3+|z|)/(1-|z|)^4`.
pub fn h_sum_first_kind_bound(n: usize, z_abs: f64, m_bound: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter { what: "need n >= 1" });
    }
    if !(0.0..1.0).contains(&z_abs) {
        return Err(Error::InvalidParameter {
            what: "need 0 <= |z| < 1",
        });
    }
    Ok((5.0 * z_abs - z_abs * z_abs).powi(n as i32 + 1) / 4.0f64.powi(n as i32 - 1)
        * (2.0 * m_bound / 3.0)
        * (3.0 + z_abs)
        / (1.0 - z_abs).powi(4))
}

/// Raw-parameter `h`-sum bound
/// `M/(r-ε-|z|) · r^{n+1}/(1-r) · |z|^n/(2ε (r-ε)^{n-1})`, valid for
/// `|z| < r-ε < r < 1`. The closed forms above fix
/// `r = 1-δ², ε = (1-δ)δ, δ = (1-|z|)/4`.
pub fn h_sum_bound_params(
    n: usize,
    z_abs: f64,
    m_bound: f64,
    r: f64,
    eps: f64,
) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter { what: "need n >= 1" });
    }
    if !(0.0 < eps && eps < r && r < 1.0 && z_abs >= 0.0 && z_abs < r - eps) {
        return Err(Error::InvalidParameter {
            what: "need 0 <= |z| < r - eps and 0 < eps < r < 1",
        });
    }
    Ok(m_bound / (r - eps - z_abs) * r.powi(n as i32 + 1) / (1.0 - r) * z_abs.powi(n as i32)
        / (2.0 * eps * (r - eps).powi(n as i32 - 1)))
}

/// Empirical search for the smallest order at which the measured sup of
/// `|P'/P - f|` on the circle `|z| = a_radius` meets the disk bound.
/// Advisory: the analytic threshold is not computable from finitely many
/// coefficients.
pub fn estimate_disk_bound_order(
    f: &CoeffSeq,
    p: &BoundParams,
    n_max: usize,
) -> Result<usize> {
    if p.a_radius() + p.eps() >= 1.0 {
        return Err(Error::InvalidParameter {
            what: "need a_radius + eps < 1",
        });
    }
    let mut last_sup = f64::NAN;
    let mut last_bound = f64::NAN;
    for n in 1..=n_max {
        let s = exp_antiderivative_taylor(f, n)?;
        if !matches!(disk_zero_free(&s), Ok(true)) {
            continue;
        }
        let poly = CPolynomial::from_taylor_half(&s)?;
        let bound = spf_bound_disk(n, p)?;
        let mut sup = 0.0f64;
        for j in 0..720 {
            let w = Complex64::from_polar(p.a_radius(), TAU * j as f64 / 720.0);
            let d = (poly.eval_deriv(w) / poly.eval(w) - eval_poly(f.coeffs(), w)).norm();
            sup = sup.max(d);
        }
        if sup <= bound {
            return Ok(n);
        }
        last_sup = sup;
        last_bound = bound;
    }
    Err(Error::OrderNotCertified {
        n_max,
        last_sup,
        last_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::represent::power_sum;
    use crate::series::TaylorPolynomial;
    use approx::assert_relative_eq;
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cubic_phases() -> Vec<f64> {
        vec![PI / 3.0, PI, 5.0 * PI / 3.0]
    }

    fn quintic() -> CPolynomial {
        let coeffs = vec![c(1.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)];
        CPolynomial::from_taylor_half(&TaylorPolynomial::from_coeffs(coeffs).unwrap()).unwrap()
    }

    #[test]
    fn spf_matches_log_derivative_of_cubic() {
        let phases = cubic_phases();
        assert!(spf_eval(&phases, c(0.0, 0.0)).unwrap().norm() <= 1e-14);
        let v = spf_eval(&phases, c(0.5, 0.0)).unwrap();
        assert_relative_eq!(v.re, 2.0 / 3.0, epsilon = 1e-12);
        assert!(v.im.abs() <= 1e-12);
    }

    #[test]
    fn spf_matches_log_derivative_of_quintic() {
        let p = quintic();
        let phases = crate::cpoly::roots_on_circle(&p).unwrap();
        let z = c(0.0, 0.3);
        let direct = spf_eval(phases.phases(), z).unwrap();
        let logd = p.eval_deriv(z) / p.eval(z);
        assert!((direct - logd).norm() <= 1e-10 * (1.0 + logd.norm()));
    }

    #[test]
    fn spf_rejects_pole_proximity() {
        let phases = cubic_phases();
        let z = Complex64::from_polar(1.0, PI / 3.0);
        assert!(matches!(
            spf_eval(&phases, z),
            Err(Error::PoleProximity { .. })
        ));
    }

    #[test]
    fn disk_bound_frozen_value() {
        let p = BoundParams::new(0.5, 0.25, 0.5).unwrap();
        assert_relative_eq!(spf_bound_disk(5, &p).unwrap(), 1.423828125, epsilon = 1e-12);
        let tight = BoundParams::new(0.9, 0.6, 0.5).unwrap();
        assert!(spf_bound_disk(5, &tight).is_err()); // a + eps >= 1
    }

    #[test]
    fn bounded_coeff_bound_frozen_values() {
        assert_relative_eq!(spf_bound_bounded_coeff(1, 0.5).unwrap(), 50.0, epsilon = 1e-12);
        assert_eq!(spf_bound_bounded_coeff(1, 0.0).unwrap(), 0.0);
        assert!(spf_bound_bounded_coeff(0, 0.5).is_err());
        assert!(spf_bound_bounded_coeff(1, 1.0).is_err());
    }

    #[test]
    fn interpolation_order_of_trivial_input() {
        // P = 1 + z³ gives P'/P = 3z² - 3z⁵ + …, first defect at order 2
        let f = CoeffSeq::from_real(&[0.0]).unwrap();
        assert_eq!(spf_interpolation_order(&f, 1).unwrap(), 2);
    }

    #[test]
    fn interpolation_order_of_minus_z() {
        let f = CoeffSeq::from_real(&[0.0, -1.0]).unwrap();
        let m = spf_interpolation_order(&f, 2).unwrap();
        assert_eq!(m, 2);
    }

    #[test]
    fn interpolation_order_of_decaying_coeffs() {
        let coeffs: Vec<f64> = (0..8).map(|j| ((j + 2) as f64).powi(-2)).collect();
        let f = CoeffSeq::from_real(&coeffs).unwrap();
        assert!(spf_interpolation_order(&f, 6).unwrap() >= 6);
    }

    #[test]
    fn log_deriv_series_of_cubic() {
        let s = TaylorPolynomial::from_coeffs(vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let p = CPolynomial::from_taylor_half(&s).unwrap();
        let d = log_deriv_series(&p, 6);
        let expect = [0.0, 0.0, 3.0, 0.0, 0.0, -3.0, 0.0];
        for (got, want) in d.iter().zip(expect) {
            assert_relative_eq!(got.re, want, epsilon = 1e-12);
            assert!(got.im.abs() < 1e-12);
        }
    }

    #[test]
    fn exp_sum_at_origin_is_first_power_sum() {
        let lambdas: Vec<Complex64> = cubic_phases()
            .iter()
            .map(|&t| Complex64::from_polar(1.0, -t))
            .collect();
        let v = exp_sum_eval(&lambdas, c(0.0, 0.0));
        assert!(v.norm() <= 1e-14);
    }

    #[test]
    fn exp_sum_is_derivative_of_plain_exponential_sum() {
        let lambdas: Vec<Complex64> = [0.4, 2.0, 4.4]
            .iter()
            .map(|&t| Complex64::from_polar(1.0, t))
            .collect();
        let g = |z: Complex64| -> Complex64 { lambdas.iter().map(|&l| (l * z).exp()).sum() };
        let h = 1e-6;
        let fd = (g(c(h, 0.0)) - g(c(-h, 0.0))) / (2.0 * h);
        let direct = exp_sum_eval(&lambdas, c(0.0, 0.0));
        assert!((fd - direct).norm() <= 1e-8);
        assert!((direct - power_sum(&lambdas, 1)).norm() <= 1e-14);
    }

    #[test]
    fn exp_sum_bound_frozen_value() {
        assert_eq!(exp_sum_bound(1, 0.0, 0.5).unwrap(), 0.0);
        let want = 100.0 * (1.0 + core::f64::consts::E * core::f64::consts::E);
        assert_relative_eq!(exp_sum_bound(1, 1.0, 0.5).unwrap(), want, epsilon = 1e-9);
        assert!(exp_sum_bound(1, 1.0, 1.0).is_err());
    }

    #[test]
    fn exp_sum_bound_monotone_in_radius() {
        let mut prev = 0.0;
        for k in 1..=30 {
            let v = exp_sum_bound(3, 0.1 * k as f64, 0.9).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn generator_series_validation() {
        assert!(HSeries::new(vec![c(1.0, 0.0), c(0.5, 0.0)], 1.0).is_ok());
        // zero interior coefficient
        assert!(HSeries::new(vec![c(1.0, 0.0), c(0.0, 0.0)], 1.0).is_err());
        // above the declared bound
        assert!(HSeries::new(vec![c(2.0, 0.0)], 1.0).is_err());
        // first-kind: zero constant term is fine
        let h = HSeries::new(vec![c(0.0, 0.0), c(1.0, 0.0)], 1.0).unwrap();
        assert!(h.is_first_kind());
    }

    #[test]
    fn h_sum_at_origin_scales_first_power_sum() {
        let h = HSeries::new(vec![c(2.0, 0.0), c(1.0, 0.0)], 2.0).unwrap();
        let lambdas: Vec<Complex64> = [0.4, 2.0, 4.4]
            .iter()
            .map(|&t| Complex64::from_polar(1.0, t))
            .collect();
        let v = h_sum_eval(&h, &lambdas, c(0.0, 0.0)).unwrap();
        let want = c(2.0, 0.0) * power_sum(&lambdas, 1);
        assert!((v.value - want).norm() <= 1e-14);
        assert_eq!(v.truncation_bound, 0.0);
    }

    #[test]
    fn geometric_generator_reproduces_simple_fractions() {
        // h(z) = 1/(z-1) has h_j = -1 for all j; then Σ λ_k h(λ_k z) is
        // exactly the simple partial fraction over the roots
        let coeffs: Vec<f64> = (0..4).map(|j| ((j + 2) as f64).powi(-2)).collect();
        let f = CoeffSeq::from_real(&coeffs).unwrap();
        let h = HSeries::new(vec![c(-1.0, 0.0); 120], 1.0).unwrap();
        let rep = h_sum_build(&f.negated(), &h, 3).unwrap();
        for &zre in &[0.1, 0.35, 0.6] {
            let z = c(zre, 0.2 * zre);
            let hv = h_sum_eval(&h, rep.lambdas(), z).unwrap();
            let sv = spf_eval(rep.root_phases(), z).unwrap();
            assert!(
                (hv.value - sv).norm() <= 1e-9 * (1.0 + sv.norm()) + hv.truncation_bound,
                "z = {z}"
            );
        }
    }

    #[test]
    fn h_sum_build_targets_ratio() {
        // f_j = h_j (j+2)^{-2} targets a_j = (j+2)^{-2}
        let h = HSeries::new(
            vec![c(0.5, 0.0), c(0.0, 0.8), c(-0.7, 0.1), c(0.3, -0.3)],
            1.0,
        )
        .unwrap();
        let f = CoeffSeq::new(
            (0..4)
                .map(|j| h.coeff(j) * ((j + 2) as f64).powi(-2))
                .collect(),
        )
        .unwrap();
        let rep = h_sum_build(&f, &h, 4).unwrap();
        for j in 0..4 {
            let want = c(((j + 2) as f64).powi(-2), 0.0);
            let got = power_sum(rep.lambdas(), (j + 1) as u32);
            assert!((got - want).norm() <= 1e-9);
        }
    }

    #[test]
    fn h_sum_build_rejects_zero_divisor() {
        let h = HSeries::new(vec![c(0.0, 0.0), c(1.0, 0.0)], 1.0).unwrap();
        let f = CoeffSeq::from_real(&[0.25, 0.1]).unwrap();
        assert!(matches!(
            h_sum_build(&f, &h, 2),
            Err(Error::InvalidGenerator { index: 0, .. })
        ));
    }

    #[test]
    fn first_kind_identity_generator() {
        // h(z) = z gives Σ h(λ_k z) = z·S₁
        let h = HSeries::new(vec![c(0.0, 0.0), c(1.0, 0.0)], 1.0).unwrap();
        let lambdas: Vec<Complex64> = [0.4, 2.0, 4.4]
            .iter()
            .map(|&t| Complex64::from_polar(1.0, t))
            .collect();
        let z = c(0.3, -0.1);
        let v = h_sum_first_kind_eval(&h, &lambdas, z).unwrap();
        let want = z * power_sum(&lambdas, 1);
        assert!((v.value - want).norm() <= 1e-14);
        let at_zero = h_sum_first_kind_eval(&h, &lambdas, c(0.0, 0.0)).unwrap();
        assert!(at_zero.value.norm() <= 1e-15);
    }

    #[test]
    fn first_kind_requires_vanishing_constant() {
        let h = HSeries::new(vec![c(1.0, 0.0), c(1.0, 0.0)], 1.0).unwrap();
        let lambdas = [c(1.0, 0.0)];
        assert!(matches!(
            h_sum_first_kind_eval(&h, &lambdas, c(0.1, 0.0)),
            Err(Error::InvalidGenerator { index: 0, .. })
        ));
    }

    #[test]
    fn h_sum_rejects_points_outside_disk() {
        let h = HSeries::new(vec![c(1.0, 0.0), c(1.0, 0.0)], 1.0).unwrap();
        let lambdas = [c(1.0, 0.0)];
        assert!(matches!(
            h_sum_eval(&h, &lambdas, c(1.0, 0.0)),
            Err(Error::OutOfDomain { .. })
        ));
    }

    #[test]
    fn plain_h_sum_bound_holds_on_grid() {
        let h = HSeries::new(
            (0..40)
                .map(|j| Complex64::from_polar(0.35 + 0.6 * ((j * 7 % 11) as f64 / 11.0), 0.9 * j as f64))
                .collect(),
            1.0,
        )
        .unwrap();
        let f = CoeffSeq::new(
            (0..10)
                .map(|j| {
                    h.coeff(j)
                        * Complex64::from_polar(0.8 * ((j + 2) as f64).powi(-2), 1.7 * j as f64)
                })
                .collect(),
        )
        .unwrap();
        let n = 3;
        let rep = h_sum_build(&f, &h, n).unwrap();
        for ir in 1..=4 {
            let radius = 0.6 * ir as f64 / 4.0;
            let bound = h_sum_bound(n, radius, h.m_bound()).unwrap();
            for ia in 0..24 {
                let z = Complex64::from_polar(radius, TAU * ia as f64 / 24.0);
                let hv = h_sum_eval(&h, rep.lambdas(), z).unwrap();
                let err = (hv.value - eval_poly(f.coeffs(), z)).norm();
                assert!(err <= bound, "err {err} above bound {bound} at z = {z}");
            }
        }
    }

    #[test]
    fn first_kind_reduction_factors_out_z() {
        // H⁽¹⁾(λ;z) - f(z) = z(H̃(λ;z) - f̃(z)) with shifted generator and
        // targets
        let h_shift = vec![c(0.9, 0.1), c(-0.4, 0.6), c(0.5, 0.0), c(0.2, -0.5)];
        let mut h1 = vec![c(0.0, 0.0)];
        h1.extend_from_slice(&h_shift);
        let h1 = HSeries::new(h1, 1.0).unwrap();
        let ht = HSeries::new(h_shift, 1.0).unwrap();

        let ft_coeffs = vec![c(0.2, 0.05), c(-0.1, 0.1), c(0.05, -0.02)];
        let mut f1_coeffs = vec![c(0.0, 0.0)];
        f1_coeffs.extend_from_slice(&ft_coeffs);
        let f1 = CoeffSeq::new(f1_coeffs).unwrap();
        let ft = CoeffSeq::new(ft_coeffs).unwrap();

        let rep = h_sum_first_kind_build(&f1, &h1, 3).unwrap();
        let z = c(0.25, 0.2);
        let lhs = h_sum_first_kind_eval(&h1, rep.lambdas(), z).unwrap().value
            - eval_poly(f1.coeffs(), z);
        let rhs = z
            * (h_sum_eval(&ht, rep.lambdas(), z).unwrap().value - eval_poly(ft.coeffs(), z));
        assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));
    }

    #[test]
    fn closed_form_bounds_reject_bad_domains() {
        assert!(h_sum_bound(0, 0.5, 1.0).is_err());
        assert!(h_sum_bound(2, 1.0, 1.0).is_err());
        assert!(h_sum_first_kind_bound(2, -0.1, 1.0).is_err());
        assert!(h_sum_bound_params(2, 0.5, 1.0, 0.6, 0.2).is_err()); // |z| >= r - eps
        assert!(h_sum_bound_params(2, 0.1, 1.0, 0.6, 0.2).is_ok());
    }

    #[test]
    fn estimate_order_of_trivial_input() {
        let f = CoeffSeq::from_real(&[0.0]).unwrap();
        let p = BoundParams::new(0.5, 0.25, 0.5).unwrap();
        assert_eq!(estimate_disk_bound_order(&f, &p, 8).unwrap(), 1);
    }

    #[test]
    fn estimate_order_reports_search_exhaustion() {
        // huge targets never meet the subdisk bound at tiny orders
        let f = CoeffSeq::from_real(&[-6.0]).unwrap();
        let p = BoundParams::new(0.5, 0.25, 0.5).unwrap();
        assert!(matches!(
            estimate_disk_bound_order(&f, &p, 2),
            Err(Error::OrderNotCertified { n_max: 2, .. })
        ));
    }
}
