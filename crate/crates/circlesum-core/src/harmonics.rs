//! Integration-free harmonic extraction from real trigonometric signals.
//!
//! For a zero-mean real signal `T(t) = Σ_{m=1}^{n} a_m cos(mt) + b_m sin(mt)`
//! there is a universal phase set `t_1..t_N`, `N = 2n+1`, depending only
//! on `(n, ν)` and never on the coefficients, such that
//!
//! ```text
//! τ_ν(t) = Σ_{k=1}^{N} T(t - t_k)
//! ```
//!
//! reproduces the ν-th harmonic exactly. The phases are the root phases of
//! the representation with targets `a_{ν-1} = 1`, all others zero; the
//! power-sum certificate `S_ν(λ) = 1`, `S_j(λ) = 0` for `j ∈ {1..n}\{ν}`
//! (with `λ_k = e^{-it_k}`) is what makes every other harmonic cancel.
//! Linear combinations of initial harmonics work the same way with targets
//! `a_{m-1} = γ_m`.
//!
//! Only `n >= 2` is supported; extraction from a degree-1 signal is not
//! meaningful for this construction.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::cpoly::smallest_zero_free_order;
use crate::error::{Error, Result};
use crate::represent::{represent, Representation};
use crate::series::CoeffSeq;

/// Real zero-mean trigonometric signal; index `m-1` holds the coefficients
/// of the `m`-th harmonic `a_m cos(mt) + b_m sin(mt)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl TrigPolynomial {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::InvalidParameter {
                what: "cosine and sine coefficient lists must be non-empty and equal length",
            });
        }
        if a.iter().chain(b.iter()).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { a, b })
    }

    /// All-zero signal of the given degree.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter {
                what: "signal degree must be >= 1",
            });
        }
        Ok(Self {
            a: vec![0.0; n],
            b: vec![0.0; n],
        })
    }

    pub fn degree(&self) -> usize {
        self.a.len()
    }

    /// `(a_ν, b_ν)`; zero outside `1..=n`.
    pub fn harmonic(&self, nu: usize) -> (f64, f64) {
        if nu >= 1 && nu <= self.a.len() {
            (self.a[nu - 1], self.b[nu - 1])
        } else {
            (0.0, 0.0)
        }
    }

    pub fn cos_coeffs(&self) -> &[f64] {
        &self.a
    }

    pub fn sin_coeffs(&self) -> &[f64] {
        &self.b
    }

    /// `Σ(|a_m| + |b_m|)`, the scale extraction tolerances are relative to.
    pub fn coeff_mass(&self) -> f64 {
        self.a.iter().chain(self.b.iter()).map(|v| v.abs()).sum()
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for m in 1..=self.a.len() {
            let (s, c) = (m as f64 * t).sin_cos();
            acc += self.a[m - 1] * c + self.b[m - 1] * s;
        }
        acc
    }

    /// The single harmonic `τ_ν(t) = a_ν cos(νt) + b_ν sin(νt)`.
    pub fn harmonic_eval(&self, nu: usize, t: f64) -> f64 {
        let (a, b) = self.harmonic(nu);
        let (s, c) = (nu as f64 * t).sin_cos();
        a * c + b * s
    }
}

/// What an extraction operator isolates.
#[derive(Debug, Clone, PartialEq)]
pub enum ExtractionTarget {
    /// The single harmonic `τ_ν`; `q = ⌊n/ν⌋` is the order of the
    /// underlying truncated exponential section.
    Harmonic { nu: usize, q: usize },
    /// The combination `Σ_m γ_m τ_m` over the initial harmonics.
    Combination { gamma: Vec<Complex64> },
}

/// Universal phase set for one `(n, target)` pair, with its power-sum
/// certificate residual.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionOperator {
    n: usize,
    target: ExtractionTarget,
    phases: Vec<f64>,
    certificate_residual: f64,
}

impl ExtractionOperator {
    /// Signal degree the operator was built for.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of phase shifts, `N = 2n + 1`.
    pub fn phase_count(&self) -> usize {
        2 * self.n + 1
    }

    pub fn target(&self) -> &ExtractionTarget {
        &self.target
    }

    /// Sorted phases `t_k ∈ [0, 2π)`, pairwise distinct.
    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    /// Measured `max_j |S_j(λ) - target_j|` over `j ∈ 1..=n`.
    pub fn certificate_residual(&self) -> f64 {
        self.certificate_residual
    }

    /// The points `λ_k = e^{-i t_k}` behind the certificate.
    pub fn lambdas(&self) -> Vec<Complex64> {
        self.phases
            .iter()
            .map(|&t| Complex64::from_polar(1.0, -t))
            .collect()
    }

    fn accepts(&self, signal_degree: usize) -> bool {
        match self.target {
            // single-harmonic cancellation is certified exactly at the
            // operator's degree
            ExtractionTarget::Harmonic { .. } => signal_degree == self.n,
            // combinations cancel every harmonic above ñ up to n, so any
            // signal of degree <= n pairs correctly
            ExtractionTarget::Combination { .. } => signal_degree <= self.n,
        }
    }
}

fn operator_from_representation(
    n: usize,
    target: ExtractionTarget,
    rep: Representation,
) -> ExtractionOperator {
    ExtractionOperator {
        n,
        target,
        phases: rep.root_phases().to_vec(),
        certificate_residual: rep.residual_head(),
    }
}

/// Universal phase set extracting the ν-th harmonic from degree-`n`
/// signals. Requires `n >= 2` and `1 <= ν <= n`.
pub fn extraction_phases(n: usize, nu: usize) -> Result<ExtractionOperator> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    if nu < 1 || nu > n {
        return Err(Error::HarmonicOutOfRange { nu, n });
    }
    let mut targets = vec![Complex64::default(); n];
    targets[nu - 1] = Complex64::new(1.0, 0.0);
    let rep = represent(&CoeffSeq::new(targets)?, n)?;
    Ok(operator_from_representation(
        n,
        ExtractionTarget::Harmonic { nu, q: n / nu },
        rep,
    ))
}

/// Phase set extracting `Σ_m γ_m τ_m` (`m = 1..ñ`) from signals of degree
/// up to the operator's working degree `max(n*, ñ, 2)`, where `n*` is the
/// smallest admissible truncation order for the combination targets.
///
/// Pad `gamma` with zeros to raise the working degree when the operator
/// must accept higher-degree signals. The `n*` search is capped at
/// `n_max`; large `|γ|` may push `n*` beyond any practical cap, which
/// surfaces as [`Error::ZeroFreeOrderNotFound`].
pub fn combination_phases(gamma: &[Complex64], n_max: usize) -> Result<ExtractionOperator> {
    if gamma.is_empty() {
        return Err(Error::EmptyCoeffs);
    }
    if gamma.iter().any(|g| !g.re.is_finite() || !g.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if gamma.iter().all(|g| *g == Complex64::default()) {
        return Err(Error::InvalidParameter {
            what: "at least one combination weight must be nonzero",
        });
    }
    let f = CoeffSeq::new(gamma.iter().map(|g| -g).collect())?;
    let n_star = smallest_zero_free_order(&f, n_max)?;
    let n = n_star.max(gamma.len()).max(2);
    let mut targets = vec![Complex64::default(); n];
    targets[..gamma.len()].copy_from_slice(gamma);
    let rep = represent(&CoeffSeq::new(targets)?, n)?;
    Ok(operator_from_representation(
        n,
        ExtractionTarget::Combination {
            gamma: gamma.to_vec(),
        },
        rep,
    ))
}

/// Applies the operator: `Σ_k T(t - t_k)`.
///
/// Equals `τ_ν(t)` (or the γ-combination) within
/// [`crate::tol::extract_tol`] for any coefficients of `T`; the phase set
/// never looks at them.
pub fn extract_harmonic(signal: &TrigPolynomial, op: &ExtractionOperator, t: f64) -> Result<f64> {
    if !op.accepts(signal.degree()) {
        return Err(Error::DegreeMismatch {
            op_n: op.n,
            signal_n: signal.degree(),
        });
    }
    Ok(op.phases.iter().map(|&tk| signal.eval(t - tk)).sum())
}

/// Fourier coefficients without integration:
/// `a_ν = Σ_k T(-t_k)`, `b_ν = Σ_k T(π/(2ν) - t_k)`.
pub fn fourier_coeffs(signal: &TrigPolynomial, nu: usize) -> Result<(f64, f64)> {
    let n = signal.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    if nu < 1 || nu > n {
        return Err(Error::HarmonicOutOfRange { nu, n });
    }
    let op = operator_for(n, nu)?;
    let a = extract_harmonic(signal, &op, 0.0)?;
    let b = extract_harmonic(signal, &op, core::f64::consts::FRAC_PI_2 / nu as f64)?;
    Ok((a, b))
}

#[cfg(feature = "std")]
fn operator_for(n: usize, nu: usize) -> Result<alloc::sync::Arc<ExtractionOperator>> {
    extraction_phases_cached(n, nu)
}

#[cfg(not(feature = "std"))]
fn operator_for(n: usize, nu: usize) -> Result<ExtractionOperator> {
    extraction_phases(n, nu)
}

/// Process-wide cache of single-harmonic phase sets, keyed by `(n, ν)`
/// exactly. Safe for concurrent reads with exclusive insertion.
#[cfg(feature = "std")]
pub fn extraction_phases_cached(
    n: usize,
    nu: usize,
) -> Result<alloc::sync::Arc<ExtractionOperator>> {
    use alloc::sync::Arc;
    use std::collections::BTreeMap;
    use std::sync::{OnceLock, RwLock};

    type PhaseCache = RwLock<BTreeMap<(usize, usize), Arc<ExtractionOperator>>>;

    static CACHE: OnceLock<PhaseCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(BTreeMap::new()));
    if let Some(op) = cache.read().expect("cache lock").get(&(n, nu)) {
        return Ok(op.clone());
    }
    let op = Arc::new(extraction_phases(n, nu)?);
    let mut write = cache.write().expect("cache lock");
    Ok(write.entry((n, nu)).or_insert(op).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::represent::power_sum;
    use crate::tol;
    use approx::assert_relative_eq;
    use core::f64::consts::{PI, TAU};
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn operator_certificate_for_second_harmonic() {
        // n = 2, ν = 2: section 1 - z²/2, reflected to
        // 1 - z²/2 - z³/2 + z⁵; S₂(λ) = 1, S₁(λ) = 0
        let op = extraction_phases(2, 2).unwrap();
        assert_eq!(op.phase_count(), 5);
        assert_eq!(
            op.target(),
            &ExtractionTarget::Harmonic { nu: 2, q: 1 }
        );
        let lambdas = op.lambdas();
        assert!(power_sum(&lambdas, 1).norm() <= 1e-10);
        assert!((power_sum(&lambdas, 2) - c(1.0, 0.0)).norm() <= 1e-10);
        assert!(op.certificate_residual() <= 1e-10);
    }

    #[test]
    fn operator_for_first_harmonic_uses_full_section() {
        // ν = 1 has q = n: the alternating-factorial section
        let op = extraction_phases(2, 1).unwrap();
        assert_eq!(
            op.target(),
            &ExtractionTarget::Harmonic { nu: 1, q: 2 }
        );
        let lambdas = op.lambdas();
        assert!((power_sum(&lambdas, 1) - c(1.0, 0.0)).norm() <= 1e-10);
        assert!(power_sum(&lambdas, 2).norm() <= 1e-10);
    }

    #[test]
    fn operator_rejects_degenerate_degrees() {
        assert_eq!(
            extraction_phases(1, 1),
            Err(Error::DegreeTooSmall { n: 1, min: 2 })
        );
        assert_eq!(
            extraction_phases(3, 4),
            Err(Error::HarmonicOutOfRange { nu: 4, n: 3 })
        );
        assert_eq!(
            extraction_phases(3, 0),
            Err(Error::HarmonicOutOfRange { nu: 0, n: 3 })
        );
    }

    #[test]
    fn phases_are_conjugate_symmetric() {
        // real polynomial coefficients pair roots conjugately
        let op = extraction_phases(4, 2).unwrap();
        for &t in op.phases() {
            let mirrored = (TAU - t) % TAU;
            assert!(
                op.phases().iter().any(|&u| {
                    let d = (u - mirrored).abs();
                    d <= 1e-9 || (TAU - d) <= 1e-9
                }),
                "no mirror partner for {t}"
            );
        }
    }

    #[test]
    fn extracts_first_harmonic_of_two_cosines() {
        let signal = TrigPolynomial::new(vec![1.0, 1.0], vec![0.0, 0.0]).unwrap();
        let op = extraction_phases(2, 1).unwrap();
        for j in 0..100 {
            let t = TAU * j as f64 / 100.0;
            let got = extract_harmonic(&signal, &op, t).unwrap();
            assert_relative_eq!(got, t.cos(), epsilon = 1e-8);
        }
    }

    #[test]
    fn extracts_from_zero_signal() {
        let signal = TrigPolynomial::zero(3).unwrap();
        let op = extraction_phases(3, 2).unwrap();
        for j in 0..32 {
            let t = TAU * j as f64 / 32.0;
            assert!(extract_harmonic(&signal, &op, t).unwrap().abs() <= 1e-12);
        }
    }

    #[test]
    fn extracts_third_harmonic_of_degree_five_signal() {
        let a = vec![0.3, -0.9, 0.25, 0.7, -0.45];
        let b = vec![-0.8, 0.1, 0.95, -0.2, 0.6];
        let signal = TrigPolynomial::new(a, b).unwrap();
        let op = extraction_phases(5, 3).unwrap();
        let tol = tol::extract_tol(5, signal.coeff_mass());
        for j in 0..128 {
            let t = TAU * j as f64 / 128.0;
            let got = extract_harmonic(&signal, &op, t).unwrap();
            let want = signal.harmonic_eval(3, t);
            assert!((got - want).abs() <= tol);
        }
    }

    #[test]
    fn extraction_rejects_mismatched_degree() {
        let signal = TrigPolynomial::zero(3).unwrap();
        let op = extraction_phases(2, 1).unwrap();
        assert_eq!(
            extract_harmonic(&signal, &op, 0.0),
            Err(Error::DegreeMismatch { op_n: 2, signal_n: 3 })
        );
    }

    #[test]
    fn fourier_coeffs_recover_known_harmonic() {
        // 3cos(2t) + 4sin(2t) embedded at degree 2
        let signal = TrigPolynomial::new(vec![0.0, 3.0], vec![0.0, 4.0]).unwrap();
        let (a, b) = fourier_coeffs(&signal, 2).unwrap();
        assert_relative_eq!(a, 3.0, epsilon = 1e-8);
        assert_relative_eq!(b, 4.0, epsilon = 1e-8);
    }

    #[test]
    fn fourier_coeffs_of_absent_harmonic_vanish() {
        // cos t embedded at degree 2 has no second harmonic
        let signal = TrigPolynomial::new(vec![1.0, 0.0], vec![0.0, 0.0]).unwrap();
        let (a, b) = fourier_coeffs(&signal, 2).unwrap();
        assert!(a.abs() <= 1e-8 && b.abs() <= 1e-8);
    }

    #[test]
    fn fourier_coeffs_recover_random_degree_four_signal() {
        let a = vec![0.12, -0.7, 0.33, 0.54];
        let b = vec![0.91, 0.08, -0.62, 0.27];
        let signal = TrigPolynomial::new(a.clone(), b.clone()).unwrap();
        for nu in 1..=4 {
            let (ga, gb) = fourier_coeffs(&signal, nu).unwrap();
            assert_relative_eq!(ga, a[nu - 1], epsilon = 1e-8);
            assert_relative_eq!(gb, b[nu - 1], epsilon = 1e-8);
        }
    }

    #[test]
    fn fourier_coeffs_match_quadrature() {
        // periodic trapezoid (= rectangle) rule over 4096 points of
        // (1/π)∫ T(t)·cos(νt) dt and the sine companion
        let a = vec![0.12, -0.7, 0.33, 0.54];
        let b = vec![0.91, 0.08, -0.62, 0.27];
        let signal = TrigPolynomial::new(a, b).unwrap();
        let m = 4096usize;
        for nu in 1..=4 {
            let (ga, gb) = fourier_coeffs(&signal, nu).unwrap();
            let mut qa = 0.0;
            let mut qb = 0.0;
            for k in 0..m {
                let t = TAU * k as f64 / m as f64;
                let v = signal.eval(t);
                let (s, c) = (nu as f64 * t).sin_cos();
                qa += v * c;
                qb += v * s;
            }
            let scale = 2.0 / m as f64;
            qa *= scale;
            qb *= scale;
            assert!((ga - qa).abs() <= 1e-7, "a_{nu}: {ga} vs {qa}");
            assert!((gb - qb).abs() <= 1e-7, "b_{nu}: {gb} vs {qb}");
        }
    }

    #[test]
    fn combination_single_weight_matches_single_harmonic_targets() {
        let op = combination_phases(&[c(1.0, 0.0)], 16).unwrap();
        // γ = [1] targets S₁ = 1, S_j = 0 above: same certificate as the
        // ν = 1 operator at the same working degree
        let lambdas = op.lambdas();
        assert!((power_sum(&lambdas, 1) - c(1.0, 0.0)).norm() <= 1e-9);
        for j in 2..=op.n() {
            assert!(power_sum(&lambdas, j as u32).norm() <= 1e-9);
        }
    }

    #[test]
    fn combination_unit_slot_matches_extraction_targets() {
        let gamma = [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let op = combination_phases(&gamma, 16).unwrap();
        let lambdas = op.lambdas();
        assert!(power_sum(&lambdas, 1).norm() <= 1e-9);
        assert!(power_sum(&lambdas, 2).norm() <= 1e-9);
        assert!((power_sum(&lambdas, 3) - c(1.0, 0.0)).norm() <= 1e-9);
    }

    #[test]
    fn combination_certificate_for_padded_weights() {
        // padding γ with zeros raises the working degree to 4
        let gamma = [c(1.0, 0.0), c(0.0, 0.5), c(0.0, 0.0), c(0.0, 0.0)];
        let op = combination_phases(&gamma, 16).unwrap();
        assert_eq!(op.n(), 4);
        let lambdas = op.lambdas();
        assert!((power_sum(&lambdas, 1) - c(1.0, 0.0)).norm() <= 1e-9);
        assert!((power_sum(&lambdas, 2) - c(0.0, 0.5)).norm() <= 1e-9);
        assert!(power_sum(&lambdas, 3).norm() <= 1e-9);
        assert!(power_sum(&lambdas, 4).norm() <= 1e-9);
    }

    #[test]
    fn combination_extracts_weighted_pair() {
        let gamma = [c(2.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let op = combination_phases(&gamma, 16).unwrap();
        let a = vec![0.4, -0.3, 0.8, 0.15];
        let b = vec![-0.25, 0.6, -0.1, 0.7];
        let signal = TrigPolynomial::new(a, b).unwrap();
        let tol = tol::extract_tol(op.n(), signal.coeff_mass());
        for j in 0..64 {
            let t = TAU * j as f64 / 64.0;
            let got = extract_harmonic(&signal, &op, t).unwrap();
            let want =
                2.0 * signal.harmonic_eval(1, t) - signal.harmonic_eval(2, t);
            assert!((got - want).abs() <= tol);
        }
    }

    #[test]
    fn combination_rejects_zero_weights() {
        assert!(matches!(
            combination_phases(&[c(0.0, 0.0)], 8),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn combination_surfaces_unreachable_order() {
        // weights this large keep the section zero-bearing for small caps
        let gamma = [c(6.0, 0.0)];
        assert_eq!(
            combination_phases(&gamma, 2),
            Err(Error::ZeroFreeOrderNotFound { n_max: 2 })
        );
    }

    #[cfg(feature = "std")]
    #[test]
    fn cached_operators_are_shared() {
        let a = extraction_phases_cached(6, 2).unwrap();
        let b = extraction_phases_cached(6, 2).unwrap();
        assert!(alloc::sync::Arc::ptr_eq(&a, &b));
        assert_eq!(a.phases(), extraction_phases(6, 2).unwrap().phases());
    }

    #[test]
    fn signal_validation() {
        assert!(TrigPolynomial::new(vec![], vec![]).is_err());
        assert!(TrigPolynomial::new(vec![1.0], vec![1.0, 2.0]).is_err());
        assert!(TrigPolynomial::new(vec![f64::NAN], vec![0.0]).is_err());
        assert!(TrigPolynomial::zero(0).is_err());
    }

    #[test]
    fn complex_coefficient_signals_extract_by_linearity() {
        // the operator is linear in the signal, so complex a_m, b_m reduce
        // to two real extractions
        let re = TrigPolynomial::new(vec![0.5, -0.2, 0.9], vec![0.1, 0.4, -0.6]).unwrap();
        let im = TrigPolynomial::new(vec![-0.3, 0.8, 0.2], vec![0.7, -0.5, 0.05]).unwrap();
        let op = extraction_phases(3, 2).unwrap();
        let mass = re.coeff_mass() + im.coeff_mass();
        let tol = tol::extract_tol(3, mass);
        for j in 0..48 {
            let t = TAU * j as f64 / 48.0;
            let got = Complex64::new(
                extract_harmonic(&re, &op, t).unwrap(),
                extract_harmonic(&im, &op, t).unwrap(),
            );
            let want = Complex64::new(re.harmonic_eval(2, t), im.harmonic_eval(2, t));
            assert!((got - want).norm() <= tol);
        }
    }

    #[test]
    fn pi_shift_alias_of_fourier_formula() {
        // b_ν formula evaluates the operator at π/(2ν)
        let signal = TrigPolynomial::new(vec![0.0, 0.0, 1.5], vec![0.0, 0.0, -2.5]).unwrap();
        let op = extraction_phases(3, 3).unwrap();
        let b = extract_harmonic(&signal, &op, PI / 6.0).unwrap();
        assert_relative_eq!(b, -2.5, epsilon = 1e-8);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn extraction_is_linear(
            coeffs in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 3),
            alpha in -2.0f64..2.0,
            beta in -2.0f64..2.0,
            t in 0.0f64..TAU
        ) {
            let u = TrigPolynomial::new(
                coeffs.iter().map(|&(x, _)| x).collect(),
                coeffs.iter().map(|&(_, y)| y).collect(),
            )
            .unwrap();
            let v = TrigPolynomial::new(
                coeffs.iter().map(|&(x, y)| x * y).collect(),
                coeffs.iter().map(|&(x, y)| x - y).collect(),
            )
            .unwrap();
            let mixed = TrigPolynomial::new(
                u.cos_coeffs()
                    .iter()
                    .zip(v.cos_coeffs())
                    .map(|(x, y)| alpha * x + beta * y)
                    .collect(),
                u.sin_coeffs()
                    .iter()
                    .zip(v.sin_coeffs())
                    .map(|(x, y)| alpha * x + beta * y)
                    .collect(),
            )
            .unwrap();
            let op = operator_for(3, 2).unwrap();
            let lhs = extract_harmonic(&mixed, &op, t).unwrap();
            let rhs = alpha * extract_harmonic(&u, &op, t).unwrap()
                + beta * extract_harmonic(&v, &op, t).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()));
        }

        #[test]
        fn certificate_residual_controls_extraction_error(
            coeffs in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4),
            t in 0.0f64..TAU
        ) {
            let signal = TrigPolynomial::new(
                coeffs.iter().map(|&(x, _)| x).collect(),
                coeffs.iter().map(|&(_, y)| y).collect(),
            )
            .unwrap();
            let op = operator_for(4, 3).unwrap();
            let got = extract_harmonic(&signal, &op, t).unwrap();
            let want = signal.harmonic_eval(3, t);
            let budget = op.phase_count() as f64
                * op.certificate_residual().max(1e-15)
                * signal.coeff_mass().max(1e-15);
            // |Θ - τ| <= Σ|2c_m| · max certificate deviation
            prop_assert!((got - want).abs() <= budget.max(1e-12));
        }
    }
}
