//! Independent verification engines.
//!
//! Everything here recomputes quantities produced elsewhere in the crate by
//! a different algebraic route, for use in tests and certificate
//! validation. This module never calls the root finder or the
//! series recurrence it cross-checks: power sums come from Newton's
//! identities on polynomial coefficients, and the exponential series is
//! summed term by term as `Σ F^m/m!` with compensated accumulation.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::cpoly::CPolynomial;
use crate::error::{Error, Result};
use crate::series::CoeffSeq;

/// Cost guard for the brute-force exponential series.
pub const BRUTE_MAX_ORDER: usize = 64;

/// Elementary symmetric functions `e_1..e_N` of the conjugate-reciprocal
/// root multiset of a self-inversive polynomial.
///
/// The monic polynomial with roots `λ_k = 1/z_k` is the reversal of `P`
/// (monic because `P(0) = 1`), so `e_j = (-1)^j · c_j` reads the values
/// straight off `P`'s ascending coefficients without root extraction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricFunctions {
    e: Vec<Complex64>,
}

impl SymmetricFunctions {
    /// From a self-inversive polynomial, for the λ (reciprocal-root)
    /// multiset.
    pub fn from_cpolynomial(p: &CPolynomial) -> Self {
        let e = p
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| if j % 2 == 0 { c } else { -c })
            .collect();
        Self { e }
    }

    /// From an ascending monic coefficient vector `m₀ + m₁z + … + z^N`,
    /// for that polynomial's own root multiset.
    pub fn from_monic(coeffs: &[Complex64]) -> Result<Self> {
        let big_n = coeffs.len().checked_sub(1).ok_or(Error::EmptyCoeffs)?;
        if big_n == 0 {
            return Err(Error::InvalidParameter {
                what: "monic polynomial must have degree >= 1",
            });
        }
        let lead = coeffs[big_n];
        if (lead - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::InvalidParameter {
                what: "leading coefficient must be 1",
            });
        }
        let e = (1..=big_n)
            .map(|j| {
                let c = coeffs[big_n - j];
                if j % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Ok(Self { e })
    }

    pub fn values(&self) -> &[Complex64] {
        &self.e
    }

    /// Power sums `S_1..S_m` by Newton's identities:
    /// `S_k = e₁S_{k-1} - e₂S_{k-2} + … + (-1)^{k-1} k·e_k`, with `e_j = 0`
    /// for `j > N`.
    pub fn power_sums(&self, m: usize) -> Vec<Complex64> {
        let big_n = self.e.len();
        let mut s: Vec<Complex64> = Vec::with_capacity(m);
        for k in 1..=m {
            let mut acc = Complex64::default();
            for i in 1..=usize::min(k - 1, big_n) {
                let term = self.e[i - 1] * s[k - 1 - i];
                acc += if i % 2 == 1 { term } else { -term };
            }
            if k <= big_n {
                let term = self.e[k - 1] * k as f64;
                acc += if k % 2 == 1 { term } else { -term };
            }
            s.push(acc);
        }
        s
    }
}

/// Power sums `S_1..S_m` of the λ multiset of a self-inversive polynomial,
/// computed from coefficients alone.
pub fn newton_power_sums(p: &CPolynomial, m: usize) -> Vec<Complex64> {
    SymmetricFunctions::from_cpolynomial(p).power_sums(m)
}

/// Expands `∏(z - r_k)` into ascending monic coefficients.
pub fn monic_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::default(); coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= r * c;
        }
        coeffs = next;
    }
    coeffs
}

/// Neumaier-compensated accumulator.
#[derive(Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    corr: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.corr += (self.sum - t) + x;
        } else {
            self.corr += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(self) -> f64 {
        self.sum + self.corr
    }
}

#[derive(Clone, Copy, Default)]
struct CompensatedComplex {
    re: Compensated,
    im: Compensated,
}

impl CompensatedComplex {
    fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    fn add_product(&mut self, a: Complex64, b: Complex64) {
        self.re.add(a.re * b.re);
        self.re.add(-(a.im * b.im));
        self.im.add(a.re * b.im);
        self.im.add(a.im * b.re);
    }

    fn value(self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Product of two truncated series, compensated, keeping orders `0..=n`.
fn mul_truncated(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::default(); n + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut acc = CompensatedComplex::default();
        for j in 0..=k {
            if j < a.len() && k - j < b.len() {
                acc.add_product(a[j], b[k - j]);
            }
        }
        *slot = acc.value();
    }
    out
}

/// Brute-force oracle for the exponential of the antiderivative:
/// `Σ_{m=0}^{n} F^m / m!` truncated at order `n`, where `F_k = f_{k-1}/k`.
///
/// Independent of the `g' = f·g` recurrence. Guarded to `n <= 64`.
pub fn brute_exp_series(f: &CoeffSeq, n: usize) -> Result<CoeffSeq> {
    if n > BRUTE_MAX_ORDER {
        return Err(Error::CostGuard {
            n,
            max: BRUTE_MAX_ORDER,
        });
    }
    let mut antider = vec![Complex64::default(); n + 1];
    for (k, slot) in antider.iter_mut().enumerate().skip(1) {
        *slot = f.coeff(k - 1) / k as f64;
    }

    let mut acc = vec![CompensatedComplex::default(); n + 1];
    acc[0].add(Complex64::new(1.0, 0.0));
    // F has valuation >= 1, so F^m contributes nothing below order m.
    let mut power = vec![Complex64::default(); n + 1];
    power[0] = Complex64::new(1.0, 0.0);
    let mut factorial = 1.0f64;
    for m in 1..=n {
        power = mul_truncated(&power, &antider, n);
        factorial *= m as f64;
        let inv = 1.0 / factorial;
        for (slot, &coeff) in acc.iter_mut().zip(&power).skip(m) {
            slot.add(coeff * inv);
        }
    }
    CoeffSeq::new(acc.into_iter().map(CompensatedComplex::value).collect())
}

/// Checks the coefficient-decay implication for `g = exp(∫f)`: if
/// `|f_k| <= (k+2)^{-1-σ}` for all `k`, then `|g₁| <= 2^{-1-σ}` and
/// `|g_k| < (k+1)^{-1-σ}` for `k >= 2`.
///
/// The hypothesis is validated on the stored prefix (violations are input
/// errors, not a `false` result); the conclusion is tested on `g₁..g_n`
/// computed by the brute-force series.
pub fn exp_coeff_decay_holds(f: &CoeffSeq, sigma: f64, n: usize) -> Result<bool> {
    if sigma <= 0.0 || sigma.is_nan() {
        return Err(Error::InvalidParameter {
            what: "sigma must be positive",
        });
    }
    let slack = 1.0 + 1e-12;
    for k in 0..usize::min(f.len(), n + 1) {
        let bound = ((k + 2) as f64).powf(-1.0 - sigma);
        let v = f.coeff(k).norm();
        if v > bound * slack {
            return Err(Error::HypothesisViolation {
                index: k,
                value: v,
                bound,
            });
        }
    }
    let g = brute_exp_series(f, n)?;
    if n >= 1 && g.coeff(1).norm() > 2.0f64.powf(-1.0 - sigma) * slack {
        return Ok(false);
    }
    for k in 2..=n {
        if g.coeff(k).norm() >= ((k + 1) as f64).powf(-1.0 - sigma) * slack {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partial sum `Σ_{k=1}^{n} 1/k²`, accumulated smallest-first. The defect
/// from `π²/6` lies in `(0, 1/n]`.
pub fn zeta2_partial(n: usize) -> f64 {
    let mut sum = 0.0;
    for k in (1..=n).rev() {
        sum += 1.0 / (k as f64 * k as f64);
    }
    sum
}
