//! Power-series primitives.
//!
//! The central object is the truncated Taylor expansion of
//! `g(z) = exp(∫₀^z f(ζ)dζ)` for a given coefficient sequence `f`. Since
//! `g' = f·g`, the coefficients satisfy
//!
//! ```text
//! g₀ = 1,    k·g_k = Σ_{j=0}^{k-1} f_j · g_{k-1-j}
//! ```
//!
//! which is the recurrence implemented here. Missing high-order `f`
//! coefficients are treated as zero, so finite coefficient vectors plug in
//! directly.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Finite sequence of complex Taylor coefficients, index 0 = constant term.
///
/// Invariants: at least one entry, every entry finite.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSeq {
    coeffs: Vec<Complex64>,
}

impl CoeffSeq {
    /// Builds a sequence, rejecting empty input and non-finite entries.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor from real values.
    pub fn from_real(vals: &[f64]) -> Result<Self> {
        Self::new(vals.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Coefficient of `z^j`, zero beyond the stored length.
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: length >= 1
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Entrywise negation. Targets `a_j` enter the pipeline as `f_j = -a_j`.
    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Truncated Taylor expansion of `exp(∫₀^z f)`: coefficients `g₀..g_n` with
/// `g₀ = 1` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorPolynomial {
    g: Vec<Complex64>,
    n: usize,
}

impl TaylorPolynomial {
    /// Wraps raw coefficients; `coeffs[0]` must be exactly 1.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        if coeffs[0] != Complex64::new(1.0, 0.0) {
            return Err(Error::InvalidParameter {
                what: "constant term of a Taylor section must be 1",
            });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = coeffs.len() - 1;
        Ok(Self { g: coeffs, n })
    }

    /// Truncation order `n`; the coefficient vector has length `n + 1`.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.g
    }
}

/// Taylor coefficients `g₀..g_n` of `exp(∫₀^z f)` via the `g' = f·g`
/// recurrence.
///
/// `f` coefficients beyond the stored length count as zero. Fails if the
/// recurrence produces non-finite values (wildly growing inputs).
pub fn exp_antiderivative_taylor(f: &CoeffSeq, n: usize) -> Result<TaylorPolynomial> {
    let mut g = vec![Complex64::default(); n + 1];
    g[0] = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        let mut acc = Complex64::default();
        for j in 0..k {
            acc += f.coeff(j) * g[k - 1 - j];
        }
        g[k] = acc / k as f64;
        if !g[k].re.is_finite() || !g[k].im.is_finite() {
            return Err(Error::NonFinite);
        }
    }
    Ok(TaylorPolynomial { g, n })
}

/// Horner evaluation of a polynomial given by ascending coefficients.
pub fn eval_poly(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::default(), |acc, &c| acc * z + c)
}

/// Derivative of the polynomial at `z`.
pub fn eval_deriv(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(Complex64::default(), |acc, (k, &c)| acc * z + c * k as f64)
}
