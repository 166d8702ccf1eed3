//! The representation pipeline: from targets `a₀..a_{n-1}` to `N = 2n+1`
//! distinct unimodular points whose power sums reproduce the targets, with
//! residual certificates and computable tail bounds.
//!
//! The head identities `S_{j+1}(λ) = a_j`, `j < n`, hold whenever the
//! Taylor section at the working order is zero-free on the closed disk.
//! Two tail-bound families are provided for `j >= n`:
//!
//! ```text
//! free params:    r^{n+1} (r-ε)^{-j} / (2ε(1-r)),       0 < ε < r < 1
//! bounded coeff:  r^{n-j}/(1-r^{n+1}) · (15n + 30/(1-r)),   0 < r < 1
//! ```
//!
//! The second is certified for every `n >= 1` under the decay hypothesis
//! `|a_j| <= (j+2)^{-2}`; the first holds for all large enough `n` (the
//! threshold is not computable from finitely many coefficients, so callers
//! should treat it as advisory unless the decay hypothesis is detected).

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::cpoly::{disk_zero_free, roots_on_circle, smallest_zero_free_order, CPolynomial};
use crate::error::{Error, Result};
use crate::oracle;
use crate::series::{exp_antiderivative_taylor, CoeffSeq};
use crate::tol;

/// Free parameters of the analytic bounds.
///
/// Invariants: `0 < eps < r < 1` and `0 < a_radius < 1`; uses that
/// additionally need `a_radius + eps < 1` check it at the call site.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    r: f64,
    eps: f64,
    a_radius: f64,
}

impl BoundParams {
    pub fn new(r: f64, eps: f64, a_radius: f64) -> Result<Self> {
        if !(0.0 < eps && eps < r && r < 1.0) {
            return Err(Error::InvalidParameter {
                what: "need 0 < eps < r < 1",
            });
        }
        if !(0.0 < a_radius && a_radius < 1.0) {
            return Err(Error::InvalidParameter {
                what: "need 0 < a_radius < 1",
            });
        }
        Ok(Self { r, eps, a_radius })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn a_radius(&self) -> f64 {
        self.a_radius
    }
}

impl Default for BoundParams {
    fn default() -> Self {
        Self {
            r: 0.5,
            eps: 0.25,
            a_radius: 0.5,
        }
    }
}

/// A constructed unit-weight representation: the certificate that
/// `S_{j+1}(λ) = a_j` for `j < n` over `N = 2n+1` distinct unimodular
/// points.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    n: usize,
    a: CoeffSeq,
    lambdas: Vec<Complex64>,
    root_phases: Vec<f64>,
    residual_head: f64,
    n0_used: usize,
}

impl Representation {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of representation points, `N = 2n + 1`.
    pub fn point_count(&self) -> usize {
        2 * self.n + 1
    }

    /// The unimodular points `λ_k = e^{-iθ_k}`.
    pub fn lambdas(&self) -> &[Complex64] {
        &self.lambdas
    }

    /// Sorted phases `θ_k` of the polynomial roots `z_k = e^{iθ_k}`
    /// (`λ_k` are their conjugates).
    pub fn root_phases(&self) -> &[f64] {
        &self.root_phases
    }

    /// The targets this representation was built for.
    pub fn targets(&self) -> &CoeffSeq {
        &self.a
    }

    /// Measured `max_{j<n} |S_{j+1}(λ) - a_j|`.
    pub fn residual_head(&self) -> f64 {
        self.residual_head
    }

    /// Smallest certifiably admissible truncation order found.
    pub fn n0_used(&self) -> usize {
        self.n0_used
    }

    /// `S_{j+1}(λ) - a_j`, with targets extended by zeros beyond their
    /// stored length.
    pub fn tail_residual(&self, j: usize) -> Complex64 {
        power_sum(&self.lambdas, (j + 1) as u32) - self.a.coeff(j)
    }
}

/// Plain power sum `S_ν(λ) = λ₁^ν + … + λ_N^ν` for `ν >= 1`.
///
/// Each `λ_k^ν` is formed by repeated squaring, keeping this computation
/// independent of the Newton-identities route used for cross-checking.
pub fn power_sum(lambdas: &[Complex64], nu: u32) -> Complex64 {
    lambdas.iter().map(|l| l.powu(nu)).sum()
}

/// Builds the representation `λ(n; {a_j})`.
///
/// Requires the Taylor section of `exp(∫f)`, `f_j = -a_j`, to be zero-free
/// on the closed unit disk at the working order `n`; otherwise fails with
/// the smallest admissible order in the error when one exists. The head
/// identities are checked against [`tol::head_tol`] and cross-checked
/// against power sums recomputed from the polynomial coefficients by
/// Newton's identities.
pub fn represent(a: &CoeffSeq, n: usize) -> Result<Representation> {
    if n < 1 {
        return Err(Error::InvalidParameter { what: "n must be >= 1" });
    }
    let f = a.negated();
    let s = exp_antiderivative_taylor(&f, n)?;
    if !disk_zero_free(&s)? {
        let n0 = smallest_zero_free_order(&f, usize::max(2 * n, 32)).ok();
        return Err(Error::ZeroInDisk { n, n0 });
    }
    let n0_used = smallest_zero_free_order(&f, n)?;

    let p = CPolynomial::from_taylor_half(&s)?;
    let circle = roots_on_circle(&p)?;
    let lambdas: Vec<Complex64> = circle
        .phases()
        .iter()
        .map(|&t| Complex64::from_polar(1.0, -t))
        .collect();

    let head_tol = tol::head_tol(n, a.max_abs());
    let mut residual_head = 0.0f64;
    for j in 0..n {
        let d = (power_sum(&lambdas, (j + 1) as u32) - a.coeff(j)).norm();
        if d > head_tol {
            return Err(Error::CertificateMismatch { j, discrepancy: d });
        }
        residual_head = residual_head.max(d);
    }

    let newton = oracle::newton_power_sums(&p, 2 * n);
    for (idx, s_coeff) in newton.iter().enumerate() {
        let direct = power_sum(&lambdas, (idx + 1) as u32);
        let d = (direct - s_coeff).norm();
        if d > tol::ROUTE_AGREEMENT_TOL * (1.0 + s_coeff.norm()) {
            return Err(Error::CertificateMismatch {
                j: idx,
                discrepancy: d,
            });
        }
    }

    Ok(Representation {
        n,
        a: a.clone(),
        lambdas,
        root_phases: circle.phases().to_vec(),
        residual_head,
        n0_used,
    })
}

/// Tail bound `r^{n+1} (r-ε)^{-j} / (2ε(1-r))` for `j >= n`, free
/// parameters `0 < ε < r < 1`.
pub fn tail_bound_free_params(n: usize, j: usize, p: &BoundParams) -> Result<f64> {
    if j < n {
        return Err(Error::InvalidParameter { what: "need j >= n" });
    }
    let (r, eps) = (p.r(), p.eps());
    Ok(r.powi(n as i32 + 1) * (r - eps).powi(-(j as i32)) / (2.0 * eps * (1.0 - r)))
}

/// Tail bound `r^{n-j}/(1-r^{n+1}) · (15n + 30/(1-r))` for `j >= n`, any
/// `r ∈ (0,1)`, certified under the decay hypothesis `|a_j| <= (j+2)^{-2}`.
pub fn tail_bound_bounded_coeff(n: usize, j: usize, r: f64) -> Result<f64> {
    if j < n {
        return Err(Error::InvalidParameter { what: "need j >= n" });
    }
    if !(0.0 < r && r < 1.0) {
        return Err(Error::InvalidParameter { what: "need 0 < r < 1" });
    }
    let nf = n as f64;
    Ok(r.powi(n as i32 - j as i32) / (1.0 - r.powi(n as i32 + 1))
        * (15.0 * nf + 30.0 / (1.0 - r)))
}

/// Which tail-bound formula to optimize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailBoundFamily {
    /// `r^{n+1}(r-ε)^{-j}/(2ε(1-r))` over `0 < ε < r < 1`.
    FreeParams,
    /// `r^{n-j}/(1-r^{n+1})·(15n+30/(1-r))` over `0 < r < 1`.
    BoundedCoeff,
}

/// Result of minimizing a tail bound over its free parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub value: f64,
    pub r: f64,
    /// Present for the free-parameter family only.
    pub eps: Option<f64>,
}

const GOLDEN_TOL: f64 = 1e-4;

fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > GOLDEN_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Minimizes the selected tail bound over its parameters: coarse grid
/// (`r` in steps of 0.05, ten `ε` points per `r`), then golden-section
/// refinement to 1e-4.
pub fn best_tail_bound(n: usize, j: usize, family: TailBoundFamily) -> Result<TailBound> {
    if j < n {
        return Err(Error::InvalidParameter { what: "need j >= n" });
    }
    match family {
        TailBoundFamily::BoundedCoeff => {
            let eval = |r: f64| {
                tail_bound_bounded_coeff(n, j, r).unwrap_or(f64::INFINITY)
            };
            let mut best_r = 0.05;
            let mut best = eval(best_r);
            for i in 1..19 {
                let r = 0.05 + 0.05 * i as f64;
                let v = eval(r);
                if v < best {
                    best = v;
                    best_r = r;
                }
            }
            let lo = (best_r - 0.05).max(1e-6);
            let hi = (best_r + 0.05).min(1.0 - 1e-6);
            let refined_r = golden_min(eval, lo, hi);
            let refined = eval(refined_r);
            Ok(if refined <= best {
                TailBound {
                    value: refined,
                    r: refined_r,
                    eps: None,
                }
            } else {
                TailBound {
                    value: best,
                    r: best_r,
                    eps: None,
                }
            })
        }
        TailBoundFamily::FreeParams => {
            let eval = |r: f64, eps: f64| {
                if 0.0 < eps && eps < r && r < 1.0 {
                    r.powi(n as i32 + 1) * (r - eps).powi(-(j as i32)) / (2.0 * eps * (1.0 - r))
                } else {
                    f64::INFINITY
                }
            };
            let mut grid_value = f64::INFINITY;
            let (mut grid_r, mut grid_eps) = (0.5, 0.25);
            for i in 1..=19 {
                let r = 0.05 * i as f64;
                for k in 1..=10 {
                    let eps = r * k as f64 / 11.0;
                    let v = eval(r, eps);
                    if v < grid_value {
                        grid_value = v;
                        grid_r = r;
                        grid_eps = eps;
                    }
                }
            }
            // two coordinate sweeps of golden-section refinement
            let (mut r, mut eps) = (grid_r, grid_eps);
            for _ in 0..2 {
                eps = golden_min(|e| eval(r, e), 1e-6, r - 1e-6);
                let lo = (eps + 1e-6).max(r - 0.05);
                let hi = (r + 0.05).min(1.0 - 1e-6);
                if lo < hi {
                    r = golden_min(|rr| eval(rr, eps), lo, hi);
                }
            }
            let refined = eval(r, eps);
            Ok(if refined <= grid_value {
                TailBound {
                    value: refined,
                    r,
                    eps: Some(eps),
                }
            } else {
                TailBound {
                    value: grid_value,
                    r: grid_r,
                    eps: Some(grid_eps),
                }
            })
        }
    }
}
