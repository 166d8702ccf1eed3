//! Error type shared by every module of the crate.

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while building or evaluating a
/// representation.
///
/// Variants are deliberately fine-grained so that callers (the CLI in
/// particular) can distinguish precondition violations from numerical
/// failures and from malformed inputs.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input coefficient, or an intermediate result, is NaN or infinite.
    NonFinite,
    /// A coefficient sequence must hold at least one entry.
    EmptyCoeffs,
    /// A scalar parameter is outside its admissible domain.
    InvalidParameter { what: &'static str },
    /// Zero-freeness of the Taylor section on the closed disk cannot be
    /// decided: the minimum boundary modulus sits inside the guard band.
    Borderline { min_modulus: f64 },
    /// No truncation order up to `n_max` has a zero-free Taylor section.
    ZeroFreeOrderNotFound { n_max: usize },
    /// The Taylor section at the working order has zeros in the closed unit
    /// disk, so the circle-root construction does not apply. `n0` carries
    /// the smallest certifiably admissible order when one was found.
    ZeroInDisk { n: usize, n0: Option<usize> },
    /// The sign-change scan did not resolve the expected number of circle
    /// roots even at the densest grid.
    RootCount { expected: usize, found: usize },
    /// A refined root fails the residual tolerance.
    RootResidual { residual: f64, tol: f64 },
    /// Two refined phases are closer than the separation guard.
    RootSeparation { gap: f64, tol: f64 },
    /// Power sums from the roots disagree with the certificate target or
    /// with the coefficient-side cross-check at index `j`.
    CertificateMismatch { j: usize, discrepancy: f64 },
    /// Evaluation point is too close to a pole.
    PoleProximity { distance: f64 },
    /// Evaluation point lies outside the domain of analyticity.
    OutOfDomain { what: &'static str },
    /// A generator coefficient `h_j` is missing, zero where it must not be,
    /// or nonzero where it must vanish.
    InvalidGenerator { index: usize, reason: &'static str },
    /// An extraction operator was paired with a signal of the wrong degree.
    DegreeMismatch { op_n: usize, signal_n: usize },
    /// Requested harmonic index is outside `1..=n`.
    HarmonicOutOfRange { nu: usize, n: usize },
    /// The construction needs a larger degree than requested.
    DegreeTooSmall { n: usize, min: usize },
    /// A cost guard on an oracle computation was exceeded.
    CostGuard { n: usize, max: usize },
    /// An input violates the decay hypothesis it promised to satisfy.
    HypothesisViolation { index: usize, value: f64, bound: f64 },
    /// The empirical order search exhausted `n_max` without the measured
    /// sup-error meeting the bound.
    OrderNotCertified {
        n_max: usize,
        last_sup: f64,
        last_bound: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => write!(f, "non-finite coefficient or value"),
            Error::EmptyCoeffs => write!(f, "coefficient sequence must be non-empty"),
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
            Error::Borderline { min_modulus } => write!(
                f,
                "zero-freeness indeterminate: boundary modulus {min_modulus:.3e} inside guard band"
            ),
            Error::ZeroFreeOrderNotFound { n_max } => {
                write!(f, "no zero-free truncation order found up to n_max={n_max}")
            }
            Error::ZeroInDisk { n, n0 } => match n0 {
                Some(n0) => write!(
                    f,
                    "Taylor section at n={n} has zeros in the closed unit disk (smallest admissible order is {n0})"
                ),
                None => write!(
                    f,
                    "Taylor section at n={n} has zeros in the closed unit disk (no admissible order found in search range)"
                ),
            },
            Error::RootCount { expected, found } => {
                write!(f, "expected {expected} circle roots, resolved {found}")
            }
            Error::RootResidual { residual, tol } => {
                write!(f, "root residual {residual:.3e} exceeds tolerance {tol:.3e}")
            }
            Error::RootSeparation { gap, tol } => {
                write!(f, "phase gap {gap:.3e} below separation tolerance {tol:.3e}")
            }
            Error::CertificateMismatch { j, discrepancy } => write!(
                f,
                "power-sum certificate violated at index {j} (discrepancy {discrepancy:.3e})"
            ),
            Error::PoleProximity { distance } => {
                write!(f, "evaluation point within {distance:.3e} of a pole")
            }
            Error::OutOfDomain { what } => write!(f, "out of domain: {what}"),
            Error::InvalidGenerator { index, reason } => {
                write!(f, "invalid generator coefficient h_{index}: {reason}")
            }
            Error::DegreeMismatch { op_n, signal_n } => write!(
                f,
                "operator built for degree {op_n} paired with signal of degree {signal_n}"
            ),
            Error::HarmonicOutOfRange { nu, n } => {
                write!(f, "harmonic index {nu} outside 1..={n}")
            }
            Error::DegreeTooSmall { n, min } => {
                write!(f, "degree n={n} too small, need n >= {min}")
            }
            Error::CostGuard { n, max } => {
                write!(f, "order {n} exceeds oracle cost guard {max}")
            }
            Error::HypothesisViolation { index, value, bound } => write!(
                f,
                "coefficient {index} has modulus {value:.3e}, above the promised bound {bound:.3e}"
            ),
            Error::OrderNotCertified {
                n_max,
                last_sup,
                last_bound,
            } => write!(
                f,
                "no order up to {n_max} met the bound (last sup {last_sup:.3e} vs bound {last_bound:.3e})"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
