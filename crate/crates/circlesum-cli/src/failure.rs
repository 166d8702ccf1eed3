//! Exit-code contract and error mapping.
//!
//! 0 ok, 1 verify-fail, 2 precondition, 3 numerical failure, 64 usage or
//! schema error. Core errors are classified by what the caller can do
//! about them: fix the job document (64), raise `n` or change targets (2),
//! or treat the instance as numerically out of reach (3).

use circlesum_core::Error as CoreError;
use serde_json::{json, Value};

pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Precondition(String, Value),
    Numerical(String),
    VerifyFail(Value),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Precondition(..) => EXIT_PRECONDITION,
            Failure::Numerical(_) => EXIT_NUMERICAL,
            Failure::VerifyFail(_) => EXIT_VERIFY_FAIL,
        }
    }

    /// Structured diagnostics for stderr.
    pub fn diagnostics(&self) -> Value {
        match self {
            Failure::Usage(msg) => json!({ "error": "usage", "message": msg }),
            Failure::Precondition(msg, extra) => {
                json!({ "error": "precondition", "message": msg, "details": extra })
            }
            Failure::Numerical(msg) => json!({ "error": "numerical", "message": msg }),
            Failure::VerifyFail(report) => {
                json!({ "error": "verification-failed", "report": report })
            }
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::ZeroInDisk { n, n0 } => {
                Failure::Precondition(msg, json!({ "n": n, "n0": n0 }))
            }
            CoreError::DegreeTooSmall { n, min } => {
                Failure::Precondition(msg, json!({ "n": n, "min": min }))
            }
            CoreError::ZeroFreeOrderNotFound { n_max } => {
                Failure::Precondition(msg, json!({ "n_max": n_max }))
            }
            CoreError::Borderline { .. }
            | CoreError::RootCount { .. }
            | CoreError::RootResidual { .. }
            | CoreError::RootSeparation { .. }
            | CoreError::CertificateMismatch { .. }
            | CoreError::OrderNotCertified { .. }
            | CoreError::PoleProximity { .. }
            | CoreError::NonFinite => Failure::Numerical(msg),
            CoreError::EmptyCoeffs
            | CoreError::InvalidParameter { .. }
            | CoreError::InvalidGenerator { .. }
            | CoreError::DegreeMismatch { .. }
            | CoreError::HarmonicOutOfRange { .. }
            | CoreError::CostGuard { .. }
            | CoreError::HypothesisViolation { .. }
            | CoreError::OutOfDomain { .. } => Failure::Usage(msg),
        }
    }
}
