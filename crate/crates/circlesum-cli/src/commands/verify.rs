//! `circlesum verify`: re-checks a previously emitted certificate.
//!
//! Power sums are recomputed two independent ways (directly from the
//! emitted points, and by Newton's identities on the expanded monic
//! polynomial `∏(z - λ_k)`), then compared against each other and against
//! the targets. Exit code 0 means every check passed, 1 carries the index
//! of the first violated sum.

use std::path::Path;

use circlesum_core::{oracle, power_sum, tol, Complex64, SymmetricFunctions};
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::jsonio::{parse_complex_vec, read_json, require_usize, write_output};

/// Accepted unimodularity defect on emitted points.
const UNIMODULAR_TOL: f64 = 1e-12;

struct Certificate {
    n: usize,
    lambdas: Vec<Complex64>,
    targets: Vec<Complex64>,
}

fn load(doc: &Value) -> Result<Certificate, Failure> {
    let n = require_usize(doc, "n")?;
    if doc.get("lambdas").is_some() {
        let lambdas = parse_complex_vec(doc, "lambdas")?;
        let targets = match doc.get("a") {
            Some(_) => parse_complex_vec(doc, "a")?,
            None => vec![Complex64::default(); n],
        };
        return Ok(Certificate {
            n,
            lambdas,
            targets,
        });
    }
    if let (Some(phases), Some(nu)) = (doc.get("phases"), doc.get("nu")) {
        let phases = phases
            .as_array()
            .ok_or_else(|| Failure::usage("`phases` must be an array of numbers"))?
            .iter()
            .map(|v| v.as_f64().ok_or_else(|| Failure::usage("`phases` entries must be numbers")))
            .collect::<Result<Vec<f64>, _>>()?;
        let nu = nu
            .as_u64()
            .ok_or_else(|| Failure::usage("`nu` must be an integer"))? as usize;
        if nu < 1 || nu > n {
            return Err(Failure::usage(format!("nu = {nu} outside 1..={n}")));
        }
        let lambdas = phases
            .iter()
            .map(|&t| Complex64::from_polar(1.0, -t))
            .collect();
        let mut targets = vec![Complex64::default(); n];
        targets[nu - 1] = Complex64::new(1.0, 0.0);
        return Ok(Certificate {
            n,
            lambdas,
            targets,
        });
    }
    Err(Failure::usage(
        "document carries no verifiable certificate (need `lambdas` or `phases` + `nu`)",
    ))
}

pub fn run(input: &Path) -> Result<(), Failure> {
    let doc = read_json(input)?;
    let cert = load(&doc)?;
    let n = cert.n;
    let big_n = 2 * n + 1;
    if cert.lambdas.len() != big_n {
        return Err(Failure::usage(format!(
            "certificate carries {} points, expected N = {big_n}",
            cert.lambdas.len()
        )));
    }

    let max_unimodular_defect = cert
        .lambdas
        .iter()
        .map(|l| (l.norm() - 1.0).abs())
        .fold(0.0, f64::max);

    let mut min_gap = f64::INFINITY;
    for i in 0..cert.lambdas.len() {
        for j in i + 1..cert.lambdas.len() {
            min_gap = min_gap.min((cert.lambdas[i] - cert.lambdas[j]).norm());
        }
    }

    let max_abs_target = cert.targets.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let head_tol = tol::head_tol(n, max_abs_target);
    let mut max_head = 0.0f64;
    let mut first_violation: Option<usize> = None;
    for j in 0..n {
        let target = cert.targets.get(j).copied().unwrap_or_default();
        let d = (power_sum(&cert.lambdas, (j + 1) as u32) - target).norm();
        max_head = max_head.max(d);
        if d > head_tol && first_violation.is_none() {
            first_violation = Some(j);
        }
    }

    // independent route: expand ∏(z - λ_k) and run Newton's identities
    let monic = oracle::monic_from_roots(&cert.lambdas);
    let sums = SymmetricFunctions::from_monic(&monic)
        .map_err(|e| Failure::Numerical(e.to_string()))?
        .power_sums(n);
    let mut max_route = 0.0f64;
    for (idx, s) in sums.iter().enumerate() {
        let direct = power_sum(&cert.lambdas, (idx + 1) as u32);
        let d = (direct - s).norm();
        max_route = max_route.max(d / (1.0 + s.norm()));
    }

    // distinctness guard in chord length, matching the phase separation
    let gap_tol = 2.0 * (0.5 * tol::SEPARATION_TOL).sin();
    let ok = max_unimodular_defect <= UNIMODULAR_TOL
        && min_gap > gap_tol
        && first_violation.is_none()
        && max_route <= tol::ROUTE_AGREEMENT_TOL;

    let report = json!({
        "command": "verify",
        "ok": ok,
        "n": n,
        "N": big_n,
        "max_unimodular_defect": max_unimodular_defect,
        "min_point_gap": min_gap,
        "max_head_residual": max_head,
        "head_tol": head_tol,
        "max_route_discrepancy": max_route,
        "route_tol": tol::ROUTE_AGREEMENT_TOL,
        "first_violation_j": first_violation,
    });
    if ok {
        write_output(&report, None)
    } else {
        Err(Failure::VerifyFail(report))
    }
}
