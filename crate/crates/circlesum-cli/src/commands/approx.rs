//! `circlesum approx`: error sweeps for the three approximation schemes.

use std::f64::consts::TAU;
use std::path::Path;

use circlesum_core::approx::{
    estimate_disk_bound_order, exp_sum_bound, exp_sum_eval, h_sum_bound, h_sum_build, h_sum_eval,
    h_sum_first_kind_bound, h_sum_first_kind_build, h_sum_first_kind_eval, spf_bound_bounded_coeff,
    spf_bound_disk, spf_interpolation_order, HSeries,
};
use circlesum_core::{
    disk_zero_free, eval_poly, exp_antiderivative_taylor, represent, roots_on_circle,
    smallest_zero_free_order, BoundParams, CPolynomial, CoeffSeq, Complex64,
};
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::jsonio::{
    check_n_cap, complex_pairs, pair, parse_complex_vec, parse_complex_vec_or_random, read_json,
    optional_f64, optional_usize, require_usize, write_output,
};
use crate::ApproxMode;

pub fn run(mode: ApproxMode, input: &Path, out: Option<&Path>, seed: u64) -> Result<(), Failure> {
    let job = read_json(input)?;
    let doc = match mode {
        ApproxMode::Spf => spf(&job, seed)?,
        ApproxMode::Exp => exp(&job, seed)?,
        ApproxMode::Hsum => hsum(&job, seed)?,
    };
    write_output(&doc, out)
}

fn decay_hypothesis(f: &CoeffSeq) -> bool {
    f.coeffs()
        .iter()
        .enumerate()
        .all(|(j, c)| c.norm() <= ((j + 2) as f64).powi(-2) * (1.0 + 1e-12))
}

fn bound_params(job: &Value) -> Result<Option<BoundParams>, Failure> {
    match job.get("params") {
        None => Ok(None),
        Some(p) => {
            let r = optional_f64(p, "r", 0.5)?;
            let eps = optional_f64(p, "eps", 0.25)?;
            let a = optional_f64(p, "a_radius", 0.5)?;
            Ok(Some(BoundParams::new(r, eps, a)?))
        }
    }
}

/// Simple partial fractions: sup of `|P'/P - f|` on circles, the pointwise
/// bound when the decay hypothesis holds, interpolation order, and the
/// advisory smallest order meeting the subdisk bound.
fn spf(job: &Value, seed: u64) -> Result<Value, Failure> {
    let n = require_usize(job, "n")?;
    check_n_cap(n)?;
    let f = CoeffSeq::new(parse_complex_vec_or_random(job, "f", seed)?)?;
    let radii = match job.get("radii") {
        None => vec![0.2, 0.5, 0.8],
        Some(v) => v
            .as_array()
            .ok_or_else(|| Failure::usage("`radii` must be an array of numbers"))?
            .iter()
            .map(|x| {
                x.as_f64()
                    .filter(|r| (0.0..1.0).contains(r))
                    .ok_or_else(|| Failure::usage("`radii` entries must be numbers in [0, 1)"))
            })
            .collect::<Result<Vec<f64>, _>>()?,
    };
    let angles = optional_usize(job, "angles", 720)?.max(1);

    let s = exp_antiderivative_taylor(&f, n)?;
    if !disk_zero_free(&s)? {
        let n0 = smallest_zero_free_order(&f, usize::max(2 * n, 32)).ok();
        return Err(Failure::Precondition(
            format!("Taylor section at n={n} has zeros in the closed unit disk"),
            json!({ "n": n, "n0": n0 }),
        ));
    }
    let p = CPolynomial::from_taylor_half(&s)?;
    let phases = roots_on_circle(&p)?;
    let n0 = smallest_zero_free_order(&f, n)?;
    let interp = spf_interpolation_order(&f, n)?;
    let hypothesis = decay_hypothesis(&f);

    let mut sweeps = Vec::with_capacity(radii.len());
    for &radius in &radii {
        let mut sup = 0.0f64;
        for k in 0..angles {
            let z = Complex64::from_polar(radius, TAU * k as f64 / angles as f64);
            let d = (p.eval_deriv(z) / p.eval(z) - eval_poly(f.coeffs(), z)).norm();
            sup = sup.max(d);
        }
        let bound = if hypothesis && n >= 1 {
            Some(spf_bound_bounded_coeff(n, radius)?)
        } else {
            None
        };
        sweeps.push(json!({
            "radius": radius,
            "sup_error": sup,
            "bound_bounded_coeff": bound,
        }));
    }

    let disk_bound = match bound_params(job)? {
        None => Value::Null,
        Some(params) => {
            let value = spf_bound_disk(n, &params)?;
            let advisory_order = estimate_disk_bound_order(&f, &params, n).ok();
            json!({
                "a_radius": params.a_radius(),
                "eps": params.eps(),
                "value": value,
                "advisory_order": advisory_order,
            })
        }
    };

    Ok(json!({
        "command": "approx",
        "mode": "spf",
        "n": n,
        "n0": n0,
        "f": complex_pairs(f.coeffs()),
        "interp_order": interp,
        "phases": phases.phases(),
        "bounded_hypothesis": hypothesis,
        "sweeps": sweeps,
        "disk_bound": disk_bound,
    }))
}

/// Exponential sums: `Σ λ_k e^{λ_k z}` vs `f(z) = Σ p_j z^j/j!` over a
/// polar grid, against the whole-plane bound.
fn exp(job: &Value, seed: u64) -> Result<Value, Failure> {
    let n = require_usize(job, "n")?;
    check_n_cap(n)?;
    let p = parse_complex_vec_or_random(job, "p", seed)?;
    let r = optional_f64(job, "r", 0.9)?;
    let max_abs = optional_f64(job, "max_abs", 3.0)?;
    let radial = optional_usize(job, "radial", 20)?.max(1);
    let angular = optional_usize(job, "angular", 20)?.max(1);
    if max_abs <= 0.0 || max_abs.is_nan() {
        return Err(Failure::usage("`max_abs` must be positive"));
    }

    let targets = CoeffSeq::new(p.clone())?;
    let rep = represent(&targets, n)?;
    let f = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::default();
        let mut term = Complex64::new(1.0, 0.0);
        for (j, &pj) in p.iter().enumerate() {
            if j > 0 {
                term = term * z / j as f64;
            }
            acc += pj * term;
        }
        acc
    };

    let mut max_error = 0.0f64;
    let mut max_ratio = 0.0f64;
    let mut worst = json!(null);
    for ir in 1..=radial {
        let radius = max_abs * ir as f64 / radial as f64;
        let bound = exp_sum_bound(n, radius, r)?;
        for ia in 0..angular {
            let z = Complex64::from_polar(radius, TAU * ia as f64 / angular as f64);
            let err = (exp_sum_eval(rep.lambdas(), z) - f(z)).norm();
            max_error = max_error.max(err);
            if bound > 0.0 && err / bound > max_ratio {
                max_ratio = err / bound;
                worst = json!({ "z": pair(z), "error": err, "bound": bound });
            }
        }
    }

    Ok(json!({
        "command": "approx",
        "mode": "exp",
        "n": n,
        "n0": rep.n0_used(),
        "r": r,
        "p": complex_pairs(&p),
        "lambdas": complex_pairs(rep.lambdas()),
        "residual_head": rep.residual_head(),
        "max_error": max_error,
        "max_error_over_bound": max_ratio,
        "worst": worst,
        "bound_satisfied": max_ratio <= 1.0,
    }))
}

/// `h`-sums (plain or first-kind) against the closed-form bound on a disk
/// grid.
fn hsum(job: &Value, seed: u64) -> Result<Value, Failure> {
    let n = require_usize(job, "n")?;
    check_n_cap(n)?;
    let f = CoeffSeq::new(parse_complex_vec_or_random(job, "f", seed)?)?;
    let h_doc = job
        .get("h")
        .ok_or_else(|| Failure::usage("missing field `h`"))?;
    let h_coeffs = parse_complex_vec(h_doc, "coeffs")?;
    let m_bound = optional_f64(h_doc, "m_bound", 1.0)?;
    let h = HSeries::new(h_coeffs, m_bound)?;
    let first_kind = job
        .get("first_kind")
        .map(|v| v.as_bool().ok_or_else(|| Failure::usage("`first_kind` must be a boolean")))
        .transpose()?
        .unwrap_or(false);
    let radius_max = optional_f64(job, "radius", 0.6)?;
    if !(0.0 < radius_max && radius_max < 1.0) {
        return Err(Failure::usage("`radius` must lie in (0, 1)"));
    }
    let radial = optional_usize(job, "radial", 4)?.max(1);
    let angular = optional_usize(job, "angular", 24)?.max(1);

    let rep = if first_kind {
        h_sum_first_kind_build(&f, &h, n)?
    } else {
        h_sum_build(&f, &h, n)?
    };

    let mut max_error = 0.0f64;
    let mut max_ratio = 0.0f64;
    let mut max_truncation = 0.0f64;
    for ir in 1..=radial {
        let radius = radius_max * ir as f64 / radial as f64;
        let bound = if first_kind {
            h_sum_first_kind_bound(n, radius, h.m_bound())?
        } else {
            h_sum_bound(n, radius, h.m_bound())?
        };
        for ia in 0..angular {
            let z = Complex64::from_polar(radius, TAU * ia as f64 / angular as f64);
            let value = if first_kind {
                h_sum_first_kind_eval(&h, rep.lambdas(), z)?
            } else {
                h_sum_eval(&h, rep.lambdas(), z)?
            };
            let err = (value.value - eval_poly(f.coeffs(), z)).norm();
            max_error = max_error.max(err);
            max_truncation = max_truncation.max(value.truncation_bound);
            if bound > 0.0 {
                max_ratio = max_ratio.max(err / bound);
            }
        }
    }

    Ok(json!({
        "command": "approx",
        "mode": "hsum",
        "n": n,
        "n0": rep.n0_used(),
        "first_kind": first_kind,
        "m_bound": h.m_bound(),
        "lambdas": complex_pairs(rep.lambdas()),
        "residual_head": rep.residual_head(),
        "max_error": max_error,
        "max_error_over_bound": max_ratio,
        "max_truncation_bound": max_truncation,
        "bound_satisfied": max_ratio <= 1.0,
    }))
}
