//! `circlesum represent`: targets in, certificate out.

use std::path::Path;

use circlesum_core::{
    best_tail_bound, represent, tol, CoeffSeq, TailBoundFamily,
};
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::jsonio::{
    check_n_cap, complex_pairs, pair, parse_complex_vec, read_json, require_usize, write_output,
};

/// Number of tail indices reported beyond the head.
const TAIL_SPAN: usize = 20;

pub fn run(input: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let job = read_json(input)?;
    let doc = build(&job)?;
    write_output(&doc, out)
}

/// Detects the decay hypothesis `|a_j| <= (j+2)^{-2}` that certifies the
/// bounded-coefficient tail bounds for every n.
fn decay_hypothesis(a: &CoeffSeq) -> bool {
    a.coeffs()
        .iter()
        .enumerate()
        .all(|(j, c)| c.norm() <= ((j + 2) as f64).powi(-2) * (1.0 + 1e-12))
}

pub fn build(job: &Value) -> Result<Value, Failure> {
    let n = require_usize(job, "n")?;
    check_n_cap(n)?;
    let a = CoeffSeq::new(parse_complex_vec(job, "a")?).map_err(Failure::from)?;
    if a.len() < n {
        return Err(Failure::usage(format!(
            "`a` has {} entries but n = {n} head identities were requested",
            a.len()
        )));
    }
    let rep = represent(&a, n)?;

    let certified = decay_hypothesis(&a);
    let family = if certified {
        TailBoundFamily::BoundedCoeff
    } else {
        TailBoundFamily::FreeParams
    };
    let mut tail = Vec::with_capacity(TAIL_SPAN + 1);
    for j in n..=n + TAIL_SPAN {
        let value = rep.tail_residual(j);
        let bound = best_tail_bound(n, j, family)?;
        tail.push(json!({
            "j": j,
            "value": pair(value),
            "modulus": value.norm(),
            "bound": bound.value,
            "r_opt": bound.r,
            "eps_opt": bound.eps,
            "satisfied": value.norm() <= bound.value,
        }));
    }

    Ok(json!({
        "command": "represent",
        "n": n,
        "N": rep.point_count(),
        "n0": rep.n0_used(),
        "a": complex_pairs(a.coeffs()),
        "lambdas": complex_pairs(rep.lambdas()),
        "root_phases": rep.root_phases(),
        "residual_head": rep.residual_head(),
        "head_tol": tol::head_tol(n, a.max_abs()),
        "tail_family": if certified { "bounded-coeff" } else { "free-params" },
        // free-params tails are advisory below the (non-computable)
        // uniform-bound threshold order
        "tail_certified": certified,
        "tail_bounds": tail,
    }))
}
