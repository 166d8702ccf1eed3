//! JSON plumbing: complex values travel as `[re, im]` pairs, documents are
//! read and written as `serde_json::Value` trees.

use std::fs;
use std::path::Path;

use circlesum_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::failure::Failure;

pub fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("{} is not valid JSON: {e}", path.display())))
}

pub fn write_output(doc: &Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(doc).expect("documents serialize");
    match out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

pub fn complex_pairs(values: &[Complex64]) -> Value {
    Value::Array(values.iter().map(|c| json!([c.re, c.im])).collect())
}

pub fn pair(c: Complex64) -> Value {
    json!([c.re, c.im])
}

fn parse_pair(v: &Value, field: &str, index: usize) -> Result<Complex64, Failure> {
    let arr = v.as_array().ok_or_else(|| {
        Failure::usage(format!("`{field}[{index}]` must be a [re, im] pair"))
    })?;
    if arr.len() != 2 {
        return Err(Failure::usage(format!(
            "`{field}[{index}]` must have exactly two entries"
        )));
    }
    let re = arr[0]
        .as_f64()
        .ok_or_else(|| Failure::usage(format!("`{field}[{index}][0]` must be a number")))?;
    let im = arr[1]
        .as_f64()
        .ok_or_else(|| Failure::usage(format!("`{field}[{index}][1]` must be a number")))?;
    Ok(Complex64::new(re, im))
}

pub fn parse_complex_vec(doc: &Value, field: &str) -> Result<Vec<Complex64>, Failure> {
    let v = doc
        .get(field)
        .ok_or_else(|| Failure::usage(format!("missing field `{field}`")))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Failure::usage(format!("`{field}` must be an array of [re, im] pairs")))?;
    arr.iter()
        .enumerate()
        .map(|(i, e)| parse_pair(e, field, i))
        .collect()
}

/// A complex-vector field that may instead ask for seeded generation:
/// `{"bounded_random": {"len": L}}` draws `a_j` uniformly from the disk of
/// radius `(j+2)^{-2}`.
pub fn parse_complex_vec_or_random(
    doc: &Value,
    field: &str,
    seed: u64,
) -> Result<Vec<Complex64>, Failure> {
    let v = doc
        .get(field)
        .ok_or_else(|| Failure::usage(format!("missing field `{field}`")))?;
    if let Some(request) = v.get("bounded_random") {
        let len = request
            .get("len")
            .and_then(Value::as_u64)
            .ok_or_else(|| Failure::usage(format!("`{field}.bounded_random.len` must be an integer")))?
            as usize;
        if len == 0 {
            return Err(Failure::usage(format!(
                "`{field}.bounded_random.len` must be >= 1"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return Ok((0..len)
            .map(|j| {
                let r: f64 = rng.gen();
                let t: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
                Complex64::from_polar(r * ((j + 2) as f64).powi(-2), t)
            })
            .collect());
    }
    parse_complex_vec(doc, field)
}

pub fn require_usize(doc: &Value, field: &str) -> Result<usize, Failure> {
    doc.get(field)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| Failure::usage(format!("missing or non-integer field `{field}`")))
}

pub fn optional_f64(doc: &Value, field: &str, default: f64) -> Result<f64, Failure> {
    match doc.get(field) {
        None => Ok(default),
        Some(v) => v
            .as_f64()
            .ok_or_else(|| Failure::usage(format!("`{field}` must be a number"))),
    }
}

pub fn optional_usize(doc: &Value, field: &str, default: usize) -> Result<usize, Failure> {
    match doc.get(field) {
        None => Ok(default),
        Some(v) => v
            .as_u64()
            .map(|v| v as usize)
            .ok_or_else(|| Failure::usage(format!("`{field}` must be a non-negative integer"))),
    }
}

/// Degree cap from `CIRCLESUM_MAX_N` (default 200).
pub fn max_n() -> Result<usize, Failure> {
    match std::env::var("CIRCLESUM_MAX_N") {
        Err(_) => Ok(200),
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::usage(format!("CIRCLESUM_MAX_N is not an integer: {s:?}"))),
    }
}

pub fn check_n_cap(n: usize) -> Result<(), Failure> {
    let cap = max_n()?;
    if n > cap {
        return Err(Failure::usage(format!(
            "n = {n} exceeds the configured cap CIRCLESUM_MAX_N = {cap}"
        )));
    }
    Ok(())
}
