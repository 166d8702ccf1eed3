//! Signal file format.
//!
//! Header line `n=<int>`, then either coefficient rows or sample rows
//! (`#` starts a comment, blank lines are skipped):
//!
//! ```text
//! n=3            n=3
//! 1 1.0 0.0      0.00  1.93
//! 2 3.0 4.0      0.45  0.11
//! 3 0.0 0.5      ...   (at least 2n+1 rows: t value)
//! ```
//!
//! Coefficient rows are `m a_m b_m` with each `m` in `1..=n` at most once;
//! missing harmonics are zero. Sample rows `t T(t)` are fitted by least
//! squares over the `2n` basis functions `cos(mt), sin(mt)`.

use std::fs;
use std::path::Path;

use circlesum_core::TrigPolynomial;
use nalgebra::{DMatrix, DVector};

use crate::failure::Failure;

pub fn parse_signal(path: &Path) -> Result<TrigPolynomial, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines().map(str::trim).filter(|l| {
        !l.is_empty() && !l.starts_with('#')
    });

    let header = lines
        .next()
        .ok_or_else(|| Failure::usage("signal file is empty"))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Failure::usage(format!("expected header `n=<int>`, got {header:?}")))?;
    if n == 0 {
        return Err(Failure::usage("signal degree must be >= 1"));
    }

    let mut coeff_rows: Vec<(usize, f64, f64)> = Vec::new();
    let mut sample_rows: Vec<(f64, f64)> = Vec::new();
    for (idx, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.len() {
            3 => {
                let m: usize = fields[0].parse().map_err(|_| {
                    Failure::usage(format!("row {}: harmonic index must be an integer", idx + 2))
                })?;
                let a: f64 = parse_num(fields[1], idx)?;
                let b: f64 = parse_num(fields[2], idx)?;
                coeff_rows.push((m, a, b));
            }
            2 => {
                let t: f64 = parse_num(fields[0], idx)?;
                let v: f64 = parse_num(fields[1], idx)?;
                sample_rows.push((t, v));
            }
            _ => {
                return Err(Failure::usage(format!(
                    "row {}: expected `m a b` or `t value`, got {line:?}",
                    idx + 2
                )))
            }
        }
    }

    match (coeff_rows.is_empty(), sample_rows.is_empty()) {
        (false, false) => Err(Failure::usage(
            "signal file mixes coefficient rows and sample rows",
        )),
        (true, true) => {
            // no rows at all: the zero signal of degree n
            TrigPolynomial::zero(n).map_err(Failure::from)
        }
        (false, true) => from_coeff_rows(n, &coeff_rows),
        (true, false) => fit_samples(n, &sample_rows),
    }
}

fn parse_num(s: &str, row: usize) -> Result<f64, Failure> {
    s.parse::<f64>()
        .map_err(|_| Failure::usage(format!("row {}: {s:?} is not a number", row + 2)))
}

fn from_coeff_rows(n: usize, rows: &[(usize, f64, f64)]) -> Result<TrigPolynomial, Failure> {
    let mut a = vec![0.0; n];
    let mut b = vec![0.0; n];
    let mut seen = vec![false; n];
    for &(m, am, bm) in rows {
        if m < 1 || m > n {
            return Err(Failure::usage(format!(
                "harmonic index {m} outside 1..={n}"
            )));
        }
        if seen[m - 1] {
            return Err(Failure::usage(format!("harmonic {m} listed twice")));
        }
        seen[m - 1] = true;
        a[m - 1] = am;
        b[m - 1] = bm;
    }
    TrigPolynomial::new(a, b).map_err(Failure::from)
}

fn fit_samples(n: usize, samples: &[(f64, f64)]) -> Result<TrigPolynomial, Failure> {
    let needed = 2 * n + 1;
    if samples.len() < needed {
        return Err(Failure::usage(format!(
            "need at least {needed} samples to recover a degree-{n} signal, got {}",
            samples.len()
        )));
    }
    let rows = samples.len();
    let cols = 2 * n;
    let mut design = DMatrix::zeros(rows, cols);
    let mut rhs = DVector::zeros(rows);
    for (i, &(t, v)) in samples.iter().enumerate() {
        for m in 1..=n {
            let (s, c) = (m as f64 * t).sin_cos();
            design[(i, m - 1)] = c;
            design[(i, n + m - 1)] = s;
        }
        rhs[i] = v;
    }
    let svd = design.svd(true, true);
    let x = svd
        .solve(&rhs, 1e-12)
        .map_err(|e| Failure::Numerical(format!("least-squares fit failed: {e}")))?;
    let a: Vec<f64> = (0..n).map(|k| x[k]).collect();
    let b: Vec<f64> = (0..n).map(|k| x[n + k]).collect();
    TrigPolynomial::new(a, b).map_err(Failure::from)
}
