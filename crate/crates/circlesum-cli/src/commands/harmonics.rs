//! `circlesum harmonics` and `circlesum fourier`: phase sets, extracted
//! harmonics over a grid, Fourier coefficients without integration.

use std::f64::consts::TAU;
use std::fs;
use std::io::Write;
use std::path::Path;

use circlesum_core::harmonics::{extract_harmonic, extraction_phases_cached};
use circlesum_core::TrigPolynomial;
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::jsonio::{check_n_cap, write_output};
use crate::signal::parse_signal;
use crate::NuArg;

fn load_signal(path: &Path) -> Result<TrigPolynomial, Failure> {
    let signal = parse_signal(path)?;
    let n = signal.degree();
    check_n_cap(n)?;
    if n < 2 {
        return Err(Failure::Precondition(
            format!("signal degree n = {n} is below the supported minimum 2"),
            json!({ "n": n, "min": 2 }),
        ));
    }
    Ok(signal)
}

fn check_nu(nu: usize, n: usize) -> Result<(), Failure> {
    if nu < 1 || nu > n {
        return Err(Failure::usage(format!(
            "harmonic index nu = {nu} outside 1..={n}"
        )));
    }
    Ok(())
}

pub fn run_harmonics(
    signal_path: &Path,
    nu: &NuArg,
    grid: usize,
    csv: Option<&Path>,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let signal = load_signal(signal_path)?;
    let n = signal.degree();
    match nu {
        NuArg::One(nu) => {
            let nu = *nu;
            check_nu(nu, n)?;
            let doc = single_harmonic(&signal, nu, grid, csv)?;
            write_output(&doc, out)
        }
        NuArg::All => {
            if csv.is_some() {
                return Err(Failure::usage(
                    "--csv needs a single --nu (one curve per file)",
                ));
            }
            let mut entries = Vec::with_capacity(n);
            for nu in 1..=n {
                let op = extraction_phases_cached(n, nu)?;
                let a = extract_harmonic(&signal, &op, 0.0)?;
                let b = extract_harmonic(&signal, &op, 0.5 * std::f64::consts::PI / nu as f64)?;
                entries.push(json!({
                    "nu": nu,
                    "a": a,
                    "b": b,
                    "phases": op.phases(),
                    "certificate_residual": op.certificate_residual(),
                }));
            }
            let doc = json!({
                "command": "harmonics",
                "n": n,
                "harmonics": entries,
            });
            write_output(&doc, out)
        }
    }
}

fn single_harmonic(
    signal: &TrigPolynomial,
    nu: usize,
    grid: usize,
    csv: Option<&Path>,
) -> Result<Value, Failure> {
    if grid == 0 {
        return Err(Failure::usage("--grid must be >= 1"));
    }
    let n = signal.degree();
    let op = extraction_phases_cached(n, nu)?;
    let a_nu = extract_harmonic(signal, &op, 0.0)?;
    let b_nu = extract_harmonic(signal, &op, 0.5 * std::f64::consts::PI / nu as f64)?;

    let mut samples = Vec::with_capacity(grid);
    let mut rows = Vec::with_capacity(grid);
    for k in 0..grid {
        let t = TAU * k as f64 / grid as f64;
        let value = signal.eval(t);
        let harmonic = signal.harmonic_eval(nu, t);
        let extracted = extract_harmonic(signal, &op, t)?;
        samples.push(json!({
            "t": t,
            "signal": value,
            "harmonic": harmonic,
            "extracted": extracted,
        }));
        rows.push((t, value, harmonic, extracted));
    }

    if let Some(path) = csv {
        let mut file = fs::File::create(path)
            .map_err(|e| Failure::usage(format!("cannot create {}: {e}", path.display())))?;
        writeln!(file, "t,signal,tau_nu,theta").map_err(io_err)?;
        for (t, v, h, x) in &rows {
            writeln!(file, "{t},{v},{h},{x}").map_err(io_err)?;
        }
    }

    Ok(json!({
        "command": "harmonics",
        "n": n,
        "nu": nu,
        "phases": op.phases(),
        "certificate_residual": op.certificate_residual(),
        "a_nu": a_nu,
        "b_nu": b_nu,
        "samples": samples,
    }))
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::usage(format!("csv write failed: {e}"))
}

pub fn run_fourier(signal_path: &Path, nu: &NuArg, out: Option<&Path>) -> Result<(), Failure> {
    let signal = load_signal(signal_path)?;
    let n = signal.degree();
    let range: Vec<usize> = match nu {
        NuArg::One(nu) => {
            check_nu(*nu, n)?;
            vec![*nu]
        }
        NuArg::All => (1..=n).collect(),
    };
    let mut coeffs = Vec::with_capacity(range.len());
    for nu in range {
        let op = extraction_phases_cached(n, nu)?;
        let a = extract_harmonic(&signal, &op, 0.0)?;
        let b = extract_harmonic(&signal, &op, 0.5 * std::f64::consts::PI / nu as f64)?;
        coeffs.push(json!({ "nu": nu, "a": a, "b": b }));
    }
    let doc = json!({
        "command": "fourier",
        "n": n,
        "coeffs": coeffs,
    });
    write_output(&doc, out)
}
