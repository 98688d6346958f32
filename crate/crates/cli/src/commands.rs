use std::fs;
use std::io::Write as _;
use std::path::Path;

use normcheck::equivalence::SIMILARITY_GRID;
use normcheck::io::{
    parse_complex_list, parse_grid_dims, parse_matrix, parse_region, write_grid_csv, write_matrix_json,
    write_matrix_market,
};
use normcheck::random::{random_complex_gaussian, rng_from_seed};
use normcheck::spectrum::DEFAULT_CLUSTER_TOL;
use normcheck::{
    certify, norm_behavior_equal, pseudospectra_equal, pseudospectrum_grid, random_normal_matrix, random_unitary,
    unitary_similarity, CMatrix, CertifyConfig, ComparisonReport, Complex64, NormalityReport, RegionSpec, Spectrum,
    Verdict,
};
use serde::Serialize;

use crate::exit::{Failure, CANT_CREATE, NO_INPUT, USAGE};
use crate::{Kind, Mode};

const TOOL: &str = "normcheck";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
struct Tagged<'a, T> {
    tool: &'static str,
    version: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

fn read_matrix(path: &Path) -> Result<CMatrix, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::new(NO_INPUT, format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(CANT_CREATE, format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(CANT_CREATE, format!("cannot write stdout: {e}"))),
    }
}

fn to_json<T: Serialize>(body: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Tagged { tool: TOOL, version: VERSION, body })
        .expect("report serialization is infallible");
    s.push('\n');
    s
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Failure::new(USAGE, format!("--tol must be positive and finite, got {tol}")))
    }
}

pub fn analyze(input: &Path, tol: f64, seed: u64, out: Option<&Path>) -> Result<u8, Failure> {
    check_tol(tol)?;
    let t = read_matrix(input)?;
    let config = CertifyConfig { tol, seed, ..CertifyConfig::default() };
    let report: NormalityReport = certify(&t, &config)?;
    emit(out, &to_json(&report))?;
    Ok(match report.verdict {
        Verdict::Normal => 0,
        Verdict::NotNormal => 1,
        Verdict::Inconclusive => 2,
    })
}

pub fn pseudospec(input: &Path, region: &str, grid: &str, out: Option<&Path>) -> Result<u8, Failure> {
    let region = parse_region(region)?;
    let (nx, ny) = parse_grid_dims(grid)?;
    let t = read_matrix(input)?;
    let grid = pseudospectrum_grid(&t, region, nx, ny)?;
    emit(out, &write_grid_csv(&grid))?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
pub fn compare(
    a: &Path,
    b: &Path,
    mode: Mode,
    degree: Option<usize>,
    trials: usize,
    seed: u64,
    tol: f64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    check_tol(tol)?;
    let a = read_matrix(a)?;
    let b = read_matrix(b)?;
    let report: ComparisonReport = match mode {
        Mode::Pseudospectra => {
            let (nx, ny) = SIMILARITY_GRID;
            pseudospectra_equal(&a, &b, RegionSpec::Auto, nx, ny, tol)?
        }
        Mode::Normbehavior => norm_behavior_equal(&a, &b, degree, trials, seed, tol)?,
        Mode::Unitary => unitary_similarity(&a, &b, tol)?,
    };
    emit(out, &to_json(&report))?;
    Ok(if report.decision { 0 } else { 1 })
}

fn padded_spectrum(spec: Option<&str>, n: usize) -> Result<Option<Vec<Complex64>>, Failure> {
    let Some(spec) = spec else { return Ok(None) };
    let mut values = parse_complex_list(spec)?;
    if values.len() > n {
        return Err(Failure::new(USAGE, format!("spectrum has {} values but n is {n}", values.len())));
    }
    let last = *values.last().expect("parser rejects empty lists");
    values.resize(n, last);
    Ok(Some(values))
}

fn generate_matrix(kind: Kind, n: usize, spectrum: Option<Vec<Complex64>>, seed: u64) -> Result<CMatrix, Failure> {
    Ok(match kind {
        Kind::Normal => {
            let values = spectrum.unwrap_or_else(|| {
                let mut rng = rng_from_seed(seed ^ 0x5eed);
                (0..n).map(|_| normcheck::random::complex_gaussian(&mut rng)).collect()
            });
            random_normal_matrix(&Spectrum::cluster(&values, DEFAULT_CLUSTER_TOL)?, seed)
        }
        Kind::Jordan => {
            let diagonal = spectrum.unwrap_or_else(|| vec![Complex64::new(0.0, 0.0); n]);
            CMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    diagonal[i]
                } else if j == i + 1 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
        }
        Kind::Random => match spectrum {
            None => random_complex_gaussian(n, n, seed),
            Some(values) => {
                // Unitarily similar to a triangular matrix with the given diagonal.
                let noise = random_complex_gaussian(n, n, seed ^ 0x5eed);
                let t = CMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => values[i],
                    std::cmp::Ordering::Less => noise[(i, j)],
                    std::cmp::Ordering::Greater => Complex64::new(0.0, 0.0),
                });
                let u = random_unitary(n, seed);
                u.matmul(&t).matmul(&u.adjoint())
            }
        },
        Kind::Unitary => match spectrum {
            None => random_unitary(n, seed),
            Some(values) => {
                if let Some(z) = values.iter().find(|z| (z.norm() - 1.0).abs() > 1e-12) {
                    return Err(Failure::new(USAGE, format!("unitary spectrum must be unimodular, got {z}")));
                }
                random_normal_matrix(&Spectrum::cluster(&values, DEFAULT_CLUSTER_TOL)?, seed)
            }
        },
    })
}

pub fn generate(kind: Kind, n: usize, spectrum: Option<&str>, seed: u64, out: Option<&Path>) -> Result<u8, Failure> {
    if n == 0 {
        return Err(Failure::new(USAGE, "--n must be at least 1"));
    }
    let spectrum = padded_spectrum(spectrum, n)?;
    let m = generate_matrix(kind, n, spectrum, seed)?;
    let market = out.is_some_and(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("mtx")));
    let text = if market { write_matrix_market(&m) } else { write_matrix_json(&m) };
    emit(out, &text)?;
    Ok(0)
}
