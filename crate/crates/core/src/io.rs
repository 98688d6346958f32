//! File formats and argument-string parsers.
//!
//! Matrices are read from JSON `{"rows": n, "cols": m, "data": [[re, im], ...]}`
//! in row-major order or from Matrix Market `array` files (column-major).
//! Every number written by this module uses 17 significant digits, so a
//! write-then-read round trip reproduces entries bit for bit.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::resolvent::{ExtendedNorm, PseudospectrumGrid, Region, RegionSpec};

/// Header line of the Matrix Market files this module writes.
pub const MATRIX_MARKET_HEADER: &str = "%%MatrixMarket matrix array complex general";

/// Header line of the grid CSV.
pub const GRID_CSV_HEADER: &str = "re,im,resnorm";

/// Formats like C's `%.17g`.
pub fn format_g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        strip_zeros(&format!("{x:.*}", (16 - exp) as usize)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Deserialize)]
struct JsonMatrix {
    rows: usize,
    cols: usize,
    data: Vec<[f64; 2]>,
}

/// Parses the JSON matrix format.
pub fn parse_matrix_json(text: &str) -> Result<CMatrix> {
    let raw: JsonMatrix = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid matrix JSON: {e}")))?;
    let expected = raw.rows.checked_mul(raw.cols).ok_or_else(|| Error::Parse("matrix dimensions overflow".into()))?;
    if raw.data.len() != expected {
        return Err(Error::Parse(format!("data has {} entries, expected rows*cols = {expected}", raw.data.len())));
    }
    let data = raw.data.into_iter().map(|[re, im]| Complex64::new(re, im)).collect();
    CMatrix::from_row_major(raw.rows, raw.cols, data).map_err(|e| Error::Parse(e.to_string()))
}

/// Writes the JSON matrix format, one row of the matrix per line.
pub fn write_matrix_json(m: &CMatrix) -> String {
    let mut out = format!("{{\"rows\": {}, \"cols\": {}, \"data\": [", m.rows(), m.cols());
    for i in 0..m.rows() {
        out.push_str(if i == 0 { "\n  " } else { ",\n  " });
        for (j, z) in m.row(i).iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "[{}, {}]", format_g17(z.re), format_g17(z.im));
        }
    }
    out.push_str("\n]}\n");
    out
}

fn parse_f64(tok: &str) -> Result<f64> {
    let v: f64 = tok.parse().map_err(|_| Error::Parse(format!("invalid number {tok:?}")))?;
    if !v.is_finite() {
        return Err(Error::Parse(format!("non-finite number {tok:?}")));
    }
    Ok(v)
}

/// Parses a dense Matrix Market `array` file with `complex` or `real`
/// field and `general` symmetry. Entries are column-major.
pub fn parse_matrix_market(text: &str) -> Result<CMatrix> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty Matrix Market file".into()))?;
    let tokens: Vec<String> = header.split_whitespace().map(|t| t.to_ascii_lowercase()).collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" || tokens[1] != "matrix" {
        return Err(Error::Parse(format!("invalid Matrix Market header {header:?}")));
    }
    if tokens[2] != "array" {
        return Err(Error::Parse(format!("unsupported format {:?}, expected array", tokens[2])));
    }
    let complex = match tokens[3].as_str() {
        "complex" => true,
        "real" => false,
        other => return Err(Error::Parse(format!("unsupported field {other:?}"))),
    };
    if tokens[4] != "general" {
        return Err(Error::Parse(format!("unsupported symmetry {:?}", tokens[4])));
    }

    let mut body = lines.filter(|l| !l.trim_start().starts_with('%') && !l.trim().is_empty());
    let size = body.next().ok_or_else(|| Error::Parse("missing size line".into()))?;
    let dims: Vec<&str> = size.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(Error::Parse(format!("size line must hold rows and cols, got {size:?}")));
    }
    let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("invalid dimension {s:?}")));
    let rows = parse_dim(dims[0])?;
    let cols = parse_dim(dims[1])?;
    let count = rows.checked_mul(cols).ok_or_else(|| Error::Parse("matrix dimensions overflow".into()))?;
    if rows == 0 || cols == 0 {
        return Err(Error::Parse("matrix dimensions must be positive".into()));
    }

    let per_line = if complex { 2 } else { 1 };
    let mut values = Vec::new();
    for line in body {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != per_line {
            return Err(Error::Parse(format!("entry line {line:?} must hold {per_line} value(s)")));
        }
        if values.len() == count {
            return Err(Error::Parse(format!("more than {count} entries")));
        }
        let re = parse_f64(toks[0])?;
        let im = if complex { parse_f64(toks[1])? } else { 0.0 };
        values.push(Complex64::new(re, im));
    }
    if values.len() != count {
        return Err(Error::Parse(format!("expected {count} entries, found {}", values.len())));
    }
    let mut m = CMatrix::zeros(rows, cols);
    for (k, z) in values.into_iter().enumerate() {
        m[(k % rows, k / rows)] = z;
    }
    Ok(m)
}

/// Writes a complex `array` Matrix Market file, column-major.
pub fn write_matrix_market(m: &CMatrix) -> String {
    let mut out = format!("{MATRIX_MARKET_HEADER}\n{} {}\n", m.rows(), m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            let z = m[(i, j)];
            let _ = writeln!(out, "{} {}", format_g17(z.re), format_g17(z.im));
        }
    }
    out
}

/// Reads either format, choosing Matrix Market when the text starts with
/// its `%%MatrixMarket` banner.
pub fn parse_matrix(text: &str) -> Result<CMatrix> {
    if text.trim_start().starts_with("%%MatrixMarket") || text.trim_start().starts_with("%%matrixmarket") {
        parse_matrix_market(text)
    } else {
        parse_matrix_json(text)
    }
}

/// Grid as CSV with header `re,im,resnorm`, nodes in storage order and
/// `inf` on the spectrum.
pub fn write_grid_csv(grid: &PseudospectrumGrid) -> String {
    let mut out = String::with_capacity(48 * grid.values.len() + 16);
    out.push_str(GRID_CSV_HEADER);
    out.push('\n');
    for (z, v) in grid.iter() {
        let value = match v {
            ExtendedNorm::Infinite => "inf".to_string(),
            ExtendedNorm::Finite(x) => format_g17(x),
        };
        let _ = writeln!(out, "{},{},{}", format_g17(z.re), format_g17(z.im), value);
    }
    out
}

/// Parses grid CSV rows back into `(z, value)` pairs.
pub fn parse_grid_csv(text: &str) -> Result<Vec<(Complex64, ExtendedNorm)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == GRID_CSV_HEADER => {}
        other => return Err(Error::Parse(format!("expected header {GRID_CSV_HEADER:?}, got {other:?}"))),
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!("row {line:?} must hold 3 fields")));
            }
            let z = Complex64::new(parse_f64(fields[0])?, parse_f64(fields[1])?);
            let v = if fields[2] == "inf" {
                ExtendedNorm::Infinite
            } else {
                let x = parse_f64(fields[2])?;
                if x < 0.0 {
                    return Err(Error::Parse(format!("negative resolvent norm {x}")));
                }
                ExtendedNorm::Finite(x)
            };
            Ok((z, v))
        })
        .collect()
}

/// `auto` or `x_min,x_max,y_min,y_max`.
pub fn parse_region(s: &str) -> Result<RegionSpec> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("auto") {
        return Ok(RegionSpec::Auto);
    }
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!("region must be \"auto\" or \"x0,x1,y0,y1\", got {s:?}")));
    }
    let v = parts.iter().map(|p| parse_f64(p)).collect::<Result<Vec<f64>>>()?;
    Region::new(v[0], v[1], v[2], v[3]).map(RegionSpec::Rect).map_err(|e| Error::Parse(e.to_string()))
}

/// `NXxNY`, both at least 2.
pub fn parse_grid_dims(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .trim()
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::Parse(format!("grid must look like 101x101, got {s:?}")))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid grid size {t:?}")));
    let (nx, ny) = (parse(a)?, parse(b)?);
    if nx < 2 || ny < 2 {
        return Err(Error::Parse(format!("grid dimensions must be at least 2, got {nx}x{ny}")));
    }
    Ok((nx, ny))
}

/// Complex literal: `1.5`, `-2i`, `i`, `3-4i`, `-0.5+1e-3i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid complex number {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return Ok(Complex64::new(parse_f64(&s).map_err(|_| bad())?, 0.0));
    };
    // Split at the last sign that is not the leading one nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |t: &str| -> Result<f64> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => parse_f64(t).map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => Ok(Complex64::new(parse_f64(&body[..k]).map_err(|_| bad())?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

/// Comma-separated complex literals.
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    let items: Vec<&str> = s.split(',').collect();
    if items.iter().all(|t| t.trim().is_empty()) {
        return Err(Error::Parse("empty spectrum list".into()));
    }
    items.into_iter().map(parse_complex).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c64;
    use proptest::prelude::*;

    #[test]
    fn g17_formatting() {
        assert_eq!(format_g17(1.618_033_988_749_895), "1.6180339887498949");
        assert_eq!(format_g17(1.0), "1");
        assert_eq!(format_g17(0.5), "0.5");
        assert_eq!(format_g17(-2.0), "-2");
        assert_eq!(format_g17(0.1), "0.10000000000000001");
        assert_eq!(format_g17(1e-7), "9.9999999999999995e-08");
        assert_eq!(format_g17(1e20), "1e+20");
        assert_eq!(format_g17(0.0), "0");
        assert_eq!(format_g17(f64::INFINITY), "inf");
    }

    #[test]
    fn json_round_trip_example() {
        let m = CMatrix::from_rows(&[[c64(0.1, -0.2), c64(1e-300, 3.0)], [c64(-0.0, 0.0), c64(1.0 / 3.0, 7.0)]]);
        let back = parse_matrix_json(&write_matrix_json(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_errors() {
        assert!(parse_matrix_json("{").is_err());
        assert!(parse_matrix_json(r#"{"rows": 2, "cols": 2, "data": [[1, 0]]}"#).is_err());
        assert!(parse_matrix_json(r#"{"rows": 0, "cols": 0, "data": []}"#).is_err());
        let ok = parse_matrix_json(r#"{"rows": 1, "cols": 2, "data": [[1, 2], [3, 4]]}"#).unwrap();
        assert_eq!(ok[(0, 1)], c64(3.0, 4.0));
    }

    #[test]
    fn matrix_market_column_major() {
        let text = "%%MatrixMarket matrix array complex general\n% comment\n2 2\n1 0\n2 0\n3 0\n4 1\n";
        let m = parse_matrix_market(text).unwrap();
        assert_eq!(m, CMatrix::from_rows(&[[c64(1.0, 0.0), c64(3.0, 0.0)], [c64(2.0, 0.0), c64(4.0, 1.0)]]));
        assert_eq!(parse_matrix(&write_matrix_market(&m)).unwrap(), m);

        let real = "%%MatrixMarket matrix array real general\n1 2\n5\n6\n";
        assert_eq!(parse_matrix(real).unwrap(), CMatrix::from_real_rows(&[[5.0, 6.0]]));
    }

    #[test]
    fn matrix_market_errors() {
        assert!(parse_matrix_market("").is_err());
        assert!(parse_matrix_market("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 0 0\n").is_err());
        assert!(parse_matrix_market("%%MatrixMarket matrix array complex general\n2 2\n1 0\n").is_err());
        assert!(parse_matrix_market("%%MatrixMarket matrix array complex general\n1 1\n1 0\n2 0\n").is_err());
        assert!(parse_matrix_market("%%MatrixMarket matrix array complex general\n1 1\nnan 0\n").is_err());
        assert!(parse_matrix_market("%%MatrixMarket matrix array complex general\n99999999999 99999999999\n").is_err());
    }

    #[test]
    fn region_and_grid_parsing() {
        assert_eq!(parse_region("auto").unwrap(), RegionSpec::Auto);
        assert_eq!(parse_region("-1,1,-2,2").unwrap(), RegionSpec::Rect(Region::new(-1.0, 1.0, -2.0, 2.0).unwrap()));
        assert!(parse_region("1,0,0,1").is_err());
        assert!(parse_region("1,2,3").is_err());
        assert_eq!(parse_grid_dims("101x101").unwrap(), (101, 101));
        assert_eq!(parse_grid_dims("3X4").unwrap(), (3, 4));
        assert!(parse_grid_dims("1x5").is_err());
        assert!(parse_grid_dims("ax5").is_err());
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1.5").unwrap(), c64(1.5, 0.0));
        assert_eq!(parse_complex("i").unwrap(), c64(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), c64(0.0, -1.0));
        assert_eq!(parse_complex("-2i").unwrap(), c64(0.0, -2.0));
        assert_eq!(parse_complex("3-4i").unwrap(), c64(3.0, -4.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), c64(1e-3, 20.0));
        assert_eq!(parse_complex(" -1 + i ").unwrap(), c64(-1.0, 1.0));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
        assert_eq!(parse_complex_list("1,-1,i").unwrap(), vec![c64(1.0, 0.0), c64(-1.0, 0.0), c64(0.0, 1.0)]);
        assert!(parse_complex_list("").is_err());
    }

    #[test]
    fn grid_csv_round_trip() {
        let region = Region::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let grid =
            crate::resolvent::pseudospectrum_grid(&CMatrix::zeros(1, 1), RegionSpec::Rect(region), 3, 3).unwrap();
        let csv = write_grid_csv(&grid);
        assert_eq!(csv.lines().count(), 10);
        assert_eq!(csv.lines().nth(5).unwrap(), "0,0,inf");
        let rows = parse_grid_csv(&csv).unwrap();
        assert_eq!(rows, grid.iter().collect::<Vec<_>>());
    }

    proptest! {
        #[test]
        fn g17_round_trips(x in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
            let back: f64 = format_g17(x).parse().unwrap();
            prop_assert_eq!(back.to_bits(), x.to_bits());
        }

        #[test]
        fn matrix_files_round_trip(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in any::<u64>(),
        ) {
            let m = crate::random::random_complex_gaussian(rows, cols, seed).scale(c64(1e3, 0.0));
            prop_assert_eq!(&parse_matrix(&write_matrix_json(&m)).unwrap(), &m);
            prop_assert_eq!(&parse_matrix(&write_matrix_market(&m)).unwrap(), &m);
        }
    }
}
