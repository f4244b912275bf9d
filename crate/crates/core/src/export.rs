//! CSV and JSON encodings of polynomials, Gram matrices, norm and spectrum tables.
//!
//! Floats are printed with 15 significant digits independent of locale, and the
//! JSON mirrors carry the same rounded values as the CSV text.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inner_product::{norm_sq, GramMatrix, SymbolicMoment};
use crate::oscillator::{RaySample, SpectrumRow};
use crate::params::{ModelParams, Rational};
use crate::poly::SparsePoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// `%.15g`-style formatting.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.14e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if x < 0.0 { "-" } else { "" };
    let trim = |s: &str| s.trim_end_matches('0').to_string();
    if (-5..15).contains(&exp) {
        let (int_part, frac) = if exp >= 0 {
            let split = exp as usize + 1;
            (digits[..split].to_string(), trim(&digits[split..]))
        } else {
            (
                "0".to_string(),
                trim(&format!("{}{}", "0".repeat((-exp - 1) as usize), digits)),
            )
        };
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    } else {
        let frac = trim(&digits[1..]);
        let head = &digits[..1];
        if frac.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{frac}e{exp}")
        }
    }
}

/// The float exactly as it reads back from [`format_float`].
pub fn rounded(x: f64) -> f64 {
    format_float(x).parse().expect("formatted float parses")
}

fn csv_string<R: Serialize>(header: &[&str], rows: &[R]) -> Result<String> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    writer.write_record(header).map_err(export_err)?;
    for row in rows {
        writer.serialize(row).map_err(export_err)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Export(e.to_string()))?;
    String::from_utf8(bytes).map_err(export_err)
}

fn json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut out = serde_json::to_string_pretty(value).map_err(export_err)?;
    out.push('\n');
    Ok(out)
}

fn export_err<E: std::fmt::Display>(e: E) -> Error {
    Error::Export(e.to_string())
}

#[derive(Serialize)]
struct PolyDoc {
    #[serde(rename = "N")]
    degree: u32,
    r: u32,
    nu: String,
    terms: Vec<(u32, String)>,
}

#[derive(Serialize)]
struct PolyRow {
    degree: u32,
    coeff_num: String,
    coeff_den: String,
}

pub fn poly_export(
    params: &ModelParams,
    degree: u32,
    poly: &SparsePoly,
    format: Format,
) -> Result<String> {
    match format {
        Format::Json => json_string(&PolyDoc {
            degree,
            r: params.r(),
            nu: params.nu().to_string(),
            terms: poly.terms().map(|(d, c)| (d, c.to_string())).collect(),
        }),
        Format::Csv => {
            let rows: Vec<PolyRow> = poly
                .terms()
                .map(|(d, c)| PolyRow {
                    degree: d,
                    coeff_num: c.numer().to_string(),
                    coeff_den: c.denom().to_string(),
                })
                .collect();
            csv_string(&["degree", "coeff_num", "coeff_den"], &rows)
        }
    }
}

#[derive(Serialize)]
struct GramRow<F> {
    #[serde(rename = "N")]
    n: u32,
    #[serde(rename = "M")]
    m: u32,
    value_float: F,
    base: String,
    coeff_num: String,
    coeff_den: String,
}

#[derive(Serialize)]
struct TableDoc<R> {
    r: u32,
    nu: String,
    nmax: u32,
    rows: Vec<R>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_rel_dev: Option<f64>,
}

fn split(q: &Rational) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

pub fn gram_export(gram: &GramMatrix, format: Format) -> Result<String> {
    match format {
        Format::Csv => csv_string(
            &["N", "M", "value_float", "base", "coeff_num", "coeff_den"],
            &gram_rows(gram, format_float),
        ),
        Format::Json => json_string(&TableDoc {
            r: gram.params.r(),
            nu: gram.params.nu().to_string(),
            nmax: gram.n_max,
            rows: gram_rows(gram, rounded),
            max_rel_dev: None,
        }),
    }
}

fn gram_rows<F>(gram: &GramMatrix, float: fn(f64) -> F) -> Vec<GramRow<F>> {
    let mut rows = Vec::new();
    for (i, row) in gram.entries.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let value = gram.values[i][j];
            let terms: Vec<SymbolicMoment> = if entry.is_zero() {
                vec![SymbolicMoment::zero()]
            } else {
                entry.terms().collect()
            };
            for term in terms {
                let (coeff_num, coeff_den) = split(term.coeff());
                rows.push(GramRow {
                    n: i as u32,
                    m: j as u32,
                    value_float: float(value),
                    base: term.base().to_string(),
                    coeff_num,
                    coeff_den,
                });
            }
        }
    }
    rows
}

#[derive(Serialize)]
struct NormRow<F> {
    #[serde(rename = "N")]
    n: u32,
    zeta_float: F,
    zeta_symbolic: String,
    gram_float: F,
    exact_match: bool,
}

struct NormEntry {
    n: u32,
    zeta: SymbolicMoment,
    zeta_float: f64,
    gram_float: f64,
    exact_match: bool,
}

/// Closed-form norms next to the Gram diagonal.
pub struct NormTable {
    pub params: ModelParams,
    pub n_max: u32,
    entries: Vec<NormEntry>,
    pub max_rel_dev: f64,
    pub all_exact: bool,
}

pub fn norm_table(gram: &GramMatrix) -> NormTable {
    let entries: Vec<NormEntry> = (0..=gram.n_max)
        .map(|n| {
            let zeta = norm_sq(&gram.params, n);
            let exact_match = gram.entry(n, n).as_single().as_ref() == Some(&zeta);
            NormEntry {
                n,
                zeta_float: zeta.to_f64(),
                zeta,
                gram_float: gram.values[n as usize][n as usize],
                exact_match,
            }
        })
        .collect();
    let max_rel_dev = entries
        .iter()
        .map(|e| ((e.zeta_float - e.gram_float) / e.zeta_float).abs())
        .fold(0.0, f64::max);
    let all_exact = entries.iter().all(|e| e.exact_match);
    NormTable {
        params: gram.params.clone(),
        n_max: gram.n_max,
        entries,
        max_rel_dev,
        all_exact,
    }
}

impl NormTable {
    fn rows<F>(&self, float: fn(f64) -> F) -> Vec<NormRow<F>> {
        self.entries
            .iter()
            .map(|e| NormRow {
                n: e.n,
                zeta_float: float(e.zeta_float),
                zeta_symbolic: e.zeta.to_string(),
                gram_float: float(e.gram_float),
                exact_match: e.exact_match,
            })
            .collect()
    }
}

pub fn norm_export(table: &NormTable, format: Format) -> Result<String> {
    match format {
        Format::Csv => csv_string(
            &[
                "N",
                "zeta_float",
                "zeta_symbolic",
                "gram_float",
                "exact_match",
            ],
            &table.rows(format_float),
        ),
        Format::Json => json_string(&TableDoc {
            r: table.params.r(),
            nu: table.params.nu().to_string(),
            nmax: table.n_max,
            rows: table.rows(rounded),
            max_rel_dev: Some(rounded(table.max_rel_dev)),
        }),
    }
}

#[derive(Serialize)]
struct SpectrumOut<F> {
    #[serde(rename = "N")]
    n: u32,
    class: &'static str,
    deformed_number: String,
    #[serde(rename = "E_H0")]
    e_h0: String,
    #[serde(rename = "E_SUSY")]
    e_susy: u32,
    zeta_float: F,
    degeneracy: u32,
}

fn spectrum_rows<F>(rows: &[SpectrumRow], float: fn(f64) -> F) -> Vec<SpectrumOut<F>> {
    rows.iter()
        .map(|row| SpectrumOut {
            n: row.degree,
            class: row.class.as_str(),
            deformed_number: row.deformed_number.to_string(),
            e_h0: row.e_h0.to_string(),
            e_susy: row.e_susy,
            zeta_float: float(row.zeta),
            degeneracy: row.degeneracy,
        })
        .collect()
}

pub fn spectrum_export(
    params: &ModelParams,
    n_max: u32,
    rows: &[SpectrumRow],
    format: Format,
) -> Result<String> {
    match format {
        Format::Csv => csv_string(
            &[
                "N",
                "class",
                "deformed_number",
                "E_H0",
                "E_SUSY",
                "zeta_float",
                "degeneracy",
            ],
            &spectrum_rows(rows, format_float),
        ),
        Format::Json => json_string(&TableDoc {
            r: params.r(),
            nu: params.nu().to_string(),
            nmax: n_max,
            rows: spectrum_rows(rows, rounded),
            max_rel_dev: None,
        }),
    }
}

#[derive(Serialize)]
struct EvalRow<F> {
    ray_index: u32,
    t: F,
    re_h: F,
    im_h: F,
}

#[derive(Serialize)]
struct EvalDoc {
    r: u32,
    nu: String,
    #[serde(rename = "N")]
    degree: u32,
    rows: Vec<EvalRow<f64>>,
}

fn eval_rows<F>(samples: &[RaySample], float: fn(f64) -> F) -> Vec<EvalRow<F>> {
    samples
        .iter()
        .map(|s| EvalRow {
            ray_index: s.ray,
            t: float(s.t),
            re_h: float(s.value.re),
            im_h: float(s.value.im),
        })
        .collect()
}

pub fn eval_export(
    params: &ModelParams,
    degree: u32,
    samples: &[RaySample],
    format: Format,
) -> Result<String> {
    match format {
        Format::Csv => csv_string(
            &["ray_index", "t", "re_h", "im_h"],
            &eval_rows(samples, format_float),
        ),
        Format::Json => json_string(&EvalDoc {
            r: params.r(),
            nu: params.nu().to_string(),
            degree,
            rows: eval_rows(samples, rounded),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{radial_hermite, Method};
    use crate::inner_product::gram_matrix;

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(-2.5), "-2.5");
        assert_eq!(
            format_float(std::f64::consts::PI.sqrt()),
            "1.77245385090552"
        );
        assert_eq!(format_float(1e-7), "1e-7");
        assert_eq!(format_float(123456.0), "123456");
        assert_eq!(format_float(0.000123), "0.000123");
        assert_eq!(format_float(6.02214076e23), "6.02214076e23");
        assert_eq!(format_float(0.1 + 0.2), "0.3");
        assert_eq!(format_float(1e15), "1e15");
        assert_eq!(format_float(999999999999999.0), "999999999999999");
    }

    #[test]
    fn poly_json_layout() {
        let params = ModelParams::from_ratio(3, 1, 1).unwrap();
        let h6 = radial_hermite(&params, 6, Method::Recurrence);
        let json = poly_export(&params, 6, &h6, Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(
            value,
            serde_json::json!({"N": 6, "r": 3, "nu": "1", "terms": [[0, "-2"], [6, "4"]]})
        );
        let csv = poly_export(&params, 6, &h6, Format::Csv).unwrap();
        assert_eq!(csv, "degree,coeff_num,coeff_den\n0,-2,1\n6,4,1\n");
    }

    #[test]
    fn gram_csv_rows() {
        let params = ModelParams::from_ratio(3, 1, 1).unwrap();
        let gram = gram_matrix(&params, 3).unwrap();
        let csv = gram_export(&gram, Format::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "N,M,value_float,base,coeff_num,coeff_den");
        assert_eq!(lines.len(), 1 + 16);
        assert_eq!(lines[1], "0,0,1.77245385090552,1/2,1,1");
        assert_eq!(lines[2], "0,1,0,1,0,1");
        assert_eq!(lines[16], "3,3,3.54490770181103,1/2,2,1");
    }
}
