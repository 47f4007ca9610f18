//! Record rendering.  One record per invocation, in three shapes: JSON for
//! machines, CSV for spreadsheets, pretty for eyes.  Exact coefficients are
//! always emitted as fraction strings, never floats; the float statistics
//! of a Monte Carlo report are printed through the JSON encoder in every
//! format so the numbers agree textually across formats.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde_json::{json, Value};

use skewop_core::poly::UniPoly;
use skewop_core::rational::Rat;
use skewop_core::skew::SkewPolyPair;
use skewop_mc::McReport;

use crate::checks::CheckOutcome;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Sparse coefficient list, degrees ascending, exact strings.
fn poly_entries(p: &UniPoly) -> Vec<(usize, String)> {
    p.iter().map(|(d, c)| (d, c.to_string())).collect()
}

fn poly_json(p: &UniPoly) -> Value {
    Value::Array(
        poly_entries(p)
            .into_iter()
            .map(|(d, c)| json!([d, c]))
            .collect(),
    )
}

fn params_json(params: &BTreeMap<String, Rat>) -> Value {
    Value::Object(
        params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.to_string())))
            .collect(),
    )
}

fn params_pretty(params: &BTreeMap<String, Rat>) -> String {
    if params.is_empty() {
        return String::new();
    }
    let body: Vec<String> = params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    format!("  params: {}", body.join(", "))
}

/// Exactly the text the JSON encoder would produce for this float
/// ("null" for non-finite values).
fn f64_text(x: f64) -> String {
    serde_json::to_string(&x).expect("float serialization cannot fail")
}

fn emit_json(record: Value) {
    println!("{record}");
}

fn csv_pair_rows(pair: &SkewPolyPair) {
    println!("series,degree,coefficient");
    for (name, poly) in [("q_even", &pair.q_even), ("q_odd", &pair.q_odd)] {
        for (d, c) in poly_entries(poly) {
            println!("{name},{d},{c}");
        }
    }
}

pub fn print_pair(
    format: Format,
    command: &str,
    label: &str,
    n: usize,
    params: &BTreeMap<String, Rat>,
    pair: &SkewPolyPair,
) {
    match format {
        Format::Json => emit_json(json!({
            "command": command,
            "ensemble": label,
            "n": n,
            "params": params_json(params),
            "q_even": poly_json(&pair.q_even),
            "q_odd": poly_json(&pair.q_odd),
            "mc": Value::Null,
            "status": "ok",
        })),
        Format::Csv => csv_pair_rows(pair),
        Format::Pretty => {
            println!("ensemble: {label}  n = {n}{}", params_pretty(params));
            println!("q_even = {}", pair.q_even);
            println!("q_odd = {}", pair.q_odd);
        }
    }
}

pub fn print_jack(format: Format, echo: &[(&str, String)], value: &Rat) {
    match format {
        Format::Json => {
            let params: serde_json::Map<String, Value> = echo
                .iter()
                .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
                .collect();
            emit_json(json!({
                "command": "jack-average",
                "params": params,
                "value": value.to_string(),
                "status": "ok",
            }));
        }
        Format::Csv => {
            println!("value");
            println!("{value}");
        }
        Format::Pretty => {
            let body: Vec<String> = echo.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            println!("{}", body.join(", "));
            println!("average = {value}");
        }
    }
}

pub fn print_check(format: Format, command: &str, outcome: &CheckOutcome) {
    let status = if outcome.failure.is_none() { "pass" } else { "fail" };
    match format {
        Format::Json => {
            let failure = outcome.failure.as_ref().map(|f| {
                json!({
                    "case": f.case,
                    "which": f.which,
                    "degree": f.degree,
                    "detail": f.detail,
                })
            });
            emit_json(json!({
                "command": command,
                "checked": outcome.checked,
                "excluded": outcome.excluded,
                "failure": failure,
                "status": status,
            }));
        }
        Format::Csv => {
            println!("checked,excluded,status");
            println!("{},{},{status}", outcome.checked, outcome.excluded.len());
        }
        Format::Pretty => {
            println!("checked {} grid points", outcome.checked);
            if !outcome.excluded.is_empty() {
                println!("excluded {} (domain poles):", outcome.excluded.len());
                for line in &outcome.excluded {
                    println!("  {line}");
                }
            }
            match &outcome.failure {
                None => println!("status: pass"),
                Some(f) => {
                    println!(
                        "FAIL {}: {} degree {}: {}",
                        f.case, f.which, f.degree, f.detail
                    );
                    println!("status: fail");
                }
            }
        }
    }
}

pub fn print_mc(
    format: Format,
    label: &str,
    n: usize,
    params: &BTreeMap<String, Rat>,
    pair: &SkewPolyPair,
    reports: &[(&str, McReport)],
    pass: bool,
) {
    let status = if pass { "pass" } else { "fail" };
    match format {
        Format::Json => {
            let mc: serde_json::Map<String, Value> = reports
                .iter()
                .map(|(part, r)| {
                    (
                        part.to_string(),
                        serde_json::to_value(r).expect("report serialization cannot fail"),
                    )
                })
                .collect();
            emit_json(json!({
                "command": "verify-mc",
                "ensemble": label,
                "n": n,
                "params": params_json(params),
                "q_even": poly_json(&pair.q_even),
                "q_odd": poly_json(&pair.q_odd),
                "mc": mc,
                "status": status,
            }));
        }
        Format::Csv => {
            println!("part,degree,target,estimate,std_error,z_score");
            for (part, r) in reports {
                for d in 0..r.target.len() {
                    println!(
                        "{part},{d},{},{},{},{}",
                        f64_text(r.target[d]),
                        f64_text(r.estimate[d]),
                        f64_text(r.std_error[d]),
                        f64_text(r.z_score[d]),
                    );
                }
            }
        }
        Format::Pretty => {
            println!("ensemble: {label}  n = {n}{}", params_pretty(params));
            println!("q_even = {}", pair.q_even);
            println!("q_odd = {}", pair.q_odd);
            for (part, r) in reports {
                println!(
                    "[{part}] {}: {} samples, seed {}, verdict {}",
                    r.estimand.label(),
                    r.samples,
                    r.seed,
                    if r.verdict.is_pass() { "pass" } else { "fail" },
                );
                for d in 0..r.target.len() {
                    println!(
                        "  degree {d}: target {}  estimate {}  se {}  z {}",
                        f64_text(r.target[d]),
                        f64_text(r.estimate[d]),
                        f64_text(r.std_error[d]),
                        f64_text(r.z_score[d]),
                    );
                }
                if r.regenerated > 0 {
                    println!("  regenerated draws: {}", r.regenerated);
                }
            }
            println!("status: {status}");
        }
    }
}
