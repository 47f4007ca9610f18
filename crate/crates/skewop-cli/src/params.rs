//! Flag-level parameter plumbing: NAME=RATIONAL lists, ensemble name
//! resolution, and the translation from integer matrix dimensions to
//! sampler constructions.

use std::collections::BTreeMap;

use num::{ToPrimitive, Zero};

use skewop_core::ensemble::{EnsembleSpec, FieldKind, WeightFamily};
use skewop_core::rational::{as_integer, parse_rat, rat_int, Rat};
use skewop_mc::McEnsemble;

use crate::CliError;

pub fn parse_param_list(items: &[String]) -> Result<BTreeMap<String, Rat>, CliError> {
    let mut map = BTreeMap::new();
    for item in items {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("--param expects NAME=RATIONAL, got {item:?}")))?;
        let value = parse_rat(value.trim()).map_err(|e| CliError::usage(e.to_string()))?;
        if map.insert(name.trim().to_string(), value).is_some() {
            return Err(CliError::usage(format!("duplicate parameter {name:?}")));
        }
    }
    Ok(map)
}

/// Grid override lists for check-symbolic: NAME=V1,V2,...
pub fn parse_grids(items: &[String]) -> Result<BTreeMap<String, Vec<Rat>>, CliError> {
    let known = ["alpha", "a1", "a2", "b1", "b2"];
    let mut map = BTreeMap::new();
    for item in items {
        let (name, values) = item
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("--grid expects NAME=V1,V2,..., got {item:?}")))?;
        let name = name.trim();
        if !known.contains(&name) {
            return Err(CliError::usage(format!(
                "unknown grid {name:?}; expected one of {known:?}"
            )));
        }
        let mut parsed = Vec::new();
        for v in values.split(',') {
            parsed.push(parse_rat(v.trim()).map_err(|e| CliError::usage(e.to_string()))?);
        }
        if parsed.is_empty() {
            return Err(CliError::usage(format!("grid {name:?} must list at least one value")));
        }
        if map.insert(name.to_string(), parsed).is_some() {
            return Err(CliError::usage(format!("duplicate grid {name:?}")));
        }
    }
    Ok(map)
}

fn split_label(label: &str) -> Result<(&str, FieldKind), CliError> {
    let unknown = || {
        CliError::usage(format!(
            "unknown ensemble {label:?}; expected one of ginibre-r, ginibre-q, induced-r, \
             induced-q, spherical-r, spherical-q, antispherical-r, antispherical-q"
        ))
    };
    let (family, field) = label.rsplit_once('-').ok_or_else(unknown)?;
    let field = match field {
        "r" => FieldKind::Real,
        "q" => FieldKind::Quaternion,
        _ => return Err(unknown()),
    };
    if !["ginibre", "induced", "spherical", "antispherical"].contains(&family) {
        return Err(unknown());
    }
    Ok((family, field))
}

fn take_required(
    params: &mut BTreeMap<String, Rat>,
    label: &str,
    name: &str,
) -> Result<Rat, CliError> {
    params.remove(name).ok_or_else(|| {
        CliError::usage(format!("ensemble {label} requires --param {name}=RATIONAL"))
    })
}

fn reject_unknown(params: &BTreeMap<String, Rat>, label: &str) -> Result<(), CliError> {
    if let Some(name) = params.keys().next() {
        return Err(CliError::usage(format!(
            "unknown parameter {name:?} for ensemble {label}"
        )));
    }
    Ok(())
}

/// Ensemble for the exact routes; returns the spec plus the parameters as
/// given, for echoing in the output record.
pub fn symbolic_spec(
    label: &str,
    n: usize,
    raw: &[String],
) -> Result<(EnsembleSpec, BTreeMap<String, Rat>), CliError> {
    let mut params = parse_param_list(raw)?;
    let echo = params.clone();
    let (family_name, field) = split_label(label)?;
    let family = match family_name {
        "ginibre" => WeightFamily::Gaussian,
        "induced" => WeightFamily::Induced { alpha: take_required(&mut params, label, "alpha")? },
        "spherical" => WeightFamily::Spherical {
            alpha1: take_required(&mut params, label, "a1")?,
            alpha2: take_required(&mut params, label, "a2")?,
        },
        _ => WeightFamily::Antispherical {
            beta1: take_required(&mut params, label, "b1")?,
            beta2: take_required(&mut params, label, "b2")?,
        },
    };
    reject_unknown(&params, label)?;
    let spec = EnsembleSpec::new(field, family, n).map_err(|e| CliError::usage(e.to_string()))?;
    Ok((spec, echo))
}

fn take_dimension(
    params: &mut BTreeMap<String, Rat>,
    name: &str,
) -> Result<Option<usize>, CliError> {
    match params.remove(name) {
        None => Ok(None),
        Some(v) => as_integer(&v)
            .and_then(|b| b.to_usize())
            .map(Some)
            .ok_or_else(|| {
                CliError::usage(format!("{name} must be a nonnegative integer, got {v}"))
            }),
    }
}

/// Induced sampling takes either the data row count directly or the weight
/// exponent it realizes.
fn induced_rows(
    params: &mut BTreeMap<String, Rat>,
    field: FieldKind,
    n: usize,
) -> Result<usize, CliError> {
    let m = take_dimension(params, "m")?;
    let alpha = params.remove("alpha");
    match (m, alpha) {
        (Some(m), None) => Ok(m),
        (None, Some(alpha)) => {
            let rows = match field {
                FieldKind::Real => rat_int(2 * n as i64) + rat_int(2) * &alpha,
                FieldKind::Quaternion => rat_int(n as i64) + alpha.clone(),
            };
            as_integer(&rows).and_then(|b| b.to_usize()).ok_or_else(|| {
                CliError::usage(format!(
                    "alpha = {alpha} does not correspond to a whole number of data rows"
                ))
            })
        }
        (Some(_), Some(_)) => Err(CliError::usage("give either m= or alpha=, not both")),
        (None, None) => {
            Err(CliError::usage("induced sampling needs --param m=ROWS or --param alpha=EXPONENT"))
        }
    }
}

/// A `NAME=0` parameter the sampler fixes: accepted for symmetry with the
/// symbolic commands, rejected at any other value.
fn allow_zero_only(
    params: &mut BTreeMap<String, Rat>,
    name: &str,
    label: &str,
) -> Result<(), CliError> {
    if let Some(v) = params.remove(name) {
        if !v.is_zero() {
            return Err(CliError::usage(format!(
                "the {label} sampler realizes {name} = 0 only, got {name} = {v}"
            )));
        }
    }
    Ok(())
}

pub fn mc_ensemble(
    label: &str,
    n: usize,
    raw: &[String],
) -> Result<(McEnsemble, BTreeMap<String, Rat>), CliError> {
    let mut params = parse_param_list(raw)?;
    let echo = params.clone();
    let (family_name, field) = split_label(label)?;
    let ensemble = match (family_name, field) {
        ("ginibre", FieldKind::Real) => McEnsemble::GinibreReal { n },
        ("ginibre", FieldKind::Quaternion) => McEnsemble::GinibreQuaternion { n },
        ("induced", f) => {
            let m_rows = induced_rows(&mut params, f, n)?;
            match f {
                FieldKind::Real => McEnsemble::InducedReal { n, m_rows },
                FieldKind::Quaternion => McEnsemble::InducedQuaternion { n, m_rows },
            }
        }
        ("spherical", f) => {
            allow_zero_only(&mut params, "a1", label)?;
            let m1 = take_dimension(&mut params, "m1")?
                .ok_or_else(|| CliError::usage("spherical sampling needs --param m1=COLS"))?;
            match f {
                FieldKind::Real => McEnsemble::SphericalReal { n, m1 },
                FieldKind::Quaternion => McEnsemble::SphericalQuaternion { n, m1 },
            }
        }
        (_, f) => {
            allow_zero_only(&mut params, "b1", label)?;
            let k = take_dimension(&mut params, "k")?
                .ok_or_else(|| CliError::usage("anti-spherical sampling needs --param k=SIZE"))?;
            match f {
                FieldKind::Real => McEnsemble::AntisphericalReal { n, k },
                FieldKind::Quaternion => McEnsemble::AntisphericalQuaternion { n, k },
            }
        }
    };
    reject_unknown(&params, label)?;
    ensemble.validate().map_err(|e| CliError::usage(e.to_string()))?;
    Ok((ensemble, echo))
}
