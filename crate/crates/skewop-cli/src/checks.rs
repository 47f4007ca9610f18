//! Grid sweeps: exhaustive route-against-route comparison over parameter
//! grids, and closed-form-against-published-formula comparison.
//!
//! Grid points where the parameters genuinely leave the domain (divergent
//! average, coefficient pole) are excluded from the verdict and listed in
//! the report; every other point must match exactly.

use std::collections::BTreeMap;

use skewop_core::ensemble::{EnsembleSpec, FieldKind, WeightFamily};
use skewop_core::error::CoreError;
use skewop_core::literature::{check_reduction, ReductionCase};
use skewop_core::rational::{rat, rat_int, Rat};
use skewop_core::skew::{closed_form, derive_pair, WhichPoly};

use crate::{core_exit_code, CliError};

pub struct Failure {
    pub case: String,
    pub which: &'static str,
    pub degree: usize,
    pub detail: String,
}

pub struct CheckOutcome {
    pub checked: usize,
    pub excluded: Vec<String>,
    pub failure: Option<Failure>,
}

fn which_name(w: WhichPoly) -> &'static str {
    match w {
        WhichPoly::Even => "q_even",
        WhichPoly::Odd => "q_odd",
    }
}

/// One grid point: both routes, optional deliberate corruption of the
/// closed form, first differing coefficient if any.
fn compare_case(spec: &EnsembleSpec, corrupt: Option<usize>) -> Result<Option<Failure>, CoreError> {
    let derived = derive_pair(spec)?;
    let mut closed = closed_form(spec)?;
    if let Some(degree) = corrupt {
        if degree % 2 == 0 {
            closed.q_even.add_term(degree, rat_int(1));
        } else {
            closed.q_odd.add_term(degree, rat_int(1));
        }
    }
    for (which, a, b) in [
        (WhichPoly::Even, &derived.q_even, &closed.q_even),
        (WhichPoly::Odd, &derived.q_odd, &closed.q_odd),
    ] {
        if let Some(degree) = a.first_difference(b) {
            return Ok(Some(Failure {
                case: String::new(),
                which: which_name(which),
                degree,
                detail: format!("derived {} != closed {}", a.coeff(degree), b.coeff(degree)),
            }));
        }
    }
    Ok(None)
}

fn grid_or<'a>(
    grids: &'a BTreeMap<String, Vec<Rat>>,
    name: &str,
    default: &[Rat],
) -> Vec<Rat> {
    grids.get(name).cloned().unwrap_or_else(|| default.to_vec())
}

pub fn run_symbolic_grid(
    n_max: usize,
    grids: &BTreeMap<String, Vec<Rat>>,
    corrupt: Option<usize>,
) -> Result<CheckOutcome, CliError> {
    let alphas = grid_or(grids, "alpha", &[
        rat_int(0),
        rat(1, 2),
        rat_int(1),
        rat_int(3),
        rat(7, 2),
        rat_int(10),
    ]);
    let halves = [rat_int(0), rat(1, 2), rat_int(1), rat(5, 2)];
    let a1s = grid_or(grids, "a1", &halves);
    let b1s = grid_or(grids, "b1", &halves);
    let b2s = grid_or(grids, "b2", &[rat(1, 2), rat_int(1), rat_int(3), rat(11, 2)]);
    // decay exponents track 2n + a1 by default so every n stays convergent
    let a2_offsets: Vec<Rat> = std::iter::once(rat(3, 2))
        .chain((2..=10).map(rat_int))
        .collect();
    let a2_absolute = grids.get("a2");

    let mut cases: Vec<(String, EnsembleSpec)> = Vec::new();
    let push = |cases: &mut Vec<(String, EnsembleSpec)>,
                    tag: String,
                    field: FieldKind,
                    family: WeightFamily,
                    n: usize|
     -> Result<(), CliError> {
        let spec =
            EnsembleSpec::new(field, family, n).map_err(|e| CliError::usage(e.to_string()))?;
        cases.push((format!("{} {tag}", spec.label()), spec));
        Ok(())
    };

    for field in [FieldKind::Real, FieldKind::Quaternion] {
        for n in 1..=n_max {
            push(&mut cases, format!("n={n}"), field, WeightFamily::Gaussian, n)?;
            for alpha in &alphas {
                push(
                    &mut cases,
                    format!("n={n} alpha={alpha}"),
                    field,
                    WeightFamily::Induced { alpha: alpha.clone() },
                    n,
                )?;
            }
            for a1 in &a1s {
                let a2s: Vec<Rat> = match a2_absolute {
                    Some(list) => list.clone(),
                    None => a2_offsets
                        .iter()
                        .map(|d| rat_int(2 * n as i64) + a1 + d)
                        .collect(),
                };
                for a2 in a2s {
                    push(
                        &mut cases,
                        format!("n={n} a1={a1} a2={a2}"),
                        field,
                        WeightFamily::Spherical { alpha1: a1.clone(), alpha2: a2 },
                        n,
                    )?;
                }
            }
            for b1 in &b1s {
                for b2 in &b2s {
                    push(
                        &mut cases,
                        format!("n={n} b1={b1} b2={b2}"),
                        field,
                        WeightFamily::Antispherical { beta1: b1.clone(), beta2: b2.clone() },
                        n,
                    )?;
                }
            }
        }
    }

    scan(cases.into_iter(), |spec| compare_case(spec, corrupt))
}

/// Walks the case list, sorting each outcome into checked / excluded /
/// first failure.
fn scan<I, F, S>(cases: I, mut run: F) -> Result<CheckOutcome, CliError>
where
    I: Iterator<Item = (String, S)>,
    F: FnMut(&S) -> Result<Option<Failure>, CoreError>,
{
    let mut outcome = CheckOutcome { checked: 0, excluded: Vec::new(), failure: None };
    for (label, case) in cases {
        match run(&case) {
            Ok(None) => outcome.checked += 1,
            Ok(Some(mut failure)) => {
                failure.case = label;
                outcome.failure = Some(failure);
                break;
            }
            Err(e) if core_exit_code(&e) == 3 => {
                outcome.excluded.push(format!("{label}: {e}"));
            }
            Err(e) => return Err(CliError::from_core(e)),
        }
    }
    Ok(outcome)
}

#[derive(Clone, Copy)]
pub enum LitKind {
    SphericalInduced,
    Antispherical,
    AntisphericalInduced,
}

pub fn run_literature_grid(kinds: &[LitKind], n_max: usize) -> CheckOutcome {
    let mut cases: Vec<(String, (ReductionCase, usize))> = Vec::new();
    for &kind in kinds {
        for n in 1..=n_max {
            match kind {
                LitKind::SphericalInduced => {
                    for l in 1..=6 {
                        for m in (2 * n + 2)..=(2 * n + 8) {
                            cases.push((
                                format!("spherical-induced n={n} l={l} m={m}"),
                                (
                                    ReductionCase::SphericalInduced {
                                        l: rat_int(l),
                                        m: rat_int(m as i64),
                                    },
                                    n,
                                ),
                            ));
                        }
                    }
                }
                LitKind::Antispherical => {
                    for l in 1..=6 {
                        cases.push((
                            format!("antispherical n={n} l={l}"),
                            (ReductionCase::Antispherical { l: rat_int(l) }, n),
                        ));
                    }
                }
                LitKind::AntisphericalInduced => {
                    for l1 in 0..=3 {
                        for l2 in 1..=6 {
                            cases.push((
                                format!("antispherical-induced n={n} l1={l1} l2={l2}"),
                                (
                                    ReductionCase::AntisphericalInduced {
                                        l1: rat_int(l1),
                                        l2: rat_int(l2),
                                    },
                                    n,
                                ),
                            ));
                        }
                    }
                }
            }
        }
    }

    scan(cases.into_iter(), |(case, n)| {
        let report = check_reduction(case, *n)?;
        Ok(report.first_diff.map(|d| Failure {
            case: String::new(),
            which: which_name(d.which),
            degree: d.degree,
            detail: format!("substituted {} != reference {}", d.derived, d.closed),
        }))
    })
    .expect("literature grids contain no usage-level inputs")
}
