//! Derivation engine and closed forms for the skew orthogonal polynomial
//! pair of each ensemble.
//!
//! The even polynomial is the averaged characteristic polynomial
//!
//!   Q_2n(z) = < det(z - G) >,
//!
//! the odd one is
//!
//!   Q_2n+1(z) = z Q_2n(z) + < det(z - G) Tr G >.
//!
//! Expanding det(z - G) = sum_l z^(2n-l) (-1)^l e_l(eigenvalues of G) and
//! pushing the trace into the sum with one elementary-symmetric Pieri step
//! reduces everything to averages of Schur functions of G.  Over the
//! ensembles here those averages obey a hard selection rule:
//!
//!   real:        < s_mu(G) > = 0 unless mu = 2 kappa (all parts even),
//!   quaternion:  < s_mu(G) > = 0 unless mu = kappa kappa (parts repeat in
//!                pairs),
//!
//! and the surviving values are Jack-polynomial averages of the squared
//! singular values, delegated to `jack_average_ratio`.  The engine runs that
//! pipeline symbolically and exactly; `closed_form` writes down the answer
//! directly from Gamma-function ratios.  Both routes must agree coefficient
//! by coefficient — `check_equal` is the referee.
//!
//! For quaternion ensembles the odd polynomial collapses: every sub-leading
//! term of z Q_2n(z) is cancelled by the trace series.  `derive_odd` asserts
//! that cancellation degree by degree instead of assuming it.

use num::One;

use crate::ensemble::{EnsembleSpec, FieldKind, WeightFamily};
use crate::error::CoreError;
use crate::jack::jack_average_ratio;
use crate::partition::{Partition, vertical_strips};
use crate::poly::UniPoly;
use crate::rational::{rat, rat_int, rat_pow, Rat};
use crate::gamma::gamma_ratio;

/// The polynomial pair of one ensemble: degrees 2n and 2n+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPolyPair {
    pub q_even: UniPoly,
    pub q_odd: UniPoly,
}

/// Selection rule: the shape kappa whose Jack average carries `< s_mu(G) >`,
/// or `None` if the average vanishes by symmetry.
fn surviving_shape(field: FieldKind, mu: &Partition) -> Option<Partition> {
    match field {
        FieldKind::Real => mu.as_doubled(),
        FieldKind::Quaternion => mu.as_squared(),
    }
}

/// `< det(z - G) >`, expanded symbolically.
pub fn derive_even(spec: &EnsembleSpec) -> Result<UniPoly, CoreError> {
    let density = spec.eigen_density();
    let dim = spec.matrix_dim();
    let mut q = UniPoly::zero();
    for l in 0..=dim {
        let Some(kappa) = surviving_shape(spec.field, &Partition::column(l)) else {
            continue;
        };
        let ratio = jack_average_ratio(&density, &kappa)?;
        let signed = if l % 2 == 0 { ratio } else { -ratio };
        q.add_term(dim - l, signed);
    }
    Ok(q)
}

/// `< det(z - G) Tr G >`, expanded symbolically.  Each `z^(2n-l)` term picks
/// up one Pieri step: `e_l` times the single-box `s_(1)` from the trace.
fn derive_trace_series(spec: &EnsembleSpec) -> Result<UniPoly, CoreError> {
    let density = spec.eigen_density();
    let dim = spec.matrix_dim();
    let mut series = UniPoly::zero();
    for l in 0..=dim {
        for mu in vertical_strips(&Partition::column(l), 1, dim) {
            let Some(kappa) = surviving_shape(spec.field, &mu) else {
                continue;
            };
            let ratio = jack_average_ratio(&density, &kappa)?;
            let signed = if l % 2 == 0 { ratio } else { -ratio };
            series.add_term(dim - l, signed);
        }
    }
    Ok(series)
}

/// `z < det(z - G) > + < det(z - G) Tr G >`, the odd polynomial.
///
/// In the quaternion case the result must be the bare monomial `z^(2n+1)`;
/// the function verifies the cancellation term by term and reports any
/// residual as an internal inconsistency instead of returning a wrong
/// polynomial.
pub fn derive_odd(spec: &EnsembleSpec) -> Result<UniPoly, CoreError> {
    let shifted = derive_even(spec)?.shift_mul(1);
    let series = derive_trace_series(spec)?;
    let odd = &shifted + &series;
    if spec.field == FieldKind::Quaternion {
        let expected = UniPoly::monomial(spec.matrix_dim() + 1, Rat::one());
        if let Some(degree) = odd.first_difference(&expected) {
            return Err(CoreError::CancellationFailure {
                degree,
                residual: odd.coeff(degree) - expected.coeff(degree),
            });
        }
    }
    Ok(odd)
}

pub fn derive_pair(spec: &EnsembleSpec) -> Result<SkewPolyPair, CoreError> {
    Ok(SkewPolyPair {
        q_even: derive_even(spec)?,
        q_odd: derive_odd(spec)?,
    })
}

/// The closed-form pair, written directly from Gamma-function ratios.
pub fn closed_form(spec: &EnsembleSpec) -> Result<SkewPolyPair, CoreError> {
    let n = spec.n;
    let dim = spec.matrix_dim();
    match spec.field {
        FieldKind::Real => {
            // Even polynomial is the bare monomial for every real family;
            // the odd one has a single sub-leading term.
            let coeff = match &spec.family {
                WeightFamily::Gaussian => rat_int(2 * n as i64),
                WeightFamily::Induced { alpha } => rat_int(2) * (rat_int(n as i64) + alpha),
                WeightFamily::Spherical { alpha1, alpha2 } => {
                    let denom = alpha2 - (rat_int(2 * n as i64) + alpha1 + rat(1, 2));
                    if num::Zero::is_zero(&denom) {
                        return Err(CoreError::ParameterPole {
                            detail: format!(
                                "spherical coefficient pole: alpha2 = 2n + alpha1 + 1/2 at n = {n}"
                            ),
                        });
                    }
                    (alpha1 + rat_int(n as i64)) / denom
                }
                WeightFamily::Antispherical { beta1, beta2 } => {
                    let denom = beta2 + rat_int(2 * n as i64) + beta1 + rat(1, 2);
                    if num::Zero::is_zero(&denom) {
                        return Err(CoreError::ParameterPole {
                            detail: format!(
                                "antispherical coefficient pole: beta2 = -(2n + beta1 + 1/2) at n = {n}"
                            ),
                        });
                    }
                    (beta1 + rat_int(n as i64)) / denom
                }
            };
            let mut q_odd = UniPoly::monomial(dim + 1, Rat::one());
            q_odd.add_term(dim - 1, -coeff);
            Ok(SkewPolyPair {
                q_even: UniPoly::monomial(dim, Rat::one()),
                q_odd,
            })
        }
        FieldKind::Quaternion => {
            // Odd polynomial is the bare monomial; the even one carries the
            // full coefficient ladder.
            let mut q_even = UniPoly::zero();
            for j in 0..=n {
                let c = quaternion_even_coeff(spec, j)?;
                q_even.add_term(2 * j, c);
            }
            Ok(SkewPolyPair {
                q_even,
                q_odd: UniPoly::monomial(dim + 1, Rat::one()),
            })
        }
    }
}

/// Coefficient of `z^(2j)` in the quaternion even polynomial.
fn quaternion_even_coeff(spec: &EnsembleSpec, j: usize) -> Result<Rat, CoreError> {
    let n = rat_int(spec.n as i64);
    let jr = rat_int(j as i64);
    match &spec.family {
        // 2^(n-j) n!/j!
        WeightFamily::Gaussian => Ok(rat_pow(&rat_int(2), spec.n - j)
            * gamma_ratio(&(&n + rat_int(1)), &(&jr + rat_int(1)))?),
        // 2^(n-j) gamma(n+1+alpha)/gamma(j+1+alpha)
        WeightFamily::Induced { alpha } => Ok(rat_pow(&rat_int(2), spec.n - j)
            * gamma_ratio(&(&n + rat_int(1) + alpha), &(&jr + rat_int(1) + alpha))?),
        // (-1)^(n-j) [gamma(alpha1+n+1)/gamma(alpha1+j+1)]
        //           [gamma(n+j+1/2+alpha1-alpha2)/gamma(2n+1/2+alpha1-alpha2)]
        WeightFamily::Spherical { alpha1, alpha2 } => {
            let sign = if (spec.n - j) % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let head = gamma_ratio(&(alpha1 + &n + rat_int(1)), &(alpha1 + &jr + rat_int(1)))?;
            let tail = gamma_ratio(
                &(&n + &jr + rat(1, 2) + alpha1 - alpha2),
                &(rat_int(2) * &n + rat(1, 2) + alpha1 - alpha2),
            )?;
            Ok(sign * head * tail)
        }
        // same ladder with beta1 + beta2 in place of alpha1 - alpha2, no sign
        WeightFamily::Antispherical { beta1, beta2 } => {
            let head = gamma_ratio(&(beta1 + &n + rat_int(1)), &(beta1 + &jr + rat_int(1)))?;
            let tail = gamma_ratio(
                &(&n + &jr + rat(1, 2) + beta1 + beta2),
                &(rat_int(2) * &n + rat(1, 2) + beta1 + beta2),
            )?;
            Ok(head * tail)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhichPoly {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoeffDiff {
    pub which: WhichPoly,
    pub degree: usize,
    pub derived: Rat,
    pub closed: Rat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EqualityReport {
    pub derived: SkewPolyPair,
    pub closed: SkewPolyPair,
    pub first_diff: Option<CoeffDiff>,
}

impl EqualityReport {
    pub fn is_equal(&self) -> bool {
        self.first_diff.is_none()
    }
}

/// Runs both routes and compares them coefficient by coefficient.
pub fn check_equal(spec: &EnsembleSpec) -> Result<EqualityReport, CoreError> {
    let derived = derive_pair(spec)?;
    let closed = closed_form(spec)?;
    let diff_of = |which, a: &UniPoly, b: &UniPoly| {
        a.first_difference(b).map(|degree| CoeffDiff {
            which,
            degree,
            derived: a.coeff(degree),
            closed: b.coeff(degree),
        })
    };
    let first_diff = diff_of(WhichPoly::Even, &derived.q_even, &closed.q_even)
        .or_else(|| diff_of(WhichPoly::Odd, &derived.q_odd, &closed.q_odd));
    Ok(EqualityReport { derived, closed, first_diff })
}
