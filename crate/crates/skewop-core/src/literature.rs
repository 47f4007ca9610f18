//! Reduction of the general spherical and anti-spherical closed forms to
//! previously published special cases.
//!
//! Earlier work states the odd polynomial for three parameter slices in
//! terms of integer matrix dimensions rather than continuous exponents:
//!
//!   spherical-induced       alpha1 = L/2, alpha2 = (m + L + 2n)/2
//!                           Q_odd = z^(2n+1) - (2n+L)/(m-2n-1) z^(2n-1)
//!   antispherical           beta1 = 0, beta2 = (L - 2n - 1)/2
//!                           Q_odd = z^(2n+1) - 2n/(L+2n) z^(2n-1)
//!   antispherical-induced   beta1 = L1/2, beta2 = (L2 - 2n - 1)/2
//!                           Q_odd = z^(2n+1) - (2n+L1)/(L1+L2+2n) z^(2n-1)
//!
//! (the third generalizes the second, which is its L1 = 0 slice).  The
//! reference pairs are written out literally here, independent of
//! `closed_form`, so the check actually exercises the substitution.

use num::{One, Zero};

use crate::ensemble::{EnsembleSpec, FieldKind, WeightFamily};
use crate::error::CoreError;
use crate::poly::UniPoly;
use crate::rational::{rat_int, Rat};
use crate::skew::{closed_form, CoeffDiff, SkewPolyPair, WhichPoly};

#[derive(Debug, Clone, PartialEq)]
pub enum ReductionCase {
    SphericalInduced { l: Rat, m: Rat },
    Antispherical { l: Rat },
    AntisphericalInduced { l1: Rat, l2: Rat },
}

impl ReductionCase {
    /// The real ensemble whose exponents realize this slice.
    pub fn ensemble(&self, n: usize) -> Result<EnsembleSpec, CoreError> {
        let two_n = rat_int(2 * n as i64);
        let family = match self {
            ReductionCase::SphericalInduced { l, m } => WeightFamily::Spherical {
                alpha1: l / rat_int(2),
                alpha2: (m + l + &two_n) / rat_int(2),
            },
            ReductionCase::Antispherical { l } => WeightFamily::Antispherical {
                beta1: Rat::zero(),
                beta2: (l - &two_n - rat_int(1)) / rat_int(2),
            },
            ReductionCase::AntisphericalInduced { l1, l2 } => WeightFamily::Antispherical {
                beta1: l1 / rat_int(2),
                beta2: (l2 - &two_n - rat_int(1)) / rat_int(2),
            },
        };
        EnsembleSpec::new(FieldKind::Real, family, n)
    }

    /// The published pair, written directly in the dimension variables.
    pub fn reference_pair(&self, n: usize) -> Result<SkewPolyPair, CoreError> {
        let two_n = rat_int(2 * n as i64);
        let (numer, denom) = match self {
            ReductionCase::SphericalInduced { l, m } => {
                (&two_n + l, m - &two_n - rat_int(1))
            }
            ReductionCase::Antispherical { l } => (two_n.clone(), l + &two_n),
            ReductionCase::AntisphericalInduced { l1, l2 } => (&two_n + l1, l1 + l2 + &two_n),
        };
        if denom.is_zero() {
            return Err(CoreError::ParameterPole {
                detail: format!("reference coefficient pole in {self:?} at n = {n}"),
            });
        }
        let mut q_odd = UniPoly::monomial(2 * n + 1, Rat::one());
        q_odd.add_term(2 * n - 1, -(numer / denom));
        Ok(SkewPolyPair {
            q_even: UniPoly::monomial(2 * n, Rat::one()),
            q_odd,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionReport {
    pub substituted: SkewPolyPair,
    pub reference: SkewPolyPair,
    pub first_diff: Option<CoeffDiff>,
}

impl ReductionReport {
    pub fn is_equal(&self) -> bool {
        self.first_diff.is_none()
    }
}

/// Substitutes the slice into the general closed form and compares with the
/// published pair.
pub fn check_reduction(case: &ReductionCase, n: usize) -> Result<ReductionReport, CoreError> {
    let substituted = closed_form(&case.ensemble(n)?)?;
    let reference = case.reference_pair(n)?;
    let diff_of = |which, a: &UniPoly, b: &UniPoly| {
        a.first_difference(b).map(|degree| CoeffDiff {
            which,
            degree,
            derived: a.coeff(degree),
            closed: b.coeff(degree),
        })
    };
    let first_diff = diff_of(WhichPoly::Even, &substituted.q_even, &reference.q_even)
        .or_else(|| diff_of(WhichPoly::Odd, &substituted.q_odd, &reference.q_odd));
    Ok(ReductionReport { substituted, reference, first_diff })
}
