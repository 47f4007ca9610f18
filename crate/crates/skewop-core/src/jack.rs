//! Averages of Jack polynomials over Selberg-type eigenvalue densities.
//!
//! For the three one-parameter families of positive-eigenvalue densities
//!
//!   jacobi    w(x) = x^lambda1 (1-x)^lambda2      on (0,1)
//!   laguerre  w(x) = x^lambda1 exp(-x)            on (0,infinity)
//!   cauchy    w(x) = x^lambda1 (1+x)^(-lambda2)   on (0,infinity)
//!
//! the mean of a normalized Jack polynomial P_kappa with parameter alpha over
//! N eigenvalues drawn from prod_i w(x_i) |Delta(x)|^(2/alpha) is a ratio of
//! generalized Pochhammer symbols times P_kappa(1^N):
//!
//!   <P_kappa> = P_kappa(1^N) * [u1]_kappa / D_kappa,
//!   u1 = lambda1 + (N-1)/alpha + 1,
//!
//! with D_kappa = 1 for laguerre,
//!      D_kappa = [lambda1 + lambda2 + 2(N-1)/alpha + 2]_kappa for jacobi,
//!      D_kappa = (-1)^|kappa| [lambda1 - lambda2 + 2(N-1)/alpha + 2]_kappa
//!      for cauchy,
//! and the generalized Pochhammer symbol
//!
//!   [u]_kappa = prod_j (u - (j-1)/alpha)(u - (j-1)/alpha + 1)...(u - (j-1)/alpha + kappa_j - 1).
//!
//! A `scale` field stretches the density by x -> x/scale, multiplying the
//! average of a degree-|kappa| polynomial by scale^|kappa|.
//!
//! Parameter combinations that make a Pochhammer row cross a nonpositive
//! integer correspond to divergent Selberg integrals and are reported as
//! structured errors, never silently evaluated.

use num::{One, Signed};

use crate::error::CoreError;
use crate::gamma::rising_factorial;
use crate::partition::Partition;
use crate::rational::{is_nonpositive_integer, rat_int, rat_pow, Rat};
use crate::schur::jack_column_principal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityFamily {
    Jacobi,
    Laguerre,
    Cauchy,
}

/// Joint eigenvalue density: `prod_i w(x_i / scale) |Delta(x)|^(2/alpha)`
/// over `n_vars` positive eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDensity {
    pub family: DensityFamily,
    pub lambda1: Rat,
    pub lambda2: Rat,
    pub jack_alpha: Rat,
    pub n_vars: usize,
    pub scale: Rat,
}

impl EigenDensity {
    pub fn new(
        family: DensityFamily,
        lambda1: Rat,
        lambda2: Rat,
        jack_alpha: Rat,
        n_vars: usize,
        scale: Rat,
    ) -> Result<Self, CoreError> {
        if !jack_alpha.is_positive() {
            return Err(CoreError::InvalidParameter {
                detail: format!("jack parameter must be positive, got {jack_alpha}"),
            });
        }
        if n_vars == 0 {
            return Err(CoreError::InvalidParameter {
                detail: "eigenvalue count must be at least 1".into(),
            });
        }
        if !scale.is_positive() {
            return Err(CoreError::InvalidParameter {
                detail: format!("scale must be positive, got {scale}"),
            });
        }
        Ok(Self { family, lambda1, lambda2, jack_alpha, n_vars, scale })
    }
}

/// Argument bundle for a generalized Pochhammer symbol `[u]_kappa^(alpha)`
/// over `n_vars` rows.
#[derive(Debug, Clone, PartialEq)]
pub struct PochhammerSpec {
    pub u: Rat,
    pub kappa: Partition,
    pub jack_alpha: Rat,
    pub n_vars: usize,
}

/// Evaluates `[u]_kappa^(alpha)`, the row-wise product of rising factorials
/// `(u - (j-1)/alpha)_(kappa_j)`.
///
/// A row whose rising factorial walks across zero makes the enclosing Selberg
/// integral divergent, so it is an error rather than a zero.
pub fn pochhammer_general(spec: &PochhammerSpec) -> Result<Rat, CoreError> {
    if spec.kappa.len() > spec.n_vars {
        return Err(CoreError::TooManyParts {
            kappa: spec.kappa.to_string(),
            n_vars: spec.n_vars,
        });
    }
    let mut acc = Rat::one();
    for (row0, &count) in spec.kappa.parts().iter().enumerate() {
        let base = &spec.u - rat_int(row0 as i64) / &spec.jack_alpha;
        if is_nonpositive_integer(&base) && (&base + rat_int(count as i64)).is_positive() {
            return Err(CoreError::PochhammerPole { row: row0 + 1, base });
        }
        acc *= rising_factorial(&base, count);
    }
    Ok(acc)
}

/// `<P_kappa> / P_kappa(1^N)` for the given density: the Pochhammer quotient
/// with the principal-value prefactor divided out, valid for every shape.
pub fn jack_average_ratio(density: &EigenDensity, kappa: &Partition) -> Result<Rat, CoreError> {
    let divergent = |e: CoreError| match e {
        CoreError::PochhammerPole { row, .. } => CoreError::DivergentAverage {
            family: density.family,
            lambda1: density.lambda1.clone(),
            lambda2: density.lambda2.clone(),
            kappa: kappa.to_string(),
            row,
        },
        other => other,
    };
    let n_shift = rat_int(density.n_vars as i64 - 1) / &density.jack_alpha;
    let numerator = pochhammer_general(&PochhammerSpec {
        u: &density.lambda1 + &n_shift + rat_int(1),
        kappa: kappa.clone(),
        jack_alpha: density.jack_alpha.clone(),
        n_vars: density.n_vars,
    })
    .map_err(divergent)?;
    let denominator = match density.family {
        DensityFamily::Laguerre => Rat::one(),
        DensityFamily::Jacobi => pochhammer_general(&PochhammerSpec {
            u: &density.lambda1 + &density.lambda2 + rat_int(2) * &n_shift + rat_int(2),
            kappa: kappa.clone(),
            jack_alpha: density.jack_alpha.clone(),
            n_vars: density.n_vars,
        })
        .map_err(divergent)?,
        DensityFamily::Cauchy => {
            let unsigned = pochhammer_general(&PochhammerSpec {
                u: &density.lambda1 - &density.lambda2 + rat_int(2) * &n_shift + rat_int(2),
                kappa: kappa.clone(),
                jack_alpha: density.jack_alpha.clone(),
                n_vars: density.n_vars,
            })
            .map_err(divergent)?;
            if kappa.weight() % 2 == 0 {
                unsigned
            } else {
                -unsigned
            }
        }
    };
    // pochhammer_general errors on every zero crossing, so an Ok denominator
    // is nonzero.
    Ok(rat_pow(&density.scale, kappa.weight()) * numerator / denominator)
}

/// `<P_kappa>` itself.  The `P_kappa(1^N)` prefactor is implemented for
/// column shapes (where it is a plain binomial for every Jack parameter);
/// other shapes are rejected.
pub fn jack_average(density: &EigenDensity, kappa: &Partition) -> Result<Rat, CoreError> {
    if !kappa.is_column() {
        return Err(CoreError::UnsupportedShape { kappa: kappa.to_string() });
    }
    let prefactor = jack_column_principal(kappa.len(), density.n_vars)?;
    Ok(prefactor * jack_average_ratio(density, kappa)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num::Zero;

    fn poch(u: Rat, parts: &[usize], alpha: Rat, n_vars: usize) -> Result<Rat, CoreError> {
        pochhammer_general(&PochhammerSpec {
            u,
            kappa: Partition::new(parts.to_vec()),
            jack_alpha: alpha,
            n_vars,
        })
    }

    #[test]
    fn pochhammer_of_empty_shape_is_one() {
        assert_eq!(poch(rat(7, 3), &[], rat(1, 2), 4).unwrap(), rat_int(1));
    }

    #[test]
    fn pochhammer_column_at_half_alpha_steps_by_two() {
        // rows shift by 1/alpha = 2: u(u-2)(u-4) for a 3-column
        assert_eq!(poch(rat_int(7), &[1, 1, 1], rat(1, 2), 3).unwrap(), rat_int(105));
        assert_eq!(poch(rat_int(1), &[1], rat(1, 2), 1).unwrap(), rat_int(1));
    }

    #[test]
    fn pochhammer_general_shape_at_alpha_two() {
        // rows shift by 1/2: (5/2)(7/2)(9/2) * (2) = 315/4
        assert_eq!(poch(rat(5, 2), &[3, 1], rat_int(2), 2).unwrap(), rat(315, 4));
        // alpha = 1: (3)(4) * (2)(3) = 72
        assert_eq!(poch(rat_int(3), &[2, 2], rat_int(1), 2).unwrap(), rat_int(72));
    }

    #[test]
    fn pochhammer_pole_detection() {
        // base 0 with a positive count crosses zero
        let err = poch(rat_int(0), &[1], rat_int(2), 1).unwrap_err();
        assert!(matches!(err, CoreError::PochhammerPole { row: 1, .. }));
        // base -2, count 3 walks (-2)(-1)(0)
        assert!(poch(rat_int(-2), &[3], rat_int(2), 1).is_err());
        // base -2, count 2 stops short of zero: (-2)(-1) = 2
        assert_eq!(poch(rat_int(-2), &[2], rat_int(2), 1).unwrap(), rat_int(2));
        // pole in a later row reports that row: second-row base 2 - 1/alpha = 0
        let err = poch(rat_int(2), &[1, 1], rat(1, 2), 2).unwrap_err();
        assert!(matches!(err, CoreError::PochhammerPole { row: 2, .. }));
        // half-integer bases never cross: (1/2)(3/2) * (-3/2)(-1/2) = 9/16
        assert_eq!(poch(rat(1, 2), &[2, 2], rat(1, 2), 2).unwrap(), rat(9, 16));
        // non-integer bases never cross
        assert_eq!(poch(rat(-7, 2), &[4], rat_int(2), 1).unwrap(), rat(105, 16));
    }

    #[test]
    fn pochhammer_rejects_too_many_rows() {
        assert!(matches!(
            poch(rat_int(3), &[1, 1, 1], rat_int(2), 2),
            Err(CoreError::TooManyParts { .. })
        ));
    }

    fn density(
        family: DensityFamily,
        lambda1: Rat,
        lambda2: Rat,
        alpha: Rat,
        n_vars: usize,
        scale: Rat,
    ) -> EigenDensity {
        EigenDensity::new(family, lambda1, lambda2, alpha, n_vars, scale).unwrap()
    }

    #[test]
    fn density_validation() {
        assert!(EigenDensity::new(
            DensityFamily::Laguerre,
            rat_int(1),
            Rat::zero(),
            Rat::zero(),
            1,
            Rat::one()
        )
        .is_err());
        assert!(EigenDensity::new(
            DensityFamily::Laguerre,
            rat_int(1),
            Rat::zero(),
            rat_int(2),
            0,
            Rat::one()
        )
        .is_err());
        assert!(EigenDensity::new(
            DensityFamily::Laguerre,
            rat_int(1),
            Rat::zero(),
            rat_int(2),
            1,
            rat_int(-2)
        )
        .is_err());
    }

    // Single-eigenvalue averages reduce to classical integrals; the expected
    // values below were computed from Gamma/Beta quotients by hand.  With one
    // variable every P_kappa(1) is 1, so <x^k> is exactly the ratio for the
    // single-row shape (k); jack_average itself only admits column shapes.

    #[test]
    fn laguerre_single_variable_matches_gamma_moments() {
        // <x^k> over x^lambda1 e^-x is (lambda1+1)...(lambda1+k)
        let d = density(DensityFamily::Laguerre, rat_int(1), Rat::zero(), rat(1, 2), 1, Rat::one());
        assert_eq!(jack_average(&d, &Partition::new(vec![1])).unwrap(), rat_int(2));
        assert_eq!(jack_average_ratio(&d, &Partition::new(vec![2])).unwrap(), rat_int(6));
        let d = density(DensityFamily::Laguerre, rat(-1, 2), Rat::zero(), rat_int(2), 1, Rat::one());
        // <x> = 1/2, <x^2> = (1/2)(3/2)
        assert_eq!(jack_average(&d, &Partition::new(vec![1])).unwrap(), rat(1, 2));
        assert_eq!(jack_average_ratio(&d, &Partition::new(vec![2])).unwrap(), rat(3, 4));
    }

    #[test]
    fn jacobi_single_variable_matches_beta_moments() {
        // <x> over x (1-x) on (0,1) is B(3,2)/B(2,2) = 1/2
        let d = density(DensityFamily::Jacobi, rat_int(1), rat_int(1), rat(1, 2), 1, Rat::one());
        assert_eq!(jack_average(&d, &Partition::new(vec![1])).unwrap(), rat(1, 2));
        // <x^2> over x^(-1/2) (1-x)^3: B(5/2,4)/B(1/2,4) = 1/33
        let d = density(DensityFamily::Jacobi, rat(-1, 2), rat_int(3), rat_int(2), 1, Rat::one());
        assert_eq!(jack_average_ratio(&d, &Partition::new(vec![2])).unwrap(), rat(1, 33));
    }

    #[test]
    fn cauchy_single_variable_matches_beta_moments() {
        // <x> over x (1+x)^-5: B(3,2)/B(2,3) = 1
        let d = density(DensityFamily::Cauchy, rat_int(1), rat_int(5), rat(1, 2), 1, Rat::one());
        assert_eq!(jack_average(&d, &Partition::new(vec![1])).unwrap(), rat_int(1));
        // <x> over x^(-1/2) (1+x)^-4: B(3/2,5/2)/B(1/2,7/2) = 1/5
        let d = density(DensityFamily::Cauchy, rat(-1, 2), rat_int(4), rat_int(2), 1, Rat::one());
        assert_eq!(jack_average(&d, &Partition::new(vec![1])).unwrap(), rat(1, 5));
        // <x^2> over x^(-1/2) (1+x)^-6: B(5/2,7/2)/B(1/2,11/2) = 1/21
        let d = density(DensityFamily::Cauchy, rat(-1, 2), rat_int(6), rat_int(2), 1, Rat::one());
        assert_eq!(jack_average_ratio(&d, &Partition::new(vec![2])).unwrap(), rat(1, 21));
    }

    #[test]
    fn scale_multiplies_degree_weight_power() {
        let unit = density(DensityFamily::Laguerre, rat(-1, 2), Rat::zero(), rat_int(2), 3, Rat::one());
        let doubled = density(DensityFamily::Laguerre, rat(-1, 2), Rat::zero(), rat_int(2), 3, rat_int(2));
        for parts in [vec![1], vec![1, 1], vec![1, 1, 1]] {
            let kappa = Partition::new(parts);
            let w = kappa.weight();
            assert_eq!(
                jack_average(&doubled, &kappa).unwrap(),
                rat_pow(&rat_int(2), w) * jack_average(&unit, &kappa).unwrap()
            );
        }
    }

    #[test]
    fn empty_shape_averages_to_one() {
        let d = density(DensityFamily::Jacobi, rat(1, 3), rat(5, 2), rat(1, 2), 4, rat_int(3));
        assert_eq!(jack_average(&d, &Partition::empty()).unwrap(), rat_int(1));
        assert_eq!(jack_average_ratio(&d, &Partition::empty()).unwrap(), rat_int(1));
    }

    #[test]
    fn ratio_times_principal_value_recovers_average() {
        let d = density(DensityFamily::Jacobi, rat(-1, 2), rat(7, 2), rat_int(2), 4, Rat::one());
        let kappa = Partition::column(2);
        let ratio = jack_average_ratio(&d, &kappa).unwrap();
        // P_{1^2}(1^4) = C(4,2) = 6
        assert_eq!(jack_average(&d, &kappa).unwrap(), rat_int(6) * ratio);
    }

    #[test]
    fn non_column_shapes_have_ratio_but_no_average() {
        let d = density(DensityFamily::Laguerre, rat_int(1), Rat::zero(), rat(1, 2), 3, Rat::one());
        let hook = Partition::new(vec![2, 1]);
        assert!(jack_average_ratio(&d, &hook).is_ok());
        assert!(matches!(
            jack_average(&d, &hook),
            Err(CoreError::UnsupportedShape { .. })
        ));
    }

    #[test]
    fn divergent_average_carries_density_context() {
        // cauchy with lambda2 small enough that <x> diverges:
        // denominator base lambda1 - lambda2 + 2 = 0 crosses zero
        let d = density(DensityFamily::Cauchy, rat_int(1), rat_int(3), rat(1, 2), 1, Rat::one());
        match jack_average(&d, &Partition::new(vec![1])) {
            Err(CoreError::DivergentAverage { family, row, .. }) => {
                assert_eq!(family, DensityFamily::Cauchy);
                assert_eq!(row, 1);
            }
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn jacobi_with_large_lambda2_approaches_laguerre() {
        // Stretching x by M while sending lambda2 -> M turns the jacobi
        // factor (1 - x/M)^M into exp(-x); the kappa=(1) averages then agree
        // to O(1/M).
        let laguerre =
            density(DensityFamily::Laguerre, rat_int(1), Rat::zero(), rat_int(2), 4, Rat::one());
        let target = jack_average(&laguerre, &Partition::new(vec![1])).unwrap();
        for (m, tol) in [(1000i64, rat(1, 100)), (10000, rat(1, 1000))] {
            let jac = density(
                DensityFamily::Jacobi,
                rat_int(1),
                rat_int(m),
                rat_int(2),
                4,
                rat_int(m),
            );
            let approx = jack_average(&jac, &Partition::new(vec![1])).unwrap();
            let rel = (approx / &target - rat_int(1)).abs();
            assert!(rel <= tol, "M = {m}: relative deviation {rel}");
        }
    }
}
