//! Matrix ensembles and their induced eigenvalue densities.
//!
//! Each ensemble is a distribution over 2n x 2n matrices G, real or
//! quaternion real (the latter viewed as n x n quaternion, 2n x 2n complex).
//! What the averaging machinery needs from G is only the joint density of the
//! squared singular values, i.e. the eigenvalues of G G^T (real) or G G^dag
//! (quaternion, one copy per quaternion eigenvalue).  `eigen_density` encodes
//! that dictionary:
//!
//!   field       eigenvalues   jack alpha   family of weights
//!   real        2n            2            lambda1 = -1/2 + shift
//!   quaternion  n             1/2          lambda1 = 1 + 2 * shift
//!
//! with the family-dependent shift and second exponent listed per variant
//! below.  Real Gaussian entries have variance 1, quaternion entries variance
//! 1 per quaternion norm; the factor-2 difference shows up as the `scale` of
//! the Gaussian-family densities.

use num::Signed;

use crate::error::CoreError;
use crate::jack::{DensityFamily, EigenDensity};
use crate::rational::{rat, rat_int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Real,
    Quaternion,
}

/// The four weight families treated by the engine.
///
///   - `Gaussian`: iid Gaussian entries.
///   - `Induced { alpha }`: Gaussian weight times det(G G^T)^alpha (real) or
///     det(G G^dag)^(2 alpha) in quaternion form; the rectangular-Gaussian
///     construction realizes integer and half-integer alpha, the symbolic
///     engine accepts any alpha >= 0.
///   - `Spherical { alpha1, alpha2 }`: weight det(G G^T)^alpha1 /
///     det(1 + G G^T)^alpha2 — ratios of Gaussian matrices.
///   - `Antispherical { beta1, beta2 }`: weight det(G G^T)^beta1 *
///     det(1 - G G^T)^beta2 on contractions — truncations of Haar orthogonal
///     or symplectic matrices.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightFamily {
    Gaussian,
    Induced { alpha: Rat },
    Spherical { alpha1: Rat, alpha2: Rat },
    Antispherical { beta1: Rat, beta2: Rat },
}

/// An ensemble of 2n x 2n matrices over the chosen field.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSpec {
    pub field: FieldKind,
    pub family: WeightFamily,
    pub n: usize,
}

impl EnsembleSpec {
    pub fn new(field: FieldKind, family: WeightFamily, n: usize) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::ZeroSize);
        }
        if let WeightFamily::Induced { alpha } = &family {
            if alpha.is_negative() {
                return Err(CoreError::NegativeInducedExponent { alpha: alpha.clone() });
            }
        }
        Ok(Self { field, family, n })
    }

    /// Complex matrix dimension: 2n for both fields.
    pub fn matrix_dim(&self) -> usize {
        2 * self.n
    }

    /// Number of independent squared singular values.
    pub fn eigen_count(&self) -> usize {
        match self.field {
            FieldKind::Real => 2 * self.n,
            FieldKind::Quaternion => self.n,
        }
    }

    /// The joint density of the squared singular values.
    pub fn eigen_density(&self) -> EigenDensity {
        let (jack_alpha, base1, shift_scale) = match self.field {
            // real: |Delta|^1, lambda1 = -1/2 + s
            FieldKind::Real => (rat_int(2), rat(-1, 2), rat_int(1)),
            // quaternion: |Delta|^4, lambda1 = 1 + 2s
            FieldKind::Quaternion => (rat(1, 2), rat_int(1), rat_int(2)),
        };
        let gauss_scale = match self.field {
            FieldKind::Real => rat_int(2),
            FieldKind::Quaternion => rat_int(1),
        };
        let n_vars = self.eigen_count();
        let (family, lambda1, lambda2, scale) = match &self.family {
            WeightFamily::Gaussian => {
                (DensityFamily::Laguerre, base1, rat_int(0), gauss_scale)
            }
            WeightFamily::Induced { alpha } => (
                DensityFamily::Laguerre,
                base1 + &shift_scale * alpha,
                rat_int(0),
                gauss_scale,
            ),
            WeightFamily::Spherical { alpha1, alpha2 } => (
                DensityFamily::Cauchy,
                base1 + &shift_scale * alpha1,
                &shift_scale * alpha2,
                rat_int(1),
            ),
            WeightFamily::Antispherical { beta1, beta2 } => (
                DensityFamily::Jacobi,
                base1 + &shift_scale * beta1,
                &shift_scale * beta2,
                rat_int(1),
            ),
        };
        EigenDensity::new(family, lambda1, lambda2, jack_alpha, n_vars, scale)
            .expect("ensemble parameters always give a valid density")
    }

    /// Short machine label, e.g. `ginibre-r`, `spherical-q`.
    pub fn label(&self) -> String {
        let family = match self.family {
            WeightFamily::Gaussian => "ginibre",
            WeightFamily::Induced { .. } => "induced",
            WeightFamily::Spherical { .. } => "spherical",
            WeightFamily::Antispherical { .. } => "antispherical",
        };
        let field = match self.field {
            FieldKind::Real => "r",
            FieldKind::Quaternion => "q",
        };
        format!("{family}-{field}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::DensityFamily;

    #[test]
    fn gaussian_real_density() {
        let e = EnsembleSpec::new(FieldKind::Real, WeightFamily::Gaussian, 3).unwrap();
        let d = e.eigen_density();
        assert_eq!(d.family, DensityFamily::Laguerre);
        assert_eq!(d.lambda1, rat(-1, 2));
        assert_eq!(d.jack_alpha, rat_int(2));
        assert_eq!(d.n_vars, 6);
        assert_eq!(d.scale, rat_int(2));
        assert_eq!(e.matrix_dim(), 6);
        assert_eq!(e.label(), "ginibre-r");
    }

    #[test]
    fn gaussian_quaternion_density() {
        let e = EnsembleSpec::new(FieldKind::Quaternion, WeightFamily::Gaussian, 3).unwrap();
        let d = e.eigen_density();
        assert_eq!(d.family, DensityFamily::Laguerre);
        assert_eq!(d.lambda1, rat_int(1));
        assert_eq!(d.jack_alpha, rat(1, 2));
        assert_eq!(d.n_vars, 3);
        assert_eq!(d.scale, rat_int(1));
        assert_eq!(e.matrix_dim(), 6);
        assert_eq!(e.label(), "ginibre-q");
    }

    #[test]
    fn induced_densities_shift_lambda1() {
        let e = EnsembleSpec::new(
            FieldKind::Real,
            WeightFamily::Induced { alpha: rat(7, 2) },
            2,
        )
        .unwrap();
        assert_eq!(e.eigen_density().lambda1, rat_int(3));
        let e = EnsembleSpec::new(
            FieldKind::Quaternion,
            WeightFamily::Induced { alpha: rat(7, 2) },
            2,
        )
        .unwrap();
        assert_eq!(e.eigen_density().lambda1, rat_int(8));
        // alpha = 0 collapses to the Gaussian case
        let base = EnsembleSpec::new(FieldKind::Real, WeightFamily::Gaussian, 2).unwrap();
        let shifted = EnsembleSpec::new(
            FieldKind::Real,
            WeightFamily::Induced { alpha: rat_int(0) },
            2,
        )
        .unwrap();
        assert_eq!(base.eigen_density(), shifted.eigen_density());
    }

    #[test]
    fn spherical_and_antispherical_densities() {
        let e = EnsembleSpec::new(
            FieldKind::Real,
            WeightFamily::Spherical { alpha1: rat_int(0), alpha2: rat_int(4) },
            1,
        )
        .unwrap();
        let d = e.eigen_density();
        assert_eq!(d.family, DensityFamily::Cauchy);
        assert_eq!(d.lambda1, rat(-1, 2));
        assert_eq!(d.lambda2, rat_int(4));
        assert_eq!(d.n_vars, 2);

        let e = EnsembleSpec::new(
            FieldKind::Quaternion,
            WeightFamily::Antispherical { beta1: rat(1, 2), beta2: rat(3, 2) },
            2,
        )
        .unwrap();
        let d = e.eigen_density();
        assert_eq!(d.family, DensityFamily::Jacobi);
        assert_eq!(d.lambda1, rat_int(2));
        assert_eq!(d.lambda2, rat_int(3));
        assert_eq!(d.jack_alpha, rat(1, 2));
        assert_eq!(d.n_vars, 2);
        assert_eq!(e.label(), "antispherical-q");
    }

    #[test]
    fn validation() {
        assert!(matches!(
            EnsembleSpec::new(FieldKind::Real, WeightFamily::Gaussian, 0),
            Err(CoreError::ZeroSize)
        ));
        assert!(matches!(
            EnsembleSpec::new(
                FieldKind::Real,
                WeightFamily::Induced { alpha: rat(-1, 2) },
                1
            ),
            Err(CoreError::NegativeInducedExponent { .. })
        ));
    }
}
