//! Matrix samplers for the eight ensembles.
//!
//! Quaternion matrices are kept in their 2x2-block complex representation:
//! each quaternion entry is a block [[z, w], [-conj w, conj z]].  Samplers
//! that build quaternion matrices out of floating-point factorizations
//! re-project the product onto that block structure; the projection averages
//! each block with its structure image and is an exact fixed point, so the
//! block symmetry of returned matrices holds to the last bit.
//!
//! Constructions:
//!   - Gaussian: iid entries.
//!   - induced: Haar times the positive square root of a rectangular Gram
//!     matrix, adding `extra` rows of Gaussian data beyond the square part.
//!   - spherical: inverse square root of one Gram matrix times an
//!     independent square Gaussian (a matrix-variate t).
//!   - anti-spherical: leading sub-block of a Haar orthogonal or symplectic
//!     matrix.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use skewop_core::ensemble::{EnsembleSpec, FieldKind, WeightFamily};
use skewop_core::rational::{rat, rat_int};

use crate::charpoly::CMat;
use crate::McError;

pub type RMat = DMatrix<f64>;

fn gauss<R: Rng>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// `rows x cols` with iid standard normal entries (column-major fill order,
/// so the draw sequence is part of the reproducibility contract).
pub fn real_gaussian<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> RMat {
    RMat::from_fn(rows, cols, |_, _| gauss(rng))
}

pub fn to_complex(m: &RMat) -> CMat {
    CMat::from_fn(m.nrows(), m.ncols(), |i, j| Complex::new(m[(i, j)], 0.0))
}

/// `2h_rows x 2h_cols` complex matrix of quaternion blocks whose four real
/// components are N(0, 1/2), i.e. unit mean square per complex entry.
pub fn quaternion_gaussian<R: Rng>(h_rows: usize, h_cols: usize, rng: &mut R) -> CMat {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut m = CMat::zeros(2 * h_rows, 2 * h_cols);
    for bj in 0..h_cols {
        for bi in 0..h_rows {
            let z = Complex::new(gauss(rng) * s, gauss(rng) * s);
            let w = Complex::new(gauss(rng) * s, gauss(rng) * s);
            m[(2 * bi, 2 * bj)] = z;
            m[(2 * bi, 2 * bj + 1)] = w;
            m[(2 * bi + 1, 2 * bj)] = -w.conj();
            m[(2 * bi + 1, 2 * bj + 1)] = z.conj();
        }
    }
    m
}

/// Largest entry-wise deviation from the quaternion block structure.
pub fn structure_deviation(m: &CMat) -> f64 {
    assert!(m.nrows() % 2 == 0 && m.ncols() % 2 == 0);
    let mut worst = 0.0f64;
    for bj in 0..m.ncols() / 2 {
        for bi in 0..m.nrows() / 2 {
            let a = m[(2 * bi, 2 * bj)];
            let b = m[(2 * bi, 2 * bj + 1)];
            let c = m[(2 * bi + 1, 2 * bj)];
            let d = m[(2 * bi + 1, 2 * bj + 1)];
            worst = worst.max((d - a.conj()).norm()).max((c + b.conj()).norm());
        }
    }
    worst
}

/// Averages each block with its structure image.  Projected matrices report
/// a structure deviation of exactly zero.
pub fn structure_project(m: &mut CMat) {
    assert!(m.nrows() % 2 == 0 && m.ncols() % 2 == 0);
    for bj in 0..m.ncols() / 2 {
        for bi in 0..m.nrows() / 2 {
            let a = m[(2 * bi, 2 * bj)];
            let b = m[(2 * bi, 2 * bj + 1)];
            let c = m[(2 * bi + 1, 2 * bj)];
            let d = m[(2 * bi + 1, 2 * bj + 1)];
            let na = (a + d.conj()) * 0.5;
            let nb = (b - c.conj()) * 0.5;
            m[(2 * bi, 2 * bj)] = na;
            m[(2 * bi, 2 * bj + 1)] = nb;
            m[(2 * bi + 1, 2 * bj)] = -nb.conj();
            m[(2 * bi + 1, 2 * bj + 1)] = na.conj();
        }
    }
}

/// Haar orthogonal matrix: QR of a Gaussian matrix with the R diagonal made
/// positive.  Both determinant signs occur, i.e. Haar on the full O(dim).
pub fn haar_orthogonal<R: Rng>(dim: usize, rng: &mut R) -> RMat {
    let g = real_gaussian(dim, dim, rng);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        if r[(j, j)] < 0.0 {
            for i in 0..dim {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}

/// Haar quaternion unitary (compact symplectic) matrix, `2h x 2h` complex.
///
/// Pairwise Gram-Schmidt: draw a Gaussian even column, orthogonalize against
/// everything already placed, normalize, then write its quaternion partner
/// `v[2i] = -conj(u[2i+1]), v[2i+1] = conj(u[2i])` as the odd column.  The
/// partner is orthogonal to its mate identically (the terms cancel pairwise
/// in exact float arithmetic) and the block structure is exact by
/// construction.
pub fn haar_symplectic<R: Rng>(h: usize, rng: &mut R) -> CMat {
    let dim = 2 * h;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut q = CMat::zeros(dim, dim);
    for k in 0..h {
        loop {
            let mut v: DVector<Complex<f64>> =
                DVector::from_fn(dim, |_, _| Complex::new(gauss(rng) * s, gauss(rng) * s));
            // two passes of modified Gram-Schmidt for orthogonality near
            // machine precision
            for _ in 0..2 {
                for col in 0..2 * k {
                    let proj = q.column(col).dotc(&v);
                    v -= q.column(col) * proj;
                }
            }
            let norm = v.norm();
            if norm > 1e-8 {
                v.unscale_mut(norm);
                for i in 0..dim {
                    q[(i, 2 * k)] = v[i];
                }
                for bi in 0..h {
                    q[(2 * bi, 2 * k + 1)] = -v[2 * bi + 1].conj();
                    q[(2 * bi + 1, 2 * k + 1)] = v[2 * bi].conj();
                }
                break;
            }
        }
    }
    q
}

/// Positive square root of a symmetric PSD matrix, clamping negative
/// round-off eigenvalues to zero.
fn sqrt_psd_real(s: &RMat) -> RMat {
    let sym = (s + s.transpose()) * 0.5;
    let eig = sym.symmetric_eigen();
    let d = eig.eigenvalues.map(|x| x.max(0.0).sqrt());
    &eig.eigenvectors * RMat::from_diagonal(&d) * eig.eigenvectors.transpose()
}

fn sqrt_psd_hermitian(s: &CMat) -> CMat {
    let sym = (s + s.adjoint()) * Complex::new(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    let d = eig.eigenvalues.map(|x| Complex::new(x.max(0.0).sqrt(), 0.0));
    &eig.eigenvectors * CMat::from_diagonal(&d) * eig.eigenvectors.adjoint()
}

const MAX_CONDITION: f64 = 1e12;

/// Inverse square root of a symmetric matrix; `None` when the spectrum is
/// not safely positive (the caller redraws).
fn inv_sqrt_real(a: &RMat) -> Option<RMat> {
    let sym = (a + a.transpose()) * 0.5;
    let eig = sym.symmetric_eigen();
    let max = eig.eigenvalues.max();
    let min = eig.eigenvalues.min();
    if !(min > 0.0) || max / min > MAX_CONDITION {
        return None;
    }
    let d = eig.eigenvalues.map(|x| 1.0 / x.sqrt());
    Some(&eig.eigenvectors * RMat::from_diagonal(&d) * eig.eigenvectors.transpose())
}

fn inv_sqrt_hermitian(a: &CMat) -> Option<CMat> {
    let sym = (a + a.adjoint()) * Complex::new(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    let max = eig.eigenvalues.max();
    let min = eig.eigenvalues.min();
    if !(min > 0.0) || max / min > MAX_CONDITION {
        return None;
    }
    let d = eig.eigenvalues.map(|x| Complex::new(1.0 / x.sqrt(), 0.0));
    Some(&eig.eigenvectors * CMat::from_diagonal(&d) * eig.eigenvectors.adjoint())
}

/// A sampleable ensemble, parameterized by the integer dimensions of its
/// construction.  `ensemble_spec` maps those dimensions to the exact
/// exponents of the matching symbolic ensemble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum McEnsemble {
    /// 2n x 2n iid N(0,1).
    GinibreReal { n: usize },
    /// n x n quaternion Gaussian.
    GinibreQuaternion { n: usize },
    /// Haar O(2n) times the root of a Gram of `m_rows x 2n` Gaussian data;
    /// exponent alpha = (m_rows - 2n)/2.
    InducedReal { n: usize, m_rows: usize },
    /// Same with quaternion data, `m_rows >= n` quaternion rows; exponent
    /// alpha = m_rows - n.
    InducedQuaternion { n: usize, m_rows: usize },
    /// (X X^T)^(-1/2) Y with X of shape 2n x m1; alpha2 = (m1 + 2n)/2.
    SphericalReal { n: usize, m1: usize },
    /// Quaternion version, X of quaternion shape n x m1; alpha2 = m1 + n.
    /// Dictionary validated against the exact scalar distribution at n = 1.
    SphericalQuaternion { n: usize, m1: usize },
    /// Leading 2n x 2n sub-block of Haar O(k); beta2 = (k - 4n - 1)/2.
    AntisphericalReal { n: usize, k: usize },
    /// Leading n x n quaternion sub-block of Haar Sp(k);
    /// beta2 = k - 2n + 1/2.
    AntisphericalQuaternion { n: usize, k: usize },
}

impl McEnsemble {
    pub fn n(&self) -> usize {
        match *self {
            McEnsemble::GinibreReal { n }
            | McEnsemble::GinibreQuaternion { n }
            | McEnsemble::InducedReal { n, .. }
            | McEnsemble::InducedQuaternion { n, .. }
            | McEnsemble::SphericalReal { n, .. }
            | McEnsemble::SphericalQuaternion { n, .. }
            | McEnsemble::AntisphericalReal { n, .. }
            | McEnsemble::AntisphericalQuaternion { n, .. } => n,
        }
    }

    /// Complex matrix dimension of a sample.
    pub fn matrix_dim(&self) -> usize {
        2 * self.n()
    }

    pub fn validate(&self) -> Result<(), McError> {
        let fail = |detail: String| Err(McError::InvalidEnsemble { detail });
        let n = self.n();
        if n == 0 {
            return fail("half-size n must be at least 1".into());
        }
        match *self {
            McEnsemble::InducedReal { m_rows, .. } if m_rows < 2 * n => {
                fail(format!("induced real needs m_rows >= 2n, got {m_rows} < {}", 2 * n))
            }
            McEnsemble::InducedQuaternion { m_rows, .. } if m_rows < n => {
                fail(format!("induced quaternion needs m_rows >= n, got {m_rows} < {n}"))
            }
            McEnsemble::SphericalReal { m1, .. } if m1 < 2 * n => {
                fail(format!("spherical real needs m1 >= 2n, got {m1} < {}", 2 * n))
            }
            McEnsemble::SphericalQuaternion { m1, .. } if m1 < n => {
                fail(format!("spherical quaternion needs m1 >= n, got {m1} < {n}"))
            }
            McEnsemble::AntisphericalReal { k, .. } if k < 4 * n + 1 => {
                fail(format!("antispherical real needs k >= 4n+1, got {k} < {}", 4 * n + 1))
            }
            McEnsemble::AntisphericalQuaternion { k, .. } if k < 2 * n => {
                fail(format!("antispherical quaternion needs k >= 2n, got {k} < {}", 2 * n))
            }
            _ => Ok(()),
        }
    }

    /// The exact symbolic twin of this construction.
    pub fn ensemble_spec(&self) -> EnsembleSpec {
        let n = self.n();
        let (field, family) = match *self {
            McEnsemble::GinibreReal { .. } => (FieldKind::Real, WeightFamily::Gaussian),
            McEnsemble::GinibreQuaternion { .. } => {
                (FieldKind::Quaternion, WeightFamily::Gaussian)
            }
            McEnsemble::InducedReal { m_rows, .. } => (
                FieldKind::Real,
                WeightFamily::Induced { alpha: rat(m_rows as i64 - 2 * n as i64, 2) },
            ),
            McEnsemble::InducedQuaternion { m_rows, .. } => (
                FieldKind::Quaternion,
                WeightFamily::Induced { alpha: rat_int(m_rows as i64 - n as i64) },
            ),
            McEnsemble::SphericalReal { m1, .. } => (
                FieldKind::Real,
                WeightFamily::Spherical {
                    alpha1: rat_int(0),
                    alpha2: rat(m1 as i64 + 2 * n as i64, 2),
                },
            ),
            McEnsemble::SphericalQuaternion { m1, .. } => (
                FieldKind::Quaternion,
                WeightFamily::Spherical {
                    alpha1: rat_int(0),
                    alpha2: rat_int(m1 as i64 + n as i64),
                },
            ),
            McEnsemble::AntisphericalReal { k, .. } => (
                FieldKind::Real,
                WeightFamily::Antispherical {
                    beta1: rat_int(0),
                    beta2: rat(k as i64 - 4 * n as i64 - 1, 2),
                },
            ),
            McEnsemble::AntisphericalQuaternion { k, .. } => (
                FieldKind::Quaternion,
                WeightFamily::Antispherical {
                    beta1: rat_int(0),
                    beta2: rat(2 * (k as i64 - 2 * n as i64) + 1, 2),
                },
            ),
        };
        EnsembleSpec::new(field, family, n).expect("validated construction")
    }

    pub fn label(&self) -> String {
        self.ensemble_spec().label()
    }

    /// Draws one matrix.  The second component counts redraws forced by
    /// ill-conditioned Gram matrices in the spherical constructions.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> (CMat, u64) {
        let n = self.n();
        let dim = 2 * n;
        match *self {
            McEnsemble::GinibreReal { .. } => (to_complex(&real_gaussian(dim, dim, rng)), 0),
            McEnsemble::GinibreQuaternion { .. } => (quaternion_gaussian(n, n, rng), 0),
            McEnsemble::InducedReal { m_rows, .. } => {
                let x = real_gaussian(m_rows, dim, rng);
                let p = sqrt_psd_real(&(x.transpose() * &x));
                let o = haar_orthogonal(dim, rng);
                (to_complex(&(o * p)), 0)
            }
            McEnsemble::InducedQuaternion { m_rows, .. } => {
                let x = quaternion_gaussian(m_rows, n, rng);
                let p = sqrt_psd_hermitian(&(x.adjoint() * &x));
                let mut g = haar_symplectic(n, rng) * p;
                structure_project(&mut g);
                (g, 0)
            }
            McEnsemble::SphericalReal { m1, .. } => {
                let mut regenerated = 0;
                loop {
                    let x = real_gaussian(dim, m1, rng);
                    match inv_sqrt_real(&(&x * x.transpose())) {
                        Some(ai) => {
                            let y = real_gaussian(dim, dim, rng);
                            return (to_complex(&(ai * y)), regenerated);
                        }
                        None => regenerated += 1,
                    }
                }
            }
            McEnsemble::SphericalQuaternion { m1, .. } => {
                let mut regenerated = 0;
                loop {
                    let x = quaternion_gaussian(n, m1, rng);
                    match inv_sqrt_hermitian(&(&x * x.adjoint())) {
                        Some(ai) => {
                            let y = quaternion_gaussian(n, n, rng);
                            let mut g = ai * y;
                            structure_project(&mut g);
                            return (g, regenerated);
                        }
                        None => regenerated += 1,
                    }
                }
            }
            McEnsemble::AntisphericalReal { k, .. } => {
                let o = haar_orthogonal(k, rng);
                (to_complex(&o.view((0, 0), (dim, dim)).into_owned()), 0)
            }
            McEnsemble::AntisphericalQuaternion { k, .. } => {
                let s = haar_symplectic(k, rng);
                // even-aligned sub-block of a structured matrix stays
                // structured exactly
                (s.view((0, 0), (dim, dim)).into_owned(), 0)
            }
        }
    }
}
