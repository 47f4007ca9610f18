//! Characteristic polynomial coefficients by the Faddeev-LeVerrier
//! recurrence.
//!
//! For an N x N matrix G the coefficients of det(zI - G) = sum_k c_k z^k
//! come out of the trace recurrence
//!
//!   M_1 = I,   c_N = 1,
//!   c_(N-k) = -tr(G M_k) / k,   M_(k+1) = G M_k + c_(N-k) I,
//!
//! which needs only matrix products and traces — no eigendecomposition and
//! no pivoting, so the result is a deterministic function of the entries.

use nalgebra::{Complex, DMatrix};

use crate::McError;

pub type CMat = DMatrix<Complex<f64>>;

/// Ascending coefficients `c_0 ... c_N` of `det(zI - G)`; `c_N` is exactly 1.
pub fn charpoly_coeffs(g: &CMat) -> Result<Vec<Complex<f64>>, McError> {
    assert_eq!(g.nrows(), g.ncols(), "characteristic polynomial needs a square matrix");
    if g.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(McError::NonFiniteSample);
    }
    let n = g.nrows();
    let mut coeffs = vec![Complex::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex::new(1.0, 0.0);
    let mut m = CMat::identity(n, n);
    for k in 1..=n {
        let gm = g * &m;
        let c = -gm.trace() / k as f64;
        coeffs[n - k] = c;
        m = gm;
        for i in 0..n {
            m[(i, i)] += c;
        }
    }
    Ok(coeffs)
}
