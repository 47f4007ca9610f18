//! Schur expansions driven by multiplication with elementary symmetric
//! polynomials.
//!
//! Two independent routes to the same objects live here on purpose:
//!
//!   - `pieri_e` expands e_m * s_kappa combinatorially via vertical strips;
//!   - `schur_eval` computes s_kappa at explicit points as a ratio of
//!     alternant determinants, with no strip combinatorics at all.
//!
//! The second is a brute-force oracle used by the test suite to pin down the
//! first; keep them independent.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::CoreError;
use crate::partition::{vertical_strips, Partition};
use crate::rational::{Rat, rat_int};

/// A finite linear combination of Schur functions; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurCombination {
    terms: BTreeMap<Partition, Rat>,
}

impl SchurCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(shape: Partition, coeff: Rat) -> Self {
        let mut c = Self::zero();
        c.add_term(shape, coeff);
        c
    }

    pub fn add_term(&mut self, shape: Partition, coeff: Rat) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(shape) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, shape: &Partition) -> Rat {
        self.terms.get(shape).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    /// Evaluates the combination at the given points via `schur_eval`.
    pub fn eval(&self, points: &[Rat]) -> Result<Rat, CoreError> {
        let mut acc = Rat::zero();
        for (shape, c) in &self.terms {
            acc += c * schur_eval(shape, points)?;
        }
        Ok(acc)
    }
}

/// Expands `e_m * s_kappa` in at most `n_vars` variables.
///
/// The product is multiplicity free: the shapes are exactly the partitions
/// obtained from `kappa` by adding a vertical m-strip, each with coefficient
/// 1, truncated to partitions with at most `n_vars` rows.
pub fn pieri_e(m: usize, kappa: &Partition, n_vars: usize) -> SchurCombination {
    let mut out = SchurCombination::zero();
    for shape in vertical_strips(kappa, m, n_vars) {
        out.add_term(shape, Rat::one());
    }
    out
}

/// `s_kappa(x_1, ..., x_n)` as a ratio of alternants:
///
///   det[ x_i^(kappa_j + n - j) ] / det[ x_i^(n - j) ]
///
/// The points must be pairwise distinct (the Vandermonde denominator
/// vanishes otherwise).  If `kappa` has more parts than there are points the
/// value is 0.
pub fn schur_eval(kappa: &Partition, points: &[Rat]) -> Result<Rat, CoreError> {
    let n = points.len();
    if kappa.len() > n {
        return Ok(Rat::zero());
    }
    let mut vandermonde = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            vandermonde *= &points[i] - &points[j];
        }
    }
    if vandermonde.is_zero() {
        return Err(CoreError::RepeatedPoint);
    }
    let numerator: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| power(&points[i], kappa.part(j) + n - 1 - j))
                .collect()
        })
        .collect();
    Ok(det_exact(numerator) / vandermonde)
}

fn power(x: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Exact determinant by fraction-full Gaussian elimination; fine at the tiny
/// sizes the oracle sees.
fn det_exact(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pivot_val = m[col][col].clone();
        det *= &pivot_val;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot_val;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// `e_l(x_1, ..., x_n)`, computed as a coefficient of `prod_i (1 + t x_i)`.
pub fn elementary_symmetric(l: usize, points: &[Rat]) -> Rat {
    let mut coeffs = vec![Rat::zero(); points.len() + 1];
    coeffs[0] = Rat::one();
    for (i, x) in points.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let bump = &coeffs[k - 1] * x;
            coeffs[k] += bump;
        }
    }
    coeffs.get(l).cloned().unwrap_or_else(Rat::zero)
}

/// Principal value of the normalized column Jack polynomial:
/// `P_{1^j}(1, ..., 1)` over `n_vars` ones equals `binomial(n_vars, j)` for
/// every Jack parameter, because the column polynomial is `e_j` at all
/// parameters.
pub fn jack_column_principal(j: usize, n_vars: usize) -> Result<Rat, CoreError> {
    if j > n_vars {
        return Err(CoreError::TooManyParts {
            kappa: Partition::column(j).to_string(),
            n_vars,
        });
    }
    Ok(rat_int(num::integer::binomial(n_vars as i64, j as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn pts(xs: &[(i64, i64)]) -> Vec<Rat> {
        xs.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn schur_eval_empty_shape_is_one() {
        let x = pts(&[(1, 1), (2, 1), (7, 3)]);
        assert_eq!(schur_eval(&Partition::empty(), &x).unwrap(), rat_int(1));
    }

    #[test]
    fn schur_eval_single_row_is_complete_homogeneous() {
        // s_(2)(x,y) = x^2 + xy + y^2; at (2, 3): 4 + 6 + 9 = 19
        let x = pts(&[(2, 1), (3, 1)]);
        assert_eq!(schur_eval(&p(&[2]), &x).unwrap(), rat_int(19));
    }

    #[test]
    fn schur_eval_column_is_elementary_symmetric() {
        let x = pts(&[(1, 2), (3, 1), (-2, 5), (7, 4)]);
        for l in 0..=4 {
            let col = Partition::column(l);
            assert_eq!(
                schur_eval(&col, &x).unwrap(),
                elementary_symmetric(l, &x),
                "l = {l}"
            );
        }
    }

    #[test]
    fn schur_eval_hook_shape() {
        // s_(2,1) = e1 e2 - e3; at (1, 2, 3): 6*11 - 6 = 60.
        // Same value from the alternant directly: det is -120, Vandermonde -2.
        let x = pts(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(schur_eval(&p(&[2, 1]), &x).unwrap(), rat_int(60));
    }

    #[test]
    fn schur_eval_more_parts_than_points_is_zero() {
        let x = pts(&[(2, 1), (5, 1)]);
        assert_eq!(schur_eval(&p(&[1, 1, 1]), &x).unwrap(), Rat::zero());
    }

    #[test]
    fn schur_eval_rejects_repeated_points() {
        let x = pts(&[(2, 1), (2, 1)]);
        assert!(matches!(
            schur_eval(&p(&[1]), &x),
            Err(CoreError::RepeatedPoint)
        ));
    }

    #[test]
    fn elementary_symmetric_basics() {
        let x = pts(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(elementary_symmetric(0, &x), rat_int(1));
        assert_eq!(elementary_symmetric(1, &x), rat_int(6));
        assert_eq!(elementary_symmetric(2, &x), rat_int(11));
        assert_eq!(elementary_symmetric(3, &x), rat_int(6));
        assert_eq!(elementary_symmetric(4, &x), Rat::zero());
    }

    #[test]
    fn pieri_on_empty_shape_gives_one_column() {
        let c = pieri_e(2, &Partition::empty(), 4);
        assert_eq!(c.len(), 1);
        assert_eq!(c.coeff(&p(&[1, 1])), rat_int(1));
    }

    #[test]
    fn pieri_on_column_splits_into_hook_and_taller_column() {
        let c = pieri_e(1, &Partition::column(2), 4);
        assert_eq!(c.len(), 2);
        assert_eq!(c.coeff(&p(&[2, 1])), rat_int(1));
        assert_eq!(c.coeff(&p(&[1, 1, 1])), rat_int(1));
        // at the row budget the taller column is cut
        let c = pieri_e(1, &Partition::column(2), 2);
        assert_eq!(c.len(), 1);
        assert_eq!(c.coeff(&p(&[2, 1])), rat_int(1));
    }

    #[test]
    fn pieri_matches_alternant_oracle_on_a_sweep() {
        // e_m(x) * s_kappa(x) must equal the expanded combination at several
        // unstructured rational points, for every small kappa and m.
        let shapes = [
            Partition::empty(),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[3, 2]),
            p(&[2, 2, 1]),
        ];
        let points = pts(&[(1, 2), (-3, 1), (5, 7)]);
        for kappa in &shapes {
            for m in 0..=3 {
                let lhs =
                    elementary_symmetric(m, &points) * schur_eval(kappa, &points).unwrap();
                let rhs = pieri_e(m, kappa, points.len()).eval(&points).unwrap();
                assert_eq!(lhs, rhs, "kappa = {kappa}, m = {m}");
            }
        }
    }

    #[test]
    fn column_principal_values_follow_pascal() {
        for n in 0..=10usize {
            for j in 0..=n {
                let expected = jack_column_principal(j, n).unwrap();
                let recurrence = if j == 0 || j == n {
                    rat_int(1)
                } else {
                    jack_column_principal(j - 1, n - 1).unwrap()
                        + jack_column_principal(j, n - 1).unwrap()
                };
                assert_eq!(expected, recurrence, "n = {n}, j = {j}");
            }
        }
        assert_eq!(jack_column_principal(2, 6).unwrap(), rat_int(15));
        assert!(jack_column_principal(3, 2).is_err());
    }

    #[test]
    fn column_principal_matches_elementary_symmetric_count() {
        // P_{1^j} is e_j for every Jack parameter, so its value at all-ones
        // counts the j-subsets.  e_j at distinct points provides the same
        // cross-check without degenerate alternants.
        let x = pts(&[(1, 1), (2, 1), (4, 1), (8, 1)]);
        for j in 0..=4 {
            assert_eq!(
                schur_eval(&Partition::column(j), &x).unwrap(),
                elementary_symmetric(j, &x)
            );
        }
        assert_eq!(jack_column_principal(2, 4).unwrap(), rat_int(6));
    }
}
