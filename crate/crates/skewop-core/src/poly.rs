//! Sparse univariate polynomials with exact rational coefficients.
//!
//! The polynomials produced by the derivation engine are sparse in a strong
//! sense: an even polynomial of degree 2n carries at most n+1 terms.  `UniPoly`
//! therefore stores a degree -> coefficient map and never keeps zeros, so two
//! polynomials are equal iff their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num::{One, Signed, Zero};

use crate::rational::{rat_to_f64, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    terms: BTreeMap<usize, Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * z^degree`; the zero polynomial if `coeff == 0`.
    pub fn monomial(degree: usize, coeff: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// Adds `coeff * z^degree` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, degree: usize, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(degree).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of `z^degree` (zero if the term is absent).
    pub fn coeff(&self, degree: usize) -> Rat {
        self.terms.get(&degree).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.degree().is_some_and(|d| self.terms[&d].is_one())
    }

    /// True if every exponent has the parity of `parity` (0 = even, 1 = odd).
    /// The zero polynomial has both parities.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.terms.keys().all(|d| d % 2 == parity % 2)
    }

    /// `z^k * self`.
    pub fn shift_mul(&self, k: usize) -> UniPoly {
        UniPoly {
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            terms: self.terms.iter().map(|(d, k)| (*d, k * c)).collect(),
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        // Horner over the sparse terms, high degree first.
        let mut acc = Rat::zero();
        let mut prev: Option<usize> = None;
        for (d, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                for _ in 0..(p - d) {
                    acc *= x;
                }
            }
            acc += c;
            prev = Some(*d);
        }
        if let Some(p) = prev {
            for _ in 0..p {
                acc *= x;
            }
        }
        acc
    }

    /// Ascending (degree, coefficient) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// Coefficients for degrees `0..len` as floats (dense, ascending).
    pub fn f64_coeffs(&self, len: usize) -> Vec<f64> {
        let mut out = vec![0.0; len];
        for (d, c) in &self.terms {
            if *d < len {
                out[*d] = rat_to_f64(c);
            }
        }
        out
    }

    /// Lowest degree at which the two polynomials differ.
    pub fn first_difference(&self, other: &UniPoly) -> Option<usize> {
        let top = self.degree().unwrap_or(0).max(other.degree().unwrap_or(0));
        (0..=top).find(|&d| self.coeff(d) != other.coeff(d))
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, c.clone());
        }
    }
}

impl AddAssign<UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: UniPoly) {
        for (d, c) in rhs.terms {
            self.add_term(d, c);
        }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(mut self, rhs: UniPoly) -> UniPoly {
        self += rhs;
        self
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl fmt::Display for UniPoly {
    /// Descending-degree rendering, e.g. `z^5 - 6 z^3 + 1/2 z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && *d != 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "{}z", if unit_coeff { "" } else { " " })?,
                _ => write!(f, "{}z^{d}", if unit_coeff { "" } else { " " })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(terms: &[(usize, i64)]) -> UniPoly {
        UniPoly::from_terms(terms.iter().map(|&(d, c)| (d, rat_int(c))))
    }

    #[test]
    fn zero_and_degree() {
        assert!(UniPoly::zero().is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::monomial(3, Rat::zero()), UniPoly::zero());
        assert_eq!(p(&[(0, 2)]).degree(), Some(0));
        assert_eq!(p(&[(5, 1), (3, -6)]).degree(), Some(5));
    }

    #[test]
    fn addition_cancels_terms() {
        let a = p(&[(2, 3), (0, 1)]);
        let b = p(&[(2, -3), (1, 4)]);
        let sum = &a + &b;
        assert_eq!(sum, p(&[(1, 4), (0, 1)]));
        assert_eq!(&a - &a, UniPoly::zero());
    }

    #[test]
    fn shift_and_scale() {
        let a = p(&[(2, 1), (0, -5)]);
        assert_eq!(a.shift_mul(3), p(&[(5, 1), (3, -5)]));
        assert_eq!(a.scaled(&rat(1, 2)), UniPoly::from_terms([(2, rat(1, 2)), (0, rat(-5, 2))]));
        assert_eq!(a.scaled(&Rat::zero()), UniPoly::zero());
    }

    #[test]
    fn eval_matches_direct_expansion() {
        // z^3 - 2z + 7 at z = -3/2: -27/8 + 3 + 7 = 53/8
        let a = p(&[(3, 1), (1, -2), (0, 7)]);
        assert_eq!(a.eval(&rat(-3, 2)), rat(53, 8));
        assert_eq!(UniPoly::zero().eval(&rat_int(9)), Rat::zero());
    }

    #[test]
    fn parity_and_monic() {
        assert!(p(&[(4, 2), (2, 1), (0, 9)]).has_parity(0));
        assert!(!p(&[(4, 2), (1, 1)]).has_parity(0));
        assert!(p(&[(5, 1), (1, -6)]).has_parity(1));
        assert!(UniPoly::zero().has_parity(0));
        assert!(UniPoly::zero().has_parity(1));
        assert!(p(&[(5, 1), (3, -6)]).is_monic());
        assert!(!p(&[(5, 2)]).is_monic());
        assert!(!UniPoly::zero().is_monic());
    }

    #[test]
    fn dense_float_export() {
        let a = UniPoly::from_terms([(3, rat_int(1)), (1, rat(-1, 4))]);
        assert_eq!(a.f64_coeffs(4), vec![0.0, -0.25, 0.0, 1.0]);
        assert_eq!(a.f64_coeffs(2), vec![0.0, -0.25]);
    }

    #[test]
    fn first_difference_reports_lowest_degree() {
        let a = p(&[(3, 1), (1, -2)]);
        let b = p(&[(3, 1), (1, -2)]);
        assert_eq!(a.first_difference(&b), None);
        let c = p(&[(3, 1), (1, -2), (0, 5)]);
        assert_eq!(a.first_difference(&c), Some(0));
        let d = p(&[(3, 2), (1, -2)]);
        assert_eq!(a.first_difference(&d), Some(3));
    }

    #[test]
    fn display_formats_signs_and_units() {
        assert_eq!(p(&[(5, 1), (3, -6)]).to_string(), "z^5 - 6 z^3");
        assert_eq!(
            UniPoly::from_terms([(3, rat_int(1)), (1, rat(1, 2))]).to_string(),
            "z^3 + 1/2 z"
        );
        assert_eq!(p(&[(0, -4)]).to_string(), "-4");
        assert_eq!(p(&[(1, -1)]).to_string(), "-z");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(p(&[(2, 1), (0, 8)]).to_string(), "z^2 + 8");
    }
}
