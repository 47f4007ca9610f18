//! Exact symbolic engine for the skew orthogonal polynomials of real and
//! quaternion real Ginibre-type matrix ensembles.
//!
//! The polynomials of interest are characteristic-polynomial averages,
//!
//!   Q_2n(z)   = < det(z - G) >,
//!   Q_2n+1(z) = z Q_2n(z) + < det(z - G) Tr G >,
//!
//! for G drawn from Gaussian, induced-Gaussian, spherical, or anti-spherical
//! ensembles over the reals or the quaternions.  The crate computes them two
//! independent ways:
//!
//!   - a derivation engine ([`skew::derive_pair`]) that expands the
//!     determinant into Schur functions, applies the real/quaternion
//!     selection rules, and evaluates the surviving Jack-polynomial averages
//!     as exact Pochhammer quotients;
//!   - closed forms ([`skew::closed_form`]) written directly from
//!     Gamma-function ratios.
//!
//! Everything is exact rational arithmetic; nothing is floating point until
//! a caller asks for it.  `check_equal` compares the two routes coefficient
//! by coefficient, and [`literature::check_reduction`] pins the general
//! closed forms to previously published special cases.

pub mod ensemble;
pub mod error;
pub mod gamma;
pub mod jack;
pub mod literature;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod schur;
pub mod skew;

pub use ensemble::{EnsembleSpec, FieldKind, WeightFamily};
pub use error::CoreError;
pub use jack::{DensityFamily, EigenDensity};
pub use partition::Partition;
pub use poly::UniPoly;
pub use rational::Rat;
pub use skew::SkewPolyPair;
