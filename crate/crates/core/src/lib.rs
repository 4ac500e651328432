//! Tangential, chordal and bicentric configurations of planar polygonal
//! linkages.
//!
//! A closed planar linkage is described by its ordered sidelengths. This crate
//! answers, for pentagonal (and quadrilateral) linkages, which of the
//! following configurations exist:
//!
//! * tangential: the polygon has an incircle touching every side at an
//!   interior point ([`linkage`], [`tangential`]);
//! * chordal (cyclic): every vertex lies on one circle ([`chordal`]);
//! * bicentric: both at once ([`bicentric`], [`quad`]).
//!
//! Two arithmetic backends are used side by side. Polynomial coefficients,
//! tangent lengths and resultants are computed over exact rationals
//! ([`Rational`]); inradii, root refinement outputs and all geometry are
//! `f64`. Conversions are explicit (`to_f64`, [`rational_from_f64`]).
//!
//! The [`oracle`] module is an independent coordinate-geometry check: it
//! builds explicit vertex positions and re-derives areas and circles from
//! them, without touching the algebraic pipeline.
//!
//! ```
//! use bicentric_core::{bicentric, Linkage};
//!
//! let regular = Linkage::from_integers(&[1, 1, 1, 1, 1]).unwrap();
//! let report = bicentric::analyze(&regular, &Default::default()).unwrap();
//! assert!(report.convex_bicentric && report.star_bicentric);
//! ```

pub mod bicentric;
pub mod chordal;
mod error;
pub mod linkage;
pub mod oracle;
pub mod poly;
pub mod quad;
pub mod resultant;
pub mod roots;
pub mod tangential;
pub mod tolerance;

pub use error::{Error, Result};
pub use linkage::{Linkage, SymmetricFunctions, TangentLengths};
pub use poly::Poly;

/// Exact rational number used by the exact backend.
pub type Rational = num_rational::BigRational;

/// Converts a finite `f64` to the rational with exactly the same value.
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or(Error::NonFinite)
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
