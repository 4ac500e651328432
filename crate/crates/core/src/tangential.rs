//! Inradii of tangential polygons from their tangent lengths.
//!
//! Two independent routes are provided. The algebraic one uses the
//! polynomial `I_n(x) = s_1 x^k - s_3 x^{k-1} + ...` in `x = r^2`, whose
//! positive roots are the squared inradii; for pentagons it is the
//! biquadratic `s_1 r^4 - s_3 r^2 + s_5 = 0`. The angular one solves
//! `sum_i arctan(t_i / r) = w * pi` by bisection, where `w` is the winding
//! number of the configuration (1 convex, 2 star).

use std::f64::consts::PI;

use num_traits::{Signed, Zero};

use crate::linkage::TangentLengths;
use crate::tolerance::{BISECTION_MAX_ITERATIONS, BISECTION_RELATIVE};
use crate::{to_f64, Error, Poly, Rational, Result};

/// `I_n` in the variable `x = r^2`, coefficients highest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterPolynomial {
    pub coefficients: Vec<Rational>,
    /// Side count of the source polygon.
    pub n: usize,
}

impl SylvesterPolynomial {
    /// `floor((n - 1) / 2)`.
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn poly(&self) -> Poly {
        Poly::from_descending(self.coefficients.clone())
    }

    /// Value at `x = r^2` in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients.iter().fold(0.0, |acc, c| acc * x + to_f64(c))
    }
}

/// Alternating odd symmetric functions `s_1, -s_3, s_5, ...` of the tangent
/// lengths.
pub fn sylvester_polynomial(t: &TangentLengths) -> Result<SylvesterPolynomial> {
    let n = t.len();
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    t.require_positive()?;
    let s = t.symmetric_functions();
    let k = (n - 1) / 2;
    let coefficients = (0..=k)
        .map(|j| {
            let c = s.get(2 * j + 1);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    Ok(SylvesterPolynomial { coefficients, n })
}

/// The two inradii of a tangential pentagon.
#[derive(Debug, Clone, PartialEq)]
pub struct InradiusPair {
    /// Larger root; the convex configuration.
    pub r_convex: f64,
    /// Smaller root; the star (winding 2) configuration.
    pub r_star: f64,
    /// `s_3^2 - 4 s_1 s_5`, exact.
    pub discriminant: Rational,
}

/// Both positive roots of `s_1 r^4 - s_3 r^2 + s_5 = 0`.
///
/// The discriminant is exact; the square roots are taken in `f64`. The
/// smaller root of the quadratic in `r^2` is computed as
/// `2 s_5 / (s_3 + sqrt(D))` to avoid cancellation.
pub fn pentagon_inradii(t: &TangentLengths) -> Result<InradiusPair> {
    if t.len() != 5 {
        return Err(Error::WrongSideCount { expected: 5, found: t.len() });
    }
    t.require_positive()?;
    let s = t.symmetric_functions();
    let (s1, s3, s5) = (s.get(1), s.get(3), s.get(5));
    let four = Rational::from_integer(4.into());
    let discriminant = &s3 * &s3 - four * &s1 * &s5;
    if discriminant.is_negative() {
        return Err(Error::NegativeDiscriminant);
    }
    let (s1, s3, s5) = (to_f64(&s1), to_f64(&s3), to_f64(&s5));
    let root = to_f64(&discriminant).sqrt();
    let big = (s3 + root) / (2.0 * s1);
    let small = 2.0 * s5 / (s3 + root);
    Ok(InradiusPair { r_convex: big.sqrt(), r_star: small.sqrt(), discriminant })
}

/// Sum of `arctan(t_i / r)`, the total half-angle swept at the incentre.
pub fn arctan_sum(t: &[f64], r: f64) -> f64 {
    t.iter().map(|&ti| (ti / r).atan()).sum()
}

/// The unique `r > 0` with `sum_i arctan(t_i / r) = winding * pi`.
///
/// The left side decreases strictly from `n pi / 2` (as `r -> 0`) to `0`,
/// so a solution exists iff `0 < winding` and `2 winding < n`. Bisection runs
/// on `[1e-9 min t, n max t]` until the bracket is relatively narrower than
/// [`BISECTION_RELATIVE`].
pub fn arctan_inradius(t: &TangentLengths, winding: u32) -> Result<f64> {
    let n = t.len();
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    t.require_positive()?;
    if winding == 0 || 2 * winding as usize >= n {
        return Err(Error::NoSolution { winding, n });
    }
    let tf = t.to_f64();
    let target = f64::from(winding) * PI;
    let f = |r: f64| arctan_sum(&tf, r) - target;

    let min_t = tf.iter().copied().fold(f64::INFINITY, f64::min);
    let max_t = tf.iter().copied().fold(0.0, f64::max);
    let (mut lo, mut hi) = (1e-9 * min_t, n as f64 * max_t);
    if !(f(lo) > 0.0 && f(hi) < 0.0) {
        return Err(Error::BracketFailure("arctangent sum does not straddle winding * pi"));
    }
    for _ in 0..BISECTION_MAX_ITERATIONS {
        if hi - lo <= BISECTION_RELATIVE * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let value = f(mid);
        if value == 0.0 {
            return Ok(mid);
        }
        if value > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Area of a tangential polygon, `A = r p`. For a winding-2 star the doubly
/// covered core counts twice, matching the oriented (shoelace) area.
pub fn tangential_area(r: f64, semiperimeter: f64) -> f64 {
    r * semiperimeter
}

/// Relative residual of the biquadratic at `r`, `|I_5(r^2)| / (s_1 r^4)`.
pub fn biquadratic_residual(poly: &SylvesterPolynomial, r: f64) -> f64 {
    let x = r * r;
    let lead = to_f64(&poly.coefficients[0]);
    if lead.is_zero() {
        return f64::INFINITY;
    }
    (poly.eval_f64(x) / (lead * x.powi(poly.degree() as i32))).abs()
}
