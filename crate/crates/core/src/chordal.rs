//! Cyclic pentagons: the Robbins polynomial in `u = 16 A^2` and its roots.
//!
//! Coefficients are built over exact rationals from the elementary symmetric
//! functions `e_1, ..., e_5` of the squared sides, so even inputs whose
//! coefficients reach 1e46 keep every low-order root intact.

use num_traits::{Signed, Zero};

use crate::linkage::{check_closable, elementary_symmetric, SymmetricFunctions};
use crate::roots::{self, Domain, RealRoot, RootSet};
use crate::tolerance::ROOT_REFINEMENT;
use crate::{Error, Poly, Rational, Result};

/// Monic degree-7 polynomial whose real roots carry `16 A^2` for the cyclic
/// pentagons with the given sides; the largest is the convex one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobbinsPolynomial {
    poly: Poly,
    e: SymmetricFunctions,
}

impl RobbinsPolynomial {
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Coefficients, highest degree first.
    pub fn coefficients(&self) -> Vec<Rational> {
        self.poly.coefficients_descending()
    }

    /// `e_1, ..., e_5` of the squared sides.
    pub fn elementary(&self) -> &SymmetricFunctions {
        &self.e
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        self.poly.eval(u)
    }
}

/// Builds `H_5` for five nonnegative sides (one side may be zero, which
/// degenerates to the cyclic quadrilateral case).
///
/// With `e_j` the symmetric functions of the squared sides:
///
/// ```text
/// t2 = e1^2 + u - 4 e2
/// t3 = e1 t2 + 8 e3
/// t4 = e1^4 + 2 u e1^2 - 8 e1^2 e2 + u^2 - 8 u e2 + 16 e2^2 - 64 e4
/// t5 = 128 e5
/// H5 = -27 u^2 t5^2 - 18 u t3 t4 t5 + u t4^3 - 16 t3^3 t5 + t3^2 t4^2
/// ```
pub fn robbins_polynomial(sides: &[Rational]) -> Result<RobbinsPolynomial> {
    if sides.len() != 5 {
        return Err(Error::WrongSideCount { expected: 5, found: sides.len() });
    }
    if let Some(index) = sides.iter().position(Signed::is_negative) {
        return Err(Error::NegativeSide { index });
    }
    if sides.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateAllZero);
    }
    let squares: Vec<Rational> = sides.iter().map(|a| a * a).collect();
    let e = elementary_symmetric(&squares);
    let int = |k: i64| Rational::from_integer(k.into());
    let c = |k: i64, x: Rational| Poly::constant(int(k) * x);
    let (e1, e2, e3, e4, e5) = (e.get(1), e.get(2), e.get(3), e.get(4), e.get(5));

    let u = Poly::monomial(int(1), 1);
    let u2 = Poly::monomial(int(1), 2);
    let e1_sq = &e1 * &e1;

    let t2 = &(&c(1, e1_sq.clone()) + &u) - &c(4, e2.clone());
    let t3 = &t2.scale(&e1) + &c(8, e3);
    let t4 = &(&(&(&(&(&c(1, &e1_sq * &e1_sq) + &u.scale(&(int(2) * &e1_sq))) - &c(8, &e1_sq * &e2)) + &u2)
        - &u.scale(&(int(8) * &e2)))
        + &c(16, &e2 * &e2))
        - &c(64, e4);
    let t5 = c(128, e5);

    let t3_sq = &t3 * &t3;
    let t4_sq = &t4 * &t4;
    let terms = [
        (&(&u2 * &t5) * &t5).scale(&int(-27)),
        (&(&(&u * &t3) * &t4) * &t5).scale(&int(-18)),
        &(&u * &t4_sq) * &t4,
        (&(&t3_sq * &t3) * &t5).scale(&int(-16)),
        &t3_sq * &t4_sq,
    ];
    let poly = terms.iter().fold(Poly::zero(), |acc, term| &acc + term);
    assert!(poly.degree() == Some(7) && poly.is_monic(), "Robbins polynomial must be monic of degree 7");
    Ok(RobbinsPolynomial { poly, e })
}

/// Real roots of the Robbins polynomial in `domain`, refined to relative
/// width `tolerance`.
pub fn real_roots(poly: &RobbinsPolynomial, domain: &Domain, tolerance: f64) -> RootSet {
    roots::real_roots(&poly.poly, domain, tolerance)
}

/// Largest positive root of `H_5`, i.e. `16 A^2` of the convex cyclic
/// configuration.
pub fn convex_cyclic_root(sides: &[Rational]) -> Result<RealRoot> {
    check_closable(sides)?;
    let poly = robbins_polynomial(sides)?;
    real_roots(&poly, &Domain::positive(), ROOT_REFINEMENT).max().cloned().ok_or(Error::NoPositiveRoot)
}

/// Area of the convex cyclic pentagon, `sqrt(u_max) / 4`.
pub fn convex_cyclic_area(sides: &[Rational]) -> Result<f64> {
    Ok(convex_cyclic_root(sides)?.value.sqrt() / 4.0)
}

/// Degree of the generalized Heron polynomial for `n` sides:
/// `Delta_k = (2k + 1) binom(2k, k) / 2 - 2^(2k - 1)`, with `d_n = Delta_k`
/// for `n = 2k + 1` and `d_n = 2 Delta_k` for `n = 2k + 2`.
pub fn ghp_degree(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    let k = (n - 1) / 2;
    let overflow = || Error::DegreeOverflow(n);
    // binom(2k, k) by the multiplicative formula; each prefix is an integer.
    let mut binom: u64 = 1;
    for i in 1..=k as u64 {
        binom = binom.checked_mul(k as u64 + i).ok_or_else(overflow)? / i;
    }
    let odd = (2 * k as u64 + 1).checked_mul(binom).ok_or_else(overflow)? / 2;
    let power = 1u64.checked_shl(2 * k as u32 - 1).ok_or_else(overflow)?;
    let delta = odd - power;
    if n % 2 == 1 {
        Ok(delta)
    } else {
        delta.checked_mul(2).ok_or_else(overflow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn regular_pentagon_polynomial() {
        let h = robbins_polynomial(&ints(&[1; 5])).unwrap();
        assert_eq!(h.coefficients(), ints(&[1, -65, 965, -6645, 25155, -54243, 62775, -30375]));
        assert_eq!(h.elementary().values(), ints(&[5, 10, 10, 5, 1]).as_slice());
    }

    #[test]
    fn regular_pentagon_roots() {
        let h = robbins_polynomial(&ints(&[1; 5])).unwrap();
        let roots = real_roots(&h, &Domain::positive(), 1e-14);
        let values = roots.values_with_multiplicity();
        assert_eq!(values.len(), 7);
        assert!(rel(values[0], 2.639320225) < 1e-9);
        assert!(values[1..6].iter().all(|&v| v == 3.0));
        assert!(rel(values[6], 47.36067977) < 1e-9);
        assert!(roots.roots[1].is_exact());
    }

    #[test]
    fn areas() {
        assert!(rel(convex_cyclic_area(&ints(&[1; 5])).unwrap(), 1.720477400) < 1e-9);
        assert!(rel(convex_cyclic_area(&ints(&[29, 30, 31, 32, 33])).unwrap(), 1651.561892) < 1e-9);
        // unit square plus a zero side: Brahmagupta gives area 1
        assert!(rel(convex_cyclic_area(&ints(&[1, 1, 1, 1, 0])).unwrap(), 1.0) < 1e-12);
    }

    #[test]
    fn squared_degeneration_has_double_root() {
        let h = robbins_polynomial(&ints(&[1, 1, 1, 1, 0])).unwrap();
        // u^5 (u - 16)^2
        assert_eq!(h.coefficients(), ints(&[1, -32, 256, 0, 0, 0, 0, 0]));
        let roots = real_roots(&h, &Domain::positive(), 1e-12);
        assert_eq!(roots.len(), 1);
        assert_eq!((roots.roots[0].value, roots.roots[0].multiplicity), (16.0, 2));
    }

    #[test]
    fn scaling_law_on_coefficients() {
        let base = robbins_polynomial(&ints(&[2, 3, 5, 7, 11])).unwrap().coefficients();
        let scaled = robbins_polynomial(&ints(&[6, 9, 15, 21, 33])).unwrap().coefficients();
        for (k, (b, s)) in base.iter().zip(&scaled).enumerate() {
            let factor = Rational::from_integer(3.into()).pow(4 * k as i32);
            assert_eq!(&(b * factor), s);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(robbins_polynomial(&ints(&[0; 5])), Err(Error::DegenerateAllZero));
        assert_eq!(robbins_polynomial(&ints(&[1, -1, 1, 1, 1])), Err(Error::NegativeSide { index: 1 }));
        assert_eq!(robbins_polynomial(&ints(&[1; 4])), Err(Error::WrongSideCount { expected: 5, found: 4 }));
        assert_eq!(convex_cyclic_area(&ints(&[10, 1, 1, 1, 1])), Err(Error::NotClosable { index: 0 }));
    }

    #[test]
    fn heron_degrees() {
        let degrees: Vec<u64> = (3..=10).map(|n| ghp_degree(n).unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 7, 14, 38, 76, 187, 374]);
        assert_eq!(ghp_degree(2), Err(Error::TooFewSides(2)));
        assert!(matches!(ghp_degree(200), Err(Error::DegreeOverflow(200))));
    }
}
