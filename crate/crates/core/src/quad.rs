//! Quadrilateral linkages: the Pitot condition and the range of inradii of
//! their tangential configurations.

use num_traits::{Signed, Zero};

use crate::tolerance::PITOT_RELATIVE;
use crate::{to_f64, Error, Linkage, Rational, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadReport {
    pub pitot: bool,
    pub is_kite: bool,
    /// Smallest inradius over the tangential family; `None` without Pitot.
    pub r_min: Option<f64>,
    /// Largest inradius, attained by the bicentric configuration.
    pub r_max: Option<f64>,
}

fn check_quad(linkage: &Linkage) -> Result<&[Rational]> {
    let sides = linkage.sides();
    if sides.len() != 4 {
        return Err(Error::WrongSideCount { expected: 4, found: sides.len() });
    }
    linkage.closable().map_err(|_| Error::Degenerate)?;
    Ok(sides)
}

/// Equality of two sums of sides, exact for exact linkages and to relative
/// [`PITOT_RELATIVE`] otherwise.
fn sums_equal(linkage: &Linkage, lhs: Rational, rhs: Rational) -> bool {
    if linkage.is_exact() {
        lhs == rhs
    } else {
        let scale = to_f64(&lhs).abs().max(to_f64(&rhs).abs());
        to_f64(&(lhs - rhs)).abs() <= PITOT_RELATIVE * scale
    }
}

/// `a_1 + a_3 = a_2 + a_4`: a tangential (and then a bicentric)
/// configuration exists.
pub fn pitot_check(linkage: &Linkage) -> Result<bool> {
    let a = check_quad(linkage)?;
    Ok(sums_equal(linkage, &a[0] + &a[2], &a[1] + &a[3]))
}

/// Some rotation of the cyclic side sequence reads `x, x, y, y`.
pub fn is_kite(linkage: &Linkage) -> Result<bool> {
    let a = check_quad(linkage)?;
    let eq = |i: usize, j: usize| sums_equal(linkage, a[i].clone(), a[j].clone());
    Ok((eq(0, 1) && eq(2, 3)) || (eq(1, 2) && eq(3, 0)))
}

fn require_pitot(linkage: &Linkage) -> Result<&[Rational]> {
    if !pitot_check(linkage)? {
        return Err(Error::PitotViolated);
    }
    Ok(linkage.sides())
}

/// `r* = sqrt((p - a)(p - b)(p - c)(p - d)) / p`: Brahmagupta's area of the
/// cyclic configuration over the semiperimeter.
pub fn max_inradius(linkage: &Linkage) -> Result<f64> {
    let a = require_pitot(linkage)?;
    let p = linkage.semiperimeter();
    let product: Rational = a.iter().map(|x| &p - x).product();
    Ok(to_f64(&product).sqrt() / to_f64(&p))
}

/// Triangles obtained by letting two adjacent sides straighten into one,
/// keeping only those satisfying the strict triangle inequality.
pub fn aligned_triangles(linkage: &Linkage) -> Result<Vec<[Rational; 3]>> {
    let a = check_quad(linkage)?;
    let triangles = (0..4)
        .map(|i| [&a[i] + &a[(i + 1) % 4], a[(i + 2) % 4].clone(), a[(i + 3) % 4].clone()])
        .filter(|[x, y, z]| x < &(y + z) && y < &(x + z) && z < &(x + y))
        .collect();
    Ok(triangles)
}

/// Inradius of a triangle, `sqrt((p - x)(p - y)(p - z) / p)`.
fn triangle_inradius(sides: &[Rational; 3]) -> f64 {
    let p: Rational = sides.iter().sum::<Rational>() / Rational::from_integer(2.into());
    let product: Rational = sides.iter().map(|x| &p - x).product();
    to_f64(&(product / p)).sqrt()
}

/// Zero for kites (the family collapses onto a segment); otherwise the
/// smaller inradius of the aligned triangles.
pub fn min_inradius(linkage: &Linkage) -> Result<f64> {
    require_pitot(linkage)?;
    if is_kite(linkage)? {
        return Ok(0.0);
    }
    aligned_triangles(linkage)?.iter().map(triangle_inradius).min_by(f64::total_cmp).ok_or(Error::Degenerate)
}

pub fn quad_report(linkage: &Linkage) -> Result<QuadReport> {
    let pitot = pitot_check(linkage)?;
    let is_kite = is_kite(linkage)?;
    let (r_min, r_max) =
        if pitot { (Some(min_inradius(linkage)?), Some(max_inradius(linkage)?)) } else { (None, None) };
    Ok(QuadReport { pitot, is_kite, r_min, r_max })
}

/// Brahmagupta's cyclic quadrilateral area, `sqrt((p-a)(p-b)(p-c)(p-d))`.
/// Sides may include a zero (Heron's formula).
pub fn brahmagupta_area(sides: &[Rational; 4]) -> f64 {
    let p: Rational = sides.iter().sum::<Rational>() / Rational::from_integer(2.into());
    let product: Rational = sides.iter().map(|x| &p - x).product();
    if product.is_negative() || product.is_zero() {
        0.0
    } else {
        to_f64(&product).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(v: &[i64]) -> Linkage {
        Linkage::from_integers(v).unwrap()
    }

    #[test]
    fn pitot() {
        assert!(pitot_check(&quad(&[1, 1, 1, 1])).unwrap());
        assert!(pitot_check(&quad(&[2, 2, 3, 3])).unwrap());
        assert!(!pitot_check(&quad(&[3, 2, 3, 1])).unwrap());
        assert_eq!(pitot_check(&quad(&[1, 1, 1, 5])), Err(Error::Degenerate));
        assert_eq!(pitot_check(&quad(&[1, 1, 1])), Err(Error::WrongSideCount { expected: 4, found: 3 }));
        let float = Linkage::from_f64(&[0.1, 0.2, 0.30000000000000004, 0.2]).unwrap();
        assert!(pitot_check(&float).unwrap());
    }

    #[test]
    fn max_inradii() {
        assert_eq!(max_inradius(&quad(&[1, 1, 1, 1])).unwrap(), 0.5);
        assert!((max_inradius(&quad(&[2, 2, 3, 3])).unwrap() - 1.2).abs() < 1e-15);
        let r = max_inradius(&quad(&[4, 4, 6, 6])).unwrap();
        assert!((r - 2.4).abs() < 1e-14);
        assert_eq!(max_inradius(&quad(&[3, 2, 3, 1])), Err(Error::PitotViolated));
    }

    #[test]
    fn min_inradii() {
        assert_eq!(min_inradius(&quad(&[2, 2, 3, 3])).unwrap(), 0.0);
        assert_eq!(min_inradius(&quad(&[1, 2, 2, 1])).unwrap(), 0.0);
        assert!(is_kite(&quad(&[1, 2, 2, 1])).unwrap());
        // merged triangles (3, 3, 2) and (3, 2, 3): r^2 = 1 * 1 * 2 / 4
        assert!(!is_kite(&quad(&[1, 2, 3, 2])).unwrap());
        let r = min_inradius(&quad(&[1, 2, 3, 2])).unwrap();
        assert!((r - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(aligned_triangles(&quad(&[1, 2, 3, 2])).unwrap().len(), 2);
    }

    #[test]
    fn report() {
        let report = quad_report(&quad(&[2, 2, 3, 3])).unwrap();
        assert!(report.pitot);
        assert!(report.is_kite);
        assert_eq!(report.r_min, Some(0.0));
        assert!((report.r_max.unwrap() - 1.2).abs() < 1e-15);
        let none = quad_report(&quad(&[3, 2, 3, 1])).unwrap();
        assert_eq!((none.pitot, none.r_min, none.r_max), (false, None, None));
    }
}
