//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{to_f64, Rational};

/// Polynomial with [`Rational`] coefficients, stored lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and `degree()` is `None` for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// From coefficients, lowest degree first.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// From coefficients, highest degree first.
    pub fn from_descending(mut coeffs: Vec<Rational>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn from_integers_descending(coeffs: &[i64]) -> Self {
        Self::from_descending(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Lowest degree first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficients_descending(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(k.into())).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Divided by its leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; the remainder is discarded.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Positive rational multiple with coprime integer coefficients. The sign
    /// of every coefficient is preserved, which keeps Sturm sign counts valid.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let denom_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &denom_lcm).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Poly::new(ints.into_iter().map(|c| Rational::from_integer(c / &content)).collect())
    }

    /// Yun's square-free decomposition: `(factor, multiplicity)` pairs of
    /// pairwise coprime monic square-free factors whose product, each raised
    /// to its multiplicity, is `self` up to a constant. Factors of degree 0
    /// are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.exact_div(&a0);
        let mut c = d.exact_div(&a0);
        let mut multiplicity = 1;
        loop {
            let bd = b.derivative();
            let dd = &c - &bd;
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), multiplicity));
            }
            b = b.exact_div(&a);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.exact_div(&a);
            multiplicity += 1;
        }
        out
    }

    /// Largest absolute coefficient as `f64`.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| to_f64(c).abs()).fold(0.0, f64::max)
    }

    /// Euclidean norm of the coefficient vector as `f64`.
    pub fn norm2(&self) -> f64 {
        self.coeffs.iter().map(|c| to_f64(c).powi(2)).sum::<f64>().sqrt()
    }

    /// Writes the polynomial using `var` as the variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Display { poly: self, var }
    }
}

pub(crate) fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

struct Display<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                if abs.is_integer() {
                    write!(f, "{}", abs)?;
                } else {
                    write!(f, "({})", abs)?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("x").fmt(f)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_integers_descending(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 0, -1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[1, 1, -1, -1]));
        assert_eq!(&a - &a, Poly::zero());
        let (q, r) = a.div_rem(&b);
        assert_eq!((q, r), (p(&[1, -1]), Poly::zero()));
        let (q, r) = p(&[2, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[2, -2]));
        assert_eq!(r, p(&[3]));
        assert_eq!(p(&[1, 2]).div_rem(&p(&[1, 0, 0])), (Poly::zero(), p(&[1, 2])));
    }

    #[test]
    fn gcd_and_primitive() {
        let a = &p(&[1, -3]) * &p(&[1, 1]);
        let b = &p(&[1, -3]) * &p(&[1, 5]);
        assert_eq!(a.gcd(&b), p(&[1, -3]));
        let half = Poly::from_descending(vec![Rational::new(2.into(), 4.into()), Rational::new((-3).into(), 2.into())]);
        assert_eq!(half.primitive(), p(&[1, -3]));
        assert_eq!(p(&[-4, 6]).primitive(), p(&[-2, 3]));
    }

    #[test]
    fn squarefree_decomposition_of_example_polynomial() {
        // (u - 3)^5 (u^2 - 50u + 125)
        let h = p(&[1, -65, 965, -6645, 25155, -54243, 62775, -30375]);
        let parts = h.squarefree_decomposition();
        assert_eq!(parts, vec![(p(&[1, -50, 125]), 1), (p(&[1, -3]), 5)]);
        assert!(p(&[7]).squarefree_decomposition().is_empty());
    }

    #[test]
    fn evaluation_and_derivative() {
        let h = p(&[1, -65, 965, -6645, 25155, -54243, 62775, -30375]);
        assert!(h.eval(&Rational::from_integer(3.into())).is_zero());
        assert_eq!(p(&[1, 0, 0, 2]).derivative(), p(&[3, 0, 0]));
        assert_eq!(p(&[1, -1]).eval_f64(2.5), 1.5);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -65, 0, 3]).display_with("u").to_string(), "u^3 - 65u^2 + 3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[-1, 1]).to_string(), "-x + 1");
    }
}
