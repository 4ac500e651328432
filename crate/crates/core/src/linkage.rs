//! Closed planar linkages, their tangent lengths and symmetric functions.
//!
//! Everything here is exact: sides and tangent lengths are [`Rational`]s, so
//! the circulant system `t_j + t_{j+1} = a_j` is solved without rounding.

use num_traits::{One, Signed, Zero};

use crate::{rational_from_f64, to_f64, Error, Rational, Result};

/// Ordered sidelengths of a closed planar linkage.
///
/// Sides are kept in the cyclic order given; tangent lengths depend on it.
/// `exact` records whether the sides came from exact input (integers,
/// decimal strings, fractions) or were converted from binary floats. Checks
/// that compare against zero use it to choose between an exact test and a
/// tolerance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Linkage {
    sides: Vec<Rational>,
    exact: bool,
}

impl Linkage {
    /// Linkage from exact sidelengths. Needs `n >= 3` strictly positive sides.
    pub fn new(sides: Vec<Rational>) -> Result<Self> {
        if sides.len() < 3 {
            return Err(Error::TooFewSides(sides.len()));
        }
        if let Some(index) = sides.iter().position(|a| !a.is_positive()) {
            return Err(Error::NonPositiveSide { index });
        }
        Ok(Self { sides, exact: true })
    }

    pub fn from_integers(sides: &[i64]) -> Result<Self> {
        Self::new(sides.iter().map(|&a| Rational::from_integer(a.into())).collect())
    }

    /// Linkage from floating-point sides. Each value is converted to the
    /// rational it represents exactly; the linkage is marked inexact.
    pub fn from_f64(sides: &[f64]) -> Result<Self> {
        let sides = sides.iter().map(|&a| rational_from_f64(a)).collect::<Result<Vec<_>>>()?;
        let mut linkage = Self::new(sides)?;
        linkage.exact = false;
        Ok(linkage)
    }

    pub fn sides(&self) -> &[Rational] {
        &self.sides
    }

    pub fn sides_f64(&self) -> Vec<f64> {
        self.sides.iter().map(to_f64).collect()
    }

    /// Number of sides.
    pub fn n(&self) -> usize {
        self.sides.len()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn perimeter(&self) -> Rational {
        self.sides.iter().sum()
    }

    /// Half the perimeter.
    pub fn semiperimeter(&self) -> Rational {
        self.perimeter() / Rational::from_integer(2.into())
    }

    /// The same linkage with its side list rotated left by `k` places.
    pub fn rotated(&self, k: usize) -> Self {
        let mut sides = self.sides.clone();
        sides.rotate_left(k % self.n());
        Self { sides, exact: self.exact }
    }

    /// All sides multiplied by a positive factor.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        let mut scaled = Self::new(self.sides.iter().map(|a| a * factor).collect())?;
        scaled.exact = self.exact;
        Ok(scaled)
    }

    /// Whether every side is strictly shorter than the sum of the others.
    /// Returns the index of the first offending side otherwise.
    pub fn closable(&self) -> Result<()> {
        check_closable(&self.sides)
    }
}

pub(crate) fn check_closable(sides: &[Rational]) -> Result<()> {
    let total: Rational = sides.iter().sum();
    let two = Rational::from_integer(2.into());
    match sides.iter().position(|a| a * &two >= total) {
        Some(index) => Err(Error::NotClosable { index }),
        None => Ok(()),
    }
}

/// Half the sum of the sides.
pub fn semiperimeter(linkage: &Linkage) -> Rational {
    linkage.semiperimeter()
}

/// Tangent lengths `t_j`: the distance from vertex `j` to the touching point
/// of the incircle on side `j` (the side from vertex `j` to vertex `j + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangentLengths {
    values: Vec<Rational>,
}

impl TangentLengths {
    /// Wraps arbitrary tangent lengths, e.g. for working directly from
    /// tangent data rather than from a linkage.
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn from_f64(values: &[f64]) -> Result<Self> {
        Ok(Self::new(values.iter().map(|&t| rational_from_f64(t)).collect::<Result<_>>()?))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(to_f64).collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Indices of entries that are zero or negative.
    pub fn non_positive_indices(&self) -> Vec<usize> {
        self.values.iter().enumerate().filter(|(_, t)| !t.is_positive()).map(|(i, _)| i).collect()
    }

    pub fn all_positive(&self) -> bool {
        self.values.iter().all(Signed::is_positive)
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        match self.values.iter().position(|t| !t.is_positive()) {
            Some(index) => Err(Error::NonPositiveTangentLength { index }),
            None => Ok(()),
        }
    }

    /// Sides implied by these tangent lengths, `a_j = t_j + t_{j+1}`.
    pub fn sides(&self) -> Vec<Rational> {
        let n = self.values.len();
        (0..n).map(|j| &self.values[j] + &self.values[(j + 1) % n]).collect()
    }

    /// Residuals `t_j + t_{j+1} - a_j` against a linkage. All zero for the
    /// output of [`tangent_lengths`].
    pub fn residuals(&self, linkage: &Linkage) -> Vec<Rational> {
        self.sides().iter().zip(linkage.sides()).map(|(s, a)| s - a).collect()
    }

    /// Elementary symmetric functions `s_1, ..., s_n` of the tangent lengths.
    pub fn symmetric_functions(&self) -> SymmetricFunctions {
        elementary_symmetric(&self.values)
    }
}

/// Solves the circulant system `t_j + t_{j+1} = a_j` for odd `n`.
///
/// The unique solution is the cyclic alternating sum
/// `t_j = (a_j - a_{j+1} + a_{j+2} - ... + a_{j+n-1}) / 2`.
pub fn tangent_lengths(linkage: &Linkage) -> Result<TangentLengths> {
    let n = linkage.n();
    if n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    let sides = linkage.sides();
    let half = Rational::new(1.into(), 2.into());
    let values = (0..n)
        .map(|j| {
            let alternating = (0..n).fold(Rational::zero(), |acc, i| {
                let a = &sides[(j + i) % n];
                if i % 2 == 0 {
                    acc + a
                } else {
                    acc - a
                }
            });
            alternating * &half
        })
        .collect();
    Ok(TangentLengths { values })
}

/// Outcome of the tangentiality test for an odd linkage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangentiality {
    pub tangent_lengths: TangentLengths,
    /// Indices `j` with `t_j <= 0`. Empty iff the linkage is tangential.
    pub non_positive: Vec<usize>,
}

impl Tangentiality {
    pub fn is_tangential(&self) -> bool {
        self.non_positive.is_empty()
    }
}

/// A tangential configuration exists iff every tangent length is positive.
pub fn is_tangential(linkage: &Linkage) -> Result<Tangentiality> {
    let tangent_lengths = tangent_lengths(linkage)?;
    let non_positive = tangent_lengths.non_positive_indices();
    Ok(Tangentiality { tangent_lengths, non_positive })
}

/// Elementary symmetric functions `s_1, ..., s_n` of a list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricFunctions {
    values: Vec<Rational>,
}

impl SymmetricFunctions {
    /// `s_1, ..., s_n` in order.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `s_k`, with `s_0 = 1` and `s_k = 0` for `k > n`.
    pub fn get(&self, k: usize) -> Rational {
        match k {
            0 => Rational::one(),
            k if k <= self.values.len() => self.values[k - 1].clone(),
            _ => Rational::zero(),
        }
    }
}

/// Coefficients of `prod (1 + x_i z)`, built one factor at a time.
pub fn elementary_symmetric(values: &[Rational]) -> SymmetricFunctions {
    let mut e = vec![Rational::one()];
    for x in values {
        e.push(Rational::zero());
        for k in (1..e.len()).rev() {
            let term = &e[k - 1] * x;
            e[k] += term;
        }
    }
    e.remove(0);
    SymmetricFunctions { values: e }
}
