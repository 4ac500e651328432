//! Real root isolation with Sturm sequences over exact rationals.
//!
//! A polynomial is first split into square-free factors (which also yields
//! multiplicities). Each factor gets a Sturm chain, its roots in the
//! requested open interval are isolated by bisection on dyadic points, and
//! each isolating interval is then narrowed by further exact bisection until
//! it is relatively narrower than the requested tolerance.

use std::cmp::Ordering;

use num_traits::{One, Pow, Signed, Zero};

use crate::poly::{sign, Poly};
use crate::{rational_from_f64, to_f64, Rational};

const MAX_REFINEMENT_STEPS: usize = 4096;

/// Open interval `(lower, upper)`; `None` stands for an infinite end.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Domain {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Domain {
    /// The whole real line.
    pub fn all() -> Self {
        Self::default()
    }

    /// `(0, inf)`.
    pub fn positive() -> Self {
        Self { lower: Some(Rational::zero()), upper: None }
    }

    pub fn open(lower: Rational, upper: Rational) -> Self {
        Self { lower: Some(lower), upper: Some(upper) }
    }
}

/// One distinct real root.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRoot {
    /// Midpoint of the isolating interval.
    pub value: f64,
    pub multiplicity: usize,
    /// The root lies in `[lower, upper]`; the two are equal when the root
    /// was hit exactly.
    pub lower: Rational,
    pub upper: Rational,
}

impl RealRoot {
    fn exact(x: Rational, multiplicity: usize) -> Self {
        Self { value: to_f64(&x), multiplicity, lower: x.clone(), upper: x }
    }

    fn bracketed(lower: Rational, upper: Rational, multiplicity: usize) -> Self {
        let mid = (&lower + &upper) / Rational::from_integer(2.into());
        Self { value: to_f64(&mid), multiplicity, lower, upper }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Whether `x` lies in the closed isolating interval.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower <= x && x <= &self.upper
    }
}

/// Real roots sorted increasingly, each listed once with its multiplicity.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootSet {
    pub roots: Vec<RealRoot>,
}

impl RootSet {
    /// Number of distinct roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn count_with_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Root values, each repeated according to its multiplicity.
    pub fn values_with_multiplicity(&self) -> Vec<f64> {
        self.roots.iter().flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity)).collect()
    }

    pub fn max(&self) -> Option<&RealRoot> {
        self.roots.last()
    }

    /// Root closest to `x` in relative terms, with its index and the
    /// relative gap `|x - root| / |root|`.
    pub fn nearest(&self, x: f64) -> Option<(usize, &RealRoot, f64)> {
        self.roots
            .iter()
            .enumerate()
            .map(|(i, r)| (i, r, relative_gap(x, r.value)))
            .min_by(|a, b| a.2.partial_cmp(&b.2).unwrap_or(Ordering::Equal))
    }
}

pub(crate) fn relative_gap(x: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        x.abs()
    } else {
        ((x - reference) / reference).abs()
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` of a square-free polynomial. Every
/// member is scaled to a primitive integer polynomial by a positive factor.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<Poly>,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> Self {
        let mut chain = vec![p.primitive()];
        let d = p.derivative().primitive();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let r = -&chain[k - 2].rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.primitive());
        }
        Self { chain }
    }

    pub fn chain(&self) -> &[Poly] {
        &self.chain
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign variations at a finite point, zeros dropped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let lead = sign(p.leading().expect("chain members are nonzero"));
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -lead
            } else {
                lead
            }
        }))
    }

    fn variations_at_bound(&self, x: &Option<Rational>, upper: bool) -> usize {
        match x {
            Some(x) => self.variations_at(x),
            None => self.variations_at_infinity(upper),
        }
    }

    /// Number of distinct roots in the open interval.
    pub fn count(&self, domain: &Domain) -> usize {
        let va = self.variations_at_bound(&domain.lower, false);
        let vb = self.variations_at_bound(&domain.upper, true);
        // V(a) - V(b) counts roots in (a, b]
        let at_upper = domain.upper.as_ref().is_some_and(|b| self.chain[0].sign_at(b) == 0);
        (va - vb) - usize::from(at_upper)
    }
}

/// Number of distinct real roots of `poly` in the open domain.
pub fn count_distinct_roots(poly: &Poly, domain: &Domain) -> usize {
    if poly.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let squarefree = poly.exact_div(&poly.gcd(&poly.derivative()));
    SturmSequence::new(&squarefree).count(domain)
}

/// Power of two strictly larger in magnitude than every root.
///
/// Fujiwara: every root satisfies `|z| <= 2 M` when `M^k >= |c_{n-k} / c_n|`
/// for `k < n` and `M^n >= |c_0 / (2 c_n)|`. `M` is taken as a power of two.
fn root_bound(p: &Poly) -> Rational {
    let n = p.degree().expect("nonzero polynomial");
    let lead = p.leading().expect("nonzero polynomial").abs();
    let two = Rational::from_integer(2.into());
    let ratios: Vec<(usize, Rational)> = (1..=n)
        .map(|k| {
            let r = p.coeff(n - k).abs() / &lead;
            (k, if k == n { r / &two } else { r })
        })
        .filter(|(_, r)| !r.is_zero())
        .collect();
    let mut m = Rational::one();
    while ratios.iter().any(|(k, r)| Pow::pow(&m, *k) < *r) {
        m *= &two;
    }
    m * Rational::from_integer(4.into())
}

/// Isolates and refines every real root of `poly` in the open `domain`.
///
/// `tolerance` is the relative width `(upper - lower) / max(|lower|, |upper|)`
/// at which refinement stops. The zero polynomial has no isolated roots and
/// yields an empty set.
pub fn real_roots(poly: &Poly, domain: &Domain, tolerance: f64) -> RootSet {
    let tolerance = rational_from_f64(tolerance.abs()).unwrap_or_else(|_| Rational::zero());
    let mut roots: Vec<RealRoot> = poly
        .squarefree_decomposition()
        .iter()
        .flat_map(|(factor, multiplicity)| factor_roots(factor, *multiplicity, domain, &tolerance))
        .collect();
    roots.sort_by(|a, b| a.lower.cmp(&b.lower));
    RootSet { roots }
}

fn in_domain(x: &Rational, domain: &Domain) -> bool {
    domain.lower.as_ref().is_none_or(|l| x > l) && domain.upper.as_ref().is_none_or(|u| x < u)
}

fn factor_roots(factor: &Poly, multiplicity: usize, domain: &Domain, tolerance: &Rational) -> Vec<RealRoot> {
    if factor.degree() == Some(1) {
        let root = -factor.coeff(0) / factor.coeff(1);
        return if in_domain(&root, domain) { vec![RealRoot::exact(root, multiplicity)] } else { vec![] };
    }

    let sturm = SturmSequence::new(factor);
    let bound = root_bound(factor);
    let lower = match &domain.lower {
        Some(l) if l > &-&bound => l.clone(),
        _ => -&bound,
    };
    let upper = match &domain.upper {
        Some(u) if u < &bound => u.clone(),
        _ => bound,
    };
    if lower >= upper {
        return vec![];
    }

    let two = Rational::from_integer(2.into());
    let mut out = Vec::new();
    let mut pending = vec![(lower, upper)];
    while let Some((a, b)) = pending.pop() {
        let count = sturm.count(&Domain::open(a.clone(), b.clone()));
        match count {
            0 => {}
            1 => out.push(refine(&sturm, a, b, multiplicity, tolerance)),
            _ => {
                let m = if a.is_negative() && b.is_positive() { Rational::zero() } else { (&a + &b) / &two };
                if factor.sign_at(&m) == 0 {
                    out.push(RealRoot::exact(m.clone(), multiplicity));
                }
                pending.push((a, m.clone()));
                pending.push((m, b));
            }
        }
    }
    out
}

/// Narrows `(a, b)`, which holds exactly one root. Bisection follows the
/// sign change of `p` when both ends are nonzero, Sturm counts otherwise.
fn refine(
    sturm: &SturmSequence,
    mut a: Rational,
    mut b: Rational,
    multiplicity: usize,
    tolerance: &Rational,
) -> RealRoot {
    let p = &sturm.chain()[0];
    let two = Rational::from_integer(2.into());
    let sign_a = p.sign_at(&a);
    let sign_changes = sign_a != 0 && p.sign_at(&b) == -sign_a;
    for _ in 0..MAX_REFINEMENT_STEPS {
        let scale = a.abs().max(b.abs());
        if &b - &a <= tolerance * scale {
            break;
        }
        let m = (&a + &b) / &two;
        let sign_m = p.sign_at(&m);
        if sign_m == 0 {
            return RealRoot::exact(m, multiplicity);
        }
        let left = if sign_changes { sign_m != sign_a } else { sturm.count(&Domain::open(a.clone(), m.clone())) == 1 };
        if left {
            b = m;
        } else {
            a = m;
        }
    }
    RealRoot::bracketed(a, b, multiplicity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_integers_descending(c)
    }

    #[test]
    fn positive_root_of_difference_of_squares() {
        let roots = real_roots(&p(&[1, 0, -1]), &Domain::positive(), 1e-12);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots.roots[0].value, 1.0);
        let all = real_roots(&p(&[1, 0, -1]), &Domain::all(), 1e-12);
        assert_eq!(all.values_with_multiplicity(), vec![-1.0, 1.0]);
    }

    #[test]
    fn irrational_roots_are_refined() {
        let roots = real_roots(&p(&[1, 0, -2]), &Domain::all(), 1e-14);
        assert_eq!(roots.len(), 2);
        let r = roots.roots[1].value;
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
        let two = Rational::from_integer(2.into());
        let root = &roots.roots[1];
        assert!(&root.lower * &root.lower < two && two < &root.upper * &root.upper);
    }

    #[test]
    fn multiplicities_and_open_ends() {
        // x^2 (x - 1)^3 (x - 2)
        let f = &(&p(&[1, 0, 0]) * &p(&[1, -3, 3, -1])) * &p(&[1, -2]);
        let roots = real_roots(&f, &Domain::positive(), 1e-12);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots.roots[0].multiplicity, 3);
        assert_eq!(roots.count_with_multiplicity(), 4);
        let inner = Domain::open(Rational::zero(), Rational::from_integer(2.into()));
        assert_eq!(real_roots(&f, &inner, 1e-12).len(), 1);
        assert_eq!(count_distinct_roots(&f, &inner), 1);
        assert_eq!(count_distinct_roots(&f, &Domain::all()), 3);
    }

    #[test]
    fn sturm_counts_match_known_roots() {
        // (x + 3)(x - 1/2)(x - 5)(x^2 + 1)
        let f = &(&(&p(&[1, 3]) * &p(&[2, -1])) * &p(&[1, -5])) * &p(&[1, 0, 1]);
        let s = SturmSequence::new(&f);
        assert_eq!(s.count(&Domain::all()), 3);
        assert_eq!(s.count(&Domain::positive()), 2);
        assert_eq!(s.count(&Domain::open(Rational::from_integer((-3).into()), Rational::from_integer(5.into()))), 1);
    }

    #[test]
    fn no_real_roots() {
        assert!(real_roots(&p(&[1, 0, 1]), &Domain::all(), 1e-12).is_empty());
        assert!(real_roots(&Poly::zero(), &Domain::all(), 1e-12).is_empty());
        assert!(real_roots(&p(&[4]), &Domain::all(), 1e-12).is_empty());
    }
}
