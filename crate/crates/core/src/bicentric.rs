//! Bicentric pentagons: the modified Sylvester quadratic in `u = 16 A^2`,
//! its resultant against the Robbins polynomial, and the convex / star
//! decision procedures.
//!
//! A tangential configuration of area `A = r p` is bicentric exactly when
//! its `16 A^2` is also the `16 A^2` of a cyclic configuration with the same
//! sides and winding. For the convex configuration that is the largest root
//! of the Robbins polynomial. A vanishing resultant is necessary but is
//! never used as a verdict on its own.

use std::f64::consts::LN_2;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chordal::{self, RobbinsPolynomial};
use crate::linkage::{is_tangential, TangentLengths};
use crate::oracle::{circumcircle_fit, incircle_fit, reconstruct_tangential};
use crate::resultant::resultant;
use crate::roots::{relative_gap, Domain, RootSet};
use crate::tangential::{arctan_inradius, pentagon_inradii, InradiusPair};
use crate::tolerance::{FIT_RESIDUAL, RESULTANT_ZERO, ROOT_MATCH, ROOT_REFINEMENT};
use crate::{to_f64, Error, Linkage, Poly, Rational, Result};

/// `s_1 u^2 - 16 p^2 s_3 u + 256 p^4 s_5`: the biquadratic in `r` rewritten
/// in `u = 16 (r p)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModifiedSylvester {
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
    pub semiperimeter: Rational,
}

impl ModifiedSylvester {
    pub fn poly(&self) -> Poly {
        Poly::new(vec![self.c0.clone(), self.c1.clone(), self.c2.clone()])
    }

    /// `c1^2 - 4 c2 c0`, exact.
    pub fn discriminant(&self) -> Rational {
        &self.c1 * &self.c1 - Rational::from_integer(4.into()) * &self.c2 * &self.c0
    }

    /// Real roots `(larger, smaller)`, or `None` for a negative
    /// discriminant. The smaller one is `c0 / q` to avoid cancellation.
    pub fn roots(&self) -> Option<(f64, f64)> {
        let d = self.discriminant();
        if d.is_negative() {
            return None;
        }
        let (c2, c1, c0) = (to_f64(&self.c2), to_f64(&self.c1), to_f64(&self.c0));
        let q = 0.5 * (-c1 + to_f64(&d).sqrt());
        Some((q / c2, c0 / q))
    }
}

pub fn modified_sylvester(t: &TangentLengths, p: &Rational) -> Result<ModifiedSylvester> {
    if t.len() != 5 {
        return Err(Error::WrongSideCount { expected: 5, found: t.len() });
    }
    t.require_positive()?;
    if !p.is_positive() {
        return Err(Error::Degenerate);
    }
    let s = t.symmetric_functions();
    let p2 = p * p;
    let int = |k: i64| Rational::from_integer(k.into());
    Ok(ModifiedSylvester {
        c2: s.get(1),
        c1: -int(16) * &p2 * s.get(3),
        c0: int(256) * &p2 * &p2 * s.get(5),
        semiperimeter: p.clone(),
    })
}

/// Outcome of the resultant test `Res_u(I~_5, H_5) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultantCondition {
    pub value: Rational,
    pub is_zero: bool,
    /// The zero test was exact (rational input) rather than toleranced.
    pub exact: bool,
    /// `|Res| / (|I~_5|_2^7 |H_5|_2^2)`, informational. Tiny even for
    /// clearly non-bicentric input, so it does not drive the verdict.
    pub relative_magnitude: f64,
    /// Smallest relative gap between a real root of `I~_5` and a real root
    /// of `H_5`; infinite when either has none. Used for float input.
    pub root_separation: f64,
}

/// Resultant condition for a five-bar linkage with positive tangent
/// lengths. For exact linkages the zero test is exact; otherwise the
/// resultant counts as zero when [`ResultantCondition::root_separation`] is
/// at most `tolerance`.
pub fn resultant_condition(linkage: &Linkage, tolerance: f64) -> Result<ResultantCondition> {
    let (ms, robbins, roots) = pentagon_data(linkage)?;
    Ok(condition_from(&ms, &robbins, &roots, linkage.is_exact(), tolerance))
}

fn pentagon_data(linkage: &Linkage) -> Result<(ModifiedSylvester, RobbinsPolynomial, RootSet)> {
    if linkage.n() != 5 {
        return Err(Error::WrongSideCount { expected: 5, found: linkage.n() });
    }
    let tangency = is_tangential(linkage)?;
    if !tangency.is_tangential() {
        return Err(Error::NotTangential);
    }
    let ms = modified_sylvester(&tangency.tangent_lengths, &linkage.semiperimeter())?;
    let robbins = chordal::robbins_polynomial(linkage.sides())?;
    let roots = chordal::real_roots(&robbins, &Domain::all(), ROOT_REFINEMENT);
    Ok((ms, robbins, roots))
}

fn condition_from(
    ms: &ModifiedSylvester,
    robbins: &RobbinsPolynomial,
    roots: &RootSet,
    exact: bool,
    tolerance: f64,
) -> ResultantCondition {
    let f = ms.poly();
    let g = robbins.poly();
    let value = resultant(&f, g);
    let relative_magnitude =
        if value.is_zero() { 0.0 } else { (ln_abs(&value) - 7.0 * ln_norm(&f) - 2.0 * ln_norm(g)).exp() };
    let root_separation = match ms.roots() {
        Some((big, small)) => [big, small]
            .iter()
            .flat_map(|&a| roots.roots.iter().map(move |r| relative_gap(a, r.value)))
            .fold(f64::INFINITY, f64::min),
        None => f64::INFINITY,
    };
    let is_zero = if exact { value.is_zero() } else { root_separation <= tolerance };
    ResultantCondition { value, is_zero, exact, relative_magnitude, root_separation }
}

fn ln_abs_int(b: &BigInt) -> f64 {
    let m = b.magnitude();
    let bits = m.bits();
    if bits <= 1000 {
        m.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 64;
        (m >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * LN_2
    }
}

fn ln_abs(x: &Rational) -> f64 {
    ln_abs_int(x.numer()) - ln_abs_int(x.denom())
}

/// `ln` of the coefficient 2-norm, in log space so huge coefficients do not
/// overflow.
fn ln_norm(p: &Poly) -> f64 {
    let logs: Vec<f64> = p.coeffs().iter().filter(|c| !c.is_zero()).map(|c| 2.0 * ln_abs(c)).collect();
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    0.5 * (top + logs.iter().map(|l| (l - top).exp()).sum::<f64>().ln())
}

/// Numbers behind a bicentricity verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    /// Inradius of the tangential configuration.
    pub r: f64,
    /// Its area, `r p`.
    pub area: f64,
    /// `16 A^2`, a root of the modified Sylvester quadratic.
    pub u: f64,
    /// The Robbins root compared against, and its index in the root list.
    pub matched_root: Option<f64>,
    pub matched_index: Option<usize>,
    pub relative_gap: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BicentricCheck {
    pub tangential: bool,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Why the check failed before any comparison was made.
    pub reason: Option<&'static str>,
}

impl BicentricCheck {
    fn rejected(tangential: bool, reason: &'static str) -> Self {
        Self { tangential, holds: false, witness: None, reason: Some(reason) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Convex,
    Star,
}

fn tangential_witness(pair: &InradiusPair, ms: &ModifiedSylvester, kind: Kind) -> Witness {
    let p = to_f64(&ms.semiperimeter);
    let (big, small) = ms.roots().unwrap_or((f64::NAN, f64::NAN));
    let (r, u) = match kind {
        Kind::Convex => (pair.r_convex, big),
        Kind::Star => (pair.r_star, small),
    };
    Witness { r, area: r * p, u, matched_root: None, matched_index: None, relative_gap: None }
}

fn run_check(linkage: &Linkage, tolerance: f64, kind: Kind) -> Result<BicentricCheck> {
    if linkage.n() != 5 {
        return Err(Error::WrongSideCount { expected: 5, found: linkage.n() });
    }
    let tangency = is_tangential(linkage)?;
    if !tangency.is_tangential() {
        return Ok(BicentricCheck::rejected(false, "a tangent length is not positive"));
    }
    let t = &tangency.tangent_lengths;
    let ms = modified_sylvester(t, &linkage.semiperimeter())?;
    let pair = match pentagon_inradii(t) {
        Ok(pair) => pair,
        Err(Error::NegativeDiscriminant) => return Ok(BicentricCheck::rejected(true, "negative discriminant")),
        Err(e) => return Err(e),
    };
    let robbins = chordal::robbins_polynomial(linkage.sides())?;
    let roots = chordal::real_roots(&robbins, &Domain::all(), ROOT_REFINEMENT);
    Ok(compare(tangential_witness(&pair, &ms, kind), &roots, tolerance, kind))
}

fn compare(mut witness: Witness, roots: &RootSet, tolerance: f64, kind: Kind) -> BicentricCheck {
    let matched = match kind {
        Kind::Convex => roots.max().map(|root| (roots.len() - 1, root.value, relative_gap(witness.u, root.value))),
        Kind::Star => roots.nearest(witness.u).map(|(i, root, gap)| (i, root.value, gap)),
    };
    let Some((index, value, gap)) = matched else {
        return BicentricCheck {
            tangential: true,
            holds: false,
            witness: Some(witness),
            reason: Some("no real Robbins root"),
        };
    };
    witness.matched_index = Some(index);
    witness.matched_root = Some(value);
    witness.relative_gap = Some(gap);
    BicentricCheck { tangential: true, holds: gap <= tolerance, witness: Some(witness), reason: None }
}

/// Convex bicentricity: `16 A^2` of the convex tangential configuration
/// equals the largest Robbins root to relative `tolerance`.
pub fn convex_bicentric_check(linkage: &Linkage, tolerance: f64) -> Result<BicentricCheck> {
    run_check(linkage, tolerance, Kind::Convex)
}

/// Star bicentricity: `16 A^2` of the winding-2 tangential configuration
/// matches some real Robbins root to relative `tolerance`.
pub fn star_bicentric_check(linkage: &Linkage, tolerance: f64) -> Result<BicentricCheck> {
    run_check(linkage, tolerance, Kind::Star)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisOptions {
    /// Relative tolerance for matching `16 A^2` against Robbins roots.
    pub match_tolerance: f64,
    /// Root-separation threshold for the resultant zero test on float input.
    pub resultant_tolerance: f64,
    /// Relative width of Robbins root isolating intervals.
    pub root_tolerance: f64,
    /// Confirm each verdict on explicit coordinates.
    pub oracle: bool,
    /// Fit residual threshold relative to the configuration diameter.
    pub oracle_tolerance: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            match_tolerance: ROOT_MATCH,
            resultant_tolerance: RESULTANT_ZERO,
            root_tolerance: ROOT_REFINEMENT,
            oracle: true,
            oracle_tolerance: FIT_RESIDUAL,
        }
    }
}

/// Coordinate check of one tangential configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleVerdict {
    pub winding: u32,
    pub closure_residual: f64,
    pub incircle_residual: f64,
    pub circumcircle_residual: f64,
    /// Distance between fitted incentre and circumcentre.
    pub center_distance: f64,
    pub shoelace_area: f64,
    pub bicentric: bool,
}

/// Rebuilds the tangential configuration of the given winding from the
/// arctangent equation (independently of the polynomial route) and fits
/// both circles to its vertices.
pub fn oracle_verdict(t: &TangentLengths, winding: u32, tolerance: f64) -> Result<OracleVerdict> {
    let r = arctan_inradius(t, winding)?;
    let rebuilt = reconstruct_tangential(&t.to_f64(), r, winding)?;
    let config = &rebuilt.configuration;
    let inc = incircle_fit(config);
    let circ = circumcircle_fit(config);
    let bicentric = inc.is_tangential(config, tolerance) && circ.is_cyclic(config, tolerance);
    Ok(OracleVerdict {
        winding,
        closure_residual: rebuilt.closure_residual,
        incircle_residual: inc.residual,
        circumcircle_residual: circ.residual,
        center_distance: inc.circle.center.distance(circ.circle.center),
        shoelace_area: crate::oracle::shoelace_area(config),
        bicentric,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleCheck {
    pub convex: Option<OracleVerdict>,
    pub star: Option<OracleVerdict>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BicentricReport {
    pub tangential_exists: bool,
    pub tangent_lengths: TangentLengths,
    /// Indices of non-positive tangent lengths.
    pub non_positive: Vec<usize>,
    pub semiperimeter: Rational,
    pub inradii: Option<InradiusPair>,
    pub modified_sylvester: Option<ModifiedSylvester>,
    pub robbins: RobbinsPolynomial,
    /// All real roots of the Robbins polynomial.
    pub roots: RootSet,
    pub resultant: Option<ResultantCondition>,
    pub resultant_zero: bool,
    pub convex: BicentricCheck,
    pub star: BicentricCheck,
    pub oracle: Option<OracleCheck>,
    pub convex_bicentric: bool,
    pub star_bicentric: bool,
}

/// Full analysis of a five-bar linkage. A verdict is positive only if the
/// root match holds, the resultant vanishes and, when enabled, the oracle
/// confirms the configuration.
pub fn analyze(linkage: &Linkage, options: &AnalysisOptions) -> Result<BicentricReport> {
    if linkage.n() != 5 {
        return Err(Error::WrongSideCount { expected: 5, found: linkage.n() });
    }
    let tangency = is_tangential(linkage)?;
    let semiperimeter = linkage.semiperimeter();
    let robbins = chordal::robbins_polynomial(linkage.sides())?;
    let roots = chordal::real_roots(&robbins, &Domain::all(), options.root_tolerance);
    let t = tangency.tangent_lengths.clone();

    let mut report = BicentricReport {
        tangential_exists: tangency.is_tangential(),
        tangent_lengths: tangency.tangent_lengths,
        non_positive: tangency.non_positive,
        semiperimeter,
        inradii: None,
        modified_sylvester: None,
        robbins,
        roots,
        resultant: None,
        resultant_zero: false,
        convex: BicentricCheck::rejected(false, "a tangent length is not positive"),
        star: BicentricCheck::rejected(false, "a tangent length is not positive"),
        oracle: None,
        convex_bicentric: false,
        star_bicentric: false,
    };
    if !report.tangential_exists {
        return Ok(report);
    }

    let ms = modified_sylvester(&t, &report.semiperimeter)?;
    let condition =
        condition_from(&ms, &report.robbins, &report.roots, linkage.is_exact(), options.resultant_tolerance);
    report.resultant_zero = condition.is_zero;
    report.resultant = Some(condition);
    match pentagon_inradii(&t) {
        Ok(pair) => {
            let convex = tangential_witness(&pair, &ms, Kind::Convex);
            let star = tangential_witness(&pair, &ms, Kind::Star);
            report.convex = compare(convex, &report.roots, options.match_tolerance, Kind::Convex);
            report.star = compare(star, &report.roots, options.match_tolerance, Kind::Star);
            report.inradii = Some(pair);
        }
        Err(Error::NegativeDiscriminant) => {
            report.convex = BicentricCheck::rejected(true, "negative discriminant");
            report.star = BicentricCheck::rejected(true, "negative discriminant");
        }
        Err(e) => return Err(e),
    }
    report.modified_sylvester = Some(ms);

    let oracle = options.oracle.then(|| OracleCheck {
        convex: oracle_verdict(&t, 1, options.oracle_tolerance).ok(),
        star: oracle_verdict(&t, 2, options.oracle_tolerance).ok(),
    });
    let confirmed = |v: Option<&Option<OracleVerdict>>| match v {
        None => true,
        Some(v) => v.as_ref().is_some_and(|v| v.bicentric),
    };
    report.convex_bicentric =
        report.convex.holds && report.resultant_zero && confirmed(oracle.as_ref().map(|o| &o.convex));
    report.star_bicentric = report.star.holds && report.resultant_zero && confirmed(oracle.as_ref().map(|o| &o.star));
    report.oracle = oracle;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linkage(v: &[i64]) -> Linkage {
        Linkage::from_integers(v).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn modified_sylvester_regular() {
        let t = TangentLengths::new(vec![q(1, 2); 5]);
        let ms = modified_sylvester(&t, &q(5, 2)).unwrap();
        assert_eq!((ms.c2.clone(), ms.c1.clone(), ms.c0.clone()), (q(5, 2), q(-125, 1), q(625, 2)));
        let (big, small) = ms.roots().unwrap();
        assert!(rel(big, 47.36067977) < 1e-9);
        assert!(rel(small, 2.639320225) < 1e-9);
    }

    #[test]
    fn modified_sylvester_example_pentagon() {
        let l = linkage(&[29, 30, 31, 32, 33]);
        let t = crate::linkage::tangent_lengths(&l).unwrap();
        let ms = modified_sylvester(&t, &l.semiperimeter()).unwrap();
        let (big, _) = ms.roots().unwrap();
        assert!(rel(big, 16.0 * 1648.617494f64.powi(2)) < 1e-9);
    }

    #[test]
    fn resultant_regular_is_exactly_zero() {
        for k in 1..4 {
            let c = resultant_condition(&linkage(&[k; 5]), RESULTANT_ZERO).unwrap();
            assert!(c.value.is_zero() && c.is_zero && c.exact);
        }
    }

    #[test]
    fn resultant_example_pentagon_is_frozen() {
        let c = resultant_condition(&linkage(&[29, 30, 31, 32, 33]), RESULTANT_ZERO).unwrap();
        let expected: BigInt =
            "25270441850327799464828342856724087497231881764567445160665866446686821183256985600000000000000000000000"
                .parse()
                .unwrap();
        assert_eq!(c.value, Rational::from_integer(expected));
        assert!(!c.is_zero);
        assert!(rel(c.relative_magnitude, 4.36879796945331e-101) < 1e-6);
        assert!(c.root_separation > 1e-3);
    }

    #[test]
    fn resultant_scales_with_63rd_power() {
        let base = resultant_condition(&linkage(&[4, 5, 6, 6, 7]), RESULTANT_ZERO).unwrap().value;
        let scaled = resultant_condition(&linkage(&[12, 15, 18, 18, 21]), RESULTANT_ZERO).unwrap().value;
        assert!(!base.is_zero());
        assert_eq!(scaled, base * Rational::from_integer(3.into()).pow(63));
    }

    #[test]
    fn float_input_uses_root_separation() {
        let regular = Linkage::from_f64(&[0.7; 5]).unwrap();
        assert!(resultant_condition(&regular, RESULTANT_ZERO).unwrap().is_zero);
        let generic = Linkage::from_f64(&[29.0, 30.0, 31.0, 32.0, 33.5]).unwrap();
        let c = resultant_condition(&generic, RESULTANT_ZERO).unwrap();
        assert!(!c.exact && !c.is_zero);
    }

    #[test]
    fn resultant_requires_tangential() {
        assert_eq!(resultant_condition(&linkage(&[10, 1, 1, 1, 1]), 1e-6), Err(Error::NotTangential));
        assert_eq!(
            resultant_condition(&linkage(&[1, 1, 1, 1]), 1e-6),
            Err(Error::WrongSideCount { expected: 5, found: 4 })
        );
    }

    #[test]
    fn checks_on_examples() {
        let convex = convex_bicentric_check(&linkage(&[1; 5]), ROOT_MATCH).unwrap();
        assert!(convex.holds);
        let w = convex.witness.unwrap();
        assert!(rel(w.u, 47.36067977) < 1e-9 && rel(w.matched_root.unwrap(), 47.36067977) < 1e-9);
        assert!(rel(w.area, 1.720477400) < 1e-9);

        let star = star_bicentric_check(&linkage(&[1; 5]), ROOT_MATCH).unwrap();
        assert!(star.holds);
        assert_eq!(star.witness.unwrap().matched_index, Some(0));

        let l = linkage(&[29, 30, 31, 32, 33]);
        let convex = convex_bicentric_check(&l, ROOT_MATCH).unwrap();
        assert!(!convex.holds);
        let w = convex.witness.unwrap();
        assert!(rel(w.matched_root.unwrap(), 43642506.91) < 1e-9);
        assert!(rel(w.area, 1648.617494) < 1e-9);
        assert!(!star_bicentric_check(&l, ROOT_MATCH).unwrap().holds);

        let bad = convex_bicentric_check(&linkage(&[10, 1, 1, 1, 1]), ROOT_MATCH).unwrap();
        assert!(!bad.holds && !bad.tangential && bad.reason.is_some());
    }

    #[test]
    fn analyze_examples() {
        let options = AnalysisOptions::default();
        let regular = analyze(&linkage(&[1; 5]), &options).unwrap();
        assert!(regular.tangential_exists && regular.resultant_zero);
        assert!(regular.convex_bicentric && regular.star_bicentric);
        let oracle = regular.oracle.unwrap();
        assert!(oracle.convex.unwrap().center_distance < 1e-9);
        assert!(oracle.star.unwrap().bicentric);

        let bad = analyze(&linkage(&[10, 1, 1, 1, 1]), &options).unwrap();
        assert!(!bad.tangential_exists && !bad.convex_bicentric && !bad.star_bicentric);
        assert_eq!(bad.non_positive, vec![2, 4]);
        assert!(bad.resultant.is_none());

        let generic = analyze(&linkage(&[29, 30, 31, 32, 33]), &options).unwrap();
        assert!(generic.tangential_exists && !generic.resultant_zero);
        assert!(!generic.convex_bicentric && !generic.star_bicentric);
        assert!(!generic.oracle.unwrap().convex.unwrap().bicentric);
    }

    #[test]
    fn scaled_regular_pentagons() {
        for side in [q(1, 3), q(7, 2), q(1000, 1)] {
            let l = Linkage::new(vec![side; 5]).unwrap();
            let report = analyze(&l, &AnalysisOptions::default()).unwrap();
            assert!(report.convex_bicentric && report.star_bicentric);
        }
    }

    #[test]
    fn report_is_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<BicentricReport>();
    }
}
