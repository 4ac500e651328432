//! JSON payloads. Every number is a `{value, approx}` pair: `value` is the
//! authoritative string (exact rationals as `n` or `n/d`, floats in shortest
//! round-trip form) and `approx` is the nearest double.

use bicentric_core::bicentric::{BicentricCheck, BicentricReport, OracleVerdict};
use bicentric_core::oracle::{Circle, PolygonConfiguration};
use bicentric_core::quad::QuadReport;
use bicentric_core::roots::RealRoot;
use bicentric_core::{to_f64, Rational};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Number {
    pub value: String,
    pub approx: f64,
}

impl Number {
    pub fn exact(q: &Rational) -> Self {
        Self { value: q.to_string(), approx: to_f64(q) }
    }

    pub fn float(x: f64) -> Self {
        Self { value: x.to_string(), approx: x }
    }
}

pub fn exact_list(values: &[Rational]) -> Vec<Number> {
    values.iter().map(Number::exact).collect()
}

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: Input,
    pub result: T,
}

#[derive(Debug, Serialize)]
pub struct Input {
    pub sides: Vec<Number>,
}

#[derive(Debug, Serialize)]
pub struct TangentResult {
    pub n: usize,
    pub tangential: bool,
    pub tangent_lengths: Vec<Number>,
    pub non_positive: Vec<usize>,
    pub semiperimeter: Number,
}

#[derive(Debug, Serialize)]
pub struct Configuration {
    pub winding: u32,
    pub inradius: Number,
    pub area: Number,
    pub sixteen_area_squared: Number,
}

#[derive(Debug, Serialize)]
pub struct Sylvester {
    /// Coefficients in `x = r^2`, highest degree first.
    pub coefficients: Vec<Number>,
    pub discriminant: Option<Number>,
    pub r_convex: Option<Number>,
    pub r_star: Option<Number>,
}

#[derive(Debug, Serialize)]
pub struct InradiusResult {
    pub tangent_lengths: Vec<Number>,
    pub semiperimeter: Number,
    /// Arctangent-equation solutions, one per winding number.
    pub configurations: Vec<Configuration>,
    pub sylvester: Sylvester,
}

#[derive(Debug, Serialize)]
pub struct Root {
    pub value: Number,
    pub lower: Number,
    pub upper: Number,
    pub multiplicity: usize,
}

impl From<&RealRoot> for Root {
    fn from(r: &RealRoot) -> Self {
        Self {
            value: Number::float(r.value),
            lower: Number::exact(&r.lower),
            upper: Number::exact(&r.upper),
            multiplicity: r.multiplicity,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RobbinsResult {
    /// `e_1..e_5` of the squared sides.
    pub elementary: Vec<Number>,
    /// Highest degree first.
    pub coefficients: Vec<Number>,
    pub roots: Vec<Root>,
    pub max_root: Option<Number>,
    pub convex_area: Option<Number>,
}

#[derive(Debug, Serialize)]
pub struct Inradii {
    pub r_convex: Number,
    pub r_star: Number,
    pub discriminant: Number,
}

#[derive(Debug, Serialize)]
pub struct Resultant {
    pub value: Number,
    pub is_zero: bool,
    pub exact: bool,
    pub relative_magnitude: f64,
    pub root_separation: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub r: Number,
    pub area: Number,
    pub u: Number,
    pub matched_root: Option<Number>,
    pub matched_index: Option<usize>,
    pub relative_gap: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub holds: bool,
    pub reason: Option<&'static str>,
    pub witness: Option<Witness>,
}

impl From<&BicentricCheck> for Check {
    fn from(c: &BicentricCheck) -> Self {
        Self {
            holds: c.holds,
            reason: c.reason,
            witness: c.witness.as_ref().map(|w| Witness {
                r: Number::float(w.r),
                area: Number::float(w.area),
                u: Number::float(w.u),
                matched_root: w.matched_root.map(Number::float),
                matched_index: w.matched_index,
                relative_gap: w.relative_gap,
            }),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Oracle {
    pub winding: u32,
    pub bicentric: bool,
    pub closure_residual: f64,
    pub incircle_residual: f64,
    pub circumcircle_residual: f64,
    pub center_distance: f64,
    pub shoelace_area: Number,
}

impl From<&OracleVerdict> for Oracle {
    fn from(v: &OracleVerdict) -> Self {
        Self {
            winding: v.winding,
            bicentric: v.bicentric,
            closure_residual: v.closure_residual,
            incircle_residual: v.incircle_residual,
            circumcircle_residual: v.circumcircle_residual,
            center_distance: v.center_distance,
            shoelace_area: Number::float(v.shoelace_area),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OracleChecks {
    pub convex: Option<Oracle>,
    pub star: Option<Oracle>,
}

#[derive(Debug, Serialize)]
pub struct BicentricResult {
    pub tangential: bool,
    pub tangent_lengths: Vec<Number>,
    pub non_positive: Vec<usize>,
    pub semiperimeter: Number,
    pub inradii: Option<Inradii>,
    /// `c2, c1, c0` of the quadratic in `u = 16 A^2`.
    pub modified_sylvester: Option<Vec<Number>>,
    pub robbins_coefficients: Vec<Number>,
    pub robbins_roots: Vec<Root>,
    pub resultant: Option<Resultant>,
    pub resultant_zero: bool,
    pub convex: Check,
    pub star: Check,
    pub oracle: Option<OracleChecks>,
    pub convex_bicentric: bool,
    pub star_bicentric: bool,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl From<&BicentricReport> for BicentricResult {
    fn from(r: &BicentricReport) -> Self {
        Self {
            tangential: r.tangential_exists,
            tangent_lengths: exact_list(r.tangent_lengths.values()),
            non_positive: r.non_positive.clone(),
            semiperimeter: Number::exact(&r.semiperimeter),
            inradii: r.inradii.as_ref().map(|p| Inradii {
                r_convex: Number::float(p.r_convex),
                r_star: Number::float(p.r_star),
                discriminant: Number::exact(&p.discriminant),
            }),
            modified_sylvester: r
                .modified_sylvester
                .as_ref()
                .map(|m| exact_list(&[m.c2.clone(), m.c1.clone(), m.c0.clone()])),
            robbins_coefficients: exact_list(&r.robbins.coefficients()),
            robbins_roots: r.roots.roots.iter().map(Root::from).collect(),
            resultant: r.resultant.as_ref().map(|c| Resultant {
                value: Number::exact(&c.value),
                is_zero: c.is_zero,
                exact: c.exact,
                relative_magnitude: c.relative_magnitude,
                root_separation: finite(c.root_separation),
            }),
            resultant_zero: r.resultant_zero,
            convex: Check::from(&r.convex),
            star: Check::from(&r.star),
            oracle: r.oracle.as_ref().map(|o| OracleChecks {
                convex: o.convex.as_ref().map(Oracle::from),
                star: o.star.as_ref().map(Oracle::from),
            }),
            convex_bicentric: r.convex_bicentric,
            star_bicentric: r.star_bicentric,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct QuadResult {
    pub pitot: bool,
    pub is_kite: bool,
    pub semiperimeter: Number,
    pub r_min: Option<Number>,
    pub r_max: Option<Number>,
}

impl QuadResult {
    pub fn new(report: &QuadReport, semiperimeter: &Rational) -> Self {
        Self {
            pitot: report.pitot,
            is_kite: report.is_kite,
            semiperimeter: Number::exact(semiperimeter),
            r_min: report.r_min.map(Number::float),
            r_max: report.r_max.map(Number::float),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CircleJson {
    pub kind: &'static str,
    pub center: [f64; 2],
    pub radius: f64,
}

impl CircleJson {
    pub fn new(kind: &'static str, c: &Circle) -> Self {
        Self { kind, center: [c.center.x, c.center.y], radius: c.radius }
    }
}

#[derive(Debug, Serialize)]
pub struct RenderResult {
    pub config: &'static str,
    pub winding: u32,
    pub output: Option<String>,
    pub vertices: Vec<[f64; 2]>,
    pub circles: Vec<CircleJson>,
    pub shoelace_area: Number,
    pub incircle_residual: f64,
    pub circumcircle_residual: f64,
}

pub fn vertices(config: &PolygonConfiguration) -> Vec<[f64; 2]> {
    config.vertices.iter().map(|p| [p.x, p.y]).collect()
}
