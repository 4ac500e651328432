//! Independent coordinate geometry.
//!
//! Builds explicit vertex positions for tangential and cyclic configurations
//! and re-derives areas and circles from the coordinates alone. Nothing here
//! touches the polynomial machinery, so agreement between the two is a real
//! cross-check. All arithmetic is `f64`.

use std::f64::consts::PI;

use crate::tangential::arctan_sum;
use crate::tolerance::{ANGLE_SUM, BISECTION_MAX_ITERATIONS, FIT_RESIDUAL};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        Self::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

/// Vertices of one planar configuration of a linkage, in order.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonConfiguration {
    pub vertices: Vec<Point>,
    /// Turns of the boundary around the centre: 1 convex, 2 pentagram.
    pub winding: u32,
}

impl PolygonConfiguration {
    /// Lengths of the edges `v_i -> v_{i+1}`, the last one closing the loop.
    pub fn side_lengths(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n).map(|i| self.vertices[i].distance(self.vertices[(i + 1) % n])).collect()
    }

    pub fn perimeter(&self) -> f64 {
        self.side_lengths().iter().sum()
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut best: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                best = best.max(v[i].distance(v[j]));
            }
        }
        best
    }
}

/// Tangential configuration together with its closure gap.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentialReconstruction {
    pub configuration: PolygonConfiguration,
    /// Distance between the first vertex and the point where walking all `n`
    /// sides actually ends.
    pub closure_residual: f64,
}

/// Places the incircle (radius `r`) at the origin and walks around it.
///
/// Vertex `j` sits at distance `sqrt(r^2 + t_j^2)` from the origin and each
/// side advances the polar angle by `arctan(t_j / r) + arctan(t_{j+1} / r)`.
/// The walk closes only if the half-angles sum to `winding * pi`, which is
/// checked up front.
pub fn reconstruct_tangential(t: &[f64], r: f64, winding: u32) -> Result<TangentialReconstruction> {
    let n = t.len();
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    if let Some(index) = t.iter().position(|&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::NonPositiveTangentLength { index });
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::NonPositiveRadius);
    }
    let residual = arctan_sum(t, r) - f64::from(winding) * PI;
    if residual.abs() > ANGLE_SUM {
        return Err(Error::AngleMismatch { residual });
    }

    let half: Vec<f64> = t.iter().map(|&tj| (tj / r).atan()).collect();
    // side 0 touches the incircle at its lowest point
    let mut angle = -PI / 2.0 - half[0];
    let mut vertices = Vec::with_capacity(n);
    for j in 0..n {
        vertices.push(Point::polar(r.hypot(t[j]), angle));
        angle += half[j] + half[(j + 1) % n];
    }
    let end = Point::polar(r.hypot(t[0]), angle);
    let closure_residual = end.distance(vertices[0]);
    Ok(TangentialReconstruction { configuration: PolygonConfiguration { vertices, winding }, closure_residual })
}

fn chord_angle_sum(sides: &[f64], radius: f64) -> f64 {
    sides.iter().map(|&a| 2.0 * (a / (2.0 * radius)).min(1.0).asin()).sum()
}

/// Places the sides as consecutive chords of one circle centred at the
/// origin.
///
/// The circumradius solves `sum_i 2 arcsin(a_i / 2R) = 2 pi winding` with
/// every chord on its short arc. The left side decreases strictly in `R`, so
/// bisection on `[max a / 2, sum a]` finds the unique solution when one
/// exists. Configurations that need a long arc are reported as
/// [`Error::NoCircumradius`].
pub fn reconstruct_cyclic(sides: &[f64], winding: u32) -> Result<(PolygonConfiguration, Circle)> {
    let n = sides.len();
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    if let Some(index) = sides.iter().position(|&a| !(a > 0.0 && a.is_finite())) {
        return Err(Error::NonPositiveSide { index });
    }
    if winding == 0 {
        return Err(Error::UnsupportedWinding(winding));
    }
    let total: f64 = sides.iter().sum();
    if let Some(index) = sides.iter().position(|&a| 2.0 * a >= total) {
        return Err(Error::NotClosable { index });
    }
    let max = sides.iter().copied().fold(0.0, f64::max);
    let target = 2.0 * PI * f64::from(winding);
    let g = |radius: f64| chord_angle_sum(sides, radius) - target;

    let (mut lo, mut hi) = (0.5 * max * (1.0 + 1e-15), total);
    if g(lo) < 0.0 {
        return Err(Error::NoCircumradius { winding });
    }
    for _ in 0..BISECTION_MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let radius = 0.5 * (lo + hi);

    let central: Vec<f64> = sides.iter().map(|&a| 2.0 * (a / (2.0 * radius)).min(1.0).asin()).collect();
    let mut angle = -PI / 2.0 - central[0] / 2.0;
    let vertices = central
        .iter()
        .map(|theta| {
            let v = Point::polar(radius, angle);
            angle += theta;
            v
        })
        .collect();
    Ok((PolygonConfiguration { vertices, winding }, Circle { center: Point::ORIGIN, radius }))
}

/// Signed shoelace area; counterclockwise is positive.
pub fn shoelace_area(config: &PolygonConfiguration) -> f64 {
    let v = &config.vertices;
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].x * v[(i + 1) % n].y - v[(i + 1) % n].x * v[i].y).sum::<f64>()
}

/// Incircle estimate for a configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncircleFit {
    pub circle: Circle,
    /// Largest deviation of a side-line distance from their mean.
    pub residual: f64,
    /// Every tangency foot lies strictly inside its side.
    pub feet_inside: bool,
}

impl IncircleFit {
    /// Residual below `tolerance * diameter` and all feet interior.
    pub fn is_tangential(&self, config: &PolygonConfiguration, tolerance: f64) -> bool {
        self.feet_inside && self.residual <= tolerance * config.diameter()
    }
}

/// Circumcircle estimate for a configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircumcircleFit {
    pub circle: Circle,
    /// Largest deviation of a vertex distance from their mean.
    pub residual: f64,
}

impl CircumcircleFit {
    pub fn is_cyclic(&self, config: &PolygonConfiguration, tolerance: f64) -> bool {
        self.residual <= tolerance * config.diameter()
    }
}

/// Minimizes `sum_i (w_i . c + b_i - mean)^2` over the centre `c`, i.e. the
/// variance of the affine quantities `w_i . c + b_i`.
fn least_variance_center(rows: &[(Point, f64)], fallback: Point) -> Point {
    let n = rows.len() as f64;
    let wm = Point::new(rows.iter().map(|r| r.0.x).sum::<f64>() / n, rows.iter().map(|r| r.0.y).sum::<f64>() / n);
    let bm = rows.iter().map(|r| r.1).sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy, mut rx, mut ry) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (w, b) in rows {
        let dw = w.sub(wm);
        let db = b - bm;
        sxx += dw.x * dw.x;
        sxy += dw.x * dw.y;
        syy += dw.y * dw.y;
        rx -= dw.x * db;
        ry -= dw.y * db;
    }
    let det = sxx * syy - sxy * sxy;
    if det.abs() <= 1e-14 * (sxx * syy).abs().max(f64::MIN_POSITIVE) {
        return fallback;
    }
    Point::new((rx * syy - ry * sxy) / det, (sxx * ry - sxy * rx) / det)
}

fn centroid(points: &[Point]) -> Point {
    let n = points.len() as f64;
    Point::new(points.iter().map(|p| p.x).sum::<f64>() / n, points.iter().map(|p| p.y).sum::<f64>() / n)
}

/// Least-squares incircle: the point whose distances to the side lines have
/// the smallest variance. Distances are signed towards the interior of the
/// traversal (left of each edge for a counterclockwise polygon), so stars
/// are handled like convex polygons.
pub fn incircle_fit(config: &PolygonConfiguration) -> IncircleFit {
    let v = &config.vertices;
    let n = v.len();
    let orientation = if shoelace_area(config) < 0.0 { -1.0 } else { 1.0 };
    let edges: Vec<(Point, Point, f64)> = (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            let len = a.distance(b);
            (a, Point::new((b.x - a.x) / len, (b.y - a.y) / len), len)
        })
        .collect();
    let normals: Vec<Point> = edges.iter().map(|(_, d, _)| Point::new(-d.y * orientation, d.x * orientation)).collect();
    let rows: Vec<(Point, f64)> = edges.iter().zip(&normals).map(|((a, _, _), nrm)| (*nrm, -nrm.dot(*a))).collect();
    let center = least_variance_center(&rows, centroid(v));

    let distances: Vec<f64> = rows.iter().map(|(w, b)| w.dot(center) + b).collect();
    let mean = distances.iter().sum::<f64>() / n as f64;
    let residual = distances.iter().map(|d| (d - mean).abs()).fold(0.0, f64::max);
    let feet_inside = edges.iter().zip(&normals).zip(&distances).all(|(((a, dir, len), nrm), d)| {
        let foot = Point::new(center.x - d * nrm.x, center.y - d * nrm.y);
        let s = foot.sub(*a).dot(*dir) / len;
        s > 0.0 && s < 1.0
    });
    IncircleFit { circle: Circle { center, radius: mean.abs() }, residual, feet_inside }
}

/// Least-squares circumcircle (algebraic fit on centred coordinates).
///
/// With vertices shifted to their centroid, the centre `c` solves
/// `2 (sum p p^T) c = sum p |p|^2`, which is exact for concyclic points.
/// The radius is the mean vertex distance.
pub fn circumcircle_fit(config: &PolygonConfiguration) -> CircumcircleFit {
    let v = &config.vertices;
    let g = centroid(v);
    let (mut sxx, mut sxy, mut syy, mut rx, mut ry) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for p in v.iter().map(|p| p.sub(g)) {
        let q = p.dot(p);
        sxx += p.x * p.x;
        sxy += p.x * p.y;
        syy += p.y * p.y;
        rx += p.x * q;
        ry += p.y * q;
    }
    let det = 2.0 * (sxx * syy - sxy * sxy);
    let center = if det.abs() > 0.0 {
        Point::new(g.x + (rx * syy - ry * sxy) / det, g.y + (sxx * ry - sxy * rx) / det)
    } else {
        g
    };
    let distances: Vec<f64> = v.iter().map(|p| p.distance(center)).collect();
    let mean = distances.iter().sum::<f64>() / v.len() as f64;
    let residual = distances.iter().map(|d| (d - mean).abs()).fold(0.0, f64::max);
    CircumcircleFit { circle: Circle { center, radius: mean }, residual }
}

/// Whether both fits accept the configuration at [`FIT_RESIDUAL`].
pub fn is_bicentric_configuration(config: &PolygonConfiguration) -> bool {
    incircle_fit(config).is_tangential(config, FIT_RESIDUAL) && circumcircle_fit(config).is_cyclic(config, FIT_RESIDUAL)
}

/// Circumradius, inradius and the distance between their centres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerTriple {
    pub circumradius: f64,
    pub inradius: f64,
    pub center_distance: f64,
}

impl EulerTriple {
    /// `(R^2 - d^2 - 2 R r) / R^2`; zero for every triangle.
    pub fn relative_defect(&self) -> f64 {
        let (big, small, d) = (self.circumradius, self.inradius, self.center_distance);
        (big * big - d * d - 2.0 * big * small) / (big * big)
    }
}

/// Triangle area from its sides, in the cancellation-free ordering
/// `a >= b >= c`.
pub fn heron_area(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = s;
    0.25 * ((a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))).max(0.0).sqrt()
}

fn check_triangle(a: f64, b: f64, c: f64) -> Result<()> {
    let ok = [a, b, c].iter().all(|x| *x > 0.0 && x.is_finite()) && a < b + c && b < a + c && c < a + b;
    if ok {
        Ok(())
    } else {
        Err(Error::NotATriangle(a, b, c))
    }
}

/// Euler triple of the triangle with sides `a = |BC|`, `b = |CA|`,
/// `c = |AB|`. `R = abc / 4K` and `r = K / p` come from the sides; `d` is
/// measured between the circumcentre and the incentre of an explicit
/// placement `A = (0, 0)`, `B = (c, 0)`.
pub fn euler_triple(a: f64, b: f64, c: f64) -> Result<EulerTriple> {
    check_triangle(a, b, c)?;
    let area = heron_area(a, b, c);
    let p = 0.5 * (a + b + c);
    let circumradius = a * b * c / (4.0 * area);
    let inradius = area / p;

    let cx = (b * b + c * c - a * a) / (2.0 * c);
    let cy = 2.0 * area / c;
    let circumcenter = Point::new(0.5 * c, (cx * cx + cy * cy - c * cx) / (2.0 * cy));
    let incenter = Point::new((b * c + c * cx) / (2.0 * p), c * cy / (2.0 * p));
    Ok(EulerTriple { circumradius, inradius, center_distance: circumcenter.distance(incenter) })
}
