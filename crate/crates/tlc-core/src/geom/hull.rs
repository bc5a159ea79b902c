//! Convex hulls and width queries.

use serde::{Deserialize, Serialize};

use super::angle::Orientation;
use super::point::{orient_sign, Point};
use super::strip::Strip;
use super::tol::eps;
use crate::error::Error;

/// A strictly convex polygon with counterclockwise vertices. Collinear
/// triples are collapsed during construction; a segment is represented by
/// its two extreme vertices and a single point by one vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn empty() -> Self {
        ConvexPolygon {
            vertices: Vec::new(),
        }
    }

    /// Wrap vertices that are already a strictly convex CCW chain.
    pub fn from_ccw_unchecked(vertices: Vec<Point>) -> Self {
        ConvexPolygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Point containment (boundary counts as inside) with tolerance.
    pub fn contains(&self, p: &Point) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => {
                let v = &self.vertices[0];
                let scale = 1f64.max(v.x.abs()).max(v.y.abs()).max(p.x.abs()).max(p.y.abs());
                p.dist(v) <= eps() * scale
            }
            2 => on_segment(&self.vertices[0], &self.vertices[1], p),
            _ => self
                .vertices
                .iter()
                .zip(self.vertices.iter().cycle().skip(1))
                .all(|(a, b)| orient_sign(a, b, p) >= 0),
        }
    }

    /// Index of a vertex attaining the maximum projection onto `dir`.
    pub fn extreme(&self, dir: &Point) -> Option<usize> {
        if self.vertices.is_empty() {
            return None;
        }
        let mut best = 0usize;
        let mut best_val = self.vertices[0].dot(dir);
        for (i, v) in self.vertices.iter().enumerate().skip(1) {
            let val = v.dot(dir);
            if val > best_val {
                best = i;
                best_val = val;
            }
        }
        Some(best)
    }

    /// Tightest strip of the given orientation containing the polygon.
    pub fn width_at(&self, theta: Orientation) -> Option<Strip> {
        Strip::tight(theta, &self.vertices)
    }

    /// Minimum width over all orientations, with the smallest minimizing
    /// orientation. Empty and single-point hulls report width 0.
    pub fn min_width(&self) -> (f64, Orientation) {
        min_width_hull(&self.vertices)
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if orient_sign(a, b, p) != 0 {
        return false;
    }
    let t = p.sub(a).dot(&b.sub(a));
    let len2 = b.sub(a).dot(&b.sub(a));
    let scale = len2.max(1.0);
    t >= -eps() * scale && t <= len2 + eps() * scale
}

/// Convex hull of arbitrary points (monotone chain). Collinear inputs give
/// a 2-vertex hull, a single repeated point a 1-vertex hull, empty input an
/// empty polygon.
pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon, Error> {
    for p in points {
        p.validate()?;
    }
    Ok(convex_hull_trusted(points))
}

/// `convex_hull` without coordinate validation, for hot internal paths.
pub(crate) fn convex_hull_trusted(points: &[Point]) -> ConvexPolygon {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_unstable_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    ConvexPolygon {
        vertices: hull_of_sorted(&pts),
    }
}

/// Monotone chain over points already sorted by `(x, y)` and deduplicated.
pub(crate) fn hull_of_sorted(pts: &[Point]) -> Vec<Point> {
    let n = pts.len();
    if n <= 1 {
        return pts.to_vec();
    }
    if n == 2 {
        return pts.to_vec();
    }
    let mut lower: Vec<Point> = Vec::with_capacity(n);
    for p in pts {
        while lower.len() >= 2
            && orient_sign(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Point> = Vec::with_capacity(n);
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient_sign(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(*p);
    }
    // Collinear input: both chains collapse to the two extremes.
    if lower.len() == 2 && upper.len() == 2 {
        return lower;
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Tightest strip of orientation `theta` containing `points`.
pub fn width_at(points: &[Point], theta: Orientation) -> Result<Strip, Error> {
    Strip::tight(theta, points).ok_or_else(|| Error::domain("width_at of an empty set"))
}

/// Minimum enclosing strip width over all orientations, and the smallest
/// orientation attaining it. Computed by rotating calipers on the hull.
pub fn min_width(points: &[Point]) -> Result<(f64, Orientation), Error> {
    if points.is_empty() {
        return Err(Error::domain("min_width of an empty set"));
    }
    let hull = convex_hull_trusted(points);
    Ok(min_width_hull(hull.vertices()))
}

/// Rotating calipers over a strictly convex CCW vertex list.
pub(crate) fn min_width_hull(hull: &[Point]) -> (f64, Orientation) {
    let h = hull.len();
    if h <= 1 {
        return (0.0, Orientation::new(0.0));
    }
    if h == 2 {
        let d = hull[1].sub(&hull[0]);
        return (0.0, Orientation::new(d.y.atan2(d.x)));
    }
    let mut best_w = f64::INFINITY;
    let mut best_theta = Orientation::new(0.0);
    let mut far = 1usize;
    for i in 0..h {
        let a = hull[i];
        let b = hull[(i + 1) % h];
        let e = b.sub(&a);
        let len = e.norm();
        if len == 0.0 {
            continue;
        }
        // Advance the antipodal vertex while the distance to edge i grows.
        loop {
            let next = (far + 1) % h;
            let d_cur = e.cross(&hull[far].sub(&a));
            let d_next = e.cross(&hull[next].sub(&a));
            if d_next > d_cur {
                far = next;
            } else {
                break;
            }
        }
        let w = e.cross(&hull[far].sub(&a)) / len;
        let theta = Orientation::new(e.y.atan2(e.x));
        if w < best_w - eps() * (1f64.max(best_w)) {
            best_w = w;
            best_theta = theta;
        } else if (w - best_w).abs() <= eps() * (1f64.max(best_w))
            && theta.radians() < best_theta.radians()
        {
            best_theta = theta;
        }
    }
    (best_w.max(0.0), best_theta)
}

/// Distance between two convex polygons: zero when they intersect,
/// otherwise the minimum over vertex-to-edge feature pairs.
pub fn hull_distance(h1: &ConvexPolygon, h2: &ConvexPolygon) -> f64 {
    if h1.is_empty() || h2.is_empty() {
        return f64::INFINITY;
    }
    if hulls_intersect(h1, h2) {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for p in h1.vertices() {
        best = best.min(dist_point_hull(p, h2));
    }
    for p in h2.vertices() {
        best = best.min(dist_point_hull(p, h1));
    }
    best
}

fn dist_point_hull(p: &Point, hull: &ConvexPolygon) -> f64 {
    let vs = hull.vertices();
    match vs.len() {
        0 => f64::INFINITY,
        1 => p.dist(&vs[0]),
        _ => {
            let mut best = f64::INFINITY;
            for i in 0..vs.len() {
                let a = vs[i];
                let b = vs[(i + 1) % vs.len()];
                if vs.len() == 2 && i == 1 {
                    break;
                }
                best = best.min(dist_point_segment(p, &a, &b));
            }
            best
        }
    }
}

fn dist_point_segment(p: &Point, a: &Point, b: &Point) -> f64 {
    let ab = b.sub(a);
    let len2 = ab.dot(&ab);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(&ab) / len2).clamp(0.0, 1.0);
    p.dist(&a.add(&ab.scale(t)))
}

/// Separating-axis test over the edges of both polygons.
fn hulls_intersect(h1: &ConvexPolygon, h2: &ConvexPolygon) -> bool {
    !has_separating_axis(h1, h2) && !has_separating_axis(h2, h1)
        && !(h1.len() <= 2 && h2.len() <= 2 && segments_disjoint(h1, h2))
}

fn has_separating_axis(ha: &ConvexPolygon, hb: &ConvexPolygon) -> bool {
    let va = ha.vertices();
    let axes: Vec<Point> = match va.len() {
        0 => return true,
        1 => {
            // A point has no edges; fall back to testing the segment axes of b
            // through the point below.
            Vec::new()
        }
        2 => {
            let e = va[1].sub(&va[0]);
            vec![Point::new(-e.y, e.x), e]
        }
        _ => (0..va.len())
            .map(|i| {
                let e = va[(i + 1) % va.len()].sub(&va[i]);
                Point::new(-e.y, e.x)
            })
            .collect(),
    };
    for axis in &axes {
        if axis_separates(axis, ha, hb) {
            return true;
        }
    }
    if va.len() == 1 && !hb.is_empty() {
        // Degenerate: separate a point from b by the supporting direction.
        return !hb.contains(&va[0]);
    }
    false
}

fn axis_separates(axis: &Point, ha: &ConvexPolygon, hb: &ConvexPolygon) -> bool {
    let range = |h: &ConvexPolygon| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in h.vertices() {
            let c = v.dot(axis);
            lo = lo.min(c);
            hi = hi.max(c);
        }
        (lo, hi)
    };
    let (a_lo, a_hi) = range(ha);
    let (b_lo, b_hi) = range(hb);
    let scale = 1f64
        .max(a_lo.abs())
        .max(a_hi.abs())
        .max(b_lo.abs())
        .max(b_hi.abs());
    a_hi < b_lo - eps() * scale || b_hi < a_lo - eps() * scale
}

fn segments_disjoint(h1: &ConvexPolygon, h2: &ConvexPolygon) -> bool {
    // Conservative: both degenerate, rely on distance.
    let mut best = f64::INFINITY;
    for p in h1.vertices() {
        best = best.min(dist_point_hull(p, h2));
    }
    for p in h2.vertices() {
        best = best.min(dist_point_hull(p, h1));
    }
    best > 0.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(f64, f64)]) -> Vec<Point> {
        coords.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn hull_of_square_is_ccw() {
        let h = convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap();
        assert_eq!(h.len(), 4);
        // CCW: every consecutive triple turns left.
        let v = h.vertices();
        for i in 0..4 {
            assert_eq!(orient_sign(&v[i], &v[(i + 1) % 4], &v[(i + 2) % 4]), 1);
        }
    }

    #[test]
    fn hull_collapses_collinear() {
        let h = convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.vertices()[0], Point::new(0.0, 0.0));
        assert_eq!(h.vertices()[1], Point::new(2.0, 0.0));
    }

    #[test]
    fn hull_of_empty_and_singleton() {
        assert!(convex_hull(&[]).unwrap().is_empty());
        assert_eq!(convex_hull(&pts(&[(3.0, 4.0)])).unwrap().len(), 1);
    }

    #[test]
    fn hull_rejects_non_finite() {
        assert!(convex_hull(&[Point::new(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn width_of_unit_square() {
        let square = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let s = width_at(&square, Orientation::new(0.0)).unwrap();
        assert!((s.width() - 1.0).abs() < 1e-12);
        let d = width_at(&square, Orientation::new(std::f64::consts::FRAC_PI_4)).unwrap();
        assert!((d.width() - 2f64.sqrt()).abs() < 1e-12);
        let (w, _) = min_width(&square).unwrap();
        assert!((w - 1.0).abs() < 1e-12);
    }

    #[test]
    fn width_zero_along_segment() {
        let seg = pts(&[(0.0, 0.0), (3.0, 4.0)]);
        let theta = Orientation::new(4f64.atan2(3.0));
        let s = width_at(&seg, theta).unwrap();
        assert!(s.width().abs() < 1e-12);
        let (w, t) = min_width(&seg).unwrap();
        assert_eq!(w, 0.0);
        assert!(t.approx_eq(&theta));
    }

    #[test]
    fn min_width_of_two_or_fewer_points_is_zero() {
        assert_eq!(min_width(&pts(&[(5.0, 5.0)])).unwrap().0, 0.0);
        assert_eq!(min_width(&pts(&[(0.0, 0.0), (2.0, 1.0)])).unwrap().0, 0.0);
    }

    #[test]
    fn hull_distance_basics() {
        let a = convex_hull(&pts(&[(0.0, 0.0)])).unwrap();
        let b = convex_hull(&pts(&[(0.0, 5.0)])).unwrap();
        assert!((hull_distance(&a, &b) - 5.0).abs() < 1e-12);

        let sq1 = convex_hull(&pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])).unwrap();
        let sq2 = convex_hull(&pts(&[(3.0, 0.0), (4.0, 0.0), (4.0, 1.0), (3.0, 1.0)])).unwrap();
        assert!((hull_distance(&sq1, &sq2) - 2.0).abs() < 1e-12);

        let overlapping =
            convex_hull(&pts(&[(0.5, 0.5), (2.0, 0.5), (2.0, 2.0), (0.5, 2.0)])).unwrap();
        assert_eq!(hull_distance(&sq1, &overlapping), 0.0);
    }
}
