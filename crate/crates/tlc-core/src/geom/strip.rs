//! Strips: closed regions between two parallel lines.

use serde::{Deserialize, Serialize};

use super::angle::Orientation;
use super::point::Point;
use super::tol::eps;

/// An oriented slab: points `p` with `lo <= <p, n(theta)> <= hi` where
/// `n(theta) = (-sin theta, cos theta)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Strip {
    pub theta: Orientation,
    pub lo: f64,
    pub hi: f64,
}

impl Strip {
    pub fn new(theta: Orientation, lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "strip offsets out of order: {lo} > {hi}");
        Strip { theta, lo, hi }
    }

    /// Degenerate strip collapsed onto a single line.
    pub fn line(theta: Orientation, offset: f64) -> Self {
        Strip {
            theta,
            lo: offset,
            hi: offset,
        }
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    #[inline]
    pub fn offset_of(&self, p: &Point) -> f64 {
        let n = self.theta.normal();
        p.dot(&n)
    }

    /// Containment within the global tolerance, scaled to the offsets.
    pub fn contains(&self, p: &Point) -> bool {
        let c = self.offset_of(p);
        let scale = 1f64.max(c.abs()).max(self.lo.abs()).max(self.hi.abs());
        c >= self.lo - eps() * scale && c <= self.hi + eps() * scale
    }

    /// Tightest strip of orientation `theta` containing all `points`.
    /// Returns `None` for an empty slice.
    pub fn tight(theta: Orientation, points: &[Point]) -> Option<Self> {
        let n = theta.normal();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in points {
            let c = p.dot(&n);
            lo = lo.min(c);
            hi = hi.max(c);
        }
        if points.is_empty() {
            None
        } else {
            Some(Strip { theta, lo, hi })
        }
    }
}
