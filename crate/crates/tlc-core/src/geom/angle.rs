//! Orientations (angles mod pi) and directions (angles mod 2*pi).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::point::Vec2;
use super::tol::eps;

const TWO_PI: f64 = 2.0 * PI;

/// Orientation of a line or strip: an angle in `[0, pi)`, with `theta` and
/// `theta + pi` identified.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Orientation(f64);

impl Orientation {
    pub fn new(theta: f64) -> Self {
        assert!(theta.is_finite(), "orientation must be finite");
        let mut t = theta.rem_euclid(PI);
        // rem_euclid can return exactly pi after rounding of tiny negatives.
        if t >= PI {
            t -= PI;
        }
        Orientation(t)
    }

    #[inline]
    pub fn radians(&self) -> f64 {
        self.0
    }

    /// Line direction unit vector `(cos t, sin t)`.
    #[inline]
    pub fn dir(&self) -> Vec2 {
        Vec2::new(self.0.cos(), self.0.sin())
    }

    /// Unit normal `(-sin t, cos t)`; projections onto it measure offsets
    /// across a strip of this orientation.
    #[inline]
    pub fn normal(&self) -> Vec2 {
        Vec2::new(-self.0.sin(), self.0.cos())
    }

    /// Equality mod pi with the global tolerance (handles the wrap at pi).
    pub fn approx_eq(&self, other: &Orientation) -> bool {
        let d = (self.0 - other.0).abs();
        d <= eps() * PI || (PI - d) <= eps() * PI
    }
}

/// Direction for rotational sweeps: an angle in `[0, 2*pi)`. Reducing mod pi
/// recovers the orientation of the swept line.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Direction(f64);

impl Direction {
    pub fn new(phi: f64) -> Self {
        assert!(phi.is_finite(), "direction must be finite");
        let mut p = phi.rem_euclid(TWO_PI);
        if p >= TWO_PI {
            p -= TWO_PI;
        }
        Direction(p)
    }

    #[inline]
    pub fn radians(&self) -> f64 {
        self.0
    }

    #[inline]
    pub fn orientation(&self) -> Orientation {
        Orientation::new(self.0)
    }
}

impl From<Direction> for Orientation {
    fn from(d: Direction) -> Self {
        d.orientation()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_normalizes_mod_pi() {
        assert!(Orientation::new(PI + 0.25).approx_eq(&Orientation::new(0.25)));
        assert!(Orientation::new(-0.25).approx_eq(&Orientation::new(PI - 0.25)));
        assert!(Orientation::new(0.0).approx_eq(&Orientation::new(PI - 1e-12)));
        assert!(!Orientation::new(0.3).approx_eq(&Orientation::new(0.4)));
    }

    #[test]
    fn direction_reduces_to_orientation() {
        let d = Direction::new(4.0);
        assert!(d.orientation().approx_eq(&Orientation::new(4.0 - PI)));
    }
}
