//! Points and vectors.

use serde::{Deserialize, Serialize};

use super::tol::eps;
use crate::error::Error;

/// Coordinates are accepted up to this magnitude; beyond it the double
/// precision predicate tolerances are no longer meaningful.
pub const MAX_COORD: f64 = 1e6;

/// A planar point (also used as a free vector where convenient).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Alias used where a value is a displacement rather than a location.
pub type Vec2 = Point;

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_valid(&self) -> bool {
        self.x.is_finite()
            && self.y.is_finite()
            && self.x.abs() <= MAX_COORD
            && self.y.abs() <= MAX_COORD
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !self.x.is_finite() || !self.y.is_finite() {
            return Err(Error::input(format!(
                "non-finite coordinate ({}, {})",
                self.x, self.y
            )));
        }
        if self.x.abs() > MAX_COORD || self.y.abs() > MAX_COORD {
            return Err(Error::input(format!(
                "coordinate magnitude exceeds {MAX_COORD}: ({}, {})",
                self.x, self.y
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn sub(&self, other: &Point) -> Vec2 {
        Point::new(self.x - other.x, self.y - other.y)
    }

    #[inline]
    pub fn add(&self, other: &Vec2) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }

    #[inline]
    pub fn scale(&self, k: f64) -> Vec2 {
        Point::new(self.x * k, self.y * k)
    }

    #[inline]
    pub fn dot(&self, other: &Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(&self, other: &Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.sub(other).norm()
    }
}

/// Twice the signed area of triangle `abc`; positive when `c` lies to the
/// left of the directed line `a -> b`.
#[inline]
pub fn orient(a: &Point, b: &Point, c: &Point) -> f64 {
    let u = b.sub(a);
    let v = c.sub(a);
    u.cross(&v)
}

/// Sign of `orient` with a tolerance scaled to the magnitudes involved:
/// `1` left turn, `-1` right turn, `0` collinear within tolerance.
#[inline]
pub fn orient_sign(a: &Point, b: &Point, c: &Point) -> i8 {
    let u = b.sub(a);
    let v = c.sub(a);
    let det = u.x * v.y - u.y * v.x;
    let mag = (u.x * v.y).abs() + (u.y * v.x).abs();
    if det.abs() <= eps() * mag.max(1e-300) {
        0
    } else if det > 0.0 {
        1
    } else {
        -1
    }
}
