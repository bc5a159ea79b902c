//! Planar primitives shared by every solver: hulls, directional width,
//! orientation-constrained width, tangents, dominance, and the sinusoidal
//! width algebra of point pairs.

mod angle;
mod hull;
mod minmax;
mod point;
mod sigma;
mod sinusoid;
mod strip;
mod tangent;
mod tol;
mod validate;

pub use angle::{Direction, Orientation};
pub use hull::{convex_hull, hull_distance, min_width, width_at, ConvexPolygon};
pub use minmax::{min_max_width, min_oriented_width_in_range};
pub use point::{Point, Vec2, MAX_COORD};
pub use sigma::{constrained_hull, dominates, strip_corners, Dominance};
pub use sinusoid::{solve_sin_crossing, SinForm, SinusoidalPiece};
pub use strip::Strip;
pub use tangent::outer_common_tangents;
pub use tol::{approx_le, close, eps, set_eps};
pub use validate::{check_general_position, jitter, validate_points};

/// Shorthand for `width_at` on a raw point slice, returning only the width.
pub fn width_value_at(points: &[Point], theta: Orientation) -> f64 {
    match width_at(points, theta) {
        Ok(s) => s.width(),
        Err(_) => 0.0,
    }
}
