//! Exact solvers for orientation-constrained two-line center problems.
//!
//! Given planar points, find two strips (pairs of parallel lines) covering
//! them while minimizing the larger strip width, under one of three
//! orientation constraints:
//!
//! * [`two_fixed`] — both strip orientations are given,
//! * [`one_fixed`] — one strip orientation is given, the other is free,
//! * [`fixed_angle`] — the angle between the two strips is given.
//!
//! Each solver comes with an independent brute-force counterpart in
//! [`oracle`], used for verification. [`geom`] holds the shared planar
//! primitives, [`dyn_width`] the incremental width structures the sweeps
//! consume, and [`io`] instance parsing, generation and rendering.

pub mod dyn_width;
pub mod error;
pub mod fixed_angle;
pub mod geom;
pub mod io;
pub mod one_fixed;
pub mod oracle;
pub mod solution;
pub mod two_fixed;

pub use error::Error;
pub use geom::{ConvexPolygon, Direction, Orientation, Point, Strip};
pub use solution::{BracketInterval, Counters, DecisionOutcome, Solution, TwoStrip};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
