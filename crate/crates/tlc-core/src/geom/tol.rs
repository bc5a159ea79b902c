//! Global comparison tolerance.
//!
//! All predicate comparisons in the crate go through a single absolute or
//! relative epsilon (default `1e-9`). The CLI may override it once at
//! startup via the `TLC_EPS` environment variable.

use std::sync::atomic::{AtomicU64, Ordering};

const DEFAULT_EPS: f64 = 1e-9;

static EPS_BITS: AtomicU64 = AtomicU64::new(0);

/// Current comparison tolerance.
#[inline]
pub fn eps() -> f64 {
    let bits = EPS_BITS.load(Ordering::Relaxed);
    if bits == 0 {
        DEFAULT_EPS
    } else {
        f64::from_bits(bits)
    }
}

/// Override the tolerance. Intended to be called once at process startup.
pub fn set_eps(value: f64) {
    assert!(value.is_finite() && value > 0.0, "eps must be positive");
    EPS_BITS.store(value.to_bits(), Ordering::Relaxed);
}

/// `a` and `b` are equal up to the global tolerance, relative to their size.
#[inline]
pub fn close(a: f64, b: f64) -> bool {
    let scale = 1f64.max(a.abs()).max(b.abs());
    (a - b).abs() <= eps() * scale
}

/// `a <= b` up to the global tolerance.
#[inline]
pub fn approx_le(a: f64, b: f64) -> bool {
    let scale = 1f64.max(a.abs()).max(b.abs());
    a <= b + eps() * scale
}
