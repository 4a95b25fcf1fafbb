//! Small residual/deviation helpers shared by tests, certification, and the
//! CLI reports.

use crate::grid::{l2_norm, l2_norm2, PhaseField, Signal};

/// ‖a−b‖ / ‖b‖ in L²; falls back to ‖a‖ when b vanishes.
pub fn rel_l2_signal(a: &Signal, b: &Signal) -> f64 {
    let diff = a.sub(b).expect("grids must match for comparison");
    let den = l2_norm(b);
    if den == 0.0 {
        l2_norm(&diff)
    } else {
        l2_norm(&diff) / den
    }
}

/// ‖A−B‖ / ‖B‖ in L² over the phase plane; ‖A‖ when B vanishes.
pub fn rel_l2_field(a: &PhaseField, b: &PhaseField) -> f64 {
    let diff = a.sub(b).expect("grids must match for comparison");
    let den = l2_norm2(b);
    if den == 0.0 {
        l2_norm2(&diff)
    } else {
        l2_norm2(&diff) / den
    }
}

/// max pointwise |A−B| normalized by max |B| (or raw when B vanishes).
pub fn sup_rel_field(a: &PhaseField, b: &PhaseField) -> f64 {
    let num = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    let den = b.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

/// Largest |value| over a field.
pub fn max_abs_field(a: &PhaseField) -> f64 {
    a.values().iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// Largest |value| over a signal.
pub fn max_abs_signal(a: &Signal) -> f64 {
    a.values().iter().map(|v| v.norm()).fold(0.0, f64::max)
}
