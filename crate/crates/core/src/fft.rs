//! Centered discrete Fourier transforms on zero-centered periodic grids.
//!
//! Samples live at x_j = (j - n/2)·s and dual nodes at ω_k = (k - n/2)/(n·s).
//! The forward transform is the rectangle-rule quadrature
//!
//!   F[k] = w · Σ_j v[j] e^{-2πi x_j ω_k},
//!
//! which reduces to a standard length-n FFT with (-1)^j / (-1)^k twiddles and
//! an overall sign (-1)^{n/2}. The twiddles are exact ±1 factors, so the
//! centered transform inherits FFT accuracy with no extra trigonometry.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::cell::RefCell;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn run_fft(buf: &mut [Complex64], forward: bool) {
    let plan = PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        if forward {
            p.plan_fft_forward(buf.len())
        } else {
            p.plan_fft_inverse(buf.len())
        }
    });
    plan.process(buf);
}

fn apply_twiddles(buf: &mut [Complex64], weight: f64, forward: bool) {
    let n = buf.len();
    debug_assert!(n % 2 == 0, "centered transforms need even length");
    for (j, v) in buf.iter_mut().enumerate() {
        if j % 2 == 1 {
            *v = -*v;
        }
    }
    run_fft(buf, forward);
    let half_sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
    for (k, v) in buf.iter_mut().enumerate() {
        let s = if k % 2 == 1 { -half_sign } else { half_sign };
        *v *= s * weight;
    }
}

/// In-place F[k] = weight · Σ_j v[j] e^{-2πi x_j ω_k}.
pub(crate) fn centered_forward(buf: &mut [Complex64], weight: f64) {
    apply_twiddles(buf, weight, true);
}

/// In-place f[j] = weight · Σ_k V[k] e^{+2πi x_j ω_k}.
pub(crate) fn centered_inverse(buf: &mut [Complex64], weight: f64) {
    apply_twiddles(buf, weight, false);
}
