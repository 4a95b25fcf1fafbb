//! Deterministic test-signal and random-input generators.
//!
//! Probes and the certification suite draw every random input from a seeded
//! ChaCha stream, with per-trial substreams, so reports are reproducible.

use crate::grid::{l2_norm, l2_norm2, Grid, PhaseField, Signal};
use crate::transforms::inverse_fourier;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::PI;

/// RNG for (seed, stream); distinct streams are independent.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn normal(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// The standard Gaussian 2^{1/4} e^{-πx²}, unit L²(ℝ) mass.
pub fn gaussian0(grid: Grid) -> Signal {
    Signal::from_fn(grid, |x| {
        Complex64::new(2f64.powf(0.25) * (-PI * x * x).exp(), 0.0)
    })
}

/// Gaussian window normalized to unit norm on the grid.
pub fn gaussian_window(grid: Grid) -> Signal {
    let g = gaussian0(grid);
    let n = l2_norm(&g);
    g.scaled(Complex64::new(1.0 / n, 0.0))
}

/// First Hermite function x·e^{-πx²} (normalized); orthogonal to gaussian0.
pub fn hermite1(grid: Grid) -> Signal {
    let s = Signal::from_fn(grid, |x| Complex64::new(x * (-PI * x * x).exp(), 0.0));
    let n = l2_norm(&s);
    s.scaled(Complex64::new(1.0 / n, 0.0))
}

/// NLSE soliton profile √2·sech(x).
pub fn soliton(grid: Grid) -> Signal {
    Signal::from_fn(grid, |x| {
        Complex64::new(2f64.sqrt() / x.cosh(), 0.0)
    })
}

/// Two separated Gaussian bumps (a non-Gaussian state with Wigner negativity).
pub fn two_bump(grid: Grid) -> Signal {
    let a = 2.0;
    let s = Signal::from_fn(grid, |x| {
        Complex64::new(
            (-PI * (x - a) * (x - a)).exp() + (-PI * (x + a) * (x + a)).exp(),
            0.0,
        )
    });
    let n = l2_norm(&s);
    s.scaled(Complex64::new(1.0 / n, 0.0))
}

/// Random band-limited, decaying, unit-norm signal.
///
/// Gaussian spectral coefficients inside a third of the Nyquist band followed
/// by a spatial Gaussian envelope, so both the signal and its transform decay
/// well inside the grid.
pub fn random_signal(grid: Grid, rng: &mut impl Rng) -> Signal {
    let n = grid.n();
    let om_cut = grid.d_omega() * n as f64 / 6.0;
    let mut spec = Signal::zeros(grid.dual());
    for k in 0..n {
        let om = grid.omega(k);
        let env = (-(om / om_cut) * (om / om_cut)).exp();
        spec.values_mut()[k] = Complex64::new(normal(rng), normal(rng)) * env;
    }
    let s = inverse_fourier(&spec);
    let x_cut = grid.length() / 6.0;
    let s = s.map(|x, v| v * (-(x / x_cut) * (x / x_cut)).exp());
    let norm = l2_norm(&s);
    if norm == 0.0 {
        return gaussian0(grid);
    }
    s.scaled(Complex64::new(1.0 / norm, 0.0))
}

/// Random decaying unit-norm phase-space field (generically not an STFT range
/// element).
pub fn random_field(grid: Grid, rng: &mut impl Rng) -> PhaseField {
    let x_cut = grid.length() / 6.0;
    let om_cut = grid.d_omega() * grid.n() as f64 / 6.0;
    let n = grid.n();
    let mut f = PhaseField::zeros(grid);
    for m in 0..n {
        let x = grid.x(m);
        for k in 0..n {
            let om = grid.omega(k);
            let env = (-(x / x_cut) * (x / x_cut) - (om / om_cut) * (om / om_cut)).exp();
            f.set(m, k, Complex64::new(normal(rng), normal(rng)) * env);
        }
    }
    let norm = l2_norm2(&f);
    f.scaled(Complex64::new(1.0 / norm, 0.0))
}
