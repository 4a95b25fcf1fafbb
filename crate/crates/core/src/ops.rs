//! Elementary operators: translation, modulation, dilation, reflection,
//! involution, 2-D shifts, the Z_ξ flip, and chirp multipliers.
//!
//! Translations are restricted to the lattice so every stated identity holds
//! to roundoff; modulations accept any real frequency.

use crate::error::{Error, Result};
use crate::grid::{oversample2, PhaseField, Signal};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Lattice-aligned phase-plane shift (u in position, η in frequency).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Shift2D {
    pub u: f64,
    pub eta: f64,
}

/// (T_a f)(x) = f(x - a), periodic wrap; a must be a lattice multiple of dx.
pub fn translate(s: &Signal, a: f64) -> Result<Signal> {
    let g = s.grid();
    let r = g.lattice_steps(a, g.dx())?;
    let n = g.n();
    let values = (0..n)
        .map(|j| s.values()[g.wrap(j as i64 - r)])
        .collect();
    Signal::new(g, values)
}

/// (M_b f)(x) = e^{2πi b x} f(x); any real b.
pub fn modulate(s: &Signal, b: f64) -> Signal {
    s.map(|x, v| v * Complex64::from_polar(1.0, 2.0 * PI * b * x))
}

/// Unitary dyadic dilation: (D_t f)(x) = t^{-1/2} f(x/t) for t = 2 or 1/2.
///
/// D_2 reads the trigonometric interpolant at half nodes; D_{1/2} reads the
/// periodic extension at doubled arguments.
pub fn dilate(s: &Signal, t: f64) -> Result<Signal> {
    let g = s.grid();
    let n = g.n();
    if (t - 2.0).abs() < 1e-12 {
        let fine = oversample2(s);
        let inv_sqrt2 = 0.5f64.sqrt();
        // x_j/2 is the fine node with index j + n/2
        let values = (0..n)
            .map(|j| fine.values()[j + n / 2] * inv_sqrt2)
            .collect();
        Signal::new(g, values)
    } else if (t - 0.5).abs() < 1e-12 {
        let sqrt2 = 2f64.sqrt();
        // 2·x_j is the original node with index 2j - n/2, wrapped
        let values = (0..n)
            .map(|j| s.values()[g.wrap(2 * j as i64 - n as i64 / 2)] * sqrt2)
            .collect();
        Signal::new(g, values)
    } else {
        Err(Error::UnsupportedDilation { factor: t })
    }
}

/// (ℐf)(x) = f(-x): index map j ↦ (n - j) mod n.
pub fn reflect(s: &Signal) -> Signal {
    let g = s.grid();
    let n = g.n();
    let values = (0..n).map(|j| s.values()[(n - j) % n]).collect();
    Signal::new(g, values).expect("same length")
}

/// f†(x) = conj(f(-x)).
pub fn involution_dagger(s: &Signal) -> Signal {
    conjugate(&reflect(s))
}

/// Pointwise complex conjugate.
pub fn conjugate(s: &Signal) -> Signal {
    s.map(|_, v| v.conj())
}

/// (T_{(u,η)} F)(x, ω) = F(x-u, ω-η), periodic; lattice-aligned shifts only.
pub fn shift2(f: &PhaseField, sh: Shift2D) -> Result<PhaseField> {
    let g = f.grid();
    let ru = g.lattice_steps(sh.u, g.dx())?;
    let re = g.lattice_steps(sh.eta, g.d_omega())?;
    let n = g.n();
    let mut out = PhaseField::zeros(g);
    for m in 0..n {
        let ms = g.wrap(m as i64 - ru);
        for k in 0..n {
            let ks = g.wrap(k as i64 - re);
            out.set(m, k, f.get(ms, ks));
        }
    }
    Ok(out)
}

/// (M_{(η,u)} F)(x, ω) = e^{2πi (x·η + ω·u)} F(x, ω).
pub fn mod2(f: &PhaseField, sh: Shift2D) -> PhaseField {
    f.map(|x, w, v| v * Complex64::from_polar(1.0, 2.0 * PI * (x * sh.eta + w * sh.u)))
}

/// (Z_ξ F)(x, ω) = F(x, ξ-ω); ξ lattice-aligned in ω.
pub fn z_xi(f: &PhaseField, xi: f64) -> Result<PhaseField> {
    let g = f.grid();
    let rx = g.lattice_steps(xi, g.d_omega())?;
    let n = g.n();
    let mut out = PhaseField::zeros(g);
    for m in 0..n {
        for k in 0..n {
            // ω-index of ξ - ω_k is rx - k + n, wrapped
            let ks = g.wrap(rx - k as i64 + n as i64);
            out.set(m, k, f.get(m, ks));
        }
    }
    Ok(out)
}

/// Involution F*(x, ω) = conj(F(x, -ω)).
pub fn star(f: &PhaseField) -> PhaseField {
    let flipped = z_xi(f, 0.0).expect("ξ=0 is always lattice-aligned");
    PhaseField::new(
        flipped.grid(),
        flipped.values().iter().map(|v| v.conj()).collect(),
    )
    .expect("same length")
}

/// Multiply pointwise by e^{iπ c x ω}.
pub fn chirp(f: &PhaseField, c: f64) -> PhaseField {
    f.map(|x, w, v| v * Complex64::from_polar(1.0, PI * c * x * w))
}
