//! Fourier transform, STFT with adjoint and inversion, cross-Wigner, Wigner,
//! wave-packet, cross-ambiguity, and Grossmann-Royer transforms.
//!
//! Conventions: f̂(ω) = ∫ f(x) e^{-2πi x ω} dx, STFT
//! V_g f(x, ω) = ∫ f(t) conj(g(t-x)) e^{-2πi ω t} dt, cross-Wigner
//! W(f,g)(x, ω) = ∫ f(x+y/2) conj(g(x-y/2)) e^{-2πi ω y} dy, wave-packet
//! W_g f(x, ω) = 2^{-1} W(f,g)(x/2, ω/2) = e^{iπxω} V_{ℐg} f(x, ω).
//!
//! Half-shifted arguments are read from the factor-2 trigonometric
//! oversampling of the inputs, so all integrands stay on a lattice and every
//! transform is a circular quadrature.

use crate::error::{Error, Result};
use crate::fft::{centered_forward, centered_inverse};
use crate::grid::{l2_norm, oversample2, PhaseField, Signal};
use crate::ops::{chirp, reflect};
use num_complex::Complex64;
use std::f64::consts::PI;

/// f̂ on the dual grid: f̂(ω_k) = dx·Σ_j f(x_j) e^{-2πi ω_k x_j}.
pub fn fourier(s: &Signal) -> Signal {
    let g = s.grid();
    let mut buf = s.values().to_vec();
    centered_forward(&mut buf, g.dx());
    Signal::new(g.dual(), buf).expect("same length")
}

/// Inverse transform back from the dual grid; inverse_fourier∘fourier = id.
pub fn inverse_fourier(s: &Signal) -> Signal {
    let g = s.grid();
    let mut buf = s.values().to_vec();
    centered_inverse(&mut buf, g.dx());
    Signal::new(g.dual(), buf).expect("same length")
}

/// Spectral derivative f' = inverse_fourier(2πiω · f̂).
pub fn spectral_derivative(s: &Signal) -> Signal {
    let mut hat = fourier(s);
    let dual = hat.grid();
    for (k, v) in hat.values_mut().iter_mut().enumerate() {
        *v *= Complex64::new(0.0, 2.0 * PI * dual.x(k));
    }
    inverse_fourier(&hat)
}

/// STFT by FFT over t for each lattice shift; O(n² log n).
pub fn stft(f: &Signal, g: &Signal) -> Result<PhaseField> {
    f.check_same_grid(g)?;
    if l2_norm(g) == 0.0 {
        return Err(Error::ZeroWindow);
    }
    let grid = f.grid();
    let n = grid.n();
    let half = (n / 2) as i64;
    let mut out = PhaseField::zeros(grid);
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for m in 0..n {
        for (j, b) in buf.iter_mut().enumerate() {
            let gi = grid.wrap(j as i64 - m as i64 + half);
            *b = f.values()[j] * g.values()[gi].conj();
        }
        centered_forward(&mut buf, grid.dx());
        out.row_mut(m).copy_from_slice(&buf);
    }
    Ok(out)
}

/// Definition quadrature for the STFT; the O(n³) oracle for [`stft`].
pub fn stft_direct(f: &Signal, g: &Signal) -> Result<PhaseField> {
    f.check_same_grid(g)?;
    if l2_norm(g) == 0.0 {
        return Err(Error::ZeroWindow);
    }
    let grid = f.grid();
    let n = grid.n();
    let half = (n / 2) as i64;
    let mut out = PhaseField::zeros(grid);
    for m in 0..n {
        for k in 0..n {
            let w = grid.omega(k);
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let gi = grid.wrap(j as i64 - m as i64 + half);
                acc += f.values()[j]
                    * g.values()[gi].conj()
                    * Complex64::from_polar(1.0, -2.0 * PI * w * grid.x(j));
            }
            out.set(m, k, acc * grid.dx());
        }
    }
    Ok(out)
}

/// Adjoint of the STFT: V_φ* F = ∬ F(x,ω) M_ω T_x φ dx dω.
pub fn stft_adjoint(field: &PhaseField, phi: &Signal) -> Result<Signal> {
    let grid = field.grid();
    if grid != phi.grid() {
        return Err(Error::GridMismatch {
            expected: grid.n(),
            got: phi.grid().n(),
        });
    }
    let n = grid.n();
    let half = (n / 2) as i64;
    // B[m][j] = dω Σ_k F[m,k] e^{2πi ω_k x_j}
    let mut b = Vec::with_capacity(n);
    for m in 0..n {
        let mut row = field.row(m).to_vec();
        centered_inverse(&mut row, grid.d_omega());
        b.push(row);
    }
    let mut out = Signal::zeros(grid);
    for j in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, bm) in b.iter().enumerate() {
            let pi_idx = grid.wrap(j as i64 - m as i64 + half);
            acc += phi.values()[pi_idx] * bm[j];
        }
        out.values_mut()[j] = acc * grid.dx();
    }
    Ok(out)
}

/// ⟨φ,g⟩⁻¹ V_φ* F; recovers f from F = V_g f when the windows overlap.
pub fn stft_invert(field: &PhaseField, phi: &Signal, g: &Signal) -> Result<Signal> {
    let ip = phi.inner(g);
    if ip.norm() <= 1e-9 * l2_norm(phi) * l2_norm(g) {
        return Err(Error::OrthogonalWindows);
    }
    let adj = stft_adjoint(field, phi)?;
    Ok(adj.scaled(Complex64::new(1.0, 0.0) / ip))
}

fn wrap2n(i: i64, two_n: usize) -> usize {
    i.rem_euclid(two_n as i64) as usize
}

/// Cross-Wigner transform on the n×n grid.
///
/// The half-shifted integrand is read from the oversampled inputs; the y-sum
/// over one 2L-period folds exactly onto an n-point transform because the
/// frequencies ω_k have period L.
pub fn cross_wigner(f: &Signal, g: &Signal) -> Result<PhaseField> {
    f.check_same_grid(g)?;
    let grid = f.grid();
    let n = grid.n();
    let two_n = 2 * n;
    let ff = oversample2(f);
    let gf = oversample2(g);
    let mut out = PhaseField::zeros(grid);
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    let half = (n / 2) as i64;
    for m in 0..n {
        let base = 2 * m as i64;
        for (lp, b) in buf.iter_mut().enumerate() {
            // contributions with y = (l'-n/2)dx and its 2L-periodic partner
            let l1 = lp as i64 + half;
            let i1 = wrap2n(base + l1 - n as i64, two_n);
            let i1c = wrap2n(base - l1 + n as i64, two_n);
            let l2 = l1 + n as i64;
            let i2 = wrap2n(base + l2 - n as i64, two_n);
            let i2c = wrap2n(base - l2 + n as i64, two_n);
            *b = ff.values()[i1] * gf.values()[i1c].conj()
                + ff.values()[i2] * gf.values()[i2c].conj();
        }
        centered_forward(&mut buf, grid.dx());
        out.row_mut(m).copy_from_slice(&buf);
    }
    Ok(out)
}

/// Literal quadrature of the cross-Wigner integral; O(n³) oracle.
pub fn cross_wigner_direct(f: &Signal, g: &Signal) -> Result<PhaseField> {
    f.check_same_grid(g)?;
    let grid = f.grid();
    let n = grid.n();
    let two_n = 2 * n;
    let ff = oversample2(f);
    let gf = oversample2(g);
    let mut out = PhaseField::zeros(grid);
    for m in 0..n {
        for k in 0..n {
            let w = grid.omega(k);
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..two_n {
                let y = (l as f64 - n as f64) * grid.dx();
                let i = wrap2n(2 * m as i64 + l as i64 - n as i64, two_n);
                let ic = wrap2n(2 * m as i64 - l as i64 + n as i64, two_n);
                acc += ff.values()[i]
                    * gf.values()[ic].conj()
                    * Complex64::from_polar(1.0, -2.0 * PI * w * y);
            }
            out.set(m, k, acc * grid.dx());
        }
    }
    Ok(out)
}

/// Wigner transform Wf = W(f,f); real by construction up to roundoff.
///
/// Errors with NonHermitianResidue when the imaginary residue exceeds 1e-6,
/// which signals a grid too coarse for the signal.
pub fn wigner(f: &Signal) -> Result<PhaseField> {
    let w = cross_wigner(f, f)?;
    let max_re = w.values().iter().map(|v| v.re.abs()).fold(0.0, f64::max);
    let max_im = w.values().iter().map(|v| v.im.abs()).fold(0.0, f64::max);
    if max_re > 0.0 && max_im > 1e-6 * max_re {
        return Err(Error::NonHermitianResidue {
            residue: max_im / max_re,
        });
    }
    Ok(PhaseField::new(
        w.grid(),
        w.values().iter().map(|v| Complex64::new(v.re, 0.0)).collect(),
    )
    .expect("same length"))
}

/// Wave-packet transform W_g f = e^{iπxω} V_{ℐg} f.
pub fn wavepacket(f: &Signal, g: &Signal) -> Result<PhaseField> {
    Ok(chirp(&stft(f, &reflect(g))?, 1.0))
}

/// Wave-packet transform evaluated as 2^{-1} W(f,g)(x/2, ω/2) on the
/// oversampled lattice; agrees with [`wavepacket`] to roundoff.
pub fn wavepacket_via_wigner(f: &Signal, g: &Signal) -> Result<PhaseField> {
    f.check_same_grid(g)?;
    let grid = f.grid();
    let n = grid.n();
    let two_n = 2 * n;
    let ff = oversample2(f);
    let gf = oversample2(g);
    let mut out = PhaseField::zeros(grid);
    let mut buf = vec![Complex64::new(0.0, 0.0); two_n];
    for m in 0..n {
        // x_m/2 is the fine node with index m + n/2
        let i0 = m as i64 + (n / 2) as i64;
        for (l, b) in buf.iter_mut().enumerate() {
            let i = wrap2n(i0 + l as i64 - n as i64, two_n);
            let ic = wrap2n(i0 - l as i64 + n as i64, two_n);
            *b = ff.values()[i] * gf.values()[ic].conj();
        }
        centered_forward(&mut buf, grid.dx());
        // ω_k/2 is the fine dual node with index k + n/2
        for k in 0..n {
            out.set(m, k, 0.5 * buf[k + n / 2]);
        }
    }
    Ok(out)
}

/// Cross-ambiguity A(f,g)(x, ω) = ∫ e^{-2πiωt} f(t+x/2) conj(g(t-x/2)) dt.
pub fn ambiguity(f: &Signal, g: &Signal) -> Result<PhaseField> {
    f.check_same_grid(g)?;
    let grid = f.grid();
    let n = grid.n();
    let two_n = 2 * n;
    let ff = oversample2(f);
    let gf = oversample2(g);
    let mut out = PhaseField::zeros(grid);
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    let half = (n / 2) as i64;
    for m in 0..n {
        for (j, b) in buf.iter_mut().enumerate() {
            let i = wrap2n(2 * j as i64 + m as i64 - half, two_n);
            let ic = wrap2n(2 * j as i64 - m as i64 + half, two_n);
            *b = ff.values()[i] * gf.values()[ic].conj();
        }
        centered_forward(&mut buf, grid.dx());
        out.row_mut(m).copy_from_slice(&buf);
    }
    Ok(out)
}

/// Symplectic Fourier transform F_σG(x,ω) = ∬ G(x',ω') e^{-2πi(ωx' - xω')}.
///
/// Satisfies W(f,g) = F_σ A(f,g).
pub fn symplectic_fourier(field: &PhaseField) -> PhaseField {
    let grid = field.grid();
    let n = grid.n();
    // forward over x' (columns), then inverse over ω' (rows)
    let mut mid = vec![Complex64::new(0.0, 0.0); n * n]; // mid[k*n + k']
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for kp in 0..n {
        for m in 0..n {
            col[m] = field.get(m, kp);
        }
        centered_forward(&mut col, grid.dx());
        for k in 0..n {
            mid[k * n + kp] = col[k];
        }
    }
    let mut out = PhaseField::zeros(grid);
    let mut row = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n {
        row.copy_from_slice(&mid[k * n..(k + 1) * n]);
        centered_inverse(&mut row, grid.d_omega());
        for m in 0..n {
            out.set(m, k, row[m]);
        }
    }
    out
}

/// Grossmann-Royer transform R_g f = 2^{-1} W(f,g).
pub fn grossmann_royer(f: &Signal, g: &Signal) -> Result<PhaseField> {
    Ok(cross_wigner(f, g)?.scaled(Complex64::new(0.5, 0.0)))
}

/// Spectral ∂/∂x of a phase-space field (along the x axis, per ω column).
pub fn deriv_x(field: &PhaseField, order: u32) -> PhaseField {
    let grid = field.grid();
    let n = grid.n();
    let mut out = PhaseField::zeros(grid);
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n {
        for m in 0..n {
            col[m] = field.get(m, k);
        }
        centered_forward(&mut col, grid.dx());
        for (i, v) in col.iter_mut().enumerate() {
            *v *= Complex64::new(0.0, 2.0 * PI * grid.omega(i)).powu(order);
        }
        centered_inverse(&mut col, grid.d_omega());
        for m in 0..n {
            out.set(m, k, col[m]);
        }
    }
    out
}

/// Spectral ∂/∂ω of a phase-space field (along the ω axis, per x row).
pub fn deriv_omega(field: &PhaseField, order: u32) -> PhaseField {
    let grid = field.grid();
    let n = grid.n();
    let mut out = PhaseField::zeros(grid);
    let mut row = vec![Complex64::new(0.0, 0.0); n];
    for m in 0..n {
        row.copy_from_slice(field.row(m));
        centered_forward(&mut row, grid.d_omega());
        for (i, v) in row.iter_mut().enumerate() {
            *v *= Complex64::new(0.0, 2.0 * PI * grid.x(i)).powu(order);
        }
        centered_inverse(&mut row, grid.dx());
        out.row_mut(m).copy_from_slice(&row);
    }
    out
}
