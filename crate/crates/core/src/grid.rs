//! Discrete sampling universe: centered periodic grids and the Signal /
//! PhaseField containers everything else consumes.
//!
//! All integrals over the line are one-period rectangle sums on these grids,
//! and every convolution or product in the library is circular. Positions sit
//! at x_j = (j - n/2)·dx, dual frequencies at ω_k = (k - n/2)·dω with
//! dω = 1/(n·dx), so dx·dω·n = 1 holds by construction.

use crate::error::{Error, Result};
use crate::fft::{centered_forward, centered_inverse};
use num_complex::Complex64;

/// Smallest admissible sample count.
pub const MIN_GRID: usize = 8;

/// Uniform periodic 1-D lattice centered at zero, with its dual lattice.
#[derive(Clone, Copy, Debug)]
pub struct Grid {
    n: usize,
    dx: f64,
}

impl PartialEq for Grid {
    /// Equality up to 1e-12 relative in the spacing, so that dual-of-dual
    /// roundtrips (which may differ by an ulp) compare equal.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && (self.dx - other.dx).abs() <= 1e-12 * self.dx.abs().max(other.dx.abs())
    }
}

impl Grid {
    pub fn new(n: usize, dx: f64) -> Result<Self> {
        if n < MIN_GRID || n % 2 != 0 {
            return Err(Error::InvalidGrid {
                reason: format!("n must be even and >= {MIN_GRID}, got {n}"),
            });
        }
        if !(dx > 0.0 && dx.is_finite()) {
            return Err(Error::InvalidGrid {
                reason: format!("dx must be positive and finite, got {dx}"),
            });
        }
        Ok(Grid { n, dx })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Period length L = n·dx.
    pub fn length(&self) -> f64 {
        self.n as f64 * self.dx
    }

    /// Dual spacing dω = 1/(n·dx).
    pub fn d_omega(&self) -> f64 {
        1.0 / (self.n as f64 * self.dx)
    }

    /// Position node x_j = (j - n/2)·dx.
    pub fn x(&self, j: usize) -> f64 {
        (j as f64 - (self.n / 2) as f64) * self.dx
    }

    /// Frequency node ω_k = (k - n/2)·dω.
    pub fn omega(&self, k: usize) -> f64 {
        (k as f64 - (self.n / 2) as f64) * self.d_omega()
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.x(j)).collect()
    }

    pub fn omegas(&self) -> Vec<f64> {
        (0..self.n).map(|k| self.omega(k)).collect()
    }

    /// The dual lattice viewed as a position grid with spacing dω.
    pub fn dual(&self) -> Grid {
        Grid {
            n: self.n,
            dx: self.d_omega(),
        }
    }

    /// The nested half-spacing grid (2n, dx/2) covering the same period.
    pub fn fine(&self) -> Grid {
        Grid {
            n: 2 * self.n,
            dx: self.dx / 2.0,
        }
    }

    /// Reduce an index into 0..n circularly.
    pub fn wrap(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    /// Index offset of a lattice-aligned shift, or NonLatticeShift.
    ///
    /// Alignment means shift/spacing is an integer to within 1e-9.
    pub fn lattice_steps(&self, shift: f64, spacing: f64) -> Result<i64> {
        let r = shift / spacing;
        let rounded = r.round();
        if (r - rounded).abs() > 1e-9 {
            return Err(Error::NonLatticeShift {
                value: shift,
                spacing,
            });
        }
        Ok(rounded as i64)
    }
}

/// Complex samples of a function on a [`Grid`].
#[derive(Clone, Debug, PartialEq)]
pub struct Signal {
    grid: Grid,
    values: Vec<Complex64>,
}

impl Signal {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::GridMismatch {
                expected: grid.n(),
                got: values.len(),
            });
        }
        Ok(Signal { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        Signal {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.n()],
        }
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> Complex64) -> Self {
        let values = (0..grid.n()).map(|j| f(grid.x(j))).collect();
        Signal { grid, values }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Signal {
        let values = (0..self.grid.n())
            .map(|j| f(self.grid.x(j), self.values[j]))
            .collect();
        Signal {
            grid: self.grid,
            values,
        }
    }

    pub fn scaled(&self, a: Complex64) -> Signal {
        Signal {
            grid: self.grid,
            values: self.values.iter().map(|v| v * a).collect(),
        }
    }

    pub fn add(&self, other: &Signal) -> Result<Signal> {
        self.check_same_grid(other)?;
        Ok(Signal {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Signal) -> Result<Signal> {
        self.check_same_grid(other)?;
        Ok(Signal {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Pointwise product f·h.
    pub fn mul(&self, other: &Signal) -> Result<Signal> {
        self.check_same_grid(other)?;
        Ok(Signal {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// Inner product ⟨f, h⟩ = dx·Σ f·conj(h).
    pub fn inner(&self, other: &Signal) -> Complex64 {
        let s: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        s * self.grid.dx()
    }

    pub fn check_same_grid(&self, other: &Signal) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch {
                expected: self.grid.n(),
                got: other.grid.n(),
            });
        }
        Ok(())
    }
}

/// Complex samples F(x_m, ω_k) on the tensor grid, stored row-major so that
/// `values[m*n + k]` is the ω-row at fixed x_m.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseField {
    grid: Grid,
    values: Vec<Complex64>,
}

impl PhaseField {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n() * grid.n() {
            return Err(Error::GridMismatch {
                expected: grid.n() * grid.n(),
                got: values.len(),
            });
        }
        Ok(PhaseField { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        PhaseField {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.n() * grid.n()],
        }
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let n = grid.n();
        let mut values = Vec::with_capacity(n * n);
        for m in 0..n {
            let x = grid.x(m);
            for k in 0..n {
                values.push(f(x, grid.omega(k)));
            }
        }
        PhaseField { grid, values }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn get(&self, m: usize, k: usize) -> Complex64 {
        self.values[m * self.grid.n() + k]
    }

    pub fn set(&mut self, m: usize, k: usize, v: Complex64) {
        self.values[m * self.grid.n() + k] = v;
    }

    /// The ω-row at fixed x_m.
    pub fn row(&self, m: usize) -> &[Complex64] {
        let n = self.grid.n();
        &self.values[m * n..(m + 1) * n]
    }

    pub fn row_mut(&mut self, m: usize) -> &mut [Complex64] {
        let n = self.grid.n();
        &mut self.values[m * n..(m + 1) * n]
    }

    pub fn map(&self, f: impl Fn(f64, f64, Complex64) -> Complex64) -> PhaseField {
        let n = self.grid.n();
        let mut out = self.clone();
        for m in 0..n {
            let x = self.grid.x(m);
            for k in 0..n {
                out.values[m * n + k] = f(x, self.grid.omega(k), self.values[m * n + k]);
            }
        }
        out
    }

    pub fn scaled(&self, a: Complex64) -> PhaseField {
        PhaseField {
            grid: self.grid,
            values: self.values.iter().map(|v| v * a).collect(),
        }
    }

    pub fn add(&self, other: &PhaseField) -> Result<PhaseField> {
        self.check_same_grid(other)?;
        Ok(PhaseField {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &PhaseField) -> Result<PhaseField> {
        self.check_same_grid(other)?;
        Ok(PhaseField {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Inner product ⟨F, G⟩ = dx·dω·Σ F·conj(G).
    pub fn inner(&self, other: &PhaseField) -> Complex64 {
        let s: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        s * self.grid.dx() * self.grid.d_omega()
    }

    pub fn check_same_grid(&self, other: &PhaseField) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch {
                expected: self.grid.n(),
                got: other.grid.n(),
            });
        }
        Ok(())
    }
}

/// Rectangle-rule integral dx·Σ_j v[j] over one period.
pub fn quad_sum(s: &Signal) -> Complex64 {
    let sum: Complex64 = s.values().iter().sum();
    sum * s.grid().dx()
}

/// Rectangle-rule integral dx·dω·Σ over the tensor grid.
pub fn quad_sum2(f: &PhaseField) -> Complex64 {
    let sum: Complex64 = f.values().iter().sum();
    sum * f.grid().dx() * f.grid().d_omega()
}

/// sqrt(dx·Σ |v|²).
pub fn l2_norm(s: &Signal) -> f64 {
    let sum: f64 = s.values().iter().map(|v| v.norm_sqr()).sum();
    (sum * s.grid().dx()).sqrt()
}

/// sqrt(dx·dω·Σ |V|²).
pub fn l2_norm2(f: &PhaseField) -> f64 {
    let sum: f64 = f.values().iter().map(|v| v.norm_sqr()).sum();
    (sum * f.grid().dx() * f.grid().d_omega()).sqrt()
}

/// Trigonometric interpolation onto the nested (2n, dx/2) grid.
///
/// Exact (to roundoff) for periodic signals band-limited to the original
/// Nyquist band; the original nodes are reproduced exactly. The Nyquist bin
/// is split symmetrically so real input stays real.
pub fn oversample2(s: &Signal) -> Signal {
    let grid = s.grid();
    let n = grid.n();
    let fine = grid.fine();

    let mut spec = s.values().to_vec();
    centered_forward(&mut spec, grid.dx());

    // Fine dual grid has the same spacing dω with 2n bins; bin q holds
    // ω = (q - n)·dω, so coarse bin k lands at q = k + n/2.
    let mut fine_spec = vec![Complex64::new(0.0, 0.0); 2 * n];
    for (k, &c) in spec.iter().enumerate() {
        if k == 0 {
            // split the -Nyquist coefficient between ±Nyquist of the fine grid
            fine_spec[n / 2] += 0.5 * c;
            fine_spec[3 * n / 2] += 0.5 * c;
        } else {
            fine_spec[k + n / 2] = c;
        }
    }
    centered_inverse(&mut fine_spec, grid.d_omega());
    Signal::new(fine, fine_spec).expect("length matches by construction")
}

/// Keep every second node of a half-spacing grid, undoing [`oversample2`].
pub fn decimate2(s: &Signal) -> Result<Signal> {
    let fine = s.grid();
    if fine.n() % 2 != 0 || fine.n() / 2 < MIN_GRID {
        return Err(Error::InvalidGrid {
            reason: format!("cannot decimate grid of size {}", fine.n()),
        });
    }
    let coarse = Grid::new(fine.n() / 2, fine.dx() * 2.0)?;
    let values = (0..coarse.n()).map(|j| s.values()[2 * j]).collect();
    Signal::new(coarse, values)
}

/// Embed into a centered grid `factor` times longer (same dx), zero outside.
pub fn zero_pad(s: &Signal, factor: usize) -> Result<Signal> {
    if factor == 0 {
        return Err(Error::InvalidConfig {
            reason: "pad factor must be >= 1".into(),
        });
    }
    let n = s.grid().n();
    let big = Grid::new(n * factor, s.grid().dx())?;
    let mut out = Signal::zeros(big);
    let off = (big.n() - n) / 2;
    out.values_mut()[off..off + n].copy_from_slice(s.values());
    Ok(out)
}

/// max(|v[0]|, |v[n-1]|) / max|v|; gauges periodization error at the edges.
pub fn edge_decay_ratio(s: &Signal) -> f64 {
    let peak = s.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
    if peak == 0.0 {
        return 0.0;
    }
    let n = s.grid().n();
    s.values()[0].norm().max(s.values()[n - 1].norm()) / peak
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn balanced(n: usize) -> Grid {
        Grid::new(n, 1.0 / (n as f64).sqrt()).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new(7, 1.0).is_err());
        assert!(Grid::new(6, 1.0).is_err());
        assert!(Grid::new(8, 0.0).is_err());
        let g = Grid::new(8, 1.0).unwrap();
        assert_eq!(g.x(4), 0.0);
        assert_eq!(g.omega(4), 0.0);
        assert!((g.dx() * g.d_omega() * g.n() as f64 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quad_sum_constant() {
        let g = Grid::new(8, 1.0).unwrap();
        let s = Signal::from_fn(g, |_| c(1.0, 0.0));
        assert!((quad_sum(&s) - c(8.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn quad_sum_exponential_orthogonality() {
        let g = Grid::new(32, 0.5, ).unwrap();
        let l = g.length();
        let s = Signal::from_fn(g, |x| Complex64::from_polar(1.0, 2.0 * PI * x / l));
        assert!(quad_sum(&s).norm() < 1e-13);
    }

    #[test]
    fn quad_sum_gaussian_unit_mass() {
        let g = Grid::new(128, 0.25).unwrap();
        let s = Signal::from_fn(g, |x| c((-PI * x * x).exp(), 0.0));
        // oracle: same sum at doubled n stays within the Poisson tail bound
        let g2 = Grid::new(256, 0.25).unwrap();
        let s2 = Signal::from_fn(g2, |x| c((-PI * x * x).exp(), 0.0));
        assert!((quad_sum(&s).re - 1.0).abs() < 1e-12);
        assert!((quad_sum(&s) - quad_sum(&s2)).norm() < 1e-13);
    }

    #[test]
    fn quad_sum2_examples() {
        let g = Grid::new(8, 1.0).unwrap();
        let f = PhaseField::from_fn(g, |_, _| c(1.0, 0.0));
        assert!((quad_sum2(&f) - c(8.0, 0.0)).norm() < 1e-13);

        // separable product integrates to the product of the 1-D sums
        let a = Signal::from_fn(g, |x| c((x * 0.3).cos(), 0.1 * x));
        let b: Vec<Complex64> = (0..8).map(|k| c(g.omega(k), 0.2)).collect();
        let f = PhaseField::from_fn(g, |x, w| {
            let j = ((x / g.dx()) + 4.0).round() as usize;
            let k = ((w / g.d_omega()) + 4.0).round() as usize;
            a.values()[j] * b[k]
        });
        let bw: Complex64 = b.iter().sum::<Complex64>() * g.d_omega();
        assert!((quad_sum2(&f) - quad_sum(&a) * bw).norm() < 1e-13);
    }

    #[test]
    fn l2_norm_examples() {
        let g = Grid::new(128, 0.25).unwrap();
        assert_eq!(l2_norm(&Signal::zeros(g)), 0.0);
        let s = Signal::from_fn(g, |x| c(2f64.powf(0.25) * (-PI * x * x).exp(), 0.0));
        assert!((l2_norm(&s) - 1.0).abs() < 1e-10);
        let t = s.scaled(c(-2.5, 1.0));
        assert!((l2_norm(&t) - c(-2.5, 1.0).norm() * l2_norm(&s)).abs() < 1e-12);
    }

    #[test]
    fn l2_matches_quad_of_square() {
        let g = balanced(64);
        let s = Signal::from_fn(g, |x| c((x * 1.1).sin() * (-0.3 * x * x).exp(), (x * 0.4).cos()));
        let viaquad = quad_sum(&s.mul(&s.map(|_, v| v.conj())).unwrap()).re;
        let n2 = l2_norm(&s).powi(2);
        assert!((viaquad - n2).abs() <= 1e-13 * n2.max(1.0));
    }

    #[test]
    fn oversample_constant_and_exponential() {
        let g = Grid::new(16, 0.5).unwrap();
        let s = Signal::from_fn(g, |_| c(1.0, 0.0));
        let f = oversample2(&s);
        for v in f.values() {
            assert!((v - c(1.0, 0.0)).norm() < 1e-13);
        }

        let l = g.length();
        let e = Signal::from_fn(g, |x| Complex64::from_polar(1.0, 2.0 * PI * x / l));
        let ef = oversample2(&e);
        let fine = g.fine();
        for (i, v) in ef.values().iter().enumerate() {
            let want = Complex64::from_polar(1.0, 2.0 * PI * fine.x(i) / l);
            assert!((v - want).norm() < 1e-12);
        }
    }

    #[test]
    fn oversample_gaussian_against_direct_fine_sampling() {
        // Balanced grid: both the spatial and the Nyquist tail of e^{-πx²}
        // are far below 1e-10, so trigonometric interpolation must match
        // direct sampling of the fine Gaussian.
        let g = balanced(128);
        let s = Signal::from_fn(g, |x| c((-PI * x * x).exp(), 0.0));
        let up = oversample2(&s);
        let fine = g.fine();
        let direct = Signal::from_fn(fine, |x| c((-PI * x * x).exp(), 0.0));
        let maxdev = up
            .values()
            .iter()
            .zip(direct.values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(maxdev <= 1e-10, "max deviation {maxdev:.3e}");
    }

    #[test]
    fn oversample_then_decimate_is_identity() {
        let g = balanced(64);
        let s = Signal::from_fn(g, |x| {
            c((-0.8 * x * x).exp() * (2.0 * x).cos(), 0.3 * (-x * x).exp())
        });
        let back = decimate2(&oversample2(&s)).unwrap();
        let num: f64 = back
            .values()
            .iter()
            .zip(s.values())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        let den: f64 = s.values().iter().map(|v| v.norm_sqr()).sum();
        assert!((num / den).sqrt() < 1e-12);
    }

    #[test]
    fn zero_pad_centers() {
        let g = Grid::new(8, 1.0).unwrap();
        let s = Signal::from_fn(g, |x| c(x, 0.0));
        let p = zero_pad(&s, 2).unwrap();
        assert_eq!(p.grid().n(), 16);
        assert_eq!(p.values()[4], c(g.x(0), 0.0));
        assert_eq!(p.values()[0], c(0.0, 0.0));
    }

    #[test]
    fn quad_sum_linear_and_conj() {
        let g = balanced(32);
        let a = Signal::from_fn(g, |x| c((x).sin(), x * 0.1));
        let b = Signal::from_fn(g, |x| c((-x * x).exp(), -0.2 * x));
        let lhs = quad_sum(&a.add(&b.scaled(c(2.0, -1.0))).unwrap());
        let rhs = quad_sum(&a) + c(2.0, -1.0) * quad_sum(&b);
        assert!((lhs - rhs).norm() < 1e-12);
        let conj = quad_sum(&a.map(|_, v| v.conj()));
        assert!((conj - quad_sum(&a).conj()).norm() < 1e-14);
    }
}
