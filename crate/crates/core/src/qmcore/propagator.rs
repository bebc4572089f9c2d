use std::f64::consts::PI;

use super::QmError;
use crate::C64;

/// `(m/2πit)^{d/2} e^{im(x-x₀)²/2t}` for `d ∈ {1, 3}` (ħ = 1); the complex
/// power is principal. In 3D, `x - x₀` enters through `dist2 = |x - x₀|²`.
pub fn free_propagator_dist2(m: f64, dist2: f64, t: f64, dim: u8) -> Result<C64, QmError> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(QmError::Domain(format!("mass must be positive, got {m}")));
    }
    if t == 0.0 || !t.is_finite() {
        return Err(QmError::Singular(format!("propagator at t = {t}")));
    }
    if dim != 1 && dim != 3 {
        return Err(QmError::Domain(format!("dimension must be 1 or 3, got {dim}")));
    }
    complex_time_kernel(m, dist2, C64::new(t, 0.0), dim)
}

/// One-dimensional free propagator from `x0` to `x` in time `t`.
pub fn free_propagator(m: f64, x0: f64, x: f64, t: f64, dim: u8) -> Result<C64, QmError> {
    free_propagator_dist2(m, (x - x0) * (x - x0), t, dim)
}

/// The same closed form continued to complex time `τ` with `Im τ ≤ 0`
/// (the damped or Euclidean direction).
fn complex_time_kernel(m: f64, dist2: f64, tau: C64, dim: u8) -> Result<C64, QmError> {
    let i = C64::new(0.0, 1.0);
    let pref = (C64::new(m, 0.0) / (i * tau * (2.0 * PI))).powf(dim as f64 / 2.0);
    Ok(pref * (i * m * dist2 / (tau * 2.0)).exp())
}

/// Uniform spatial grid `x_min, …, x_max` with `points` nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl SpatialGrid {
    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points - 1) as f64
    }

    fn nodes(&self) -> Vec<f64> {
        let h = self.step();
        (0..self.points).map(|j| self.x_min + j as f64 * h).collect()
    }
}

/// Which time axis the sliced integral runs along.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeAxis {
    /// Real time slightly rotated, `t → t(1 - iη)`, so the oscillatory
    /// integrals converge on a finite grid.
    Lorentzian { damping: f64 },
    /// Imaginary time `t = -iτ`: the kernel is the heat kernel.
    Euclidean,
}

impl TimeAxis {
    fn complex_time(&self, t: f64) -> C64 {
        match *self {
            TimeAxis::Lorentzian { damping } => C64::new(t, -t * damping),
            TimeAxis::Euclidean => C64::new(0.0, -t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathIntegralConfig {
    pub slices: usize,
    pub grid: SpatialGrid,
    pub axis: TimeAxis,
}

impl PathIntegralConfig {
    pub fn lorentzian(slices: usize, grid: SpatialGrid, damping: f64) -> Self {
        PathIntegralConfig {
            slices,
            grid,
            axis: TimeAxis::Lorentzian { damping },
        }
    }
}

/// Magnitude below which the short-time kernel counts as negligible when
/// judging the grid.
const KERNEL_FLOOR: f64 = 1e-8;

/// The closed-form kernel on the configured time axis: what the sliced
/// integral should approach.
pub fn path_integral_reference(m: f64, x0: f64, x: f64, t: f64, axis: TimeAxis) -> Result<C64, QmError> {
    free_propagator(m, x0, x, t, 1)?;
    check_axis(axis)?;
    complex_time_kernel(m, (x - x0) * (x - x0), axis.complex_time(t), 1)
}

fn check_axis(axis: TimeAxis) -> Result<(), QmError> {
    if let TimeAxis::Lorentzian { damping } = axis {
        if !(damping >= 0.0 && damping.is_finite()) {
            return Err(QmError::Domain(format!("damping must be >= 0, got {damping}")));
        }
    }
    Ok(())
}

/// Largest phase change of the short-time kernel between neighbouring grid
/// nodes, over the distances where the kernel is not negligible.
fn phase_per_step(m: f64, tau: C64, grid: &SpatialGrid) -> f64 {
    let span = grid.x_max - grid.x_min;
    // exponent i m d²/(2τ) = m d² (i τ̄)/(2|τ|²)
    let decay_rate = m * (-tau.im) / (2.0 * tau.norm_sqr()); // coefficient of -d²
    let osc_rate = m * tau.re / (2.0 * tau.norm_sqr()); // coefficient of i d²
    let reach = if decay_rate > 0.0 {
        (-(KERNEL_FLOOR.ln()) / decay_rate).sqrt().min(span)
    } else {
        span
    };
    2.0 * osc_rate.abs() * reach * grid.step()
}

/// `N`-slice time-sliced path integral on a spatial grid: the short-time
/// kernel is convolved `N - 1` times with trapezoidal weights. `slices = 1`
/// returns the kernel itself.
pub fn path_integral_propagator(m: f64, x0: f64, x: f64, t: f64, config: &PathIntegralConfig) -> Result<C64, QmError> {
    free_propagator(m, x0, x, t, 1)?;
    check_axis(config.axis)?;
    let PathIntegralConfig { slices, grid, axis } = *config;
    if slices == 0 {
        return Err(QmError::Domain("need at least one slice".into()));
    }
    if grid.points < 3 || !(grid.x_max > grid.x_min) || !grid.x_min.is_finite() || !grid.x_max.is_finite() {
        return Err(QmError::Resolution("grid needs x_min < x_max and at least 3 points".into()));
    }
    for p in [x0, x] {
        if p < grid.x_min || p > grid.x_max {
            return Err(QmError::Resolution(format!(
                "endpoint {p} lies outside the grid [{}, {}]",
                grid.x_min, grid.x_max
            )));
        }
    }
    let tau = axis.complex_time(t) / slices as f64;
    if slices == 1 {
        return complex_time_kernel(m, (x - x0) * (x - x0), tau, 1);
    }
    let dx = grid.step();
    let phase = phase_per_step(m, tau, &grid);
    if phase > PI / 2.0 {
        return Err(QmError::Resolution(format!(
            "kernel phase changes by {phase:.3} rad per grid step (limit π/2); refine the grid below dx = {:.3e}",
            dx * (PI / 2.0) / phase
        )));
    }
    // heat-kernel width must span several nodes
    let width = (tau.norm() / m).sqrt();
    if dx > width / 2.0 {
        return Err(QmError::Resolution(format!(
            "grid step {dx:.3e} exceeds half the kernel width {width:.3e}"
        )));
    }

    let nodes = grid.nodes();
    let kernel = |a: f64, b: f64| complex_time_kernel(m, (a - b) * (a - b), tau, 1).expect("valid kernel");
    let weights: Vec<f64> = (0..nodes.len())
        .map(|j| if j == 0 || j + 1 == nodes.len() { dx / 2.0 } else { dx })
        .collect();
    // node-to-node kernel depends only on |i - j|
    let table: Vec<C64> = (0..nodes.len()).map(|d| kernel(0.0, d as f64 * dx)).collect();
    let mut psi: Vec<C64> = nodes.iter().map(|y| kernel(x0, *y)).collect();
    for _ in 1..slices - 1 {
        let weighted: Vec<C64> = psi.iter().zip(&weights).map(|(p, w)| p * *w).collect();
        psi = (0..nodes.len())
            .map(|i| weighted.iter().enumerate().map(|(j, p)| table[i.abs_diff(j)] * p).sum())
            .collect();
    }
    Ok(nodes
        .iter()
        .zip(&psi)
        .zip(&weights)
        .map(|((z, p), w)| kernel(*z, x) * p * *w)
        .sum())
}
