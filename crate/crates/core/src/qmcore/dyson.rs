use nalgebra::{DMatrix, DVector};

use super::{HermitianOperator, QmError};
use crate::C64;

/// Fewest grid points accepted for the time quadratures.
pub const MIN_GRID_POINTS: usize = 8;

/// `H(t) = E + ε H₁(t)` on a uniform time grid `t₀ … t`. The perturbation
/// `V(t) = ε H₁(t)` is given by its samples of `H₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationProblem {
    e: HermitianOperator,
    h1: Vec<HermitianOperator>,
    t0: f64,
    t1: f64,
    epsilon: f64,
}

impl PerturbationProblem {
    pub fn new(e: HermitianOperator, h1: Vec<HermitianOperator>, t0: f64, t1: f64, epsilon: f64) -> Result<Self, QmError> {
        if h1.len() < MIN_GRID_POINTS {
            return Err(QmError::Resolution(format!(
                "{} time samples; need at least {MIN_GRID_POINTS}",
                h1.len()
            )));
        }
        if !(t0.is_finite() && t1.is_finite() && t1 > t0) {
            return Err(QmError::Domain(format!("time window [{t0}, {t1}] is empty")));
        }
        if !epsilon.is_finite() {
            return Err(QmError::Domain("epsilon must be finite".into()));
        }
        if let Some(bad) = h1.iter().find(|v| v.dim() != e.dim()) {
            return Err(QmError::Dimension {
                expected: e.dim(),
                got: bad.dim(),
            });
        }
        Ok(PerturbationProblem { e, h1, t0, t1, epsilon })
    }

    /// Time-independent `H₁` sampled on `points` grid points.
    pub fn constant(e: HermitianOperator, h1: HermitianOperator, t0: f64, t1: f64, points: usize, epsilon: f64) -> Result<Self, QmError> {
        PerturbationProblem::new(e, vec![h1; points], t0, t1, epsilon)
    }

    /// `E = diag(0, ω)`, `H₁ = σ₁`: the driven two-level system.
    pub fn two_level(omega: f64, epsilon: f64, duration: f64, points: usize) -> Result<Self, QmError> {
        PerturbationProblem::constant(
            HermitianOperator::from_real_diagonal(&[0.0, omega])?,
            super::pauli(1)?,
            0.0,
            duration,
            points,
            epsilon,
        )
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self, QmError> {
        PerturbationProblem::new(self.e.clone(), self.h1.clone(), self.t0, self.t1, epsilon)
    }

    pub fn dim(&self) -> usize {
        self.e.dim()
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn step(&self) -> f64 {
        (self.t1 - self.t0) / (self.h1.len() - 1) as f64
    }

    pub fn times(&self) -> Vec<f64> {
        let h = self.step();
        (0..self.h1.len()).map(|j| self.t0 + j as f64 * h).collect()
    }

    /// Unperturbed energies (ascending) and their eigenvectors; amplitudes are
    /// reported in this basis.
    pub fn eigenbasis(&self) -> (Vec<f64>, DMatrix<C64>) {
        self.e.eigh()
    }

    /// `V*(t_j) = e^{iE(t_j-t₀)} V(t_j) e^{-iE(t_j-t₀)}` in the eigenbasis of `E`.
    pub fn interaction_samples(&self) -> Vec<DMatrix<C64>> {
        let (energies, p) = self.eigenbasis();
        let eps = C64::new(self.epsilon, 0.0);
        self.times()
            .iter()
            .zip(&self.h1)
            .map(|(t, h1)| {
                let w = p.adjoint() * h1.matrix() * &p * eps;
                let dt = t - self.t0;
                DMatrix::from_fn(w.nrows(), w.ncols(), |a, b| {
                    w[(a, b)] * C64::from_polar(1.0, (energies[a] - energies[b]) * dt)
                })
            })
            .collect()
    }

    /// Exact interaction-picture evolution `e^{iEτ} e^{-i(E+V)τ}` for a
    /// time-independent perturbation, in the eigenbasis of `E`.
    pub fn exact_amplitude(&self) -> Result<DMatrix<C64>, QmError> {
        if self.h1.iter().any(|v| v != &self.h1[0]) {
            return Err(QmError::Domain("exact amplitude needs a time-independent perturbation".into()));
        }
        let (energies, p) = self.eigenbasis();
        let tau = self.t1 - self.t0;
        let full = HermitianOperator::new(self.e.matrix() + self.h1[0].matrix() * C64::new(self.epsilon, 0.0))?;
        let free = DMatrix::from_diagonal(&DVector::from_iterator(
            energies.len(),
            energies.iter().map(|e| C64::from_polar(1.0, e * tau)),
        ));
        Ok(free * p.adjoint() * full.propagator(tau) * p)
    }
}

/// `T* = 1 + T₁* (+ T₂*)` with `T₁* = -i ∫ V*` by the trapezoidal rule and
/// `T₂* = -∫dt' V*(t') ∫^{t'} dt'' V*(t'')` by nested trapezoids, in the
/// eigenbasis of `E`.
pub fn dyson_amplitude(problem: &PerturbationProblem, order: u8) -> Result<DMatrix<C64>, QmError> {
    if !(1..=2).contains(&order) {
        return Err(QmError::Order(order));
    }
    let vs = problem.interaction_samples();
    let n = problem.dim();
    let half_h = C64::new(problem.step() / 2.0, 0.0);
    let mi = C64::new(0.0, -1.0);

    // cumulative trapezoid: c[j] = ∫_{t₀}^{t_j} V*
    let mut c = Vec::with_capacity(vs.len());
    c.push(DMatrix::<C64>::zeros(n, n));
    for j in 1..vs.len() {
        let next = &c[j - 1] + (&vs[j - 1] + &vs[j]) * half_h;
        c.push(next);
    }
    let mut t = DMatrix::identity(n, n) + c.last().unwrap() * mi;
    if order == 2 {
        let inner: Vec<DMatrix<C64>> = vs.iter().zip(&c).map(|(v, cj)| v * cj).collect();
        let mut acc = DMatrix::<C64>::zeros(n, n);
        for j in 1..inner.len() {
            acc += (&inner[j - 1] + &inner[j]) * half_h;
        }
        t -= acc;
    }
    Ok(t)
}

/// `|⟨α''|T*|α'⟩|²` in the eigenbasis of `E`.
pub fn transition_probability(problem: &PerturbationProblem, order: u8, from: usize, to: usize) -> Result<f64, QmError> {
    let n = problem.dim();
    if from >= n || to >= n {
        return Err(QmError::State(format!("level index out of range for {n} levels")));
    }
    Ok(dyson_amplitude(problem, order)?[(to, from)].norm_sqr())
}

/// `P(0 → 1)` for `E = diag(0, ω)`, `V = ε σ₁` held for time `t`:
/// `ε²/Ω² sin²(Ωt)`, `Ω = √(ω²/4 + ε²)`.
pub fn rabi_probability(omega: f64, epsilon: f64, t: f64) -> f64 {
    let big = (omega * omega / 4.0 + epsilon * epsilon).sqrt();
    if big == 0.0 {
        return 0.0;
    }
    (epsilon / big).powi(2) * (big * t).sin().powi(2)
}
