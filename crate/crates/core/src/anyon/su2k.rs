use std::f64::consts::PI;

use num_rational::Rational64;

use super::AnyonError;
use crate::C64;

/// Data of the spin-½ anyon of SU(2)_k.
#[derive(Debug, Clone, PartialEq)]
pub struct Su2kData {
    pub k: u32,
    /// `2 cos(π/(k+2))`
    pub d: f64,
    /// `-e^{-3πi/2(k+2)}`
    pub lambda1: C64,
    /// `e^{πi/2(k+2)}`
    pub lambda2: C64,
    /// `0, 1/2, …, k/2`
    pub allowed_spins: Vec<Rational64>,
}

impl Su2kData {
    /// `(1 + λ1 λ2) / (λ1 + λ2)`, the quantum dimension as read off from the
    /// braid eigenvalues.
    pub fn eigenvalue_quantum_dimension(&self) -> C64 {
        (C64::new(1.0, 0.0) + self.lambda1 * self.lambda2) / (self.lambda1 + self.lambda2)
    }

    /// `|d - (1 + λ1 λ2)/(λ1 + λ2)|`.
    pub fn consistency_error(&self) -> f64 {
        (self.eigenvalue_quantum_dimension() - C64::new(self.d, 0.0)).norm()
    }

    /// `q = -e^{iπ/(k+2)}`.
    pub fn q(&self) -> C64 {
        -C64::from_polar(1.0, PI / (self.k as f64 + 2.0))
    }
}

pub fn su2k(k: i64) -> Result<Su2kData, AnyonError> {
    if k < 1 || k > u32::MAX as i64 {
        return Err(AnyonError::Domain(format!("level k must be >= 1, got {k}")));
    }
    let kp2 = k as f64 + 2.0;
    Ok(Su2kData {
        k: k as u32,
        d: 2.0 * (PI / kp2).cos(),
        lambda1: -C64::from_polar(1.0, -3.0 * PI / (2.0 * kp2)),
        lambda2: C64::from_polar(1.0, PI / (2.0 * kp2)),
        allowed_spins: (0..=k).map(|j| Rational64::new(j, 2)).collect(),
    })
}

/// Largest entry of `q^{-1/2} ρ(σ) - q^{1/2} ρ(σ⁻¹) - (q - q⁻¹)` for
/// `ρ(σ) = diag(λ1, λ2)`, with `q^{1/2} = e^{i arg(q)/2}`.
pub fn braid_skein_residual(lambda1: C64, lambda2: C64, q: C64) -> f64 {
    let root = C64::from_polar(q.norm().sqrt(), q.arg() / 2.0);
    let rhs = q - q.inv();
    [lambda1, lambda2]
        .iter()
        .map(|l| (root.inv() * l - root * l.inv() - rhs).norm())
        .fold(0.0, f64::max)
}

/// The braid skein identity for the SU(2)_k eigenvalues, entrywise within `tol`.
pub fn braid_skein_check(k: i64, tol: f64) -> Result<bool, AnyonError> {
    let s = su2k(k)?;
    Ok(braid_skein_residual(s.lambda1, s.lambda2, s.q()) <= tol)
}

/// `λ2/λ1 = -q²`: the phase-free content of the eigenvalue pair.
pub fn braid_eigenvalue_ratio_check(k: i64, tol: f64) -> Result<bool, AnyonError> {
    let s = su2k(k)?;
    let q = s.q();
    Ok((s.lambda2 / s.lambda1 + q * q).norm() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_dimensions() {
        assert!((su2k(1).unwrap().d - 1.0).abs() < 1e-15);
        assert!((su2k(2).unwrap().d - 2f64.sqrt()).abs() < 1e-15);
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((su2k(3).unwrap().d - golden).abs() < 1e-15);
    }

    #[test]
    fn d_increases_towards_two() {
        let ds: Vec<f64> = (1..200).map(|k| su2k(k).unwrap().d).collect();
        assert!(ds.windows(2).all(|w| w[0] < w[1]));
        assert!(ds[1..].iter().all(|d| *d > 1.0 && *d < 2.0));
        assert!(2.0 - ds.last().unwrap() < 1e-3);
    }

    #[test]
    fn eigenvalues_are_phases_and_spins_listed() {
        for k in 1..=32 {
            let s = su2k(k).unwrap();
            assert!((s.lambda1.norm() - 1.0).abs() < 1e-15);
            assert!((s.lambda2.norm() - 1.0).abs() < 1e-15);
            assert_eq!(s.allowed_spins.len(), k as usize + 1);
            assert_eq!(*s.allowed_spins.last().unwrap(), Rational64::new(k, 2));
        }
    }

    #[test]
    fn eigenvalue_ratio_is_minus_q_squared() {
        for k in 1..=32 {
            assert!(braid_eigenvalue_ratio_check(k, 1e-12).unwrap());
        }
    }

    #[test]
    fn eigenvalue_quantum_dimension_is_secant_of_half_angle() {
        // the ratio evaluates to 1/(2cos(θ/2)), θ = π/(k+2)
        for k in 1..=32 {
            let s = su2k(k).unwrap();
            let theta = PI / (k as f64 + 2.0);
            let r = s.eigenvalue_quantum_dimension();
            assert!(r.im.abs() < 1e-12);
            assert!((r.re - 1.0 / (2.0 * (theta / 2.0).cos())).abs() < 1e-12);
        }
    }

    #[test]
    fn skein_residual_detects_perturbation() {
        let s = su2k(2).unwrap();
        // an eigenvalue pair that does satisfy the identity: roots of
        // q^{-1/2}λ - q^{1/2}/λ = q - q⁻¹, i.e. λ = q^{3/2} and λ = -q^{-1/2}
        let q = s.q();
        let root = C64::from_polar(1.0, q.arg() / 2.0);
        let good = braid_skein_residual(q * root, -root.inv(), q);
        assert!(good < 1e-12);
        assert!(braid_skein_residual(q * root * (1.0 + 1e-6), -root.inv(), q) > 1e-7);
    }

    #[test]
    fn level_zero_rejected() {
        assert!(matches!(su2k(0), Err(AnyonError::Domain(_))));
        assert!(braid_skein_check(-1, 1.0).is_err());
    }
}
