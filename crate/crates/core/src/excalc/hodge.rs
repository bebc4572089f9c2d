use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use super::operators::{down_laplacian, up_laplacian, weighted_coboundary};
use super::{Cochain, ExcalcError, HodgeMetric, SimplicialComplex};
use crate::linalg::{min_norm_solve, sorted_symmetric_eigen, zero_cutoff};

/// `ω = dα + δβ + γ`, with the minimum-norm potentials `α` and `β`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HodgeDecomposition {
    pub exact: Cochain,
    pub coexact: Cochain,
    pub harmonic: Cochain,
    /// `α`, a `(p-1)`-cochain; `None` at degree 0.
    pub exact_potential: Option<Cochain>,
    /// `β`, a `(p+1)`-cochain; `None` at the top degree.
    pub coexact_potential: Option<Cochain>,
    /// Metric norm of `ω - (dα + δβ + γ)`.
    pub residual_norm: f64,
}

/// Orthonormal (in the metric) basis of harmonic `p`-cochains, the kernel of
/// `Δ_p`. Its length is `b_p`.
pub fn harmonic_basis(k: &SimplicialComplex, p: usize, metric: &HodgeMetric) -> Result<Vec<Cochain>, ExcalcError> {
    let sym = up_laplacian(k, p, metric)? + down_laplacian(k, p, metric)?;
    let (values, vectors) = sorted_symmetric_eigen(&sym);
    let cut = zero_cutoff(&values);
    let winv = metric.sqrt_diag(p, true);
    Ok(values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.abs() <= cut)
        .map(|(i, _)| {
            let x = &winv * vectors.column(i);
            Cochain {
                degree: p,
                values: x.iter().copied().collect(),
            }
        })
        .collect())
}

/// Split a cochain into exact, coexact and harmonic parts, pairwise
/// orthogonal in the metric.
pub fn hodge_decompose(k: &SimplicialComplex, omega: &Cochain, metric: &HodgeMetric) -> Result<HodgeDecomposition, ExcalcError> {
    omega.validate(k)?;
    metric.check(k)?;
    let p = omega.degree;
    let n = k.count(p);
    let w_half = metric.sqrt_diag(p, false);
    let w_half_inv = metric.sqrt_diag(p, true);
    let target = &w_half * DVector::from_column_slice(&omega.values);

    let (exact_t, alpha) = if p > 0 {
        let a = weighted_coboundary(k, p - 1, metric)?;
        let alpha_t = min_norm_solve(&a, &target);
        let alpha = metric.sqrt_diag(p - 1, true) * &alpha_t;
        (a * alpha_t, Some(alpha))
    } else {
        (DVector::zeros(n), None)
    };

    let (coexact_t, beta) = if p < k.dimension() {
        let a = weighted_coboundary(k, p, metric)?;
        let at = a.transpose();
        let beta_t = min_norm_solve(&at, &target);
        let beta = metric.sqrt_diag(p + 1, true) * &beta_t;
        (at * beta_t, Some(beta))
    } else {
        (DVector::zeros(n), None)
    };

    let mut harmonic_t = DVector::zeros(n);
    for h in harmonic_basis(k, p, metric)? {
        // basis vectors are metric-orthonormal; work in orthonormal coordinates
        let ht = &w_half * DVector::from_column_slice(&h.values);
        harmonic_t += &ht * ht.dot(&target);
    }

    let residual_t = &target - &exact_t - &coexact_t - &harmonic_t;
    let back = |v: DVector<f64>| -> Vec<f64> { (&w_half_inv * v).iter().copied().collect() };
    let to_cochain = |degree: usize, v: DVector<f64>| Cochain {
        degree,
        values: v.iter().copied().collect(),
    };
    Ok(HodgeDecomposition {
        exact: Cochain { degree: p, values: back(exact_t) },
        coexact: Cochain { degree: p, values: back(coexact_t) },
        harmonic: Cochain { degree: p, values: back(harmonic_t) },
        exact_potential: alpha.map(|a| to_cochain(p - 1, a)),
        coexact_potential: beta.map(|b| to_cochain(p + 1, b)),
        residual_norm: residual_t.norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> SimplicialComplex {
        SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn sphere() -> SimplicialComplex {
        SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn zero_cochain_decomposes_to_zero() {
        let k = sphere();
        let m = HodgeMetric::unit(&k);
        let d = hodge_decompose(&k, &Cochain::zeros(&k, 1), &m).unwrap();
        assert!(d.exact.values.iter().chain(&d.coexact.values).chain(&d.harmonic.values).all(|x| *x == 0.0));
        assert_eq!(d.residual_norm, 0.0);
    }

    #[test]
    fn harmonic_basis_sizes() {
        let c = circle();
        assert_eq!(harmonic_basis(&c, 1, &HodgeMetric::unit(&c)).unwrap().len(), 1);
        let s = sphere();
        let m = HodgeMetric::unit(&s);
        assert_eq!(harmonic_basis(&s, 0, &m).unwrap().len(), 1);
        assert!(harmonic_basis(&s, 1, &m).unwrap().is_empty());
        assert_eq!(harmonic_basis(&s, 2, &m).unwrap().len(), 1);
    }

    #[test]
    fn circle_one_cochain_has_no_coexact_part() {
        // every 1-cochain on a graph is closed
        let k = circle();
        let m = HodgeMetric::unit(&k);
        let omega = Cochain::new(&k, 1, vec![1.0, -2.0, 0.5]).unwrap();
        let d = hodge_decompose(&k, &omega, &m).unwrap();
        assert!(d.coexact.values.iter().all(|x| x.abs() < 1e-12));
        assert!(d.residual_norm < 1e-12);
        // harmonic part is the circulation around the loop spread uniformly:
        // edges (0,1),(0,2),(1,2) with loop orientation 0->1->2->0 = (+,-,+)
        let circulation = (1.0 + 2.0 + 0.5) / 3.0;
        let expected = [circulation, -circulation, circulation];
        for (h, e) in d.harmonic.values.iter().zip(expected) {
            assert!((h - e).abs() < 1e-12);
        }
    }

    #[test]
    fn weighted_metric_keeps_orthogonality() {
        let k = sphere();
        let weights = vec![vec![1.0, 2.0, 0.5, 3.0], vec![1.0, 1.5, 0.7, 2.0, 0.9, 1.1], vec![2.0, 1.0, 0.4, 1.3]];
        let m = HodgeMetric::new(&k, weights).unwrap();
        let omega = Cochain::new(&k, 1, vec![0.3, -1.0, 2.0, 0.1, 0.7, -0.4]).unwrap();
        let d = hodge_decompose(&k, &omega, &m).unwrap();
        assert!(d.residual_norm < 1e-10);
        assert!(m.inner(1, &d.exact.values, &d.coexact.values).abs() < 1e-10);
        assert!(m.norm(1, &d.harmonic.values) < 1e-10);
    }
}
