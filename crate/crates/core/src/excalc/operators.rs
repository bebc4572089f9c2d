use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{ExcalcError, SimplicialComplex};
use crate::linalg::IntMatrix;

/// Real-valued cochain of one degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<f64>,
}

impl Cochain {
    pub fn new(k: &SimplicialComplex, degree: usize, values: Vec<f64>) -> Result<Self, ExcalcError> {
        let expected = k.count(degree);
        if values.len() != expected || degree > k.dimension() {
            return Err(ExcalcError::CochainLength {
                degree,
                got: values.len(),
                expected,
            });
        }
        Ok(Self { degree, values })
    }

    pub fn zeros(k: &SimplicialComplex, degree: usize) -> Self {
        Self {
            degree,
            values: vec![0.0; k.count(degree)],
        }
    }

    /// Check that this cochain fits `k`.
    pub fn validate(&self, k: &SimplicialComplex) -> Result<(), ExcalcError> {
        Cochain::new(k, self.degree, self.values.clone()).map(|_| ())
    }
}

/// Diagonal inner product per degree: `<a, b>_p = sum_i w_p[i] a[i] b[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HodgeMetric {
    weights: Vec<Vec<f64>>,
}

impl HodgeMetric {
    pub fn unit(k: &SimplicialComplex) -> Self {
        Self {
            weights: k.counts().into_iter().map(|n| vec![1.0; n]).collect(),
        }
    }

    pub fn new(k: &SimplicialComplex, weights: Vec<Vec<f64>>) -> Result<Self, ExcalcError> {
        let m = Self { weights };
        m.check(k)?;
        Ok(m)
    }

    /// Multiply every weight of degree `p` by `scales[p]`.
    pub fn scaled_by_degree(&self, scales: &[f64]) -> Result<Self, ExcalcError> {
        if scales.len() != self.weights.len() || scales.iter().any(|s| !(*s > 0.0)) {
            return Err(ExcalcError::Metric(format!(
                "need {} positive degree scales, got {scales:?}",
                self.weights.len()
            )));
        }
        Ok(Self {
            weights: self
                .weights
                .iter()
                .zip(scales)
                .map(|(w, s)| w.iter().map(|x| x * s).collect())
                .collect(),
        })
    }

    pub fn weights(&self, p: usize) -> &[f64] {
        &self.weights[p]
    }

    pub(crate) fn check(&self, k: &SimplicialComplex) -> Result<(), ExcalcError> {
        let counts = k.counts();
        if self.weights.len() != counts.len() {
            return Err(ExcalcError::Metric(format!(
                "metric has {} degrees, complex has {}",
                self.weights.len(),
                counts.len()
            )));
        }
        for (p, (w, n)) in self.weights.iter().zip(&counts).enumerate() {
            if w.len() != *n {
                return Err(ExcalcError::Metric(format!(
                    "degree {p}: {} weights for {n} simplices",
                    w.len()
                )));
            }
            if let Some(bad) = w.iter().find(|x| !(**x > 0.0) || !x.is_finite()) {
                return Err(ExcalcError::Metric(format!("degree {p}: non-positive weight {bad}")));
            }
        }
        Ok(())
    }

    /// Weighted inner product of two degree-`p` vectors.
    pub fn inner(&self, p: usize, a: &[f64], b: &[f64]) -> f64 {
        self.weights[p].iter().zip(a).zip(b).map(|((w, x), y)| w * x * y).sum()
    }

    pub fn norm(&self, p: usize, a: &[f64]) -> f64 {
        self.inner(p, a, a).sqrt()
    }

    pub(crate) fn sqrt_diag(&self, p: usize, inverse: bool) -> DMatrix<f64> {
        let w = &self.weights[p];
        DMatrix::from_fn(w.len(), w.len(), |r, c| {
            if r != c {
                0.0
            } else if inverse {
                1.0 / w[r].sqrt()
            } else {
                w[r].sqrt()
            }
        })
    }
}

/// Boundary operator `∂_p` as an integer matrix, rows indexed by
/// `(p-1)`-simplices and columns by `p`-simplices. Valid for `1 <= p <= dim`.
pub fn boundary_matrix(k: &SimplicialComplex, p: usize) -> Result<IntMatrix, ExcalcError> {
    if p == 0 || p > k.dimension() {
        return Err(ExcalcError::Degree {
            degree: p,
            min: 1,
            max: k.dimension(),
        });
    }
    Ok(boundary_unchecked(k, p))
}

fn boundary_unchecked(k: &SimplicialComplex, p: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(k.count(p - 1), k.count(p));
    for (col, s) in k.simplices(p).iter().enumerate() {
        for i in 0..s.len() {
            let mut face = s.clone();
            face.remove(i);
            let row = k.index_of(&face).expect("complex is closed under faces");
            m.set(row, col, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Coboundary `d_p = ∂_{p+1}^T`, mapping `p`-cochains to `(p+1)`-cochains.
/// Valid for `0 <= p < dim`.
pub fn coboundary_matrix(k: &SimplicialComplex, p: usize) -> Result<IntMatrix, ExcalcError> {
    if p >= k.dimension() {
        return Err(ExcalcError::Degree {
            degree: p,
            min: 0,
            max: k.dimension().saturating_sub(1),
        });
    }
    Ok(boundary_unchecked(k, p + 1).transpose())
}

/// `d_p` as a real matrix, with the convention that it is `0 x n_p` at the
/// top degree.
fn coboundary_f64(k: &SimplicialComplex, p: usize) -> DMatrix<f64> {
    if p >= k.dimension() {
        DMatrix::zeros(0, k.count(p))
    } else {
        boundary_unchecked(k, p + 1).transpose().to_f64()
    }
}

/// `W_{p+1}^{1/2} d_p W_p^{-1/2}`: the coboundary expressed in orthonormal
/// coordinates of the metric, so that its transpose is the codifferential.
pub fn weighted_coboundary(k: &SimplicialComplex, p: usize, metric: &HodgeMetric) -> Result<DMatrix<f64>, ExcalcError> {
    metric.check(k)?;
    if p > k.dimension() {
        return Err(ExcalcError::Degree {
            degree: p,
            min: 0,
            max: k.dimension(),
        });
    }
    let d = coboundary_f64(k, p);
    if d.nrows() == 0 {
        return Ok(d);
    }
    Ok(metric.sqrt_diag(p + 1, false) * d * metric.sqrt_diag(p, true))
}

fn check_degree(k: &SimplicialComplex, p: usize) -> Result<(), ExcalcError> {
    if p > k.dimension() {
        return Err(ExcalcError::Degree {
            degree: p,
            min: 0,
            max: k.dimension(),
        });
    }
    Ok(())
}

/// Symmetrized up-Laplacian `A_p^T A_p` with `A_p` the weighted coboundary;
/// similar to `(δd)_p` via `W_p^{1/2}`.
pub fn up_laplacian(k: &SimplicialComplex, p: usize, metric: &HodgeMetric) -> Result<DMatrix<f64>, ExcalcError> {
    check_degree(k, p)?;
    let a = weighted_coboundary(k, p, metric)?;
    Ok(a.transpose() * a)
}

/// Symmetrized down-Laplacian `A_{p-1} A_{p-1}^T`, similar to `(dδ)_p`.
/// Zero at degree 0.
pub fn down_laplacian(k: &SimplicialComplex, p: usize, metric: &HodgeMetric) -> Result<DMatrix<f64>, ExcalcError> {
    check_degree(k, p)?;
    metric.check(k)?;
    if p == 0 {
        let n = k.count(0);
        return Ok(DMatrix::zeros(n, n));
    }
    let a = weighted_coboundary(k, p - 1, metric)?;
    Ok(&a * a.transpose())
}

/// Hodge Laplacian `Δ_p = δ_{p+1} d_p + d_{p-1} δ_p` in cochain coordinates,
/// where `δ_{p+1} = W_p^{-1} d_p^T W_{p+1}`. Self-adjoint in the weighted
/// inner product; exactly symmetric for unit weights.
pub fn hodge_laplacian(k: &SimplicialComplex, p: usize, metric: &HodgeMetric) -> Result<DMatrix<f64>, ExcalcError> {
    check_degree(k, p)?;
    metric.check(k)?;
    let n = k.count(p);
    let winv = |q: usize| DMatrix::from_fn(k.count(q), k.count(q), |r, c| if r == c { 1.0 / metric.weights(q)[r] } else { 0.0 });
    let w = |q: usize| DMatrix::from_fn(k.count(q), k.count(q), |r, c| if r == c { metric.weights(q)[r] } else { 0.0 });
    let mut lap = DMatrix::zeros(n, n);
    if p < k.dimension() {
        let d = coboundary_f64(k, p);
        lap += winv(p) * d.transpose() * w(p + 1) * &d;
    }
    if p > 0 {
        let d = coboundary_f64(k, p - 1);
        lap += &d * winv(p - 1) * d.transpose() * w(p);
    }
    Ok(lap)
}

/// Betti numbers `b_p = dim ker ∂_p - rank ∂_{p+1}` over the rationals.
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    let dim = k.dimension();
    // ranks[p] = rank ∂_p, with ∂_0 = 0 and ∂_{dim+1} = 0
    let mut ranks = vec![0usize; dim + 2];
    for (p, rank) in ranks.iter_mut().enumerate().take(dim + 1).skip(1) {
        *rank = boundary_unchecked(k, p).rational_rank();
    }
    (0..=dim).map(|p| k.count(p) - ranks[p] - ranks[p + 1]).collect()
}

/// `χ = Σ (-1)^p b_p`, cross-checked against the alternating simplex count.
pub fn euler_characteristic(k: &SimplicialComplex) -> Result<i64, ExcalcError> {
    let alt = |xs: Vec<usize>| -> i64 {
        xs.into_iter()
            .enumerate()
            .map(|(p, n)| if p % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    };
    let from_counts = alt(k.counts());
    let from_betti = alt(betti_numbers(k));
    if from_counts != from_betti {
        return Err(ExcalcError::Consistency { from_counts, from_betti });
    }
    Ok(from_betti)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solid() -> SimplicialComplex {
        SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap()
    }

    fn circle() -> SimplicialComplex {
        SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn sphere() -> SimplicialComplex {
        SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn triangle_boundary_column() {
        let b = boundary_matrix(&solid(), 2).unwrap();
        let col: Vec<i64> = (0..3).map(|r| b.get(r, 0)).collect();
        assert_eq!(col, vec![1, -1, 1]);
    }

    #[test]
    fn boundary_degree_errors() {
        assert!(matches!(boundary_matrix(&circle(), 0), Err(ExcalcError::Degree { .. })));
        assert!(matches!(boundary_matrix(&circle(), 2), Err(ExcalcError::Degree { .. })));
        assert!(matches!(coboundary_matrix(&circle(), 1), Err(ExcalcError::Degree { .. })));
    }

    #[test]
    fn circle_ranks() {
        assert_eq!(boundary_matrix(&circle(), 1).unwrap().rational_rank(), 2);
        assert_eq!(coboundary_matrix(&circle(), 0).unwrap().rational_rank(), 2);
    }

    #[test]
    fn nilpotent_on_sphere() {
        let k = sphere();
        assert!(boundary_matrix(&k, 1).unwrap().mul(&boundary_matrix(&k, 2).unwrap()).is_zero());
        assert!(coboundary_matrix(&k, 1).unwrap().mul(&coboundary_matrix(&k, 0).unwrap()).is_zero());
    }

    #[test]
    fn betti_and_euler() {
        assert_eq!(betti_numbers(&circle()), vec![1, 1]);
        assert_eq!(betti_numbers(&sphere()), vec![1, 0, 1]);
        assert_eq!(betti_numbers(&solid()), vec![1, 0, 0]);
        assert_eq!(euler_characteristic(&sphere()).unwrap(), 2);
        assert_eq!(euler_characteristic(&circle()).unwrap(), 0);
        assert_eq!(euler_characteristic(&solid()).unwrap(), 1);
    }

    #[test]
    fn triangle_graph_laplacian() {
        let k = solid();
        let lap = hodge_laplacian(&k, 0, &HodgeMetric::unit(&k)).unwrap();
        let expected = DMatrix::from_row_slice(3, 3, &[2.0, -1.0, -1.0, -1.0, 2.0, -1.0, -1.0, -1.0, 2.0]);
        assert_eq!(lap, expected);
    }

    #[test]
    fn metric_validation() {
        let k = circle();
        assert!(HodgeMetric::new(&k, vec![vec![1.0; 3], vec![1.0; 2]]).is_err());
        assert!(HodgeMetric::new(&k, vec![vec![1.0; 3], vec![1.0, 0.0, 1.0]]).is_err());
        let m = HodgeMetric::new(&k, vec![vec![1.0; 3], vec![2.0; 3]]).unwrap();
        assert!(hodge_laplacian(&k, 1, &m).is_ok());
        let wrong = HodgeMetric::unit(&solid());
        assert!(matches!(hodge_laplacian(&k, 0, &wrong), Err(ExcalcError::Metric(_))));
    }

    #[test]
    fn cochain_length_checked() {
        let k = circle();
        assert!(Cochain::new(&k, 1, vec![1.0, 2.0]).is_err());
        assert!(Cochain::new(&k, 1, vec![1.0, 2.0, 3.0]).is_ok());
    }
}
