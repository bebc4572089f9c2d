use nalgebra::Matrix2;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::C64;

/// `a·I + i(b σ¹ + c σ² + d σ³)` stored as the unit quaternion `[a, b, c, d]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Su2Matrix {
    pub q: [f64; 4],
}

impl Su2Matrix {
    pub const IDENTITY: Su2Matrix = Su2Matrix { q: [1.0, 0.0, 0.0, 0.0] };

    /// Normalizes the input; `None` for a zero or non-finite quaternion.
    pub fn from_quaternion(q: [f64; 4]) -> Option<Self> {
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(n.is_finite() && n > 0.0) {
            return None;
        }
        Some(Su2Matrix { q: q.map(|x| x / n) })
    }

    /// `exp(-(i/2) θ n̂·σ)` for a rotation by `θ` about `axis`.
    pub fn from_axis_angle(axis: [f64; 3], theta: f64) -> Option<Self> {
        let n = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(n.is_finite() && n > 0.0) {
            return None;
        }
        let (s, c) = (theta / 2.0).sin_cos();
        Some(Su2Matrix {
            q: [c, -s * axis[0] / n, -s * axis[1] / n, -s * axis[2] / n],
        })
    }

    /// Haar-distributed element: a normalized 4D Gaussian vector.
    pub fn haar<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
            if let Some(u) = Su2Matrix::from_quaternion(q) {
                return u;
            }
        }
    }

    pub fn mul(&self, other: &Su2Matrix) -> Su2Matrix {
        let [a1, b1, c1, d1] = self.q;
        let [a2, b2, c2, d2] = other.q;
        // (a1 + i v1·σ)(a2 + i v2·σ) = a1a2 - v1·v2 + i(a1 v2 + a2 v1 - v1×v2)·σ
        Su2Matrix {
            q: [
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + a2 * b1 - (c1 * d2 - d1 * c2),
                a1 * c2 + a2 * c1 - (d1 * b2 - b1 * d2),
                a1 * d2 + a2 * d1 - (b1 * c2 - c1 * b2),
            ],
        }
    }

    pub fn dagger(&self) -> Su2Matrix {
        let [a, b, c, d] = self.q;
        Su2Matrix { q: [a, -b, -c, -d] }
    }

    /// `Tr U = 2a`.
    pub fn trace(&self) -> f64 {
        2.0 * self.q[0]
    }

    pub fn norm_defect(&self) -> f64 {
        (self.q.iter().map(|x| x * x).sum::<f64>() - 1.0).abs()
    }

    /// Largest component difference.
    pub fn distance(&self, other: &Su2Matrix) -> f64 {
        self.q.iter().zip(&other.q).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    pub fn to_matrix(&self) -> Matrix2<C64> {
        let [a, b, c, d] = self.q;
        Matrix2::new(C64::new(a, d), C64::new(c, b), C64::new(-c, b), C64::new(a, -d))
    }
}

impl std::ops::Mul for Su2Matrix {
    type Output = Su2Matrix;
    fn mul(self, rhs: Su2Matrix) -> Su2Matrix {
        Su2Matrix::mul(&self, &rhs)
    }
}
