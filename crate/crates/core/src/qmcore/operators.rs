use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::QmError;
use crate::C64;

const HERMITIAN_TOL: f64 = 1e-12;

/// A normalized ket over a finite basis.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    amplitudes: DVector<C64>,
}

impl QuantumState {
    /// Normalizes `amplitudes`; the zero vector is rejected.
    pub fn new(amplitudes: DVector<C64>) -> Result<Self, QmError> {
        let n = amplitudes.norm();
        if !(n.is_finite() && n > 0.0) {
            return Err(QmError::State("cannot normalize a zero or non-finite vector".into()));
        }
        Ok(QuantumState {
            amplitudes: amplitudes / C64::new(n, 0.0),
        })
    }

    pub fn basis(dim: usize, i: usize) -> Result<Self, QmError> {
        if i >= dim {
            return Err(QmError::State(format!("basis index {i} out of range for dimension {dim}")));
        }
        let mut v = DVector::zeros(dim);
        v[i] = C64::new(1.0, 0.0);
        Ok(QuantumState { amplitudes: v })
    }

    pub fn random(dim: usize, seed: u64) -> Result<Self, QmError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = DVector::from_fn(dim, |_, _| {
            C64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng))
        });
        QuantumState::new(v)
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QuantumState) -> C64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// `⟨ψ|F|ψ⟩`, real for Hermitian `F`.
    pub fn expectation(&self, f: &HermitianOperator) -> Result<f64, QmError> {
        check_dim(f.dim(), self.dim())?;
        Ok(self.amplitudes.dotc(&(&f.matrix * &self.amplitudes)).re)
    }
}

/// A complex square matrix equal to its conjugate transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: DMatrix<C64>,
}

fn check_dim(a: usize, b: usize) -> Result<(), QmError> {
    if a != b {
        return Err(QmError::Dimension { expected: a, got: b });
    }
    Ok(())
}

impl HermitianOperator {
    pub fn new(matrix: DMatrix<C64>) -> Result<Self, QmError> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            return Err(QmError::Operator("operator must be a nonempty square matrix".into()));
        }
        let scale = matrix.iter().fold(1.0_f64, |m, z| m.max(z.norm()));
        let defect = (&matrix - matrix.adjoint()).iter().fold(0.0_f64, |m, z| m.max(z.norm()));
        if !(defect <= HERMITIAN_TOL * scale) {
            return Err(QmError::Operator(format!("not Hermitian (defect {defect:.3e})")));
        }
        Ok(HermitianOperator { matrix })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self, QmError> {
        HermitianOperator::new(DMatrix::from_diagonal(&DVector::from_iterator(
            diag.len(),
            diag.iter().map(|x| C64::new(*x, 0.0)),
        )))
    }

    pub fn identity(dim: usize) -> Result<Self, QmError> {
        HermitianOperator::new(DMatrix::identity(dim, dim))
    }

    /// Gaussian (GUE-like) random Hermitian matrix.
    pub fn random(dim: usize, seed: u64) -> Result<Self, QmError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = DMatrix::from_fn(dim, dim, |_, _| {
            C64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng))
        });
        HermitianOperator::new((&a + a.adjoint()) * C64::new(0.5, 0.0))
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn scaled(&self, s: f64) -> HermitianOperator {
        HermitianOperator {
            matrix: &self.matrix * C64::new(s, 0.0),
        }
    }

    /// Ascending eigenvalues and the unitary whose columns are the eigenvectors.
    pub fn eigh(&self) -> (Vec<f64>, DMatrix<C64>) {
        let eig = self.matrix.clone().symmetric_eigen();
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|a, b| eig.eigenvalues[*a].total_cmp(&eig.eigenvalues[*b]));
        let values = order.iter().map(|i| eig.eigenvalues[*i]).collect();
        let vectors = DMatrix::from_fn(self.dim(), self.dim(), |r, c| eig.eigenvectors[(r, order[c])]);
        (values, vectors)
    }

    /// `e^{-iHt}` from the spectral decomposition.
    pub fn propagator(&self, t: f64) -> DMatrix<C64> {
        let (values, v) = self.eigh();
        let phases = DMatrix::from_diagonal(&DVector::from_iterator(
            values.len(),
            values.iter().map(|e| C64::from_polar(1.0, -e * t)),
        ));
        &v * phases * v.adjoint()
    }
}

/// Pauli matrix `σ_i`, `i ∈ {1, 2, 3}`.
pub fn pauli(i: usize) -> Result<HermitianOperator, QmError> {
    let (o, z, im) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 1.0));
    let m = match i {
        1 => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        2 => DMatrix::from_row_slice(2, 2, &[z, -im, im, z]),
        3 => DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => return Err(QmError::Operator(format!("no Pauli matrix σ_{i}"))),
    };
    HermitianOperator::new(m)
}

fn check_pair(a: &DMatrix<C64>, b: &DMatrix<C64>) -> Result<(), QmError> {
    if a.shape() != b.shape() || !a.is_square() {
        return Err(QmError::Dimension {
            expected: a.nrows(),
            got: b.nrows(),
        });
    }
    Ok(())
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &DMatrix<C64>, b: &DMatrix<C64>) -> Result<DMatrix<C64>, QmError> {
    check_pair(a, b)?;
    Ok(a * b - b * a)
}

/// `{A, B} = AB + BA`.
pub fn anticommutator(a: &DMatrix<C64>, b: &DMatrix<C64>) -> Result<DMatrix<C64>, QmError> {
    check_pair(a, b)?;
    Ok(a * b + b * a)
}

/// `e^{-iHt}|ψ₀⟩` (ħ = 1).
pub fn evolve_schrodinger(h: &HermitianOperator, psi0: &QuantumState, t: f64) -> Result<QuantumState, QmError> {
    check_dim(h.dim(), psi0.dim())?;
    Ok(QuantumState {
        amplitudes: h.propagator(t) * psi0.amplitudes(),
    })
}

/// `F(t) = S†(t) F S(t)` with `S(t) = e^{-iHt}`.
pub fn heisenberg_evolve(f: &HermitianOperator, h: &HermitianOperator, t: f64) -> Result<HermitianOperator, QmError> {
    check_dim(h.dim(), f.dim())?;
    let s = h.propagator(t);
    let ft = s.adjoint() * f.matrix() * &s;
    // remove rounding-level anti-Hermitian noise
    let sym = (&ft + ft.adjoint()) * C64::new(0.5, 0.0);
    HermitianOperator::new(sym)
}
