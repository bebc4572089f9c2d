//! Small dense linear-algebra helpers shared by the numerical modules.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Relative threshold below which an eigenvalue counts as a zero mode.
pub const ZERO_MODE_RTOL: f64 = 1e-9;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Exact product. Panics on dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in IntMatrix::mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] += a * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) as f64)
    }

    /// Rank over the rationals, by fraction-exact Gaussian elimination.
    pub fn rational_rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| BigRational::from_integer(BigInt::from(self.get(r, c))))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = BigRational::one() / m[rank][col].clone();
            for c in col..self.cols {
                m[rank][c] = &m[rank][c] * &inv;
            }
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..self.cols {
                        let delta = &f * &m[rank][c];
                        m[r][c] -= delta;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Eigen-decomposition of a real symmetric matrix with eigenvalues sorted
/// ascending; eigenvector `i` is column `i` of the returned matrix.
pub fn sorted_symmetric_eigen(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), DMatrix::zeros(0, 0));
    }
    let sym = (m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Absolute zero-mode cutoff for a spectrum: `ZERO_MODE_RTOL` times the
/// largest magnitude.
pub fn zero_cutoff(values: &[f64]) -> f64 {
    let max = values.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    ZERO_MODE_RTOL * max
}

/// Eigenvalues strictly above the zero-mode cutoff, ascending.
pub fn nonzero_spectrum(m: &DMatrix<f64>) -> Vec<f64> {
    let (values, _) = sorted_symmetric_eigen(m);
    let cut = zero_cutoff(&values);
    values.into_iter().filter(|v| *v > cut).collect()
}

/// Minimum-norm least-squares solution of `a x = b`.
pub fn min_norm_solve(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    if a.nrows() == 0 || a.ncols() == 0 {
        return DVector::zeros(a.ncols());
    }
    // pseudo-inverse through the smaller Gram matrix; nalgebra's SVD solve
    // is unreliable on rank-deficient input
    let at = a.transpose();
    if a.nrows() <= a.ncols() {
        let gram = a * &at;
        &at * gram_pinv_apply(&gram, b)
    } else {
        let gram = &at * a;
        gram_pinv_apply(&gram, &(&at * b))
    }
}

fn gram_pinv_apply(gram: &DMatrix<f64>, v: &DVector<f64>) -> DVector<f64> {
    let (values, vectors) = sorted_symmetric_eigen(gram);
    let lmax = values.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let cut = lmax * 1e-12 * gram.nrows() as f64;
    let mut out = DVector::zeros(gram.nrows());
    for (i, lam) in values.iter().enumerate() {
        if *lam > cut {
            let col = vectors.column(i);
            out += col * (col.dot(v) / lam);
        }
    }
    out
}

/// Compare two ascending spectra entrywise with a relative tolerance.
pub fn spectra_match(a: &[f64], b: &[f64], rtol: f64) -> bool {
    a.len() == b.len()
        && a
            .iter()
            .zip(b)
            .all(|(x, y)| (x - y).abs() <= rtol * x.abs().max(y.abs()).max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let mut m = IntMatrix::zeros(3, 3);
        // rows: (1,1,0), (0,1,1), (1,2,1) -> third = first + second
        for (r, row) in [[1, 1, 0], [0, 1, 1], [1, 2, 1]].iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, *v);
            }
        }
        assert_eq!(m.rational_rank(), 2);
        assert_eq!(IntMatrix::zeros(2, 5).rational_rank(), 0);
    }

    #[test]
    fn min_norm_picks_shortest_solution() {
        let a = DMatrix::from_row_slice(1, 2, &[1.0, 1.0]);
        let b = DVector::from_vec(vec![2.0]);
        let x = min_norm_solve(&a, &b);
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }
}
