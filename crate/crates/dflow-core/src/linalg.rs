//! Small dense linear algebra used throughout the crate.
//!
//! Problems here are desk scale (d up to a few hundred), so everything is a
//! plain row-major `Vec<f64>` matrix. The symmetric eigendecomposition is a
//! cyclic Jacobi sweep, which is all the matrix exponential of a symmetric
//! matrix needs.

use alloc::vec;
use alloc::vec::Vec;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// `y += c * x`
pub fn axpy(c: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}

pub fn scale(c: f64, x: &mut [f64]) {
    for xi in x.iter_mut() {
        *xi *= c;
    }
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn all_finite(a: &[f64]) -> bool {
    a.iter().all(|x| x.is_finite())
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub n: usize,
    pub data: Vec<f64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_scaled(&mut self, c: f64, other: &Mat) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        debug_assert_eq!(x.len(), n);
        let mut y = vec![0.0; n];
        for i in 0..n {
            y[i] = dot(&self.data[i * n..(i + 1) * n], x);
        }
        y
    }

    pub fn matvec_t(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        debug_assert_eq!(x.len(), n);
        let mut y = vec![0.0; n];
        for j in 0..n {
            let xj = x[j];
            for i in 0..n {
                y[i] += self.data[j * n + i] * xj;
            }
        }
        y
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        let n = self.n;
        debug_assert_eq!(n, other.n);
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(libm::fabs(*v)))
    }

    /// `max |A_ij - A_ji|`
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max(libm::fabs(self.get(i, j) - self.get(j, i)));
            }
        }
        worst
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|v| v * v).sum())
    }

    /// Rank-one update `self += c * v v^T`.
    pub fn add_outer(&mut self, c: f64, v: &[f64]) {
        let n = self.n;
        debug_assert_eq!(v.len(), n);
        for i in 0..n {
            let cvi = c * v[i];
            for j in 0..n {
                self.data[i * n + j] += cvi * v[j];
            }
        }
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, V)` with `A = V diag(w) V^T`, columns of `V` the
/// eigenvectors. Input asymmetry is averaged away first.
pub fn sym_eigen(a: &Mat) -> (Vec<f64>, Mat) {
    let n = a.n;
    let mut m = a.clone();
    // symmetrize
    for i in 0..n {
        for j in (i + 1)..n {
            let s = 0.5 * (m.get(i, j) + m.get(j, i));
            m.set(i, j, s);
            m.set(j, i, s);
        }
    }
    let mut v = Mat::identity(n);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m.get(i, j) * m.get(i, j);
            }
        }
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if libm::fabs(apq) < 1e-300 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + libm::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    m.set(k, p, c * mkp - s * mkq);
                    m.set(k, q, s * mkp + c * mkq);
                }
                for k in 0..n {
                    let mpk = m.get(p, k);
                    let mqk = m.get(q, k);
                    m.set(p, k, c * mpk - s * mqk);
                    m.set(q, k, s * mpk + c * mqk);
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    let w = (0..n).map(|i| m.get(i, i)).collect();
    (w, v)
}

/// Matrix exponential of a symmetric matrix via eigendecomposition:
/// `exp(A) = V diag(exp(w)) V^T`. The result is symmetric positive definite
/// by construction.
pub fn expm_symmetric(a: &Mat) -> Mat {
    let n = a.n;
    let (w, v) = sym_eigen(a);
    let mut out = Mat::zeros(n);
    for k in 0..n {
        let ew = libm::exp(w[k]);
        for i in 0..n {
            let c = ew * v.get(i, k);
            for j in 0..n {
                out.data[i * n + j] += c * v.get(j, k);
            }
        }
    }
    // exact symmetry, eigen route can leave ~1e-16 asymmetry
    for i in 0..n {
        for j in (i + 1)..n {
            let s = 0.5 * (out.get(i, j) + out.get(j, i));
            out.set(i, j, s);
            out.set(j, i, s);
        }
    }
    out
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue(a: &Mat) -> f64 {
    let (w, _) = sym_eigen(a);
    w.iter().fold(f64::INFINITY, |m, x| m.min(*x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_diagonalizes_2x2() {
        let mut a = Mat::zeros(2);
        a.data.copy_from_slice(&[2.0, 1.0, 1.0, 2.0]);
        let (mut w, _) = sym_eigen(&a);
        w.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((w[0] - 1.0).abs() < 1e-12);
        assert!((w[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let e = expm_symmetric(&Mat::zeros(3));
        let diff: f64 = e
            .data
            .iter()
            .zip(&Mat::identity(3).data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(diff < 1e-14);
    }

    #[test]
    fn expm_matches_series_on_random_symmetric() {
        // exp by Taylor series as an independent route
        let mut a = Mat::zeros(3);
        let vals = [0.3, -0.1, 0.2, -0.1, 0.5, 0.05, 0.2, 0.05, -0.4];
        a.data.copy_from_slice(&vals);
        let e = expm_symmetric(&a);
        let mut series = Mat::identity(3);
        let mut term = Mat::identity(3);
        for k in 1..30 {
            term = term.matmul(&a);
            scale(1.0 / k as f64, &mut term.data);
            series.add_scaled(1.0, &term);
        }
        for (x, y) in e.data.iter().zip(&series.data) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }
}
