//! Minimal dense kernels for the modal eigenproblem.
//!
//! Only what the generalized symmetric solve needs: Cholesky, triangular
//! solves, and a cyclic Jacobi eigensolver. Matrices are row-major.

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct Dense<R: Real> {
    n: usize,
    data: Vec<R>,
}

impl<R: Real> Dense<R> {
    pub fn zeros(n: usize) -> Self {
        Dense {
            n,
            data: vec![R::zero(); n * n],
        }
    }

    pub fn from_row_major(n: usize, data: Vec<R>) -> Self {
        assert_eq!(data.len(), n * n);
        Dense { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> R {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.n + j] = v;
    }

    /// Cholesky factor L with A = L L^T; fails if not positive definite.
    pub fn cholesky(&self) -> Result<Dense<R>> {
        let n = self.n;
        let mut l = Dense::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s = s - l.get(i, k) * l.get(j, k);
                }
                if i == j {
                    if s <= R::zero() {
                        return Err(Error::NumericalFailure(
                            "cholesky: matrix not positive definite".into(),
                        ));
                    }
                    l.set(i, j, s.sqrt());
                } else {
                    l.set(i, j, s / l.get(j, j));
                }
            }
        }
        Ok(l)
    }

    /// Solves L x = b for lower-triangular L (in place convention: returns x).
    pub fn solve_lower(&self, b: &[R]) -> Vec<R> {
        let n = self.n;
        let mut x = b.to_vec();
        for i in 0..n {
            let mut s = x[i];
            for k in 0..i {
                s = s - self.get(i, k) * x[k];
            }
            x[i] = s / self.get(i, i);
        }
        x
    }

    /// Solves L^T x = b for lower-triangular L.
    pub fn solve_lower_transpose(&self, b: &[R]) -> Vec<R> {
        let n = self.n;
        let mut x = b.to_vec();
        for i in (0..n).rev() {
            let mut s = x[i];
            for k in i + 1..n {
                s = s - self.get(k, i) * x[k];
            }
            x[i] = s / self.get(i, i);
        }
        x
    }

    /// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
    ///
    /// Returns eigenvalues ascending with matching eigenvector columns.
    pub fn jacobi_eigh(&self, max_sweeps: usize) -> Result<(Vec<R>, Dense<R>)> {
        let n = self.n;
        let mut a = self.clone();
        let mut v = Dense::zeros(n);
        for i in 0..n {
            v.set(i, i, R::one());
        }
        let tol = R::epsilon() * R::of(16.0);
        for _ in 0..max_sweeps {
            // off-diagonal Frobenius norm
            let mut off = R::zero();
            for i in 0..n {
                for j in i + 1..n {
                    off += a.get(i, j) * a.get(i, j);
                }
            }
            let mut diag = R::zero();
            for i in 0..n {
                diag += a.get(i, i) * a.get(i, i);
            }
            if off.sqrt() <= tol * (diag.sqrt() + R::one()) {
                let mut pairs: Vec<(usize, R)> =
                    (0..n).map(|i| (i, a.get(i, i))).collect();
                pairs.sort_by(|x, y| x.1.partial_cmp(&y.1).expect("finite eigenvalues"));
                let vals = pairs.iter().map(|p| p.1).collect();
                let mut vs = Dense::zeros(n);
                for (col, (orig, _)) in pairs.iter().enumerate() {
                    for r in 0..n {
                        vs.set(r, col, v.get(r, *orig));
                    }
                }
                return Ok((vals, vs));
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a.get(p, q);
                    if apq == R::zero() {
                        continue;
                    }
                    let app = a.get(p, p);
                    let aqq = a.get(q, q);
                    let theta = (aqq - app) / (R::of(2.0) * apq);
                    let t = {
                        let s = if theta >= R::zero() { R::one() } else { -R::one() };
                        s / (theta.abs() + (theta * theta + R::one()).sqrt())
                    };
                    let c = R::one() / (t * t + R::one()).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a.get(k, p);
                        let akq = a.get(k, q);
                        a.set(k, p, c * akp - s * akq);
                        a.set(k, q, s * akp + c * akq);
                    }
                    for k in 0..n {
                        let apk = a.get(p, k);
                        let aqk = a.get(q, k);
                        a.set(p, k, c * apk - s * aqk);
                        a.set(q, k, s * apk + c * aqk);
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
        Err(Error::NumericalFailure(
            "jacobi eigensolver did not converge".into(),
        ))
    }
}
