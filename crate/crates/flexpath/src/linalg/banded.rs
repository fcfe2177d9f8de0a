//! Banded matrices with an LAPACK-style LU factorization.
//!
//! Storage is column-major band format: entry (i, j) with
//! `-kl <= i - j <= ku` lives at `data[j * ldab + (kl + ku + i - j)]` where
//! `ldab = 2*kl + ku + 1`. The extra `kl` leading rows per column hold the
//! fill-in produced by partial pivoting.

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone)]
pub struct Banded<R: Real> {
    n: usize,
    kl: usize,
    ku: usize,
    ldab: usize,
    data: Vec<R>,
}

impl<R: Real> Banded<R> {
    /// Zero matrix of size `n` with `kl` sub- and `ku` superdiagonals.
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        assert!(n > 0);
        let ldab = 2 * kl + ku + 1;
        Banded {
            n,
            kl,
            ku,
            ldab,
            data: vec![R::zero(); ldab * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn bandwidths(&self) -> (usize, usize) {
        (self.kl, self.ku)
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        let d = i as isize - j as isize;
        if i >= self.n || j >= self.n || d > self.kl as isize || -d > self.ku as isize {
            return None;
        }
        Some(j * self.ldab + (self.kl as isize + self.ku as isize + d) as usize)
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.slot(i, j).map_or(R::zero(), |s| self.data[s])
    }

    /// Sets entry (i, j); panics if outside the band.
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        let s = self.slot(i, j).expect("entry outside band");
        self.data[s] = v;
    }

    /// Adds `v` into entry (i, j); panics if outside the band.
    pub fn add(&mut self, i: usize, j: usize, v: R) {
        let s = self.slot(i, j).expect("entry outside band");
        self.data[s] += v;
    }

    /// Overwrites row `i` with zeros inside the band.
    pub fn clear_row(&mut self, i: usize) {
        let lo = i.saturating_sub(self.kl);
        let hi = (i + self.ku).min(self.n - 1);
        for j in lo..=hi {
            if let Some(s) = self.slot(i, j) {
                self.data[s] = R::zero();
            }
        }
    }

    /// `y = self * x`.
    pub fn matvec(&self, x: &[R]) -> Vec<R> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![R::zero(); self.n];
        for j in 0..self.n {
            let xj = x[j];
            if xj == R::zero() {
                continue;
            }
            let lo = j.saturating_sub(self.ku);
            let hi = (j + self.kl).min(self.n - 1);
            for i in lo..=hi {
                y[i] += self.get(i, j) * xj;
            }
        }
        y
    }

    /// Quadratic form `x^T self y`.
    pub fn quadratic_form(&self, x: &[R], y: &[R]) -> R {
        let my = self.matvec(y);
        x.iter().zip(&my).fold(R::zero(), |a, (&xi, &yi)| a + xi * yi)
    }

    /// `self += alpha * other`; bandwidths of `other` must fit inside ours.
    pub fn add_scaled(&mut self, alpha: R, other: &Banded<R>) {
        assert_eq!(self.n, other.n);
        assert!(other.kl <= self.kl && other.ku <= self.ku);
        for j in 0..self.n {
            let lo = j.saturating_sub(other.ku);
            let hi = (j + other.kl).min(self.n - 1);
            for i in lo..=hi {
                let v = other.get(i, j);
                if v != R::zero() {
                    self.add(i, j, alpha * v);
                }
            }
        }
    }

    /// Expands to row-major dense storage (testing and eigen transforms).
    pub fn to_dense(&self) -> Vec<R> {
        let mut a = vec![R::zero(); self.n * self.n];
        for j in 0..self.n {
            let lo = j.saturating_sub(self.ku);
            let hi = (j + self.kl).min(self.n - 1);
            for i in lo..=hi {
                a[i * self.n + j] = self.get(i, j);
            }
        }
        a
    }

    /// LU factorization with partial pivoting (band variant of `getrf`).
    pub fn factor(&self) -> Result<BandedLu<R>> {
        let n = self.n;
        let (kl, ku) = (self.kl, self.ku);
        let kv = kl + ku; // upper bandwidth of U including fill
        let ldab = self.ldab;
        let mut ab = self.data.clone();
        let mut piv = vec![0usize; n];
        let mut ju = 0usize;

        let at = |i_in_col: usize, j: usize| j * ldab + i_in_col;

        for j in 0..n {
            let km = kl.min(n - 1 - j); // active rows below the diagonal
            // partial pivot over column j, storage rows kv..=kv+km
            let mut jp = 0usize;
            let mut best = ab[at(kv, j)].abs();
            for p in 1..=km {
                let v = ab[at(kv + p, j)].abs();
                if v > best {
                    best = v;
                    jp = p;
                }
            }
            piv[j] = j + jp;
            if ab[at(kv + jp, j)] == R::zero() {
                return Err(Error::NumericalFailure(format!(
                    "banded LU: zero pivot at column {j}"
                )));
            }
            ju = ju.max((j + ku + jp).min(n - 1));
            if jp != 0 {
                // swap rows j and j+jp over columns j..=ju
                for c in j..=ju {
                    let r1 = (kv + j).checked_sub(c).expect("row j inside band");
                    let r2 = kv + j + jp - c;
                    ab.swap(at(r1, c), at(r2, c));
                }
            }
            if km > 0 {
                let pivot = ab[at(kv, j)];
                for p in 1..=km {
                    let s = at(kv + p, j);
                    ab[s] = ab[s] / pivot;
                }
                for c in (j + 1)..=ju {
                    let ujc = ab[at(kv + j - c, c)];
                    if ujc != R::zero() {
                        for p in 1..=km {
                            let s = at(kv + j + p - c, c);
                            let l = ab[at(kv + p, j)];
                            ab[s] = ab[s] - l * ujc;
                        }
                    }
                }
            }
        }
        Ok(BandedLu {
            n,
            kl,
            ku,
            ldab,
            ab,
            piv,
        })
    }

    /// Factors and solves in one call.
    pub fn solve(&self, b: &[R]) -> Result<Vec<R>> {
        self.factor().map(|lu| lu.solve(b))
    }
}

/// Factored form produced by [`Banded::factor`].
#[derive(Debug, Clone)]
pub struct BandedLu<R: Real> {
    n: usize,
    kl: usize,
    ku: usize,
    ldab: usize,
    ab: Vec<R>,
    piv: Vec<usize>,
}

impl<R: Real> BandedLu<R> {
    pub fn solve(&self, b: &[R]) -> Vec<R> {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let kv = self.kl + self.ku;
        let at = |i_in_col: usize, j: usize| j * self.ldab + i_in_col;
        let mut x = b.to_vec();

        // forward: apply P and L
        for j in 0..n {
            let p = self.piv[j];
            if p != j {
                x.swap(j, p);
            }
            let km = self.kl.min(n - 1 - j);
            let xj = x[j];
            if xj != R::zero() {
                for i in 1..=km {
                    let l = self.ab[at(kv + i, j)];
                    x[j + i] = x[j + i] - l * xj;
                }
            }
        }
        // backward: U x = y
        for j in (0..n).rev() {
            let lo = j.saturating_sub(kv);
            x[j] = x[j] / self.ab[at(kv, j)];
            let xj = x[j];
            if xj != R::zero() {
                for i in lo..j {
                    let u = self.ab[at(kv + i - j, j)];
                    x[i] = x[i] - u * xj;
                }
            }
        }
        x
    }
}
