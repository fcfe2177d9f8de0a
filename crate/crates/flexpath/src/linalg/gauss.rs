//! Gauss-Legendre quadrature on [-1, 1].

use crate::scalar::Real;

/// Nodes and weights of the `n`-point Gauss-Legendre rule, exact for
/// polynomials of degree `2n - 1`.
pub fn gauss_legendre<R: Real>(n: usize) -> (Vec<R>, Vec<R>) {
    assert!(n >= 1);
    let mut nodes = vec![R::zero(); n];
    let mut weights = vec![R::zero(); n];
    let nf = R::of_usize(n);
    for i in 0..(n + 1) / 2 {
        // Chebyshev-based initial guess, then Newton on P_n
        let mut x = (R::PI() * (R::of_usize(i) + R::of(0.75)) / (nf + R::of(0.5))).cos();
        let mut dp = R::zero();
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x = x - dx;
            if dx.abs() <= R::epsilon() * (x.abs() + R::one()) {
                break;
            }
        }
        let w = R::of(2.0) / ((R::one() - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = R::zero();
    }
    (nodes, weights)
}

/// Value and derivative of the Legendre polynomial P_n at x.
fn legendre<R: Real>(n: usize, x: R) -> (R, R) {
    let mut p0 = R::one();
    let mut p1 = x;
    if n == 0 {
        return (p0, R::zero());
    }
    for k in 2..=n {
        let kf = R::of_usize(k);
        let p2 = ((R::of(2.0) * kf - R::one()) * x * p1 - (kf - R::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = R::of_usize(n) * (x * p1 - p0) / (x * x - R::one());
    (p1, d)
}
