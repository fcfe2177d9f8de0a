//! Rest-to-rest trajectories for the arm extension r(t) and rotation θ(t).
//!
//! Trajectories are piecewise polynomials evaluated together with their first
//! three time derivatives; the third derivative (jerk) is the quantity the
//! controller limits. Two generators are provided: a cubic that zeroes the
//! endpoint velocities, and a quintic that additionally zeroes the endpoint
//! accelerations so the jerk stays bounded through the ends.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Highest polynomial degree a segment may carry.
pub const MAX_SEGMENT_DEGREE: usize = 7;

/// Value and first three time derivatives of a sampled quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicSample<R: Real = f64> {
    pub value: R,
    /// First derivative (velocity).
    pub d1: R,
    /// Second derivative (acceleration).
    pub d2: R,
    /// Third derivative (jerk).
    pub d3: R,
}

impl<R: Real> KinematicSample<R> {
    /// A quantity at rest: value `v`, all derivatives zero.
    pub fn at_rest(v: R) -> Self {
        KinematicSample {
            value: v,
            d1: R::zero(),
            d2: R::zero(),
            d3: R::zero(),
        }
    }
}

/// One polynomial piece `s(t) = sum c_k t^k` valid for `t` in `[0, duration]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialSegment<R: Real = f64> {
    coeffs: Vec<R>,
    duration: R,
}

impl<R: Real> PolynomialSegment<R> {
    /// Builds a segment from ascending-degree coefficients.
    pub fn new(coeffs: Vec<R>, duration: R) -> Result<Self> {
        if !(duration > R::zero()) {
            return Err(Error::invalid(format!(
                "segment duration must be positive, got {duration}"
            )));
        }
        if coeffs.is_empty() || coeffs.len() > MAX_SEGMENT_DEGREE + 1 {
            return Err(Error::invalid(format!(
                "segment degree must be between 0 and {MAX_SEGMENT_DEGREE}"
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("segment coefficients must be finite"));
        }
        Ok(PolynomialSegment { coeffs, duration })
    }

    /// Constant segment `s(t) = value`.
    pub fn constant(value: R, duration: R) -> Result<Self> {
        PolynomialSegment::new(vec![value], duration)
    }

    pub fn duration(&self) -> R {
        self.duration
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    /// Horner evaluation of the value and first three derivatives at `t`.
    ///
    /// The polynomial is defined for all `t`; range checking belongs to
    /// [`Trajectory::sample`].
    pub fn sample(&self, t: R) -> KinematicSample<R> {
        let mut c = [R::zero(); MAX_SEGMENT_DEGREE + 1];
        let n = self.coeffs.len();
        c[..n].copy_from_slice(&self.coeffs);

        let horner = |c: &[R]| {
            let mut acc = R::zero();
            for &ck in c.iter().rev() {
                acc = acc * t + ck;
            }
            acc
        };
        let value = horner(&c[..n]);

        // differentiate in place three times
        let mut len = n;
        let mut out = [R::zero(); 3];
        for (d, slot) in out.iter_mut().enumerate() {
            if len <= 1 {
                break;
            }
            for k in 1..len {
                c[k - 1] = c[k] * R::of_usize(k);
            }
            len -= 1;
            let _ = d;
            *slot = horner(&c[..len]);
        }
        KinematicSample {
            value,
            d1: out[0],
            d2: out[1],
            d3: out[2],
        }
    }
}

/// Cubic rest-to-rest profile: zero endpoint velocities.
///
/// `s(t) = q0 + (q1 - q0)(3τ² - 2τ³)` with `τ = t/T`.
pub fn cubic_rest_to_rest<R: Real>(q0: R, q1: R, total_time: R) -> Result<PolynomialSegment<R>> {
    if !(total_time > R::zero()) {
        return Err(Error::invalid(format!(
            "rest-to-rest duration must be positive, got {total_time}"
        )));
    }
    let dq = q1 - q0;
    let t2 = total_time * total_time;
    let t3 = t2 * total_time;
    PolynomialSegment::new(
        vec![
            q0,
            R::zero(),
            R::of(3.0) * dq / t2,
            R::of(-2.0) * dq / t3,
        ],
        total_time,
    )
}

/// Quintic rest-to-rest profile: zero endpoint velocities *and* accelerations.
///
/// `s(t) = q0 + (q1 - q0)(10τ³ - 15τ⁴ + 6τ⁵)`.
pub fn quintic_rest_to_rest<R: Real>(q0: R, q1: R, total_time: R) -> Result<PolynomialSegment<R>> {
    if !(total_time > R::zero()) {
        return Err(Error::invalid(format!(
            "rest-to-rest duration must be positive, got {total_time}"
        )));
    }
    let dq = q1 - q0;
    let t3 = total_time * total_time * total_time;
    let t4 = t3 * total_time;
    let t5 = t4 * total_time;
    PolynomialSegment::new(
        vec![
            q0,
            R::zero(),
            R::zero(),
            R::of(10.0) * dq / t3,
            R::of(-15.0) * dq / t4,
            R::of(6.0) * dq / t5,
        ],
        total_time,
    )
}

/// Which rest-to-rest generator to use for both coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Cubic,
    Quintic,
}

/// Prescribed arm motion: rotation θ(t) [rad] and extension r(t) [m] over a
/// common duration.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<R: Real = f64> {
    theta: PolynomialSegment<R>,
    r: PolynomialSegment<R>,
    total_time: R,
}

impl<R: Real> Trajectory<R> {
    /// Pairs two segments; durations must agree exactly.
    pub fn from_segments(theta: PolynomialSegment<R>, r: PolynomialSegment<R>) -> Result<Self> {
        if theta.duration() != r.duration() {
            return Err(Error::invalid(format!(
                "segment durations differ: theta {} vs r {}",
                theta.duration(),
                r.duration()
            )));
        }
        let total_time = theta.duration();
        Ok(Trajectory {
            theta,
            r,
            total_time,
        })
    }

    /// Rest-to-rest motion from `(theta0, r=0)` to `(theta1, r=r_end)`.
    pub fn rest_to_rest(
        generator: Generator,
        theta0: R,
        theta1: R,
        r_end: R,
        total_time: R,
    ) -> Result<Self> {
        let make = |q0, q1| match generator {
            Generator::Cubic => cubic_rest_to_rest(q0, q1, total_time),
            Generator::Quintic => quintic_rest_to_rest(q0, q1, total_time),
        };
        Trajectory::from_segments(make(theta0, theta1)?, make(R::zero(), r_end)?)
    }

    /// Constant pose: θ ≡ theta0, r ≡ 0, held for `total_time`.
    pub fn hold(theta0: R, total_time: R) -> Result<Self> {
        Trajectory::from_segments(
            PolynomialSegment::constant(theta0, total_time)?,
            PolynomialSegment::constant(R::zero(), total_time)?,
        )
    }

    pub fn total_time(&self) -> R {
        self.total_time
    }

    pub fn theta(&self) -> &PolynomialSegment<R> {
        &self.theta
    }

    pub fn r(&self) -> &PolynomialSegment<R> {
        &self.r
    }

    /// Samples θ and r with derivatives up to jerk; `t` must lie in `[0, T]`.
    pub fn sample(&self, t: R) -> Result<(KinematicSample<R>, KinematicSample<R>)> {
        if t < R::zero() || t > self.total_time {
            return Err(Error::OutOfRange(format!(
                "sample time {t} outside [0, {}]",
                self.total_time
            )));
        }
        Ok((self.theta.sample(t), self.r.sample(t)))
    }

    /// Maximum |jerk| of both coordinates over `[0, T]`.
    ///
    /// Scans `n_samples` uniform points, then refines the best bracketing
    /// interval by golden-section search; works for any segment degree.
    pub fn max_jerk(&self, n_samples: usize) -> Result<JerkExtrema<R>> {
        if n_samples < 2 {
            return Err(Error::invalid("max_jerk needs at least 2 samples"));
        }
        let theta = peak_abs_d3(&self.theta, n_samples);
        let r = peak_abs_d3(&self.r, n_samples);
        Ok(JerkExtrema { theta, r })
    }
}

/// Peak |jerk| of one coordinate and the time where it is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JerkPeak<R: Real = f64> {
    pub value: R,
    pub t: R,
}

/// Jerk maxima of a [`Trajectory`], per coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JerkExtrema<R: Real = f64> {
    pub theta: JerkPeak<R>,
    pub r: JerkPeak<R>,
}

fn peak_abs_d3<R: Real>(seg: &PolynomialSegment<R>, n_samples: usize) -> JerkPeak<R> {
    let t_total = seg.duration();
    let jerk_at = |t: R| seg.sample(t).d3.abs();
    let mut best_i = 0usize;
    let mut best = R::zero();
    let step = t_total / R::of_usize(n_samples - 1);
    for i in 0..n_samples {
        let t = step * R::of_usize(i);
        let j = jerk_at(t);
        if j > best {
            best = j;
            best_i = i;
        }
    }
    // refine inside the bracketing neighbours of the best grid point
    let lo = if best_i == 0 {
        R::zero()
    } else {
        step * R::of_usize(best_i - 1)
    };
    let hi = if best_i + 1 >= n_samples {
        t_total
    } else {
        step * R::of_usize(best_i + 1)
    };
    let (t_star, v_star) = golden_max(jerk_at, lo, hi);
    if v_star >= best {
        JerkPeak {
            value: v_star,
            t: t_star,
        }
    } else {
        JerkPeak {
            value: best,
            t: step * R::of_usize(best_i),
        }
    }
}

/// Golden-section maximization of `f` on `[lo, hi]`.
fn golden_max<R: Real, F: Fn(R) -> R>(f: F, lo: R, hi: R) -> (R, R) {
    let inv_phi = R::of(0.618_033_988_749_894_9);
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..120 {
        if b - a <= R::epsilon() * (hi.abs() + R::one()) {
            break;
        }
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    let xm = (a + b) * R::of(0.5);
    (xm, f(xm))
}
