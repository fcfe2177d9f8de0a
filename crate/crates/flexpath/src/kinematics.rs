//! Frame-change mathematics: angular velocity extraction, acceleration in a
//! non-inertial frame, fictitious forces, the transverse beam load, and
//! non-dimensional groups.
//!
//! Conventions: the frame map R(t) carries inertial axes onto body axes with
//! det R = +1; the angular velocity is extracted from the skew part of
//! Ṙ Rᵀ. The rod angle θ is measured from the horizontal, so θ = 0 puts the
//! full gravity load on the rod and θ = π/2 none.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::trajectory::KinematicSample;

/// 3-vector with the handful of operations frame math needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3<R: Real = f64>(pub [R; 3]);

impl<R: Real> Vec3<R> {
    pub fn zero() -> Self {
        Vec3([R::zero(); 3])
    }

    pub fn new(x: R, y: R, z: R) -> Self {
        Vec3([x, y, z])
    }

    pub fn cross(self, o: Vec3<R>) -> Vec3<R> {
        let a = self.0;
        let b = o.0;
        Vec3([
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ])
    }

    pub fn dot(self, o: Vec3<R>) -> R {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2]
    }

    pub fn scale(self, s: R) -> Vec3<R> {
        Vec3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }

    pub fn add(self, o: Vec3<R>) -> Vec3<R> {
        Vec3([
            self.0[0] + o.0[0],
            self.0[1] + o.0[1],
            self.0[2] + o.0[2],
        ])
    }

    pub fn sub(self, o: Vec3<R>) -> Vec3<R> {
        self.add(o.scale(-R::one()))
    }

    pub fn norm(self) -> R {
        self.dot(self).sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

/// Row-major 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3<R: Real = f64>(pub [[R; 3]; 3]);

impl<R: Real> Mat3<R> {
    pub fn zero() -> Self {
        Mat3([[R::zero(); 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            m.0[i][i] = R::one();
        }
        m
    }

    /// Rotation about the z-axis by `angle`.
    pub fn rotation_z(angle: R) -> Self {
        let (s, c) = angle.sin_cos();
        Mat3([
            [c, -s, R::zero()],
            [s, c, R::zero()],
            [R::zero(), R::zero(), R::one()],
        ])
    }

    /// Rotation about the x-axis by `angle`.
    pub fn rotation_x(angle: R) -> Self {
        let (s, c) = angle.sin_cos();
        Mat3([
            [R::one(), R::zero(), R::zero()],
            [R::zero(), c, -s],
            [R::zero(), s, c],
        ])
    }

    /// Rotation about the y-axis by `angle`.
    pub fn rotation_y(angle: R) -> Self {
        let (s, c) = angle.sin_cos();
        Mat3([
            [c, R::zero(), s],
            [R::zero(), R::one(), R::zero()],
            [-s, R::zero(), c],
        ])
    }

    pub fn transpose(self) -> Mat3<R> {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn mul(self, o: Mat3<R>) -> Mat3<R> {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = R::zero();
                for k in 0..3 {
                    s += self.0[i][k] * o.0[k][j];
                }
                m.0[i][j] = s;
            }
        }
        m
    }

    pub fn sub(self, o: Mat3<R>) -> Mat3<R> {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][j] - o.0[i][j];
            }
        }
        m
    }

    pub fn frobenius_norm(self) -> R {
        let mut s = R::zero();
        for row in self.0 {
            for v in row {
                s += v * v;
            }
        }
        s.sqrt()
    }

    pub fn det(self) -> R {
        let a = self.0;
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    }
}

/// Orthogonality tolerance for [`RotationSample`] (Frobenius norm of RᵀR − I
/// and deviation of det R from +1).
pub const ROTATION_TOL: f64 = 1e-10;

/// Skew-symmetry defect allowed for Ṙ Rᵀ before the pair (R, Ṙ) is rejected
/// as inconsistent.
pub const SKEW_DEFECT_TOL: f64 = 1e-8;

/// A rotation matrix and its time derivative at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationSample<R: Real = f64> {
    pub r: Mat3<R>,
    pub rdot: Mat3<R>,
}

impl<R: Real> RotationSample<R> {
    pub fn new(r: Mat3<R>, rdot: Mat3<R>) -> Self {
        RotationSample { r, rdot }
    }

    /// Checks RᵀR = I and det R = +1 to [`ROTATION_TOL`].
    pub fn validate(&self) -> Result<()> {
        let defect = self
            .r
            .transpose()
            .mul(self.r)
            .sub(Mat3::identity())
            .frobenius_norm();
        if defect > R::of(ROTATION_TOL) {
            return Err(Error::InvalidRotation(format!(
                "R^T R deviates from identity by {defect}"
            )));
        }
        let det = self.r.det();
        if (det - R::one()).abs() > R::of(ROTATION_TOL) {
            return Err(Error::InvalidRotation(format!(
                "det R = {det}, expected +1"
            )));
        }
        Ok(())
    }
}

/// Extracted angular velocity together with the skew defect of Ṙ Rᵀ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularVelocity<R: Real = f64> {
    pub omega: Vec3<R>,
    /// Frobenius norm of Ω + Ωᵀ where Ω = Ṙ Rᵀ; a consistency diagnostic.
    pub skew_defect: R,
}

/// Extracts ω from the skew-symmetric Ω = Ṙ Rᵀ via ω = (Ω₃₂, Ω₁₃, Ω₂₁).
pub fn angular_velocity<R: Real>(rs: &RotationSample<R>) -> Result<AngularVelocity<R>> {
    rs.validate()?;
    let omega_mat = rs.rdot.mul(rs.r.transpose());
    let defect = omega_mat.add_transpose_norm();
    if defect > R::of(SKEW_DEFECT_TOL) {
        return Err(Error::InvalidRotation(format!(
            "Rdot R^T has skew defect {defect}, R and Rdot are inconsistent"
        )));
    }
    let m = omega_mat.0;
    Ok(AngularVelocity {
        omega: Vec3([m[2][1], m[0][2], m[1][0]]),
        skew_defect: defect,
    })
}

impl<R: Real> Mat3<R> {
    fn add_transpose_norm(self) -> R {
        let mut s = R::zero();
        for i in 0..3 {
            for j in 0..3 {
                let v = self.0[i][j] + self.0[j][i];
                s += v * v;
            }
        }
        s.sqrt()
    }
}

/// Instantaneous motion of the moving frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameMotion<R: Real = f64> {
    /// Angular velocity ω [rad/s].
    pub omega: Vec3<R>,
    /// Angular acceleration ω̇ [rad/s²].
    pub omega_dot: Vec3<R>,
    /// Acceleration of the moving origin [m/s²].
    pub origin_acceleration: Vec3<R>,
}

impl<R: Real> FrameMotion<R> {
    pub fn at_rest() -> Self {
        FrameMotion {
            omega: Vec3::zero(),
            omega_dot: Vec3::zero(),
            origin_acceleration: Vec3::zero(),
        }
    }
}

/// Acceleration seen in the inertial frame:
/// `â = a + ω̇×r + 2ω×Dr + ω×(ω×r) + A`.
pub fn inertial_acceleration<R: Real>(
    a: Vec3<R>,
    fm: &FrameMotion<R>,
    r: Vec3<R>,
    dr: Vec3<R>,
) -> Vec3<R> {
    a.add(fm.omega_dot.cross(r))
        .add(fm.omega.cross(dr).scale(R::of(2.0)))
        .add(fm.omega.cross(fm.omega.cross(r)))
        .add(fm.origin_acceleration)
}

/// The four fictitious-force contributions on a point mass in the moving
/// frame, with the signs they carry on the right side of the momentum balance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FictitiousForces<R: Real = f64> {
    /// −m ω̇ × r
    pub euler: Vec3<R>,
    /// −2m ω × Dr
    pub coriolis: Vec3<R>,
    /// −m ω × (ω × r)
    pub centrifugal: Vec3<R>,
    /// m A
    pub translational: Vec3<R>,
}

pub fn fictitious_forces<R: Real>(
    mass: R,
    fm: &FrameMotion<R>,
    r: Vec3<R>,
    dr: Vec3<R>,
) -> Result<FictitiousForces<R>> {
    if !(mass > R::zero()) {
        return Err(Error::invalid(format!(
            "mass must be positive, got {mass}"
        )));
    }
    Ok(FictitiousForces {
        euler: fm.omega_dot.cross(r).scale(-mass),
        coriolis: fm.omega.cross(dr).scale(-(mass + mass)),
        centrifugal: fm.omega.cross(fm.omega.cross(r)).scale(-mass),
        translational: fm.origin_acceleration.scale(mass),
    })
}

/// Transverse load per unit length on the rotating rod, split into its four
/// named contributions:
/// `q = ρ [ r̈ sin θ − g cos θ + θ̇² w − θ̈ x ]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamLoadParts<R: Real = f64> {
    /// ρ r̈ sin θ — carriage acceleration projected onto the rod normal.
    pub acceleration: R,
    /// −ρ g cos θ — weight component.
    pub gravity: R,
    /// ρ θ̇² w — centrifugal term; proportional to the local deflection.
    pub centrifugal: R,
    /// −ρ θ̈ x — Euler term; grows along the rod.
    pub euler: R,
}

impl<R: Real> BeamLoadParts<R> {
    /// Sum of the four contributions [N/m].
    pub fn total(&self) -> R {
        self.acceleration + self.gravity + self.centrifugal + self.euler
    }
}

/// Evaluates the rod load at position `x` with local deflection `w`.
///
/// Callers keep `0 ≤ x ≤ L` and `rho > 0`; passing `w = 0` yields the load
/// with the centrifugal feedback removed, which is how the time stepper
/// builds its right-hand side when it treats that term implicitly.
pub fn beam_load<R: Real>(
    x: R,
    w: R,
    theta: &KinematicSample<R>,
    r: &KinematicSample<R>,
    rho: R,
    g: R,
) -> BeamLoadParts<R> {
    let (sin_t, cos_t) = theta.value.sin_cos();
    BeamLoadParts {
        acceleration: rho * r.d2 * sin_t,
        gravity: -rho * g * cos_t,
        centrifugal: rho * theta.d1 * theta.d1 * w,
        euler: -rho * theta.d2 * x,
    }
}

/// Non-dimensional groups of the rotating-rod problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessGroups<R: Real = f64> {
    /// λ = E I T² / (ρ L⁴) — stiffness over inertia at the trajectory scale.
    pub lambda: R,
    /// Fr = √(W / (g T²)) — Froude number of the displacement scale.
    pub froude: R,
    /// μ = R / W — extension over displacement scale.
    pub mu: R,
    /// ν = L / W — length over displacement scale.
    pub nu: R,
}

/// Builds the groups from dimensional inputs; every argument must be
/// strictly positive.
#[allow(clippy::too_many_arguments)]
pub fn nondimensional_groups<R: Real>(
    young_modulus: R,
    second_moment: R,
    rho: R,
    length: R,
    total_time: R,
    displacement_scale: R,
    extension: R,
    gravity: R,
) -> Result<DimensionlessGroups<R>> {
    let named = [
        ("E", young_modulus),
        ("I", second_moment),
        ("rho", rho),
        ("L", length),
        ("T", total_time),
        ("W", displacement_scale),
        ("R", extension),
        ("g", gravity),
    ];
    for (name, v) in named {
        if !(v > R::zero()) {
            return Err(Error::invalid(format!(
                "nondimensional groups need {name} > 0, got {v}"
            )));
        }
    }
    let l2 = length * length;
    Ok(DimensionlessGroups {
        lambda: young_modulus * second_moment * total_time * total_time / (rho * l2 * l2),
        froude: (displacement_scale / (gravity * total_time * total_time)).sqrt(),
        mu: extension / displacement_scale,
        nu: length / displacement_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn v(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3::new(x, y, z)
    }

    #[test]
    fn angular_velocity_identity_at_rest() {
        let rs = RotationSample::new(Mat3::identity(), Mat3::zero());
        let av = angular_velocity(&rs).unwrap();
        assert_eq!(av.omega, Vec3::zero());
        assert_eq!(av.skew_defect, 0.0);
    }

    #[test]
    fn angular_velocity_about_z() {
        // R(t) = Rot_z(Omega t), sampled at t = 0: Rdot = Omega * dR/d(angle)
        let rate = 2.0;
        let rdot = Mat3([[0.0, -rate, 0.0], [rate, 0.0, 0.0], [0.0, 0.0, 0.0]]);
        let av = angular_velocity(&RotationSample::new(Mat3::identity(), rdot)).unwrap();
        assert!((av.omega.0[0]).abs() < TOL);
        assert!((av.omega.0[1]).abs() < TOL);
        assert!((av.omega.0[2] - rate).abs() < TOL);
        assert!(av.skew_defect < 1e-8);
    }

    #[test]
    fn angular_velocity_about_x() {
        let rate = 0.5;
        let rdot = Mat3([[0.0, 0.0, 0.0], [0.0, 0.0, -rate], [0.0, rate, 0.0]]);
        let av = angular_velocity(&RotationSample::new(Mat3::identity(), rdot)).unwrap();
        assert!((av.omega.0[0] - rate).abs() < TOL);
        assert!(av.omega.0[1].abs() < TOL && av.omega.0[2].abs() < TOL);
    }

    #[test]
    fn angular_velocity_axis_rates_at_nonzero_angle() {
        // R = Rot_n(s t) sampled at t = 0.4 for each coordinate axis
        for s in [-1.0, 0.5, 2.0] {
            let t = 0.4;
            let cases: [(Mat3, Mat3, [f64; 3]); 3] = [
                (
                    Mat3::rotation_x(s * t),
                    d_rot_dt(Mat3::rotation_x, s, t),
                    [s, 0.0, 0.0],
                ),
                (
                    Mat3::rotation_y(s * t),
                    d_rot_dt(Mat3::rotation_y, s, t),
                    [0.0, s, 0.0],
                ),
                (
                    Mat3::rotation_z(s * t),
                    d_rot_dt(Mat3::rotation_z, s, t),
                    [0.0, 0.0, s],
                ),
            ];
            for (r, rdot, expect) in cases {
                let av = angular_velocity(&RotationSample::new(r, rdot)).unwrap();
                for k in 0..3 {
                    assert!(
                        (av.omega.0[k] - expect[k]).abs() < 1e-9,
                        "axis rate {s}: got {:?}",
                        av.omega
                    );
                }
            }
        }
    }

    /// Central-difference derivative of a one-parameter rotation family.
    fn d_rot_dt(rot: fn(f64) -> Mat3, s: f64, t: f64) -> Mat3 {
        let h = 1e-7;
        let a = rot(s * (t + h));
        let b = rot(s * (t - h));
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = (a.0[i][j] - b.0[i][j]) / (2.0 * h);
            }
        }
        m
    }

    #[test]
    fn non_orthogonal_rotation_rejected() {
        let mut r = Mat3::identity();
        r.0[0][0] = 1.1;
        let rs = RotationSample::new(r, Mat3::zero());
        assert!(matches!(
            angular_velocity(&rs),
            Err(Error::InvalidRotation(_))
        ));
    }

    #[test]
    fn reflection_rejected_by_determinant() {
        // orthogonal but det = -1
        let mut r = Mat3::identity();
        r.0[2][2] = -1.0;
        let rs = RotationSample::new(r, Mat3::zero());
        assert!(rs.validate().is_err());
    }

    #[test]
    fn inertial_acceleration_zero_inputs() {
        let fm = FrameMotion::at_rest();
        let a = inertial_acceleration(Vec3::zero(), &fm, Vec3::zero(), Vec3::zero());
        assert_eq!(a, Vec3::zero());
    }

    #[test]
    fn inertial_acceleration_centripetal() {
        // omega = (0,0,Omega), r = (1,0,0): omega x (omega x r) = -Omega^2 e1
        let omega = 3.0;
        let fm = FrameMotion {
            omega: v(0.0, 0.0, omega),
            omega_dot: Vec3::zero(),
            origin_acceleration: Vec3::zero(),
        };
        let a = inertial_acceleration(Vec3::zero(), &fm, v(1.0, 0.0, 0.0), Vec3::zero());
        assert!((a.0[0] + omega * omega).abs() < TOL);
        assert!(a.0[1].abs() < TOL && a.0[2].abs() < TOL);
    }

    #[test]
    fn inertial_acceleration_coriolis() {
        // omega = (0,0,1), Dr = (1,0,0): 2 omega x Dr = (0,2,0)
        let fm = FrameMotion {
            omega: v(0.0, 0.0, 1.0),
            omega_dot: Vec3::zero(),
            origin_acceleration: Vec3::zero(),
        };
        let a = inertial_acceleration(Vec3::zero(), &fm, Vec3::zero(), v(1.0, 0.0, 0.0));
        assert_eq!(a, v(0.0, 2.0, 0.0));
    }

    #[test]
    fn fictitious_forces_zero_motion() {
        let f = fictitious_forces(1.5, &FrameMotion::at_rest(), v(1.0, 2.0, 3.0), Vec3::zero())
            .unwrap();
        assert_eq!(f.euler, Vec3::zero());
        assert_eq!(f.coriolis, Vec3::zero());
        assert_eq!(f.centrifugal, Vec3::zero());
        assert_eq!(f.translational, Vec3::zero());
    }

    #[test]
    fn fictitious_centrifugal_points_outward() {
        let fm = FrameMotion {
            omega: v(0.0, 0.0, 1.0),
            omega_dot: Vec3::zero(),
            origin_acceleration: Vec3::zero(),
        };
        let f = fictitious_forces(1.0, &fm, v(1.0, 0.0, 0.0), Vec3::zero()).unwrap();
        assert_eq!(f.centrifugal, v(1.0, 0.0, 0.0));
    }

    #[test]
    fn fictitious_euler_hand_case() {
        let fm = FrameMotion {
            omega: Vec3::zero(),
            omega_dot: v(0.0, 0.0, 3.0),
            origin_acceleration: Vec3::zero(),
        };
        let f = fictitious_forces(2.0, &fm, v(1.0, 0.0, 0.0), Vec3::zero()).unwrap();
        assert_eq!(f.euler, v(0.0, -6.0, 0.0));
    }

    #[test]
    fn fictitious_forces_reject_nonpositive_mass() {
        assert!(fictitious_forces(0.0, &FrameMotion::at_rest(), Vec3::zero(), Vec3::zero())
            .is_err());
    }

    #[test]
    fn beam_load_vertical_rod_unloaded() {
        let theta = KinematicSample::at_rest(std::f64::consts::FRAC_PI_2);
        let r = KinematicSample::at_rest(0.0);
        let q = beam_load(0.3, 0.01, &theta, &r, 2.0, 9.81);
        assert!(q.total().abs() < 1e-15);
    }

    #[test]
    fn beam_load_pure_gravity() {
        let theta = KinematicSample::at_rest(0.0);
        let r = KinematicSample::at_rest(0.0);
        let q = beam_load(0.5, 0.0, &theta, &r, 1.0, 9.81);
        assert!((q.total() + 9.81).abs() < TOL);
        assert!((q.gravity + 9.81).abs() < TOL);
        assert_eq!(q.acceleration, 0.0);
        assert_eq!(q.centrifugal, 0.0);
        assert_eq!(q.euler, 0.0);
    }

    #[test]
    fn beam_load_euler_term() {
        let theta = KinematicSample {
            value: std::f64::consts::FRAC_PI_2, // cos = 0 kills gravity
            d1: 0.0,
            d2: 3.0,
            d3: 0.0,
        };
        let r = KinematicSample::at_rest(0.0);
        let q = beam_load(0.5, 0.0, &theta, &r, 2.0, 0.0);
        assert!((q.total() + 3.0).abs() < TOL);
        assert!((q.euler + 3.0).abs() < TOL);
    }

    #[test]
    fn beam_load_parts_sum_exactly() {
        let theta = KinematicSample {
            value: 0.3,
            d1: 1.2,
            d2: -0.7,
            d3: 0.0,
        };
        let r = KinematicSample {
            value: 0.4,
            d1: 0.1,
            d2: 2.2,
            d3: 0.0,
        };
        let q = beam_load(0.77, 0.013, &theta, &r, 1.9, 9.81);
        let total = q.acceleration + q.gravity + q.centrifugal + q.euler;
        assert_eq!(total, q.total());
    }

    #[test]
    fn beam_load_affine_in_x_with_zero_deflection() {
        // coefficient of x equals -rho * thetaddot via two-point evaluation
        let theta = KinematicSample {
            value: 0.3,
            d1: 0.9,
            d2: 1.7,
            d3: 0.0,
        };
        let r = KinematicSample::at_rest(0.0);
        let rho = 2.5;
        let qa = beam_load(0.2, 0.0, &theta, &r, rho, 9.81).total();
        let qb = beam_load(0.9, 0.0, &theta, &r, rho, 9.81).total();
        let slope = (qb - qa) / (0.9 - 0.2);
        assert!((slope + rho * theta.d2).abs() < 1e-12);
    }

    #[test]
    fn nondimensional_groups_unit_case() {
        let g = nondimensional_groups(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 9.81).unwrap();
        assert!((g.lambda - 1.0).abs() < TOL);
    }

    #[test]
    fn froude_is_one_when_w_equals_g_t_squared() {
        let (g0, t) = (9.81, 2.0);
        let w = g0 * t * t;
        let g = nondimensional_groups(1.0, 1.0, 1.0, 1.0, t, w, 1.0, g0).unwrap();
        assert!((g.froude - 1.0).abs() < TOL);
    }

    #[test]
    fn lambda_arithmetic_case() {
        // E=2, I=3, T=2, rho=4, L=1 -> lambda = 2*3*4/4 = 6
        let g = nondimensional_groups(2.0, 3.0, 4.0, 1.0, 2.0, 1.0, 1.0, 9.81).unwrap();
        assert!((g.lambda - 6.0).abs() < TOL);
    }

    #[test]
    fn nondimensional_groups_reject_nonpositive() {
        let e = nondimensional_groups(1.0, 1.0, 1.0, -1.0, 1.0, 1.0, 1.0, 9.81);
        assert!(matches!(e, Err(Error::InvalidArgument(msg)) if msg.contains('L')));
    }
}
