//! Deformation, modal and safety analysis for a thin elastic piece held by a
//! moving robot arm.
//!
//! The crate answers two questions about a prescribed arm motion:
//! what displacement and stress histories does it induce in the held piece
//! (the direct problem), and what is the shortest motion duration that keeps
//! peak stress, jerk and resonance proximity inside given limits (the
//! inverse problem, reduced to a one-parameter search over direct solves).
//!
//! Modules:
//! - [`trajectory`]: rest-to-rest polynomial profiles for the arm extension
//!   r(t) and rotation θ(t), with derivatives up to jerk.
//! - [`kinematics`]: frame-change math, fictitious forces, the transverse
//!   rod load, non-dimensional groups.
//! - [`beam`]: the rotating cantilever — static/quasi-static solves, Newmark
//!   time stepping with two spatial discretizations, stress recovery, and
//!   modal/resonance analysis.
//! - [`plate`]: quasi-static Kirchhoff-Love bending on a rectangular plate.
//! - [`safety`]: von Mises evaluation, limit checking, and minimum-duration
//!   search.
//!
//! All numerics are generic over the scalar type via [`scalar::Real`]
//! (`f32` or `f64`); every public type defaults its scalar parameter to
//! `f64`, which is the precision the documented tolerances assume.

pub mod beam;
pub mod error;
pub mod kinematics;
pub mod linalg;
pub mod plate;
pub mod safety;
pub mod scalar;
pub mod trajectory;

pub use error::{Error, Result};
pub use scalar::Real;

/// Concrete `f64` aliases for the main domain types.
pub type Trajectory64 = trajectory::Trajectory<f64>;
pub type BeamModel64 = beam::BeamModel<f64>;
pub type PlateModel64 = plate::PlateModel<f64>;
pub type SafetyLimits64 = safety::SafetyLimits<f64>;
pub type SafetyReport64 = safety::SafetyReport<f64>;
