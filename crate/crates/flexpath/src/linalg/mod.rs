//! Direct solvers and quadrature shared by the structural modules.

mod banded;
mod dense;
mod gauss;

pub use banded::{Banded, BandedLu};
pub use dense::Dense;
pub use gauss::gauss_legendre;
