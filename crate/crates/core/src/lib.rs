//! Exact computations for weighted hyperplane arrangements: the Orlik–Solomon
//! algebra in NBC coordinates, the flag complex, the contravariant form and its
//! restriction to singular vectors, for central arrangements, their
//! projectivizations and every affine chart obtained by deconing.

pub mod arrangement_model;
pub mod cli;
pub mod contravariant;
pub mod error;
pub mod flag_space;
mod geometry;
pub mod lattice;
pub mod exact_linear_algebra;
pub mod os_algebra;
pub mod rational;
pub mod verify;

pub use arrangement_model::{cone, decone, AffineArrangement, Arrangement, CentralArrangement, Hyperplane};
pub use error::{Error, Result};
pub use exact_linear_algebra::{Matrix, SubspaceBasis};
pub use rational::Rational;
