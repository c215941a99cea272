//! Jordanian twist deformations of the `{P_mu, D}` algebra: exact series
//! algebra, twisted Hopf structures, coordinate realizations, plane-wave
//! star products and normal-ordering checks.

pub mod hopf;
pub mod ncalg;
pub mod ordexp;
pub mod report;
pub mod starlab;
pub mod weyl;

pub use ncalg::{AlgebraError, Config, GaussianRational};
pub use report::{Report, Status};

/// Exact coefficients.
pub type Q = GaussianRational;
pub type UElement = ncalg::Element<Q>;
pub type UTensor = ncalg::Tensor<Q>;
pub type UTensor3 = ncalg::Tensor3<Q>;
pub type WElement = weyl::WSeries<Q>;
