//! Exact graded series over `U(g)`, `g = {P_mu, D}` with `[P_mu, D] = P_mu`,
//! and its tensor powers.

pub mod analytic;
pub mod coeff;
pub mod config;
pub mod error;
pub mod monomial;
pub mod ops;
pub mod series;

pub use analytic::{exp, inv1p, inverse, log1p, sqrt1p, AnalyticKind};
pub use coeff::{parse_rational, Coefficient, GaussianRational};
pub use config::{Config, DilatationConjugation};
pub use error::AlgebraError;
pub use monomial::{Basis, UMonomial};
pub use series::Series;

pub type Element<C> = Series<C, [UMonomial; 1]>;
pub type Tensor<C> = Series<C, [UMonomial; 2]>;
pub type Tensor3<C> = Series<C, [UMonomial; 3]>;
