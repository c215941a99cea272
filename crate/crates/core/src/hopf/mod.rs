//! Twists, twisted Hopf structures, R-matrices and `*`-structures.

pub mod checks;
pub mod rmatrix;
pub mod star;
pub mod structure;
pub mod twist;

pub use rmatrix::{r_matrix, RMatrix};
pub use structure::{
    closed_form_antipode, closed_form_coproduct, twisted_antipode, twisted_coproduct, Generator, HopfData,
};
pub use twist::{build_twist, coboundary_conjugate, Family, Origin, Twist};
