use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("truncation order mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },

    #[error("series argument has a term of order 0 in 1/kappa; the expansion would not terminate")]
    NonNilpotentArgument,

    #[error("element is not invertible as a formal series")]
    NotInvertible,

    #[error("element contains the dilatation generator D where only momenta are allowed")]
    ContainsDilatation,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("family {0} needs the interpolation parameter u")]
    MissingParameter(&'static str),

    #[error("result did not stabilize between truncation orders {lower} and {upper}")]
    NotStabilized { lower: u32, upper: u32 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
