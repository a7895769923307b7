use thiserror::Error;

use crate::numerics::Int;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bends {0:?} do not satisfy 2(a²+b²+c²+d²) = (a+b+c+d)²")]
    InvalidQuadruple(Box<[Int; 4]>),

    #[error("ab+bc+ca = {0} is not a perfect square, fourth bend is not integral")]
    NotIntegral(Int),

    #[error("ab+bc+ca = {0} is negative, bends are not a tangent triple")]
    NegativeDiscriminant(Int),

    #[error("invalid gasket key: {0}")]
    MasterEquationViolation(String),

    #[error("the strip (B = 0) is made of lines and has no circle symbols")]
    StripUnsupported,

    #[error("max bend {max_bend} is below the largest principal bend {b4}")]
    MaxBendTooSmall { max_bend: Int, b4: Int },

    #[error("circles are not tangent: Δ²+Γ² = {lhs}, H² = {rhs}")]
    NotTangent { lhs: String, rhs: String },

    #[error("invalid Descartes configuration: {0}")]
    InvalidConfig(String),

    #[error("cannot render an empty packing")]
    EmptyPacking,

    #[error("invalid render options: {0}")]
    InvalidOptions(String),
}

pub type Result<T> = std::result::Result<T, Error>;
