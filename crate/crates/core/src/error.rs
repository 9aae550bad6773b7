// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    SizeBound,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field of order {p}^{m} exceeds the size bound")]
    FieldTooLarge { p: u64, m: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("cannot embed F_{{{src_p}^{src_m}}} into F_{{{dst_p}^{dst_m}}}")]
    IncompatibleEmbedding {
        src_p: u64,
        src_m: usize,
        dst_p: u64,
        dst_m: usize,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation is undefined for the zero function")]
    ZeroFunction,
    #[error("map is not separating (derivative vanishes identically)")]
    Inseparable,
    #[error("element is a {0}-th power, expected a non-{0}-th-power")]
    PthPower(u64),
    #[error("not pseudo-tame: {0}")]
    NotPseudoTame(String),
    #[error("infeasible constraint: {0}")]
    Infeasible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeBound { degree: u64, limit: u64 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::FieldTooLarge { .. } | Error::DegreeBound { .. } => ErrorKind::SizeBound,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::InvalidDegree => "invalid_degree",
            Error::FieldTooLarge { .. } => "field_too_large",
            Error::FieldMismatch => "field_mismatch",
            Error::IncompatibleEmbedding { .. } => "incompatible_embedding",
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::ZeroFunction => "zero_function",
            Error::Inseparable => "inseparable",
            Error::PthPower(_) => "pth_power",
            Error::NotPseudoTame(_) => "not_pseudotame",
            Error::Infeasible(_) => "infeasible",
            Error::Precondition(_) => "precondition",
            Error::DegreeBound { .. } => "degree_bound",
            Error::Parse { .. } => "parse",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
