//! Exact computational workbench for fine gradings on matrix algebras,
//! octonions and the Albert algebra, and for computing the Weyl groups of
//! those gradings.
//!
//! All arithmetic takes place in cyclotomic fields `Q(zeta_N)` with
//! arbitrary-precision rational coefficients, so every verification in this
//! crate is exact: a check either holds identically or fails with a witness.

pub mod abgroups;
pub mod algebras;
pub mod cli;
pub mod gradings;
pub mod linalg;
pub mod morphisms;
pub mod scalars;
pub mod weyl;

pub use abgroups::{AbElem, AbGroup, AbHom, Bicharacter};
pub use algebras::{AlgElement, AlgebraRef, StructAlgebra};
pub use gradings::{Grading, GradingRef, SupportTable};
pub use morphisms::AlgAutomorphism;
pub use scalars::CycScalar;
pub use weyl::{PermGroup, SupportPerm, WeylReport};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("{0}")]
    Invalid(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
    pub fn bound(msg: impl Into<String>) -> Self {
        Error::BoundExceeded(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
