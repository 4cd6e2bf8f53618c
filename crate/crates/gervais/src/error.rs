//! Error types shared across the crate.

use thiserror::Error;

use crate::curves::CurveId;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("genus {genus} below the supported minimum {min}")]
    GenusTooSmall { genus: u32, min: u32 },
    #[error("unknown curve {0}")]
    UnknownCurve(CurveId),
    #[error("incidence invariant violated: {0}")]
    InvariantViolation(String),
}

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("incidence audit failed: {0}")]
    AuditFailed(String),
    #[error("no common commuter for relator {0} (Lemma hypothesis violated)")]
    NoCommuter(usize),
}

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("rank {rank} too small: {op} needs rank at least {min}")]
    RankTooSmall {
        rank: usize,
        min: usize,
        op: &'static str,
    },
    #[error("point {0:?} violates the stated ball")]
    NotAvoidant(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("loop does not close up")]
    OpenLoop,
    #[error("{0} is not a unit-step lattice path")]
    NotUnitSteps(&'static str),
    #[error("internal filling invariant failed: {0}")]
    FillInternal(String),
}

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("gluing mismatch: {0}")]
    GlueMismatch(String),
    #[error("invalid boundary position {pos} (boundary length {len})")]
    BadBoundaryPosition { pos: usize, len: usize },
    #[error("gluing would close the diagram into a sphere")]
    WouldCloseSphere,
    #[error("unknown relator index {0}")]
    UnknownRelator(usize),
    #[error("diagram has no face word matching: {0}")]
    UnclassifiableFace(String),
    #[error("assembly failed: {0}")]
    Assembly(String),
}

#[derive(Debug, Error)]
pub enum TransformError {
    #[error("input loop is not the diagram boundary")]
    BoundaryMismatch,
    #[error("scale too small: r = {r} below configured minimum {min}")]
    ScaleTooSmall { r: u64, min: u64 },
    #[error("input loop is not {r}-avoidant: vertex {vertex} at distance {dist}")]
    InputNotAvoidant { r: u64, vertex: usize, dist: u64 },
    #[error("face {0} does not classify as a relator")]
    UnclassifiableCell(usize),
    #[error("certificate failure: {0}")]
    Certificate(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
