use thiserror::Error;

use crate::lc::DegeneracyClass;

/// Everything that can go wrong while building or checking an LC structure.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum LcError {
    #[error("argument of zero is undefined")]
    ZeroArgument,
    #[error("points 0, w1, w2 are collinear; the underlying line passes through the origin")]
    CollinearPoints,
    #[error("c1^2/4 - c2 vanishes; double root has no inclination angle")]
    DoubleRootDegenerate,
    #[error("input is not admissible for the LC method: {0}")]
    DegenerateInput(DegeneracyClass),
    #[error("line and circle produced {found} intersection(s), expected 2")]
    NoIntersection { found: usize },
    #[error("angle bisector at p1 is undefined")]
    BisectorUndefined,
    #[error("Möbius multiplier must be nonzero")]
    ZeroMultiplier,
    #[error("instance generator exhausted {attempts} resamples")]
    GeneratorExhausted { attempts: u32 },
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T, E = LcError> = std::result::Result<T, E>;
