//! Roots of complex quadratics `x^2 + c1 x + c2 = 0` located as the
//! intersections of a line `L1` and its image circle `C = c2 / L1`.
//!
//! The crate is split into the plane geometry it needs ([`cgeom`]), the
//! line-circle construction and solver ([`lc`]), an independent direct
//! solver used as ground truth ([`oracle`]) and numerical checks of the
//! construction's geometric properties ([`properties`]).

pub mod cgeom;
pub mod config;
pub mod error;
pub mod lc;
pub mod oracle;
pub mod properties;

pub use num_complex::Complex64 as Complex;

pub use cgeom::{Circle, Intersection, ParametricLine};
pub use config::{SolverConfig, Tolerances};
pub use error::{LcError, Result};
pub use lc::{DegeneracyClass, FallbackReason, LcConstruction, QuadraticCoefficients, RootReport};
pub use oracle::{MatchResult, Pairing};
