use std::fmt;

use thiserror::Error;

/// A single broken invariant found while validating diagram data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoCrossings,
    RotationLength { crossing: usize, len: usize },
    RotationDarts { crossing: usize },
    BadOverFlag { crossing: usize, value: i64 },
    EdgeLength { edge: usize, len: usize },
    BadSign { edge: usize, value: i64 },
    SelfPairedDart { edge: usize, dart: i64 },
    DartOutOfRange { edge: usize, dart: i64 },
    DartReused { edge: usize, dart: i64 },
    DartUnused { dart: usize },
    Disconnected { unreachable_crossing: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoCrossings => write!(f, "diagram has no crossings"),
            Violation::RotationLength { crossing, len } => {
                write!(f, "crossing {crossing}: rotation has {len} entries, expected 4")
            }
            Violation::RotationDarts { crossing } => write!(
                f,
                "crossing {crossing}: rotation must be [{}, {}, {}, {}]",
                4 * crossing,
                4 * crossing + 1,
                4 * crossing + 2,
                4 * crossing + 3
            ),
            Violation::BadOverFlag { crossing, value } => {
                write!(f, "crossing {crossing}: bad over flag {value} (must be 0 or 1)")
            }
            Violation::EdgeLength { edge, len } => {
                write!(f, "edge {edge}: has {len} darts, expected 2")
            }
            Violation::BadSign { edge, value } => {
                write!(f, "edge {edge}: sign must be +1 or -1 (got {value})")
            }
            Violation::SelfPairedDart { edge, dart } => {
                write!(f, "edge {edge}: self-paired dart {dart}")
            }
            Violation::DartOutOfRange { edge, dart } => {
                write!(f, "edge {edge}: dart {dart} out of range")
            }
            Violation::DartReused { edge, dart } => {
                write!(f, "edge {edge}: dart {dart} already used by another edge")
            }
            Violation::DartUnused { dart } => write!(f, "dart {dart} is not on any edge"),
            Violation::Disconnected { unreachable_crossing } => write!(
                f,
                "disconnected: crossing {unreachable_crossing} is not reachable from crossing 0"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed diagram document: {0}")]
    Parse(String),

    #[error("invalid diagram: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("invalid PD code: {0}")]
    Pd(String),

    #[error("{kind} index {index} out of range (have {count})")]
    OutOfRange {
        kind: &'static str,
        index: usize,
        count: usize,
    },

    #[error("edge set is not a cycle: crossing {crossing} meets it an odd number of times")]
    NotACycle { crossing: usize },

    #[error("bi-coloring violates its constraint at crossing {crossing}")]
    BadBicoloring { crossing: usize },

    #[error("diagrams do not share a shadow: {0}")]
    ShadowMismatch(String),

    #[error("invalid Reidemeister II move: {0}")]
    Reidemeister(String),

    #[error("no connected diagram after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
