//! Typed failure modes.
//!
//! The computational pipeline never guesses: anything that would require an
//! unavailable field split, an unverifiable certificate or an out-of-budget
//! search is reported as a typed error rather than a silently wrong value.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrices or algebra elements from different ground fields were mixed.
    FieldMismatch,
    /// A square matrix was required.
    NonSquare,
    /// Inconsistent dimensions in a matrix or module operation.
    ShapeMismatch(String),
    /// The relation ideal of a bound quiver never swallowed all long paths
    /// within the configured path-length cap.
    NotNilpotent { cap: usize },
    /// Relations whose terms have different path lengths are not supported
    /// by the degreewise basis computation.
    MixedLengthRelation,
    /// A malformed quiver or relation (unknown vertex/arrow, non-parallel
    /// terms, path of length < 2, ...).
    BadQuiver(String),
    /// Structure constants failed validation (associativity, unit or
    /// idempotent axioms).
    BadAlgebra(String),
    /// A required polynomial split does not exist over the ground field.
    NonSplitField(String),
    /// The endomorphism ring of a module is local with residue division
    /// algebra of dimension > 1, or no splitting idempotent was found; the
    /// module may be indecomposable only over a field extension.
    NonSplitEndomorphism { end_dim: usize },
    /// Isomorphism testing exhausted its trial budget without a verdict.
    Inconclusive,
    /// The annihilated subspace of an extension group expected to be
    /// one-dimensional was not.
    SocleAmbiguous { dim: usize },
    /// An operation requiring a basic algebra was called on one that is not.
    NotBasic,
    /// The radical could not be certified over this field.
    RadicalUnavailable,
    /// An invariant needed a closed registry of indecomposables but the
    /// enumeration was capped.
    RegistryIncomplete,
    /// Free-form invariant violation detected at runtime.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "mixed ground fields"),
            Error::NonSquare => write!(f, "matrix is not square"),
            Error::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            Error::NotNilpotent { cap } => {
                write!(f, "relation ideal not admissible within path length {cap}")
            }
            Error::MixedLengthRelation => {
                write!(f, "relation mixes terms of different path lengths")
            }
            Error::BadQuiver(s) => write!(f, "bad quiver data: {s}"),
            Error::BadAlgebra(s) => write!(f, "bad algebra data: {s}"),
            Error::NonSplitField(s) => write!(f, "field split unavailable: {s}"),
            Error::NonSplitEndomorphism { end_dim } => write!(
                f,
                "no splitting found; End/rad has dimension {end_dim} > 1 \
                 (possibly indecomposable over an extension)"
            ),
            Error::Inconclusive => write!(f, "isomorphism test inconclusive within budget"),
            Error::SocleAmbiguous { dim } => {
                write!(f, "almost split class space has dimension {dim}, expected 1")
            }
            Error::NotBasic => write!(f, "algebra is not basic"),
            Error::RadicalUnavailable => write!(f, "radical not certifiable over this field"),
            Error::RegistryIncomplete => write!(f, "registry of indecomposables is not closed"),
            Error::Internal(s) => write!(f, "internal invariant violated: {s}"),
        }
    }
}
