//! Symplectic (type C) plactic monoid toolkit.
//!
//! The crate is organised bottom-up:
//!
//! - [`words`]: letters of the ordered alphabet `1 < … < n < n̄ < … < 1̄`,
//!   columns, admissibility, block columns and the `⪯` order.
//! - [`crystal`]: Kashiwara operators on plain words and on words of columns.
//! - [`insertion`]: symplectic column insertion, tableaux and the decorated
//!   monoid of pairs `(tableau, ε-count)`.
//! - [`rewriting`]: the column rewriting systems with and without the empty
//!   column `ε`, reduction strategies and critical branchings.
//! - [`ctree`]: labelled C-trees parameterising highest-weight words.
//! - [`text`]: the bracketed text format shared by the CLI and the C ABI.

pub mod crystal;
pub mod ctree;
pub mod insertion;
pub mod rewriting;
pub mod text;
pub mod words;

#[doc(hidden)]
pub mod cli;

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric argument is outside the range allowed at the current rank.
    #[error("domain error: {0}")]
    Domain(String),
    /// A value violates the precondition of an operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Malformed text input.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    /// A rewriting sequence ran past the configured step limit.
    #[error("rewriting did not terminate within {limit} steps from {word}")]
    StepLimit { limit: usize, word: String },
    /// A requested enumeration is larger than the configured cap.
    #[error("refusing to enumerate at rank {n}: cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
    /// An internal invariant failed. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use crystal::{CrystalOp, Signature, Weight};
pub use ctree::{CTree, Vertex};
pub use insertion::{DecoratedElement, Tableau};
pub use rewriting::{ConfShape, StrategyKind, Variant};
pub use words::{BlockSpec, Column, DecoratedWord, Letter, PlainWord, Rank};
