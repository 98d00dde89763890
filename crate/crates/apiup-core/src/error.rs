use thiserror::Error;

use crate::syntax::span::{LineIndex, Span};

#[derive(Debug, Clone, Error, PartialEq)]
#[error("parse error at {line}:{col}: {expected}")]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

impl ParseError {
    pub fn at(lines: &LineIndex, offset: usize, expected: impl Into<String>) -> ParseError {
        let (line, col) = lines.line_col(offset);
        ParseError {
            offset,
            line,
            col,
            expected: expected.into(),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("overlapping edits: {a:?} and {b:?}")]
pub struct OverlapError {
    pub a: Span,
    pub b: Span,
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("mapping field `{field}`: {reason}")]
pub struct MappingError {
    pub field: String,
    pub reason: String,
}

impl MappingError {
    pub fn new(field: impl Into<String>, reason: impl Into<String>) -> MappingError {
        MappingError {
            field: field.into(),
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("cannot normalize call at line {line}: {reason}")]
pub struct NormalizeError {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BlockError {
    #[error("no valid version-guarded update block found")]
    NoValidBlock,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PatchError {
    #[error("patch parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("undeclared metavariable `{0}`")]
    UndeclaredMetavar(String),
    #[error("patched output no longer parses: {0}")]
    Reparse(String),
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("cannot synthesize update patch: {reason}")]
pub struct SynthesisError {
    pub reason: String,
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("oracle error: {0}")]
pub struct OracleError(pub String);
