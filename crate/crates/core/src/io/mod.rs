//! The `*.todim.json` problem document, evaluation reports, and the bundled
//! case-study fixtures.
//!
//! Documents are UTF-8 JSON at schema version 1:
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "metadata": { "title": "...", "reference_overall": [0.0, 1.0] },
//!   "problem": {
//!     "alternatives": ["A1", "A2"],
//!     "criteria": [{ "name": "quality", "kind": "benefit" }],
//!     "assessments": [[[{ "d": 55, "p": 0.4 }]], [[{ "d": 60, "p": 1 }]]],
//!     "weights": [[{ "d": 0.3, "p": 1 }]],
//!     "lambda": 2.25
//!   }
//! }
//! ```
//!
//! A cell is a list of `{"d", "p"}` objects (probabilistic hesitant), a list
//! of numbers (hesitant) or a number (crisp); every cell of a matrix uses the
//! same encoding. Weights follow the same three encodings independently of
//! the cells. `lambda` defaults to 2.25. Probabilities are kept as given;
//! the engine renormalizes them.

mod fixtures;
mod parse;
mod report;
mod serialize;

use thiserror::Error;

use crate::engine::DecisionProblem;

pub use fixtures::{case_study_hf, case_study_phf, CASE_STUDY_HF_JSON, CASE_STUDY_PHF_JSON};
pub use parse::{parse, parse_document, parse_document_value};
pub use report::{
    canonical_json, discrepancy_footnotes, document_footnotes, emit_report, evaluate_document,
    ranking_value, report_json, report_value, ReportFormat,
};
pub use serialize::{canonicalize, document_value, serialize, serialize_document};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProblemError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("invalid value at {path}: {message}")]
    Validation { path: String, message: String },
}

impl ProblemError {
    pub fn path(&self) -> Option<&str> {
        match self {
            Self::Syntax { .. } => None,
            Self::Schema { path, .. } | Self::Validation { path, .. } => Some(path),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Syntax { .. } => "syntax",
            Self::Schema { .. } => "schema",
            Self::Validation { .. } => "validation",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Metadata {
    pub title: Option<String>,
    pub author: Option<String>,
    pub notes: Option<String>,
    /// Externally reported overall dominance values to check results
    /// against; mismatches at display precision become report footnotes.
    pub reference_overall: Option<Vec<f64>>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemDocument {
    pub schema_version: u64,
    pub metadata: Option<Metadata>,
    pub problem: DecisionProblem,
}

impl ProblemDocument {
    pub fn new(problem: DecisionProblem) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            metadata: None,
            problem,
        }
    }

    pub fn reference_overall(&self) -> Option<&[f64]> {
        self.metadata.as_ref()?.reference_overall.as_deref()
    }
}
