//! TODIM multi-criteria ranking under probabilistic hesitant fuzzy,
//! hesitant fuzzy and crisp assessments.
//!
//! The crate is organised bottom-up:
//!
//! * [`phf`] and [`hf`]: element algebra (normalization, padding, ordering,
//!   score, variance, distance, comparison).
//! * [`weighting`]: criterion weights from fuzzy weight elements.
//! * [`engine`]: dominance matrices, overall dominance, ranking and
//!   sensitivity sweeps.
//! * [`io`]: the `*.todim.json` document format, reports and the bundled
//!   case-study fixtures.

use std::fmt;

use serde::{Deserialize, Serialize};

pub mod engine;
pub mod error;
pub mod hf;
pub mod io;
pub mod phf;
pub mod weighting;

pub use engine::{
    evaluate, evaluate_parallel, evaluate_with, Assessments, Criterion, CriterionKind,
    DecisionProblem, DominanceBreakdown, Evaluation, Method, RankingResult, DEFAULT_LAMBDA,
};
pub use error::{ElementError, EngineError, WeightError};
pub use hf::HesitantElement;
pub use phf::{Direction, Entry, ProbabilisticHesitantElement};
pub use weighting::{WeightSpecification, WeightVector};

/// Representation of assessment cells or weight elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Phf,
    Hf,
    Crisp,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Phf => "phf",
            Mode::Hf => "hf",
            Mode::Crisp => "crisp",
        })
    }
}
