//! TODIM evaluation for probabilistic hesitant, hesitant and crisp
//! assessment matrices.

mod dominance;
mod ranking;
mod sensitivity;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::EngineError;
use crate::hf::HesitantElement;
use crate::phf::ProbabilisticHesitantElement;
use crate::weighting::{WeightSpecification, WeightVector};
use crate::Mode;

pub use dominance::{aggregate, crisp_dominance, hf_dominance, phf_dominance, DominanceBreakdown};
pub use ranking::{overall, rank_order, RankingResult};
pub use sensitivity::{perturb_weight, perturb_weights, sweep_lambda, Perturbation};

use dominance::Prepared;

/// Loss attenuation used when a problem does not set one.
pub const DEFAULT_LAMBDA: f64 = 2.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    Benefit,
    Cost,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Criterion {
    pub name: String,
    pub kind: CriterionKind,
}

impl Criterion {
    pub fn new(name: impl Into<String>, kind: CriterionKind) -> Self {
        Self {
            name: name.into(),
            kind,
        }
    }

    pub fn benefit(name: impl Into<String>) -> Self {
        Self::new(name, CriterionKind::Benefit)
    }

    pub fn cost(name: impl Into<String>) -> Self {
        Self::new(name, CriterionKind::Cost)
    }
}

/// Alternatives × criteria matrix, one representation for every cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Assessments {
    Phf(Vec<Vec<ProbabilisticHesitantElement>>),
    Hf(Vec<Vec<HesitantElement>>),
    Crisp(Vec<Vec<f64>>),
}

impl Assessments {
    pub fn mode(&self) -> Mode {
        match self {
            Self::Phf(_) => Mode::Phf,
            Self::Hf(_) => Mode::Hf,
            Self::Crisp(_) => Mode::Crisp,
        }
    }

    fn row_lengths(&self) -> Vec<usize> {
        match self {
            Self::Phf(rows) => rows.iter().map(Vec::len).collect(),
            Self::Hf(rows) => rows.iter().map(Vec::len).collect(),
            Self::Crisp(rows) => rows.iter().map(Vec::len).collect(),
        }
    }
}

/// Which TODIM pipeline to run. Each method accepts exactly one cell mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Phf,
    Hf,
    Classical,
}

impl Method {
    pub fn for_mode(mode: Mode) -> Self {
        match mode {
            Mode::Phf => Self::Phf,
            Mode::Hf => Self::Hf,
            Mode::Crisp => Self::Classical,
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            Self::Phf => Mode::Phf,
            Self::Hf => Mode::Hf,
            Self::Classical => Mode::Crisp,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Phf => "phf",
            Self::Hf => "hf",
            Self::Classical => "classical",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "phf" => Ok(Self::Phf),
            "hf" => Ok(Self::Hf),
            "classical" | "crisp" => Ok(Self::Classical),
            other => Err(format!(
                "unknown method `{other}` (expected phf, hf or classical)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    pub alternatives: Vec<String>,
    pub criteria: Vec<Criterion>,
    pub assessments: Assessments,
    pub weights: WeightSpecification,
    pub lambda: f64,
}

impl DecisionProblem {
    pub fn mode(&self) -> Mode {
        self.assessments.mode()
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    /// Structural checks: non-empty axes, matrix shape, weight count, lambda.
    pub fn validate(&self) -> Result<(), EngineError> {
        if self.alternatives.is_empty() {
            return Err(EngineError::Empty("alternatives"));
        }
        if self.criteria.is_empty() {
            return Err(EngineError::Empty("criteria"));
        }
        let rows = self.assessments.row_lengths();
        if rows.len() != self.alternatives.len() {
            return Err(EngineError::DimensionMismatch {
                what: "assessment rows".into(),
                expected: self.alternatives.len(),
                got: rows.len(),
            });
        }
        for (i, len) in rows.into_iter().enumerate() {
            if len != self.criteria.len() {
                return Err(EngineError::DimensionMismatch {
                    what: format!("cells in assessment row {i}"),
                    expected: self.criteria.len(),
                    got: len,
                });
            }
        }
        if self.weights.len() != self.criteria.len() {
            return Err(EngineError::DimensionMismatch {
                what: "criterion weights".into(),
                expected: self.criteria.len(),
                got: self.weights.len(),
            });
        }
        check_lambda(self.lambda)
    }

    /// Hesitant twin of a probabilistic problem: probabilities are dropped
    /// and each cell keeps its multiset of degrees. Weights given as
    /// probabilistic elements are stripped the same way.
    pub fn strip_probabilities(&self) -> Self {
        let strip = |e: &ProbabilisticHesitantElement| {
            HesitantElement::new(e.entries().iter().map(|x| x.degree).collect())
                .expect("a valid element has at least one non-negative degree")
        };
        let assessments = match &self.assessments {
            Assessments::Phf(rows) => Assessments::Hf(
                rows.iter()
                    .map(|row| row.iter().map(strip).collect())
                    .collect(),
            ),
            other => other.clone(),
        };
        let weights = match &self.weights {
            WeightSpecification::Phf(v) => WeightSpecification::Hf(v.iter().map(strip).collect()),
            other => other.clone(),
        };
        Self {
            alternatives: self.alternatives.clone(),
            criteria: self.criteria.clone(),
            assessments,
            weights,
            lambda: self.lambda,
        }
    }
}

pub(crate) fn check_lambda(lambda: f64) -> Result<(), EngineError> {
    if lambda.is_finite() && lambda > 0.0 {
        Ok(())
    } else {
        Err(EngineError::NonPositiveLambda(lambda))
    }
}

/// Everything one evaluation produces.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    pub method: Method,
    pub lambda: f64,
    pub weights: WeightVector,
    pub breakdown: DominanceBreakdown,
    pub ranking: RankingResult,
}

/// Runs the pipeline that matches the problem's cell mode.
pub fn evaluate(problem: &DecisionProblem) -> Result<Evaluation, EngineError> {
    run(problem, Method::for_mode(problem.mode()), None, false)
}

/// Like [`evaluate`], but fails unless `method` matches the cell mode.
pub fn evaluate_with(problem: &DecisionProblem, method: Method) -> Result<Evaluation, EngineError> {
    run(problem, method, None, false)
}

/// Computes the per-criterion matrices on the rayon pool. Aggregation runs
/// in a fixed order, so the result is bit-identical to [`evaluate`].
pub fn evaluate_parallel(problem: &DecisionProblem) -> Result<Evaluation, EngineError> {
    run(problem, Method::for_mode(problem.mode()), None, true)
}

pub(crate) fn run(
    problem: &DecisionProblem,
    method: Method,
    weights: Option<WeightVector>,
    parallel: bool,
) -> Result<Evaluation, EngineError> {
    if method.mode() != problem.mode() {
        return Err(EngineError::ModeMismatch {
            method: method.to_string(),
            mode: problem.mode().to_string(),
        });
    }
    problem.validate()?;
    let n = problem.alternatives.len();
    if n < 2 {
        return Err(EngineError::TooFewAlternatives(n));
    }
    let weights = match weights {
        Some(w) => w,
        None => problem.weights.derive()?,
    };
    let prepared = Prepared::new(problem, &weights)?;
    let m = problem.criteria.len();
    let per_criterion: Vec<Vec<Vec<f64>>> = if parallel {
        (0..m)
            .into_par_iter()
            .map(|j| prepared.criterion_matrix(j))
            .collect()
    } else {
        (0..m).map(|j| prepared.criterion_matrix(j)).collect()
    };
    let breakdown = DominanceBreakdown::from_criteria(per_criterion);
    let ranking = RankingResult::from_row_sums(&breakdown.row_sums, method, problem.lambda);
    Ok(Evaluation {
        method,
        lambda: problem.lambda,
        weights,
        breakdown,
        ranking,
    })
}
