use thiserror::Error;

/// Failures of the element algebra (probabilistic and plain hesitant elements).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ElementError {
    #[error("element has no entries")]
    EmptyElement,
    #[error("probability {0} is negative")]
    NegativeProbability(f64),
    #[error("degree {0} is negative")]
    NegativeDegree(f64),
    #[error("non-finite value {0}")]
    NonFinite(f64),
    #[error("probabilities sum to zero, cannot renormalize")]
    ZeroProbabilityMass,
    #[error("probabilities sum to {0}, which exceeds 1")]
    ProbabilityMassExceedsOne(f64),
    #[error("probabilities sum to {0}; normalize the element first")]
    UnnormalizedProbabilities(f64),
    #[error("cannot pad an element of {count} entries down to {target}")]
    TargetTooSmall { count: usize, target: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeightError {
    #[error("no criteria weights given")]
    NoCriteria,
    #[error("weight of criterion {index} is {value}; weights must be positive")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("weight of criterion {index}: {source}")]
    Element {
        index: usize,
        #[source]
        source: ElementError,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("ranking needs at least two alternatives, got {0}")]
    TooFewAlternatives(usize),
    #[error("lambda must be positive, got {0}")]
    NonPositiveLambda(f64),
    #[error("method {method} cannot evaluate a problem with {mode} assessments")]
    ModeMismatch { method: String, mode: String },
    #[error("index out of range: {what} {index} (have {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("{what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        got: usize,
    },
    #[error("problem has no {0}")]
    Empty(&'static str),
    #[error("assessment of alternative {alternative}, criterion {criterion}: {source}")]
    Assessment {
        alternative: usize,
        criterion: usize,
        #[source]
        source: ElementError,
    },
    #[error(transparent)]
    Weight(#[from] WeightError),
}
