use serde::Serialize;

use super::{check_lambda, run, DecisionProblem, Method, RankingResult};
use crate::error::{EngineError, WeightError};
use crate::weighting::{relativize, WeightVector};

/// Re-evaluates the problem once per lambda.
pub fn sweep_lambda(
    problem: &DecisionProblem,
    lambdas: &[f64],
) -> Result<Vec<RankingResult>, EngineError> {
    for &l in lambdas {
        check_lambda(l)?;
    }
    let method = Method::for_mode(problem.mode());
    let weights = problem.weights.derive()?;
    lambdas
        .iter()
        .map(|&l| {
            let p = problem.clone().with_lambda(l);
            run(&p, method, Some(weights.clone()), false).map(|e| e.ranking)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Perturbation {
    pub ranking: RankingResult,
    pub weights: WeightVector,
}

/// Adds `delta` to the derived weight of criterion `j` and re-ranks.
pub fn perturb_weight(
    problem: &DecisionProblem,
    j: usize,
    delta: f64,
) -> Result<Perturbation, EngineError> {
    let m = problem.criteria.len();
    if j >= m {
        return Err(EngineError::IndexOutOfRange {
            what: "criterion",
            index: j,
            len: m,
        });
    }
    let mut deltas = vec![0.0; m];
    deltas[j] = delta;
    perturb_weights(problem, &deltas)
}

/// Adds one delta per criterion to the derived weights, re-relativizes and
/// re-ranks. The perturbed weights are not renormalized; relative weights
/// do not depend on the overall scale.
pub fn perturb_weights(
    problem: &DecisionProblem,
    deltas: &[f64],
) -> Result<Perturbation, EngineError> {
    let m = problem.criteria.len();
    if deltas.len() != m {
        return Err(EngineError::DimensionMismatch {
            what: "weight deltas".into(),
            expected: m,
            got: deltas.len(),
        });
    }
    let shifted: Vec<f64> = problem
        .weights
        .derive()?
        .weights
        .iter()
        .zip(deltas)
        .map(|(w, d)| w + d)
        .collect();
    if let Some((index, &value)) = shifted.iter().enumerate().find(|(_, w)| **w <= 0.0) {
        return Err(WeightError::NonPositiveWeight { index, value }.into());
    }
    let weights = relativize(&shifted)?;
    let eval = run(
        problem,
        Method::for_mode(problem.mode()),
        Some(weights),
        false,
    )?;
    Ok(Perturbation {
        ranking: eval.ranking,
        weights: eval.weights,
    })
}
