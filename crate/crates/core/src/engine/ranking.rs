use serde::Serialize;

use super::Method;
use crate::error::EngineError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingResult {
    pub method: Method,
    pub lambda: f64,
    /// Min-max normalized dominance row sums, in input order.
    pub overall: Vec<f64>,
    /// Alternative indices, best first.
    pub order: Vec<usize>,
}

impl RankingResult {
    pub(crate) fn from_row_sums(row_sums: &[f64], method: Method, lambda: f64) -> Self {
        let overall = normalize_min_max(row_sums);
        let order = rank_order(&overall);
        Self {
            method,
            lambda,
            overall,
            order,
        }
    }

    pub fn ordered_names<'a>(&self, names: &'a [String]) -> Vec<&'a str> {
        self.order.iter().map(|&i| names[i].as_str()).collect()
    }

    /// 1-based rank of every alternative, in input order.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.order.len()];
        for (pos, &i) in self.order.iter().enumerate() {
            ranks[i] = pos + 1;
        }
        ranks
    }
}

/// Overall dominance of every alternative from the aggregated matrix.
///
/// When every row sum is equal, all alternatives get 1.
pub fn overall(theta: &[Vec<f64>]) -> Result<Vec<f64>, EngineError> {
    if theta.len() < 2 {
        return Err(EngineError::TooFewAlternatives(theta.len()));
    }
    let sums: Vec<f64> = theta.iter().map(|row| row.iter().sum()).collect();
    Ok(normalize_min_max(&sums))
}

fn normalize_min_max(sums: &[f64]) -> Vec<f64> {
    let min = sums.iter().copied().fold(f64::INFINITY, f64::min);
    let max = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == min {
        return vec![1.0; sums.len()];
    }
    sums.iter().map(|s| (s - min) / (max - min)).collect()
}

/// Indices sorted by descending value; equal values keep input order.
pub fn rank_order(overall: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..overall.len()).collect();
    order.sort_by(|&a, &b| overall[b].total_cmp(&overall[a]).then(a.cmp(&b)));
    order
}
