use std::cmp::Ordering;

use serde::Serialize;

use super::{Assessments, CriterionKind, DecisionProblem, Method};
use crate::error::EngineError;
use crate::hf::{hf_compare, hf_distance_at_len, HesitantElement};
use crate::phf::{compare, distance_at_len, Direction, ProbabilisticHesitantElement};
use crate::weighting::WeightVector;

/// Per-criterion dominance matrices, their sum over criteria, and the row
/// sums of that aggregate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceBreakdown {
    /// `per_criterion[j][i][k]` is the dominance of alternative `i` over `k`
    /// under criterion `j`.
    pub per_criterion: Vec<Vec<Vec<f64>>>,
    pub aggregated: Vec<Vec<f64>>,
    pub row_sums: Vec<f64>,
}

impl DominanceBreakdown {
    pub(crate) fn from_criteria(per_criterion: Vec<Vec<Vec<f64>>>) -> Self {
        let aggregated = aggregate(&per_criterion);
        let row_sums = aggregated.iter().map(|row| row.iter().sum()).collect();
        Self {
            per_criterion,
            aggregated,
            row_sums,
        }
    }
}

/// Sums per-criterion matrices cell by cell, criteria in index order.
pub fn aggregate(per_criterion: &[Vec<Vec<f64>>]) -> Vec<Vec<f64>> {
    let Some(first) = per_criterion.first() else {
        return Vec::new();
    };
    let n = first.len();
    let mut theta = vec![vec![0.0; n]; n];
    for matrix in per_criterion {
        for (acc, row) in theta.iter_mut().zip(matrix) {
            for (a, v) in acc.iter_mut().zip(row) {
                *a += v;
            }
        }
    }
    theta
}

/// The prospect-shaped kernel shared by all three pipelines.
///
/// `order` is how alternative `i`'s cell compares to `k`'s; `share` is the
/// criterion's relative weight over the sum of relative weights. Cost
/// criteria swap the gain and loss branches.
pub(crate) fn prospect(
    order: Ordering,
    kind: CriterionKind,
    distance: f64,
    share: f64,
    lambda: f64,
) -> f64 {
    let gain = || (share * distance).sqrt();
    let loss = || -(distance / share).sqrt() / lambda;
    match (order, kind) {
        (Ordering::Equal, _) => 0.0,
        (Ordering::Greater, CriterionKind::Benefit) | (Ordering::Less, CriterionKind::Cost) => {
            gain()
        }
        (Ordering::Less, CriterionKind::Benefit) | (Ordering::Greater, CriterionKind::Cost) => {
            loss()
        }
    }
}

enum Cells {
    Phf(Vec<Vec<ProbabilisticHesitantElement>>),
    Hf(Vec<Vec<HesitantElement>>),
    /// Cost columns already negated.
    Crisp(Vec<Vec<f64>>),
}

/// A problem with normalized cells, per-column padding lengths and derived
/// weights, ready for cell-by-cell evaluation.
pub(crate) struct Prepared<'a> {
    problem: &'a DecisionProblem,
    weights: &'a WeightVector,
    cells: Cells,
    column_len: Vec<usize>,
}

impl<'a> Prepared<'a> {
    pub(crate) fn new(
        problem: &'a DecisionProblem,
        weights: &'a WeightVector,
    ) -> Result<Self, EngineError> {
        let m = problem.criteria.len();
        if weights.len() != m {
            return Err(EngineError::DimensionMismatch {
                what: "criterion weights".into(),
                expected: m,
                got: weights.len(),
            });
        }
        let (cells, column_len) = match &problem.assessments {
            Assessments::Phf(rows) => {
                let mut normalized = Vec::with_capacity(rows.len());
                for (i, row) in rows.iter().enumerate() {
                    let mut out = Vec::with_capacity(row.len());
                    for (j, cell) in row.iter().enumerate() {
                        out.push(cell.normalize().map_err(|source| EngineError::Assessment {
                            alternative: i,
                            criterion: j,
                            source,
                        })?);
                    }
                    normalized.push(out);
                }
                let lens = column_lengths(rows, m, ProbabilisticHesitantElement::len);
                (Cells::Phf(normalized), lens)
            }
            Assessments::Hf(rows) => {
                let lens = column_lengths(rows, m, HesitantElement::len);
                (Cells::Hf(rows.clone()), lens)
            }
            Assessments::Crisp(rows) => {
                let signed = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .zip(&problem.criteria)
                            .map(|(&y, c)| match c.kind {
                                CriterionKind::Benefit => y,
                                CriterionKind::Cost => -y,
                            })
                            .collect()
                    })
                    .collect();
                (Cells::Crisp(signed), vec![1; m])
            }
        };
        Ok(Self {
            problem,
            weights,
            cells,
            column_len,
        })
    }

    pub(crate) fn cell(&self, i: usize, k: usize, j: usize) -> f64 {
        if i == k {
            return 0.0;
        }
        let share = self.weights.share(j);
        let lambda = self.problem.lambda;
        let len = self.column_len[j];
        match &self.cells {
            Cells::Phf(rows) => {
                let (a, b) = (&rows[i][j], &rows[k][j]);
                let d = distance_at_len(a, b, len, Direction::Ascending)
                    .expect("column length covers every cell");
                prospect(
                    compare(a, b),
                    self.problem.criteria[j].kind,
                    d,
                    share,
                    lambda,
                )
            }
            Cells::Hf(rows) => {
                let (a, b) = (&rows[i][j], &rows[k][j]);
                let d = hf_distance_at_len(a, b, len).expect("column length covers every cell");
                prospect(
                    hf_compare(a, b),
                    self.problem.criteria[j].kind,
                    d,
                    share,
                    lambda,
                )
            }
            Cells::Crisp(rows) => {
                let diff = rows[i][j] - rows[k][j];
                let order = diff.partial_cmp(&0.0).unwrap_or(Ordering::Equal);
                prospect(order, CriterionKind::Benefit, diff.abs(), share, lambda)
            }
        }
    }

    pub(crate) fn criterion_matrix(&self, j: usize) -> Vec<Vec<f64>> {
        let n = self.problem.alternatives.len();
        (0..n)
            .map(|i| (0..n).map(|k| self.cell(i, k, j)).collect())
            .collect()
    }
}

fn column_lengths<T>(rows: &[Vec<T>], m: usize, len: impl Fn(&T) -> usize) -> Vec<usize> {
    (0..m)
        .map(|j| rows.iter().map(|row| len(&row[j])).max().unwrap_or(1))
        .collect()
}

fn single_cell(
    problem: &DecisionProblem,
    method: Method,
    i: usize,
    k: usize,
    j: usize,
) -> Result<f64, EngineError> {
    if method.mode() != problem.mode() {
        return Err(EngineError::ModeMismatch {
            method: method.to_string(),
            mode: problem.mode().to_string(),
        });
    }
    problem.validate()?;
    let n = problem.alternatives.len();
    let m = problem.criteria.len();
    for (what, index, len) in [
        ("alternative", i, n),
        ("alternative", k, n),
        ("criterion", j, m),
    ] {
        if index >= len {
            return Err(EngineError::IndexOutOfRange { what, index, len });
        }
    }
    let weights = problem.weights.derive()?;
    Ok(Prepared::new(problem, &weights)?.cell(i, k, j))
}

/// Dominance of alternative `i` over `k` under criterion `j` for a
/// probabilistic hesitant problem. Cells are normalized and padded to the
/// longest element of column `j` before the distance is taken.
pub fn phf_dominance(
    problem: &DecisionProblem,
    i: usize,
    k: usize,
    j: usize,
) -> Result<f64, EngineError> {
    single_cell(problem, Method::Phf, i, k, j)
}

/// Hesitant variant: the gain/loss side comes from the unpadded elements,
/// the distance from elements padded to the column's longest element.
pub fn hf_dominance(
    problem: &DecisionProblem,
    i: usize,
    k: usize,
    j: usize,
) -> Result<f64, EngineError> {
    single_cell(problem, Method::Hf, i, k, j)
}

/// Classical TODIM on crisp values; cost columns are negated first.
pub fn crisp_dominance(
    problem: &DecisionProblem,
    i: usize,
    k: usize,
    j: usize,
) -> Result<f64, EngineError> {
    single_cell(problem, Method::Classical, i, k, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Criterion;
    use crate::weighting::WeightSpecification;

    fn crisp(
        rows: Vec<Vec<f64>>,
        weights: Vec<f64>,
        lambda: f64,
        kinds: &[CriterionKind],
    ) -> DecisionProblem {
        DecisionProblem {
            alternatives: (1..=rows.len()).map(|i| format!("A{i}")).collect(),
            criteria: kinds
                .iter()
                .enumerate()
                .map(|(j, &kind)| Criterion::new(format!("c{}", j + 1), kind))
                .collect(),
            assessments: Assessments::Crisp(rows),
            weights: WeightSpecification::Crisp(weights),
            lambda,
        }
    }

    #[test]
    fn kernel_branches() {
        use CriterionKind::*;
        assert_eq!(prospect(Ordering::Equal, Benefit, 4.0, 0.25, 2.0), 0.0);
        assert_eq!(prospect(Ordering::Greater, Benefit, 4.0, 0.25, 2.0), 1.0);
        assert_eq!(prospect(Ordering::Less, Benefit, 4.0, 0.25, 2.0), -2.0);
        assert_eq!(prospect(Ordering::Less, Cost, 4.0, 0.25, 2.0), 1.0);
        assert_eq!(prospect(Ordering::Greater, Cost, 4.0, 0.25, 2.0), -2.0);
    }

    #[test]
    fn crisp_single_criterion() {
        let p = crisp(
            vec![vec![1.0], vec![0.0]],
            vec![1.0],
            1.0,
            &[CriterionKind::Benefit],
        );
        assert_eq!(crisp_dominance(&p, 0, 1, 0).unwrap(), 1.0);
        assert_eq!(crisp_dominance(&p, 1, 0, 0).unwrap(), -1.0);
        assert_eq!(crisp_dominance(&p, 0, 0, 0).unwrap(), 0.0);

        let p = crisp(
            vec![vec![0.4], vec![0.4]],
            vec![1.0],
            1.0,
            &[CriterionKind::Benefit],
        );
        assert_eq!(crisp_dominance(&p, 0, 1, 0).unwrap(), 0.0);
    }

    #[test]
    fn crisp_two_criteria() {
        let p = crisp(
            vec![vec![0.9, 0.2], vec![0.5, 0.7]],
            vec![0.6, 0.4],
            2.25,
            &[CriterionKind::Benefit, CriterionKind::Benefit],
        );
        let psi = crate::engine::evaluate(&p).unwrap().breakdown.aggregated[0][1];
        // gain on c1: sqrt(0.6 * 0.4); loss on c2: sqrt(0.5 / 0.4) / 2.25
        assert!((psi - -0.007006046443317648).abs() < 1e-12, "{psi}");
    }

    #[test]
    fn crisp_cost_columns_are_negated() {
        let p = crisp(
            vec![vec![1.0], vec![0.0]],
            vec![1.0],
            1.0,
            &[CriterionKind::Cost],
        );
        assert_eq!(crisp_dominance(&p, 0, 1, 0).unwrap(), -1.0);
        assert_eq!(crisp_dominance(&p, 1, 0, 0).unwrap(), 1.0);
    }

    #[test]
    fn out_of_range_indices() {
        let p = crisp(
            vec![vec![1.0], vec![0.0]],
            vec![1.0],
            1.0,
            &[CriterionKind::Benefit],
        );
        assert!(matches!(
            crisp_dominance(&p, 2, 0, 0),
            Err(EngineError::IndexOutOfRange {
                what: "alternative",
                ..
            })
        ));
        assert!(matches!(
            crisp_dominance(&p, 0, 1, 3),
            Err(EngineError::IndexOutOfRange {
                what: "criterion",
                ..
            })
        ));
        assert!(matches!(
            phf_dominance(&p, 0, 1, 0),
            Err(EngineError::ModeMismatch { .. })
        ));
    }

    #[test]
    fn aggregate_sums_cells() {
        let a = vec![vec![0.0, 1.0], vec![-1.0, 0.0]];
        let b = vec![vec![0.0, 0.5], vec![2.0, 0.0]];
        assert_eq!(aggregate(&[a, b]), vec![vec![0.0, 1.5], vec![1.0, 0.0]]);
        assert!(aggregate(&[]).is_empty());
    }
}
