//! Random problem strategies.

use proptest::prelude::*;
use todim_core::{
    Assessments, Criterion, CriterionKind, DecisionProblem, Entry, ProbabilisticHesitantElement,
    WeightSpecification,
};

/// Probabilities summing to a mass in (0.5, 1].
fn probabilities(len: usize) -> impl Strategy<Value = Vec<f64>> {
    (prop::collection::vec(1u32..=100, len), 50u32..=100).prop_map(|(raw, mass)| {
        let total: u32 = raw.iter().sum();
        raw.iter()
            .map(|&r| r as f64 / total as f64 * (mass as f64 / 100.0))
            .collect()
    })
}

pub fn phfe_with(
    degrees: impl Strategy<Value = f64> + Clone,
    max_len: usize,
) -> impl Strategy<Value = ProbabilisticHesitantElement> {
    (1..=max_len).prop_flat_map(move |len| {
        (
            prop::collection::vec(degrees.clone(), len),
            probabilities(len),
        )
            .prop_map(|(d, p)| {
                let entries = d
                    .into_iter()
                    .zip(p)
                    .map(|(d, p)| Entry::new(d, p))
                    .collect();
                ProbabilisticHesitantElement::new(entries).unwrap()
            })
    })
}

/// Degrees on an integer grid in [0, 100].
pub fn phfe() -> impl Strategy<Value = ProbabilisticHesitantElement> {
    phfe_with((0u32..=100).prop_map(f64::from), 4)
}

/// Weight elements with degrees in (0, 1].
pub fn weight_phfe() -> impl Strategy<Value = ProbabilisticHesitantElement> {
    phfe_with((1u32..=100).prop_map(|d| d as f64 / 100.0), 4)
}

fn kinds(m: usize) -> impl Strategy<Value = Vec<CriterionKind>> {
    prop::collection::vec(
        prop_oneof![Just(CriterionKind::Benefit), Just(CriterionKind::Cost)],
        m,
    )
}

fn assemble(
    kinds: Vec<CriterionKind>,
    assessments: Assessments,
    weights: WeightSpecification,
    n: usize,
) -> DecisionProblem {
    DecisionProblem {
        alternatives: (1..=n).map(|i| format!("A{i}")).collect(),
        criteria: kinds
            .into_iter()
            .enumerate()
            .map(|(j, k)| Criterion::new(format!("c{}", j + 1), k))
            .collect(),
        assessments,
        weights,
        lambda: 2.25,
    }
}

/// A probabilistic hesitant problem with n in 2..=6, m in 1..=5 and
/// elements of up to four entries.
pub fn phf_problem() -> impl Strategy<Value = DecisionProblem> {
    (2usize..=6, 1usize..=5).prop_flat_map(|(n, m)| {
        (
            kinds(m),
            prop::collection::vec(prop::collection::vec(phfe(), m), n),
            prop::collection::vec(weight_phfe(), m),
            (1u32..=1000).prop_map(|l| l as f64 / 100.0),
        )
            .prop_map(move |(kinds, cells, weights, lambda)| {
                let mut p = assemble(
                    kinds,
                    Assessments::Phf(cells),
                    WeightSpecification::Phf(weights),
                    n,
                );
                p.lambda = lambda;
                p
            })
    })
}

/// A crisp problem on an integer grid together with its singleton
/// probabilistic twin.
pub fn crisp_pair() -> impl Strategy<Value = (DecisionProblem, DecisionProblem)> {
    (2usize..=6, 1usize..=5).prop_flat_map(|(n, m)| {
        (
            kinds(m),
            prop::collection::vec(prop::collection::vec(0u32..=100, m), n),
            prop::collection::vec(1u32..=100, m),
        )
            .prop_map(move |(kinds, cells, weights)| {
                let crisp_cells: Vec<Vec<f64>> = cells
                    .iter()
                    .map(|r| r.iter().map(|&v| v as f64).collect())
                    .collect();
                let crisp_weights: Vec<f64> = weights.iter().map(|&w| w as f64 / 100.0).collect();
                let singleton_cells = crisp_cells
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|&v| ProbabilisticHesitantElement::singleton(v).unwrap())
                            .collect()
                    })
                    .collect();
                let singleton_weights = crisp_weights
                    .iter()
                    .map(|&w| ProbabilisticHesitantElement::singleton(w).unwrap())
                    .collect();
                let crisp = assemble(
                    kinds.clone(),
                    Assessments::Crisp(crisp_cells),
                    WeightSpecification::Crisp(crisp_weights),
                    n,
                );
                let phf = assemble(
                    kinds,
                    Assessments::Phf(singleton_cells),
                    WeightSpecification::Phf(singleton_weights),
                    n,
                );
                (crisp, phf)
            })
    })
}

/// Multiply every assessment degree by `c`, leaving probabilities alone.
pub fn scaled(problem: &DecisionProblem, c: f64) -> DecisionProblem {
    let mut out = problem.clone();
    if let Assessments::Phf(rows) = &problem.assessments {
        out.assessments = Assessments::Phf(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|e| {
                            ProbabilisticHesitantElement::new(
                                e.entries()
                                    .iter()
                                    .map(|x| Entry::new(x.degree * c, x.probability))
                                    .collect(),
                            )
                            .unwrap()
                        })
                        .collect()
                })
                .collect(),
        );
    }
    out
}
