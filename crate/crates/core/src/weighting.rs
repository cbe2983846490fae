//! Criterion weights: from fuzzy weight elements to normalized and relative
//! weights against the reference (heaviest) criterion.

use serde::Serialize;

use crate::error::WeightError;
use crate::hf::HesitantElement;
use crate::phf::{ProbabilisticHesitantElement, PROBABILITY_TOLERANCE};
use crate::Mode;

#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpecification {
    Phf(Vec<ProbabilisticHesitantElement>),
    Hf(Vec<HesitantElement>),
    Crisp(Vec<f64>),
}

impl WeightSpecification {
    pub fn mode(&self) -> Mode {
        match self {
            Self::Phf(_) => Mode::Phf,
            Self::Hf(_) => Mode::Hf,
            Self::Crisp(_) => Mode::Crisp,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Self::Phf(v) => v.len(),
            Self::Hf(v) => v.len(),
            Self::Crisp(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn derive(&self) -> Result<WeightVector, WeightError> {
        match self {
            Self::Phf(v) => derive_phf_weights(v),
            Self::Hf(v) => derive_hf_weights(v),
            Self::Crisp(v) => derive_crisp_weights(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector {
    /// Per-criterion weights: sum-to-one in phf and crisp mode, raw scores
    /// in hf mode.
    pub weights: Vec<f64>,
    /// Ratio of each weight to the reference criterion's weight.
    pub relative: Vec<f64>,
    pub reference_index: usize,
    pub relative_sum: f64,
}

impl WeightVector {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `relative[j] / relative_sum`, the share used in the gain branch.
    pub fn share(&self, j: usize) -> f64 {
        self.relative[j] / self.relative_sum
    }
}

/// Score of each (normalized) weight element, renormalized to sum to one.
pub fn derive_phf_weights(
    elements: &[ProbabilisticHesitantElement],
) -> Result<WeightVector, WeightError> {
    let mut scores = Vec::with_capacity(elements.len());
    let mut largest_total = 0.0;
    for (index, e) in elements.iter().enumerate() {
        let normalized = e
            .normalize()
            .map_err(|source| WeightError::Element { index, source })?;
        let s = normalized
            .score()
            .map_err(|source| WeightError::Element { index, source })?;
        scores.push(s);
        largest_total += e.max_degree();
    }
    if largest_total > 1.0 + PROBABILITY_TOLERANCE {
        log::warn!(
            "largest possible weights sum to {largest_total:.4} (> 1); weights are renormalized anyway"
        );
    }
    relativize(&sum_to_one(&scores)?)
}

/// Mean of each weight element; relative weights are score ratios.
pub fn derive_hf_weights(elements: &[HesitantElement]) -> Result<WeightVector, WeightError> {
    let scores: Vec<f64> = elements.iter().map(HesitantElement::score).collect();
    relativize(&scores)
}

pub fn derive_crisp_weights(weights: &[f64]) -> Result<WeightVector, WeightError> {
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > PROBABILITY_TOLERANCE {
        log::warn!("crisp weights sum to {total}; renormalizing");
    }
    relativize(&sum_to_one(weights)?)
}

fn sum_to_one(weights: &[f64]) -> Result<Vec<f64>, WeightError> {
    check_positive(weights)?;
    let total: f64 = weights.iter().sum();
    Ok(weights.iter().map(|w| w / total).collect())
}

fn check_positive(weights: &[f64]) -> Result<(), WeightError> {
    if weights.is_empty() {
        return Err(WeightError::NoCriteria);
    }
    match weights
        .iter()
        .enumerate()
        .find(|(_, w)| !(w.is_finite() && **w > 0.0))
    {
        Some((index, &value)) => Err(WeightError::NonPositiveWeight { index, value }),
        None => Ok(()),
    }
}

/// Picks the heaviest criterion as reference (lowest index on ties) and
/// divides every weight by it.
pub fn relativize(weights: &[f64]) -> Result<WeightVector, WeightError> {
    check_positive(weights)?;
    let mut reference_index = 0;
    for (j, w) in weights.iter().enumerate() {
        if *w > weights[reference_index] {
            reference_index = j;
        }
    }
    let reference = weights[reference_index];
    let mut relative: Vec<f64> = weights.iter().map(|w| w / reference).collect();
    relative[reference_index] = 1.0;
    let relative_sum = relative.iter().sum();
    Ok(WeightVector {
        weights: weights.to_vec(),
        relative,
        reference_index,
        relative_sum,
    })
}
