//! Plain hesitant fuzzy elements: multisets of degrees without probabilities.

use std::cmp::Ordering;

use crate::error::ElementError;
use crate::phf::rank_by_score_then_spread;

#[derive(Debug, Clone, PartialEq)]
pub struct HesitantElement {
    degrees: Vec<f64>,
}

impl HesitantElement {
    pub fn new(degrees: Vec<f64>) -> Result<Self, ElementError> {
        if degrees.is_empty() {
            return Err(ElementError::EmptyElement);
        }
        for &d in &degrees {
            if !d.is_finite() {
                return Err(ElementError::NonFinite(d));
            }
            if d < 0.0 {
                return Err(ElementError::NegativeDegree(d));
            }
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn max_degree(&self) -> f64 {
        self.degrees
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Arithmetic mean of the degrees.
    pub fn score(&self) -> f64 {
        self.degrees.iter().sum::<f64>() / self.len() as f64
    }

    /// `sqrt(sum of squared deviations) / n`.
    pub fn variance(&self) -> f64 {
        let mean = self.score();
        let ss: f64 = self.degrees.iter().map(|d| (d - mean).powi(2)).sum();
        ss.sqrt() / self.len() as f64
    }

    /// Optimistic extension: repeats the largest degree up to `target` entries.
    pub fn pad(&self, target: usize) -> Result<Self, ElementError> {
        if target < self.len() {
            return Err(ElementError::TargetTooSmall {
                count: self.len(),
                target,
            });
        }
        let mut degrees = self.degrees.clone();
        degrees.resize(target, self.max_degree());
        Ok(Self { degrees })
    }
}

/// Compares by mean, then by lower variance. Call this on the unpadded
/// elements; padding shifts the mean.
pub fn hf_compare(a: &HesitantElement, b: &HesitantElement) -> Ordering {
    rank_by_score_then_spread((a.score(), a.variance()), (b.score(), b.variance()))
}

pub fn hf_distance(a: &HesitantElement, b: &HesitantElement) -> f64 {
    hamming(a, b, a.len().max(b.len()))
}

/// Hamming distance with both elements padded to exactly `len` degrees.
pub fn hf_distance_at_len(
    a: &HesitantElement,
    b: &HesitantElement,
    len: usize,
) -> Result<f64, ElementError> {
    let count = a.len().max(b.len());
    if len < count {
        return Err(ElementError::TargetTooSmall { count, target: len });
    }
    Ok(hamming(a, b, len))
}

fn hamming(a: &HesitantElement, b: &HesitantElement, len: usize) -> f64 {
    let sorted = |e: &HesitantElement| {
        let mut d = e.pad(len).expect("len covers element").degrees;
        d.sort_by(f64::total_cmp);
        d
    };
    let (a, b) = (sorted(a), sorted(b));
    let total: f64 = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).sum();
    total / len as f64
}
