//! Probabilistic hesitant fuzzy elements.
//!
//! An element is a multiset of `(degree, probability)` pairs. Probabilities
//! may sum to less than one on input; [`ProbabilisticHesitantElement::normalize`]
//! spreads the missing mass proportionally. Score, variance and the
//! comparison rule require normalized probabilities, while the distance only
//! looks at the `probability * degree` products of the ordered entries.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::ElementError;

/// Slack allowed when checking that probabilities sum to one.
pub const PROBABILITY_TOLERANCE: f64 = 1e-9;

/// Score (and variance) differences at or below this are treated as ties.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub degree: f64,
    pub probability: f64,
}

impl Entry {
    pub fn new(degree: f64, probability: f64) -> Self {
        Self {
            degree,
            probability,
        }
    }

    pub fn product(&self) -> f64 {
        self.probability * self.degree
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Ascending,
    Descending,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilisticHesitantElement {
    entries: Vec<Entry>,
}

impl ProbabilisticHesitantElement {
    pub fn new(entries: Vec<Entry>) -> Result<Self, ElementError> {
        if entries.is_empty() {
            return Err(ElementError::EmptyElement);
        }
        for e in &entries {
            for v in [e.degree, e.probability] {
                if !v.is_finite() {
                    return Err(ElementError::NonFinite(v));
                }
            }
            if e.degree < 0.0 {
                return Err(ElementError::NegativeDegree(e.degree));
            }
            if e.probability < 0.0 {
                return Err(ElementError::NegativeProbability(e.probability));
            }
        }
        Ok(Self { entries })
    }

    /// Builds an element from `(degree, probability)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self, ElementError> {
        Self::new(pairs.iter().map(|&(d, p)| Entry::new(d, p)).collect())
    }

    /// A single degree held with certainty.
    pub fn singleton(degree: f64) -> Result<Self, ElementError> {
        Self::new(vec![Entry::new(degree, 1.0)])
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn probability_mass(&self) -> f64 {
        self.entries.iter().map(|e| e.probability).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.probability_mass() - 1.0).abs() <= PROBABILITY_TOLERANCE
    }

    pub fn max_degree(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.degree)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_degree(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.degree)
            .fold(f64::INFINITY, f64::min)
    }

    /// Rescales probabilities by their sum so they add up to one.
    ///
    /// Only a probability deficit is accepted; a mass above one (beyond
    /// [`PROBABILITY_TOLERANCE`]) is rejected.
    pub fn normalize(&self) -> Result<Self, ElementError> {
        let mass = self.probability_mass();
        if mass > 1.0 + PROBABILITY_TOLERANCE {
            return Err(ElementError::ProbabilityMassExceedsOne(mass));
        }
        if mass <= 0.0 {
            return Err(ElementError::ZeroProbabilityMass);
        }
        let entries = self
            .entries
            .iter()
            .map(|e| Entry::new(e.degree, e.probability / mass))
            .collect();
        Ok(Self { entries })
    }

    /// Appends the largest degree with probability zero until the element
    /// holds `target` entries. Score and variance are unaffected.
    pub fn pad(&self, target: usize) -> Result<Self, ElementError> {
        if target < self.len() {
            return Err(ElementError::TargetTooSmall {
                count: self.len(),
                target,
            });
        }
        let mut entries = self.entries.clone();
        entries.resize(target, Entry::new(self.max_degree(), 0.0));
        Ok(Self { entries })
    }

    /// Sorts entries by `probability * degree`, breaking product ties by
    /// degree, both in the requested direction. The sort is stable.
    pub fn order(&self, direction: Direction) -> OrderedPhfe {
        let mut entries = self.entries.clone();
        entries.sort_by(|a, b| {
            let ord = a
                .product()
                .total_cmp(&b.product())
                .then(a.degree.total_cmp(&b.degree));
            match direction {
                Direction::Ascending => ord,
                Direction::Descending => ord.reverse(),
            }
        });
        OrderedPhfe { entries, direction }
    }

    /// Probability-weighted mean degree.
    pub fn score(&self) -> Result<f64, ElementError> {
        self.require_normalized()?;
        Ok(self.expected_degree())
    }

    /// Probability-weighted squared deviation from the score.
    pub fn variance(&self) -> Result<f64, ElementError> {
        self.require_normalized()?;
        Ok(self.dispersion())
    }

    fn require_normalized(&self) -> Result<(), ElementError> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(ElementError::UnnormalizedProbabilities(
                self.probability_mass(),
            ))
        }
    }

    fn expected_degree(&self) -> f64 {
        self.entries.iter().map(Entry::product).sum()
    }

    fn dispersion(&self) -> f64 {
        let mean = self.expected_degree();
        self.entries
            .iter()
            .map(|e| e.probability * (e.degree - mean).powi(2))
            .sum()
    }
}

/// An element whose entries satisfy the ordering prerequisites.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedPhfe {
    entries: Vec<Entry>,
    direction: Direction,
}

impl OrderedPhfe {
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn products(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(Entry::product)
    }
}

/// Orders two normalized elements by score, then by lower variance.
pub fn compare(a: &ProbabilisticHesitantElement, b: &ProbabilisticHesitantElement) -> Ordering {
    debug_assert!(a.is_normalized() && b.is_normalized());
    rank_by_score_then_spread(
        (a.expected_degree(), a.dispersion()),
        (b.expected_degree(), b.dispersion()),
    )
}

pub(crate) fn rank_by_score_then_spread(a: (f64, f64), b: (f64, f64)) -> Ordering {
    let (score_a, spread_a) = a;
    let (score_b, spread_b) = b;
    if (score_a - score_b).abs() > TIE_TOLERANCE {
        return score_a.total_cmp(&score_b);
    }
    if (spread_a - spread_b).abs() > TIE_TOLERANCE {
        // lower spread is the better element
        return spread_b.total_cmp(&spread_a);
    }
    Ordering::Equal
}

/// Hamming distance between two elements, padding the shorter one to the
/// length of the longer.
pub fn distance(
    a: &ProbabilisticHesitantElement,
    b: &ProbabilisticHesitantElement,
    direction: Direction,
) -> f64 {
    let len = a.len().max(b.len());
    hamming(a, b, len, direction)
}

/// Hamming distance with both elements padded to exactly `len` entries.
///
/// The average runs over `len` positions, so padding a whole criterion
/// column to its longest element gives different values than padding each
/// pair to the longer of the two.
pub fn distance_at_len(
    a: &ProbabilisticHesitantElement,
    b: &ProbabilisticHesitantElement,
    len: usize,
    direction: Direction,
) -> Result<f64, ElementError> {
    let count = a.len().max(b.len());
    if len < count {
        return Err(ElementError::TargetTooSmall { count, target: len });
    }
    Ok(hamming(a, b, len, direction))
}

fn hamming(
    a: &ProbabilisticHesitantElement,
    b: &ProbabilisticHesitantElement,
    len: usize,
    direction: Direction,
) -> f64 {
    // len >= both counts, checked by the callers
    let a = a.pad(len).expect("len covers a").order(direction);
    let b = b.pad(len).expect("len covers b").order(direction);
    let total: f64 = a
        .products()
        .zip(b.products())
        .map(|(x, y)| (x - y).abs())
        .sum();
    total / len as f64
}
