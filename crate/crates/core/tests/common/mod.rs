//! Shared test support: the case-study data typed in directly, the
//! reference results, and a brute-force oracle that shares no code with the
//! engine.

#![allow(dead_code)]

pub mod gen;

use todim_core::{
    Assessments, Criterion, DecisionProblem, HesitantElement, ProbabilisticHesitantElement,
    WeightSpecification,
};

pub type PhfCell = &'static [(f64, f64)];

pub const Y: [[PhfCell; 4]; 4] = [
    [
        &[(55.0, 0.22), (68.0, 0.51), (73.0, 0.27)],
        &[(60.0, 0.61), (66.0, 0.39)],
        &[(62.0, 0.69), (68.0, 0.21)],
        &[(64.0, 0.66), (72.0, 0.32)],
    ],
    [
        &[(62.0, 0.28), (77.0, 0.63)],
        &[(68.0, 0.29), (77.0, 0.71)],
        &[(60.0, 0.18), (73.0, 0.21), (85.0, 0.61)],
        &[(77.0, 0.60), (88.0, 0.36)],
    ],
    [
        &[(63.0, 0.32), (71.0, 0.48), (77.0, 0.12)],
        &[(66.0, 0.48), (71.0, 0.52)],
        &[(68.0, 0.59), (74.0, 0.32)],
        &[(71.0, 0.53), (78.0, 0.22), (81.0, 0.25)],
    ],
    [
        &[(67.0, 0.49), (72.0, 0.44)],
        &[(62.0, 0.55), (69.0, 0.45)],
        &[(67.0, 0.61), (71.0, 0.26)],
        &[(68.0, 0.36), (73.0, 0.41), (79.0, 0.15)],
    ],
];

pub const W: [PhfCell; 4] = [
    &[(0.34, 0.68), (0.40, 0.32)],
    &[(0.09, 0.39), (0.11, 0.61)],
    &[(0.19, 0.56), (0.22, 0.44)],
    &[(0.21, 0.43), (0.27, 0.57)],
];

/// Reference per-criterion dominance, keyed by 1-based `(i, k)`.
pub type ReferenceCells = [((usize, usize), [f64; 4]); 12];

pub const REFERENCE_PHF_CELLS: ReferenceCells = [
    ((1, 2), [-2.29, -4.60, -2.15, -1.89]),
    ((1, 3), [-1.05, -2.34, -2.00, -3.64]),
    ((1, 4), [-2.12, -2.61, -1.32, -2.55]),
    ((2, 1), [2.03, 1.16, 1.08, 1.14]),
    ((2, 3), [1.96, 1.29, 1.48, 2.11]),
    ((2, 4), [2.08, 1.34, 1.27, 1.77]),
    ((3, 1), [0.93, 0.59, 1.00, 2.20]),
    ((3, 2), [-2.20, -5.10, -2.94, -3.49]),
    ((3, 4), [-2.00, 0.44, 0.76, 1.57]),
    ((4, 1), [1.89, 0.66, 0.66, 1.54]),
    ((4, 2), [-2.34, -5.29, -2.52, -2.92]),
    ((4, 3), [1.78, -1.74, -1.51, -2.60]),
];

pub const REFERENCE_HF_CELLS: ReferenceCells = [
    ((1, 2), [-1.80, -4.14, -2.66, -3.36]),
    ((1, 3), [-1.56, -3.15, -2.30, -2.35]),
    ((1, 4), [-1.66, -2.13, -1.80, -1.74]),
    ((2, 1), [1.64, 1.02, 1.34, 1.98]),
    ((2, 3), [-1.07, 0.66, 1.22, 1.42]),
    ((2, 4), [-1.56, 0.87, 1.31, 1.70]),
    ((3, 1), [1.42, 0.78, 1.16, 1.39]),
    ((3, 2), [0.97, -2.69, -2.42, -2.40]),
    ((3, 4), [1.16, 0.57, 0.72, 0.94]),
    ((4, 1), [1.51, 0.52, 0.91, 1.02]),
    ((4, 2), [1.42, -3.56, -2.60, -2.88]),
    ((4, 3), [-1.28, -2.33, -1.43, -1.58]),
];

/// Reference aggregated dominance, keyed by 1-based `(i, k)`.
pub const REFERENCE_PHF_THETA: [((usize, usize), f64); 12] = [
    ((1, 2), -10.92),
    ((1, 3), -9.04),
    ((1, 4), -8.61),
    ((2, 1), 5.42),
    ((2, 3), 6.84),
    ((2, 4), 6.46),
    ((3, 1), 4.74),
    ((3, 2), -13.73),
    ((3, 4), 0.77),
    ((4, 1), 4.76),
    ((4, 2), -13.08),
    ((4, 3), -4.07),
];

pub const REFERENCE_HF_THETA: [((usize, usize), f64); 12] = [
    ((1, 2), -11.97),
    ((1, 3), -9.37),
    ((1, 4), -7.32),
    ((2, 1), 5.98),
    ((2, 3), 2.23),
    ((2, 4), 2.32),
    ((3, 1), 4.74),
    ((3, 2), -6.54),
    ((3, 4), 3.39),
    ((4, 1), 3.97),
    ((4, 2), -7.61),
    ((4, 3), -6.62),
];

pub const REFERENCE_PHF_OVERALL: [f64; 4] = [0.0, 1.0, 0.43, 0.34];
pub const REFERENCE_HF_OVERALL: [f64; 4] = [0.0, 1.0, 0.77, 0.47];
/// Relative weights at display precision.
pub const REFERENCE_PHF_RELATIVE: [f64; 4] = [1.0, 0.28, 0.57, 0.68];
pub const REFERENCE_HF_RELATIVE: [f64; 4] = [1.0, 0.27, 0.55, 0.65];

/// Alternative and criterion (0-based) of the reference cells that do not
/// follow from the stated rules: every pair involving A3 under c4.
pub const SUSPECT_ALTERNATIVE: usize = 2;
pub const SUSPECT_CRITERION: usize = 3;

pub fn is_suspect_cell(i: usize, k: usize, j: usize) -> bool {
    j == SUSPECT_CRITERION && (i == SUSPECT_ALTERNATIVE || k == SUSPECT_ALTERNATIVE)
}

pub fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("A{i}")).collect()
}

pub fn criteria(m: usize) -> Vec<Criterion> {
    (1..=m)
        .map(|j| Criterion::benefit(format!("c{j}")))
        .collect()
}

pub fn phf(pairs: &[(f64, f64)]) -> ProbabilisticHesitantElement {
    ProbabilisticHesitantElement::from_pairs(pairs).unwrap()
}

pub fn hf(pairs: &[(f64, f64)]) -> HesitantElement {
    HesitantElement::new(pairs.iter().map(|p| p.0).collect()).unwrap()
}

pub fn phf_problem() -> DecisionProblem {
    DecisionProblem {
        alternatives: names(4),
        criteria: criteria(4),
        assessments: Assessments::Phf(
            Y.iter()
                .map(|row| row.iter().map(|c| phf(c)).collect())
                .collect(),
        ),
        weights: WeightSpecification::Phf(W.iter().map(|w| phf(w)).collect()),
        lambda: 2.25,
    }
}

pub fn hf_problem() -> DecisionProblem {
    DecisionProblem {
        alternatives: names(4),
        criteria: criteria(4),
        assessments: Assessments::Hf(
            Y.iter()
                .map(|row| row.iter().map(|c| hf(c)).collect())
                .collect(),
        ),
        weights: WeightSpecification::Hf(W.iter().map(|w| hf(w)).collect()),
        lambda: 2.25,
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

pub struct OracleRun {
    /// `[j][i][k]`
    pub per_criterion: Vec<Vec<Vec<f64>>>,
    pub distances: Vec<Vec<Vec<f64>>>,
    pub theta: Vec<Vec<f64>>,
    pub overall: Vec<f64>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The ascending arrangement, found by trying every permutation and keeping
/// the first one whose products (then degrees on product ties) never
/// decrease.
fn ascending_by_enumeration(cell: &[(f64, f64)]) -> Vec<(f64, f64)> {
    for perm in permutations(cell.len()) {
        let arranged: Vec<(f64, f64)> = perm.iter().map(|&t| cell[t]).collect();
        let ok = arranged.windows(2).all(|w| {
            let (a, b) = (w[0].0 * w[0].1, w[1].0 * w[1].1);
            a < b || (a == b && w[0].0 <= w[1].0)
        });
        if ok {
            return arranged;
        }
    }
    unreachable!("some permutation is sorted")
}

fn renormalized(cell: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mass: f64 = cell.iter().map(|c| c.1).sum();
    cell.iter().map(|&(d, p)| (d, p / mass)).collect()
}

fn padded<T: Copy>(cell: &[T], len: usize, filler: T) -> Vec<T> {
    let mut v = cell.to_vec();
    while v.len() < len {
        v.push(filler);
    }
    v
}

fn expected(cell: &[(f64, f64)]) -> f64 {
    cell.iter().map(|&(d, p)| d * p).sum()
}

fn spread(cell: &[(f64, f64)]) -> f64 {
    let s = expected(cell);
    cell.iter().map(|&(d, p)| p * (d - s) * (d - s)).sum()
}

fn sign_of(score_a: f64, spread_a: f64, score_b: f64, spread_b: f64) -> i32 {
    if (score_a - score_b).abs() > 1e-9 {
        if score_a > score_b {
            1
        } else {
            -1
        }
    } else if (spread_a - spread_b).abs() > 1e-9 {
        if spread_a < spread_b {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

fn kernel(sign: i32, d: f64, rel: f64, rel_sum: f64, lambda: f64) -> f64 {
    match sign {
        1 => (rel / rel_sum * d).sqrt(),
        -1 => -(1.0 / lambda) * (rel_sum / rel * d).sqrt(),
        _ => 0.0,
    }
}

fn finish(per_criterion: Vec<Vec<Vec<f64>>>, distances: Vec<Vec<Vec<f64>>>) -> OracleRun {
    let n = per_criterion[0].len();
    let mut theta = vec![vec![0.0; n]; n];
    for m in &per_criterion {
        for i in 0..n {
            for k in 0..n {
                theta[i][k] += m[i][k];
            }
        }
    }
    let sums: Vec<f64> = theta.iter().map(|r| r.iter().sum()).collect();
    let lo = sums.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = sums.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let overall = sums.iter().map(|s| (s - lo) / (hi - lo)).collect();
    OracleRun {
        per_criterion,
        distances,
        theta,
        overall,
    }
}

/// Probabilistic hesitant TODIM with every cell padded to its column's
/// longest element, benefit criteria only.
pub fn oracle_phf(y: &[Vec<Vec<(f64, f64)>>], w: &[Vec<(f64, f64)>], lambda: f64) -> OracleRun {
    let n = y.len();
    let m = w.len();
    let raw: Vec<f64> = w.iter().map(|e| expected(&renormalized(e))).collect();
    let total: f64 = raw.iter().sum();
    let normalized: Vec<f64> = raw.iter().map(|x| x / total).collect();
    let top = normalized.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let rel: Vec<f64> = normalized.iter().map(|x| x / top).collect();
    let rel_sum: f64 = rel.iter().sum();

    let cells: Vec<Vec<Vec<(f64, f64)>>> = y
        .iter()
        .map(|r| r.iter().map(|c| renormalized(c)).collect())
        .collect();
    let mut per = vec![vec![vec![0.0; n]; n]; m];
    let mut dist = vec![vec![vec![0.0; n]; n]; m];
    for j in 0..m {
        let len = (0..n).map(|i| cells[i][j].len()).max().unwrap();
        for i in 0..n {
            for k in 0..n {
                if i == k {
                    continue;
                }
                let (a, b) = (&cells[i][j], &cells[k][j]);
                let top_a = a.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
                let top_b = b.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
                let pa = ascending_by_enumeration(&padded(a, len, (top_a, 0.0)));
                let pb = ascending_by_enumeration(&padded(b, len, (top_b, 0.0)));
                let d = pa
                    .iter()
                    .zip(&pb)
                    .map(|(x, y)| (x.0 * x.1 - y.0 * y.1).abs())
                    .sum::<f64>()
                    / len as f64;
                let s = sign_of(expected(a), spread(a), expected(b), spread(b));
                dist[j][i][k] = d;
                per[j][i][k] = kernel(s, d, rel[j], rel_sum, lambda);
            }
        }
    }
    finish(per, dist)
}

/// Hesitant TODIM: compare on unpadded means, distance on column-padded
/// ascending degrees.
pub fn oracle_hf(y: &[Vec<Vec<f64>>], w: &[Vec<f64>], lambda: f64) -> OracleRun {
    let n = y.len();
    let m = w.len();
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let dev = |v: &[f64]| {
        let mu = mean(v);
        v.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>().sqrt() / v.len() as f64
    };
    let raw: Vec<f64> = w.iter().map(|e| mean(e)).collect();
    let top = raw.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let rel: Vec<f64> = raw.iter().map(|x| x / top).collect();
    let rel_sum: f64 = rel.iter().sum();
    let mut per = vec![vec![vec![0.0; n]; n]; m];
    let mut dist = vec![vec![vec![0.0; n]; n]; m];
    for j in 0..m {
        let len = (0..n).map(|i| y[i][j].len()).max().unwrap();
        for i in 0..n {
            for k in 0..n {
                if i == k {
                    continue;
                }
                let (a, b) = (&y[i][j], &y[k][j]);
                let mut pa = padded(a, len, a.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
                let mut pb = padded(b, len, b.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
                pa.sort_by(|x, y| x.partial_cmp(y).unwrap());
                pb.sort_by(|x, y| x.partial_cmp(y).unwrap());
                let d = pa.iter().zip(&pb).map(|(x, y)| (x - y).abs()).sum::<f64>() / len as f64;
                let s = sign_of(mean(a), dev(a), mean(b), dev(b));
                dist[j][i][k] = d;
                per[j][i][k] = kernel(s, d, rel[j], rel_sum, lambda);
            }
        }
    }
    finish(per, dist)
}

pub fn case_study_y() -> Vec<Vec<Vec<(f64, f64)>>> {
    Y.iter()
        .map(|r| r.iter().map(|c| c.to_vec()).collect())
        .collect()
}

pub fn case_study_w() -> Vec<Vec<(f64, f64)>> {
    W.iter().map(|w| w.to_vec()).collect()
}

pub fn case_study_y_hf() -> Vec<Vec<Vec<f64>>> {
    Y.iter()
        .map(|r| r.iter().map(|c| c.iter().map(|p| p.0).collect()).collect())
        .collect()
}

pub fn case_study_w_hf() -> Vec<Vec<f64>> {
    W.iter().map(|w| w.iter().map(|p| p.0).collect()).collect()
}
