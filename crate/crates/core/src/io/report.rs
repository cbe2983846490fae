use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::serialize::to_canonical_string;
use super::ProblemDocument;
use crate::engine::{evaluate_with, DecisionProblem, Evaluation, Method, RankingResult};
use crate::error::EngineError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Self::Table),
            "json" => Ok(Self::Json),
            other => Err(format!(
                "unknown output format `{other}` (expected table or json)"
            )),
        }
    }
}

#[derive(Serialize)]
struct RankingView<'a> {
    overall: &'a [f64],
    order: Vec<&'a str>,
    ranks: Vec<usize>,
}

#[derive(Serialize)]
struct ReportView<'a> {
    alternatives: &'a [String],
    criteria: Vec<&'a str>,
    method: &'static str,
    lambda: f64,
    weights: &'a crate::weighting::WeightVector,
    breakdown: &'a crate::engine::DominanceBreakdown,
    ranking: RankingView<'a>,
    footnotes: &'a [String],
}

/// Full-precision JSON report of an evaluation.
pub fn report_value(problem: &DecisionProblem, eval: &Evaluation, footnotes: &[String]) -> Value {
    let view = ReportView {
        alternatives: &problem.alternatives,
        criteria: problem.criteria.iter().map(|c| c.name.as_str()).collect(),
        method: eval.method.as_str(),
        lambda: eval.lambda,
        weights: &eval.weights,
        breakdown: &eval.breakdown,
        ranking: RankingView {
            overall: &eval.ranking.overall,
            order: eval.ranking.ordered_names(&problem.alternatives),
            ranks: eval.ranking.ranks(),
        },
        footnotes,
    };
    serde_json::to_value(view).expect("report serializes")
}

/// One ranking as `{method, lambda, overall, order, ranks}` with alternative
/// names in `order`.
pub fn ranking_value(problem: &DecisionProblem, ranking: &RankingResult) -> Value {
    serde_json::json!({
        "method": ranking.method,
        "lambda": ranking.lambda,
        "overall": ranking.overall,
        "order": ranking.ordered_names(&problem.alternatives),
        "ranks": ranking.ranks(),
    })
}

/// Canonical text of any JSON value: sorted keys, pretty printed, newline
/// terminated.
pub fn canonical_json(value: &Value) -> String {
    to_canonical_string(value)
}

/// Canonical text of [`report_value`].
pub fn report_json(problem: &DecisionProblem, eval: &Evaluation, footnotes: &[String]) -> String {
    to_canonical_string(&report_value(problem, eval, footnotes))
}

pub fn emit_report(
    problem: &DecisionProblem,
    eval: &Evaluation,
    format: ReportFormat,
    footnotes: &[String],
) -> String {
    match format {
        ReportFormat::Json => report_json(problem, eval, footnotes),
        ReportFormat::Table => table(problem, eval, footnotes),
    }
}

/// One note per alternative whose overall dominance, shown at two
/// decimals, differs from the reference value shown the same way.
pub fn discrepancy_footnotes(
    problem: &DecisionProblem,
    ranking: &RankingResult,
    reference: &[f64],
) -> Vec<String> {
    problem
        .alternatives
        .iter()
        .zip(&ranking.overall)
        .zip(reference)
        .filter_map(|((name, &got), &want)| {
            let (shown, expected) = (overall_cell(got), overall_cell(want));
            (shown != expected)
                .then(|| format!("O({name}) = {shown} differs from the reference value {expected}"))
        })
        .collect()
}

/// Evaluates a document with `method`, optionally overriding its lambda,
/// and collects the footnotes that belong in its report.
pub fn evaluate_document(
    doc: &ProblemDocument,
    method: Method,
    lambda: Option<f64>,
) -> Result<(Evaluation, Vec<String>), EngineError> {
    let eval = match lambda {
        Some(l) => evaluate_with(&doc.problem.clone().with_lambda(l), method)?,
        None => evaluate_with(&doc.problem, method)?,
    };
    let notes = document_footnotes(doc, &eval);
    Ok((eval, notes))
}

/// Footnotes for an evaluation of `doc`. Reference values only apply at the
/// document's own lambda, so an override yields no notes.
pub fn document_footnotes(doc: &ProblemDocument, eval: &Evaluation) -> Vec<String> {
    match doc.reference_overall() {
        Some(reference) if eval.lambda == doc.problem.lambda => {
            discrepancy_footnotes(&doc.problem, &eval.ranking, reference)
        }
        _ => Vec::new(),
    }
}

fn fixed(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// Overall dominance is displayed as `0` / `1` at the anchors.
fn overall_cell(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else if x == 1.0 {
        "1".into()
    } else {
        fixed(x)
    }
}

/// Right-aligned columns; the first column is left-aligned.
fn render(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::from("  ");
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                let _ = write!(line, "{cell:<w$}", w = widths[0]);
            } else {
                let _ = write!(line, "  {cell:>w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn table(problem: &DecisionProblem, eval: &Evaluation, footnotes: &[String]) -> String {
    let names = &problem.alternatives;
    let labels: Vec<String> = (1..=problem.criteria.len())
        .map(|j| format!("c{j}"))
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "TODIM evaluation (method: {}, lambda: {})\n",
        eval.method, eval.lambda
    );

    out.push_str("Criteria\n");
    let rows: Vec<Vec<String>> = problem
        .criteria
        .iter()
        .zip(&labels)
        .map(|(c, l)| {
            let kind = match c.kind {
                crate::engine::CriterionKind::Benefit => "benefit",
                crate::engine::CriterionKind::Cost => "cost",
            };
            vec![format!("{l}  {}", c.name), kind.to_string()]
        })
        .collect();
    out.push_str(&render(&rows));

    out.push_str("\nWeights\n");
    let mut rows = vec![std::iter::once(String::new())
        .chain(labels.iter().cloned())
        .collect()];
    rows.push(
        std::iter::once("w".to_string())
            .chain(eval.weights.weights.iter().map(|&w| format!("{w:.3}")))
            .collect(),
    );
    rows.push(
        std::iter::once("w_r".to_string())
            .chain(eval.weights.relative.iter().map(|&w| fixed(w)))
            .collect(),
    );
    out.push_str(&render(&rows));

    out.push_str("\nDominance per criterion\n");
    let mut rows = vec![std::iter::once("pair".to_string())
        .chain(labels.iter().cloned())
        .collect()];
    let n = names.len();
    for i in 0..n {
        for k in (0..n).filter(|&k| k != i) {
            let mut row = vec![format!("({},{})", names[i], names[k])];
            row.extend(eval.breakdown.per_criterion.iter().map(|m| fixed(m[i][k])));
            rows.push(row);
        }
    }
    out.push_str(&render(&rows));

    out.push_str("\nAggregated dominance\n");
    let mut rows = vec![std::iter::once(String::new())
        .chain(names.iter().cloned())
        .collect()];
    for (i, row) in eval.breakdown.aggregated.iter().enumerate() {
        let mut r = vec![names[i].clone()];
        r.extend(row.iter().map(|&x| fixed(x)));
        rows.push(r);
    }
    out.push_str(&render(&rows));

    out.push_str("\nOverall dominance\n");
    let rows = vec![
        names.iter().map(|a| format!("O({a})")).collect::<Vec<_>>(),
        eval.ranking
            .overall
            .iter()
            .map(|&x| overall_cell(x))
            .collect(),
    ];
    // every column left-aligned here
    let widths: Vec<usize> = (0..n)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        let _ = writeln!(out, "  {}", line.join("  ").trim_end());
    }

    let _ = writeln!(
        out,
        "\nRanking: {}",
        eval.ranking.ordered_names(names).join(" > ")
    );
    if !footnotes.is_empty() {
        out.push_str("\nNotes\n");
        for note in footnotes {
            let _ = writeln!(out, "  * {note}");
        }
    }
    out
}
