use serde_json::{json, Map, Value};

use super::{Metadata, ProblemDocument, SCHEMA_VERSION};
use crate::engine::{Assessments, CriterionKind, DecisionProblem};
use crate::hf::HesitantElement;
use crate::phf::ProbabilisticHesitantElement;
use crate::weighting::WeightSpecification;

/// Canonical text of a problem wrapped in a version-1 document without
/// metadata.
pub fn serialize(problem: &DecisionProblem) -> String {
    serialize_document(&ProblemDocument {
        schema_version: SCHEMA_VERSION,
        metadata: None,
        problem: problem.clone(),
    })
}

/// Key-sorted, two-space indented, newline-terminated JSON. Numbers keep
/// full precision.
pub fn serialize_document(doc: &ProblemDocument) -> String {
    to_canonical_string(&document_value(doc))
}

pub(crate) fn to_canonical_string(value: &Value) -> String {
    let mut text =
        serde_json::to_string_pretty(&canonicalize(value.clone())).expect("JSON values serialize");
    text.push('\n');
    text
}

pub fn document_value(doc: &ProblemDocument) -> Value {
    let mut root = Map::new();
    if let Some(meta) = doc.metadata.as_ref().filter(|m| !m.is_empty()) {
        root.insert("metadata".into(), metadata_value(meta));
    }
    root.insert("problem".into(), problem_value(&doc.problem));
    root.insert("schema_version".into(), json!(doc.schema_version));
    Value::Object(root)
}

/// Recursively sorts object keys.
pub fn canonicalize(value: Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(
                entries
                    .into_iter()
                    .map(|(k, v)| (k, canonicalize(v)))
                    .collect(),
            )
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        other => other,
    }
}

fn metadata_value(meta: &Metadata) -> Value {
    let mut m = Map::new();
    for (key, v) in [
        ("author", &meta.author),
        ("notes", &meta.notes),
        ("title", &meta.title),
    ] {
        if let Some(v) = v {
            m.insert(key.into(), json!(v));
        }
    }
    if let Some(r) = &meta.reference_overall {
        m.insert("reference_overall".into(), json!(r));
    }
    Value::Object(m)
}

fn problem_value(p: &DecisionProblem) -> Value {
    let criteria: Vec<Value> = p
        .criteria
        .iter()
        .map(|c| {
            json!({
                "kind": match c.kind {
                    CriterionKind::Benefit => "benefit",
                    CriterionKind::Cost => "cost",
                },
                "name": c.name,
            })
        })
        .collect();
    let assessments: Vec<Value> = match &p.assessments {
        Assessments::Phf(rows) => rows
            .iter()
            .map(|r| Value::Array(r.iter().map(phf_value).collect()))
            .collect(),
        Assessments::Hf(rows) => rows
            .iter()
            .map(|r| Value::Array(r.iter().map(hf_value).collect()))
            .collect(),
        Assessments::Crisp(rows) => rows.iter().map(|r| json!(r)).collect(),
    };
    let weights: Vec<Value> = match &p.weights {
        WeightSpecification::Phf(v) => v.iter().map(phf_value).collect(),
        WeightSpecification::Hf(v) => v.iter().map(hf_value).collect(),
        WeightSpecification::Crisp(v) => v.iter().map(|w| json!(w)).collect(),
    };
    json!({
        "alternatives": p.alternatives,
        "assessments": assessments,
        "criteria": criteria,
        "lambda": p.lambda,
        "weights": weights,
    })
}

fn phf_value(e: &ProbabilisticHesitantElement) -> Value {
    Value::Array(
        e.entries()
            .iter()
            .map(|x| json!({ "d": x.degree, "p": x.probability }))
            .collect(),
    )
}

fn hf_value(e: &HesitantElement) -> Value {
    json!(e.degrees())
}
