use serde_json::{Map, Value};

use super::{Metadata, ProblemDocument, ProblemError, SCHEMA_VERSION};
use crate::engine::{Assessments, Criterion, CriterionKind, DecisionProblem, DEFAULT_LAMBDA};
use crate::error::ElementError;
use crate::hf::HesitantElement;
use crate::phf::{Entry, ProbabilisticHesitantElement, PROBABILITY_TOLERANCE};
use crate::weighting::WeightSpecification;

/// Parses a problem document and returns its validated problem.
pub fn parse(text: &str) -> Result<DecisionProblem> {
    parse_document(text).map(|doc| doc.problem)
}

pub fn parse_document(text: &str) -> Result<ProblemDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| ProblemError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    parse_document_value(&value, "")
}

/// Parses an already-decoded document. `base` prefixes every error path,
/// for documents embedded in a larger body.
pub fn parse_document_value(value: &Value, base: &str) -> Result<ProblemDocument> {
    Walker {
        path: base.to_string(),
    }
    .document(value)
}

type Result<T> = std::result::Result<T, ProblemError>;

/// Tracks the JSON pointer of the node being read.
struct Walker {
    path: String,
}

impl Walker {
    fn at<T>(
        &mut self,
        seg: impl std::fmt::Display,
        f: impl FnOnce(&mut Self) -> Result<T>,
    ) -> Result<T> {
        let len = self.path.len();
        self.path.push('/');
        self.path.push_str(&seg.to_string());
        let out = f(self);
        self.path.truncate(len);
        out
    }

    fn here(&self) -> String {
        if self.path.is_empty() {
            "/".to_string()
        } else {
            self.path.clone()
        }
    }

    fn schema<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(ProblemError::Schema {
            path: self.here(),
            message: message.into(),
        })
    }

    fn invalid<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(ProblemError::Validation {
            path: self.here(),
            message: message.into(),
        })
    }

    fn object<'v>(&self, v: &'v Value, allowed: &[&str]) -> Result<&'v Map<String, Value>> {
        let Some(obj) = v.as_object() else {
            return self.schema(format!("expected an object, found {}", type_name(v)));
        };
        if let Some(key) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
            return self.schema(format!("unknown field `{key}`"));
        }
        Ok(obj)
    }

    fn array<'v>(&self, v: &'v Value) -> Result<&'v Vec<Value>> {
        match v.as_array() {
            Some(a) => Ok(a),
            None => self.schema(format!("expected an array, found {}", type_name(v))),
        }
    }

    fn number(&self, v: &Value) -> Result<f64> {
        match v.as_f64() {
            Some(x) => Ok(x),
            None => self.schema(format!("expected a number, found {}", type_name(v))),
        }
    }

    fn string(&self, v: &Value) -> Result<String> {
        match v.as_str() {
            Some(s) => Ok(s.to_string()),
            None => self.schema(format!("expected a string, found {}", type_name(v))),
        }
    }

    fn document(&mut self, v: &Value) -> Result<ProblemDocument> {
        let obj = self.object(v, &["schema_version", "metadata", "problem"])?;
        let schema_version = self.at("schema_version", |w| {
            let v = w.required_in(obj, "schema_version")?;
            match v.as_u64() {
                Some(SCHEMA_VERSION) => Ok(SCHEMA_VERSION),
                Some(other) => w.invalid(format!("unsupported schema version {other}")),
                None => w.schema("expected an integer"),
            }
        })?;
        let metadata = match obj.get("metadata") {
            None | Some(Value::Null) => None,
            Some(m) => Some(self.at("metadata", |w| w.metadata(m))?),
        };
        let problem = self.at("problem", |w| {
            let p = w.required_in(obj, "problem")?;
            w.problem(p)
        })?;
        if let Some(reference) = metadata.as_ref().and_then(|m| m.reference_overall.as_ref()) {
            if reference.len() != problem.alternatives.len() {
                return self.at("metadata", |w| {
                    w.at("reference_overall", |w| {
                        w.invalid(format!(
                            "expected {} values, one per alternative, got {}",
                            problem.alternatives.len(),
                            reference.len()
                        ))
                    })
                });
            }
        }
        Ok(ProblemDocument {
            schema_version,
            metadata,
            problem,
        })
    }

    /// Looks up `key` in `obj`; the walker is already positioned at `key`.
    fn required_in<'v>(&self, obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
        match obj.get(key) {
            Some(v) => Ok(v),
            None => self.schema(format!("missing required field `{key}`")),
        }
    }

    fn metadata(&mut self, v: &Value) -> Result<Metadata> {
        let obj = self.object(v, &["title", "author", "notes", "reference_overall"])?;
        let text = |key: &str, w: &mut Self| -> Result<Option<String>> {
            match obj.get(key) {
                None | Some(Value::Null) => Ok(None),
                Some(s) => w.at(key, |w| w.string(s)).map(Some),
            }
        };
        let title = text("title", self)?;
        let author = text("author", self)?;
        let notes = text("notes", self)?;
        let reference_overall = match obj.get("reference_overall") {
            None | Some(Value::Null) => None,
            Some(r) => Some(self.at("reference_overall", |w| {
                let items = w.array(r)?;
                items
                    .iter()
                    .enumerate()
                    .map(|(i, x)| w.at(i, |w| w.number(x)))
                    .collect::<Result<Vec<f64>>>()
            })?),
        };
        Ok(Metadata {
            title,
            author,
            notes,
            reference_overall,
        })
    }

    fn problem(&mut self, v: &Value) -> Result<DecisionProblem> {
        let obj = self.object(
            v,
            &[
                "alternatives",
                "criteria",
                "assessments",
                "weights",
                "lambda",
            ],
        )?;
        let alternatives = self.at("alternatives", |w| {
            let items = w.array(w.required_in(obj, "alternatives")?)?;
            if items.is_empty() {
                return w.invalid("at least one alternative is required");
            }
            items
                .iter()
                .enumerate()
                .map(|(i, x)| w.at(i, |w| w.string(x)))
                .collect::<Result<Vec<String>>>()
        })?;
        let criteria = self.at("criteria", |w| {
            let items = w.array(w.required_in(obj, "criteria")?)?;
            if items.is_empty() {
                return w.invalid("at least one criterion is required");
            }
            items
                .iter()
                .enumerate()
                .map(|(i, x)| w.at(i, |w| w.criterion(x)))
                .collect::<Result<Vec<Criterion>>>()
        })?;
        let (n, m) = (alternatives.len(), criteria.len());
        let assessments = self.at("assessments", |w| {
            let a = w.required_in(obj, "assessments")?;
            w.assessments(a, n, m)
        })?;
        let weights = self.at("weights", |w| {
            let v = w.required_in(obj, "weights")?;
            w.weights(v, m)
        })?;
        let lambda = match obj.get("lambda") {
            None | Some(Value::Null) => DEFAULT_LAMBDA,
            Some(l) => self.at("lambda", |w| {
                let l = w.number(l)?;
                if l > 0.0 {
                    Ok(l)
                } else {
                    w.invalid(format!("lambda must be positive, got {l}"))
                }
            })?,
        };
        Ok(DecisionProblem {
            alternatives,
            criteria,
            assessments,
            weights,
            lambda,
        })
    }

    fn criterion(&mut self, v: &Value) -> Result<Criterion> {
        let obj = self.object(v, &["name", "kind"])?;
        let name = self.at("name", |w| {
            let s = w.required_in(obj, "name")?;
            w.string(s)
        })?;
        let kind = self.at("kind", |w| {
            let s = w.string(w.required_in(obj, "kind")?)?;
            match s.as_str() {
                "benefit" => Ok(CriterionKind::Benefit),
                "cost" => Ok(CriterionKind::Cost),
                other => w.schema(format!(
                    "unknown criterion kind `{other}` (expected benefit or cost)"
                )),
            }
        })?;
        Ok(Criterion { name, kind })
    }

    fn assessments(&mut self, v: &Value, n: usize, m: usize) -> Result<Assessments> {
        let rows = self.array(v)?;
        if rows.len() != n {
            return self.invalid(format!(
                "expected {n} rows, one per alternative, got {}",
                rows.len()
            ));
        }
        let mut cells = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            let row = self.at(i, |w| {
                let items = w.array(row)?;
                if items.len() != m {
                    return w.invalid(format!(
                        "expected {m} cells, one per criterion, got {}",
                        items.len()
                    ));
                }
                items
                    .iter()
                    .enumerate()
                    .map(|(j, c)| w.at(j, |w| w.fuzzy(c, Scale::Free)))
                    .collect::<Result<Vec<Fuzzy>>>()
            })?;
            cells.push(row);
        }
        let mode = cells[0][0].mode_name();
        for (i, row) in cells.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.mode_name() != mode {
                    return self.at(i, |w| {
                        w.at(j, |w| {
                            w.schema(format!(
                                "{} cell in a matrix of {} cells; every cell must use the same encoding",
                                c.mode_name(),
                                mode
                            ))
                        })
                    });
                }
            }
        }
        Ok(match mode {
            "phf" => Assessments::Phf(
                cells
                    .into_iter()
                    .map(|r| r.into_iter().map(Fuzzy::into_phf).collect())
                    .collect(),
            ),
            "hf" => Assessments::Hf(
                cells
                    .into_iter()
                    .map(|r| r.into_iter().map(Fuzzy::into_hf).collect())
                    .collect(),
            ),
            _ => Assessments::Crisp(
                cells
                    .into_iter()
                    .map(|r| r.into_iter().map(Fuzzy::into_crisp).collect())
                    .collect(),
            ),
        })
    }

    fn weights(&mut self, v: &Value, m: usize) -> Result<WeightSpecification> {
        let items = self.array(v)?;
        if items.len() != m {
            return self.invalid(format!(
                "expected {m} weights, one per criterion, got {}",
                items.len()
            ));
        }
        let elements = items
            .iter()
            .enumerate()
            .map(|(j, x)| self.at(j, |w| w.fuzzy(x, Scale::Unit)))
            .collect::<Result<Vec<Fuzzy>>>()?;
        let mode = elements[0].mode_name();
        if let Some(j) = elements.iter().position(|e| e.mode_name() != mode) {
            return self.at(j, |w| {
                w.schema(format!(
                    "{} weight among {} weights; every weight must use the same encoding",
                    elements[j].mode_name(),
                    mode
                ))
            });
        }
        Ok(match mode {
            "phf" => WeightSpecification::Phf(elements.into_iter().map(Fuzzy::into_phf).collect()),
            "hf" => WeightSpecification::Hf(elements.into_iter().map(Fuzzy::into_hf).collect()),
            _ => {
                let crisp: Vec<f64> = elements.into_iter().map(Fuzzy::into_crisp).collect();
                if let Some(j) = crisp.iter().position(|w| *w <= 0.0) {
                    return self.at(j, |w| w.invalid("crisp weights must be positive"));
                }
                WeightSpecification::Crisp(crisp)
            }
        })
    }

    fn fuzzy(&mut self, v: &Value, scale: Scale) -> Result<Fuzzy> {
        match v {
            Value::Number(_) => {
                let x = self.number(v)?;
                self.check_degree(x, scale)?;
                Ok(Fuzzy::Crisp(x))
            }
            Value::Array(items) => {
                if items.is_empty() {
                    return self.invalid(ElementError::EmptyElement.to_string());
                }
                if items.iter().all(Value::is_number) {
                    let degrees = items
                        .iter()
                        .enumerate()
                        .map(|(t, x)| {
                            self.at(t, |w| {
                                let d = w.number(x)?;
                                w.check_degree(d, scale)?;
                                Ok(d)
                            })
                        })
                        .collect::<Result<Vec<f64>>>()?;
                    let e = HesitantElement::new(degrees).or_else(|e| self.invalid(e.to_string()))?;
                    Ok(Fuzzy::Hf(e))
                } else {
                    let entries = items
                        .iter()
                        .enumerate()
                        .map(|(t, x)| self.at(t, |w| w.entry(x, scale)))
                        .collect::<Result<Vec<Entry>>>()?;
                    let e = ProbabilisticHesitantElement::new(entries)
                        .or_else(|e| self.invalid(e.to_string()))?;
                    let mass = e.probability_mass();
                    if mass > 1.0 + PROBABILITY_TOLERANCE {
                        return self.invalid(ElementError::ProbabilityMassExceedsOne(mass).to_string());
                    }
                    if mass <= 0.0 {
                        return self.invalid(ElementError::ZeroProbabilityMass.to_string());
                    }
                    Ok(Fuzzy::Phf(e))
                }
            }
            other => self.schema(format!(
                "expected a number, a list of numbers or a list of {{\"d\", \"p\"}} objects, found {}",
                type_name(other)
            )),
        }
    }

    fn entry(&mut self, v: &Value, scale: Scale) -> Result<Entry> {
        let obj = self.object(v, &["d", "p"])?;
        let degree = self.at("d", |w| {
            let d = w.number(w.required_in(obj, "d")?)?;
            w.check_degree(d, scale)?;
            Ok(d)
        })?;
        let probability = self.at("p", |w| {
            let p = w.number(w.required_in(obj, "p")?)?;
            if p < 0.0 {
                return w.invalid(ElementError::NegativeProbability(p).to_string());
            }
            Ok(p)
        })?;
        Ok(Entry::new(degree, probability))
    }

    fn check_degree(&self, d: f64, scale: Scale) -> Result<()> {
        if d < 0.0 {
            return self.invalid(ElementError::NegativeDegree(d).to_string());
        }
        if scale == Scale::Unit && d > 1.0 {
            return self.invalid(format!("weight degree {d} is outside [0, 1]"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scale {
    Free,
    Unit,
}

enum Fuzzy {
    Phf(ProbabilisticHesitantElement),
    Hf(HesitantElement),
    Crisp(f64),
}

impl Fuzzy {
    fn mode_name(&self) -> &'static str {
        match self {
            Self::Phf(_) => "phf",
            Self::Hf(_) => "hf",
            Self::Crisp(_) => "crisp",
        }
    }

    fn into_phf(self) -> ProbabilisticHesitantElement {
        match self {
            Self::Phf(e) => e,
            _ => unreachable!("mode checked by caller"),
        }
    }

    fn into_hf(self) -> HesitantElement {
        match self {
            Self::Hf(e) => e,
            _ => unreachable!("mode checked by caller"),
        }
    }

    fn into_crisp(self) -> f64 {
        match self {
            Self::Crisp(x) => x,
            _ => unreachable!("mode checked by caller"),
        }
    }
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}
