//! Request envelopes. Every body is a JSON object carrying a problem
//! `document` plus endpoint-specific fields; error paths are JSON pointers
//! into the request body.

use serde_json::{Map, Value};
use todim_core::io::{parse_document_value, ProblemDocument};
use todim_core::Method;

use crate::error::ApiError;

pub struct Envelope {
    pub document: ProblemDocument,
    pub method: Method,
    pub lambda: Option<f64>,
    fields: Map<String, Value>,
}

const COMMON: [&str; 3] = ["document", "method", "lambda"];

fn schema(path: &str, message: impl Into<String>) -> ApiError {
    ApiError::bad_request("schema", message).at(path)
}

impl Envelope {
    /// Parses the shared fields, rejecting any key outside `COMMON` and
    /// `extra`.
    pub fn parse(body: &[u8], extra: &[&str]) -> Result<Self, ApiError> {
        let value: Value = serde_json::from_slice(body).map_err(|e| {
            ApiError::bad_request(
                "syntax",
                format!(
                    "syntax error at line {}, column {}: {e}",
                    e.line(),
                    e.column()
                ),
            )
        })?;
        let Value::Object(fields) = value else {
            return Err(schema("", "request body must be an object"));
        };
        if let Some(key) = fields
            .keys()
            .find(|k| !COMMON.contains(&k.as_str()) && !extra.contains(&k.as_str()))
        {
            return Err(schema(&format!("/{key}"), format!("unknown field `{key}`")));
        }
        let document = fields
            .get("document")
            .ok_or_else(|| schema("/document", "missing required field `document`"))?;
        let document = parse_document_value(document, "/document")?;
        let method = match fields.get("method") {
            None | Some(Value::Null) => Method::for_mode(document.problem.mode()),
            Some(Value::String(s)) => s
                .parse()
                .map_err(|m: String| ApiError::bad_request("validation", m).at("/method"))?,
            Some(_) => return Err(schema("/method", "expected a string")),
        };
        let mut envelope = Self {
            document,
            method,
            lambda: None,
            fields,
        };
        envelope.lambda = envelope.optional_number("lambda")?;
        if let Some(l) = envelope.lambda {
            if l <= 0.0 {
                return Err(ApiError::bad_request(
                    "validation",
                    format!("lambda must be positive, got {l}"),
                )
                .at("/lambda"));
            }
        }
        Ok(envelope)
    }

    pub fn has(&self, key: &str) -> bool {
        self.fields.get(key).is_some_and(|v| !v.is_null())
    }

    pub fn optional_number(&self, key: &str) -> Result<Option<f64>, ApiError> {
        match self.fields.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => v
                .as_f64()
                .map(Some)
                .ok_or_else(|| schema(&format!("/{key}"), "expected a number")),
        }
    }

    pub fn number(&self, key: &str) -> Result<f64, ApiError> {
        self.optional_number(key)?.ok_or_else(|| {
            schema(
                &format!("/{key}"),
                format!("missing required field `{key}`"),
            )
        })
    }

    pub fn index(&self, key: &str) -> Result<usize, ApiError> {
        let path = format!("/{key}");
        match self.fields.get(key) {
            None | Some(Value::Null) => {
                Err(schema(&path, format!("missing required field `{key}`")))
            }
            Some(v) => v
                .as_u64()
                .map(|i| i as usize)
                .ok_or_else(|| schema(&path, "expected a non-negative integer")),
        }
    }

    pub fn numbers(&self, key: &str) -> Result<Vec<f64>, ApiError> {
        let path = format!("/{key}");
        let items = match self.fields.get(key) {
            None | Some(Value::Null) => {
                return Err(schema(&path, format!("missing required field `{key}`")))
            }
            Some(Value::Array(items)) => items,
            Some(_) => return Err(schema(&path, "expected an array of numbers")),
        };
        items
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.as_f64()
                    .ok_or_else(|| schema(&format!("{path}/{i}"), "expected a number"))
            })
            .collect()
    }
}
