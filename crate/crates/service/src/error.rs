use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use serde_json::json;
use todim_core::io::ProblemError;
use todim_core::{EngineError, WeightError};

/// An error response: `{"kind", "message", "path"}` with a matching status.
#[derive(Debug, Clone, PartialEq)]
pub struct ApiError {
    pub status: StatusCode,
    pub kind: &'static str,
    pub message: String,
    pub path: Option<String>,
}

impl ApiError {
    pub fn new(status: StatusCode, kind: &'static str, message: impl Into<String>) -> Self {
        Self {
            status,
            kind,
            message: message.into(),
            path: None,
        }
    }

    pub fn bad_request(kind: &'static str, message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, kind, message)
    }

    pub fn at(mut self, path: impl Into<String>) -> Self {
        self.path = Some(path.into());
        self
    }

    pub fn not_found() -> Self {
        Self::new(StatusCode::NOT_FOUND, "not_found", "no such endpoint")
    }

    /// Maps engine failures; `weight_path` names the request field that
    /// produced the derived weights, if any.
    pub fn from_engine(err: EngineError, weight_path: Option<&str>) -> Self {
        match &err {
            EngineError::ModeMismatch { .. } => Self::new(
                StatusCode::UNPROCESSABLE_ENTITY,
                "mode_mismatch",
                err.to_string(),
            ),
            EngineError::NonPositiveLambda(_) => {
                Self::bad_request("validation", err.to_string()).at("/lambda")
            }
            EngineError::Weight(WeightError::NonPositiveWeight { index, .. }) => {
                let e = Self::bad_request("validation", err.to_string());
                match weight_path {
                    Some("/deltas") => e.at(format!("/deltas/{index}")),
                    Some(p) => e.at(p),
                    None => e.at(format!("/document/problem/weights/{index}")),
                }
            }
            _ => Self::bad_request("validation", err.to_string()),
        }
    }

    pub fn body(&self) -> String {
        let v = json!({ "kind": self.kind, "message": self.message, "path": self.path });
        format!("{v}\n")
    }
}

impl From<ProblemError> for ApiError {
    fn from(err: ProblemError) -> Self {
        let e = Self::bad_request(err.kind(), err.to_string());
        match err.path() {
            Some(p) => e.at(p),
            None => e,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (
            self.status,
            [(header::CONTENT_TYPE, "application/json")],
            self.body(),
        )
            .into_response()
    }
}
