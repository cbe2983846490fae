//! Stateless HTTP API over the TODIM engine.
//!
//! | method | path                     | body                                            |
//! |--------|--------------------------|-------------------------------------------------|
//! | GET    | `/v1/health`             |                                                 |
//! | POST   | `/v1/evaluate`           | `document`, `method`?, `lambda`?                |
//! | POST   | `/v1/sensitivity/lambda` | `document`, `method`?, `lambdas`                |
//! | POST   | `/v1/sensitivity/weight` | `document`, `method`?, `lambda`?, `criterion` + `delta` or `deltas` |
//!
//! `document` is a problem file as JSON. Responses are canonical JSON
//! (sorted keys, pretty printed, newline terminated) at full precision; the
//! evaluate body is byte-for-byte the CLI's JSON report.

mod error;
mod request;

use std::future::Future;
use std::io;
use std::net::SocketAddr;
use std::path::PathBuf;

use axum::body::Bytes;
use axum::http::{header, Method as HttpMethod, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde_json::{json, Value};
use todim_core::engine::{perturb_weight, perturb_weights, sweep_lambda};
use todim_core::io::{canonical_json, evaluate_document, ranking_value, report_json};
use todim_core::DecisionProblem;
use tokio::net::TcpListener;
use tower_http::cors::{Any, CorsLayer};
use tower_http::services::ServeDir;

pub use error::ApiError;
use request::Envelope;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct ServiceConfig {
    /// Directory of the built console, served for every non-API path.
    pub static_dir: Option<PathBuf>,
}

pub fn router(config: &ServiceConfig) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([HttpMethod::GET, HttpMethod::POST])
        .allow_headers([header::CONTENT_TYPE]);
    let api = Router::new()
        .route("/v1/health", get(health))
        .route("/v1/evaluate", post(evaluate))
        .route("/v1/sensitivity/lambda", post(lambda_sweep))
        .route("/v1/sensitivity/weight", post(weight_perturbation));
    let app = match &config.static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.fallback(|| async { ApiError::not_found() }),
    };
    app.layer(cors)
}

/// Serves until `shutdown` resolves.
pub async fn serve(
    listener: TcpListener,
    config: ServiceConfig,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> io::Result<()> {
    axum::serve(listener, router(&config))
        .with_graceful_shutdown(shutdown)
        .await
}

/// Binds `addr` and serves on a fresh runtime until interrupted. `ready`
/// receives the bound address once the listener is up.
pub fn run(
    addr: SocketAddr,
    config: ServiceConfig,
    ready: impl FnOnce(SocketAddr),
) -> io::Result<()> {
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async move {
        let listener = TcpListener::bind(addr).await?;
        let local = listener.local_addr()?;
        log::info!("listening on {local}");
        ready(local);
        serve(listener, config, async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
    })
}

fn json_response(body: String) -> Response {
    (
        StatusCode::OK,
        [(header::CONTENT_TYPE, "application/json")],
        body,
    )
        .into_response()
}

async fn health() -> Response {
    json_response(canonical_json(
        &json!({ "status": "ok", "version": VERSION }),
    ))
}

async fn evaluate(body: Bytes) -> Result<Response, ApiError> {
    let req = Envelope::parse(&body, &[])?;
    let (eval, notes) = evaluate_document(&req.document, req.method, req.lambda)
        .map_err(|e| ApiError::from_engine(e, None))?;
    Ok(json_response(report_json(
        &req.document.problem,
        &eval,
        &notes,
    )))
}

/// Re-targets the envelope's problem at its method and lambda override.
fn prepared(req: &Envelope) -> Result<DecisionProblem, ApiError> {
    let mut problem = req.document.problem.clone();
    if let Some(l) = req.lambda {
        problem = problem.with_lambda(l);
    }
    if req.method.mode() != problem.mode() {
        return Err(ApiError::from_engine(
            todim_core::EngineError::ModeMismatch {
                method: req.method.to_string(),
                mode: problem.mode().to_string(),
            },
            None,
        ));
    }
    Ok(problem)
}

async fn lambda_sweep(body: Bytes) -> Result<Response, ApiError> {
    let req = Envelope::parse(&body, &["lambdas"])?;
    let lambdas = req.numbers("lambdas")?;
    if lambdas.is_empty() {
        return Err(
            ApiError::bad_request("validation", "lambdas must not be empty").at("/lambdas"),
        );
    }
    if let Some(i) = lambdas.iter().position(|l| *l <= 0.0) {
        return Err(ApiError::bad_request(
            "validation",
            format!("lambda must be positive, got {}", lambdas[i]),
        )
        .at(format!("/lambdas/{i}")));
    }
    let problem = prepared(&req)?;
    let runs = sweep_lambda(&problem, &lambdas).map_err(|e| ApiError::from_engine(e, None))?;
    let out: Vec<Value> = runs.iter().map(|r| ranking_value(&problem, r)).collect();
    Ok(json_response(canonical_json(&Value::Array(out))))
}

async fn weight_perturbation(body: Bytes) -> Result<Response, ApiError> {
    let req = Envelope::parse(&body, &["criterion", "delta", "deltas"])?;
    let problem = prepared(&req)?;
    let result = if req.has("deltas") {
        if req.has("criterion") || req.has("delta") {
            return Err(ApiError::bad_request(
                "schema",
                "give either `deltas` or `criterion` with `delta`, not both",
            ));
        }
        let deltas = req.numbers("deltas")?;
        if deltas.len() != problem.criteria.len() {
            return Err(ApiError::bad_request(
                "validation",
                format!(
                    "expected {} deltas, got {}",
                    problem.criteria.len(),
                    deltas.len()
                ),
            )
            .at("/deltas"));
        }
        perturb_weights(&problem, &deltas).map_err(|e| ApiError::from_engine(e, Some("/deltas")))?
    } else {
        let j = req.index("criterion")?;
        let delta = req.number("delta")?;
        if j >= problem.criteria.len() {
            return Err(ApiError::bad_request(
                "validation",
                format!(
                    "criterion {j} out of range for {} criteria",
                    problem.criteria.len()
                ),
            )
            .at("/criterion"));
        }
        perturb_weight(&problem, j, delta).map_err(|e| ApiError::from_engine(e, Some("/delta")))?
    };
    let out = json!({
        "ranking": ranking_value(&problem, &result.ranking),
        "weights": result.weights,
    });
    Ok(json_response(canonical_json(&out)))
}
