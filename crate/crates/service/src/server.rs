use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::header;
use axum::response::IntoResponse;
use axum::routing::{get, post};
use axum::{Json, Router};

use crate::engine::{Engine, SimplifyRequest};
use crate::error::ApiError;

pub fn router(engine: Arc<Engine>) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/simplify", post(simplify))
        .with_state(engine)
}

async fn health() -> impl IntoResponse {
    Json(serde_json::json!({ "status": "ok" }))
}

/// The body is decoded by hand so every malformed request is a 400,
/// whatever the content type.
async fn simplify(State(engine): State<Arc<Engine>>, body: Bytes) -> Result<impl IntoResponse, ApiError> {
    let req: SimplifyRequest =
        serde_json::from_slice(&body).map_err(|e| ApiError::BadRequest(format!("invalid request body: {e}")))?;
    let cfg = engine.config(Some(&req.mode), req.phi, req.model.as_deref())?;
    let resp = tokio::task::spawn_blocking(move || engine.respond(&req.sentence, &cfg))
        .await
        .map_err(|e| ApiError::Internal(e.to_string()))??;
    let json = serde_json::to_string(&resp).map_err(|e| ApiError::Internal(e.to_string()))?;
    Ok(([(header::CONTENT_TYPE, "application/json")], json))
}
