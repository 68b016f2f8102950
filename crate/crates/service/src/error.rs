use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use thiserror::Error;

/// Start-up failures, split by the exit code they map to.
#[derive(Debug, Error)]
pub enum SetupError {
    /// Bad or missing flags and settings.
    #[error("{0}")]
    Config(String),

    /// A configured resource could not be read or parsed.
    #[error("{what}: {source}")]
    Resource {
        what: String,
        #[source]
        source: simplex_core::Error,
    },
}

impl SetupError {
    pub fn resource(what: impl Into<String>, source: simplex_core::Error) -> Self {
        SetupError::Resource {
            what: what.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            SetupError::Config(_) => 2,
            SetupError::Resource { .. } => 3,
        }
    }
}

/// Per-request failures.
#[derive(Debug, Error)]
pub enum ApiError {
    #[error("{0}")]
    BadRequest(String),

    #[error("{0}")]
    Unavailable(String),

    #[error("{0}")]
    Internal(String),
}

impl ApiError {
    pub fn status(&self) -> StatusCode {
        match self {
            ApiError::BadRequest(_) => StatusCode::BAD_REQUEST,
            ApiError::Unavailable(_) => StatusCode::SERVICE_UNAVAILABLE,
            ApiError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = serde_json::json!({ "error": self.to_string() });
        (self.status(), Json(body)).into_response()
    }
}
