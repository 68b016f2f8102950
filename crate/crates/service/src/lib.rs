//! Command-line and HTTP front ends for the simplifier.

pub mod engine;
pub mod error;
pub mod remote;
pub mod server;

pub use engine::{Engine, ResourceArgs, SimplifyRequest, SimplifyResponse};
pub use error::{ApiError, SetupError};
