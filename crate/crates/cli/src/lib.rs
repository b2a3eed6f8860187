//! Ingestion, orchestration and rendering behind the `panelbreak` binary.

pub mod config;
pub mod error;
pub mod ingest;
pub mod pipeline;
pub mod render;

pub use config::RunConfig;
pub use error::{CliError, Result};
pub use pipeline::{run_pipeline, write_bundle, Bundle, Stage};
