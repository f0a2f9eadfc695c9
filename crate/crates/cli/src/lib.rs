//! Library side of the `quasiproj` command: configuration, the projection
//! pipeline, exporters and the `verify` suites.

pub mod config;
pub mod error;
pub mod export;
pub mod pipeline;
pub mod svg;
pub mod verify;

pub use config::{parse_config, PlaneSelect, RenderOptions, RunConfig, WindowMode};
pub use error::{CliError, Result};
pub use pipeline::{project, run_pipeline, Projection, Summary};
