//! Optional TOML config file. Keys mirror the long flag names with
//! underscores; command-line flags override file values, and keys a
//! subcommand does not use are ignored so one file can drive a whole
//! sweep/diff/regions chain. Unknown keys are rejected.

use crate::CliError;
use serde::Deserialize;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub e_bar: Option<f64>,
    pub t_bar: Option<f64>,
    pub velocity: Option<f64>,
    pub acceleration: Option<f64>,
    pub e_min: Option<f64>,
    pub e_max: Option<f64>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub n_e: Option<usize>,
    pub n_t: Option<usize>,
    pub log: Option<bool>,
    pub rel_tol: Option<f64>,
    pub threshold: Option<f64>,
    pub workers: Option<usize>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub emit_plot_script: Option<bool>,
}

pub fn load(path: Option<&Path>) -> Result<FileConfig, CliError> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("reading config {}: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| CliError::Validation(format!("config {}: {e}", path.display())))
}
