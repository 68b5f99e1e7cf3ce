//! Flat key = value run configuration.
//!
//! Recognized keys:
//!
//! ```text
//! registry  = path to extra particle definitions
//! processes = path to extra decay-process definitions
//! sphere.radius_cm / sphere.b0_gauss / sphere.n_cm3 / sphere.b_c_gauss
//! sphere.epsilon_f_erg / sphere.temperature_k
//! ```
//!
//! Blank lines and # comments are ignored; unknown keys are errors so typos
//! cannot silently fall back to defaults. The `MA_CONFIG` environment
//! variable names the file to load.

use std::path::{Path, PathBuf};

use crate::londonsphere::SphereModel;
use crate::{Error, Result};

pub const ENV_VAR: &str = "MA_CONFIG";

#[derive(Debug, Clone, Default)]
pub struct Config {
    pub registry_path: Option<PathBuf>,
    pub process_table_path: Option<PathBuf>,
    pub sphere_radius_cm: Option<f64>,
    pub sphere_b0_gauss: Option<f64>,
    pub sphere_n_cm3: Option<f64>,
    pub sphere_b_c_gauss: Option<f64>,
    pub sphere_epsilon_f_erg: Option<f64>,
    pub sphere_temperature_k: Option<f64>,
}

impl Config {
    pub fn from_str_strict(text: &str) -> Result<Self> {
        let mut config = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected key = value, got {line:?}"),
            })?;
            let key = key.trim();
            let value = value.trim();
            if value.is_empty() {
                return Err(Error::Parse { line: line_no, msg: format!("empty value for {key}") });
            }
            let parse_f64 = |value: &str| -> Result<f64> {
                value.parse::<f64>().map_err(|e| Error::Parse {
                    line: line_no,
                    msg: format!("bad number for {key}: {e}"),
                })
            };
            match key {
                "registry" => config.registry_path = Some(PathBuf::from(value)),
                "processes" => config.process_table_path = Some(PathBuf::from(value)),
                "sphere.radius_cm" => config.sphere_radius_cm = Some(parse_f64(value)?),
                "sphere.b0_gauss" => config.sphere_b0_gauss = Some(parse_f64(value)?),
                "sphere.n_cm3" => config.sphere_n_cm3 = Some(parse_f64(value)?),
                "sphere.b_c_gauss" => config.sphere_b_c_gauss = Some(parse_f64(value)?),
                "sphere.epsilon_f_erg" => config.sphere_epsilon_f_erg = Some(parse_f64(value)?),
                "sphere.temperature_k" => config.sphere_temperature_k = Some(parse_f64(value)?),
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown key {other:?}"),
                    });
                }
            }
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut config = Config::from_str_strict(&text)?;
        // Relative data paths resolve against the config file's directory.
        if let Some(dir) = path.parent() {
            if let Some(p) = config.registry_path.take() {
                config.registry_path = Some(if p.is_relative() { dir.join(p) } else { p });
            }
            if let Some(p) = config.process_table_path.take() {
                config.process_table_path = Some(if p.is_relative() { dir.join(p) } else { p });
            }
        }
        Ok(config)
    }

    /// Loads the file named by `MA_CONFIG`, or returns the defaults when the
    /// variable is unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(ENV_VAR) {
            Some(path) => Config::load(Path::new(&path)),
            None => Ok(Config::default()),
        }
    }

    /// Sphere geometry with this config's overrides applied on top of the
    /// built-in type-I defaults.
    pub fn sphere_model(&self) -> Result<SphereModel> {
        let base = SphereModel::type_i_default();
        SphereModel::new(
            self.sphere_radius_cm.unwrap_or(base.radius_cm),
            self.sphere_b0_gauss.unwrap_or(base.b0_gauss),
            self.sphere_n_cm3.unwrap_or(base.n_cm3),
            self.sphere_b_c_gauss.unwrap_or(base.b_c_gauss),
            self.sphere_epsilon_f_erg.unwrap_or(base.epsilon_f_erg),
            self.sphere_temperature_k.unwrap_or(base.temperature_k),
        )
    }
}
