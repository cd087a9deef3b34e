//! Config-file parsing and flag merging.
//!
//! The config file is a flat `key = value` text document whose keys mirror
//! the `RunConfig` field names. Flags override file values, which override
//! the defaults.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use jc_core::{Error, FieldKind, Mode, Result, RunConfig};

/// Config-file / flag values before merging; `None` fields fall through to
/// the next layer.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub nbar: Option<f64>,
    pub lambda: Option<f64>,
    pub p_g: Option<f64>,
    pub theta: Option<f64>,
    pub phi: Option<f64>,
    pub field_kind: Option<FieldKind>,
    pub tophat_halfwidth: Option<usize>,
    pub cutoff: Option<Option<usize>>,
    pub t_max_over_tr: Option<f64>,
    pub steps: Option<usize>,
    pub mode: Option<Mode>,
    pub output_path: Option<PathBuf>,
}

impl Overrides {
    pub fn apply(&self, cfg: &mut RunConfig) {
        if let Some(v) = self.nbar {
            cfg.nbar = v;
        }
        if let Some(v) = self.lambda {
            cfg.lambda = v;
        }
        if let Some(v) = self.p_g {
            cfg.p_g = v;
        }
        if let Some(v) = self.theta {
            cfg.theta = v;
        }
        if let Some(v) = self.phi {
            cfg.phi = v;
        }
        if let Some(v) = self.field_kind {
            cfg.field_kind = v;
        }
        if let Some(v) = self.tophat_halfwidth {
            cfg.tophat_halfwidth = v;
        }
        if let Some(v) = self.cutoff {
            cfg.cutoff = v;
        }
        if let Some(v) = self.t_max_over_tr {
            cfg.t_max_over_tr = v;
        }
        if let Some(v) = self.steps {
            cfg.steps = v;
        }
        if let Some(v) = self.mode {
            cfg.mode = v;
        }
        if let Some(v) = &self.output_path {
            cfg.output_path = Some(v.clone());
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| Error::Config { field: key.to_string(), message: format!("{e}") })
}

/// Parse a flat `key = value` file. Blank lines and `#` comments are
/// ignored; unknown keys are configuration errors.
pub fn parse_config_file(path: &Path) -> Result<Overrides> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Overrides::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
            field: format!("{}:{}", path.display(), idx + 1),
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "nbar" => out.nbar = Some(parse_value(key, value)?),
            "lambda" => out.lambda = Some(parse_value(key, value)?),
            "p_g" => out.p_g = Some(parse_value(key, value)?),
            "theta" => out.theta = Some(parse_value(key, value)?),
            "phi" => out.phi = Some(parse_value(key, value)?),
            "field_kind" => out.field_kind = Some(value.parse()?),
            "tophat_halfwidth" => out.tophat_halfwidth = Some(parse_value(key, value)?),
            "cutoff" => {
                out.cutoff = Some(if value == "auto" {
                    None
                } else {
                    Some(parse_value(key, value)?)
                })
            }
            "t_max_over_tr" => out.t_max_over_tr = Some(parse_value(key, value)?),
            "steps" => out.steps = Some(parse_value(key, value)?),
            "mode" => out.mode = Some(value.parse()?),
            "output_path" => out.output_path = Some(PathBuf::from(value)),
            other => {
                return Err(Error::Config {
                    field: other.to_string(),
                    message: "unknown config key".to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// defaults ← config file ← flags.
pub fn resolve(file: Option<&Path>, flags: &Overrides) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = file {
        parse_config_file(path)?.apply(&mut cfg);
    }
    flags.apply(&mut cfg);
    Ok(cfg)
}
