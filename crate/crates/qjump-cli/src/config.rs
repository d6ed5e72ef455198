//! Run configuration: defaults, `key = value` config files, and flag
//! precedence (flags override the file, the file overrides defaults).
//! Unknown config keys are hard errors: a typo in a physics parameter must
//! never silently fall back to a default.

use std::path::{Path, PathBuf};

use serde::Serialize;

use qjump_core::table::ModelTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    #[serde(serialize_with = "serialize_model")]
    pub model: ModelTag,
    pub chi: Vec<f64>,
    pub lambda_t: f64,
    pub omega_over_g: f64,
    /// Averaging window; all outputs are the dimensionless product T*f, so
    /// the unit of T is arbitrary and fixed to 1.
    pub t_window: f64,
    pub n_lo: usize,
    pub n_hi: usize,
    pub n_traj: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub format: Format,
}

fn serialize_model<S: serde::Serializer>(m: &ModelTag, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&m.to_string())
}

/// Optional fields collected from flags or a config file; `None` means
/// "not specified here".
#[derive(Debug, Clone, Default)]
pub struct PartialConfig {
    pub model: Option<ModelTag>,
    pub chi: Option<Vec<f64>>,
    pub lambda_t: Option<f64>,
    pub omega_over_g: Option<f64>,
    pub n: Option<(usize, usize)>,
    pub n_traj: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl PartialConfig {
    /// Later layers win: `overlay` takes precedence over `self`.
    pub fn overlaid_with(self, overlay: PartialConfig) -> PartialConfig {
        PartialConfig {
            model: overlay.model.or(self.model),
            chi: overlay.chi.or(self.chi),
            lambda_t: overlay.lambda_t.or(self.lambda_t),
            omega_over_g: overlay.omega_over_g.or(self.omega_over_g),
            n: overlay.n.or(self.n),
            n_traj: overlay.n_traj.or(self.n_traj),
            seed: overlay.seed.or(self.seed),
            out: overlay.out.or(self.out),
            format: overlay.format.or(self.format),
        }
    }

    pub fn resolve(
        self,
        default_n: (usize, usize),
        min_n: usize,
        default_out: &str,
    ) -> Result<RunConfig, String> {
        let (n_lo, n_hi) = self.n.unwrap_or(default_n);
        if n_lo < min_n || n_hi < n_lo {
            return Err(format!("invalid mode range {n_lo}:{n_hi} (minimum {min_n})"));
        }
        let chi = self.chi.unwrap_or_else(|| vec![0.5]);
        if chi.iter().any(|&c| c <= 0.0) {
            return Err("chi values must be positive".into());
        }
        let lambda_t = self.lambda_t.unwrap_or(10.0);
        if lambda_t <= 0.0 {
            return Err("lambda-T must be positive".into());
        }
        Ok(RunConfig {
            model: self.model.unwrap_or(ModelTag::Jc),
            chi,
            lambda_t,
            omega_over_g: self.omega_over_g.unwrap_or(1e3),
            t_window: 1.0,
            n_lo,
            n_hi,
            n_traj: self.n_traj.unwrap_or(100_000),
            seed: self.seed.unwrap_or(42),
            out: self.out.unwrap_or_else(|| PathBuf::from(default_out)),
            format: self.format.unwrap_or(Format::Csv),
        })
    }
}

pub fn parse_model(s: &str) -> Result<ModelTag, String> {
    match s {
        "jc" => Ok(ModelTag::Jc),
        "osc" => Ok(ModelTag::Oscillator),
        other => Err(format!("unknown model '{other}' (expected jc or osc)")),
    }
}

pub fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        other => Err(format!("unknown format '{other}' (expected csv or json)")),
    }
}

pub fn parse_chi_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad chi value '{part}': {e}"))
        })
        .collect()
}

/// `LO:HI` or a single level `N` (meaning N:N).
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse_one = |p: &str| {
        p.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad mode index '{p}': {e}"))
    };
    match s.split_once(':') {
        Some((lo, hi)) => Ok((parse_one(lo)?, parse_one(hi)?)),
        None => {
            let n = parse_one(s)?;
            Ok((n, n))
        }
    }
}

/// Parse a `key = value` config file ('#' starts a comment). Unknown keys
/// are hard errors.
pub fn parse_config_file(path: &Path) -> Result<PartialConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut cfg = PartialConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key = value", path.display(), lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let ctx = |e: String| format!("{}:{}: {e}", path.display(), lineno + 1);
        match key {
            "model" => cfg.model = Some(parse_model(value).map_err(ctx)?),
            "chi" => cfg.chi = Some(parse_chi_list(value).map_err(ctx)?),
            "lambda_T" | "lambda_t" => {
                cfg.lambda_t =
                    Some(value.parse().map_err(|e| ctx(format!("bad lambda_T: {e}")))?)
            }
            "omega_over_g" => {
                cfg.omega_over_g =
                    Some(value.parse().map_err(|e| ctx(format!("bad omega_over_g: {e}")))?)
            }
            "n" => cfg.n = Some(parse_range(value).map_err(ctx)?),
            "n_traj" => {
                cfg.n_traj = Some(value.parse().map_err(|e| ctx(format!("bad n_traj: {e}")))?)
            }
            "seed" => cfg.seed = Some(value.parse().map_err(|e| ctx(format!("bad seed: {e}")))?),
            "out" => cfg.out = Some(PathBuf::from(value)),
            "format" => cfg.format = Some(parse_format(value).map_err(ctx)?),
            other => {
                return Err(format!(
                    "{}:{}: unknown config key '{other}'",
                    path.display(),
                    lineno + 1
                ))
            }
        }
    }
    Ok(cfg)
}
