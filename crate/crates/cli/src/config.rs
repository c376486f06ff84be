//! Run configuration: built-in defaults, then the TOML config file, then
//! environment, then command-line flags.

use std::path::Path;

use fracgrow_core::abalone;
use fracgrow_core::{Convention, EtaMode, FracOrder};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SERIES_DEPTH_ENV: &str = "FRACGROW_SERIES_DEPTH";

/// Deepest series the term algebra can hold.
pub const MAX_SERIES_DEPTH: usize = fracgrow_core::DEFAULT_MAX_T_POWER as usize;

/// Effective configuration of a run, with every default resolved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub r: f64,
    pub orders: Vec<f64>,
    #[serde(with = "named")]
    pub convention: Convention,
    #[serde(with = "named")]
    pub eta_mode: EtaMode,
    pub series_depth: usize,
    pub month8_override: Option<f64>,
    /// Initial length; taken from the first observation when observations are given.
    pub m: Option<f64>,
    /// Inline rate schedule; entry `i` drives the step into month `i + 2`.
    pub etas: Option<Vec<f64>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            r: abalone::INITIAL_RATE,
            orders: abalone::ORDERS.to_vec(),
            convention: Convention::Cumulative,
            eta_mode: EtaMode::Absolute,
            series_depth: 25,
            month8_override: None,
            m: None,
            etas: None,
        }
    }
}

/// Keys accepted in the config file. All optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    r: Option<f64>,
    orders: Option<Vec<f64>>,
    convention: Option<String>,
    eta_mode: Option<String>,
    series_depth: Option<i64>,
    month8_override: Option<f64>,
    m: Option<f64>,
    etas: Option<Vec<f64>>,
}

/// Command-line values; `None` leaves the lower layer in place. The
/// environment layer arrives here too, through clap's `env` support.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub r: Option<f64>,
    pub orders: Option<Vec<f64>>,
    pub convention: Option<Convention>,
    pub eta_mode: Option<EtaMode>,
    pub series_depth: Option<usize>,
    pub month8_override: Option<f64>,
    pub m: Option<f64>,
}

impl RunConfig {
    pub fn resolve(config_path: Option<&Path>, overrides: &Overrides) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = config_path {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read config {}: {e}", path.display()))
            })?;
            cfg.apply_file(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        }
        cfg.apply(overrides);
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, text: &str) -> Result<(), String> {
        let file: ConfigFile = toml::from_str(text).map_err(|e| e.to_string())?;
        if let Some(v) = file.r {
            self.r = v;
        }
        if let Some(v) = file.orders {
            self.orders = v;
        }
        if let Some(v) = file.convention {
            self.convention = v.parse().map_err(|e| format!("{e}"))?;
        }
        if let Some(v) = file.eta_mode {
            self.eta_mode = v.parse().map_err(|e| format!("{e}"))?;
        }
        if let Some(v) = file.series_depth {
            self.series_depth =
                usize::try_from(v).map_err(|_| format!("series_depth must be ≥ 1, got {v}"))?;
        }
        if file.month8_override.is_some() {
            self.month8_override = file.month8_override;
        }
        if file.m.is_some() {
            self.m = file.m;
        }
        if file.etas.is_some() {
            self.etas = file.etas;
        }
        Ok(())
    }

    fn apply(&mut self, o: &Overrides) {
        if let Some(v) = o.r {
            self.r = v;
        }
        if let Some(v) = &o.orders {
            self.orders = v.clone();
        }
        if let Some(v) = o.convention {
            self.convention = v;
        }
        if let Some(v) = o.eta_mode {
            self.eta_mode = v;
        }
        if let Some(v) = o.series_depth {
            self.series_depth = v;
        }
        if o.month8_override.is_some() {
            self.month8_override = o.month8_override;
        }
        if o.m.is_some() {
            self.m = o.m;
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Usage(msg));
        if !(self.r > 0.0 && self.r < 1.0) {
            return bad(format!("r must lie in (0, 1), got {}", self.r));
        }
        if self.orders.is_empty() {
            return bad("orders must list at least one fractional order".into());
        }
        if let Some(b) = self.orders.iter().find(|&&b| !(b > 0.0 && b <= 1.0)) {
            return bad(format!("every order must lie in (0, 1], got {b}"));
        }
        if self.series_depth < 1 || self.series_depth > MAX_SERIES_DEPTH {
            return bad(format!(
                "series_depth must lie in 1..={MAX_SERIES_DEPTH}, got {}",
                self.series_depth
            ));
        }
        if let Some(m) = self.m {
            if !(m > 0.0 && m.is_finite()) {
                return bad(format!("m must be positive, got {m}"));
            }
        }
        if let Some(e) = self.month8_override {
            if !e.is_finite() {
                return bad(format!("month8_override must be finite, got {e}"));
            }
        }
        if let Some(etas) = &self.etas {
            if etas.is_empty() || etas.iter().any(|e| !e.is_finite()) {
                return bad("etas must be a non-empty list of finite rates".into());
            }
        }
        Ok(())
    }

    pub fn frac_orders(&self) -> Vec<FracOrder<f64>> {
        self.orders
            .iter()
            .map(|&b| FracOrder::new(b).expect("validated order"))
            .collect()
    }
}

/// Serializes enums through their `Display`/`FromStr` names.
mod named {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let mut cfg = RunConfig::default();
        cfg.apply_file(
            "r = 0.1\nseries_depth = 30\nconvention = \"closed_form_per_row\"\netas = [0.2, 0.3]\n",
        )
        .unwrap();
        assert_eq!(cfg.r, 0.1);
        assert_eq!(cfg.convention, Convention::ClosedFormPerRow);
        cfg.apply(&Overrides {
            series_depth: Some(12),
            ..Default::default()
        });
        assert_eq!(cfg.series_depth, 12);
        assert_eq!(cfg.r, 0.1);
        assert_eq!(cfg.etas.as_deref(), Some(&[0.2, 0.3][..]));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(RunConfig::default().apply_file("rate = 0.1").is_err());
        assert!(RunConfig::default()
            .apply_file("eta_mode = \"relative\"")
            .is_err());
        assert!(RunConfig::default()
            .apply_file("series_depth = -1")
            .is_err());
        let cfg = RunConfig {
            orders: vec![0.5, 1.2],
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig {
            series_depth: 0,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn json_round_trip() {
        let cfg = RunConfig {
            month8_override: Some(0.38),
            ..Default::default()
        };
        let text = serde_json::to_string(&cfg).unwrap();
        assert!(text.contains("\"convention\":\"cumulative\""));
        assert_eq!(serde_json::from_str::<RunConfig>(&text).unwrap(), cfg);
    }
}
