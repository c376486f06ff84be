//! Result bundles and the files rendered from them.
//!
//! Every rendered file starts with `#` lines carrying the tool version, the
//! command, the timestamp and the full effective config as JSON, so a result
//! can be regenerated from its own header. Rendering depends only on the
//! bundle, which makes JSON → plot regeneration byte-identical.

use std::fmt::Write as _;

use fracgrow_core::{ObservationSeries, PredictionGrid};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::format::g15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridData {
    pub months: Vec<u32>,
    pub orders: Vec<f64>,
    /// `values[i][j]`: month `months[i]`, order `orders[j]`.
    pub values: Vec<Vec<f64>>,
}

impl From<&PredictionGrid<f64>> for GridData {
    fn from(g: &PredictionGrid<f64>) -> Self {
        Self {
            months: g.months.clone(),
            orders: g.orders.iter().map(|o| o.value()).collect(),
            values: g.values.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Score {
    pub order: f64,
    pub mae: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub month: u32,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub command: String,
    pub timestamp: String,
    pub config: RunConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultBundle {
    pub config: RunConfig,
    pub grid: GridData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scores: Option<Vec<Score>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub best: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observations: Option<Vec<Observation>>,
    pub provenance: Provenance,
}

impl ResultBundle {
    pub fn new(command: &str, config: &RunConfig, grid: &PredictionGrid<f64>) -> Self {
        Self {
            config: config.clone(),
            grid: grid.into(),
            scores: None,
            best: None,
            observations: None,
            provenance: Provenance {
                tool: concat!("fracgrow ", env!("CARGO_PKG_VERSION")).to_string(),
                command: command.to_string(),
                timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
                config: config.clone(),
            },
        }
    }

    pub fn with_observations(mut self, obs: &ObservationSeries<f64>) -> Self {
        self.observations = Some(
            obs.points()
                .iter()
                .map(|&(month, length)| Observation { month, length })
                .collect(),
        );
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("bundle serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("invalid result bundle: {e}")))
    }

    fn header(&self) -> String {
        let p = &self.provenance;
        let config = serde_json::to_string(&p.config).expect("config serializes");
        format!(
            "# {} {}\n# generated {}\n# config {config}\n",
            p.tool, p.command, p.timestamp
        )
    }

    /// Months × orders matrix, plus an `mae` row when scores are present.
    pub fn render_csv(&self) -> String {
        let mut out = self.header();
        out.push_str("month");
        for b in &self.grid.orders {
            let _ = write!(out, ",beta={}", g15(*b));
        }
        out.push('\n');
        for (month, row) in self.grid.months.iter().zip(&self.grid.values) {
            out.push_str(&month.to_string());
            for v in row {
                let _ = write!(out, ",{}", g15(*v));
            }
            out.push('\n');
        }
        if let Some(scores) = &self.scores {
            out.push_str("mae");
            for s in scores {
                let _ = write!(out, ",{}", g15(s.mae));
            }
            out.push('\n');
        }
        out
    }

    /// Long format: one row per (month, order), observed length when known.
    pub fn render_plot(&self) -> String {
        let mut out = self.header();
        out.push_str("month,order,predicted,observed\n");
        for (month, row) in self.grid.months.iter().zip(&self.grid.values) {
            let observed = self
                .observations
                .as_ref()
                .and_then(|obs| obs.iter().find(|o| o.month == *month))
                .map(|o| g15(o.length))
                .unwrap_or_default();
            for (b, v) in self.grid.orders.iter().zip(row) {
                let _ = writeln!(out, "{month},{},{},{observed}", g15(*b), g15(*v));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fracgrow_core::{abalone, predict_table, Convention};

    fn sample() -> ResultBundle {
        let cfg = RunConfig::default();
        let etas = abalone::eta_schedule::<f64>();
        let grid = predict_table(
            0.5322,
            cfg.r,
            &etas,
            &cfg.frac_orders(),
            Convention::Cumulative,
        )
        .unwrap();
        ResultBundle::new("predict", &cfg, &grid)
    }

    #[test]
    fn json_field_order_is_stable() {
        let json = sample().to_json();
        let pos = |k: &str| json.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("config") < pos("grid"));
        assert!(pos("grid") < pos("provenance"));
        let grid = &json[pos("grid")..];
        assert!(grid.find("\"months\"").unwrap() < grid.find("\"orders\"").unwrap());
        assert!(!json.contains("\"scores\""));
    }

    #[test]
    fn plot_regenerates_from_json() {
        let b = sample();
        let again = ResultBundle::from_json(&b.to_json()).unwrap();
        assert_eq!(again, b);
        assert_eq!(again.render_plot(), b.render_plot());
        assert_eq!(again.render_csv(), b.render_csv());
    }

    #[test]
    fn csv_shape() {
        let csv = sample().render_csv();
        let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(rows.len(), 25);
        assert_eq!(
            rows[0],
            "month,beta=0.5,beta=0.6,beta=0.7,beta=0.8,beta=0.9,beta=1"
        );
        assert_eq!(rows[1], "1,0.5322,0.5322,0.5322,0.5322,0.5322,0.5322");
    }
}
