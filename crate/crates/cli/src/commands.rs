use std::fmt::Write as _;

use fracgrow_core::abalone::{self, deviation_report};
use fracgrow_core::{
    caputo_exp_exact, caputo_exp_paper_rule, caputo_numeric, caputo_power, closed_form,
    estimate_eta, fit_order, gamma, ln_gamma, mae, mittag_leffler2, predict_table,
    series_partial_sum, series_term, step_diagnostics, Convention, EtaSchedule, FracOrder,
    GrowthParams, MLParams, ObservationSeries, PowerFunction, PredictionGrid, QuadratureSpec,
};

use crate::bundle::{ResultBundle, Score};
use crate::cli::{
    CaputoArgs, Cli, Command, FitArgs, PredictArgs, RenderArgs, Rule, SeriesArgs, SpecialCmd,
};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::format::g15;
use crate::io::{load_observations, write_file};

/// Runs one parsed command line and returns what goes to standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let writes_files = cli.json.is_some() || cli.csv.is_some() || cli.plot.is_some();
    match &cli.command {
        Command::Predict(a) => predict(cli, a),
        Command::Fit(a) => fit(cli, a),
        Command::Render(a) => render(cli, a),
        Command::Special(_) | Command::Caputo(_) | Command::Series(_) if writes_files => {
            Err(CliError::Usage(
                "--json, --csv and --plot apply to predict, fit and render only".into(),
            ))
        }
        Command::Special(c) => special(c),
        Command::Caputo(a) => caputo(a),
        Command::Series(a) => series(cli, a),
    }
}

fn predict(cli: &Cli, a: &PredictArgs) -> Result<String, CliError> {
    let mut cfg = RunConfig::resolve(
        cli.config.as_deref(),
        &a.model.overrides(cli.correct_month8),
    )?;
    let (m, mut etas, obs) = if let Some(path) = &a.obs {
        let obs = load_observations(path)?;
        let etas = estimate_eta(&obs, cfg.eta_mode)?;
        (obs.points()[0].1, etas, Some(obs))
    } else if a.abalone {
        (
            cfg.m.unwrap_or(abalone::INITIAL_LENGTH),
            abalone::eta_schedule(),
            None,
        )
    } else if let Some(rates) = &cfg.etas {
        let m = cfg.m.ok_or_else(|| {
            CliError::Usage("an inline etas schedule needs m (--m or the config file)".into())
        })?;
        (m, EtaSchedule::from_rates(rates)?, None)
    } else {
        return Err(CliError::Usage(
            "predict needs --obs, --abalone, or an etas schedule in the config file".into(),
        ));
    };
    // Record what the grid was actually built from.
    cfg.m = Some(m);
    if let Some(eta) = cfg.month8_override {
        etas.override_rate_ending_at(abalone::SUSPECT_MONTH, eta)?;
    }

    let orders = cfg.frac_orders();
    let grid = predict_table(m, cfg.r, &etas, &orders, cfg.convention)?;
    let mut bundle = ResultBundle::new("predict", &cfg, &grid);
    if let Some(obs) = &obs {
        bundle.scores = Some(score_columns(&grid, obs)?);
        bundle = bundle.with_observations(obs);
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "convention {}  r {}  M {}  eta-mode {}",
        cfg.convention,
        g15(cfg.r),
        g15(m),
        if obs.is_some() {
            cfg.eta_mode.name()
        } else {
            "given"
        }
    );
    out.push_str(&table_text(&bundle));
    out.push_str(&series_check(m, cfg.r, &etas, &orders, cfg.series_depth)?);
    out.push_str(&falling_steps(cfg.r, &etas, &orders, cfg.convention));
    if a.abalone {
        out.push_str(&abalone_report(&cfg, m, &etas, &orders)?);
    }
    write_outputs(cli, &bundle)?;
    Ok(out)
}

fn fit(cli: &Cli, a: &FitArgs) -> Result<String, CliError> {
    let mut cfg = RunConfig::resolve(
        cli.config.as_deref(),
        &a.model.overrides(cli.correct_month8),
    )?;
    if cfg.month8_override.is_some() {
        return Err(CliError::Usage(
            "--correct-month8 applies to predict only; fit estimates rates from the observations"
                .into(),
        ));
    }
    let obs = load_observations(&a.obs)?;
    let fitted = fit_order(
        &obs,
        &cfg.frac_orders(),
        cfg.r,
        cfg.convention,
        cfg.eta_mode,
    )?;
    cfg.m = Some(obs.points()[0].1);

    let mut bundle = ResultBundle::new("fit", &cfg, &fitted.grid).with_observations(&obs);
    bundle.scores = Some(
        fitted
            .scores
            .iter()
            .map(|(o, s)| Score {
                order: o.value(),
                mae: *s,
            })
            .collect(),
    );
    bundle.best = Some(fitted.best.value());

    let mut out = String::new();
    let _ = writeln!(
        out,
        "convention {}  r {}  eta-mode {}",
        cfg.convention,
        g15(cfg.r),
        cfg.eta_mode
    );
    let _ = writeln!(out, "{:>8}  {:>22}", "order", "mae");
    for (o, s) in &fitted.scores {
        let _ = writeln!(out, "{:>8}  {:>22}", g15(o.value()), g15(*s));
    }
    let _ = writeln!(
        out,
        "best order {}  mae {}",
        g15(fitted.best.value()),
        g15(fitted.best_score)
    );
    write_outputs(cli, &bundle)?;
    Ok(out)
}

fn render(cli: &Cli, a: &RenderArgs) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&a.from)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", a.from.display())))?;
    let bundle = ResultBundle::from_json(&text)?;
    write_outputs(cli, &bundle)?;
    Ok(table_text(&bundle))
}

fn write_outputs(cli: &Cli, bundle: &ResultBundle) -> Result<(), CliError> {
    if let Some(p) = &cli.json {
        write_file(p, &bundle.to_json())?;
    }
    if let Some(p) = &cli.csv {
        write_file(p, &bundle.render_csv())?;
    }
    if let Some(p) = &cli.plot {
        write_file(p, &bundle.render_plot())?;
    }
    Ok(())
}

fn score_columns(
    grid: &PredictionGrid<f64>,
    obs: &ObservationSeries<f64>,
) -> Result<Vec<Score>, CliError> {
    let observed = obs.lengths();
    grid.orders
        .iter()
        .enumerate()
        .map(|(j, o)| {
            Ok(Score {
                order: o.value(),
                mae: mae(&grid.column(j), &observed)?,
            })
        })
        .collect()
}

fn table_text(b: &ResultBundle) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:>6}", "month");
    for o in &b.grid.orders {
        let _ = write!(out, "  {:>18}", format!("beta={}", g15(*o)));
    }
    out.push('\n');
    for (m, row) in b.grid.months.iter().zip(&b.grid.values) {
        let _ = write!(out, "{m:>6}");
        for v in row {
            let _ = write!(out, "  {:>18}", g15(*v));
        }
        out.push('\n');
    }
    if let Some(scores) = &b.scores {
        let _ = write!(out, "{:>6}", "mae");
        for s in scores {
            let _ = write!(out, "  {:>18}", g15(s.mae));
        }
        out.push('\n');
    }
    if let Some(best) = b.best {
        let _ = writeln!(out, "best order {}", g15(best));
    }
    out
}

/// Largest relative gap between the truncated series and the closed form
/// over the grid's intervals, with `s = t` = months elapsed.
fn series_check(
    m: f64,
    r: f64,
    etas: &EtaSchedule<f64>,
    orders: &[FracOrder<f64>],
    depth: usize,
) -> Result<String, CliError> {
    let start = etas.intervals()[0].from_month;
    let mut worst = 0.0f64;
    for &order in orders {
        for iv in etas.intervals() {
            let p = GrowthParams::new(m, r, iv.eta, order)?;
            let t = (iv.to_month - start) as f64;
            let exact = closed_form(&p, t, t);
            let approx = series_partial_sum(&p, depth, t, t)?;
            worst = worst.max(((approx - exact) / exact).abs());
        }
    }
    Ok(format!(
        "series check: depth {depth}, max relative deviation from closed form {}\n",
        g15(worst)
    ))
}

fn falling_steps(
    r: f64,
    etas: &EtaSchedule<f64>,
    orders: &[FracOrder<f64>],
    convention: Convention,
) -> String {
    let mut out = String::new();
    for &order in orders {
        for c in step_diagnostics(r, etas, order, convention) {
            if c.is_decrease() {
                let _ = writeln!(
                    out,
                    "warning: beta={} predicted length falls from month {} to {} (eta {}, log-growth {})",
                    g15(order.value()),
                    c.from_month,
                    c.to_month,
                    g15(c.eta),
                    g15(c.log_growth)
                );
            }
        }
    }
    out
}

fn abalone_report(
    cfg: &RunConfig,
    m: f64,
    etas: &EtaSchedule<f64>,
    orders: &[FracOrder<f64>],
) -> Result<String, CliError> {
    let mut out = String::from("\ndeviation from the published table (generated − printed)\n");
    let _ = write!(
        out,
        "{:<22} {:>18} {:>18}",
        "convention", "max |dev|", "mean |dev|"
    );
    for o in orders {
        let _ = write!(out, " {:>18}", format!("beta={}", g15(o.value())));
    }
    out.push('\n');
    for convention in Convention::ALL {
        let grid = predict_table(m, cfg.r, etas, orders, convention)?;
        match deviation_report(&grid) {
            Ok(rep) => {
                let _ = write!(
                    out,
                    "{:<22} {:>18} {:>18}",
                    convention.name(),
                    g15(rep.max_abs),
                    g15(rep.mean_abs)
                );
                for c in &rep.column_mean_abs {
                    let _ = write!(out, " {:>18}", g15(*c));
                }
                out.push('\n');
            }
            Err(e) => {
                let _ = writeln!(out, "{:<22} not comparable: {e}", convention.name());
            }
        }
    }

    let _ = writeln!(
        out,
        "\nmonth-{} check ({}): log-growth r + eta - r^beta into month {}",
        abalone::SUSPECT_MONTH,
        cfg.convention,
        abalone::SUSPECT_MONTH
    );
    for &order in orders {
        let check = step_diagnostics(cfg.r, etas, order, cfg.convention)
            .into_iter()
            .find(|c| c.to_month == abalone::SUSPECT_MONTH);
        if let Some(c) = check {
            let verdict = if c.is_decrease() {
                "DECREASE"
            } else if c.is_increase() {
                "increase"
            } else {
                "flat"
            };
            let _ = writeln!(
                out,
                "  beta={:<6} eta {:<8} log-growth {:>22}  {verdict}",
                g15(order.value()),
                g15(c.eta),
                g15(c.log_growth)
            );
        }
    }
    Ok(out)
}

fn special(c: &SpecialCmd) -> Result<String, CliError> {
    let v = match *c {
        SpecialCmd::Gamma { x } => gamma(x)?,
        SpecialCmd::LnGamma { x } => ln_gamma(x)?,
        SpecialCmd::Ml { alpha, beta, z } => mittag_leffler2(&MLParams::new(alpha, beta)?, z)?,
    };
    Ok(format!("{}\n", g15(v)))
}

fn caputo(a: &CaputoArgs) -> Result<String, CliError> {
    let order = FracOrder::new(a.beta)?;
    let q = QuadratureSpec::new(a.nodes, a.grading)?;
    let power = a.power.map(|g| PowerFunction::new(g, a.a)).transpose()?;
    if power.is_some() && a.rule == Rule::Paper && !a.compare {
        return Err(CliError::Usage(
            "--rule paper applies to exponentials only".into(),
        ));
    }

    let eval = |rule: Rule, s: f64| -> Result<Option<f64>, CliError> {
        Ok(match (&power, rule) {
            (Some(_), Rule::Paper) => None,
            (Some(p), Rule::Exact) => Some(caputo_power(order, p, s)?),
            (Some(p), Rule::Numeric) => {
                if order.is_classical() || s <= p.lower() {
                    None
                } else {
                    let (lo, g) = (p.lower(), p.exponent());
                    Some(caputo_numeric(
                        order,
                        |x: f64| g * (x - lo).powf(g - 1.0),
                        s - lo,
                        &q,
                    )?)
                }
            }
            (None, Rule::Paper) => Some(caputo_exp_paper_rule(order, a.r, a.scale, s)?),
            (None, Rule::Exact) => Some(a.scale * caputo_exp_exact(order, a.r, s)?),
            (None, Rule::Numeric) => {
                if order.is_classical() || s <= 0.0 {
                    None
                } else {
                    Some(caputo_numeric(
                        order,
                        |x: f64| a.scale * a.r * (a.r * x).exp(),
                        s,
                        &q,
                    )?)
                }
            }
        })
    };

    let mut out = String::new();
    if !a.compare {
        for &s in &a.s {
            let v = eval(a.rule, s)?.ok_or_else(|| {
                CliError::Usage(format!(
                    "rule {:?} does not apply here (numeric needs beta < 1 and s above the lower terminal)",
                    a.rule
                ))
            })?;
            if a.s.len() == 1 {
                let _ = writeln!(out, "{}", g15(v));
            } else {
                let _ = writeln!(out, "s={} {}", g15(s), g15(v));
            }
        }
        return Ok(out);
    }

    let _ = writeln!(
        out,
        "{:>10}  {:<8}  {:>22}  {:>22}  {:>22}",
        "s", "rule", "value", "abs diff vs exact", "rel diff vs exact"
    );
    for &s in &a.s {
        let exact = eval(Rule::Exact, s)?.expect("exact rule always applies");
        for rule in [Rule::Exact, Rule::Paper, Rule::Numeric] {
            if let Some(v) = eval(rule, s)? {
                let abs = (v - exact).abs();
                let rel = if exact != 0.0 {
                    g15(abs / exact.abs())
                } else {
                    "-".into()
                };
                let name = format!("{rule:?}").to_lowercase();
                let _ = writeln!(
                    out,
                    "{:>10}  {name:<8}  {:>22}  {:>22}  {rel:>22}",
                    g15(s),
                    g15(v),
                    g15(abs)
                );
            }
        }
    }
    Ok(out)
}

fn series(cli: &Cli, a: &SeriesArgs) -> Result<String, CliError> {
    let cfg = RunConfig::resolve(
        cli.config.as_deref(),
        &a.model.overrides(cli.correct_month8),
    )?;
    let m = cfg.m.unwrap_or(abalone::INITIAL_LENGTH);
    let p = GrowthParams::new(m, cfg.r, a.eta, FracOrder::new(a.beta)?)?;
    let depth = cfg.series_depth;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "w_n = M (eta - r^beta)^n e^(rs) t^n/n!   M {}  r {}  eta {}  beta {}  eta - r^beta {}",
        g15(m),
        g15(cfg.r),
        g15(a.eta),
        g15(a.beta),
        g15(p.net_rate())
    );
    for n in 0..=depth {
        let _ = writeln!(out, "w_{n} = {}", series_term(&p, n)?);
    }
    if let (Some(s), Some(t)) = (a.s, a.t) {
        let approx = series_partial_sum(&p, depth, s, t)?;
        let exact = closed_form(&p, s, t);
        let _ = writeln!(out, "partial sum (depth {depth}) {}", g15(approx));
        let _ = writeln!(out, "closed form {}", g15(exact));
        let _ = writeln!(
            out,
            "relative difference {}",
            g15(((approx - exact) / exact).abs())
        );
    }
    Ok(out)
}
