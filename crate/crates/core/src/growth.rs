//! The fractional growth model `w_t + D_s^β w = η w`, `w(s, 0) = M e^{rs}`.
//!
//! Under the eigenfunction rule its decomposition terms are
//! `(η − r^β)^n M e^{rs} t^n / n!`, summing to `M e^{rs} e^{(η − r^β) t}`.
//! This module wraps that solution with the data side: growth rates from
//! observed lengths, month-by-month prediction grids over several orders,
//! and MAE-based order selection.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::fractional::FracOrder;
use crate::scalar::Scalar;
use crate::terms::{TermSum, DEFAULT_MAX_T_POWER};

/// Model constants `(M, r, η, β)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthParams<T> {
    m: T,
    r: T,
    eta: T,
    order: FracOrder<T>,
}

impl<T: Scalar> GrowthParams<T> {
    pub fn new(m: T, r: T, eta: T, order: FracOrder<T>) -> Result<Self> {
        if !(m > T::zero()) || !m.is_finite() {
            return Err(invalid("initial size M", format!("{m} is not > 0")));
        }
        if !(r > T::zero() && r < T::one()) {
            return Err(invalid("initial rate r", format!("{r} is outside (0, 1)")));
        }
        if !eta.is_finite() {
            return Err(invalid("growth rate eta", format!("{eta} is not finite")));
        }
        Ok(Self { m, r, eta, order })
    }

    pub fn m(&self) -> T {
        self.m
    }

    pub fn r(&self) -> T {
        self.r
    }

    pub fn eta(&self) -> T {
        self.eta
    }

    pub fn order(&self) -> FracOrder<T> {
        self.order
    }

    /// `η − r^β`, the rate of the time exponential.
    pub fn net_rate(&self) -> T {
        self.eta - self.r.powf(self.order.value())
    }
}

/// `M e^{rs} e^{(η − r^β) t}`.
pub fn closed_form<T: Scalar>(p: &GrowthParams<T>, s: T, t: T) -> T {
    p.m * (p.r * s).exp() * (p.net_rate() * t).exp()
}

/// The `n`-th decomposition term, a single `(c, k = 1, n)` term.
///
/// The coefficient is built by the same repeated multiplication the
/// decomposition engine performs, so the two agree bit for bit.
pub fn series_term<T: Scalar>(p: &GrowthParams<T>, n: usize) -> Result<TermSum<T>> {
    if n > DEFAULT_MAX_T_POWER as usize {
        return Err(Error::Overflow(format!(
            "term index {n} exceeds the time-power cap {DEFAULT_MAX_T_POWER}"
        )));
    }
    let x = p.net_rate();
    let mut c = p.m;
    for _ in 0..n {
        c = c * x;
    }
    Ok(TermSum::single(c, 1, n as u32))
}

/// Sum of the first `depth + 1` decomposition terms at `(s, t)`.
pub fn series_partial_sum<T: Scalar>(p: &GrowthParams<T>, depth: usize, s: T, t: T) -> Result<T> {
    let mut acc = T::zero();
    for n in 0..=depth {
        acc = acc + series_term(p, n)?.evaluate(p.r, s, t);
    }
    Ok(acc)
}

/// Ordered `(month, length)` observations.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservationSeries<T> {
    points: Vec<(u32, T)>,
}

impl<T: Scalar> ObservationSeries<T> {
    pub fn new(points: Vec<(u32, T)>) -> Result<Self> {
        for (i, &(month, length)) in points.iter().enumerate() {
            if month == 0 {
                return Err(invalid(
                    "observations",
                    format!("row {}: months start at 1", i + 1),
                ));
            }
            if !(length > T::zero()) || !length.is_finite() {
                return Err(invalid(
                    "observations",
                    format!("row {}: length {length} is not positive", i + 1),
                ));
            }
            if i > 0 && month <= points[i - 1].0 {
                return Err(invalid(
                    "observations",
                    format!(
                        "row {}: month {month} does not follow month {}",
                        i + 1,
                        points[i - 1].0
                    ),
                ));
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(u32, T)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn months(&self) -> Vec<u32> {
        self.points.iter().map(|p| p.0).collect()
    }

    pub fn lengths(&self) -> Vec<T> {
        self.points.iter().map(|p| p.1).collect()
    }
}

/// How a growth rate is read off two observations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EtaMode {
    /// `Δh / Δt`.
    #[default]
    Absolute,
    /// `Δh / (h Δt)`, the per-capita rate.
    Specific,
}

impl EtaMode {
    pub fn name(self) -> &'static str {
        match self {
            EtaMode::Absolute => "absolute",
            EtaMode::Specific => "specific",
        }
    }
}

impl fmt::Display for EtaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EtaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "absolute" => Ok(EtaMode::Absolute),
            "specific" => Ok(EtaMode::Specific),
            other => Err(invalid("eta mode", format!("unknown mode '{other}'"))),
        }
    }
}

/// Growth rate on one interval between consecutive months.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaInterval<T> {
    /// 1-based interval index.
    pub index: usize,
    pub from_month: u32,
    pub to_month: u32,
    pub eta: T,
}

/// Ordered per-interval growth rates `η_1, …, η_{m−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaSchedule<T> {
    intervals: Vec<EtaInterval<T>>,
}

impl<T: Scalar> EtaSchedule<T> {
    /// Rates for consecutive months starting at month 1: `rates[i]` drives
    /// the step from month `i + 1` to month `i + 2`.
    pub fn from_rates(rates: &[T]) -> Result<Self> {
        if rates.is_empty() {
            return Err(invalid("eta schedule", "needs at least one rate"));
        }
        let intervals = rates
            .iter()
            .enumerate()
            .map(|(i, &eta)| EtaInterval {
                index: i + 1,
                from_month: i as u32 + 1,
                to_month: i as u32 + 2,
                eta,
            })
            .collect();
        Self::from_intervals(intervals)
    }

    pub fn from_intervals(intervals: Vec<EtaInterval<T>>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(invalid("eta schedule", "needs at least one rate"));
        }
        for (i, iv) in intervals.iter().enumerate() {
            if iv.to_month <= iv.from_month {
                return Err(invalid(
                    "eta schedule",
                    format!("interval {} runs backwards", iv.index),
                ));
            }
            if i > 0 && iv.from_month != intervals[i - 1].to_month {
                return Err(invalid(
                    "eta schedule",
                    format!("interval {} does not continue the previous one", iv.index),
                ));
            }
            if !iv.eta.is_finite() {
                return Err(invalid(
                    "eta schedule",
                    format!("interval {} rate is not finite", iv.index),
                ));
            }
        }
        Ok(Self { intervals })
    }

    pub fn intervals(&self) -> &[EtaInterval<T>] {
        &self.intervals
    }

    pub fn rates(&self) -> Vec<T> {
        self.intervals.iter().map(|iv| iv.eta).collect()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Months covered: the first start month followed by every end month.
    pub fn months(&self) -> Vec<u32> {
        let mut out = vec![self.intervals[0].from_month];
        out.extend(self.intervals.iter().map(|iv| iv.to_month));
        out
    }

    /// Replaces the rate of the interval that ends at `month`.
    pub fn override_rate_ending_at(&mut self, month: u32, eta: T) -> Result<()> {
        match self.intervals.iter_mut().find(|iv| iv.to_month == month) {
            Some(iv) => {
                iv.eta = eta;
                Ok(())
            }
            None => Err(invalid(
                "eta override",
                format!("no interval ends at month {month}"),
            )),
        }
    }
}

/// Growth rates from consecutive observations.
pub fn estimate_eta<T: Scalar>(
    obs: &ObservationSeries<T>,
    mode: EtaMode,
) -> Result<EtaSchedule<T>> {
    if obs.len() < 2 {
        return Err(Error::Length {
            expected: 2,
            actual: obs.len(),
        });
    }
    let mut intervals = Vec::with_capacity(obs.len() - 1);
    for (i, w) in obs.points.windows(2).enumerate() {
        let (t0, h0) = w[0];
        let (t1, h1) = w[1];
        if t1 == t0 {
            return Err(Error::Degenerate(format!("month {t0} appears twice")));
        }
        let dt = T::from_u32(t1 - t0).expect("month gap representable");
        let absolute = (h1 - h0) / dt;
        let eta = match mode {
            EtaMode::Absolute => absolute,
            EtaMode::Specific => absolute / h0,
        };
        intervals.push(EtaInterval {
            index: i + 1,
            from_month: t0,
            to_month: t1,
            eta,
        });
    }
    EtaSchedule::from_intervals(intervals)
}

/// How the prediction grid advances from one month to the next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// `h_m = M e^{r s} e^{(η_{m−1} − r^β) t}` with `s = t = m − 1`.
    ClosedFormPerRow,
    /// `h_{m+1} = h_m e^{r Δs + (η_m − r^β) Δt}`.
    #[default]
    Cumulative,
    /// `h_{m+1} = h_m e^{(η_m − r^β) Δt}`.
    CumulativeNoAge,
}

impl Convention {
    pub const ALL: [Convention; 3] = [
        Convention::ClosedFormPerRow,
        Convention::Cumulative,
        Convention::CumulativeNoAge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Convention::ClosedFormPerRow => "closed-form-per-row",
            Convention::Cumulative => "cumulative",
            Convention::CumulativeNoAge => "cumulative-no-age",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Convention::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| invalid("convention", format!("unknown convention '{s}'")))
    }
}

/// Months × orders matrix of predicted lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictionGrid<T> {
    pub months: Vec<u32>,
    pub orders: Vec<FracOrder<T>>,
    /// `values[i][j]`: month `months[i]`, order `orders[j]`.
    pub values: Vec<Vec<T>>,
    pub convention: Convention,
}

impl<T: Scalar> PredictionGrid<T> {
    pub fn column(&self, j: usize) -> Vec<T> {
        self.values.iter().map(|row| row[j]).collect()
    }
}

/// `ln(h_{m+1} / h_m)` for each interval, under `convention`.
fn log_steps<T: Scalar>(
    r: T,
    etas: &EtaSchedule<T>,
    order: FracOrder<T>,
    convention: Convention,
) -> Vec<T> {
    let decay = r.powf(order.value());
    let start = etas.intervals[0].from_month;
    let mut prev_log = T::zero();
    etas.intervals
        .iter()
        .map(|iv| {
            let dt = T::from_u32(iv.to_month - iv.from_month).expect("month gap");
            match convention {
                Convention::Cumulative => r * dt + (iv.eta - decay) * dt,
                Convention::CumulativeNoAge => (iv.eta - decay) * dt,
                Convention::ClosedFormPerRow => {
                    let elapsed = T::from_u32(iv.to_month - start).expect("month gap");
                    let log = r * elapsed + (iv.eta - decay) * elapsed;
                    let step = log - prev_log;
                    prev_log = log;
                    step
                }
            }
        })
        .collect()
}

/// Prediction grid over `orders`, one row per month of the schedule.
pub fn predict_table<T: Scalar>(
    m: T,
    r: T,
    etas: &EtaSchedule<T>,
    orders: &[FracOrder<T>],
    convention: Convention,
) -> Result<PredictionGrid<T>> {
    if orders.is_empty() {
        return Err(invalid(
            "orders",
            "at least one fractional order is required",
        ));
    }
    // Validates M and r.
    GrowthParams::new(m, r, T::zero(), orders[0])?;
    let months = etas.months();
    let mut values = vec![vec![m; orders.len()]; months.len()];
    for (j, &order) in orders.iter().enumerate() {
        match convention {
            Convention::ClosedFormPerRow => {
                let start = months[0];
                for (i, iv) in etas.intervals.iter().enumerate() {
                    let p = GrowthParams::new(m, r, iv.eta, order)?;
                    let elapsed = T::from_u32(iv.to_month - start).expect("month gap");
                    values[i + 1][j] = closed_form(&p, elapsed, elapsed);
                }
            }
            Convention::Cumulative | Convention::CumulativeNoAge => {
                for (i, step) in log_steps(r, etas, order, convention)
                    .into_iter()
                    .enumerate()
                {
                    values[i + 1][j] = values[i][j] * step.exp();
                }
            }
        }
    }
    Ok(PredictionGrid {
        months,
        orders: orders.to_vec(),
        values,
        convention,
    })
}

/// Direction of one predicted month-over-month step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepCheck<T> {
    pub interval: usize,
    pub from_month: u32,
    pub to_month: u32,
    pub eta: T,
    /// `ln(h_to / h_from)`; under the cumulative convention `r + η − r^β` per month.
    pub log_growth: T,
}

impl<T: Scalar> StepCheck<T> {
    pub fn is_increase(&self) -> bool {
        self.log_growth > T::zero()
    }

    pub fn is_decrease(&self) -> bool {
        self.log_growth < T::zero()
    }
}

/// Per-interval growth direction of the predictions for one order.
pub fn step_diagnostics<T: Scalar>(
    r: T,
    etas: &EtaSchedule<T>,
    order: FracOrder<T>,
    convention: Convention,
) -> Vec<StepCheck<T>> {
    log_steps(r, etas, order, convention)
        .into_iter()
        .zip(&etas.intervals)
        .map(|(log_growth, iv)| StepCheck {
            interval: iv.index,
            from_month: iv.from_month,
            to_month: iv.to_month,
            eta: iv.eta,
            log_growth,
        })
        .collect()
}

/// Mean absolute error.
pub fn mae<T: Scalar>(predicted: &[T], observed: &[T]) -> Result<T> {
    if predicted.len() != observed.len() {
        return Err(Error::Length {
            expected: observed.len(),
            actual: predicted.len(),
        });
    }
    if predicted.is_empty() {
        return Err(Error::Length {
            expected: 1,
            actual: 0,
        });
    }
    let total = predicted
        .iter()
        .zip(observed)
        .fold(T::zero(), |acc, (&p, &o)| acc + (p - o).abs());
    Ok(total / T::from_usize_lossy(predicted.len()))
}

/// Outcome of [`fit_order`].
#[derive(Debug, Clone, PartialEq)]
pub struct OrderFit<T> {
    pub best: FracOrder<T>,
    pub best_score: T,
    /// MAE per candidate, in the order the candidates were given.
    pub scores: Vec<(FracOrder<T>, T)>,
    pub grid: PredictionGrid<T>,
    pub etas: EtaSchedule<T>,
}

/// Picks the order whose predicted column has the smallest MAE against `obs`.
///
/// Ties go to the smaller order; equal orders keep the one listed first.
pub fn fit_order<T: Scalar>(
    obs: &ObservationSeries<T>,
    orders: &[FracOrder<T>],
    r: T,
    convention: Convention,
    mode: EtaMode,
) -> Result<OrderFit<T>> {
    if obs.len() < 3 {
        return Err(Error::Length {
            expected: 3,
            actual: obs.len(),
        });
    }
    let etas = estimate_eta(obs, mode)?;
    let m = obs.points[0].1;
    let grid = predict_table(m, r, &etas, orders, convention)?;
    let observed = obs.lengths();
    let mut scores = Vec::with_capacity(orders.len());
    for (j, &order) in orders.iter().enumerate() {
        scores.push((order, mae(&grid.column(j), &observed)?));
    }
    let mut best = 0;
    for (j, &(order, score)) in scores.iter().enumerate().skip(1) {
        let (best_order, best_score) = scores[best];
        let better = score < best_score
            || (score == best_score && order.value() < best_order.value())
            || (best_score.is_nan() && !score.is_nan());
        if better {
            best = j;
        }
    }
    Ok(OrderFit {
        best: scores[best].0,
        best_score: scores[best].1,
        scores,
        grid,
        etas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ord(b: f64) -> FracOrder<f64> {
        FracOrder::new(b).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(GrowthParams::new(0.0, 0.1, 0.2, ord(0.5)).is_err());
        assert!(GrowthParams::new(1.0, 1.0, 0.2, ord(0.5)).is_err());
        assert!(GrowthParams::new(1.0, 0.0, 0.2, ord(0.5)).is_err());
        assert!(GrowthParams::new(1.0, 0.5, f64::NAN, ord(0.5)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let p = GrowthParams::new(0.5322, 0.04305, 0.4936, FracOrder::one()).unwrap();
        assert_eq!(closed_form(&p, 0.0, 0.0), 0.5322);
        assert_relative_eq!(
            closed_form(&p, 0.0, 1.0),
            0.5322 * 0.45055f64.exp(),
            max_relative = 1e-14
        );
        assert!((closed_form(&p, 0.0, 1.0) - 0.835_115).abs() < 1e-6);

        let r: f64 = 0.2;
        let q = GrowthParams::new(1.3, r, r.powf(0.6), ord(0.6)).unwrap();
        for t in [0.0, 1.0, 10.0] {
            assert_relative_eq!(
                closed_form(&q, 2.0, t),
                1.3 * (0.4f64).exp(),
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn series_term_examples() {
        let p = GrowthParams::new(0.5322, 0.04305, 0.4936, ord(0.5)).unwrap();
        let x = p.net_rate();
        assert_eq!(series_term(&p, 0).unwrap(), TermSum::single(0.5322, 1, 0));
        assert_eq!(
            series_term(&p, 1).unwrap(),
            TermSum::single(0.5322 * x, 1, 1)
        );
        assert_eq!(
            series_term(&p, 2).unwrap(),
            TermSum::single(0.5322 * x * x, 1, 2)
        );
        assert!(series_term(&p, 65).is_err());
    }

    #[test]
    fn observation_validation() {
        assert!(ObservationSeries::new(vec![(1, 1.0), (1, 2.0)]).is_err());
        assert!(ObservationSeries::new(vec![(2, 1.0), (1, 2.0)]).is_err());
        assert!(ObservationSeries::new(vec![(1, -1.0)]).is_err());
        assert!(ObservationSeries::new(vec![(0, 1.0)]).is_err());
    }

    #[test]
    fn eta_examples() {
        let obs = ObservationSeries::new(vec![(1, 2.0), (2, 3.0)]).unwrap();
        assert_eq!(
            estimate_eta(&obs, EtaMode::Absolute).unwrap().rates(),
            vec![1.0]
        );
        assert_eq!(
            estimate_eta(&obs, EtaMode::Specific).unwrap().rates(),
            vec![0.5]
        );
        let flat = ObservationSeries::new(vec![(1, 2.0), (2, 2.0), (4, 2.0)]).unwrap();
        for mode in [EtaMode::Absolute, EtaMode::Specific] {
            assert!(estimate_eta(&flat, mode)
                .unwrap()
                .rates()
                .iter()
                .all(|&e| e == 0.0));
        }
        let one = ObservationSeries::new(vec![(1, 2.0)]).unwrap();
        assert!(estimate_eta(&one, EtaMode::Absolute).is_err());
    }

    #[test]
    fn eta_uses_month_gaps() {
        let obs = ObservationSeries::new(vec![(1, 1.0), (3, 2.0)]).unwrap();
        let s = estimate_eta(&obs, EtaMode::Absolute).unwrap();
        assert_eq!(s.rates(), vec![0.5]);
        assert_eq!(s.months(), vec![1, 3]);
    }

    #[test]
    fn schedule_override() {
        let mut s = EtaSchedule::from_rates(&[0.1, 0.2, 0.3]).unwrap();
        s.override_rate_ending_at(3, 0.9).unwrap();
        assert_eq!(s.rates(), vec![0.1, 0.9, 0.3]);
        assert!(s.override_rate_ending_at(9, 0.9).is_err());
        assert!(EtaSchedule::<f64>::from_rates(&[]).is_err());
    }

    #[test]
    fn cumulative_second_month() {
        let s = EtaSchedule::from_rates(&[0.4936]).unwrap();
        let g = predict_table(
            0.5322,
            0.04305,
            &s,
            &[FracOrder::one()],
            Convention::Cumulative,
        )
        .unwrap();
        assert_eq!(g.values[0][0], 0.5322);
        assert_relative_eq!(
            g.values[1][0],
            0.5322 * 0.4936f64.exp(),
            max_relative = 1e-14
        );
        assert!((g.values[1][0] - 0.871_852).abs() < 1e-6);
    }

    #[test]
    fn closed_form_per_row_matches_closed_form() {
        let s = EtaSchedule::from_rates(&[0.3, 0.25, 0.2]).unwrap();
        let g = predict_table(1.0, 0.1, &s, &[ord(0.6)], Convention::ClosedFormPerRow).unwrap();
        let p = GrowthParams::new(1.0, 0.1, 0.2, ord(0.6)).unwrap();
        assert_eq!(g.values[3][0], closed_form(&p, 3.0, 3.0));
    }

    #[test]
    fn step_diagnostics_agree_with_grid() {
        let s = EtaSchedule::from_rates(&[0.3, 0.01, 0.2, 0.15]).unwrap();
        for conv in Convention::ALL {
            let g = predict_table(0.8, 0.05, &s, &[ord(0.5)], conv).unwrap();
            for d in step_diagnostics(0.05, &s, ord(0.5), conv) {
                let i = d.interval;
                let ratio = (g.values[i][0] / g.values[i - 1][0]).ln();
                assert!(
                    (ratio - d.log_growth).abs() < 1e-12,
                    "{conv}: {ratio} vs {}",
                    d.log_growth
                );
            }
        }
    }

    #[test]
    fn mae_examples() {
        assert_eq!(mae(&[1.0, 2.0], &[1.0, 2.0]).unwrap(), 0.0);
        assert_eq!(mae(&[1.0, 2.0], &[2.0, 4.0]).unwrap(), 1.5);
        assert!(mae(&[1.0], &[1.0, 2.0]).is_err());
        assert!(mae::<f64>(&[], &[]).is_err());
    }

    #[test]
    fn fit_single_candidate() {
        let obs = ObservationSeries::new(vec![(1, 1.0), (2, 5.0), (3, 0.2)]).unwrap();
        let fit = fit_order(
            &obs,
            &[ord(0.8)],
            0.04,
            Convention::Cumulative,
            EtaMode::Absolute,
        )
        .unwrap();
        assert_eq!(fit.best, ord(0.8));
        assert_eq!(fit.scores.len(), 1);
    }

    #[test]
    fn fit_needs_three_points() {
        let obs = ObservationSeries::new(vec![(1, 1.0), (2, 2.0)]).unwrap();
        assert!(fit_order(
            &obs,
            &[ord(0.8)],
            0.04,
            Convention::Cumulative,
            EtaMode::Absolute
        )
        .is_err());
    }

    #[test]
    fn convention_parsing() {
        assert_eq!(
            "cumulative".parse::<Convention>().unwrap(),
            Convention::Cumulative
        );
        assert_eq!(
            "CLOSED_FORM_PER_ROW".parse::<Convention>().unwrap(),
            Convention::ClosedFormPerRow
        );
        assert_eq!(
            "cumulative-no-age".parse::<Convention>().unwrap(),
            Convention::CumulativeNoAge
        );
        assert!("weekly".parse::<Convention>().is_err());
        assert_eq!("specific".parse::<EtaMode>().unwrap(), EtaMode::Specific);
    }
}
