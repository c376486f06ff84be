//! Published abalone (Haliotis asinina) length-growth table: monthly growth
//! rates, the initial length and rate, and the predicted lengths for
//! orders 0.5 through 1.0 over 24 months.
//!
//! The observed series behind the table was never published, so only the
//! model-side columns are available here. [`deviation_report`] compares a
//! generated grid against the printed cells.

use crate::error::{invalid, Result};
use crate::fractional::FracOrder;
use crate::growth::{Convention, EtaSchedule, PredictionGrid};
use crate::scalar::Scalar;

/// Length at month 1.
pub const INITIAL_LENGTH: f64 = 0.5322;

/// Initial growth rate `r`.
pub const INITIAL_RATE: f64 = 0.04305;

/// Orders of the printed columns.
pub const ORDERS: [f64; 6] = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

/// Month whose printed rate looks like a dropped digit (0.0380 between 0.3962 and 0.3628).
pub const SUSPECT_MONTH: u32 = 8;

/// Printed growth rates for months 2 through 24; entry `i` drives the step
/// into month `i + 2`.
pub const ETAS: [f64; 23] = [
    0.4936, 0.4724, 0.4521, 0.4326, 0.4239, 0.3962, 0.0380, 0.3628, 0.3472, 0.3322, 0.3179, 0.3043,
    0.2911, 0.2786, 0.2666, 0.2551, 0.2443, 0.2336, 0.2236, 0.2140, 0.2047, 0.1960, 0.1875,
];

/// Printed mean absolute errors per order, against the unpublished observations.
pub const REPORTED_MAE: [f64; 6] = [0.2622, 0.5373, 0.7517, 0.9155, 1.0382, 1.1294];

/// Printed predicted lengths, months 1 through 24 by [`ORDERS`].
pub const LENGTHS: [[f64; 6]; 24] = [
    [0.5322, 0.5322, 0.5322, 0.5322, 0.5322, 0.5322],
    [0.7370, 0.7794, 0.8119, 0.8366, 0.8550, 0.8687],
    [1.3924, 1.4726, 1.5341, 1.5805, 1.6154, 1.6413],
    [1.9934, 2.1082, 2.1962, 2.2627, 2.3126, 2.3496],
    [2.5435, 2.6900, 2.8023, 2.8872, 2.9508, 2.9981],
    [3.0768, 3.2540, 3.3898, 3.4925, 3.5694, 3.6267],
    [3.5397, 3.7436, 3.8998, 4.0179, 4.1065, 4.1723],
    [3.9611, 4.1892, 4.3641, 4.4963, 4.5954, 4.6691],
    [4.3558, 4.6067, 4.7989, 4.9444, 5.0533, 5.1344],
    [4.7240, 4.9960, 5.2045, 5.3622, 5.4804, 5.5683],
    [5.0643, 5.3559, 5.5794, 5.7485, 5.8751, 5.9694],
    [5.3797, 5.6895, 5.9269, 6.1065, 6.2410, 6.3412],
    [5.6726, 5.9993, 6.2497, 6.4390, 6.5809, 6.6865],
    [5.9436, 6.2859, 6.5482, 6.7467, 6.8953, 7.0059],
    [6.1961, 6.5529, 6.8264, 7.0332, 7.1882, 7.3035],
    [6.4308, 6.8011, 7.0849, 7.2996, 7.4604, 7.5801],
    [6.6491, 7.0321, 7.3255, 7.5475, 7.7138, 7.8375],
    [6.8540, 7.2487, 7.5512, 7.7800, 7.9515, 8.0790],
    [7.0429, 7.4485, 7.7593, 7.9944, 8.1705, 8.3016],
    [7.2206, 7.6365, 7.9551, 8.1962, 8.3768, 8.5111],
    [7.3866, 7.8120, 8.1380, 8.3846, 8.5693, 8.7068],
    [7.5410, 7.9753, 8.3081, 8.5599, 8.7485, 8.8888],
    [7.6869, 8.1297, 8.4689, 8.7255, 8.9178, 9.0608],
    [7.8225, 8.2730, 8.6182, 8.8793, 9.0750, 9.2205],
];

pub fn eta_schedule<T: Scalar>() -> EtaSchedule<T> {
    let rates: Vec<T> = ETAS.iter().map(|&e| T::lit(e)).collect();
    EtaSchedule::from_rates(&rates).expect("published schedule is valid")
}

pub fn orders<T: Scalar>() -> Vec<FracOrder<T>> {
    ORDERS
        .iter()
        .map(|&b| FracOrder::new(T::lit(b)).expect("published order is valid"))
        .collect()
}

/// Cell-by-cell comparison of a generated grid with the printed one.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationReport<T> {
    pub convention: Convention,
    pub months: Vec<u32>,
    pub orders: Vec<FracOrder<T>>,
    /// `generated − printed` per cell.
    pub deviations: Vec<Vec<T>>,
    pub max_abs: T,
    pub mean_abs: T,
    /// Mean absolute deviation per order column.
    pub column_mean_abs: Vec<T>,
}

/// Compares `grid` with the printed cells. The grid must cover months
/// 1..=24 and only orders that appear in the printed table.
pub fn deviation_report<T: Scalar>(grid: &PredictionGrid<T>) -> Result<DeviationReport<T>> {
    let expected: Vec<u32> = (1..=LENGTHS.len() as u32).collect();
    if grid.months != expected {
        return Err(invalid("grid", "months must be 1 through 24 to compare"));
    }
    let mut cols = Vec::with_capacity(grid.orders.len());
    for o in &grid.orders {
        let b = o.value().to_f64().unwrap_or(f64::NAN);
        match ORDERS.iter().position(|&p| (p - b).abs() < 1e-12) {
            Some(c) => cols.push(c),
            None => return Err(invalid("grid", format!("order {b} has no printed column"))),
        }
    }
    let mut deviations = Vec::with_capacity(grid.values.len());
    let mut max_abs = T::zero();
    let mut total = T::zero();
    let mut column_total = vec![T::zero(); cols.len()];
    for (row, printed) in grid.values.iter().zip(LENGTHS.iter()) {
        let mut devs = Vec::with_capacity(cols.len());
        for (j, &c) in cols.iter().enumerate() {
            let d = row[j] - T::lit(printed[c]);
            max_abs = max_abs.max(d.abs());
            total = total + d.abs();
            column_total[j] = column_total[j] + d.abs();
            devs.push(d);
        }
        deviations.push(devs);
    }
    let rows = T::from_usize_lossy(grid.values.len());
    let cells = T::from_usize_lossy(grid.values.len() * cols.len());
    Ok(DeviationReport {
        convention: grid.convention,
        months: grid.months.clone(),
        orders: grid.orders.clone(),
        deviations,
        max_abs,
        mean_abs: total / cells,
        column_mean_abs: column_total.into_iter().map(|t| t / rows).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::predict_table;

    #[test]
    fn printed_rows_increase_across_orders() {
        for row in &LENGTHS[1..] {
            assert!(row.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn schedule_covers_24_months() {
        let s = eta_schedule::<f64>();
        assert_eq!(s.months(), (1..=24).collect::<Vec<_>>());
        assert_eq!(s.intervals()[6].to_month, SUSPECT_MONTH);
        assert_eq!(s.intervals()[6].eta, 0.0380);
    }

    #[test]
    fn report_shapes() {
        let s = eta_schedule::<f64>();
        let g = predict_table(
            INITIAL_LENGTH,
            INITIAL_RATE,
            &s,
            &orders(),
            Convention::Cumulative,
        )
        .unwrap();
        let rep = deviation_report(&g).unwrap();
        assert_eq!(rep.deviations.len(), 24);
        assert!(rep.deviations[0].iter().all(|&d| d == 0.0));
        assert!(rep.max_abs > 0.0);
    }

    #[test]
    fn report_rejects_foreign_orders() {
        let s = eta_schedule::<f64>();
        let o = vec![FracOrder::new(0.55).unwrap()];
        let g =
            predict_table(INITIAL_LENGTH, INITIAL_RATE, &s, &o, Convention::Cumulative).unwrap();
        assert!(deviation_report(&g).is_err());
    }
}
