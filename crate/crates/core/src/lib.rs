//! Fractional growth modelling toolkit.
//!
//! * [`special`]: gamma and Mittag-Leffler functions.
//! * [`fractional`]: Riemann-Liouville integral and Caputo derivative, in
//!   closed form and by product integration.
//! * [`terms`] and [`adm`]: a sparse term algebra and the Adomian
//!   decomposition recursion over it.
//! * [`growth`]: the fractional growth model, rate estimation, prediction
//!   grids and order selection.
//! * [`abalone`]: the published abalone growth table.
//!
//! Everything real-valued is generic over [`Scalar`] (`f32`, `f64`); the term
//! algebra also runs over exact rationals. The aliases below fix the common
//! choices.

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod abalone;
pub mod adm;
pub mod error;
pub mod fractional;
pub mod growth;
pub mod scalar;
pub mod special;
pub mod terms;

pub use adm::{adm_iterate, adomian_polynomials, partial_sum, AdmProblem, PolynomialNonlinearity};
pub use error::{Error, Result};
pub use fractional::{
    caputo_exp_exact, caputo_exp_paper_rule, caputo_numeric, caputo_power, rl_integral_power,
    FracOrder, PowerFunction, QuadratureSpec,
};
pub use growth::{
    closed_form, estimate_eta, fit_order, mae, predict_table, series_partial_sum, series_term,
    step_diagnostics, Convention, EtaMode, EtaSchedule, GrowthParams, ObservationSeries, OrderFit,
    PredictionGrid, StepCheck,
};
pub use scalar::{Coefficient, Scalar};
pub use special::{gamma, ln_gamma, mittag_leffler, mittag_leffler2, MLParams, SeriesControl};
pub use terms::{
    apply_ls, apply_lt_inverse, evaluate, term_add, term_multiply, SeriesTerm, TermSum,
    DEFAULT_MAX_T_POWER,
};

/// Exact rational coefficients for the term algebra.
pub type Rational = num_rational::BigRational;

pub type FracOrder64 = FracOrder<f64>;
pub type FracOrder32 = FracOrder<f32>;
pub type TermSum64 = TermSum<f64>;
pub type ExactTermSum = TermSum<Rational>;
pub type GrowthParams64 = GrowthParams<f64>;
pub type PredictionGrid64 = PredictionGrid<f64>;
pub type ObservationSeries64 = ObservationSeries<f64>;
pub type EtaSchedule64 = EtaSchedule<f64>;
pub type MLParams64 = MLParams<f64>;
pub type QuadratureSpec64 = QuadratureSpec<f64>;
