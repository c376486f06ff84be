//! Riemann-Liouville integral and Caputo derivative of order `β ∈ (0, 1]`.
//!
//! Closed forms cover power functions `(s - a)^γ` and exponentials `e^{rs}`.
//! Two rules are offered for the exponential:
//!
//! * [`caputo_exp_paper_rule`] treats `e^{rs}` as an eigenfunction,
//!   `D^β e^{rs} = r^β e^{rs}`. This is the derivative with lower terminal at
//!   minus infinity and is what the growth model's series is built on.
//! * [`caputo_exp_exact`] is the Caputo derivative with lower terminal 0,
//!   `r s^{1-β} E_{1,2-β}(rs)`.
//!
//! [`caputo_numeric`] evaluates the defining integral directly by product
//! integration and serves as an independent check of both closed forms.

use crate::error::{domain, invalid, Result};
use crate::scalar::Scalar;
use crate::special::{gamma, mittag_leffler2, MLParams};

/// Fractional order `β` with `0 < β <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FracOrder<T>(T);

impl<T: Scalar> FracOrder<T> {
    pub fn new(beta: T) -> Result<Self> {
        if beta > T::zero() && beta <= T::one() {
            Ok(Self(beta))
        } else {
            Err(invalid(
                "fractional order",
                format!("{beta} is outside (0, 1]"),
            ))
        }
    }

    /// The classical first derivative, `β = 1`.
    pub fn one() -> Self {
        Self(T::one())
    }

    pub fn value(self) -> T {
        self.0
    }

    pub fn is_classical(self) -> bool {
        self.0 == T::one()
    }
}

/// The power function `(s - a)^γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerFunction<T> {
    gamma_exp: T,
    a: T,
}

impl<T: Scalar> PowerFunction<T> {
    pub fn new(gamma_exp: T, a: T) -> Result<Self> {
        if !(gamma_exp > -T::one()) {
            return Err(invalid(
                "power exponent",
                format!("{gamma_exp} is not > -1"),
            ));
        }
        if !(a >= T::zero()) {
            return Err(invalid("lower terminal", format!("{a} is negative")));
        }
        Ok(Self { gamma_exp, a })
    }

    /// `s^γ` with lower terminal 0.
    pub fn monomial(gamma_exp: T) -> Result<Self> {
        Self::new(gamma_exp, T::zero())
    }

    pub fn exponent(&self) -> T {
        self.gamma_exp
    }

    pub fn lower(&self) -> T {
        self.a
    }

    pub fn eval(&self, s: T) -> T {
        (s - self.a).powf(self.gamma_exp)
    }
}

/// Discretization of the Caputo integral for [`caputo_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec<T> {
    nodes: usize,
    grading: T,
}

impl<T: Scalar> QuadratureSpec<T> {
    pub const MIN_NODES: usize = 16;

    pub fn new(nodes: usize, grading: T) -> Result<Self> {
        if nodes < Self::MIN_NODES {
            return Err(invalid(
                "quadrature spec",
                format!("{nodes} nodes is below the minimum of {}", Self::MIN_NODES),
            ));
        }
        if !(grading >= T::one()) {
            return Err(invalid(
                "quadrature spec",
                format!("grading {grading} is below 1"),
            ));
        }
        Ok(Self { nodes, grading })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn grading(&self) -> T {
        self.grading
    }
}

impl<T: Scalar> Default for QuadratureSpec<T> {
    fn default() -> Self {
        Self {
            nodes: 4096,
            grading: T::lit(2.0),
        }
    }
}

/// Riemann-Liouville integral of order `alpha > 0` applied to `(s - a)^γ`:
/// `Γ(γ+1) / Γ(γ+α+1) · (s - a)^{γ+α}`.
pub fn rl_integral_power<T: Scalar>(alpha: T, p: &PowerFunction<T>, s: T) -> Result<T> {
    if !(alpha > T::zero()) {
        return Err(domain(format!("integral order {alpha} must be positive")));
    }
    if !(s >= p.a) {
        return Err(domain(format!(
            "s = {s} lies below the lower terminal {}",
            p.a
        )));
    }
    if s == p.a {
        return Ok(T::zero());
    }
    let g = p.gamma_exp;
    let coeff = gamma(g + T::one())? / gamma(g + alpha + T::one())?;
    Ok(coeff * (s - p.a).powf(g + alpha))
}

/// Caputo derivative of `(s - a)^γ` as a power function: returns the
/// coefficient `c` and exponent of `c·(s - a)^{γ-β}`, or `None` for constants.
pub fn caputo_power_form<T: Scalar>(
    order: FracOrder<T>,
    p: &PowerFunction<T>,
) -> Result<Option<(T, PowerFunction<T>)>> {
    let g = p.gamma_exp;
    if g < T::zero() {
        return Err(domain(format!(
            "Caputo derivative needs exponent >= 0, got {g}"
        )));
    }
    if g == T::zero() {
        return Ok(None);
    }
    let beta = order.value();
    let coeff = gamma(g + T::one())? / gamma(g - beta + T::one())?;
    Ok(Some((coeff, PowerFunction::new(g - beta, p.a)?)))
}

/// Caputo derivative of `(s - a)^γ` at `s > a`.
///
/// Constants (`γ = 0`) map to exactly zero.
pub fn caputo_power<T: Scalar>(order: FracOrder<T>, p: &PowerFunction<T>, s: T) -> Result<T> {
    let form = caputo_power_form(order, p)?;
    if !(s > p.a) {
        return Err(domain(format!(
            "Caputo derivative needs s > a, got s = {s}, a = {}",
            p.a
        )));
    }
    Ok(match form {
        None => T::zero(),
        Some((coeff, q)) => coeff * q.eval(s),
    })
}

/// The eigenfunction rule `D^β (scale·e^{rs}) = scale·r^β·e^{rs}`.
pub fn caputo_exp_paper_rule<T: Scalar>(order: FracOrder<T>, r: T, scale: T, s: T) -> Result<T> {
    if !(r > T::zero()) {
        return Err(domain(format!("growth rate r = {r} must be positive")));
    }
    Ok(scale * r.powf(order.value()) * (r * s).exp())
}

/// Caputo derivative of `e^{rs}` with lower terminal 0:
/// `r · s^{1-β} · E_{1,2-β}(r s)`.
pub fn caputo_exp_exact<T: Scalar>(order: FracOrder<T>, r: T, s: T) -> Result<T> {
    if !(r > T::zero()) {
        return Err(domain(format!("growth rate r = {r} must be positive")));
    }
    if !(s >= T::zero()) {
        return Err(domain(format!("s = {s} must be non-negative")));
    }
    let beta = order.value();
    if order.is_classical() {
        return Ok(r * (r * s).exp());
    }
    if s == T::zero() {
        return Ok(T::zero());
    }
    let ml = mittag_leffler2(&MLParams::new(T::one(), T::lit(2.0) - beta)?, r * s)?;
    Ok(r * s.powf(T::one() - beta) * ml)
}

/// Caputo derivative from its defining integral,
/// `(1/Γ(1-β)) ∫_0^s (s-ξ)^{-β} f'(ξ) dξ`, for `0 < β < 1`.
///
/// The mesh is graded toward `ξ = s`; on each cell `f'` is interpolated
/// linearly and the kernel is integrated exactly against it, so the
/// singular endpoint is never sampled through the kernel.
pub fn caputo_numeric<T, F>(
    order: FracOrder<T>,
    f_prime: F,
    s: T,
    q: &QuadratureSpec<T>,
) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    if order.is_classical() {
        return Err(domain(
            "numeric Caputo rule needs beta < 1; use the classical derivative for beta = 1",
        ));
    }
    if !(s > T::zero()) {
        return Err(domain(format!("s = {s} must be positive")));
    }
    let beta = order.value();
    let one_minus = T::one() - beta;
    let two_minus = T::lit(2.0) - beta;
    let n = q.nodes;
    let nf = T::from_usize_lossy(n);

    // Distance to s at node j, decreasing from s (j = 0) to 0 (j = n).
    let dist = |j: usize| s * (T::from_usize_lossy(n - j) / nf).powf(q.grading);

    let mut acc = T::zero();
    let mut u_left = dist(0);
    let mut f_left = f_prime(s - u_left);
    for j in 0..n {
        let u_right = dist(j + 1);
        let f_right = f_prime(s - u_right);
        let h = u_left - u_right;
        let pl = u_left.powf(one_minus);
        let pr = u_right.powf(one_minus);
        // ∫ (s-ξ)^{-β} dξ over the cell
        let w0 = (pl - pr) / one_minus;
        // ∫ (s-ξ)^{-β} (ξ - ξ_left) dξ over the cell
        let w1 = u_left * w0 - (pl * u_left - pr * u_right) / two_minus;
        let slope = (f_right - f_left) / h;
        acc = acc + f_left * w0 + slope * w1;
        u_left = u_right;
        f_left = f_right;
    }
    Ok(acc / gamma(one_minus)?)
}
