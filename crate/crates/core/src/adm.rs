//! Adomian decomposition over the term algebra.
//!
//! Solves `w_t + D_s^β w + N(w) = η w + g` by the recursion
//!
//! ```text
//! w_{n+1} = L_t⁻¹[g]·[n = 0] − L_t⁻¹[L_s w_n] + η L_t⁻¹[w_n] − L_t⁻¹[A_n]
//! ```
//!
//! where `A_n` are the Adomian polynomials of the polynomial nonlinearity `N`.
//! With `N = 0` and `g = 0` this is the recursion of the fractional growth
//! model, whose iterates are single terms `(η − r^β)^n M e^{rs} t^n / n!`.

use std::collections::BTreeMap;

use crate::error::{invalid, Error, Result};
use crate::fractional::FracOrder;
use crate::scalar::{Coefficient, Scalar};
use crate::terms::{space_symbol, TermSum, DEFAULT_MAX_T_POWER};

/// Polynomial nonlinearity `N(w) = Σ_j c_j w^j`, `j >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialNonlinearity<C> {
    coefficients: BTreeMap<u32, C>,
}

impl<C: Coefficient> PolynomialNonlinearity<C> {
    pub fn new<I: IntoIterator<Item = (u32, C)>>(coefficients: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (j, c) in coefficients {
            if j == 0 {
                return Err(invalid("nonlinearity", "powers must be >= 1"));
            }
            if !c.is_zero() {
                map.insert(j, c);
            }
        }
        Ok(Self { coefficients: map })
    }

    /// `N(w) = w^j`.
    pub fn power(j: u32) -> Result<Self> {
        Self::new([(j, C::one())])
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (u32, &C)> {
        self.coefficients.iter().map(|(&j, c)| (j, c))
    }

    /// `N(w)` evaluated directly on a term sum.
    pub fn apply(&self, w: &TermSum<C>, max_t_power: u32) -> Result<TermSum<C>> {
        let mut out = TermSum::zero();
        for (&j, c) in &self.coefficients {
            let mut p = TermSum::one();
            for _ in 0..j {
                p = p.multiply(w, max_t_power)?;
            }
            out = &out + &p.scale(c);
        }
        Ok(out)
    }
}

/// Adomian polynomial `A_n` of `nl` for the components `w_0, …, w_n`,
/// under the default time-power cap.
pub fn adomian_polynomials<C: Coefficient>(
    nl: &PolynomialNonlinearity<C>,
    w: &[TermSum<C>],
    n: usize,
) -> Result<TermSum<C>> {
    adomian_polynomials_capped(nl, w, n, DEFAULT_MAX_T_POWER)
}

/// `A_n` is the λⁿ coefficient of `N(Σ λⁱ wᵢ)`. For `w^j` that is the sum of
/// `w_{i_1} ⋯ w_{i_j}` over every composition `i_1 + … + i_j = n`.
pub fn adomian_polynomials_capped<C: Coefficient>(
    nl: &PolynomialNonlinearity<C>,
    w: &[TermSum<C>],
    n: usize,
    max_t_power: u32,
) -> Result<TermSum<C>> {
    if w.len() < n + 1 {
        return Err(Error::Length {
            expected: n + 1,
            actual: w.len(),
        });
    }
    let mut out = TermSum::zero();
    for (&j, c) in &nl.coefficients {
        let mut acc = TermSum::zero();
        let mut parts = vec![0usize; j as usize];
        for_each_composition(n, &mut parts, 0, &mut |idx| {
            let mut prod = TermSum::one();
            for &i in idx {
                prod = prod.multiply(&w[i], max_t_power)?;
                if prod.is_empty() {
                    break;
                }
            }
            acc = &acc + &prod;
            Ok(())
        })?;
        out = &out + &acc.scale(c);
    }
    Ok(out)
}

/// Visits every way of writing `remaining` as an ordered sum filling `parts[slot..]`.
fn for_each_composition<F>(
    remaining: usize,
    parts: &mut [usize],
    slot: usize,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if slot + 1 == parts.len() {
        parts[slot] = remaining;
        return visit(parts);
    }
    for i in 0..=remaining {
        parts[slot] = i;
        for_each_composition(remaining - i, parts, slot + 1, visit)?;
    }
    Ok(())
}

/// Configuration of a decomposition run beyond the linear model.
#[derive(Debug, Clone)]
pub struct AdmProblem<T> {
    pub order: FracOrder<T>,
    pub r: T,
    pub eta: T,
    pub nonlinearity: Option<PolynomialNonlinearity<T>>,
    pub source: Option<TermSum<T>>,
    pub max_t_power: u32,
}

impl<T: Scalar> AdmProblem<T> {
    /// The linear growth model `w_t + D_s^β w = η w`.
    pub fn linear(order: FracOrder<T>, r: T, eta: T) -> Self {
        Self {
            order,
            r,
            eta,
            nonlinearity: None,
            source: None,
            max_t_power: DEFAULT_MAX_T_POWER,
        }
    }

    /// Components `w_0, …, w_depth`.
    pub fn iterate(&self, w0: &TermSum<T>, depth: usize) -> Result<Vec<TermSum<T>>> {
        if !(self.r > T::zero()) {
            return Err(crate::error::domain(format!(
                "growth rate r = {} must be positive",
                self.r
            )));
        }
        if depth > self.max_t_power as usize {
            return Err(Error::Overflow(format!(
                "depth {depth} exceeds the time-power cap {}",
                self.max_t_power
            )));
        }
        let nl = self.nonlinearity.as_ref().filter(|nl| !nl.is_empty());
        let mut ws = Vec::with_capacity(depth + 1);
        ws.push(w0.clone());
        for n in 0..depth {
            // (η − L_s) w_n, one coefficient update per term.
            let linear = TermSum::from_terms(ws[n].iter().map(|mut t| {
                t.coeff = t.coeff * (self.eta - space_symbol(t.exp_mult, self.r, self.order));
                t
            }));
            let mut rhs = linear;
            if n == 0 {
                if let Some(g) = &self.source {
                    rhs = &rhs + g;
                }
            }
            if let Some(nl) = nl {
                let a_n = adomian_polynomials_capped(nl, &ws, n, self.max_t_power)?;
                rhs = &rhs - &a_n;
            }
            ws.push(rhs.integrate_time(self.max_t_power)?);
        }
        Ok(ws)
    }
}

/// Decomposition components `w_0, …, w_depth` for
/// `w_t + D_s^β w + N(w) = η w + g` with initial data `w0`.
pub fn adm_iterate<T: Scalar>(
    w0: &TermSum<T>,
    order: FracOrder<T>,
    r: T,
    eta: T,
    nl: Option<&PolynomialNonlinearity<T>>,
    source: Option<&TermSum<T>>,
    depth: usize,
) -> Result<Vec<TermSum<T>>> {
    let problem = AdmProblem {
        order,
        r,
        eta,
        nonlinearity: nl.cloned(),
        source: source.cloned(),
        max_t_power: DEFAULT_MAX_T_POWER,
    };
    problem.iterate(w0, depth)
}

/// Sum of all components evaluated at `(s, t)`.
pub fn partial_sum<T: Scalar>(components: &[TermSum<T>], r: T, s: T, t: T) -> T {
    components
        .iter()
        .fold(T::zero(), |acc, w| acc + w.evaluate(r, s, t))
}
