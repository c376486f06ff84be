//! Sparse term algebra over the basis `e^{k r s} · t^n / n!`.
//!
//! Every operator the decomposition applies maps this family into itself:
//! time integration shifts `n`, the fractional space operator rescales the
//! coefficient, and products add exponents. Keeping the `1/n!` inside the
//! basis makes time integration exact and keeps coefficients small.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::fractional::FracOrder;
use crate::scalar::{Coefficient, Scalar};

/// Default cap on the time power `n`.
pub const DEFAULT_MAX_T_POWER: u32 = 64;

/// One term `coeff · e^{exp_mult · r · s} · t^{t_power} / t_power!`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTerm<C> {
    pub coeff: C,
    pub exp_mult: u32,
    pub t_power: u32,
}

impl<C> SeriesTerm<C> {
    pub fn new(coeff: C, exp_mult: u32, t_power: u32) -> Self {
        Self {
            coeff,
            exp_mult,
            t_power,
        }
    }
}

/// Canonical finite sum of [`SeriesTerm`]s: one coefficient per `(k, n)`
/// key and no zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TermSum<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coefficient> Default for TermSum<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> TermSum<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity `1 = e^0 · t^0 / 0!`.
    pub fn one() -> Self {
        Self::single(C::one(), 0, 0)
    }

    pub fn single(coeff: C, exp_mult: u32, t_power: u32) -> Self {
        let mut out = Self::zero();
        out.accumulate((exp_mult, t_power), coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = SeriesTerm<C>>>(terms: I) -> Self {
        let mut out = Self::zero();
        for t in terms {
            out.accumulate((t.exp_mult, t.t_power), t.coeff);
        }
        out
    }

    fn accumulate(&mut self, key: (u32, u32), coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(prev) => {
                let merged = prev + coeff;
                if !merged.is_zero() {
                    self.terms.insert(key, merged);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the `(k, n)` basis element, if present.
    pub fn coeff(&self, exp_mult: u32, t_power: u32) -> Option<&C> {
        self.terms.get(&(exp_mult, t_power))
    }

    /// Terms in `(k, n)` order.
    pub fn iter(&self) -> impl Iterator<Item = SeriesTerm<C>> + '_ {
        self.terms
            .iter()
            .map(|(&(k, n), c)| SeriesTerm::new(c.clone(), k, n))
    }

    pub fn max_t_power(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, n)| n).max()
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero();
        for (&key, c) in &self.terms {
            out.accumulate(key, c.clone() * factor.clone());
        }
        out
    }

    /// Product, with the binomial factor that renormalizes
    /// `(t^a/a!)(t^b/b!)` to `t^{a+b}/(a+b)!`.
    pub fn multiply(&self, other: &Self, max_t_power: u32) -> Result<Self> {
        let mut out = Self::zero();
        for (&(k1, n1), c1) in &self.terms {
            for (&(k2, n2), c2) in &other.terms {
                let n = n1 + n2;
                if n > max_t_power {
                    return Err(Error::Overflow(format!(
                        "product time power {n} exceeds the cap {max_t_power}"
                    )));
                }
                let b = C::from_count(binomial(n, n1));
                out.accumulate((k1 + k2, n), c1.clone() * c2.clone() * b);
            }
        }
        out.check_guard()?;
        Ok(out)
    }

    /// Time integral from 0: `(c, k, n) -> (c, k, n + 1)`.
    pub fn integrate_time(&self, max_t_power: u32) -> Result<Self> {
        let mut out = Self::zero();
        for (&(k, n), c) in &self.terms {
            if n + 1 > max_t_power {
                return Err(Error::Overflow(format!(
                    "time power {} exceeds the cap {max_t_power}",
                    n + 1
                )));
            }
            out.terms.insert((k, n + 1), c.clone());
        }
        Ok(out)
    }

    fn check_guard(&self) -> Result<()> {
        match self.terms.iter().find(|(_, c)| c.exceeds_guard()) {
            Some((&(k, n), c)) => Err(Error::Overflow(format!(
                "coefficient {c:?} of term (k = {k}, n = {n}) left the guarded range"
            ))),
            None => Ok(()),
        }
    }
}

impl<T: Scalar> TermSum<T> {
    /// Fractional space operator under the eigenfunction rule:
    /// `(c, k, n) -> (c · (k r)^β, k, n)`. Terms constant in `s` vanish.
    pub fn apply_space_operator(&self, order: FracOrder<T>, r: T) -> Self {
        let mut out = Self::zero();
        for (&(k, n), &c) in &self.terms {
            out.accumulate((k, n), c * space_symbol(k, r, order));
        }
        out
    }

    /// Value at `(s, t)`.
    pub fn evaluate(&self, r: T, s: T, t: T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(k, n), &c)| {
            let mut time = T::one();
            for i in 1..=n {
                time = time * (t / T::from_usize_lossy(i as usize));
            }
            acc + c * (T::from_usize_lossy(k as usize) * r * s).exp() * time
        })
    }
}

/// `(k r)^β`, the symbol of the fractional space operator on `e^{k r s}`.
pub(crate) fn space_symbol<T: Scalar>(k: u32, r: T, order: FracOrder<T>) -> T {
    (T::from_usize_lossy(k as usize) * r).powf(order.value())
}

fn binomial(n: u32, k: u32) -> u64 {
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

impl<C: Coefficient> Add for &TermSum<C> {
    type Output = TermSum<C>;

    fn add(self, rhs: Self) -> TermSum<C> {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.accumulate(key, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &TermSum<C> {
    type Output = TermSum<C>;

    fn neg(self) -> TermSum<C> {
        TermSum {
            terms: self
                .terms
                .iter()
                .map(|(&key, c)| (key, C::zero() - c.clone()))
                .collect(),
        }
    }
}

impl<C: Coefficient> Sub for &TermSum<C> {
    type Output = TermSum<C>;

    fn sub(self, rhs: Self) -> TermSum<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for TermSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(k, n), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·e^({k}rs)·t^{n}/{n}!")?;
        }
        Ok(())
    }
}

/// Coefficient-wise sum.
pub fn term_add<C: Coefficient>(x: &TermSum<C>, y: &TermSum<C>) -> TermSum<C> {
    x + y
}

/// Product under the default time-power cap.
pub fn term_multiply<C: Coefficient>(x: &TermSum<C>, y: &TermSum<C>) -> Result<TermSum<C>> {
    x.multiply(y, DEFAULT_MAX_T_POWER)
}

/// The fractional space operator `L_s`.
pub fn apply_ls<T: Scalar>(x: &TermSum<T>, order: FracOrder<T>, r: T) -> Result<TermSum<T>> {
    if !(r > T::zero()) {
        return Err(crate::error::domain(format!(
            "growth rate r = {r} must be positive"
        )));
    }
    Ok(x.apply_space_operator(order, r))
}

/// The inverse time operator `L_t^{-1}` under the default cap.
pub fn apply_lt_inverse<C: Coefficient>(x: &TermSum<C>) -> Result<TermSum<C>> {
    x.integrate_time(DEFAULT_MAX_T_POWER)
}

pub fn evaluate<T: Scalar>(x: &TermSum<T>, r: T, s: T, t: T) -> T {
    x.evaluate(r, s, t)
}
