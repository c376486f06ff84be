//! Numeric traits the rest of the crate is written against.
//!
//! Real-valued operations (special functions, fractional operators, the
//! growth model) are generic over [`Scalar`], implemented for `f32` and `f64`.
//! The term algebra only needs ring operations, so it is generic over the
//! weaker [`Coefficient`] and also works with exact rationals.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

/// Coefficient ring of the series term algebra.
pub trait Coefficient: Num + Clone + Debug + PartialEq + Send + Sync {
    /// Converts an exact non-negative count (binomial factors) into the ring.
    fn from_count(n: u64) -> Self;

    /// True when the value has left the range where it can be trusted
    /// (non-finite floats or magnitudes above the guard).
    fn exceeds_guard(&self) -> bool {
        false
    }
}

/// Magnitude above which floating coefficients are rejected.
pub const COEFF_GUARD: f64 = 1e300;

impl Coefficient for f64 {
    fn from_count(n: u64) -> Self {
        n as f64
    }

    fn exceeds_guard(&self) -> bool {
        !self.is_finite() || self.abs() > COEFF_GUARD
    }
}

impl Coefficient for f32 {
    fn from_count(n: u64) -> Self {
        n as f32
    }

    fn exceeds_guard(&self) -> bool {
        !self.is_finite()
    }
}

impl Coefficient for BigRational {
    fn from_count(n: u64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
}

impl Coefficient for Ratio<i128> {
    fn from_count(n: u64) -> Self {
        Ratio::from_integer(i128::from(n))
    }
}

/// Real scalar type for the analytic parts of the crate.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Coefficient + Default + Display + 'static
{
    /// Lossy conversion from an `f64` literal.
    fn lit(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("f64 literal representable")
    }

    /// Conversion from a small count.
    fn from_usize_lossy(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("count representable")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Double-length value `hi + lo` with `|lo| <= ulp(hi)/2`, used where a
/// series has to be summed past plain floating precision.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TwoFold<T> {
    pub hi: T,
    pub lo: T,
}

impl<T: Scalar> TwoFold<T> {
    pub fn new(v: T) -> Self {
        Self {
            hi: v,
            lo: T::zero(),
        }
    }

    fn two_sum(a: T, b: T) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Self { hi: s, lo: err }
    }

    fn quick_two_sum(a: T, b: T) -> Self {
        let s = a + b;
        Self {
            hi: s,
            lo: b - (s - a),
        }
    }

    fn two_prod(a: T, b: T) -> Self {
        let p = a * b;
        Self {
            hi: p,
            lo: a.mul_add(b, -p),
        }
    }

    pub fn add(self, o: Self) -> Self {
        let s = Self::two_sum(self.hi, o.hi);
        let t = Self::two_sum(self.lo, o.lo);
        let r = Self::quick_two_sum(s.hi, s.lo + t.hi);
        Self::quick_two_sum(r.hi, r.lo + t.lo)
    }

    pub fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    pub fn mul_scalar(self, b: T) -> Self {
        let p = Self::two_prod(self.hi, b);
        Self::quick_two_sum(p.hi, p.lo + self.lo * b)
    }

    pub fn mul(self, o: Self) -> Self {
        let p = Self::two_prod(self.hi, o.hi);
        Self::quick_two_sum(p.hi, p.lo + (self.hi * o.lo + self.lo * o.hi))
    }

    pub fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self.sub(b.mul_scalar(q1));
        let q2 = r.hi / b.hi;
        let r = r.sub(b.mul_scalar(q2));
        let q3 = r.hi / b.hi;
        Self::quick_two_sum(q1, q2).add(Self::new(q3))
    }

    pub fn value(self) -> T {
        self.hi + self.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twofold_recovers_lost_bits() {
        let a = TwoFold::new(1.0f64);
        let tiny = TwoFold::new(1e-20);
        let s = a.add(tiny).add(TwoFold::new(-1.0));
        assert_eq!(s.value(), 1e-20);
    }

    #[test]
    fn twofold_exact_sum_of_inexact_parts() {
        // 1.3 + 7 is not representable; the pair keeps the rounding residue.
        let x = TwoFold::new(1.3f64).add(TwoFold::new(7.0));
        assert_eq!(x.hi, 8.3);
        assert_eq!(x.hi - 7.0 + x.lo, 1.3);
        let q = TwoFold::new(1.0f64).div(x).mul(x).sub(TwoFold::new(1.0));
        assert!(q.value().abs() < 1e-30);
    }

    #[test]
    fn float_guard() {
        assert!(f64::INFINITY.exceeds_guard());
        assert!(2e300f64.exceeds_guard());
        assert!(!1e299f64.exceeds_guard());
        assert!(f32::NAN.exceeds_guard());
    }
}
