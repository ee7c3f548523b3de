//! Closed `f64` intervals with outward rounding.

mod elem;
pub mod round;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::IntervalError;
use crate::series::Rational;
use round::*;

/// A closed interval `[lo, hi]` guaranteed to contain the exact value(s) it
/// stands for. Endpoints may be infinite only on evaluation results.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

pub type IResult = Result<Interval, IntervalError>;

impl Interval {
    /// `[f64::PI, next_up(f64::PI)]` contains pi.
    pub const PI: Interval = Interval { lo: std::f64::consts::PI, hi: 3.1415926535897936 };
    pub const HALF_PI: Interval = Interval { lo: std::f64::consts::FRAC_PI_2, hi: 1.5707963267948968 };
    pub const E: Interval = Interval { lo: std::f64::consts::E, hi: 2.7182818284590455 };
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };
    pub const ENTIRE: Interval = Interval { lo: f64::NEG_INFINITY, hi: f64::INFINITY };

    /// Panics unless `lo <= hi` and neither is NaN.
    pub fn new(lo: f64, hi: f64) -> Interval {
        Self::try_new(lo, hi).unwrap_or_else(|| panic!("invalid interval [{lo}, {hi}]"))
    }

    pub fn try_new(lo: f64, hi: f64) -> Option<Interval> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Interval {
        Interval::new(x, x)
    }

    /// Normalizes a possibly-NaN result into a valid (maybe unbounded) interval.
    fn fix(lo: f64, hi: f64) -> Interval {
        let lo = if lo.is_nan() { f64::NEG_INFINITY } else { lo };
        let hi = if hi.is_nan() { f64::INFINITY } else { hi };
        Interval { lo: lo.min(hi), hi: hi.max(lo) }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Upper bound on the width.
    pub fn width(&self) -> f64 {
        sub_up(self.hi, self.lo)
    }

    pub fn mid(&self) -> f64 {
        if self.lo == f64::NEG_INFINITY || self.hi == f64::INFINITY {
            return if self.lo.is_finite() { self.lo } else if self.hi.is_finite() { self.hi } else { 0.0 };
        }
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    /// Largest absolute value.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value.
    pub fn mig(&self) -> f64 {
        if self.contains_zero() {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.lo == 0.0 && self.hi == 0.0
    }

    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::try_new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    /// Splits at the midpoint.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (Interval::new(self.lo, m), Interval::new(m, self.hi))
    }

    /// `[lo - r, hi + r]` rounded outward.
    pub fn inflate(&self, r: f64) -> Interval {
        if r == 0.0 {
            return *self;
        }
        Interval::fix(sub_down(self.lo, r), add_up(self.hi, r))
    }

    /// Tightest enclosure of an exact rational.
    pub fn from_rational(q: &Rational) -> Interval {
        let x = q.to_f64().unwrap_or(f64::NAN);
        if !x.is_finite() {
            return if q.is_positive() {
                Interval::fix(f64::MAX, f64::INFINITY)
            } else {
                Interval::fix(f64::NEG_INFINITY, f64::MIN)
            };
        }
        if x == 0.0 && q.is_zero() {
            return Interval::ZERO;
        }
        let ex = Rational::from_float(x).expect("finite");
        match ex.cmp(q) {
            std::cmp::Ordering::Equal => Interval::point(x),
            std::cmp::Ordering::Less => Interval::new(x, x.next_up()),
            std::cmp::Ordering::Greater => Interval::new(x.next_down(), x),
        }
    }

    pub fn from_integer(n: i64) -> Interval {
        Interval::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::fix(add_down(self.lo, o.lo), add_up(self.hi, o.hi))
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::fix(sub_down(self.lo, o.hi), sub_up(self.hi, o.lo))
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        if self.is_zero() || o.is_zero() {
            return Interval::ZERO;
        }
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        let lo = [mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d)];
        let hi = [mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d)];
        if lo.iter().chain(hi.iter()).any(|v| v.is_nan()) {
            return Interval::ENTIRE;
        }
        Interval::fix(
            lo.into_iter().fold(f64::INFINITY, f64::min),
            hi.into_iter().fold(f64::NEG_INFINITY, f64::max),
        )
    }

    pub fn div(&self, o: &Interval) -> IResult {
        if o.contains_zero() {
            return Err(IntervalError::Pole);
        }
        if self.is_zero() {
            return Ok(Interval::ZERO);
        }
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        let lo = [div_down(a, c), div_down(a, d), div_down(b, c), div_down(b, d)];
        let hi = [div_up(a, c), div_up(a, d), div_up(b, c), div_up(b, d)];
        if lo.iter().chain(hi.iter()).any(|v| v.is_nan()) {
            return Ok(Interval::ENTIRE);
        }
        Ok(Interval::fix(
            lo.into_iter().fold(f64::INFINITY, f64::min),
            hi.into_iter().fold(f64::NEG_INFINITY, f64::max),
        ))
    }

    /// Multiplication by an exact `f64`.
    pub fn scale(&self, k: f64) -> Interval {
        self.mul(&Interval::point(k))
    }

    pub fn recip(&self) -> IResult {
        Interval::ONE.div(self)
    }

    pub fn sqr(&self) -> Interval {
        let m = self.mig();
        let big = self.mag();
        Interval::fix(mul_down(m, m), mul_up(big, big))
    }

    pub fn pow_int(&self, n: i32) -> IResult {
        if n == 0 {
            return Ok(Interval::ONE);
        }
        if n < 0 {
            return self.pow_int(-n)?.recip();
        }
        let n = n as u32;
        let pow_down = |x: f64| (1..n).fold(x, |acc, _| mul_down(acc, x));
        let pow_up = |x: f64| (1..n).fold(x, |acc, _| mul_up(acc, x));
        if n % 2 == 0 {
            let (m, big) = (self.mig(), self.mag());
            Ok(Interval::fix(pow_down(m), pow_up(big)))
        } else {
            // odd powers are increasing; x^n = -(|x|^n) for negative x
            let lo = if self.lo >= 0.0 { pow_down(self.lo) } else { -pow_up(-self.lo) };
            let hi = if self.hi >= 0.0 { pow_up(self.hi) } else { -pow_down(-self.hi) };
            Ok(Interval::fix(lo, hi))
        }
    }

    pub fn abs(&self) -> Interval {
        Interval { lo: self.mig(), hi: self.mag() }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
