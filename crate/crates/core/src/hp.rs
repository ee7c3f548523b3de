//! High-precision point arithmetic for reference values and scans.
//!
//! Results are accurate to far more than 50 bits away from cancellation, but
//! carry no error bound; they never enter a certificate.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

use crate::error::IntervalError;
use crate::scalar::{rational_row, SResult, Scalar};
use crate::series::{Rational, SeriesName};

/// Working precision in bits.
pub const HP_BITS: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants"));
    static ROWS: RefCell<HashMap<(SeriesName, usize), Rc<Vec<Hp>>>> = RefCell::new(HashMap::new());
}

fn with_cc<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone, PartialEq)]
pub struct Hp(pub BigFloat);

impl Hp {
    pub fn from_f64(x: f64) -> Hp {
        Hp(BigFloat::from_f64(x, HP_BITS))
    }

    pub fn parse(s: &str) -> Hp {
        Hp(with_cc(|cc| BigFloat::parse(s, Radix::Dec, HP_BITS, RM, cc)))
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self) -> String {
        with_cc(|cc| self.0.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }

    fn wrap(b: BigFloat) -> Hp {
        Hp(b)
    }
}

impl fmt::Debug for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hp({})", self.to_f64())
    }
}

fn ldexp(m: f64, e: i64) -> f64 {
    let mut x = m;
    let mut e = e;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

impl Scalar for Hp {
    fn from_rational(q: &Rational) -> Self {
        let num = Hp::parse(&q.numer().to_string());
        let den = Hp::parse(&q.denom().to_string());
        Hp(num.0.div(&den.0, HP_BITS, RM))
    }
    fn from_int(n: i64) -> Self {
        Hp(BigFloat::from_i64(n, HP_BITS))
    }
    fn pi() -> Self {
        Hp(with_cc(|cc| cc.pi(HP_BITS, RM)))
    }
    fn e() -> Self {
        Hp(with_cc(|cc| cc.e(HP_BITS, RM)))
    }
    fn add(&self, o: &Self) -> Self {
        Hp(self.0.add(&o.0, HP_BITS, RM))
    }
    fn sub(&self, o: &Self) -> Self {
        Hp(self.0.sub(&o.0, HP_BITS, RM))
    }
    fn mul(&self, o: &Self) -> Self {
        Hp(self.0.mul(&o.0, HP_BITS, RM))
    }
    fn neg(&self) -> Self {
        Hp(self.0.neg())
    }
    fn div(&self, o: &Self) -> SResult<Self> {
        if o.0.is_zero() {
            return Err(IntervalError::Pole);
        }
        Ok(Hp(self.0.div(&o.0, HP_BITS, RM)))
    }
    fn sin(&self) -> Self {
        if self.0.is_zero() {
            return Self::zero();
        }
        Hp::wrap(with_cc(|cc| self.0.sin(HP_BITS, RM, cc)))
    }
    fn cos(&self) -> Self {
        if self.0.is_zero() {
            return Self::one();
        }
        Hp::wrap(with_cc(|cc| self.0.cos(HP_BITS, RM, cc)))
    }
    fn sinh(&self) -> Self {
        if self.0.is_zero() {
            return Self::zero();
        }
        Hp::wrap(with_cc(|cc| self.0.sinh(HP_BITS, RM, cc)))
    }
    fn cosh(&self) -> Self {
        if self.0.is_zero() {
            return Self::one();
        }
        Hp::wrap(with_cc(|cc| self.0.cosh(HP_BITS, RM, cc)))
    }
    fn tanh(&self) -> Self {
        if self.0.is_zero() {
            return Self::zero();
        }
        Hp::wrap(with_cc(|cc| self.0.tanh(HP_BITS, RM, cc)))
    }
    fn exp(&self) -> Self {
        if self.0.is_zero() {
            return Self::one();
        }
        Hp::wrap(with_cc(|cc| self.0.exp(HP_BITS, RM, cc)))
    }
    fn log(&self) -> SResult<Self> {
        if !self.0.is_positive() || self.0.is_zero() {
            return Err(IntervalError::Domain("log"));
        }
        if self.0.cmp(&BigFloat::from_i64(1, HP_BITS)) == Some(0) {
            return Ok(Self::zero());
        }
        Ok(Hp::wrap(with_cc(|cc| self.0.ln(HP_BITS, RM, cc))))
    }
    fn sqrt(&self) -> SResult<Self> {
        if self.0.is_zero() {
            return Ok(Self::zero());
        }
        if self.0.is_negative() {
            return Err(IntervalError::Domain("sqrt"));
        }
        Ok(Hp(self.0.sqrt(HP_BITS, RM)))
    }
    fn abs(&self) -> Self {
        Hp(self.0.abs())
    }
    fn pow_int(&self, n: i32) -> SResult<Self> {
        if n < 0 {
            return Self::one().div(&self.pow_int(-n)?);
        }
        Ok(Hp(self.0.powi(n as usize, HP_BITS, RM)))
    }
    fn is_exact_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn contains_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_positive(&self) -> bool {
        !self.0.is_zero() && self.0.is_positive()
    }
    fn is_negative(&self) -> bool {
        !self.0.is_zero() && self.0.is_negative()
    }
    fn mag(&self) -> f64 {
        self.to_f64().abs()
    }
    fn inflate(&self, _r: f64) -> Self {
        self.clone()
    }
    fn hull(&self, _o: &Self) -> Self {
        self.clone()
    }
    fn pieces(&self, c: f64) -> Vec<(Self, bool)> {
        vec![(self.clone(), self.mag() <= c)]
    }
    fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf() {
            return if self.0.is_inf_pos() { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        let Some((words, _, sign, e, _)) = self.0.as_raw_parts() else {
            return f64::NAN;
        };
        // value = 0.m * 2^e with the most significant word last
        let n = words.len();
        let top = words[n - 1] as f64;
        let next = if n >= 2 { words[n - 2] as f64 } else { 0.0 };
        let v = ldexp(top, e as i64 - 64) + ldexp(next, e as i64 - 128);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }
    fn with_series_row<R>(name: SeriesName, j: usize, f: impl FnOnce(&[Self]) -> R) -> R {
        let row = ROWS.with(|rows| {
            rows.borrow_mut()
                .entry((name, j))
                .or_insert_with(|| Rc::new(rational_row(name, j).iter().map(Hp::from_rational).collect()))
                .clone()
        });
        f(&row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_round_trip() {
        for x in [1.0, -2.5, 0.1, 1e-300, 3.0e200, std::f64::consts::PI, -7.25e-5] {
            assert_eq!(Hp::from_f64(x).to_f64(), x);
        }
    }

    #[test]
    fn constants_and_functions() {
        assert_eq!(Hp::pi().to_f64(), std::f64::consts::PI);
        assert_eq!(Hp::e().to_f64(), std::f64::consts::E);
        let x = Hp::from_f64(0.5);
        assert!((x.sin().to_f64() - 0.5f64.sin()).abs() < 1e-16);
        assert!((x.log().unwrap().to_f64() - 0.5f64.ln()).abs() < 1e-16);
        let third = Hp::from_rational(&Rational::new(1.into(), 3.into()));
        assert!((third.to_f64() - 1.0 / 3.0).abs() < 1e-17);
        assert!(Hp::zero().log().is_err());
    }
}
