//! Elementary functions on intervals.
//!
//! Endpoint values come from the platform libm and are widened by
//! [`LIBM_ULPS`] ulps on each side, which covers its documented error.

use super::round::{sqrt_down, sqrt_up, ulps_down, ulps_up};
use super::{IResult, Interval};
use crate::error::IntervalError;

pub const LIBM_ULPS: u32 = 3;

fn lo_of(f: fn(f64) -> f64, x: f64) -> f64 {
    ulps_down(f(x), LIBM_ULPS)
}

fn hi_of(f: fn(f64) -> f64, x: f64) -> f64 {
    ulps_up(f(x), LIBM_ULPS)
}

/// Image of an increasing function with exact value `at0` at zero.
fn increasing(x: &Interval, f: fn(f64) -> f64, at0: f64) -> Interval {
    let lo = if x.lo == 0.0 { at0 } else { lo_of(f, x.lo) };
    let hi = if x.hi == 0.0 { at0 } else { hi_of(f, x.hi) };
    Interval::fix(lo, hi)
}

/// Does `x` possibly contain `k * pi / 2` for some integer `k` with
/// `k mod 4 == r`?
fn may_contain_quarter_turn(x: &Interval, r: i64) -> bool {
    let (plo, phi) = (Interval::HALF_PI.lo, Interval::HALF_PI.hi);
    let k0 = (x.lo / phi).floor() as i64 - 1;
    let k1 = (x.hi / plo).ceil() as i64 + 1;
    (k0..=k1).filter(|k| k.rem_euclid(4) == r).any(|k| {
        let kp = Interval::point(k as f64).mul(&Interval::HALF_PI);
        kp.lo <= x.hi && x.lo <= kp.hi
    })
}

fn periodic(x: &Interval, f: fn(f64) -> f64, max_at: i64, at0: f64) -> Interval {
    if !x.is_finite() || x.width() >= 6.0 {
        return Interval::new(-1.0, 1.0);
    }
    let val = |v: f64, up: bool| {
        if v == 0.0 {
            at0
        } else if up {
            hi_of(f, v)
        } else {
            lo_of(f, v)
        }
    };
    let mut lo = val(x.lo, false).min(val(x.hi, false));
    let mut hi = val(x.lo, true).max(val(x.hi, true));
    if may_contain_quarter_turn(x, max_at) {
        hi = 1.0;
    }
    if may_contain_quarter_turn(x, (max_at + 2) % 4) {
        lo = -1.0;
    }
    Interval::fix(lo.max(-1.0), hi.min(1.0))
}

impl Interval {
    pub fn exp(&self) -> Interval {
        let r = increasing(self, f64::exp, 1.0);
        Interval::fix(r.lo.max(0.0), r.hi)
    }

    pub fn log(&self) -> IResult {
        if !(self.lo > 0.0) {
            return Err(IntervalError::Domain("log"));
        }
        let f = |v: f64, up: bool| {
            if v == 1.0 {
                0.0
            } else if up {
                hi_of(f64::ln, v)
            } else {
                lo_of(f64::ln, v)
            }
        };
        Ok(Interval::fix(f(self.lo, false), f(self.hi, true)))
    }

    pub fn sqrt(&self) -> IResult {
        if !(self.lo >= 0.0) {
            return Err(IntervalError::Domain("sqrt"));
        }
        Ok(Interval::fix(sqrt_down(self.lo), sqrt_up(self.hi)))
    }

    pub fn sin(&self) -> Interval {
        periodic(self, f64::sin, 1, 0.0)
    }

    pub fn cos(&self) -> Interval {
        periodic(self, f64::cos, 0, 1.0)
    }

    pub fn sinh(&self) -> Interval {
        increasing(self, f64::sinh, 0.0)
    }

    pub fn tanh(&self) -> Interval {
        let r = increasing(self, f64::tanh, 0.0);
        Interval::fix(r.lo.max(-1.0), r.hi.min(1.0))
    }

    pub fn cosh(&self) -> Interval {
        let a = self.abs();
        let r = increasing(&a, f64::cosh, 1.0);
        Interval::fix(r.lo.max(1.0), r.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b)
    }

    #[test]
    fn examples() {
        let c = iv(0.0, Interval::HALF_PI.hi()).cos();
        assert!(iv(0.0, 1.0).subset_of(&c));
        assert!(c.subset_of(&iv(-1e-15, 1.0 + 1e-15)));
        assert!(iv(0.0, PI).sin().hi() >= 1.0);
        assert_eq!(Interval::ZERO.exp(), Interval::ONE);
        assert_eq!(Interval::ONE.log().unwrap(), Interval::ZERO);
        assert_eq!(Interval::ZERO.sin(), Interval::ZERO);
        assert!(iv(-1.0, 1.0).log().is_err());
        assert!(iv(-1.0, 1.0).sqrt().is_err());
    }

    #[test]
    fn extrema_are_captured() {
        assert_eq!(iv(3.0, 3.5).cos().lo(), -1.0);
        assert_eq!(iv(-2.0, -1.0).sin().lo(), -1.0);
        assert_eq!(iv(6.0, 6.5).cos().hi(), 1.0);
        assert!(iv(0.1, 0.2).cos().hi() < 1.0);
        assert_eq!(iv(-0.5, 0.5).cosh().lo(), 1.0);
        assert_eq!(iv(-10.0, 10.0).sin(), iv(-1.0, 1.0));
    }
}
