//! Number types that expressions and jets can be evaluated over.
//!
//! [`Interval`] gives rigorous enclosures, [`Hp`](crate::hp::Hp) gives
//! high-precision point values and `f64` gives fast approximate values for
//! dense scans.

use std::cell::Cell;
use std::collections::HashMap;
use std::fmt::Debug;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::IntervalError;
use crate::expr::NamedConst;
use crate::interval::Interval;
use crate::series::{Rational, SeriesName, DEFAULT_TERMS};

pub type SResult<S> = Result<S, IntervalError>;

/// Default `|x|` below which primitives use their power series.
pub const DEFAULT_CROSSOVER: f64 = 0.7;

thread_local! {
    static CROSSOVER: Cell<f64> = const { Cell::new(DEFAULT_CROSSOVER) };
}

/// Current series/quotient crossover for primitives on this thread.
pub fn crossover() -> f64 {
    CROSSOVER.with(|c| c.get())
}

/// Runs `f` with a different primitive crossover on this thread.
pub fn with_crossover<R>(c: f64, f: impl FnOnce() -> R) -> R {
    let old = CROSSOVER.with(|cell| cell.replace(c));
    let out = f();
    CROSSOVER.with(|cell| cell.set(old));
    out
}

pub trait Scalar: Clone + Debug + Sized {
    fn from_rational(q: &Rational) -> Self;
    /// Exact conversion of a small integer.
    fn from_int(n: i64) -> Self;
    fn pi() -> Self;
    fn e() -> Self;

    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> SResult<Self>;

    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn sinh(&self) -> Self;
    fn cosh(&self) -> Self;
    fn tanh(&self) -> Self;
    fn exp(&self) -> Self;
    fn log(&self) -> SResult<Self>;
    fn sqrt(&self) -> SResult<Self>;
    fn abs(&self) -> Self;
    fn pow_int(&self, n: i32) -> SResult<Self>;

    fn is_exact_zero(&self) -> bool;
    fn contains_zero(&self) -> bool;
    /// Certainly `> 0`.
    fn is_positive(&self) -> bool;
    /// Certainly `< 0`.
    fn is_negative(&self) -> bool;
    /// Upper bound on `|x|`.
    fn mag(&self) -> f64;
    /// Adds `[-r, r]`; a no-op for point types.
    fn inflate(&self, r: f64) -> Self;
    /// Smallest value of this type containing both; point types keep `self`.
    fn hull(&self, o: &Self) -> Self;
    /// Pieces of `self` inside (`true`) and outside (`false`) `[-c, c]`.
    fn pieces(&self, c: f64) -> Vec<(Self, bool)>;
    fn to_f64(&self) -> f64;

    /// Runs `f` on the row `c_m * C(2m, j)`, `m = ceil(j/2)..=DEFAULT_TERMS`,
    /// converted to `Self`.
    fn with_series_row<R>(name: SeriesName, j: usize, f: impl FnOnce(&[Self]) -> R) -> R;

    /// Stored enclosure of a named constant, if this type uses one.
    fn from_named(_c: &NamedConst) -> Option<Self> {
        None
    }

    fn div_int(&self, k: i64) -> Self {
        self.div(&Self::from_int(k)).expect("nonzero integer")
    }
    fn mul_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }
}

/// Exact row `c_m * C(2m, j)` for `m = ceil(j/2)..=DEFAULT_TERMS`.
pub(crate) fn rational_row(name: SeriesName, j: usize) -> Vec<Rational> {
    let m0 = j.div_ceil(2);
    (m0..=DEFAULT_TERMS)
        .map(|m| {
            let c = name.coefficient(m).expect("coefficient");
            c * Rational::from_integer(binomial(2 * m, j))
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

type RowCache<T> = RwLock<HashMap<(SeriesName, usize), Arc<Vec<T>>>>;

fn cached_row<T: Clone>(
    cache: &'static OnceLock<RowCache<T>>,
    name: SeriesName,
    j: usize,
    conv: impl Fn(&Rational) -> T,
) -> Arc<Vec<T>> {
    let cache = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(row) = cache.read().expect("row cache").get(&(name, j)) {
        return row.clone();
    }
    let row = Arc::new(rational_row(name, j).iter().map(conv).collect::<Vec<_>>());
    cache.write().expect("row cache").insert((name, j), row.clone());
    row
}

impl Scalar for Interval {
    fn from_named(c: &NamedConst) -> Option<Self> {
        Some(c.enclosure)
    }
    fn from_rational(q: &Rational) -> Self {
        Interval::from_rational(q)
    }
    fn from_int(n: i64) -> Self {
        Interval::from_integer(n)
    }
    fn pi() -> Self {
        Interval::PI
    }
    fn e() -> Self {
        Interval::E
    }
    fn add(&self, o: &Self) -> Self {
        Interval::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Interval::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Interval::mul(self, o)
    }
    fn neg(&self) -> Self {
        Interval::neg(self)
    }
    fn div(&self, o: &Self) -> SResult<Self> {
        Interval::div(self, o)
    }
    fn sin(&self) -> Self {
        Interval::sin(self)
    }
    fn cos(&self) -> Self {
        Interval::cos(self)
    }
    fn sinh(&self) -> Self {
        Interval::sinh(self)
    }
    fn cosh(&self) -> Self {
        Interval::cosh(self)
    }
    fn tanh(&self) -> Self {
        Interval::tanh(self)
    }
    fn exp(&self) -> Self {
        Interval::exp(self)
    }
    fn log(&self) -> SResult<Self> {
        Interval::log(self)
    }
    fn sqrt(&self) -> SResult<Self> {
        Interval::sqrt(self)
    }
    fn abs(&self) -> Self {
        Interval::abs(self)
    }
    fn pow_int(&self, n: i32) -> SResult<Self> {
        Interval::pow_int(self, n)
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
    fn contains_zero(&self) -> bool {
        Interval::contains_zero(self)
    }
    fn is_positive(&self) -> bool {
        self.lo() > 0.0
    }
    fn is_negative(&self) -> bool {
        self.hi() < 0.0
    }
    fn mag(&self) -> f64 {
        Interval::mag(self)
    }
    fn inflate(&self, r: f64) -> Self {
        Interval::inflate(self, r)
    }
    fn hull(&self, o: &Self) -> Self {
        Interval::hull(self, o)
    }
    fn pieces(&self, c: f64) -> Vec<(Self, bool)> {
        let mut out = Vec::with_capacity(3);
        if self.lo() < -c {
            out.push((Interval::new(self.lo(), self.hi().min(-c)), false));
        }
        if let Some(mid) = self.intersect(&Interval::new(-c, c)) {
            out.push((mid, true));
        }
        if self.hi() > c {
            out.push((Interval::new(self.lo().max(c), self.hi()), false));
        }
        out
    }
    fn to_f64(&self) -> f64 {
        self.mid()
    }
    fn with_series_row<R>(name: SeriesName, j: usize, f: impl FnOnce(&[Self]) -> R) -> R {
        static CACHE: OnceLock<RowCache<Interval>> = OnceLock::new();
        f(&cached_row(&CACHE, name, j, Interval::from_rational))
    }
}

impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        crate::series::rational_to_f64(q)
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn e() -> Self {
        std::f64::consts::E
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> SResult<Self> {
        if *o == 0.0 {
            Err(IntervalError::Pole)
        } else {
            Ok(self / o)
        }
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn sinh(&self) -> Self {
        f64::sinh(*self)
    }
    fn cosh(&self) -> Self {
        f64::cosh(*self)
    }
    fn tanh(&self) -> Self {
        f64::tanh(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn log(&self) -> SResult<Self> {
        if *self > 0.0 {
            Ok(self.ln())
        } else {
            Err(IntervalError::Domain("log"))
        }
    }
    fn sqrt(&self) -> SResult<Self> {
        if *self >= 0.0 {
            Ok(f64::sqrt(*self))
        } else {
            Err(IntervalError::Domain("sqrt"))
        }
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn pow_int(&self, n: i32) -> SResult<Self> {
        if n < 0 && *self == 0.0 {
            return Err(IntervalError::Pole);
        }
        Ok(self.powi(n))
    }
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
    fn contains_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn mag(&self) -> f64 {
        f64::abs(*self)
    }
    fn inflate(&self, _r: f64) -> Self {
        *self
    }
    fn hull(&self, _o: &Self) -> Self {
        *self
    }
    fn pieces(&self, c: f64) -> Vec<(Self, bool)> {
        vec![(*self, f64::abs(*self) <= c)]
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn with_series_row<R>(name: SeriesName, j: usize, f: impl FnOnce(&[Self]) -> R) -> R {
        static CACHE: OnceLock<RowCache<f64>> = OnceLock::new();
        f(&cached_row(&CACHE, name, j, crate::series::rational_to_f64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pieces_cover_interval() {
        let x = Interval::new(-1.0, 2.0);
        let p = x.pieces(0.7);
        assert_eq!(p.len(), 3);
        assert_eq!(p[0].0, Interval::new(-1.0, -0.7));
        assert!(p[1].1);
        assert_eq!(p[2].0, Interval::new(0.7, 2.0));
        assert_eq!(Interval::new(0.1, 0.2).pieces(0.7).len(), 1);
    }

    #[test]
    fn rows() {
        // j = 0 row is the series itself, constant term first.
        let row = rational_row(SeriesName::Xcot, 0);
        assert_eq!(row.len(), DEFAULT_TERMS + 1);
        assert_eq!(row[1], Rational::new(BigInt::from(-1), BigInt::from(3)));
        // j = 1: c_m * 2m starting at m = 1.
        let row = rational_row(SeriesName::Xcot, 1);
        assert_eq!(row[0], Rational::new(BigInt::from(-2), BigInt::from(3)));
    }

    #[test]
    fn crossover_override_is_scoped() {
        assert_eq!(crossover(), DEFAULT_CROSSOVER);
        with_crossover(0.5, || assert_eq!(crossover(), 0.5));
        assert_eq!(crossover(), DEFAULT_CROSSOVER);
    }
}
