//! Exact even power series built from Bernoulli numbers.
//!
//! Every stored series is analytic and even: the `1/x` and `1/x^2` poles of
//! `cot`, `coth`, `1/sin^2` and `1/sinh^2` are factored out, so
//! `xcot(x) = x cot x`, `inv_sin2(x) = x^2 / sin^2 x` and so on. Coefficients
//! are exact rationals; truncation tails are bounded through the classical
//! identity `|B_2n| = 2 (2n)! zeta(2n) / (2 pi)^2n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::SeriesError;

/// Exact rational number used for Bernoulli numbers and series coefficients.
pub type Rational = BigRational;

/// Largest `n` accepted by [`bernoulli_even`] by default.
pub const BERNOULLI_MAX: usize = 64;

/// Default number of non-constant terms kept in interval evaluation.
pub const DEFAULT_TERMS: usize = 30;

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Bernoulli numbers `B_0..=B_m` by the Akiyama–Tanigawa transform
/// (convention `B_1 = +1/2`, irrelevant here since only even indices are used).
fn bernoulli_table(m: usize) -> Vec<Rational> {
    let mut a: Vec<Rational> = Vec::with_capacity(m + 1);
    let mut out = Vec::with_capacity(m + 1);
    for k in 0..=m {
        a.push(Rational::new(BigInt::one(), BigInt::from(k + 1)));
        for j in (1..=k).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = diff * Rational::from_integer(BigInt::from(j));
        }
        out.push(a[0].clone());
    }
    out
}

/// Exact even-indexed Bernoulli number `B_2n` for `1 <= n <= BERNOULLI_MAX`.
pub fn bernoulli_even(n: usize) -> Result<Rational, SeriesError> {
    bernoulli_even_upto(n, BERNOULLI_MAX)
}

/// As [`bernoulli_even`] with an explicit upper limit on `n`.
pub fn bernoulli_even_upto(n: usize, n_max: usize) -> Result<Rational, SeriesError> {
    if n == 0 || n > n_max {
        return Err(SeriesError::BernoulliRange { n, max: n_max });
    }
    let mut cache = bernoulli_cache().lock().expect("bernoulli cache poisoned");
    if cache.len() <= 2 * n {
        *cache = bernoulli_table(2 * n.max(16).next_power_of_two());
    }
    Ok(cache[2 * n].clone())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// Names of the stored series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesName {
    /// `x cot x`
    Xcot,
    /// `x cot x` again, the pole-factored form of `cot x`
    CotAux,
    /// `x coth x`
    XcothAux,
    /// `x^2 / sin^2 x`
    InvSin2,
    /// `x^2 / sinh^2 x`
    InvSinh2,
    /// `x / sin x`
    Xcsc,
    /// `sin x / x`
    Sinc,
    /// `sinh x / x`
    Sinhc,
}

impl SeriesName {
    pub const ALL: [SeriesName; 8] = [
        SeriesName::Xcot,
        SeriesName::CotAux,
        SeriesName::XcothAux,
        SeriesName::InvSin2,
        SeriesName::InvSinh2,
        SeriesName::Xcsc,
        SeriesName::Sinc,
        SeriesName::Sinhc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesName::Xcot => "xcot",
            SeriesName::CotAux => "cot_aux",
            SeriesName::XcothAux => "xcoth_aux",
            SeriesName::InvSin2 => "inv_sin2",
            SeriesName::InvSinh2 => "inv_sinh2",
            SeriesName::Xcsc => "xcsc",
            SeriesName::Sinc => "sinc",
            SeriesName::Sinhc => "sinhc",
        }
    }

    /// Radius of convergence in `x`.
    pub fn radius(self) -> f64 {
        match self {
            SeriesName::Sinc | SeriesName::Sinhc => f64::INFINITY,
            _ => std::f64::consts::PI,
        }
    }

    fn majorant(self) -> Majorant {
        match self {
            SeriesName::Xcot | SeriesName::CotAux | SeriesName::XcothAux | SeriesName::Xcsc => {
                Majorant::Zeta { linear: false }
            }
            SeriesName::InvSin2 | SeriesName::InvSinh2 => Majorant::Zeta { linear: true },
            SeriesName::Sinc | SeriesName::Sinhc => Majorant::Factorial,
        }
    }

    /// Exact coefficient of `x^2n`, `n >= 0`.
    pub fn coefficient(self, n: usize) -> Result<Rational, SeriesError> {
        if n == 0 {
            return Ok(Rational::one());
        }
        let r = |num: BigInt, den: BigInt| Rational::new(num, den);
        Ok(match self {
            SeriesName::Sinc | SeriesName::Sinhc => {
                let sign = if self == SeriesName::Sinc && n % 2 == 1 { -1 } else { 1 };
                r(BigInt::from(sign), factorial(2 * n + 1))
            }
            _ => {
                let b = bernoulli_even_upto(n, usize::MAX)?;
                let base = Rational::from_integer(pow2(2 * n)) / Rational::from_integer(factorial(2 * n));
                let odd = Rational::from_integer(BigInt::from(2 * n - 1));
                match self {
                    SeriesName::Xcot | SeriesName::CotAux => -(base * b.abs()),
                    SeriesName::XcothAux => base * b,
                    SeriesName::InvSin2 => odd * base * b.abs(),
                    SeriesName::InvSinh2 => -(odd * base * b),
                    SeriesName::Xcsc => {
                        let num = Rational::from_integer(pow2(2 * n) - BigInt::from(2));
                        num * b.abs() / Rational::from_integer(factorial(2 * n))
                    }
                    SeriesName::Sinc | SeriesName::Sinhc => unreachable!(),
                }
            }
        })
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesName {
    type Err = SeriesError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| SeriesError::UnknownSeries(s.to_string()))
    }
}

/// Shape of the coefficient majorant `|c_n| <= K P(n) / rho^2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Majorant {
    /// `|c_n| <= 2 zeta(2) (2n-1)^linear / pi^2n`
    Zeta { linear: bool },
    /// `|c_n| <= 1 / (2n+1)!`
    Factorial,
}

/// `2 zeta(2) = pi^2/3`, rounded up.
const ZETA_K: f64 = 3.2898681336964533;

/// Upper bound on `|c_n| * C(2n, j) * r^(2n-j)` for the given majorant.
fn majorant_term(m: Majorant, n: usize, j: usize, r: f64) -> f64 {
    let two_n = 2 * n;
    if two_n < j {
        return 0.0;
    }
    let ln_binom = ln_binomial(two_n, j);
    let ln_r = (two_n - j) as f64 * r.ln();
    let ln_c = match m {
        Majorant::Zeta { linear } => {
            let lin = if linear { ((two_n - 1) as f64).ln() } else { 0.0 };
            ZETA_K.ln() + lin - two_n as f64 * std::f64::consts::PI.ln()
        }
        Majorant::Factorial => -ln_factorial(two_n + 1),
    };
    (ln_c + ln_binom + ln_r).exp()
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// Bound on `sum_{n > terms} |c_n| C(2n, j) r^(2n-j)`: the tail of the
/// `j`-th Taylor coefficient (`f^(j)/j!`) of the series after `terms` terms.
pub(crate) fn derivative_tail(name: SeriesName, terms: usize, j: usize, r: f64) -> f64 {
    if r == 0.0 && 2 * (terms + 1) > j {
        return 0.0;
    }
    let m = name.majorant();
    let mut sum = 0.0;
    let mut n = terms + 1;
    loop {
        let t = majorant_term(m, n, j, r);
        let next = majorant_term(m, n + 1, j, r);
        sum += t;
        if t > 0.0 {
            let ratio = next / t;
            // Term ratios are non-increasing in n for every majorant used here.
            if ratio < 0.9 && next <= sum * 1e-18 {
                sum += next / (1.0 - ratio);
                break;
            }
        }
        n += 1;
        if n > terms + 100_000 {
            return f64::INFINITY;
        }
    }
    sum * (1.0 + 1e-9)
}

/// Radius at which [`primitive_tail`] tabulates derivative tails.
const TAIL_TABLE_R: f64 = 0.75;

/// Tail of the `j`-th Taylor coefficient after [`DEFAULT_TERMS`] terms, for
/// any `r`; cheap when `r <= 0.75` since every tail term scales at least like
/// `(r / 0.75)^(2N + 2 - j)`.
pub(crate) fn primitive_tail(name: SeriesName, j: usize, r: f64) -> f64 {
    type Table = RwLock<HashMap<(SeriesName, usize), f64>>;
    static TABLE: OnceLock<Table> = OnceLock::new();
    let lowest = 2 * (DEFAULT_TERMS + 1);
    if r > TAIL_TABLE_R || j >= lowest {
        return derivative_tail(name, DEFAULT_TERMS, j, r);
    }
    if r == 0.0 {
        return 0.0;
    }
    let table = TABLE.get_or_init(|| RwLock::new(HashMap::new()));
    let cached = table.read().expect("tail table").get(&(name, j)).copied();
    let t = match cached {
        Some(t) => t,
        None => {
            let t = derivative_tail(name, DEFAULT_TERMS, j, TAIL_TABLE_R);
            table.write().expect("tail table").insert((name, j), t);
            t
        }
    };
    t * (r / TAIL_TABLE_R).powi((lowest - j) as i32) * (1.0 + 1e-9)
}

/// An even series `constant + sum_{n=1..N} coeffs[n-1] x^2n` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenSeries {
    pub name: SeriesName,
    pub constant_term: Rational,
    pub coeffs: Vec<Rational>,
    pub radius: f64,
}

/// Builds the first `terms` non-constant coefficients of `name`.
pub fn series(name: SeriesName, terms: usize) -> Result<EvenSeries, SeriesError> {
    if terms == 0 {
        return Err(SeriesError::NoTerms);
    }
    let coeffs = (1..=terms)
        .map(|n| name.coefficient(n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EvenSeries {
        name,
        constant_term: name.coefficient(0)?,
        coeffs,
        radius: name.radius(),
    })
}

impl EvenSeries {
    pub fn terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Partial sum with the first `n` non-constant terms, in `f64`.
    pub fn partial_sum_f64(&self, n: usize, x: f64) -> f64 {
        let y = x * x;
        let mut acc = 0.0;
        for c in self.coeffs[..n.min(self.coeffs.len())].iter().rev() {
            acc = acc * y + rational_to_f64(c);
        }
        acc * y + rational_to_f64(&self.constant_term)
    }
}

/// Bound on `|f(x) - partial sum with n terms|` for all `|x| <= r`.
pub fn tail_bound(s: &EvenSeries, n: usize, r: f64) -> Result<f64, SeriesError> {
    if !(r >= 0.0) || r >= s.radius {
        return Err(SeriesError::OutsideRadius { r, radius: s.radius });
    }
    Ok(derivative_tail(s.name, n, 0, r))
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Classification of a finite coefficient-ratio sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    /// Every ratio equal; only reported in non-strict mode.
    Constant,
    Neither,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioReport {
    pub class: Monotonicity,
    /// 1-based index `n` of the first `d_n` that breaks the trend set by earlier terms.
    pub first_violation: Option<usize>,
    pub ratios: Vec<Rational>,
}

/// Classifies `d_n = a_n / c_n`, `n = 1..=count`, by exact comparison.
///
/// Requires `c_n > 0` for every `n`, the hypothesis under which a monotone
/// coefficient ratio transfers to the ratio of the power series.
pub fn ratio_monotone(
    a: &[Rational],
    c: &[Rational],
    count: usize,
    strict: bool,
) -> Result<RatioReport, SeriesError> {
    if a.len() < count || c.len() < count {
        return Err(SeriesError::TooShort { need: count, have: a.len().min(c.len()) });
    }
    if let Some(i) = c[..count].iter().position(|x| !x.is_positive()) {
        return Err(SeriesError::NonPositiveDenominator { index: i + 1 });
    }
    let ratios: Vec<Rational> = a[..count].iter().zip(&c[..count]).map(|(x, y)| x / y).collect();
    let mut trend = None;
    let mut violation = None;
    for (i, w) in ratios.windows(2).enumerate() {
        match (w[1].cmp(&w[0]), trend) {
            (Ordering::Equal, _) if strict => violation = Some(i + 2),
            (Ordering::Equal, _) => {}
            (ord, None) => trend = Some(ord),
            (ord, Some(t)) if ord != t => violation = Some(i + 2),
            _ => {}
        }
        if violation.is_some() {
            break;
        }
    }
    let class = match (violation, trend) {
        (Some(_), _) => Monotonicity::Neither,
        (None, Some(Ordering::Greater)) => Monotonicity::Increasing,
        (None, Some(_)) => Monotonicity::Decreasing,
        (None, None) => Monotonicity::Constant,
    };
    Ok(RatioReport { class, first_violation: violation, ratios })
}

/// Coefficients `a_n = 2^2n 2n |B_2n| / (2n)!` and `c_n = 2^2n |B_2n| / (2n)!`
/// of `(x/sin x)^2 - x cot x` and `1 - x cot x`.
pub fn f1_ratio_coefficients(count: usize) -> Result<(Vec<Rational>, Vec<Rational>), SeriesError> {
    let mut a = Vec::with_capacity(count);
    let mut c = Vec::with_capacity(count);
    for n in 1..=count {
        let cn = -SeriesName::Xcot.coefficient(n)?;
        a.push(&cn * Rational::from_integer(BigInt::from(2 * n)));
        c.push(cn);
    }
    Ok((a, c))
}

/// Coefficients `2 (2^2n - 1) |B_2n| / (2n)!` and `(2^2n - 2) |B_2n| / (2n)!`
/// of `sin x / x - x cot x` and `x / sin x - 1`.
pub fn cusa_ratio_coefficients(count: usize) -> Result<(Vec<Rational>, Vec<Rational>), SeriesError> {
    let mut a = Vec::with_capacity(count);
    let mut c = Vec::with_capacity(count);
    for n in 1..=count {
        let xcsc = SeriesName::Xcsc.coefficient(n)?;
        let xcot = SeriesName::Xcot.coefficient(n)?;
        a.push(&xcsc - &xcot);
        c.push(xcsc);
    }
    Ok((a, c))
}

/// Formats a rational as `num/den` (or `num` when integral).
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent oracle: `sum_{k=0}^{m} C(m+1,k) B_k = 0` with `B_1 = -1/2`.
    fn bernoulli_by_recurrence(m: usize) -> Vec<Rational> {
        let mut b = vec![Rational::one()];
        for n in 1..=m {
            let mut s = Rational::zero();
            let mut binom = BigInt::one();
            for (k, bk) in b.iter().enumerate() {
                s += Rational::from_integer(binom.clone()) * bk;
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-s / Rational::from_integer(BigInt::from(n + 1)));
        }
        b
    }

    /// Truncated power series (dense, by degree) with exact coefficients.
    fn taylor(f: impl Fn(usize) -> Option<Rational>, deg: usize) -> Vec<Rational> {
        (0..=deg).map(|k| f(k).unwrap_or_else(Rational::zero)).collect()
    }

    fn fact(n: usize) -> Rational {
        Rational::from_integer(factorial(n))
    }

    fn ps_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        (0..a.len())
            .map(|k| (0..=k).map(|j| &a[j] * &b[k - j]).sum())
            .collect()
    }

    fn ps_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut q: Vec<Rational> = Vec::with_capacity(a.len());
        for k in 0..a.len() {
            let s: Rational = (0..k).map(|j| &q[j] * &b[k - j]).sum();
            q.push((&a[k] - s) / &b[0]);
        }
        q
    }

    /// Symbolic Taylor expansion of each target function, independent of
    /// Bernoulli numbers.
    fn taylor_oracle(name: SeriesName, deg: usize) -> Vec<Rational> {
        let sign = |m: usize, alt: bool| if alt && m % 2 == 1 { -Rational::one() } else { Rational::one() };
        let sinc = |alt: bool| taylor(|k| (k % 2 == 0).then(|| sign(k / 2, alt) / fact(k + 1)), deg);
        let cos = |alt: bool| taylor(|k| (k % 2 == 0).then(|| sign(k / 2, alt) / fact(k)), deg);
        let one = taylor(|k| (k == 0).then(Rational::one), deg);
        match name {
            SeriesName::Xcot | SeriesName::CotAux => ps_div(&cos(true), &sinc(true)),
            SeriesName::XcothAux => ps_div(&cos(false), &sinc(false)),
            SeriesName::InvSin2 => ps_div(&one, &ps_mul(&sinc(true), &sinc(true))),
            SeriesName::InvSinh2 => ps_div(&one, &ps_mul(&sinc(false), &sinc(false))),
            SeriesName::Xcsc => ps_div(&one, &sinc(true)),
            SeriesName::Sinc => sinc(true),
            SeriesName::Sinhc => sinc(false),
        }
    }

    #[test]
    fn coefficients_match_taylor_oracle() {
        let n = 24;
        for name in SeriesName::ALL {
            let s = series(name, n).unwrap();
            let t = taylor_oracle(name, 2 * n);
            assert_eq!(s.constant_term, t[0], "{name}");
            for k in 1..=n {
                assert_eq!(s.coeffs[k - 1], t[2 * k], "{name} n={k}");
                assert!(t[2 * k - 1].is_zero());
            }
        }
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_even(1).unwrap(), q(1, 6));
        assert_eq!(bernoulli_even(2).unwrap(), q(-1, 30));
        assert_eq!(bernoulli_even(6).unwrap(), q(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_recurrence() {
        let oracle = bernoulli_by_recurrence(2 * BERNOULLI_MAX);
        for n in 1..=BERNOULLI_MAX {
            assert_eq!(bernoulli_even(n).unwrap(), oracle[2 * n], "B_{}", 2 * n);
        }
    }

    #[test]
    fn bernoulli_range() {
        assert!(bernoulli_even(0).is_err());
        assert!(bernoulli_even(BERNOULLI_MAX + 1).is_err());
    }

    #[test]
    fn series_examples() {
        let s = series(SeriesName::Xcot, 2).unwrap();
        assert_eq!(s.constant_term, q(1, 1));
        assert_eq!(s.coeffs, vec![q(-1, 3), q(-1, 45)]);
        let s = series(SeriesName::Xcsc, 2).unwrap();
        assert_eq!(s.coeffs, vec![q(1, 6), q(7, 360)]);
        let s = series(SeriesName::InvSin2, 1).unwrap();
        assert_eq!(s.coeffs, vec![q(1, 3)]);
        assert!("tan".parse::<SeriesName>().is_err());
        assert!(series(SeriesName::Xcot, 0).is_err());
    }

    #[test]
    fn coefficient_signs() {
        let n = 20;
        for k in 0..n {
            assert!(series(SeriesName::Xcot, n).unwrap().coeffs[k].is_negative());
            assert!(series(SeriesName::InvSin2, n).unwrap().coeffs[k].is_positive());
            assert!(series(SeriesName::Xcsc, n).unwrap().coeffs[k].is_positive());
            // Hyperbolic series alternate, starting positive for x coth x.
            let h = &series(SeriesName::XcothAux, n).unwrap().coeffs[k];
            assert_eq!(h.is_positive(), k % 2 == 0);
            let g = &series(SeriesName::InvSinh2, n).unwrap().coeffs[k];
            assert_eq!(g.is_negative(), k % 2 == 0);
        }
    }

    #[test]
    fn tail_bounds() {
        let s = series(SeriesName::Xcot, 60).unwrap();
        assert!(tail_bound(&s, 60, 1.0).unwrap() < 1e-40);
        let half_pi = std::f64::consts::FRAC_PI_2;
        let s8 = series(SeriesName::Xcot, 8).unwrap();
        let t = tail_bound(&s8, 8, half_pi).unwrap();
        assert!(s8.partial_sum_f64(8, half_pi).abs() <= t);
        let c8 = series(SeriesName::Xcsc, 8).unwrap();
        let t = tail_bound(&c8, 8, half_pi).unwrap();
        assert!((c8.partial_sum_f64(8, half_pi) - half_pi).abs() <= t);
        assert!(tail_bound(&s8, 8, 3.5).is_err());
        // Monotone in N.
        let mut last = f64::INFINITY;
        for n in 1..30 {
            let t = tail_bound(&s, n, half_pi).unwrap();
            assert!(t <= last);
            last = t;
        }
    }

    #[test]
    fn default_terms_tail_below_target() {
        for name in SeriesName::ALL {
            let s = series(name, DEFAULT_TERMS).unwrap();
            let t = tail_bound(&s, DEFAULT_TERMS, std::f64::consts::FRAC_PI_2).unwrap();
            assert!(t < 1e-14, "{name}: {t}");
        }
    }

    #[test]
    fn tail_bound_dominates_next_term() {
        // |S_{N+1} - S_N| = |c_{N+1}| r^{2N+2} must not exceed the bound.
        let r: f64 = 1.4;
        for name in SeriesName::ALL {
            let s = series(name, 20).unwrap();
            for n in 1..19 {
                let next = rational_to_f64(&s.coeffs[n]).abs() * r.powi(2 * n as i32 + 2);
                assert!(next <= tail_bound(&s, n, r).unwrap(), "{name} n={n}");
            }
        }
    }

    #[test]
    fn scaled_tail_dominates_direct() {
        for name in SeriesName::ALL {
            for j in [0, 1, 2, 5, 9] {
                for r in [0.01, 0.3, 0.7, 0.75] {
                    let direct = derivative_tail(name, DEFAULT_TERMS, j, r);
                    assert!(primitive_tail(name, j, r) >= direct, "{name} j={j} r={r}");
                }
            }
        }
    }

    #[test]
    fn ratio_examples() {
        let (a, c) = f1_ratio_coefficients(50).unwrap();
        let rep = ratio_monotone(&a, &c, 50, true).unwrap();
        assert_eq!(rep.class, Monotonicity::Increasing);
        for (n, d) in rep.ratios.iter().enumerate() {
            assert_eq!(*d, q(2 * (n as i64 + 1), 1));
        }
        let (a, c) = cusa_ratio_coefficients(50).unwrap();
        let rep = ratio_monotone(&a, &c, 50, true).unwrap();
        assert_eq!(rep.class, Monotonicity::Decreasing);
        assert_eq!(rep.ratios[0], q(3, 1));
        assert_eq!(rep.ratios[1], q(15, 7));

        let same = series(SeriesName::Xcsc, 10).unwrap().coeffs;
        let rep = ratio_monotone(&same, &same, 10, true).unwrap();
        assert_eq!(rep.class, Monotonicity::Neither);
        let rep = ratio_monotone(&same, &same, 10, false).unwrap();
        assert_eq!(rep.class, Monotonicity::Constant);
    }

    #[test]
    fn ratio_rejects_nonpositive_denominators() {
        let a = vec![q(1, 1), q(2, 1)];
        let c = vec![q(1, 1), q(-1, 1)];
        assert!(matches!(
            ratio_monotone(&a, &c, 2, true),
            Err(SeriesError::NonPositiveDenominator { index: 2 })
        ));
    }

    #[test]
    fn ratio_violation_index() {
        let a = vec![q(1, 1), q(2, 1), q(3, 1), q(1, 1)];
        let c = vec![q(1, 1); 4];
        let rep = ratio_monotone(&a, &c, 4, true).unwrap();
        assert_eq!(rep.class, Monotonicity::Neither);
        assert_eq!(rep.first_violation, Some(4));
    }
}
