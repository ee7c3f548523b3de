//! Directed rounding for `f64` without touching the FPU rounding mode.
//!
//! Sums use TwoSum and products, quotients and square roots use an FMA
//! residual to decide on which side of the exact result the rounded-to-nearest
//! value lies; only then is it nudged by one ulp. Near the underflow threshold
//! residuals stop being exact, so the value is nudged blindly.

const TINY: f64 = 1.0e-290;

#[inline]
fn blind_down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn blind_up(x: f64) -> f64 {
    x.next_up()
}

/// Lower bound for an overflowed result: the largest finite value is a valid
/// lower bound when the exact value exceeds it.
#[inline]
fn overflow_down(x: f64) -> f64 {
    if x == f64::INFINITY {
        f64::MAX
    } else {
        x
    }
}

#[inline]
fn overflow_up(x: f64) -> f64 {
    if x == f64::NEG_INFINITY {
        f64::MIN
    } else {
        x
    }
}

/// Error of `a + b` relative to `s = fl(a + b)`: exact sum is `s + err`.
#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

pub fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return if a.is_finite() && b.is_finite() { overflow_down(s) } else { s };
    }
    if two_sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

pub fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return if a.is_finite() && b.is_finite() { overflow_up(s) } else { s };
    }
    if two_sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

pub fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

/// Sign of `exact - p` for `p = fl(a * b)`, or `None` when the residual is unreliable.
#[inline]
fn mul_residual(a: f64, b: f64, p: f64) -> Option<f64> {
    if p.abs() < TINY {
        return None;
    }
    Some(a.mul_add(b, -p))
}

pub fn mul_down(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        return if a.is_finite() && b.is_finite() { 0.0 } else { f64::NAN };
    }
    let p = a * b;
    if !p.is_finite() {
        return if a.is_finite() && b.is_finite() { overflow_down(p) } else { p };
    }
    match mul_residual(a, b, p) {
        Some(r) if r >= 0.0 => p,
        Some(_) => p.next_down(),
        None => blind_down(p),
    }
}

pub fn mul_up(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        return if a.is_finite() && b.is_finite() { 0.0 } else { f64::NAN };
    }
    let p = a * b;
    if !p.is_finite() {
        return if a.is_finite() && b.is_finite() { overflow_up(p) } else { p };
    }
    match mul_residual(a, b, p) {
        Some(r) if r <= 0.0 => p,
        Some(_) => p.next_up(),
        None => blind_up(p),
    }
}

/// Sign of `a/b - q` via the exact residual `a - q b`.
#[inline]
fn div_side(a: f64, b: f64, q: f64) -> Option<f64> {
    if q.abs() < TINY || a.abs() < TINY {
        return None;
    }
    let r = (-q).mul_add(b, a);
    Some(if b > 0.0 { r } else { -r })
}

pub fn div_down(a: f64, b: f64) -> f64 {
    if a == 0.0 && b != 0.0 {
        return 0.0;
    }
    let q = a / b;
    if !q.is_finite() {
        return if a.is_finite() && b.is_finite() && b != 0.0 { overflow_down(q) } else { q };
    }
    if b.is_infinite() {
        return q;
    }
    match div_side(a, b, q) {
        Some(s) if s >= 0.0 => q,
        Some(_) => q.next_down(),
        None => blind_down(q),
    }
}

pub fn div_up(a: f64, b: f64) -> f64 {
    if a == 0.0 && b != 0.0 {
        return 0.0;
    }
    let q = a / b;
    if !q.is_finite() {
        return if a.is_finite() && b.is_finite() && b != 0.0 { overflow_up(q) } else { q };
    }
    if b.is_infinite() {
        return q;
    }
    match div_side(a, b, q) {
        Some(s) if s <= 0.0 => q,
        Some(_) => q.next_up(),
        None => blind_up(q),
    }
}

pub fn sqrt_down(a: f64) -> f64 {
    let s = a.sqrt();
    if s == 0.0 || !s.is_finite() || a < TINY {
        return if s == 0.0 { 0.0 } else if s.is_finite() { blind_down(s).max(0.0) } else { s };
    }
    if (-s).mul_add(s, a) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

pub fn sqrt_up(a: f64) -> f64 {
    let s = a.sqrt();
    if s == 0.0 || !s.is_finite() || a < TINY {
        return if s.is_finite() { blind_up(s) } else { s };
    }
    if (-s).mul_add(s, a) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

/// `n` ulps below `x`.
pub fn ulps_down(mut x: f64, n: u32) -> f64 {
    for _ in 0..n {
        x = x.next_down();
    }
    x
}

/// `n` ulps above `x`.
pub fn ulps_up(mut x: f64, n: u32) -> f64 {
    for _ in 0..n {
        x = x.next_up();
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn exact(x: f64) -> BigRational {
        BigRational::from_float(x).unwrap()
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![
            -1e6f64..1e6,
            any::<f64>().prop_filter("finite", |x| x.is_finite() && x.abs() < 1e150 && x.abs() > 1e-150),
            Just(0.1),
            Just(1.0 / 3.0),
        ]
    }

    proptest! {
        #[test]
        fn add_brackets_exact(a in finite(), b in finite()) {
            let e = exact(a) + exact(b);
            prop_assert!(exact(add_down(a, b)) <= e && e <= exact(add_up(a, b)));
        }

        #[test]
        fn mul_brackets_exact(a in finite(), b in finite()) {
            let e = exact(a) * exact(b);
            prop_assert!(exact(mul_down(a, b)) <= e && e <= exact(mul_up(a, b)));
        }

        #[test]
        fn div_brackets_exact(a in finite(), b in finite()) {
            prop_assume!(b != 0.0);
            let e = exact(a) / exact(b);
            prop_assert!(exact(div_down(a, b)) <= e && e <= exact(div_up(a, b)));
        }

        #[test]
        fn sqrt_brackets_exact(a in 0.0f64..1e12) {
            let lo = exact(sqrt_down(a));
            let hi = exact(sqrt_up(a));
            let e = exact(a);
            prop_assert!(&lo * &lo <= e && e <= &hi * &hi);
        }
    }

    #[test]
    fn exact_cases_are_not_nudged() {
        assert_eq!(add_down(1.0, 2.0), 3.0);
        assert_eq!(add_up(1.0, 2.0), 3.0);
        assert_eq!(mul_down(3.0, 4.0), 12.0);
        assert_eq!(div_up(1.0, 4.0), 0.25);
        assert_eq!(sqrt_down(4.0), 2.0);
        assert!(div_down(1.0, 3.0) < div_up(1.0, 3.0));
    }
}
