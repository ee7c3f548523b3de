//! Truncated Taylor series ("jets") in one variable.
//!
//! A jet of order `K` at `x` holds `f^(k)(x) / k!` for `k = 0..=K`. Over an
//! interval argument every coefficient encloses the corresponding value for
//! all points of the interval, which is what the certifier's Taylor bounds
//! rely on.

use crate::error::IntervalError;
use crate::scalar::{SResult, Scalar};

#[derive(Clone, Debug)]
pub struct Jet<S> {
    pub c: Vec<S>,
}

impl<S: Scalar> Jet<S> {
    pub fn constant(v: S, order: usize) -> Self {
        let mut c = vec![S::zero(); order + 1];
        c[0] = v;
        Jet { c }
    }

    /// The identity function expanded at `x`.
    pub fn variable(x: S, order: usize) -> Self {
        let mut j = Self::constant(x, order);
        if order >= 1 {
            j.c[1] = S::one();
        }
        j
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn value(&self) -> &S {
        &self.c[0]
    }

    /// Drops the first `j` coefficients: the jet of `(f(x) - T_{j-1}(x)) / x^j`
    /// when the lower coefficients vanish.
    pub fn shift(&self, j: usize) -> Self {
        Jet { c: self.c[j..].to_vec() }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Jet { c: self.c[..=order].to_vec() }
    }

    pub fn add(&self, o: &Self) -> Self {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        Jet { c: self.c.iter().map(S::neg).collect() }
    }

    pub fn scale(&self, k: &S) -> Self {
        Jet { c: self.c.iter().map(|a| a.mul(k)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.c.len().min(o.c.len());
        let c = (0..n)
            .map(|k| {
                let mut acc = self.c[0].mul(&o.c[k]);
                for i in 1..=k {
                    acc = acc.add(&self.c[i].mul(&o.c[k - i]));
                }
                acc
            })
            .collect();
        Jet { c }
    }

    pub fn div(&self, o: &Self) -> SResult<Self> {
        let v0 = &o.c[0];
        if v0.contains_zero() {
            return Err(IntervalError::Pole);
        }
        let n = self.c.len().min(o.c.len());
        let mut q: Vec<S> = Vec::with_capacity(n);
        for k in 0..n {
            let mut num = self.c[k].clone();
            for j in 0..k {
                num = num.sub(&q[j].mul(&o.c[k - j]));
            }
            q.push(num.div(v0)?);
        }
        Ok(Jet { c: q })
    }

    /// `(1/k) sum_{j=1..k} j u_j w_{k-j}`, the building block of the
    /// exponential-type recurrences.
    fn conv_deriv(&self, w: &[S], k: usize) -> S {
        let mut acc = S::zero();
        for j in 1..=k {
            acc = acc.add(&self.c[j].mul_int(j as i64).mul(&w[k - j]));
        }
        acc.div_int(k as i64)
    }

    pub fn exp(&self) -> Self {
        let mut e = vec![self.c[0].exp()];
        for k in 1..self.c.len() {
            let v = self.conv_deriv(&e, k);
            e.push(v);
        }
        Jet { c: e }
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        self.trig_pair(true)
    }

    pub fn sinh_cosh(&self) -> (Self, Self) {
        self.trig_pair(false)
    }

    fn trig_pair(&self, circular: bool) -> (Self, Self) {
        let u0 = &self.c[0];
        let (mut s, mut c) = if circular { (vec![u0.sin()], vec![u0.cos()]) } else { (vec![u0.sinh()], vec![u0.cosh()]) };
        for k in 1..self.c.len() {
            let sk = self.conv_deriv(&c, k);
            let ck = self.conv_deriv(&s, k);
            s.push(sk);
            c.push(if circular { ck.neg() } else { ck });
        }
        (Jet { c: s }, Jet { c })
    }

    pub fn tanh(&self) -> Self {
        let (s, c) = self.sinh_cosh();
        let mut t = s.div(&c).expect("cosh >= 1");
        t.c[0] = self.c[0].tanh();
        t
    }

    pub fn log(&self) -> SResult<Self> {
        let u0 = &self.c[0];
        let mut l = vec![u0.log()?];
        for k in 1..self.c.len() {
            let mut acc = S::zero();
            for j in 1..k {
                acc = acc.add(&l[j].mul_int(j as i64).mul(&self.c[k - j]));
            }
            let v = self.c[k].sub(&acc.div_int(k as i64)).div(u0)?;
            l.push(v);
        }
        Ok(Jet { c: l })
    }

    pub fn sqrt(&self) -> SResult<Self> {
        let r0 = self.c[0].sqrt()?;
        if self.c.len() > 1 && r0.contains_zero() {
            return Err(IntervalError::NotDifferentiable("sqrt"));
        }
        let two_r0 = r0.mul_int(2);
        let mut r = vec![r0];
        for k in 1..self.c.len() {
            let mut acc = self.c[k].clone();
            for j in 1..k {
                acc = acc.sub(&r[j].mul(&r[k - j]));
            }
            r.push(acc.div(&two_r0)?);
        }
        Ok(Jet { c: r })
    }

    pub fn pow_int(&self, n: i32) -> SResult<Self> {
        let order = self.order();
        let v0 = self.c[0].pow_int(n)?;
        if order == 0 {
            return Ok(Jet { c: vec![v0] });
        }
        let mut out = if n == 0 {
            Jet::constant(S::one(), order)
        } else {
            let mut base = self.clone();
            let mut acc = Jet::constant(S::one(), order);
            let mut e = n.unsigned_abs();
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul(&base);
                }
                e >>= 1;
                if e > 0 {
                    base = base.mul(&base);
                }
            }
            if n < 0 {
                Jet::constant(S::one(), order).div(&acc)?
            } else {
                acc
            }
        };
        out.c[0] = v0;
        Ok(out)
    }

    /// `u^p = exp(p log u)` for `u > 0`.
    pub fn pow_const(&self, p: &S) -> SResult<Self> {
        if !self.c[0].is_positive() {
            return Err(IntervalError::Domain("pow"));
        }
        Ok(self.log()?.scale(p).exp())
    }

    pub fn abs(&self) -> SResult<Self> {
        let u0 = &self.c[0];
        if u0.is_positive() {
            Ok(self.clone())
        } else if u0.is_negative() {
            Ok(self.neg())
        } else if self.order() == 0 {
            Ok(Jet { c: vec![u0.abs()] })
        } else {
            Err(IntervalError::NotDifferentiable("abs"))
        }
    }

    /// `sum_i p_i (u - u_0)^i` for the argument jet `self`.
    pub fn compose(&self, p: &[S]) -> Self {
        let order = self.order();
        let mut delta = self.clone();
        delta.c[0] = S::zero();
        let top = order.min(p.len() - 1);
        let mut acc = Jet::constant(p[top].clone(), order);
        for i in (0..top).rev() {
            acc = acc.mul(&delta);
            acc.c[0] = acc.c[0].add(&p[i]);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-13 * (1.0 + b.abs())
    }

    #[test]
    fn exp_and_trig_coefficients() {
        let x = Jet::variable(0.3f64, 5);
        let e = x.exp();
        let mut f = 1.0;
        for k in 0..=5 {
            if k > 0 {
                f *= k as f64;
            }
            assert!(close(e.c[k], 0.3f64.exp() / f));
        }
        let (s, c) = x.sin_cos();
        assert!(close(s.c[1], 0.3f64.cos()));
        assert!(close(s.c[2], -0.3f64.sin() / 2.0));
        assert!(close(c.c[3], 0.3f64.sin() / 6.0));
    }

    #[test]
    fn log_sqrt_div_inverse() {
        let x = Jet::variable(1.7f64, 6);
        let back = x.log().unwrap().exp();
        for k in 0..=6 {
            assert!(close(back.c[k], x.c[k]));
        }
        let r = x.sqrt().unwrap();
        let sq = r.mul(&r);
        for k in 0..=6 {
            assert!(close(sq.c[k], x.c[k]));
        }
        let one = Jet::constant(1.0, 6);
        let inv = one.div(&x).unwrap();
        let p = inv.mul(&x);
        assert!(close(p.c[0], 1.0));
        for k in 1..=6 {
            assert!(p.c[k].abs() < 1e-14);
        }
        let cube = x.pow_int(3).unwrap();
        assert!(close(cube.c[1], 3.0 * 1.7 * 1.7));
        let m = x.pow_int(-2).unwrap();
        assert!(close(m.c[1], -2.0 / 1.7f64.powi(3)));
        let pc = x.pow_const(&0.5).unwrap();
        assert!(close(pc.c[1], r.c[1]));
    }

    #[test]
    fn compose_matches_direct() {
        // exp(sin x) via composition with the exp coefficients at sin(x0).
        let x = Jet::variable(0.4f64, 4);
        let (s, _) = x.sin_cos();
        let e0 = s.c[0].exp();
        let mut p = vec![e0];
        let mut f = 1.0;
        for k in 1..=4 {
            f *= k as f64;
            p.push(e0 / f);
        }
        let direct = s.exp();
        let composed = s.compose(&p);
        for k in 0..=4 {
            assert!(close(composed.c[k], direct.c[k]));
        }
    }

    #[test]
    fn abs_rules() {
        assert!(Jet::variable(0.0f64, 1).abs().is_err());
        assert_eq!(Jet::variable(0.0f64, 0).abs().unwrap().c[0], 0.0);
        assert_eq!(Jet::variable(-2.0f64, 1).abs().unwrap().c[1], -1.0);
    }
}
