//! Evaluation of expressions over any [`Scalar`], with Taylor jets.
//!
//! A quotient whose numerator and denominator both vanish at `x = 0` is
//! resolved when the evaluation point or interval contains 0: the leading
//! zero coefficients are found from point jets at 0, and both sides are
//! divided by `x^j` through the integral form of the Taylor remainder,
//! which keeps the result valid over the whole interval.

use super::ast::{Expr, Func};
use crate::error::{EvalError, IntervalError};
use crate::hp::Hp;
use crate::interval::Interval;
use crate::jet::Jet;
use crate::scalar::Scalar;

/// Highest order searched for the first nonzero denominator coefficient.
pub const REMOVABLE_ORDER: usize = 8;

fn err(e: IntervalError, node: &Expr) -> EvalError {
    EvalError::from_interval(e, node.to_string())
}

fn unary<S: Scalar>(f: Func, u: &Jet<S>) -> Result<Jet<S>, IntervalError> {
    if u.order() == 0 {
        let v = u.value();
        let r = match f {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Sinh => v.sinh(),
            Func::Cosh => v.cosh(),
            Func::Tanh => v.tanh(),
            Func::Exp => v.exp(),
            Func::Log => v.log()?,
            Func::Sqrt => v.sqrt()?,
            Func::Abs => v.abs(),
        };
        return Ok(Jet { c: vec![r] });
    }
    Ok(match f {
        Func::Sin => u.sin_cos().0,
        Func::Cos => u.sin_cos().1,
        Func::Sinh => u.sinh_cosh().0,
        Func::Cosh => u.sinh_cosh().1,
        Func::Tanh => u.tanh(),
        Func::Exp => u.exp(),
        Func::Log => u.log()?,
        Func::Sqrt => u.sqrt()?,
        Func::Abs => u.abs()?,
    })
}

/// Jet of order `order` of `e` at `x`.
pub fn eval_jet<S: Scalar>(e: &Expr, x: &S, order: usize) -> Result<Jet<S>, EvalError> {
    let constant = |v: S| Ok(Jet::constant(v, order));
    match e {
        Expr::Var => Ok(Jet::variable(x.clone(), order)),
        Expr::Num(q) => constant(S::from_rational(q)),
        Expr::Pi => constant(S::pi()),
        Expr::E => constant(S::e()),
        Expr::Named(c) => match S::from_named(c) {
            Some(v) => constant(v),
            None => constant(eval_jet(&c.definition, x, 0)?.c.swap_remove(0)),
        },
        Expr::Add(a, b) => Ok(eval_jet(a, x, order)?.add(&eval_jet(b, x, order)?)),
        Expr::Sub(a, b) => Ok(eval_jet(a, x, order)?.sub(&eval_jet(b, x, order)?)),
        Expr::Mul(a, b) => Ok(eval_jet(a, x, order)?.mul(&eval_jet(b, x, order)?)),
        Expr::Neg(a) => Ok(eval_jet(a, x, order)?.neg()),
        Expr::Div(a, b) => eval_div(e, a, b, x, order),
        Expr::PowInt(a, n) => eval_jet(a, x, order)?.pow_int(*n).map_err(|er| err(er, e)),
        Expr::PowConst(a, p) => {
            let p = eval_jet(p, x, 0)?.c.swap_remove(0);
            eval_jet(a, x, order)?.pow_const(&p).map_err(|er| err(er, e))
        }
        Expr::Func(f, a) => unary(*f, &eval_jet(a, x, order)?).map_err(|er| err(er, e)),
        Expr::Prim(p, a) => p.apply(&eval_jet(a, x, order)?).map_err(|er| err(er, e)),
    }
}

fn eval_div<S: Scalar>(node: &Expr, a: &Expr, b: &Expr, x: &S, order: usize) -> Result<Jet<S>, EvalError> {
    let den = eval_jet(b, x, order)?;
    if !den.value().contains_zero() {
        return eval_jet(a, x, order)?.div(&den).map_err(|er| err(er, node));
    }
    let pole = || EvalError::Pole { subexpr: node.to_string() };
    let unresolved = || EvalError::Unresolved { subexpr: node.to_string() };
    if !x.contains_zero() {
        return Err(pole());
    }
    let zero = S::zero();
    let dp = eval_jet(b, &zero, REMOVABLE_ORDER)?;
    let j = dp.c.iter().position(|c| !c.is_exact_zero()).ok_or_else(unresolved)?;
    if j == 0 || dp.c[j].contains_zero() {
        return Err(if j == 0 { pole() } else { unresolved() });
    }
    let np = eval_jet(a, &zero, j - 1)?;
    if let Some(k) = np.c.iter().position(|c| !c.is_exact_zero()) {
        return Err(if np.c[k].contains_zero() { unresolved() } else { pole() });
    }
    let num = eval_jet(a, x, order + j)?.shift(j);
    let den = eval_jet(b, x, order + j)?.shift(j);
    num.div(&den).map_err(|_| unresolved())
}

pub fn eval_interval(e: &Expr, x: &Interval) -> Result<Interval, EvalError> {
    Ok(eval_jet(e, x, 0)?.c[0])
}

pub fn eval_point(e: &Expr, x: &Hp) -> Result<Hp, EvalError> {
    Ok(eval_jet(e, x, 0)?.c.swap_remove(0))
}

pub fn eval_f64(e: &Expr, x: f64) -> Result<f64, EvalError> {
    Ok(eval_jet(e, &x, 0)?.c[0])
}

/// Enclosure of `e'` over `x`.
pub fn eval_derivative(e: &Expr, x: &Interval) -> Result<Interval, EvalError> {
    Ok(eval_jet(e, x, 1)?.c[1])
}
