use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::interval::Interval;
use crate::prim::Prim;
use crate::series::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Func {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Log,
    Sqrt,
    Abs,
}

impl Func {
    pub const ALL: [Func; 9] =
        [Func::Sin, Func::Cos, Func::Sinh, Func::Cosh, Func::Tanh, Func::Exp, Func::Log, Func::Sqrt, Func::Abs];

    pub fn as_str(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        if s == "ln" {
            return Some(Func::Log);
        }
        Func::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

/// A named constant resolved when an expression is parsed.
#[derive(Clone, Debug)]
pub struct NamedConst {
    pub name: String,
    pub definition: Expr,
    /// Rigorous enclosure of the value.
    pub enclosure: Interval,
}

impl PartialEq for NamedConst {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.definition == other.definition
    }
}

/// Named constants visible to the parser.
#[derive(Clone, Debug, Default)]
pub struct ConstEnv {
    consts: BTreeMap<String, Arc<NamedConst>>,
}

impl ConstEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, c: NamedConst) -> Arc<NamedConst> {
        let c = Arc::new(c);
        self.consts.insert(c.name.clone(), c.clone());
        c
    }

    pub fn get(&self, name: &str) -> Option<&Arc<NamedConst>> {
        self.consts.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<NamedConst>> {
        self.consts.values()
    }
}

/// Expression in the single variable `x`.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Pi,
    E,
    Named(Arc<NamedConst>),
    Var,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    PowInt(Box<Expr>, i32),
    /// Power with a constant, non-integer exponent; the base must be positive.
    PowConst(Box<Expr>, Box<Expr>),
    Func(Func, Box<Expr>),
    Prim(Prim, Box<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Num(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(p: i64, q: i64) -> Expr {
        Expr::Num(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn as_num(&self) -> Option<&Rational> {
        match self {
            Expr::Num(q) => Some(q),
            _ => None,
        }
    }

    fn is_num(&self, v: i64) -> bool {
        matches!(self, Expr::Num(q) if *q == Rational::from_integer(BigInt::from(v)))
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        match (&a, &b) {
            (Expr::Num(p), Expr::Num(q)) => Expr::Num(p + q),
            _ if a.is_num(0) => b,
            _ if b.is_num(0) => a,
            _ => Expr::Add(Box::new(a), Box::new(b)),
        }
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        match (&a, &b) {
            (Expr::Num(p), Expr::Num(q)) => Expr::Num(p - q),
            _ if b.is_num(0) => a,
            _ if a.is_num(0) => Expr::neg(b),
            _ => Expr::Sub(Box::new(a), Box::new(b)),
        }
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        match (&a, &b) {
            (Expr::Num(p), Expr::Num(q)) => Expr::Num(p * q),
            _ if a.is_num(0) || b.is_num(0) => Expr::int(0),
            _ if a.is_num(1) => b,
            _ if b.is_num(1) => a,
            _ if a.is_num(-1) => Expr::neg(b),
            _ => Expr::Mul(Box::new(a), Box::new(b)),
        }
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        match (&a, &b) {
            (Expr::Num(p), Expr::Num(q)) if !q.is_zero() => Expr::Num(p / q),
            _ if b.is_num(1) => a,
            _ => Expr::Div(Box::new(a), Box::new(b)),
        }
    }

    pub fn neg(a: Expr) -> Expr {
        match a {
            Expr::Num(q) => Expr::Num(-q),
            Expr::Neg(inner) => *inner,
            other => Expr::Neg(Box::new(other)),
        }
    }

    /// `base^exp`; integer exponents become [`Expr::PowInt`].
    pub fn pow(base: Expr, exp: Expr) -> Expr {
        if let Expr::Num(q) = &exp {
            if q.denom().is_one() {
                if let Some(n) = q.numer().to_i32() {
                    return Expr::pow_int(base, n);
                }
            }
        }
        Expr::PowConst(Box::new(base), Box::new(exp))
    }

    pub fn pow_int(base: Expr, n: i32) -> Expr {
        match n {
            0 => Expr::int(1),
            1 => base,
            _ => Expr::PowInt(Box::new(base), n),
        }
    }

    pub fn func(f: Func, a: Expr) -> Expr {
        Expr::Func(f, Box::new(a))
    }

    pub fn prim(p: Prim, a: Expr) -> Expr {
        Expr::Prim(p, Box::new(a))
    }

    /// Whether `x` occurs anywhere in the tree.
    pub fn has_var(&self) -> bool {
        match self {
            Expr::Var => true,
            Expr::Num(_) | Expr::Pi | Expr::E | Expr::Named(_) => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::PowConst(a, b) => {
                a.has_var() || b.has_var()
            }
            Expr::Neg(a) | Expr::PowInt(a, _) | Expr::Func(_, a) | Expr::Prim(_, a) => a.has_var(),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Expr::Var | Expr::Num(_) | Expr::Pi | Expr::E | Expr::Named(_) => 1,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::PowConst(a, b) => {
                1 + a.size() + b.size()
            }
            Expr::Neg(a) | Expr::PowInt(a, _) | Expr::Func(_, a) | Expr::Prim(_, a) => 1 + a.size(),
        }
    }

    /// `e(-x)` syntactically.
    pub fn reflect(&self) -> Expr {
        self.substitute(&Expr::neg(Expr::Var))
    }

    /// Replaces `x` by `v`.
    pub fn substitute(&self, v: &Expr) -> Expr {
        let s = |a: &Expr| Box::new(a.substitute(v));
        match self {
            Expr::Var => v.clone(),
            Expr::Num(_) | Expr::Pi | Expr::E | Expr::Named(_) => self.clone(),
            Expr::Add(a, b) => Expr::Add(s(a), s(b)),
            Expr::Sub(a, b) => Expr::Sub(s(a), s(b)),
            Expr::Mul(a, b) => Expr::Mul(s(a), s(b)),
            Expr::Div(a, b) => Expr::Div(s(a), s(b)),
            Expr::PowConst(a, b) => Expr::PowConst(s(a), s(b)),
            Expr::Neg(a) => Expr::Neg(s(a)),
            Expr::PowInt(a, n) => Expr::PowInt(s(a), *n),
            Expr::Func(f, a) => Expr::Func(*f, s(a)),
            Expr::Prim(p, a) => Expr::Prim(*p, s(a)),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::print(self))
    }
}

/// Exact decimal expansion when the denominator is `2^a 5^b`.
pub(crate) fn exact_decimal(q: &Rational) -> Option<String> {
    let mut d = q.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut a, mut b) = (0u32, 0u32);
    while (&d % &two).is_zero() {
        d /= &two;
        a += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        b += 1;
    }
    if !d.is_one() {
        return None;
    }
    let scale = a.max(b);
    let n = q.numer().abs() * num_traits::pow(BigInt::from(10), scale as usize) / q.denom();
    let digits = n.to_string();
    let sign = if q.is_negative() { "-" } else { "" };
    if scale == 0 {
        return Some(format!("{sign}{digits}"));
    }
    let scale = scale as usize;
    let padded = format!("{:0>width$}", digits, width = scale + 1);
    let (int, frac) = padded.split_at(padded.len() - scale);
    Some(format!("{sign}{int}.{frac}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        let q = |p: i64, d: i64| Rational::new(BigInt::from(p), BigInt::from(d));
        assert_eq!(exact_decimal(&q(1, 2)).unwrap(), "0.5");
        assert_eq!(exact_decimal(&q(-314159, 100000)).unwrap(), "-3.14159");
        assert_eq!(exact_decimal(&q(7, 1)).unwrap(), "7");
        assert_eq!(exact_decimal(&q(1, 1000)).unwrap(), "0.001");
        assert!(exact_decimal(&q(1, 3)).is_none());
    }

    #[test]
    fn smart_constructors_fold() {
        assert_eq!(Expr::add(Expr::int(1), Expr::int(2)), Expr::int(3));
        assert_eq!(Expr::mul(Expr::int(1), Expr::Var), Expr::Var);
        assert_eq!(Expr::neg(Expr::int(2)), Expr::int(-2));
        assert_eq!(Expr::pow(Expr::Var, Expr::int(2)), Expr::PowInt(Box::new(Expr::Var), 2));
        assert!(Expr::Func(Func::Sin, Box::new(Expr::Var)).has_var());
        assert!(!Expr::Pi.has_var());
    }
}
