//! Printing with the fewest parentheses that still reparse to the same tree.

use num_traits::{One, Signed};

use super::ast::{exact_decimal, Expr};

const ADD: u8 = 1;
const MUL: u8 = 2;
const UNARY: u8 = 3;
const POW: u8 = 4;
const ATOM: u8 = 5;

fn num_text(q: &crate::series::Rational) -> (String, u8) {
    if let Some(d) = exact_decimal(q) {
        let prec = if q.is_negative() { UNARY } else { ATOM };
        return (d, prec);
    }
    debug_assert!(!q.denom().is_one());
    (format!("{}/{}", q.numer(), q.denom()), MUL)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Num(q) => num_text(q).1,
        Expr::Add(..) | Expr::Sub(..) => ADD,
        Expr::Mul(..) | Expr::Div(..) => MUL,
        Expr::Neg(_) => UNARY,
        Expr::PowInt(..) | Expr::PowConst(..) => POW,
        _ => ATOM,
    }
}

fn wrap(out: &mut String, e: &Expr, min: u8) {
    if prec(e) < min {
        out.push('(');
        write(out, e);
        out.push(')');
    } else {
        write(out, e);
    }
}

fn binary(out: &mut String, a: &Expr, op: &str, b: &Expr, level: u8) {
    wrap(out, a, level);
    out.push_str(op);
    wrap(out, b, level + 1);
}

fn write(out: &mut String, e: &Expr) {
    match e {
        Expr::Num(q) => out.push_str(&num_text(q).0),
        Expr::Pi => out.push_str("pi"),
        Expr::E => out.push('e'),
        Expr::Named(c) => out.push_str(&c.name),
        Expr::Var => out.push('x'),
        Expr::Add(a, b) => binary(out, a, " + ", b, ADD),
        Expr::Sub(a, b) => binary(out, a, " - ", b, ADD),
        Expr::Mul(a, b) => binary(out, a, "*", b, MUL),
        Expr::Div(a, b) => binary(out, a, "/", b, MUL),
        Expr::Neg(a) => {
            out.push('-');
            wrap(out, a, UNARY);
        }
        Expr::PowInt(a, n) => {
            wrap(out, a, ATOM);
            out.push('^');
            out.push_str(&n.to_string());
        }
        Expr::PowConst(a, b) => {
            wrap(out, a, ATOM);
            out.push('^');
            wrap(out, b, UNARY);
        }
        Expr::Func(f, a) => {
            out.push_str(f.as_str());
            out.push('(');
            write(out, a);
            out.push(')');
        }
        Expr::Prim(p, a) => {
            out.push_str(&p.to_string());
            out.push('(');
            write(out, a);
            out.push(')');
        }
    }
}

pub fn print(e: &Expr) -> String {
    let mut s = String::new();
    write(&mut s, e);
    s
}
