use super::ast::{Expr, Func};

/// Symbolic derivative with respect to `x`, with light constant folding.
///
/// Primitives differentiate into their next derivative primitive, so the
/// result never contains a removable `1/x`.
pub fn differentiate(e: &Expr) -> Expr {
    use Expr as E;
    match e {
        E::Var => Expr::int(1),
        E::Num(_) | E::Pi | E::E | E::Named(_) => Expr::int(0),
        E::Add(a, b) => Expr::add(differentiate(a), differentiate(b)),
        E::Sub(a, b) => Expr::sub(differentiate(a), differentiate(b)),
        E::Neg(a) => Expr::neg(differentiate(a)),
        E::Mul(a, b) => Expr::add(
            Expr::mul(differentiate(a), (**b).clone()),
            Expr::mul((**a).clone(), differentiate(b)),
        ),
        E::Div(a, b) => {
            let da = differentiate(a);
            let db = differentiate(b);
            if !b.has_var() {
                return Expr::div(da, (**b).clone());
            }
            Expr::div(
                Expr::sub(Expr::mul(da, (**b).clone()), Expr::mul((**a).clone(), db)),
                Expr::pow_int((**b).clone(), 2),
            )
        }
        E::PowInt(a, n) => Expr::mul(
            Expr::mul(Expr::int(*n as i64), Expr::pow_int((**a).clone(), n - 1)),
            differentiate(a),
        ),
        E::PowConst(a, p) => {
            let lowered = Expr::pow((**a).clone(), Expr::sub((**p).clone(), Expr::int(1)));
            Expr::mul(Expr::mul((**p).clone(), lowered), differentiate(a))
        }
        E::Func(f, a) => {
            let u = (**a).clone();
            let outer = match f {
                Func::Sin => Expr::func(Func::Cos, u),
                Func::Cos => Expr::neg(Expr::func(Func::Sin, u)),
                Func::Sinh => Expr::func(Func::Cosh, u),
                Func::Cosh => Expr::func(Func::Sinh, u),
                Func::Tanh => Expr::sub(Expr::int(1), Expr::pow_int(Expr::func(Func::Tanh, u), 2)),
                Func::Exp => Expr::func(Func::Exp, u),
                Func::Log => Expr::div(Expr::int(1), u),
                Func::Sqrt => Expr::div(Expr::int(1), Expr::mul(Expr::int(2), Expr::func(Func::Sqrt, u))),
                Func::Abs => Expr::div(u.clone(), Expr::func(Func::Abs, u)),
            };
            Expr::mul(outer, differentiate(a))
        }
        E::Prim(p, a) => Expr::mul(Expr::prim(p.derivative(), (**a).clone()), differentiate(a)),
    }
}
