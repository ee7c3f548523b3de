//! Expressions in one variable: syntax tree, text format, derivatives and
//! evaluation.

mod ast;
mod diff;
mod eval;
mod parse;
mod print;
mod stmt;

pub use ast::{ConstEnv, Expr, Func, NamedConst};
pub use diff::differentiate;
pub use eval::{eval_derivative, eval_f64, eval_interval, eval_jet, eval_point, REMOVABLE_ORDER};
pub use parse::{parse_expr, parse_expr_with, parse_inequality, parse_inequality_with};
pub use print::print;
pub use stmt::{Bound, InequalityStmt, Relation};
