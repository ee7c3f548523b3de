use std::fmt;

use serde::Serialize;

use super::ast::Expr;
use super::eval::eval_interval;
use crate::error::ParseError;
use crate::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }

    pub fn is_strict(self) -> bool {
        matches!(self, Relation::Lt | Relation::Gt)
    }
}

/// A constant endpoint or point with its rigorous enclosure.
#[derive(Clone, Debug, PartialEq)]
pub struct Bound {
    pub expr: Expr,
    pub enclosure: Interval,
}

impl Bound {
    pub fn new(expr: Expr) -> Result<Bound, ParseError> {
        let enclosure = eval_interval(&expr, &Interval::ZERO).map_err(|e| ParseError::Constant {
            text: expr.to_string(),
            reason: e.to_string(),
        })?;
        if !enclosure.is_finite() {
            return Err(ParseError::Constant { text: expr.to_string(), reason: "not finite".into() });
        }
        Ok(Bound { expr, enclosure })
    }

    pub fn from_f64(x: f64) -> Bound {
        let q = crate::series::Rational::from_float(x).expect("finite");
        Bound { expr: Expr::Num(q), enclosure: Interval::point(x) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InequalityStmt {
    pub lhs: Expr,
    pub rel: Relation,
    pub rhs: Expr,
    pub lo: Bound,
    pub hi: Bound,
    pub sharp: Vec<Bound>,
}

impl InequalityStmt {
    pub fn new(
        lhs: Expr,
        rel: Relation,
        rhs: Expr,
        lo: Bound,
        hi: Bound,
        sharp: Vec<Bound>,
    ) -> Result<Self, ParseError> {
        let (a, b) = (&lo.enclosure, &hi.enclosure);
        if !(a.hi() < b.lo()) {
            let reason = if a.lo() > b.hi() { "inverted domain" } else { "empty domain" };
            return Err(ParseError::Domain { lo: lo.expr.to_string(), hi: hi.expr.to_string(), reason });
        }
        for p in &sharp {
            if p.enclosure.hi() < a.lo() || p.enclosure.lo() > b.hi() {
                return Err(ParseError::SharpOutside { point: p.expr.to_string() });
            }
        }
        Ok(InequalityStmt { lhs, rel, rhs, lo, hi, sharp })
    }

    /// The quantity that must be nonnegative: `rhs - lhs` for `<`/`<=`,
    /// `lhs - rhs` for `>`/`>=`.
    pub fn difference(&self) -> Expr {
        match self.rel {
            Relation::Lt | Relation::Le => Expr::Sub(Box::new(self.rhs.clone()), Box::new(self.lhs.clone())),
            Relation::Gt | Relation::Ge => Expr::Sub(Box::new(self.lhs.clone()), Box::new(self.rhs.clone())),
        }
    }

    /// Outer enclosure of the domain.
    pub fn domain(&self) -> Interval {
        Interval::new(self.lo.enclosure.lo(), self.hi.enclosure.hi())
    }
}

impl fmt::Display for InequalityStmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} on [{}, {}]", self.lhs, self.rel.as_str(), self.rhs, self.lo.expr, self.hi.expr)?;
        if !self.sharp.is_empty() {
            let pts: Vec<String> = self.sharp.iter().map(|p| p.expr.to_string()).collect();
            write!(f, " sharp at {{{}}}", pts.join(", "))?;
        }
        Ok(())
    }
}
