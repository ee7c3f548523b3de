//! Recursive-descent parser for expressions and inequality statements.
//!
//! ```text
//! stmt    := expr REL expr "on" "[" expr "," expr "]" ("sharp" "at" "{" expr ("," expr)* "}")?
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ("^" unary)?
//! primary := number | ident | ident "(" expr ")" | "(" expr ")"
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::ast::{ConstEnv, Expr, Func};
use super::stmt::{Bound, InequalityStmt, Relation};
use crate::error::ParseError;
use crate::prim::Prim;
use crate::series::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Sym(char),
    Rel(Relation),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(_) => "number".into(),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::Rel(r) => format!("'{}'", r.as_str()),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|(_, d)| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let mut frac = String::new();
            if i < chars.len() && chars[i].1 == '.' {
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    frac.push(chars[i].1);
                    i += 1;
                }
            }
            let int_end = chars[start..].iter().take_while(|(_, d)| d.is_ascii_digit()).count();
            let int: String = chars[start..start + int_end].iter().map(|(_, d)| *d).collect();
            let mut exp10: i64 = 0;
            if i < chars.len() && (chars[i].1 == 'e' || chars[i].1 == 'E') {
                // `e` starts an exponent only when digits follow
                let mut j = i + 1;
                let mut sign = 1;
                if j < chars.len() && (chars[j].1 == '+' || chars[j].1 == '-') {
                    sign = if chars[j].1 == '-' { -1 } else { 1 };
                    j += 1;
                }
                let ds = j;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                if j > ds {
                    let digits: String = chars[ds..j].iter().map(|(_, d)| *d).collect();
                    exp10 = sign * digits.parse::<i64>().map_err(|_| syntax(off, &["number"], "huge exponent"))?;
                    i = j;
                }
            }
            let mantissa: BigInt = format!("{}{}", if int.is_empty() { "0" } else { &int }, frac).parse().expect("digits");
            let scale = exp10 - frac.len() as i64;
            if scale.abs() > 400 {
                return Err(syntax(off, &["number"], "number out of range"));
            }
            let ten = BigInt::from(10);
            let q = if scale >= 0 {
                Rational::from_integer(mantissa * num_traits::pow(ten, scale as usize))
            } else {
                Rational::new(mantissa, num_traits::pow(ten, (-scale) as usize))
            };
            out.push((Tok::Num(q), off));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, d)| *d).collect();
            let s = if s == "π" { "pi".to_string() } else { s };
            out.push((Tok::Ident(s), off));
            continue;
        }
        let next = chars.get(i + 1).map(|(_, d)| *d);
        let (tok, len) = match (c, next) {
            ('<', Some('=')) => (Tok::Rel(Relation::Le), 2),
            ('>', Some('=')) => (Tok::Rel(Relation::Ge), 2),
            ('<', _) => (Tok::Rel(Relation::Lt), 1),
            ('>', _) => (Tok::Rel(Relation::Gt), 1),
            ('≤', _) => (Tok::Rel(Relation::Le), 1),
            ('≥', _) => (Tok::Rel(Relation::Ge), 1),
            ('−', _) => (Tok::Sym('-'), 1),
            ('·', _) => (Tok::Sym('*'), 1),
            ('+' | '-' | '*' | '/' | '^' | '(' | ')' | '[' | ']' | '{' | '}' | ',', _) => (Tok::Sym(c), 1),
            _ => return Err(syntax(off, &["expression"], &format!("'{c}'"))),
        };
        out.push((tok, off));
        i += len;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

fn syntax(offset: usize, expected: &[&str], found: &str) -> ParseError {
    ParseError::Syntax { offset, expected: expected.iter().map(|s| s.to_string()).collect(), found: found.to_string() }
}

const OPERAND: [&str; 4] = ["number", "identifier", "'('", "'-'"];

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    env: &'a ConstEnv,
}

impl<'a> Parser<'a> {
    fn new(src: &str, env: &'a ConstEnv) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(src)?, pos: 0, env })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        syntax(self.offset(), expected, &self.peek().describe())
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        if *self.peek() == Tok::Ident(w.to_string()) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("`{w}`")]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                let rhs = self.unary()?;
                lhs = match (lhs, rhs) {
                    // `p/q` literals become a single rational
                    (Expr::Num(p), Expr::Num(q)) if !q.is_zero() => Expr::Num(p / q),
                    (a, b) => Expr::Div(Box::new(a), Box::new(b)),
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(match inner {
                Expr::Num(q) => Expr::Num(-q),
                other => Expr::Neg(Box::new(other)),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let exp = self.unary()?;
        if exp.has_var() {
            return Err(syntax(at, &["constant exponent"], "expression in x"));
        }
        if let Expr::Num(q) = &exp {
            if q.is_integer() {
                if let Some(n) = q.numer().to_i32() {
                    return Ok(Expr::PowInt(Box::new(base), n));
                }
                return Err(syntax(at, &["exponent of moderate size"], &q.to_string()));
            }
        }
        Ok(Expr::PowConst(Box::new(base), Box::new(exp)))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        let tok = self.peek().clone();
        if matches!(tok, Tok::Num(_) | Tok::Sym('(') | Tok::Ident(_)) {
            self.bump();
        }
        match tok {
            Tok::Num(q) => Ok(Expr::Num(q)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if *self.peek() == Tok::Sym('(') {
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.expect(')')?;
                    if let Some(f) = Func::from_name(&name) {
                        return Ok(Expr::Func(f, Box::new(arg)));
                    }
                    if let Ok(p) = name.parse::<Prim>() {
                        return Ok(Expr::Prim(p, Box::new(arg)));
                    }
                    return Err(ParseError::UnknownIdent { offset: off, name });
                }
                match name.as_str() {
                    "x" => Ok(Expr::Var),
                    "pi" => Ok(Expr::Pi),
                    "e" => Ok(Expr::E),
                    _ => match self.env.get(&name) {
                        Some(c) => Ok(Expr::Named(c.clone())),
                        None => Err(ParseError::UnknownIdent { offset: off, name }),
                    },
                }
            }
            _ => Err(self.error(&OPERAND)),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error(&["operator", "end of input"]))
        }
    }

    fn bound(&mut self) -> Result<Bound, ParseError> {
        let at = self.offset();
        let e = self.expr()?;
        if e.has_var() {
            return Err(syntax(at, &["constant"], "expression in x"));
        }
        Bound::new(e)
    }

    fn statement(&mut self) -> Result<InequalityStmt, ParseError> {
        let lhs = self.expr()?;
        let rel = match self.peek() {
            Tok::Rel(r) => *r,
            _ => return Err(self.error(&["'<'", "'<='", "'>'", "'>='"])),
        };
        self.pos += 1;
        let rhs = self.expr()?;
        self.expect_word("on")?;
        self.expect('[')?;
        let lo = self.bound()?;
        self.expect(',')?;
        let hi = self.bound()?;
        self.expect(']')?;
        let mut sharp = Vec::new();
        if *self.peek() == Tok::Ident("sharp".into()) {
            self.pos += 1;
            self.expect_word("at")?;
            self.expect('{')?;
            if !self.eat('}') {
                loop {
                    sharp.push(self.bound()?);
                    if self.eat('}') {
                        break;
                    }
                    if !self.eat(',') {
                        return Err(self.error(&["','", "'}'"]));
                    }
                }
            }
        }
        self.finish()?;
        InequalityStmt::new(lhs, rel, rhs, lo, hi, sharp)
    }
}

/// Parses an expression; named constants are resolved in `env`.
pub fn parse_expr_with(src: &str, env: &ConstEnv) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src, env)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses an expression with the built-in catalog constants in scope.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    parse_expr_with(src, crate::catalog::constants::env())
}

pub fn parse_inequality_with(src: &str, env: &ConstEnv) -> Result<InequalityStmt, ParseError> {
    Parser::new(src, env)?.statement()
}

/// Parses `<expr> REL <expr> on [a, b]` with optional `sharp at {p, ...}`.
pub fn parse_inequality(src: &str) -> Result<InequalityStmt, ParseError> {
    parse_inequality_with(src, crate::catalog::constants::env())
}
