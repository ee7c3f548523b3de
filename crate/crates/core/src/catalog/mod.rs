//! Built-in records: inequalities, monotone functions, constants, roots,
//! point values and gap claims.
//!
//! Statements are kept as DSL text and parsed once on load. Citations pair a
//! `\label` key of the source with a LaTeX fragment that occurs verbatim in it.

pub mod constants;
mod data;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::CatalogError;
use crate::expr::{parse_expr, parse_inequality, Bound, Expr, InequalityStmt};
use crate::interval::Interval;

pub use constants::{resolve_constant, ConstantRecord, CONSTANTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub label: &'static str,
    pub quote: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Provable,
    ProvableOnTruncation,
    /// Stored in its intended form; the printed statement differs.
    SuspectedTypo,
    /// The statement as printed is false.
    Refuted,
}

impl Expected {
    pub fn as_str(self) -> &'static str {
        match self {
            Expected::Provable => "provable",
            Expected::ProvableOnTruncation => "provable-on-truncation",
            Expected::SuspectedTypo => "suspected-typo",
            Expected::Refuted => "refuted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InequalityRecord {
    pub id: String,
    pub text: String,
    pub stmt: InequalityStmt,
    /// `None` for statements loaded from user files.
    pub citation: Option<Citation>,
    pub expected: Expected,
    /// Compact domain actually certified when it differs from the statement's.
    pub truncation: Option<(Bound, Bound)>,
    pub section: Option<u8>,
    pub note: Option<String>,
}

impl InequalityRecord {
    /// Endpoints of the domain handed to the certifier.
    pub fn certified_domain(&self) -> (&Bound, &Bound) {
        match &self.truncation {
            Some((a, b)) => (a, b),
            None => (&self.stmt.lo, &self.stmt.hi),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Debug)]
pub struct MonotoneRecord {
    pub id: &'static str,
    pub text: &'static str,
    pub function: Expr,
    pub domain: (Bound, Bound),
    pub direction: Direction,
    /// Limits at the left and right end of the domain.
    pub limits: (Bound, Bound),
    pub citation: Citation,
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug)]
pub struct RootRecord {
    pub id: &'static str,
    pub text: &'static str,
    pub function: Expr,
    pub bracket: Interval,
    pub reference: f64,
    pub tolerance: f64,
    pub citation: Citation,
}

#[derive(Clone, Debug)]
pub enum ValuePoint {
    Root(&'static str),
    Point(Bound),
}

#[derive(Clone, Debug)]
pub struct ValueRecord {
    pub id: &'static str,
    pub text: &'static str,
    pub function: Expr,
    pub at: ValuePoint,
    pub expected: Bound,
    pub tolerance: f64,
    pub citation: Citation,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapKind {
    /// `max |f - bound| < c`.
    Below(f64),
    /// `max |f - bound|` lies in `[lo, hi]`.
    MaxWithin(f64, f64),
    /// `|f - bound| < x^2` away from 0.
    BelowSquare,
}

#[derive(Clone, Debug)]
pub struct GapRecord {
    pub id: &'static str,
    pub function: Expr,
    pub bound: Expr,
    pub domain: (Bound, Bound),
    pub kind: GapKind,
    pub citation: Citation,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub inequalities: Vec<InequalityRecord>,
    pub monotone: Vec<MonotoneRecord>,
    pub roots: Vec<RootRecord>,
    pub values: Vec<ValueRecord>,
    pub gaps: Vec<GapRecord>,
}

fn bound(text: &str) -> Bound {
    Bound::new(parse_expr(text).expect("built-in bound parses")).expect("built-in bound evaluates")
}

fn expr(id: &str, text: &str) -> Expr {
    parse_expr(text).unwrap_or_else(|e| panic!("built-in `{id}`: {e}"))
}

fn build() -> Result<Catalog, CatalogError> {
    let mut cat = Catalog::default();
    for r in data::INEQUALITIES {
        let stmt = parse_inequality(r.text).map_err(|source| CatalogError::Parse { id: r.id.into(), source })?;
        cat.push(InequalityRecord {
            id: r.id.into(),
            text: r.text.into(),
            stmt,
            citation: Some(Citation { label: r.label, quote: r.quote }),
            expected: r.expected,
            truncation: r.truncation.map(|(a, b)| (bound(a), bound(b))),
            section: Some(r.section),
            note: r.note.map(Into::into),
        })?;
    }
    for m in data::MONOTONE {
        cat.monotone.push(MonotoneRecord {
            id: m.id,
            text: m.function,
            function: expr(m.id, m.function),
            domain: (bound(m.domain.0), bound(m.domain.1)),
            direction: m.direction,
            limits: (bound(m.limits.0), bound(m.limits.1)),
            citation: Citation { label: m.label, quote: m.quote },
            note: m.note,
        });
    }
    for r in data::ROOTS {
        cat.roots.push(RootRecord {
            id: r.id,
            text: r.function,
            function: expr(r.id, r.function),
            bracket: Interval::new(r.bracket.0, r.bracket.1),
            reference: r.reference,
            tolerance: r.tolerance,
            citation: Citation { label: r.label, quote: r.quote },
        });
    }
    for v in data::VALUES {
        cat.values.push(ValueRecord {
            id: v.id,
            text: v.function,
            function: expr(v.id, v.function),
            at: match v.at {
                data::RawPoint::Root(id) => ValuePoint::Root(id),
                data::RawPoint::Expr(t) => ValuePoint::Point(bound(t)),
            },
            expected: bound(v.expected),
            tolerance: v.tolerance,
            citation: Citation { label: v.label, quote: v.quote },
        });
    }
    for g in data::GAPS {
        cat.gaps.push(GapRecord {
            id: g.id,
            function: expr(g.id, g.function),
            bound: expr(g.id, g.bound),
            domain: (bound(g.domain.0), bound(g.domain.1)),
            kind: g.kind,
            citation: Citation { label: g.label, quote: g.quote },
        });
    }
    Ok(cat)
}

/// The immutable built-in catalog.
pub fn load_builtin() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| build().expect("built-in catalog is valid"))
}

impl Catalog {
    pub fn push(&mut self, r: InequalityRecord) -> Result<(), CatalogError> {
        if self.inequalities.iter().any(|q| q.id == r.id) {
            return Err(CatalogError::Duplicate(r.id));
        }
        self.inequalities.push(r);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Result<&InequalityRecord, CatalogError> {
        self.inequalities.iter().find(|r| r.id == id).ok_or_else(|| CatalogError::NotFound(id.into()))
    }

    pub fn monotone(&self, id: &str) -> Result<&MonotoneRecord, CatalogError> {
        self.monotone.iter().find(|r| r.id == id).ok_or_else(|| CatalogError::NotFound(id.into()))
    }

    pub fn root(&self, id: &str) -> Result<&RootRecord, CatalogError> {
        self.roots.iter().find(|r| r.id == id).ok_or_else(|| CatalogError::NotFound(id.into()))
    }

    /// Inequality records, optionally restricted to one section (1, 2 or 3).
    pub fn list(&self, section: Option<u8>) -> impl Iterator<Item = &InequalityRecord> {
        self.inequalities.iter().filter(move |r| section.is_none() || r.section == section)
    }

    pub fn ids(&self) -> BTreeSet<&str> {
        self.inequalities.iter().map(|r| r.id.as_str()).collect()
    }

    /// Adds the statements of a user file to the catalog.
    pub fn extend_from_str(&mut self, src: &str) -> Result<usize, CatalogError> {
        let recs = parse_statement_file(src)?;
        let n = recs.len();
        for r in recs {
            self.push(r)?;
        }
        Ok(n)
    }
}

fn split_id(line: &str) -> (Option<&str>, &str) {
    if let Some((head, rest)) = line.split_once(':') {
        let head = head.trim();
        let ident = !head.is_empty()
            && head.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            && !head.starts_with(|c: char| c.is_ascii_digit());
        if ident {
            return (Some(head), rest);
        }
    }
    (None, line)
}

/// Parses a statement file: one statement per line, `#` starts a comment,
/// and an optional `id:` prefix names the statement.
pub fn parse_statement_file(src: &str) -> Result<Vec<InequalityRecord>, CatalogError> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (id, text) = split_id(line);
        let text = text.trim();
        let stmt = parse_inequality(text).map_err(|source| CatalogError::File { line: i + 1, source })?;
        let id = id.map(str::to_string).unwrap_or_else(|| format!("line{}", i + 1));
        if out.iter().any(|r: &InequalityRecord| r.id == id) {
            return Err(CatalogError::Duplicate(id));
        }
        out.push(InequalityRecord {
            id,
            text: text.to_string(),
            stmt,
            citation: None,
            expected: Expected::Provable,
            truncation: None,
            section: None,
            note: None,
        });
    }
    Ok(out)
}
