//! Pole-free primitives `sinc`, `sinhc`, `xcot`, `xcoth`, `inv_sinc2`,
//! `inv_sinhc2` and their derivatives of any order.
//!
//! Near zero the exact even series is summed with a rigorous tail; away from
//! zero the quotient form is expanded with jets. Straddling intervals are
//! split and the branch results joined.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::IntervalError;
use crate::interval::Interval;
use crate::jet::Jet;
use crate::scalar::{crossover, SResult, Scalar};
use crate::series::{primitive_tail, SeriesName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimKind {
    Sinc,
    Sinhc,
    Xcot,
    Xcoth,
    InvSinc2,
    InvSinhc2,
}

impl PrimKind {
    pub const ALL: [PrimKind; 6] =
        [PrimKind::Sinc, PrimKind::Sinhc, PrimKind::Xcot, PrimKind::Xcoth, PrimKind::InvSinc2, PrimKind::InvSinhc2];

    pub fn as_str(self) -> &'static str {
        match self {
            PrimKind::Sinc => "sinc",
            PrimKind::Sinhc => "sinhc",
            PrimKind::Xcot => "xcot",
            PrimKind::Xcoth => "xcoth",
            PrimKind::InvSinc2 => "inv_sinc2",
            PrimKind::InvSinhc2 => "inv_sinhc2",
        }
    }

    pub fn series(self) -> SeriesName {
        match self {
            PrimKind::Sinc => SeriesName::Sinc,
            PrimKind::Sinhc => SeriesName::Sinhc,
            PrimKind::Xcot => SeriesName::Xcot,
            PrimKind::Xcoth => SeriesName::XcothAux,
            PrimKind::InvSinc2 => SeriesName::InvSin2,
            PrimKind::InvSinhc2 => SeriesName::InvSinh2,
        }
    }

    /// Whether the function is only defined on `(-pi, pi)`.
    pub fn bounded_domain(self) -> bool {
        matches!(self, PrimKind::Xcot | PrimKind::InvSinc2)
    }

    /// Taylor coefficients of the quotient form at `x`, up to order `m`.
    fn quotient<S: Scalar>(self, x: &S, m: usize) -> SResult<Vec<S>> {
        let t = Jet::variable(x.clone(), m);
        let j = match self {
            PrimKind::Sinc => t.sin_cos().0.div(&t)?,
            PrimKind::Sinhc => t.sinh_cosh().0.div(&t)?,
            PrimKind::Xcot => {
                let (s, c) = t.sin_cos();
                t.mul(&c).div(&s)?
            }
            PrimKind::Xcoth => {
                let (s, c) = t.sinh_cosh();
                t.mul(&c).div(&s)?
            }
            PrimKind::InvSinc2 => t.div(&t.sin_cos().0)?.pow_int(2)?,
            PrimKind::InvSinhc2 => t.div(&t.sinh_cosh().0)?.pow_int(2)?,
        };
        Ok(j.c)
    }

    /// `sum_m c_m C(2m, j) y^(2m - j)` plus the truncation tail.
    fn series_coeff<S: Scalar>(self, y: &S, y2: &S, j: usize) -> S {
        let name = self.series();
        let mut acc = S::with_series_row(name, j, |row| {
            let mut acc = row[row.len() - 1].clone();
            for c in row[..row.len() - 1].iter().rev() {
                acc = acc.mul(y2).add(c);
            }
            acc
        });
        if j % 2 == 1 {
            acc = acc.mul(y);
        }
        acc.inflate(primitive_tail(name, j, y.mag()))
    }

    /// Taylor coefficients `f^(j)(x) / j!`, `j = 0..=m`, of the base function.
    pub fn taylor<S: Scalar>(self, x: &S, m: usize) -> SResult<Vec<S>> {
        if self.bounded_domain() && !(x.mag() < Interval::PI.lo()) {
            return Err(IntervalError::Domain(self.as_str()));
        }
        let mut out: Option<Vec<S>> = None;
        for (piece, near) in x.pieces(crossover()) {
            let g = if near {
                let y2 = piece.pow_int(2)?;
                (0..=m).map(|j| self.series_coeff(&piece, &y2, j)).collect()
            } else {
                self.quotient(&piece, m).map_err(|e| match e {
                    IntervalError::Pole => IntervalError::Domain(self.as_str()),
                    other => other,
                })?
            };
            out = Some(match out {
                None => g,
                Some(prev) => prev.iter().zip(&g).map(|(a, b)| a.hull(b)).collect(),
            });
        }
        Ok(out.expect("at least one piece"))
    }
}

/// A primitive or one of its derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prim {
    pub kind: PrimKind,
    pub order: u32,
}

impl Prim {
    pub fn new(kind: PrimKind, order: u32) -> Self {
        Prim { kind, order }
    }

    pub fn derivative(self) -> Self {
        Prim { kind: self.kind, order: self.order + 1 }
    }

    /// Applies the primitive to an argument jet.
    pub fn apply<S: Scalar>(self, u: &Jet<S>) -> SResult<Jet<S>> {
        let k = u.order();
        let n = self.order as usize;
        let g = self.kind.taylor(u.value(), n + k)?;
        // Coefficient i of f^(n) is (n+i)!/i! * g_{n+i}.
        let p: Vec<S> = (0..=k)
            .map(|i| {
                let factor: i64 = ((i + 1)..=(i + n)).map(|v| v as i64).product();
                g[n + i].mul_int(factor)
            })
            .collect();
        Ok(u.compose(&p))
    }

    pub fn eval<S: Scalar>(self, x: &S) -> SResult<S> {
        Ok(self.apply(&Jet::constant(x.clone(), 0))?.c.swap_remove(0))
    }
}

impl fmt::Display for Prim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            0 => f.write_str(self.kind.as_str()),
            1 => write!(f, "d{}", self.kind.as_str()),
            n => write!(f, "d{n}{}", self.kind.as_str()),
        }
    }
}

impl FromStr for Prim {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        if let Some(kind) = PrimKind::ALL.into_iter().find(|k| k.as_str() == s) {
            return Ok(Prim::new(kind, 0));
        }
        let rest = s.strip_prefix('d').ok_or(())?;
        let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        let order = if digits == 0 { 1 } else { rest[..digits].parse().map_err(|_| ())? };
        if order == 0 || (digits > 0 && rest.starts_with('0')) || (digits > 0 && order == 1) {
            return Err(());
        }
        let kind = PrimKind::ALL.into_iter().find(|k| k.as_str() == &rest[digits..]).ok_or(())?;
        Ok(Prim::new(kind, order))
    }
}
