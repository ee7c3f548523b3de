//! Verification engines and certificates.
//!
//! [`verify_sign`] proves `g > 0` on a compact domain by bisection. `g` is an
//! expression or a signed derivative of one ([`Target`]). Each cell is
//! bounded with a second-order Taylor form intersected with the natural
//! enclosure. At a sharpness point `p`, where `g(p) = 0`, the first
//! Taylor coefficient `g_m(p)` that excludes zero is located. The sign of
//! `g_m` is then proven on a zone next to `p`, so `g(x) = g_m(xi) (x-p)^m`
//! has the required sign there. The vanishing of the lower coefficients
//! (each enclosure contains zero) is recorded as a hypothesis.

mod check;
pub mod float;
mod ops;
mod sign;

use serde::{Deserialize, Serialize};

use crate::interval::Interval;
pub use float::F64;
pub use ops::{
    check_gap, check_root, check_value, find_root, gap_scan, limit_at, verify_inequality, verify_monotone, verify_value,
    GapCheck, GapResult, MonotoneReport, RootCheck, ValueCheck, GAP_GRID, ROOT_TOL,
};
pub use sign::{verify_sign, verify_target, Target};

pub const SCHEMA: &str = "ineqcert.certificate/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub max_depth: u32,
    /// Initial radius of the zone at a sharpness point.
    pub delta: f64,
    /// Cap on evaluated cells before giving up.
    pub max_cells: usize,
    /// Samples used to confirm evenness before halving a symmetric domain.
    pub even_samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_depth: 40, delta: 1e-3, max_cells: 200_000, even_samples: 16 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    NonnegGlobal,
    StrictOutsideSharp,
    Monotone,
    Refuted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Proven,
    ProvenOnTruncation,
    Refuted,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Proven => "proven",
            Status::ProvenOnTruncation => "proven-on-truncation",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn is_proven(self) -> bool {
        matches!(self, Status::Proven | Status::ProvenOnTruncation)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub lo: F64,
    pub hi: F64,
    pub enc_lo: F64,
    pub enc_hi: F64,
}

impl Cell {
    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.0, self.hi.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Zone next to a sharpness point on which the sign of `g_m` is proven.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exclusion {
    /// Enclosure of the sharpness point.
    pub point_lo: F64,
    pub point_hi: F64,
    pub side: Side,
    /// Part of the domain covered by this zone.
    pub lo: F64,
    pub hi: F64,
    /// Tangency order `m`.
    pub order: u32,
    /// Enclosure of `g_m` over the zone.
    pub coeff_lo: F64,
    pub coeff_hi: F64,
    /// `true` when `g_k(p) = 0` for `k < m` is assumed from enclosures containing 0.
    pub hypothesis: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub x: F64,
    pub value_lo: F64,
    pub value_hi: F64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<(F64, F64)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<(F64, F64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TargetSpec {
    pub expr: String,
    /// Derivative order of `expr` whose sign is certified.
    pub derivative: u32,
    pub negate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub id: String,
    pub mode: Mode,
    pub status: Status,
    pub target: TargetSpec,
    pub domain: (F64, F64),
    pub config: Config,
    pub cells: Vec<Cell>,
    pub exclusions: Vec<Exclusion>,
    /// Deepest bisection level reached.
    pub depth: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub worst_cell: Option<(F64, F64)>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(s)
    }
}

pub use check::{check_tiling, revalidate};
