use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::sign::{verify_target, Target};
use super::{Certificate, Config, Status, F64};
use super::sign::verify_sign;
use crate::catalog::{
    Catalog, Direction, Expected, GapKind, GapRecord, InequalityRecord, MonotoneRecord, RootRecord, ValuePoint,
    ValueRecord,
};
use crate::error::CertifyError;
use crate::expr::{eval_f64, eval_interval, eval_point, Expr};
use crate::hp::Hp;
use crate::interval::Interval;
use crate::scalar::Scalar;

fn eval_err(source: crate::error::EvalError, x: &Interval) -> CertifyError {
    CertifyError::Eval { source, lo: x.lo(), hi: x.hi() }
}

/// Whether `e(x) = e(-x)` at `n` sample points of `(0, b]`, in 192-bit
/// arithmetic.
fn looks_even(e: &Expr, b: f64, n: usize) -> bool {
    (0..n).all(|k| {
        let x = b * (k as f64 + 0.5) / n as f64;
        match (eval_point(e, &Hp::from_f64(x)), eval_point(e, &Hp::from_f64(-x))) {
            (Ok(u), Ok(v)) => {
                let scale = 1.0 + u.to_f64().abs();
                u.sub(&v).to_f64().abs() <= 1e-40 * scale
            }
            (Err(_), Err(_)) => true,
            _ => false,
        }
    })
}

fn symmetric(lo: &Interval, hi: &Interval) -> bool {
    lo.lo() == -hi.hi() && lo.hi() == -hi.lo()
}

/// Certifies an inequality record on its (possibly truncated) domain.
pub fn verify_inequality(rec: &InequalityRecord, cfg: &Config) -> Result<Certificate, CertifyError> {
    let stmt = &rec.stmt;
    let diff = stmt.difference();
    let (lo, hi) = rec.certified_domain();
    let (mut lo, hi) = (lo.enclosure, hi.enclosure);
    let mut sharp: Vec<Interval> = stmt.sharp.iter().map(|b| b.enclosure).collect();
    let mut notes = Vec::new();
    if let Some((a, b)) = &rec.truncation {
        notes.push(format!("certified on the truncation [{}, {}]", a.expr, b.expr));
    }
    if symmetric(&lo, &hi) && looks_even(&diff, hi.lo(), cfg.even_samples) {
        lo = Interval::ZERO;
        sharp.retain(|p| p.hi() >= 0.0);
        notes.push(format!("even on a symmetric domain ({} samples agree); certified on [0, b]", cfg.even_samples));
    }
    let mut cert = verify_target(&rec.id, &Target::new(diff), lo, hi, &sharp, cfg)?;
    cert.notes.splice(0..0, notes);
    if cert.status == Status::Proven && (rec.truncation.is_some() || rec.expected == Expected::ProvableOnTruncation) {
        cert.status = Status::ProvenOnTruncation;
    }
    if let Some(cx) = &mut cert.counterexample {
        let x = Interval::point(cx.x.0);
        let pair = |e: &Expr| eval_interval(e, &x).ok().map(|v| (F64(v.lo()), F64(v.hi())));
        cx.lhs = pair(&stmt.lhs);
        cx.rhs = pair(&stmt.rhs);
    }
    Ok(cert)
}

#[derive(Clone, Debug)]
pub struct MonotoneReport {
    pub certificate: Certificate,
    pub left_limit: Interval,
    pub right_limit: Interval,
    /// Both limits agree with the record within `1e-9`.
    pub limits_ok: bool,
}

impl MonotoneReport {
    pub fn passed(&self) -> bool {
        self.certificate.status.is_proven() && self.limits_ok
    }
}

fn close_to(v: &Interval, target: &Interval, tol: f64) -> bool {
    v.lo() >= target.lo() - tol && v.hi() <= target.hi() + tol
}

/// Certifies the sign of the derivative on the open domain and checks the
/// endpoint limits.
///
/// The endpoints are zone anchors: the derivative's sign there is proven
/// from its Taylor coefficients, so no inward margin is needed.
pub fn verify_monotone(rec: &MonotoneRecord, cfg: &Config) -> Result<MonotoneReport, CertifyError> {
    let target = Target { expr: rec.function.clone(), derivative: 1, negate: rec.direction == Direction::Decreasing };
    let (a, b) = (rec.domain.0.enclosure, rec.domain.1.enclosure);
    let certificate = verify_target(rec.id, &target, a, b, &[a, b], cfg)?;
    let left_limit = limit_at(&rec.function, &a)?;
    let right_limit = limit_at(&rec.function, &b)?;
    let limits_ok =
        close_to(&left_limit, &rec.limits.0.enclosure, 1e-9) && close_to(&right_limit, &rec.limits.1.enclosure, 1e-9);
    Ok(MonotoneReport { certificate, left_limit, right_limit, limits_ok })
}

/// Limit of `e` at `p`. A `0/0` quotient at `x = 0` is resolved from the
/// leading Taylor coefficients; elsewhere `e` must be continuous at `p`.
pub fn limit_at(e: &Expr, p: &Interval) -> Result<Interval, CertifyError> {
    eval_interval(e, p).map_err(|s| eval_err(s, p))
}

fn sign(v: &Interval) -> Option<i8> {
    if v.lo() > 0.0 {
        Some(1)
    } else if v.hi() < 0.0 {
        Some(-1)
    } else {
        None
    }
}

/// Encloses a zero of `e` in `bracket` to width `tol` by bisection on
/// certified signs.
pub fn find_root(e: &Expr, bracket: &Interval, tol: f64) -> Result<Interval, CertifyError> {
    let s = |x: f64| -> Result<Option<i8>, CertifyError> {
        let p = Interval::point(x);
        Ok(sign(&eval_interval(e, &p).map_err(|err| eval_err(err, &p))?))
    };
    let (mut a, mut b) = (bracket.lo(), bracket.hi());
    let sa = s(a)?;
    let sb = s(b)?;
    let (Some(sa), Some(sb)) = (sa, sb) else {
        return Err(CertifyError::Bracket { lo: a, hi: b });
    };
    if sa == sb {
        return Err(CertifyError::Bracket { lo: a, hi: b });
    }
    while b - a > tol {
        let m = a + (b - a) / 2.0;
        if !(a < m && m < b) {
            break;
        }
        match s(m)? {
            Some(v) if v == sa => a = m,
            Some(_) => b = m,
            None => {
                // the sign is undecided at m: look for certified signs nearby
                let mut w = f64::EPSILON * m.abs().max(f64::MIN_POSITIVE);
                let mut done = false;
                while m - w > a && m + w < b {
                    if let (Some(l), Some(r)) = (s(m - w)?, s(m + w)?) {
                        if l == sa && r != sa {
                            a = m - w;
                            b = m + w;
                            done = true;
                            break;
                        }
                    }
                    w *= 2.0;
                }
                if !done || b - a > tol {
                    break;
                }
            }
        }
    }
    Ok(Interval::new(a, b))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValueCheck {
    pub enclosure: Interval,
    pub pass: bool,
}

/// Evaluates `e` over the enclosure `at`; passes when the result lies in
/// `[expected - tol, expected + tol]`.
pub fn verify_value(e: &Expr, at: &Interval, expected: &Interval, tol: f64) -> Result<ValueCheck, CertifyError> {
    let enclosure = eval_interval(e, at).map_err(|s| eval_err(s, at))?;
    Ok(ValueCheck { enclosure, pass: close_to(&enclosure, expected, tol) })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapResult {
    /// Largest `|f - bound|` on the sampling grid.
    pub max_gap: f64,
    pub argmax: f64,
    /// Rigorous enclosure of the maximum of `|f - bound|` over the domain.
    pub refined: Interval,
}

struct GapCell {
    upper: f64,
    lo: f64,
    hi: f64,
    depth: u32,
}

impl PartialEq for GapCell {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for GapCell {}
impl PartialOrd for GapCell {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for GapCell {
    fn cmp(&self, o: &Self) -> Ordering {
        self.upper.total_cmp(&o.upper).then(o.lo.total_cmp(&self.lo))
    }
}

/// Maximum of `|f - bound|` over `[lo, hi]`: a grid scan, then a
/// branch-and-bound pass that encloses the true maximum.
pub fn gap_scan(
    f: &Expr,
    bound: &Expr,
    lo: &Interval,
    hi: &Interval,
    grid_n: usize,
    cfg: &Config,
) -> Result<GapResult, CertifyError> {
    let d = Expr::sub(f.clone(), bound.clone());
    let target = Target::new(d.clone());
    let (a, b) = (lo.hi(), hi.lo());
    let n = grid_n.max(2);
    let (mut max_gap, mut argmax) = (0.0f64, a);
    for i in 0..n {
        let x = a + (b - a) * i as f64 / (n - 1) as f64;
        if let Ok(v) = eval_f64(&d, x) {
            if v.abs() > max_gap {
                max_gap = v.abs();
                argmax = x;
            }
        }
    }

    let mut lower = target.at(argmax).map(|v| v.mig()).unwrap_or(0.0);
    let upper_of = |x: &Interval| target.enclose(x).map(|v| v.mag()).unwrap_or(f64::INFINITY);
    let mut heap = BinaryHeap::new();
    let whole = Interval::new(lo.lo(), hi.hi());
    heap.push(GapCell { upper: upper_of(&whole), lo: whole.lo(), hi: whole.hi(), depth: 0 });
    let mut steps = 0;
    while let Some(top) = heap.peek() {
        let tol = 1e-9 * lower.max(1.0);
        if top.upper - lower <= tol || steps >= cfg.max_cells || top.depth >= cfg.max_depth {
            break;
        }
        let c = heap.pop().expect("peeked");
        steps += 1;
        let m = c.lo + (c.hi - c.lo) / 2.0;
        for (l, h) in [(c.lo, m), (m, c.hi)] {
            let x = Interval::new(l, h);
            if let Ok(v) = target.at(x.mid()) {
                lower = lower.max(v.mig());
            }
            let upper = upper_of(&x);
            if upper > lower {
                heap.push(GapCell { upper, lo: l, hi: h, depth: c.depth + 1 });
            }
        }
    }
    let upper = heap.peek().map(|c| c.upper).unwrap_or(lower).max(lower);
    Ok(GapResult { max_gap, argmax, refined: Interval::new(lower, upper) })
}

/// Width to which catalog roots are enclosed.
pub const ROOT_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct RootCheck {
    pub enclosure: Interval,
    pub pass: bool,
}

pub fn check_root(rec: &RootRecord) -> Result<RootCheck, CertifyError> {
    let enclosure = find_root(&rec.function, &rec.bracket, ROOT_TOL)?;
    let pass = close_to(&enclosure, &Interval::point(rec.reference), rec.tolerance);
    Ok(RootCheck { enclosure, pass })
}

/// Evaluates a value record; a root argument is first enclosed with
/// [`check_root`].
pub fn check_value(rec: &ValueRecord, catalog: &Catalog) -> Result<ValueCheck, CertifyError> {
    let at = match &rec.at {
        ValuePoint::Point(b) => b.enclosure,
        ValuePoint::Root(id) => {
            let root = catalog.root(id).map_err(|e| CertifyError::Invalid(e.to_string()))?;
            check_root(root)?.enclosure
        }
    };
    verify_value(&rec.function, &at, &rec.expected.enclosure, rec.tolerance)
}

#[derive(Clone, Debug)]
pub struct GapCheck {
    pub scan: GapResult,
    /// For [`GapKind::BelowSquare`]: the certificates for `x^2 - d > 0` and
    /// `x^2 + d > 0`, where `d = f - bound`.
    pub square: Vec<Certificate>,
    pub pass: bool,
}

pub const GAP_GRID: usize = 4096;

pub fn check_gap(rec: &GapRecord, cfg: &Config) -> Result<GapCheck, CertifyError> {
    let (lo, hi) = (&rec.domain.0.enclosure, &rec.domain.1.enclosure);
    let scan = gap_scan(&rec.function, &rec.bound, lo, hi, GAP_GRID, cfg)?;
    let mut square = Vec::new();
    let pass = match rec.kind {
        GapKind::Below(c) => scan.refined.hi() < c,
        GapKind::MaxWithin(a, b) => scan.refined.lo() >= a && scan.refined.hi() <= b,
        GapKind::BelowSquare => {
            let d = Expr::sub(rec.function.clone(), rec.bound.clone());
            let x2 = Expr::pow_int(Expr::Var, 2);
            let domain = Interval::new(lo.lo(), hi.hi());
            for e in [Expr::sub(x2.clone(), d.clone()), Expr::add(x2, d)] {
                let mut cert = verify_sign(&e, domain, &[*lo], cfg)?;
                cert.id = rec.id.to_string();
                square.push(cert);
            }
            square.iter().all(|c| c.status.is_proven())
        }
    };
    Ok(GapCheck { scan, square, pass })
}
