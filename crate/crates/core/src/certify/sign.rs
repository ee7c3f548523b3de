use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{Cell, Certificate, Config, Counterexample, Exclusion, Mode, Side, Status, TargetSpec, F64, SCHEMA};
use crate::error::{CertifyError, EvalError, ParseError};
use crate::expr::{eval_jet, parse_expr, Expr};
use crate::interval::Interval;
use crate::scalar::Scalar;

/// Highest tangency order searched at a sharpness point.
pub const MAX_TANGENCY: usize = 8;

/// The function whose positivity is certified: `expr`, or its
/// `derivative`-th derivative, negated when `negate` is set.
#[derive(Clone, Debug, PartialEq)]
pub struct Target {
    pub expr: Expr,
    pub derivative: u32,
    pub negate: bool,
}

impl Target {
    pub fn new(expr: Expr) -> Target {
        Target { expr, derivative: 0, negate: false }
    }

    pub fn spec(&self) -> TargetSpec {
        TargetSpec { expr: self.expr.to_string(), derivative: self.derivative, negate: self.negate }
    }

    pub fn from_spec(s: &TargetSpec) -> Result<Target, ParseError> {
        Ok(Target { expr: parse_expr(&s.expr)?, derivative: s.derivative, negate: s.negate })
    }

    /// Taylor coefficients `g_0..=g_order` of the target at `x`.
    pub fn coeffs(&self, x: &Interval, order: usize) -> Result<Vec<Interval>, EvalError> {
        let d = self.derivative as usize;
        let jet = eval_jet(&self.expr, x, d + order)?;
        Ok((0..=order)
            .map(|i| {
                let factor: i64 = ((i + 1)..=(i + d)).map(|v| v as i64).product();
                let v = jet.c[d + i].mul_int(factor);
                if self.negate {
                    v.neg()
                } else {
                    v
                }
            })
            .collect())
    }

    pub fn at(&self, x: f64) -> Result<Interval, EvalError> {
        Ok(self.coeffs(&Interval::point(x), 0)?[0])
    }

    /// Second-order Taylor form around the midpoint, intersected with the
    /// natural enclosure.
    pub fn enclose(&self, x: &Interval) -> Result<Interval, EvalError> {
        if x.is_point() {
            return Ok(self.coeffs(x, 0)?[0]);
        }
        let cx = match self.coeffs(x, 2) {
            Ok(c) => c,
            Err(e) => return self.coeffs(x, 0).map(|c| c[0]).map_err(|_| e),
        };
        let m = x.mid();
        let Ok(cm) = self.coeffs(&Interval::point(m), 1) else {
            return Ok(cx[0]);
        };
        let t = x.sub(&Interval::point(m));
        let taylor = cm[0].add(&cm[1].mul(&t)).add(&cx[2].mul(&t.sqr()));
        Ok(cx[0].intersect(&taylor).unwrap_or(cx[0]))
    }

    /// Enclosure of `g_m` over `z`, which must contain the sharpness point
    /// `p`; `cp` holds the coefficients at `p` up to order `m + 1`.
    pub(crate) fn zone_coeff(&self, p: &Interval, cp: &[Interval], z: &Interval, m: usize) -> Result<Interval, EvalError> {
        let cz = self.coeffs(z, m + 2)?;
        let t = z.sub(p);
        let b1 = (m + 1) as i64;
        let b2 = ((m + 1) * (m + 2) / 2) as i64;
        let first = cp[m].add(&cz[m + 1].mul_int(b1).mul(&t));
        let second = cp[m].add(&cp[m + 1].mul_int(b1).mul(&t)).add(&cz[m + 2].mul_int(b2).mul(&t.sqr()));
        let mut out = cz[m];
        for c in [first, second] {
            if let Some(i) = out.intersect(&c) {
                out = i;
            }
        }
        Ok(out)
    }
}

/// First order whose coefficient excludes zero, if all lower ones contain it.
pub(crate) fn tangency_order(cp: &[Interval]) -> Option<usize> {
    cp.iter().take(MAX_TANGENCY + 1).position(|c| !c.contains_zero())
}

pub(crate) fn side_sign_ok(side: Side, m: usize, coeff: &Interval) -> bool {
    match side {
        Side::Right => coeff.lo() > 0.0,
        Side::Left if m % 2 == 0 => coeff.lo() > 0.0,
        Side::Left => coeff.hi() < 0.0,
    }
}

/// Domain of `xi` used for a zone covering `[lo, hi]` on one side of `p`.
pub(crate) fn xi_domain(side: Side, p: &Interval, lo: f64, hi: f64) -> Interval {
    match side {
        Side::Right => Interval::new(p.lo().min(lo), hi),
        Side::Left => Interval::new(lo, p.hi().max(hi)),
    }
}

#[derive(Debug)]
struct Pending {
    lo: f64,
    hi: f64,
    depth: u32,
}

impl Pending {
    fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl PartialEq for Pending {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Pending {}
impl PartialOrd for Pending {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Pending {
    // widest first, then leftmost
    fn cmp(&self, o: &Self) -> Ordering {
        self.width().total_cmp(&o.width()).then(o.lo.total_cmp(&self.lo))
    }
}

struct Run<'a> {
    id: &'a str,
    target: &'a Target,
    cfg: &'a Config,
    dlo: f64,
    dhi: f64,
    notes: Vec<String>,
}

impl Run<'_> {
    fn certificate(&self, status: Status, mode: Mode) -> Certificate {
        Certificate {
            schema: SCHEMA.to_string(),
            id: self.id.to_string(),
            mode,
            status,
            target: self.target.spec(),
            domain: (F64(self.dlo), F64(self.dhi)),
            config: self.cfg.clone(),
            cells: Vec::new(),
            exclusions: Vec::new(),
            depth: 0,
            counterexample: None,
            worst_cell: None,
            notes: self.notes.clone(),
        }
    }

    /// A confirmed counterexample at `x`, if `g(x) < 0`.
    fn refute_at(&self, x: f64) -> Option<Counterexample> {
        let v = self.target.at(x).ok()?;
        (v.hi() < 0.0).then(|| Counterexample {
            x: F64(x),
            value_lo: F64(v.lo()),
            value_hi: F64(v.hi()),
            lhs: None,
            rhs: None,
        })
    }

    fn refuted(&self, cx: Counterexample) -> Certificate {
        let mut c = self.certificate(Status::Refuted, Mode::Refuted);
        c.counterexample = Some(cx);
        c
    }

    fn inconclusive(&self, lo: f64, hi: f64, why: String) -> Certificate {
        let mut c = self.certificate(Status::Inconclusive, Mode::NonnegGlobal);
        c.worst_cell = Some((F64(lo), F64(hi)));
        c.notes.push(why);
        c
    }

    /// Largest zone radius (by doubling from `delta`) on which the sign
    /// condition holds.
    #[allow(clippy::too_many_arguments)]
    fn zone(
        &self,
        p: &Interval,
        cp: &[Interval],
        m: usize,
        side: Side,
        room: f64,
        to_end: bool,
        both: bool,
    ) -> Option<Exclusion> {
        let attempt = |r: f64| -> Option<Exclusion> {
            let (lo, hi) = match side {
                Side::Right => {
                    let start = if both { p.hi() } else { p.lo().max(self.dlo) };
                    let far = if r < room { p.hi() + r } else if to_end { self.dhi } else { p.hi() + room };
                    (start, far.min(self.dhi))
                }
                Side::Left => {
                    let end = if both { p.hi() } else { p.hi().min(self.dhi) };
                    let far = if r < room { p.lo() - r } else if to_end { self.dlo } else { p.lo() - room };
                    (far.max(self.dlo), end)
                }
            };
            if !(lo < hi) {
                return None;
            }
            let z = xi_domain(side, p, lo, hi);
            let coeff = self.target.zone_coeff(p, cp, &z, m).ok()?;
            side_sign_ok(side, m, &coeff).then(|| Exclusion {
                point_lo: F64(p.lo()),
                point_hi: F64(p.hi()),
                side,
                lo: F64(lo),
                hi: F64(hi),
                order: m as u32,
                coeff_lo: F64(coeff.lo()),
                coeff_hi: F64(coeff.hi()),
                hypothesis: m > 0,
            })
        };
        let mut r = self.cfg.delta.min(room);
        let mut best = attempt(r);
        if best.is_none() {
            for _ in 0..40 {
                r /= 2.0;
                best = attempt(r);
                if best.is_some() {
                    break;
                }
            }
            return best;
        }
        loop {
            let r2 = (2.0 * r).min(room);
            if r2 <= r {
                return best;
            }
            match attempt(r2) {
                Some(z) => {
                    r = r2;
                    best = Some(z);
                }
                None => return best,
            }
        }
    }
}

/// Certifies `target > 0` on the domain between the enclosures `lo` and `hi`
/// (the outer hull is covered), with zones at the sharpness points.
pub fn verify_target(
    id: &str,
    target: &Target,
    lo: Interval,
    hi: Interval,
    sharp: &[Interval],
    cfg: &Config,
) -> Result<Certificate, CertifyError> {
    if !(lo.hi() < hi.lo()) || !lo.is_finite() || !hi.is_finite() {
        return Err(CertifyError::Domain { lo: lo.lo(), hi: hi.hi() });
    }
    let (dlo, dhi) = (lo.lo(), hi.hi());
    let mut run = Run { id, target, cfg, dlo, dhi, notes: Vec::new() };

    let mut points: Vec<Interval> =
        sharp.iter().filter(|p| p.hi() >= dlo && p.lo() <= dhi).copied().collect();
    points.sort_by(|a, b| a.lo().total_cmp(&b.lo()));
    points.dedup_by(|b, a| b.lo() <= a.hi());

    // Cheap refutation first: inner domain ends and sharpness points.
    let mut probes = vec![lo.hi(), hi.lo()];
    probes.extend(points.iter().map(|p| p.mid()));
    for x in probes {
        if let Some(cx) = run.refute_at(x) {
            return Ok(run.refuted(cx));
        }
    }

    let mut exclusions = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let cp = match target.coeffs(p, MAX_TANGENCY + 2) {
            Ok(c) => c,
            Err(e) => return Ok(run.inconclusive(p.lo(), p.hi(), format!("no jet at sharpness point {}: {e}", p.mid()))),
        };
        let Some(m) = tangency_order(&cp) else {
            return Ok(run.inconclusive(
                p.lo(),
                p.hi(),
                format!("no coefficient up to order {MAX_TANGENCY} excludes 0 at {}", p.mid()),
            ));
        };
        let left_room = if i > 0 { (p.lo() - points[i - 1].hi()) * 0.499 } else { p.lo() - dlo };
        let right_room = if i + 1 < points.len() { (points[i + 1].lo() - p.hi()) * 0.499 } else { dhi - p.hi() };
        let has_left = p.lo() > lo.hi();
        let has_right = p.hi() < hi.lo();
        let both = has_left && has_right;
        if both && !p.is_point() && m % 2 == 1 {
            return Ok(run.inconclusive(p.lo(), p.hi(), format!("odd tangency order {m} at an inexact interior point")));
        }
        let sides = [
            (Side::Left, left_room, i == 0, has_left),
            (Side::Right, right_room, i + 1 == points.len(), has_right),
        ];
        for (side, room, to_end, present) in sides {
            if !present || room <= 0.0 {
                continue;
            }
            match run.zone(p, &cp, m, side, room, to_end, both) {
                Some(z) => {
                    if z.hypothesis {
                        run.notes.push(format!(
                            "assumed g^(k)(p) = 0 for k < {m} at p = {} (all enclosures contain 0)",
                            p.mid()
                        ));
                    }
                    exclusions.push(z);
                }
                None => {
                    let d = cfg.delta;
                    return Ok(run.inconclusive(
                        p.lo() - d,
                        p.hi() + d,
                        format!("sign of g_{m} not provable next to {} ({side:?})", p.mid()),
                    ));
                }
            }
        }
    }
    run.notes.dedup();

    // Segments of the domain outside every zone.
    let mut covered: Vec<(f64, f64)> = exclusions.iter().map(|z| (z.lo.0, z.hi.0)).collect();
    covered.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut heap = BinaryHeap::new();
    let mut at = dlo;
    for (a, b) in &covered {
        if *a > at {
            heap.push(Pending { lo: at, hi: *a, depth: 0 });
        }
        at = at.max(*b);
    }
    if at < dhi {
        heap.push(Pending { lo: at, hi: dhi, depth: 0 });
    }

    let mut cells = Vec::new();
    let mut depth = 0;
    let mut evaluated = 0usize;
    while let Some(c) = heap.pop() {
        evaluated += 1;
        depth = depth.max(c.depth);
        if evaluated > cfg.max_cells {
            let mut cert = run.inconclusive(c.lo, c.hi, format!("cell limit {} reached", cfg.max_cells));
            cert.cells = cells;
            return Ok(cert);
        }
        let x = Interval::new(c.lo, c.hi);
        let enc = target.enclose(&x);
        match &enc {
            Ok(v) if v.lo() > 0.0 => {
                cells.push(Cell { lo: F64(c.lo), hi: F64(c.hi), enc_lo: F64(v.lo()), enc_hi: F64(v.hi()) });
                continue;
            }
            _ => {}
        }
        if let Some(cx) = run.refute_at(x.mid()) {
            return Ok(run.refuted(cx));
        }
        let m = x.mid();
        if c.depth >= cfg.max_depth || !(c.lo < m && m < c.hi) {
            if let Err(source) = enc {
                return Err(CertifyError::Eval { source, lo: c.lo, hi: c.hi });
            }
            let mut cert = run.inconclusive(c.lo, c.hi, format!("maximum depth {} reached", cfg.max_depth));
            cert.cells = cells;
            cert.depth = depth;
            return Ok(cert);
        }
        heap.push(Pending { lo: c.lo, hi: m, depth: c.depth + 1 });
        heap.push(Pending { lo: m, hi: c.hi, depth: c.depth + 1 });
    }

    cells.sort_by(|a, b| a.lo.0.total_cmp(&b.lo.0));
    exclusions.sort_by(|a, b| a.lo.0.total_cmp(&b.lo.0));
    let mode = match (target.derivative, points.is_empty()) {
        (d, _) if d > 0 => Mode::Monotone,
        (_, true) => Mode::NonnegGlobal,
        (_, false) => Mode::StrictOutsideSharp,
    };
    let mut cert = run.certificate(Status::Proven, mode);
    cert.cells = cells;
    cert.exclusions = exclusions;
    cert.depth = depth;
    Ok(cert)
}

/// Certifies `e > 0` on `domain`, with sharpness points given as enclosures.
pub fn verify_sign(e: &Expr, domain: Interval, sharp: &[Interval], cfg: &Config) -> Result<Certificate, CertifyError> {
    let lo = Interval::point(domain.lo());
    let hi = Interval::point(domain.hi());
    verify_target("expr", &Target::new(e.clone()), lo, hi, sharp, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn constant_is_one_cell() {
        let c = verify_sign(&parse_expr("1").unwrap(), Interval::new(0.0, 1.0), &[], &cfg()).unwrap();
        assert_eq!(c.status, Status::Proven);
        assert_eq!(c.cells.len(), 1);
        assert_eq!(c.mode, Mode::NonnegGlobal);
    }

    #[test]
    fn linear_refuted_at_left_end() {
        let c = verify_sign(&parse_expr("x - 1").unwrap(), Interval::new(0.0, 2.0), &[], &cfg()).unwrap();
        assert_eq!(c.status, Status::Refuted);
        let cx = c.counterexample.unwrap();
        assert_eq!(cx.x.0, 0.0);
        assert!(cx.value_lo.0 <= -1.0 && cx.value_hi.0 >= -1.0);
    }

    #[test]
    fn cusa_on_quarter_period() {
        let e = parse_expr("(cos(x) + 2)/3 - sinc(x)").unwrap();
        let c = verify_sign(&e, Interval::new(0.0, std::f64::consts::FRAC_PI_2), &[Interval::ZERO], &cfg()).unwrap();
        assert_eq!(c.status, Status::Proven, "{:?}", c.notes);
        assert_eq!(c.mode, Mode::StrictOutsideSharp);
        assert_eq!(c.exclusions[0].order, 4);
    }

    #[test]
    fn touching_zero_without_sharp_point_is_inconclusive() {
        let c = verify_sign(&parse_expr("x^2").unwrap(), Interval::new(-1.0, 1.0), &[], &cfg()).unwrap();
        assert_eq!(c.status, Status::Inconclusive);
        assert!(c.worst_cell.is_some());
    }
}
