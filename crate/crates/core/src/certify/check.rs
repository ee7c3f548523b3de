//! Independent re-validation of certificates.

use super::sign::{side_sign_ok, tangency_order, xi_domain, Target};
use super::{Certificate, Mode, Status};
use crate::error::CertifyError;
use crate::interval::Interval;

fn invalid(msg: String) -> CertifyError {
    CertifyError::Invalid(msg)
}

/// Checks that cells and exclusion zones tile the domain exactly.
pub fn check_tiling(cert: &Certificate) -> Result<(), CertifyError> {
    let mut pieces: Vec<(f64, f64)> = cert.cells.iter().map(|c| (c.lo.0, c.hi.0)).collect();
    pieces.extend(cert.exclusions.iter().map(|z| (z.lo.0, z.hi.0)));
    pieces.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut at = cert.domain.0 .0;
    for (lo, hi) in pieces {
        if lo != at {
            return Err(invalid(format!("tiling broken at {at:e}: next piece starts at {lo:e}")));
        }
        if !(lo < hi) {
            return Err(invalid(format!("empty piece [{lo:e}, {hi:e}]")));
        }
        at = hi;
    }
    if at != cert.domain.1 .0 {
        return Err(invalid(format!("tiling ends at {at:e}, domain ends at {:e}", cert.domain.1 .0)));
    }
    Ok(())
}

/// Re-evaluates every cell and zone of a certificate from its serialized
/// form and confirms the recorded conclusion.
pub fn revalidate(cert: &Certificate) -> Result<(), CertifyError> {
    let target = Target::from_spec(&cert.target).map_err(|e| invalid(e.to_string()))?;
    match cert.status {
        Status::Refuted => {
            let cx = cert.counterexample.as_ref().ok_or_else(|| invalid("refuted without counterexample".into()))?;
            let v = target.at(cx.x.0).map_err(|e| invalid(e.to_string()))?;
            if !(v.hi() < 0.0) || cert.mode != Mode::Refuted {
                return Err(invalid(format!("counterexample at {} does not confirm: {v:?}", cx.x.0)));
            }
            Ok(())
        }
        Status::Inconclusive => Ok(()),
        Status::Proven | Status::ProvenOnTruncation => {
            check_tiling(cert)?;
            for c in &cert.cells {
                let x = c.interval();
                let enc = target.enclose(&x).map_err(|source| CertifyError::Eval { source, lo: x.lo(), hi: x.hi() })?;
                if !(enc.lo() > 0.0 && c.enc_lo.0 > 0.0) {
                    return Err(invalid(format!("cell {x:?} gives {enc:?}")));
                }
            }
            for z in &cert.exclusions {
                let p = Interval::new(z.point_lo.0, z.point_hi.0);
                let m = z.order as usize;
                let cp = target
                    .coeffs(&p, m + 2)
                    .map_err(|source| CertifyError::Eval { source, lo: p.lo(), hi: p.hi() })?;
                if tangency_order(&cp) != Some(m) {
                    return Err(invalid(format!("tangency order at {p:?} is not {m}")));
                }
                let zi = xi_domain(z.side, &p, z.lo.0, z.hi.0);
                let coeff = target
                    .zone_coeff(&p, &cp, &zi, m)
                    .map_err(|source| CertifyError::Eval { source, lo: zi.lo(), hi: zi.hi() })?;
                if !side_sign_ok(z.side, m, &coeff) {
                    return Err(invalid(format!("zone [{:e}, {:e}] gives g_{m} in {coeff:?}", z.lo.0, z.hi.0)));
                }
            }
            Ok(())
        }
    }
}
