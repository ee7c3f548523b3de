use ineqcert::catalog::{load_builtin, Direction};
use ineqcert::certify::{
    check_gap, check_tiling, revalidate, verify_inequality, verify_monotone, verify_sign, Certificate, Config, Mode,
    Status, F64,
};
use ineqcert::expr::{eval_f64, Bound, Expr};
use ineqcert::interval::Interval;
use ineqcert::series::{cusa_ratio_coefficients, f1_ratio_coefficients, ratio_monotone, Monotonicity};
use proptest::prelude::*;

fn catalog_certificates() -> Vec<Certificate> {
    let cat = load_builtin();
    let cfg = Config::default();
    let mut out: Vec<Certificate> = cat.inequalities.iter().map(|r| verify_inequality(r, &cfg).unwrap()).collect();
    out.extend(cat.monotone.iter().map(|m| verify_monotone(m, &cfg).unwrap().certificate));
    out.extend(cat.gaps.iter().flat_map(|g| check_gap(g, &cfg).unwrap().square));
    out
}

#[test]
fn every_certificate_revalidates_and_tiles() {
    for c in catalog_certificates() {
        revalidate(&c).unwrap_or_else(|e| panic!("{}: {e}", c.id));
        if c.status.is_proven() {
            check_tiling(&c).unwrap_or_else(|e| panic!("{}: {e}", c.id));
            assert!(c.cells.iter().all(|cell| cell.enc_lo.0 > 0.0), "{}", c.id);
        }
        if c.status == Status::Refuted {
            assert_eq!(c.mode, Mode::Refuted);
            assert!(c.counterexample.as_ref().unwrap().value_hi.0 < 0.0);
        }
    }
}

#[test]
fn certificates_survive_json() {
    for c in catalog_certificates() {
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        revalidate(&back).unwrap();
    }
}

#[test]
fn certificates_are_deterministic() {
    let a: Vec<String> = catalog_certificates().iter().map(Certificate::to_json).collect();
    let b: Vec<String> = catalog_certificates().iter().map(Certificate::to_json).collect();
    assert_eq!(a, b);
}

#[test]
fn dense_sampling_agrees_with_status() {
    const N: usize = 10_000;
    let cfg = Config::default();
    for r in &load_builtin().inequalities {
        let cert = verify_inequality(r, &cfg).unwrap();
        let d = r.stmt.difference();
        let (lo, hi) = r.certified_domain();
        let (a, b) = (lo.enclosure.mid(), hi.enclosure.mid());
        let violation = (0..=N).map(|i| a + (b - a) * i as f64 / N as f64).find(|&x| {
            let v = eval_f64(&d, x).unwrap();
            v < -1e-12 * (1.0 + x.abs())
        });
        match violation {
            Some(x) => assert!(!cert.status.is_proven(), "{} proven but violated at {x}", r.id),
            None => assert_ne!(cert.status, Status::Refuted, "{} refuted without a sampled violation", r.id),
        }
    }
}

#[test]
fn monotone_certificates_agree_with_coefficient_ratios() {
    let cat = load_builtin();
    let cfg = Config::default();
    let (a, c) = f1_ratio_coefficients(100).unwrap();
    assert_eq!(ratio_monotone(&a, &c, 100, true).unwrap().class, Monotonicity::Increasing);
    let (a, c) = cusa_ratio_coefficients(100).unwrap();
    assert_eq!(ratio_monotone(&a, &c, 100, true).unwrap().class, Monotonicity::Decreasing);
    for (id, dir) in [("f1", Direction::Increasing), ("f6", Direction::Decreasing)] {
        let m = cat.monotone(id).unwrap();
        assert_eq!(m.direction, dir);
        assert!(verify_monotone(m, &cfg).unwrap().passed(), "{id}");
    }
}

#[test]
fn tampering_is_detected() {
    let r = load_builtin().get("cusa_upper").unwrap();
    let cert = verify_inequality(r, &Config::default()).unwrap();

    let mut gap = cert.clone();
    let last = gap.cells.len() - 1;
    gap.cells[last].hi = F64(gap.cells[last].hi.0 - 1e-3);
    assert!(check_tiling(&gap).is_err());

    let mut wide = cert.clone();
    wide.exclusions[0].hi = F64(1.5);
    assert!(revalidate(&wide).is_err());

    let mut other = cert.clone();
    other.target.expr = "sinc(x) - (cos(x) + 2)/3".into();
    assert!(revalidate(&other).is_err());

    let json = cert.to_json().replacen("\"hex\": \"0x", "\"hex\": \"0x1", 1);
    assert!(Certificate::from_json(&json).is_err());
}

fn num(x: f64) -> Expr {
    Bound::from_f64(x).expr
}

fn quadratic(a: f64, c: f64) -> Expr {
    Expr::add(Expr::pow_int(Expr::sub(Expr::Var, num(a)), 2), num(c))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn positive_quadratics_are_proven(a in -2.0f64..2.0, c in 1e-3f64..2.0, l in -3.0f64..0.0, w in 0.1f64..4.0) {
        let cert = verify_sign(&quadratic(a, c), Interval::new(l, l + w), &[], &Config::default()).unwrap();
        prop_assert_eq!(cert.status, Status::Proven);
        check_tiling(&cert).unwrap();
        revalidate(&cert).unwrap();
    }

    #[test]
    fn negative_dips_are_refuted(a in -2.0f64..2.0, c in 1e-3f64..2.0, w in 0.1f64..2.0) {
        let cert = verify_sign(&quadratic(a, -c), Interval::new(a - w, a + w), &[], &Config::default()).unwrap();
        prop_assert_eq!(cert.status, Status::Refuted);
        let cx = cert.counterexample.clone().unwrap();
        prop_assert!(cx.value_hi.0 < 0.0 && (a - w..=a + w).contains(&cx.x.0));
        revalidate(&cert).unwrap();
    }

    #[test]
    fn tangencies_are_excluded(a in -1.0f64..1.0, k in 1i32..4, w in 0.1f64..2.0) {
        let e = Expr::pow_int(Expr::sub(Expr::Var, num(a)), 2 * k);
        let cert = verify_sign(&e, Interval::new(a - w, a + w), &[Interval::point(a)], &Config::default()).unwrap();
        prop_assert_eq!(cert.status, Status::Proven);
        prop_assert_eq!(cert.exclusions.len(), 2);
        prop_assert!(cert.exclusions.iter().all(|z| z.order == 2 * k as u32));
        check_tiling(&cert).unwrap();
        revalidate(&cert).unwrap();
    }
}
