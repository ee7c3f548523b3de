//! Random expression trees shared by the property suites.

#![allow(dead_code)]

use ineqcert::expr::{Expr, Func};
use ineqcert::prim::{Prim, PrimKind};
use proptest::prelude::*;

pub fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        3 => Just(Expr::Var),
        2 => (-9i64..10).prop_map(Expr::int),
        1 => (1i64..10, 2i64..10).prop_map(|(p, q)| Expr::ratio(p, q)),
        1 => Just(Expr::Pi),
        1 => Just(Expr::E),
    ]
}

fn func() -> impl Strategy<Value = Func> {
    proptest::sample::select(Func::ALL.to_vec())
}

fn prim() -> impl Strategy<Value = Prim> {
    (proptest::sample::select(PrimKind::ALL.to_vec()), 0u32..3).prop_map(|(k, n)| Prim::new(k, n))
}

/// Expressions built with the smart constructors, so they are in the
/// normal form the parser produces.
pub fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sub(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::mul(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::div(a, b)),
            inner.clone().prop_map(Expr::neg),
            (inner.clone(), -3i32..5).prop_map(|(a, n)| Expr::pow_int(a, n)),
            (inner.clone(), 1i64..5, 2i64..5).prop_map(|(a, p, q)| Expr::pow(a, Expr::ratio(p, q))),
            (func(), inner.clone()).prop_map(|(f, a)| Expr::func(f, a)),
            (prim(), inner).prop_map(|(p, a)| Expr::prim(p, a)),
        ]
    })
}

use ineqcert::catalog::load_builtin;
use ineqcert::expr::{differentiate, eval_f64, eval_interval, eval_point, parse_expr_with, parse_inequality_with, print};
use ineqcert::hp::Hp;
use ineqcert::interval::Interval;
use ineqcert::scalar::Scalar;
use proptest::test_runner::{Config, TestRunner};

/// Expressions and points per expression in the containment fuzz.
pub const FUZZ_EXPRESSIONS: u32 = 1400;
pub const FUZZ_POINTS: usize = 100;
pub const FUZZ_MIN_SAMPLES: usize = 100_000;

/// Step and relative tolerance of the central-difference oracle.
pub const DIFF_STEP: f64 = 1e-5;
pub const DIFF_TOL: f64 = 1e-6;

fn outside(v: &Hp, enc: &Interval) -> bool {
    let below = enc.lo().is_finite() && v.sub(&Hp::from_f64(enc.lo())).to_f64() < -1e-30 * enc.lo().abs().max(1.0);
    let above = enc.hi().is_finite() && v.sub(&Hp::from_f64(enc.hi())).to_f64() > 1e-30 * enc.hi().abs().max(1.0);
    below || above
}

/// Random expressions over random input intervals; every evaluable sample
/// of the input must map into the interval result. Returns the number of
/// samples checked.
pub fn containment_fuzz() -> Result<usize, String> {
    let mut runner =
        TestRunner::new(Config { cases: FUZZ_EXPRESSIONS, failure_persistence: None, ..Config::default() });
    let width = prop_oneof![Just(0.0), 1e-12f64..1e-6, 1e-6f64..1.0];
    let input = (expr(), -3.0f64..3.0, width, proptest::collection::vec(0.0f64..=1.0, FUZZ_POINTS - 2));
    let counter = std::cell::Cell::new(0usize);
    runner
        .run(&input, |(e, c, w, mut t)| {
            t.extend([0.0, 1.0]);
            let x = Interval::new(c - w / 2.0, c + w / 2.0);
            let Ok(enc) = eval_interval(&e, &x) else { return Ok(()) };
            for s in t {
                let p = (x.lo() + s * (x.hi() - x.lo())).clamp(x.lo(), x.hi());
                let v = match eval_point(&e, &Hp::from_f64(p)) {
                    Ok(v) if !v.is_nan() => v,
                    _ => continue,
                };
                counter.set(counter.get() + 1);
                prop_assert!(!outside(&v, &enc), "{} at {}: {} outside {:?}", e, p, v.to_decimal(), enc);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let samples = counter.get();
    if samples < FUZZ_MIN_SAMPLES {
        return Err(format!("only {samples} samples were evaluable"));
    }
    Ok(samples)
}

/// Parses the printed form of every catalog statement and function back
/// to the same tree. Returns the number of items checked.
pub fn catalog_round_trip() -> Result<usize, String> {
    let cat = load_builtin();
    let env = ineqcert::catalog::constants::env();
    let mut n = 0;
    for r in &cat.inequalities {
        let text = r.stmt.to_string();
        let back = parse_inequality_with(&text, env).map_err(|e| format!("{}: {text}: {e}", r.id))?;
        if back != r.stmt {
            return Err(format!("{}: {text} parses to a different statement", r.id));
        }
        n += 1;
    }
    let funcs = cat
        .monotone
        .iter()
        .map(|m| &m.function)
        .chain(cat.roots.iter().map(|r| &r.function))
        .chain(cat.values.iter().map(|v| &v.function))
        .chain(cat.gaps.iter().flat_map(|g| [&g.function, &g.bound]));
    for f in funcs {
        let text = print(f);
        if parse_expr_with(&text, env).map_err(|e| format!("{text}: {e}"))? != *f {
            return Err(format!("{text} parses to a different tree"));
        }
        n += 1;
    }
    Ok(n)
}

/// Every catalog difference and monotone function with `n` interior grid
/// points of its domain.
pub fn catalog_samples(n: usize) -> Vec<(String, Expr, Vec<f64>)> {
    let cat = load_builtin();
    let grid = |a: f64, b: f64| (1..=n).map(|i| a + (b - a) * i as f64 / (n + 1) as f64).collect::<Vec<_>>();
    let mut out = Vec::new();
    for r in &cat.inequalities {
        let (lo, hi) = r.certified_domain();
        out.push((r.id.clone(), r.stmt.difference(), grid(lo.enclosure.hi(), hi.enclosure.lo())));
    }
    for m in &cat.monotone {
        out.push((m.id.to_string(), m.function.clone(), grid(m.domain.0.enclosure.hi(), m.domain.1.enclosure.lo())));
    }
    out
}

/// Symbolic derivative against a central difference computed in 192-bit
/// arithmetic. The error is relative to `max(|f'|, 1)`. Returns the number
/// of points checked.
pub fn derivative_oracle(points: usize) -> Result<usize, String> {
    let mut n = 0;
    for (id, e, xs) in catalog_samples(points) {
        let d = differentiate(&e);
        for x in xs {
            let (xp, xm) = (x + DIFF_STEP, x - DIFF_STEP);
            let (Ok(fp), Ok(fm)) = (eval_point(&e, &Hp::from_f64(xp)), eval_point(&e, &Hp::from_f64(xm))) else {
                continue;
            };
            let cd = fp.sub(&fm).to_f64() / (xp - xm);
            let exact = eval_f64(&d, x).map_err(|err| format!("{id} at {x}: {err}"))?;
            let err = (exact - cd).abs() / exact.abs().max(1.0);
            if !(err <= DIFF_TOL) {
                return Err(format!("{id} at {x}: derivative {exact}, central difference {cd}"));
            }
            n += 1;
        }
    }
    Ok(n)
}
