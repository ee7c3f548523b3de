mod common;

use ineqcert::expr::{eval_interval, eval_point, parse_expr, print};
use ineqcert::hp::Hp;
use ineqcert::interval::Interval;
use ineqcert::scalar::Scalar;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn print_parse_round_trip(e in common::expr()) {
        let text = print(&e);
        let back = parse_expr(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
    }

    #[test]
    fn printing_is_idempotent(e in common::expr()) {
        let once = print(&e);
        prop_assert_eq!(print(&parse_expr(&once).unwrap()), once);
    }
}

#[test]
fn catalog_statements_round_trip() {
    common::catalog_round_trip().unwrap();
}

#[test]
fn derivative_matches_central_difference() {
    common::derivative_oracle(40).unwrap();
}

#[test]
fn interval_evaluation_contains_point_evaluation() {
    for (id, e, xs) in common::catalog_samples(200) {
        for w in xs.windows(2) {
            let cell = Interval::new(w[0], w[1]);
            let enc = eval_interval(&e, &cell).unwrap_or_else(|err| panic!("{id} on {cell:?}: {err}"));
            for x in [w[0], cell.mid(), w[1]] {
                let v = eval_point(&e, &Hp::from_f64(x)).unwrap().to_f64();
                assert!(enc.contains(v), "{id}: {v} at {x} outside {enc:?}");
            }
        }
    }
}
