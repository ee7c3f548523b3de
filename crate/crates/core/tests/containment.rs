//! Interval evaluation must enclose the 192-bit point value at every
//! sample of the input interval.

mod common;

#[test]
fn interval_evaluation_encloses_point_values() {
    let n = common::containment_fuzz().unwrap();
    println!("{n} containment samples");
}
