mod common;

use laguerre_cert::interval::{compare_strict, const_pi, Interval, Precision, StrictOrder};

#[test]
fn randomized_containment() {
    let tally = common::containment_suite(10_000, 0x5eed);
    assert_eq!(tally.cases, 10_000);
    assert!(tally.failures.is_empty(), "{:#?}", &tally.failures[..tally.failures.len().min(10)]);
}

#[test]
fn pythagorean_identity_far_out() {
    let bad = common::pythagoras_suite(100, 7);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn compare_strict_is_antisymmetric() {
    let p = Precision::new(64).unwrap();
    let pi = const_pi(p);
    let three = Interval::from_int(3);
    assert_eq!(compare_strict(&three, &pi), StrictOrder::Less);
    assert_eq!(compare_strict(&pi, &three), StrictOrder::Greater);
    assert_eq!(compare_strict(&pi, &pi), StrictOrder::Unknown);
}
