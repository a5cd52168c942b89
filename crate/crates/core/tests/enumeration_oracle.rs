//! The bounded enumeration against a naive scan in machine rationals.

#[path = "support/brute_force.rs"]
mod brute_force;

use brute_force::compare_at;
use tiltwall::chern::TruncatedClass;
use tiltwall::rational::{q, qi};

fn v2() -> TruncatedClass {
    TruncatedClass::from_ints(3, 0, -1, 1)
}

#[test]
fn agrees_at_top_of_first_wall() {
    assert_eq!(compare_at(&q(-5, 6), &q(1, 36), &v2()), Ok(12));
}

#[test]
fn agrees_on_line_beta_minus_one() {
    for a2 in [q(1, 36), q(1, 4), qi(1)] {
        assert_eq!(compare_at(&qi(-1), &a2, &v2()), Ok(0));
    }
}

#[test]
fn agrees_for_other_classes() {
    let f_l = TruncatedClass::from_ints(3, -1, -1, 2);
    compare_at(&q(-1, 2), &q(1, 8), &f_l).unwrap();
    compare_at(&q(1, 2), &q(1, 16), &f_l).unwrap();
    compare_at(&q(-1, 3), &q(1, 9), &TruncatedClass::from_ints(2, 0, -1, 1)).unwrap();
}
