//! Orbit laws of the Seidel shift: periodicity, the weight-sum law, the
//! single-term Pieri identities realized by one shift step in either
//! direction, and existence of separating shifts.

use qgrass::partition::{BoxBound, Partition};
use qgrass::qring::{self, QClass, RingParams};
use qgrass::rational::{rat_int, rat_pow};
use qgrass::seidel;

fn boxes_with_n_up_to(max_n: u32) -> Vec<BoxBound> {
    let mut out = Vec::new();
    for m in 1..max_n {
        for k in 1..max_n {
            if m + k <= max_n {
                out.push(BoxBound::new(m, k).unwrap());
            }
        }
    }
    out
}

#[test]
fn period_and_weight_sum() {
    for bbox in boxes_with_n_up_to(9) {
        let n = bbox.n();
        let expected = bbox.k() * bbox.m() * n / 2;
        for lambda in Partition::all_in_box(&bbox) {
            assert_eq!(seidel::shift(&lambda, n as i64, &bbox).unwrap(), lambda);
            let orbit = seidel::orbit(&lambda, &bbox).unwrap();
            assert_eq!(orbit.weight_sum(), expected, "weight sum at {lambda}");
            assert_eq!(orbit.shifts()[0], lambda);
        }
    }
}

#[test]
fn shift_is_additive() {
    let bbox = BoxBound::new(3, 4).unwrap();
    for lambda in Partition::all_in_box(&bbox) {
        for a in -3i64..=9 {
            for b in -2i64..=8 {
                let step = seidel::shift(&lambda, a, &bbox).unwrap();
                let two_step = seidel::shift(&step, b, &bbox).unwrap();
                assert_eq!(
                    two_step,
                    seidel::shift(&lambda, a + b, &bbox).unwrap(),
                    "additivity failed at {lambda}, {a}, {b}"
                );
            }
        }
    }
}

#[test]
fn chern_shift_identity() {
    // c_m sigma_lambda = (alpha q)^((m + |lambda| - |lambda^1|)/n) sigma_{lambda^1},
    // with an integral exponent.
    for bbox in boxes_with_n_up_to(7) {
        let params = RingParams::new(bbox.m(), bbox.k(), rat_int(1)).unwrap();
        let (m, n) = (params.m(), params.n());
        for lambda in Partition::all_in_box(&bbox) {
            let shifted = seidel::shift(&lambda, 1, &bbox).unwrap();
            let numerator = m + lambda.weight() - shifted.weight();
            assert_eq!(numerator % n, 0, "non-integral exponent at {lambda}");
            let exponent = numerator / n;
            let expected = QClass::single(
                exponent,
                shifted,
                rat_pow(params.alpha(), exponent),
            );
            assert_eq!(
                qring::pieri_chern(m, &lambda, &params).unwrap(),
                expected,
                "Chern shift identity failed at {lambda}"
            );
        }
    }
}

#[test]
fn special_shift_identity() {
    // sigma_k sigma_lambda = (alpha q)^((k + |lambda| - |lambda down 1|)/n)
    // sigma_{lambda down 1}.
    for bbox in boxes_with_n_up_to(7) {
        let params = RingParams::new(bbox.m(), bbox.k(), rat_int(1)).unwrap();
        let (k, n) = (params.k(), params.n());
        for lambda in Partition::all_in_box(&bbox) {
            let shifted = seidel::shift(&lambda, -1, &bbox).unwrap();
            let numerator = k + lambda.weight() - shifted.weight();
            assert_eq!(numerator % n, 0, "non-integral exponent at {lambda}");
            let exponent = numerator / n;
            let expected = QClass::single(
                exponent,
                shifted,
                rat_pow(params.alpha(), exponent),
            );
            assert_eq!(
                qring::pieri_special(k, &lambda, &params).unwrap(),
                expected,
                "special shift identity failed at {lambda}"
            );
        }
    }
}

#[test]
fn separating_shift_always_exists() {
    for bbox in boxes_with_n_up_to(8) {
        let all = Partition::all_in_box(&bbox);
        for lambda in &all {
            for mu in &all {
                if lambda.weight() <= mu.weight() {
                    continue;
                }
                let (p, lw, mw) = seidel::find_separating_shift(lambda, mu, &bbox).unwrap();
                assert!(lw < mw);
                assert!(p < bbox.n());
                // Verify minimality of the witness.
                for earlier in 0..p {
                    let l = seidel::shift(lambda, earlier as i64, &bbox).unwrap();
                    let m_ = seidel::shift(mu, earlier as i64, &bbox).unwrap();
                    assert!(l.weight() >= m_.weight());
                }
            }
        }
    }
}
