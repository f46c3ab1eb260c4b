//! Ring-level properties of the quantum Pieri/Giambelli product: agreement
//! with the ideal-normal-form oracle on small rings, the Witten relation,
//! the Chern-class power law, and homogeneity.

use qgrass::partition::Partition;
use qgrass::qring::{self, QClass, RingParams};
use qgrass::rational::{rat, rat_int, rat_pow, Rational};
use qgrass::schur;

fn ring(m: u32, k: u32, alpha: Rational) -> RingParams {
    RingParams::new(m, k, alpha).unwrap()
}

/// Product of two basis classes through the independent linear-algebra route.
fn oracle_product(lambda: &Partition, mu: &Partition, params: &RingParams) -> QClass {
    let f = schur::sigma_polynomial(lambda, params) * schur::sigma_polynomial(mu, params);
    let cap = 2 * params.m() * params.k();
    schur::normal_form(&f, params, cap.max(schur::default_degree_cap(params))).unwrap()
}

#[test]
fn oracle_agreement_on_small_rings() {
    for (m, k, alpha) in [
        (2u32, 2u32, rat_int(1)),
        (2, 2, rat_int(0)),
        (2, 2, rat(7, 3)),
        (1, 3, rat(7, 3)),
        (3, 1, rat_int(1)),
        (2, 3, rat(7, 3)),
    ] {
        let params = ring(m, k, alpha);
        let all = Partition::all_in_box(&params.bbox());
        for lambda in &all {
            for mu in &all {
                let pieri = qring::multiply(
                    &QClass::sigma(lambda.clone()),
                    &QClass::sigma(mu.clone()),
                    &params,
                )
                .unwrap();
                let oracle = oracle_product(lambda, mu, &params);
                assert_eq!(
                    pieri, oracle,
                    "disagreement at sigma[{lambda}] * sigma[{mu}] in ({m},{k})"
                );
            }
        }
    }
}

#[test]
fn witten_relation() {
    for (m, k, alpha) in [
        (2u32, 2u32, rat_int(1)),
        (2, 3, rat(5, 2)),
        (3, 2, rat_int(0)),
        (1, 4, rat_int(3)),
        (4, 1, rat(7, 3)),
    ] {
        let params = ring(m, k, alpha.clone());
        let column = Partition::new(vec![1; m as usize]).unwrap();
        let row = Partition::of(&[k]);
        let product = qring::multiply(
            &QClass::sigma(column),
            &QClass::sigma(row),
            &params,
        )
        .unwrap();
        assert_eq!(
            product,
            QClass::single(1, Partition::empty(), alpha),
            "c_m * sigma_k != alpha q in ({m},{k})"
        );
    }
}

#[test]
fn chern_power_law() {
    // c_m^n = (alpha q)^m, computed by repeated Pieri multiplication.
    for m in 1u32..=6 {
        for k in 1u32..=6 {
            if m + k > 7 {
                continue;
            }
            let alpha = rat(5, 2);
            let params = ring(m, k, alpha.clone());
            let mut class = QClass::one();
            for _ in 0..params.n() {
                let mut next = QClass::zero();
                for (d, lam, coeff) in class.terms() {
                    let step = qring::pieri_chern(m, lam, &params).unwrap();
                    next.add_scaled(&step, coeff, d);
                }
                class = next;
            }
            let expected = QClass::single(m, Partition::empty(), rat_pow(&alpha, m));
            assert_eq!(class, expected, "c_m^n != (alpha q)^m in ({m},{k})");
        }
    }
}

#[test]
fn products_are_homogeneous() {
    for (m, k) in [(2u32, 2u32), (2, 3), (3, 2)] {
        let params = ring(m, k, rat(7, 3));
        let all = Partition::all_in_box(&params.bbox());
        for lambda in &all {
            for mu in &all {
                let product = qring::multiply(
                    &QClass::sigma(lambda.clone()),
                    &QClass::sigma(mu.clone()),
                    &params,
                )
                .unwrap();
                assert!(
                    product.is_homogeneous_of(params.n(), lambda.weight() + mu.weight()),
                    "inhomogeneous product sigma[{lambda}] * sigma[{mu}]"
                );
            }
        }
    }
}

#[test]
fn unit_and_out_of_box_errors() {
    let params = ring(2, 2, rat_int(1));
    let x = QClass::single(2, Partition::of(&[2, 1]), rat(3, 5));
    assert_eq!(qring::multiply(&QClass::one(), &x, &params).unwrap(), x);
    let bad = QClass::sigma(Partition::of(&[3]));
    assert!(qring::multiply(&bad, &x, &params).is_err());
    assert!(qring::multiply(&x, &bad, &params).is_err());
}
