//! Acceptance suite: one test per shipping criterion, every check exact.
//! Each test prints a single `criterion N (...): PASS` line on success; any
//! failure panics with the offending instance.

use qgrass::deform::{self, CertificateReport, DeformationCoeffs, Violation};
use qgrass::exhibits::{self, LgElement};
use qgrass::partition::{BoxBound, Partition, Permutation};
use qgrass::qring::{self, QClass, RingParams};
use qgrass::rational::{rat, rat_int, rat_pow, Rational};
use qgrass::schur;
use qgrass::seidel;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

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

fn ring(bbox: &BoxBound, alpha: Rational) -> RingParams {
    RingParams::new(bbox.m(), bbox.k(), alpha).unwrap()
}

#[test]
fn criterion_1_pieri_oracle_equivalence() {
    for bbox in boxes_with_n_up_to(7) {
        let cap = 2 * bbox.m() * bbox.k();
        for alpha in [rat_int(0), rat_int(1), rat(7, 3)] {
            let params = ring(&bbox, alpha);
            let all = Partition::all_in_box(&bbox);
            for (i, lambda) in all.iter().enumerate() {
                for mu in &all[i..] {
                    let pieri = qring::multiply(
                        &QClass::sigma(lambda.clone()),
                        &QClass::sigma(mu.clone()),
                        &params,
                    )
                    .unwrap();
                    let f = schur::sigma_polynomial(lambda, &params)
                        * schur::sigma_polynomial(mu, &params);
                    let oracle = schur::normal_form(&f, &params, cap).unwrap();
                    assert_eq!(
                        pieri,
                        oracle,
                        "routes disagree at sigma[{lambda}] * sigma[{mu}] in ({}, {}), alpha = {}",
                        params.m(),
                        params.k(),
                        params.alpha()
                    );
                }
            }
        }
    }
    println!("criterion 1 (Pieri/oracle equivalence, n <= 7, alpha in {{0, 1, 7/3}}): PASS");
}

#[test]
fn criterion_2_giambelli_determinants() {
    for bbox in boxes_with_n_up_to(7) {
        let params = ring(&bbox, rat_int(1));
        for lambda in Partition::all_in_box(&bbox) {
            assert!(
                qring::giambelli_check(&lambda, &params).unwrap(),
                "Giambelli determinant failed at sigma[{lambda}] in ({}, {})",
                params.m(),
                params.k()
            );
        }
    }
    println!("criterion 2 (Giambelli determinant identity, n <= 7, alpha = 1): PASS");
}

#[test]
fn criterion_3_seidel_laws() {
    // Period n and the weight-sum law, exhaustively for n <= 9.
    for bbox in boxes_with_n_up_to(9) {
        let n = bbox.n();
        let expected_sum = bbox.k() * bbox.m() * n / 2;
        for lambda in Partition::all_in_box(&bbox) {
            assert_eq!(
                seidel::shift(&lambda, n as i64, &bbox).unwrap(),
                lambda,
                "period law failed at {lambda}"
            );
            assert_eq!(
                seidel::orbit(&lambda, &bbox).unwrap().weight_sum(),
                expected_sum,
                "weight-sum law failed at {lambda}"
            );
        }
    }
    // One shift step realizes multiplication by c_m and sigma_k, n <= 7.
    for bbox in boxes_with_n_up_to(7) {
        let params = ring(&bbox, rat_int(1));
        let (m, k, n) = (params.m(), params.k(), params.n());
        for lambda in Partition::all_in_box(&bbox) {
            let up = seidel::shift(&lambda, 1, &bbox).unwrap();
            let up_num = m + lambda.weight() - up.weight();
            assert_eq!(up_num % n, 0, "non-integral Chern exponent at {lambda}");
            let expected = QClass::single(up_num / n, up, rat_pow(params.alpha(), up_num / n));
            assert_eq!(
                qring::pieri_chern(m, &lambda, &params).unwrap(),
                expected,
                "Chern shift law failed at {lambda}"
            );
            let down = seidel::shift(&lambda, -1, &bbox).unwrap();
            let down_num = k + lambda.weight() - down.weight();
            assert_eq!(down_num % n, 0, "non-integral special exponent at {lambda}");
            let expected = QClass::single(
                down_num / n,
                down,
                rat_pow(params.alpha(), down_num / n),
            );
            assert_eq!(
                qring::pieri_special(k, &lambda, &params).unwrap(),
                expected,
                "special shift law failed at {lambda}"
            );
        }
    }
    println!("criterion 3 (Seidel period, weight sum, shift identities): PASS");
}

#[test]
fn criterion_4_positivity_cone() {
    // Non-negativity for alpha in {0, 1, 5/2}, every ordered pair, n <= 7.
    for bbox in boxes_with_n_up_to(7) {
        for alpha in [rat_int(0), rat_int(1), rat(5, 2)] {
            let params = ring(&bbox, alpha);
            let all = Partition::all_in_box(&bbox);
            for lambda in &all {
                for mu in &all {
                    let product = qring::multiply(
                        &QClass::sigma(lambda.clone()),
                        &QClass::sigma(mu.clone()),
                        &params,
                    )
                    .unwrap();
                    assert!(
                        !product.has_negative_coeff(),
                        "negative constant in sigma[{lambda}] * sigma[{mu}], alpha = {}",
                        params.alpha()
                    );
                }
            }
        }
    }
    // alpha = -1 produces the explicit negative witness c_m * sigma_k = -q.
    for bbox in boxes_with_n_up_to(7) {
        let params = ring(&bbox, rat_int(-1));
        let column = Partition::new(vec![1; bbox.m() as usize]).unwrap();
        let row = Partition::of(&[bbox.k()]);
        let witness = qring::multiply(
            &QClass::sigma(column),
            &QClass::sigma(row),
            &params,
        )
        .unwrap();
        assert_eq!(
            witness,
            QClass::single(1, Partition::empty(), rat_int(-1)),
            "missing negative witness in ({}, {})",
            bbox.m(),
            bbox.k()
        );
    }
    // Rescaling: constants at alpha = 3 are 3^d times those at alpha = 1, n <= 6.
    for bbox in boxes_with_n_up_to(6) {
        let base = ring(&bbox, rat_int(1));
        let scaled = ring(&bbox, rat_int(3));
        let all = Partition::all_in_box(&bbox);
        for (i, lambda) in all.iter().enumerate() {
            for mu in &all[i..] {
                let at_one = qring::multiply(
                    &QClass::sigma(lambda.clone()),
                    &QClass::sigma(mu.clone()),
                    &base,
                )
                .unwrap();
                let at_three = qring::multiply(
                    &QClass::sigma(lambda.clone()),
                    &QClass::sigma(mu.clone()),
                    &scaled,
                )
                .unwrap();
                assert_eq!(at_one.num_terms(), at_three.num_terms());
                for (d, nu, coeff) in at_one.terms() {
                    assert_eq!(
                        at_three.coeff(d, nu),
                        coeff * rat_pow(&rat_int(3), d),
                        "rescaling law failed at sigma[{lambda}] * sigma[{mu}], term q^{d} sigma[{nu}]"
                    );
                }
            }
        }
    }
    println!("criterion 4 (positivity cone, negative witness, rescaling law): PASS");
}

#[test]
fn criterion_5_uniqueness_certificates() {
    for bbox in boxes_with_n_up_to(8) {
        let params = ring(&bbox, rat_int(1));
        match deform::certify_positive_branch(&params).unwrap() {
            CertificateReport::Positive { pairs, .. } => {
                let admissible = deform::admissible_pairs(&params);
                assert_eq!(
                    pairs.len(),
                    admissible.len(),
                    "positive certificate must cover every admissible pair in ({}, {})",
                    bbox.m(),
                    bbox.k()
                );
                for cert in &pairs {
                    assert!(cert.e_prime < cert.d);
                }
            }
            _ => panic!("expected a positive-branch certificate"),
        }
    }
    for bbox in boxes_with_n_up_to(7) {
        let params = ring(&bbox, rat_int(0));
        match deform::certify_classical_branch(&params).unwrap() {
            CertificateReport::Classical {
                strip_maxima,
                dual_products,
                ..
            } => {
                let count = Partition::all_in_box(&bbox).len();
                assert_eq!(strip_maxima, count);
                assert_eq!(dual_products, count);
            }
            _ => panic!("expected a classical-branch certificate"),
        }
    }
    println!("criterion 5 (uniqueness certificates, positive n <= 8, classical n <= 7): PASS");
}

#[test]
fn criterion_6_desk_scale_theorem_instance() {
    let params = RingParams::new(2, 2, rat_int(1)).unwrap();
    let perturb = |t: Rational| {
        DeformationCoeffs::new(
            params.clone(),
            vec![(Partition::of(&[2, 2]), Partition::empty(), t)],
        )
        .unwrap()
    };
    for t in [rat(1, 2), rat_int(1), rat_int(2)] {
        let report = perturb(t.clone()).check_nonnegative().unwrap();
        let expected = Violation {
            lambda: Partition::of(&[1, 1]),
            mu: Partition::of(&[1, 1]),
            nu: Partition::empty(),
            d: 1,
            value: -t.clone(),
        };
        assert!(
            report.violations().contains(&expected),
            "missing violation N^{{-,1}} = -t for t = {t}"
        );
    }
    for t in [rat(-1, 2), rat_int(-1), rat_int(-2)] {
        let report = perturb(t.clone()).check_nonnegative().unwrap();
        let expected = Violation {
            lambda: Partition::of(&[2, 2]),
            mu: Partition::of(&[2, 2]),
            nu: Partition::of(&[2, 2]),
            d: 1,
            value: rat_int(2) * &t,
        };
        assert!(
            report.violations().contains(&expected),
            "missing violation N = 2t for t = {t}"
        );
    }
    let clean = perturb(rat_int(0)).check_nonnegative().unwrap();
    assert!(clean.is_nonnegative());
    println!("criterion 6 (desk-scale theorem instance on (2,2)): PASS");
}

#[test]
fn criterion_7_lg24_reproduction() {
    let (a1, b1) = (rat_int(1), rat_int(1));
    // The six products at the quantum point, pinned term by term.
    let table = exhibits::lg24_table(&a1, &b1);
    let mut tau1_tau2 = LgElement::tau(3);
    tau1_tau2.add_term(1, 0, rat_int(1));
    let expected: Vec<((u8, u8), LgElement)> = vec![
        ((1, 1), LgElement::single(0, 2, rat_int(2))),
        ((1, 2), tau1_tau2),
        ((1, 3), LgElement::single(1, 1, rat_int(1))),
        ((2, 2), LgElement::single(1, 1, rat_int(1))),
        ((2, 3), LgElement::single(1, 2, rat_int(1))),
        ((3, 3), LgElement::single(2, 0, rat_int(1))),
    ];
    assert_eq!(table, expected, "LG(2,4) table at (1,1)");
    // Generic-parameter spot checks of the same formulas.
    let (a, b) = (rat(3, 2), rat(-7, 5));
    assert_eq!(
        exhibits::lg24_product(1, 3, &a, &b),
        LgElement::single(1, 1, b.clone())
    );
    assert_eq!(
        exhibits::lg24_product(2, 2, &a, &b),
        LgElement::single(1, 1, a.clone())
    );
    assert_eq!(
        exhibits::lg24_product(2, 3, &a, &b),
        LgElement::single(1, 2, b.clone())
    );
    {
        let mut expected = LgElement::tau(3);
        expected.add_term(1, 0, rat_int(2) * &a - &b);
        assert_eq!(exhibits::lg24_product(1, 2, &a, &b), expected);
        let mut square = LgElement::single(1, 3, rat_int(2) * &b - rat_int(2) * &a);
        square.add_term(2, 0, rat_int(2) * &a * &b - &b * &b);
        assert_eq!(exhibits::lg24_product(3, 3, &a, &b), square);
    }
    // Non-negativity is exactly the closed cone on the rational grid.
    for i in -20i64..=20 {
        for j in -20i64..=20 {
            let a = rat(i, 10);
            let b = rat(j, 10);
            let (nonnegative, _) = exhibits::lg24_is_nonnegative(&a, &b);
            assert_eq!(
                nonnegative,
                a <= b && b <= rat_int(2) * &a,
                "cone mismatch at ({a}, {b})"
            );
        }
    }
    // Associativity on 50 random rational samples.
    let mut rng = StdRng::seed_from_u64(0xacce_0007);
    for _ in 0..50 {
        let a = rat(rng.random_range(-30..=30), rng.random_range(1..=7));
        let b = rat(rng.random_range(-30..=30), rng.random_range(1..=7));
        assert!(
            exhibits::lg24_associativity(&a, &b),
            "associativity failed at ({a}, {b})"
        );
    }
    println!("criterion 7 (LG(2,4) table, cone, associativity): PASS");
}

#[test]
fn criterion_8_flag_orbit_table() {
    let identity_orbit = exhibits::flag_seidel_orbit(&Permutation::identity(6)).unwrap();
    let rows: Vec<(String, u32)> = identity_orbit
        .iter()
        .map(|(w, l)| (w.to_string(), *l))
        .collect();
    assert_eq!(
        rows,
        vec![
            ("123456".to_string(), 0),
            ("612345".to_string(), 5),
            ("561234".to_string(), 8),
            ("456123".to_string(), 9),
            ("345612".to_string(), 8),
            ("234561".to_string(), 5),
        ]
    );
    let v_orbit = exhibits::flag_seidel_orbit(&"321654".parse().unwrap()).unwrap();
    let rows: Vec<(String, u32)> = v_orbit.iter().map(|(w, l)| (w.to_string(), *l)).collect();
    assert_eq!(
        rows,
        vec![
            ("321654".to_string(), 6),
            ("216543".to_string(), 7),
            ("165432".to_string(), 10),
            ("654321".to_string(), 15),
            ("543216".to_string(), 10),
            ("432165".to_string(), 7),
        ]
    );
    let sum_e: u32 = identity_orbit.iter().map(|(_, l)| *l).sum();
    let sum_v: u32 = v_orbit.iter().map(|(_, l)| *l).sum();
    assert_eq!((sum_e, sum_v), (35, 55));
    println!("criterion 8 (GL(6)/B orbit table, sums 35 vs 55): PASS");
}

#[test]
fn criterion_9_algebra_axioms() {
    // Commutativity, exhaustively over ordered pairs for n <= 7. The two
    // orders run through different determinant expansions, so this is a
    // genuine identity check.
    for bbox in boxes_with_n_up_to(7) {
        for alpha in [rat_int(0), rat_int(1), rat(7, 3)] {
            let params = ring(&bbox, alpha);
            let all = Partition::all_in_box(&bbox);
            for (i, lambda) in all.iter().enumerate() {
                for mu in &all[i..] {
                    let forward = qring::multiply(
                        &QClass::sigma(lambda.clone()),
                        &QClass::sigma(mu.clone()),
                        &params,
                    )
                    .unwrap();
                    let backward = qring::multiply(
                        &QClass::sigma(mu.clone()),
                        &QClass::sigma(lambda.clone()),
                        &params,
                    )
                    .unwrap();
                    assert_eq!(
                        forward, backward,
                        "commutativity failed at sigma[{lambda}], sigma[{mu}]"
                    );
                }
            }
        }
    }
    // Associativity on 200 random basis triples per ring, n <= 6.
    let mut rng = StdRng::seed_from_u64(0xacce_0009);
    for bbox in boxes_with_n_up_to(6) {
        for alpha in [rat_int(0), rat_int(1), rat(7, 3)] {
            let params = ring(&bbox, alpha);
            let all = Partition::all_in_box(&bbox);
            for _ in 0..200 {
                let x = QClass::sigma(all[rng.random_range(0..all.len())].clone());
                let y = QClass::sigma(all[rng.random_range(0..all.len())].clone());
                let z = QClass::sigma(all[rng.random_range(0..all.len())].clone());
                let left = qring::multiply(&qring::multiply(&x, &y, &params).unwrap(), &z, &params)
                    .unwrap();
                let right =
                    qring::multiply(&x, &qring::multiply(&y, &z, &params).unwrap(), &params)
                        .unwrap();
                assert_eq!(left, right, "associativity failed in ({}, {})", bbox.m(), bbox.k());
            }
        }
    }
    println!("criterion 9 (commutativity exhaustive, associativity sampled): PASS");
}
