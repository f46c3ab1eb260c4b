//! The LG(2,4) family: its positivity region is exactly `a <= b <= 2a`, the
//! whole two-parameter family is associative, and it degenerates to the
//! classical ring at q = 0. The flag-variety orbit table shows the
//! Grassmannian weight-sum law genuinely failing.

use num_traits::Signed;
use qgrass::exhibits::{self, LgElement};
use qgrass::partition::Permutation;
use qgrass::rational::{rat, rat_int, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn positivity_region_matches_closed_form() {
    // 41 x 41 rational grid over [-2, 2]^2 in steps of 1/10.
    for i in -20i64..=20 {
        for j in -20i64..=20 {
            let a = rat(i, 10);
            let b = rat(j, 10);
            let (nonnegative, witness) = exhibits::lg24_is_nonnegative(&a, &b);
            let in_cone = a <= b && b <= rat_int(2) * &a;
            assert_eq!(
                nonnegative, in_cone,
                "region mismatch at a = {a}, b = {b}"
            );
            match witness {
                Some((_, value)) => assert!(value.is_negative()),
                None => assert!(nonnegative),
            }
        }
    }
}

#[test]
fn family_is_associative_on_random_samples() {
    let mut rng = StdRng::seed_from_u64(0x2424_0001);
    for _ in 0..50 {
        let a = rat(rng.random_range(-30..=30), rng.random_range(1..=7));
        let b = rat(rng.random_range(-30..=30), rng.random_range(1..=7));
        assert!(
            exhibits::lg24_associativity(&a, &b),
            "associativity failed at a = {a}, b = {b}"
        );
    }
}

#[test]
fn classical_limit_is_parameter_free() {
    // Dropping every q-term from the table leaves the classical products
    // tau_1^2 = 2 tau_2, tau_1 tau_2 = tau_3, all others zero.
    let samples = [
        (rat_int(1), rat_int(1)),
        (rat(3, 2), rat(-7, 5)),
        (rat_int(0), rat_int(2)),
    ];
    for (a, b) in samples {
        for ((i, j), product) in exhibits::lg24_table(&a, &b) {
            let classical: Vec<(u32, u8, Rational)> = product
                .terms()
                .filter(|(d, _, _)| *d == 0)
                .map(|(d, t, c)| (d, t, c.clone()))
                .collect();
            let expected: Vec<(u32, u8, Rational)> = match (i, j) {
                (1, 1) => vec![(0, 2, rat_int(2))],
                (1, 2) => vec![(0, 3, rat_int(1))],
                _ => vec![],
            };
            assert_eq!(classical, expected, "classical limit at ({i},{j})");
        }
    }
}

#[test]
fn change_of_basis_predicate() {
    assert!(exhibits::lg24_is_change_of_basis(&rat_int(1), &rat(3, 2)));
    assert!(!exhibits::lg24_is_change_of_basis(&rat(1, 2), &rat_int(1)));
}

#[test]
fn quantum_point_squares_to_q2() {
    let one = rat_int(1);
    assert_eq!(
        exhibits::lg24_product(3, 3, &one, &one),
        LgElement::single(2, 0, one.clone())
    );
}

#[test]
fn flag_orbit_sums_break_the_grassmannian_law() {
    let identity_orbit = exhibits::flag_seidel_orbit(&Permutation::identity(6)).unwrap();
    let v_orbit = exhibits::flag_seidel_orbit(&"321654".parse().unwrap()).unwrap();
    let identity_sum: u32 = identity_orbit.iter().map(|(_, l)| *l).sum();
    let v_sum: u32 = v_orbit.iter().map(|(_, l)| *l).sum();
    assert_eq!(identity_sum, 35);
    assert_eq!(v_sum, 55);
    assert_ne!(identity_sum, v_sum);
}

#[test]
fn rotation_order_divides_into_orbits() {
    let t = exhibits::flag_shift_perm(6);
    let mut power = Permutation::identity(6);
    for r in 1..=6u32 {
        power = t.compose(&power);
        if r < 6 {
            assert_ne!(power, Permutation::identity(6), "t has order < 6 at {r}");
        }
    }
    assert_eq!(power, Permutation::identity(6));
}
