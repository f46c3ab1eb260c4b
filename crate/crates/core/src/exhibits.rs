//! Two self-contained worked families outside the Grassmannian box calculus:
//! the Lagrangian `LG(2,4)` two-parameter deformation family, where the
//! positivity cone is a genuine region rather than a point, and the Seidel
//! orbit table on `GL(6)/B` permutations, where the orbit weight-sum law of
//! the Grassmannian fails.

use crate::error::{Error, Result};
use crate::partition::Permutation;
use crate::rational::{format_rational, rat_int, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An element of the `LG(2,4)` family ring: a sum of terms
/// `coeff * q^d * tau_i` with basis labels `tau_0..tau_3` of degrees 0..3
/// and `deg q = 4`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LgElement {
    terms: BTreeMap<(u32, u8), Rational>,
}

impl LgElement {
    pub fn zero() -> Self {
        LgElement::default()
    }

    pub fn tau(i: u8) -> Self {
        LgElement::single(0, i, Rational::one())
    }

    pub fn single(d: u32, i: u8, coeff: Rational) -> Self {
        assert!(i < 4, "basis labels are tau_0..tau_3");
        let mut out = LgElement::zero();
        out.add_term(d, i, coeff);
        out
    }

    pub fn add_term(&mut self, d: u32, i: u8, coeff: Rational) {
        assert!(i < 4, "basis labels are tau_0..tau_3");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((d, i)) {
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LgElement, scale: &Rational, q_shift: u32) {
        if scale.is_zero() {
            return;
        }
        for ((d, i), coeff) in &other.terms {
            self.add_term(d + q_shift, *i, coeff * scale);
        }
    }

    pub fn coeff(&self, d: u32, i: u8) -> Rational {
        self.terms
            .get(&(d, i))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u8, &Rational)> {
        self.terms.iter().map(|((d, i), c)| (*d, *i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((d, i), coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !coeff.is_one() {
                write!(f, "{}*", format_rational(coeff))?;
            }
            match d {
                0 => {}
                1 => write!(f, "q*")?,
                _ => write!(f, "q^{d}*")?,
            }
            write!(f, "tau{i}")?;
        }
        Ok(())
    }
}

/// The product `tau_i * tau_j` in the `(a, b)` member of the family. The six
/// non-unit products are hard-coded; `tau_0` is the unit.
pub fn lg24_product(i: u8, j: u8, a: &Rational, b: &Rational) -> LgElement {
    assert!(i < 4 && j < 4, "basis labels are tau_0..tau_3");
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    let two = rat_int(2);
    match (i, j) {
        (0, _) => LgElement::tau(j),
        (1, 1) => LgElement::single(0, 2, two),
        (1, 2) => {
            // tau_3 + (2a - b) q
            let mut out = LgElement::tau(3);
            out.add_term(1, 0, &two * a - b);
            out
        }
        (1, 3) => LgElement::single(1, 1, b.clone()),
        (2, 2) => LgElement::single(1, 1, a.clone()),
        (2, 3) => LgElement::single(1, 2, b.clone()),
        (3, 3) => {
            // (2b - 2a) q tau_3 + (2ab - b^2) q^2
            let mut out = LgElement::single(1, 3, &two * b - &two * a);
            out.add_term(2, 0, &two * a * b - b * b);
            out
        }
        _ => unreachable!("i <= j < 4"),
    }
}

/// Bilinear extension of [`lg24_product`] to arbitrary elements.
pub fn lg24_mul(x: &LgElement, y: &LgElement, a: &Rational, b: &Rational) -> LgElement {
    let mut out = LgElement::zero();
    for (dx, ix, cx) in x.terms() {
        for (dy, iy, cy) in y.terms() {
            let product = lg24_product(ix, iy, a, b);
            out.add_scaled(&product, &(cx * cy), dx + dy);
        }
    }
    out
}

/// The six non-unit products `(i, j) -> tau_i tau_j` for `1 <= i <= j <= 3`.
pub fn lg24_table(a: &Rational, b: &Rational) -> Vec<((u8, u8), LgElement)> {
    let mut out = Vec::with_capacity(6);
    for i in 1..=3u8 {
        for j in i..=3u8 {
            out.push(((i, j), lg24_product(i, j, a, b)));
        }
    }
    out
}

/// Whether every coefficient of the multiplication table is non-negative.
/// On failure returns the first offending coefficient, labeled by its
/// closed-form expression, scanning the table in product order. The outcome
/// agrees with the closed condition `a <= b <= 2a`.
pub fn lg24_is_nonnegative(a: &Rational, b: &Rational) -> (bool, Option<(String, Rational)>) {
    let two = rat_int(2);
    let candidates: [(&str, Rational); 6] = [
        ("2a-b", &two * a - b),
        ("b", b.clone()),
        ("a", a.clone()),
        ("b", b.clone()),
        ("2b-2a", &two * b - &two * a),
        ("2ab-b^2", &two * a * b - b * b),
    ];
    for (label, value) in candidates {
        if value.is_negative() {
            return (false, Some((label.to_string(), value)));
        }
    }
    (true, None)
}

/// The family member is a change-of-basis deformation of the classical ring
/// exactly when `a = 1`: the parameter `a` normalizes `tau_2^2 = a q tau_1`
/// against the fixed quantum relation, while `b` moves within the basis.
pub fn lg24_is_change_of_basis(a: &Rational, _b: &Rational) -> bool {
    a.is_one()
}

/// Exact associativity check of all 64 basis triples for one `(a, b)`.
pub fn lg24_associativity(a: &Rational, b: &Rational) -> bool {
    for i in 0..4u8 {
        for j in 0..4u8 {
            for l in 0..4u8 {
                let left = lg24_mul(&lg24_product(i, j, a, b), &LgElement::tau(l), a, b);
                let right = lg24_mul(&LgElement::tau(i), &lg24_product(j, l, a, b), a, b);
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// The rotation `t = (n, 1, 2, ..., n-1)` driving the flag-variety orbit.
pub fn flag_shift_perm(n: u32) -> Permutation {
    let mut values = Vec::with_capacity(n as usize);
    values.push(n);
    values.extend(1..n);
    Permutation::new(values).expect("rotation is a bijection")
}

/// The Seidel-style orbit of a permutation on the complete flag variety:
/// `w^r = t^r w` with lengths by inversion count, for `r = 0..n-1`.
pub fn flag_seidel_orbit(w: &Permutation) -> Result<Vec<(Permutation, u32)>> {
    let n = w.n();
    if n == 0 {
        return Err(Error::InvalidPermutation("empty permutation".into()));
    }
    let t = flag_shift_perm(n);
    let mut out = Vec::with_capacity(n as usize);
    let mut current = w.clone();
    for _ in 0..n {
        let length = current.length();
        out.push((current.clone(), length));
        current = t.compose(&current);
    }
    Ok(out)
}
