//! The ring family `QH_alpha` on the basis `{q^d sigma_lambda}`: quantum
//! Pieri multiplication by special classes, general products driven by the
//! conjugate Giambelli determinant, structure constants, and the Giambelli
//! determinant identity checker.
//!
//! Products are computed purely combinatorially (strips and rim removals);
//! the `schur` module provides an independent linear-algebra route used to
//! cross-validate everything here.

use crate::error::{Error, Result};
use crate::partition::{BoxBound, Partition, RimMode};
use crate::rational::{format_rational, rat_int, Rational};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// Parameters of one member of the ring family: an `m x k` box and the
/// deformation scalar `alpha`. The quantum parameter `q` has degree `n = m + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingParams {
    m: u32,
    k: u32,
    alpha: Rational,
}

impl RingParams {
    pub fn new(m: u32, k: u32, alpha: Rational) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::InvalidParams(format!(
                "need m >= 1 and k >= 1, got m = {m}, k = {k}"
            )));
        }
        Ok(RingParams { m, k, alpha })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.m + self.k
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn bbox(&self) -> BoxBound {
        BoxBound::new(self.m, self.k).expect("params are validated")
    }
}

type ParamsKey = (u32, u32, Rational);

fn params_key(params: &RingParams) -> ParamsKey {
    (params.m, params.k, params.alpha.clone())
}

/// A ring element: a finite sum of basis terms `coeff * q^d * sigma_lambda`
/// with exact rational coefficients. Zero coefficients are never stored, and
/// terms iterate in canonical order (ascending `d`, then degree-lex `lambda`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QClass {
    terms: BTreeMap<(u32, Partition), Rational>,
}

impl QClass {
    pub fn zero() -> Self {
        QClass::default()
    }

    /// The unit `sigma` of the empty partition.
    pub fn one() -> Self {
        QClass::sigma(Partition::empty())
    }

    pub fn sigma(lambda: Partition) -> Self {
        QClass::single(0, lambda, Rational::one())
    }

    pub fn single(d: u32, lambda: Partition, coeff: Rational) -> Self {
        let mut out = QClass::zero();
        out.add_term(d, lambda, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: u32, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((d, lambda)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Partition, &Rational)> {
        self.terms.iter().map(|((d, l), c)| (*d, l, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, d: u32, lambda: &Partition) -> Rational {
        self.terms
            .get(&(d, lambda.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `scale * q^q_shift * other` into `self`.
    pub fn add_scaled(&mut self, other: &QClass, scale: &Rational, q_shift: u32) {
        if scale.is_zero() {
            return;
        }
        for ((d, lambda), coeff) in &other.terms {
            self.add_term(d + q_shift, lambda.clone(), coeff * scale);
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for coeff in self.terms.values_mut() {
            *coeff *= factor;
        }
    }

    /// The unique term `(coeff, d, lambda)` when the class consists of
    /// exactly one basis term.
    pub fn is_single_term(&self) -> Option<(Rational, u32, Partition)> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((d, lambda), coeff) = self.terms.iter().next().expect("one term");
        Some((coeff.clone(), *d, lambda.clone()))
    }

    /// True when every term satisfies `d*n + |lambda| = total`. The zero
    /// class is homogeneous of every degree.
    pub fn is_homogeneous_of(&self, n: u32, total: u32) -> bool {
        self.terms
            .keys()
            .all(|(d, lambda)| d * n + lambda.weight() == total)
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Stable JSON form: a list of `{"d": .., "lambda": [..], "coeff": "p/q"}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((d, lambda), coeff)| {
                json!({
                    "d": d,
                    "lambda": lambda.parts(),
                    "coeff": format_rational(coeff),
                })
            })
            .collect();
        Value::Array(terms)
    }
}

impl fmt::Display for QClass {
    /// Renders e.g. `sigma[2,2] + q*sigma[-]` or `3/2*q^2*sigma[1]`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((d, lambda), coeff) in &self.terms {
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
            write!(f, "sigma[{lambda}]")?;
        }
        Ok(())
    }
}

fn check_in_box(lambda: &Partition, params: &RingParams) -> Result<()> {
    if lambda.fits_in(&params.bbox()) {
        Ok(())
    } else {
        Err(Error::OutOfBox {
            partition: lambda.to_string(),
            m: params.m,
            k: params.k,
        })
    }
}

fn check_class(x: &QClass, params: &RingParams) -> Result<()> {
    for (_, lambda, _) in x.terms() {
        check_in_box(lambda, params)?;
    }
    Ok(())
}

/// Multiplication by the Chern class `c_p = sigma_(1^p)`: add all vertical
/// `p`-strips inside the box, and when the first row is full, add `alpha q`
/// times every rim removal of `n - p` boxes meeting each column.
pub fn pieri_chern(p: u32, lambda: &Partition, params: &RingParams) -> Result<QClass> {
    if p == 0 || p > params.m {
        return Err(Error::IndexOutOfRange { p, max: params.m });
    }
    check_in_box(lambda, params)?;
    let key = (params_key(params), p, lambda.clone());
    let cache = pieri_chern_cache();
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let bbox = params.bbox();
    let mut out = QClass::zero();
    for mu in lambda.add_vertical_strips(p, params.m) {
        if mu.fits_in(&bbox) {
            out.add_term(0, mu, Rational::one());
        }
    }
    if lambda.first_part() == params.k {
        for nu in lambda.rim_removals(params.n() - p, RimMode::EachColumn)? {
            out.add_term(1, nu, params.alpha.clone());
        }
    }
    cache
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert_with(|| out.clone());
    Ok(out)
}

/// Multiplication by the special class `sigma_p` (one row of `p` boxes):
/// horizontal `p`-strips inside the box, plus `alpha q` times every rim
/// removal of `n - p` boxes meeting each nonempty row when the diagram has
/// the full `m` rows.
pub fn pieri_special(p: u32, lambda: &Partition, params: &RingParams) -> Result<QClass> {
    if p == 0 || p > params.k {
        return Err(Error::IndexOutOfRange { p, max: params.k });
    }
    check_in_box(lambda, params)?;
    let key = (params_key(params), p, lambda.clone());
    let cache = pieri_special_cache();
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let bbox = params.bbox();
    let mut out = QClass::zero();
    for mu in lambda.add_horizontal_strips(p, &bbox) {
        out.add_term(0, mu, Rational::one());
    }
    if lambda.len() as u32 == params.m {
        for nu in lambda.rim_removals(params.n() - p, RimMode::EachRow)? {
            out.add_term(1, nu, params.alpha.clone());
        }
    }
    cache
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert_with(|| out.clone());
    Ok(out)
}

fn apply_chern(p: u32, class: &QClass, params: &RingParams) -> Result<QClass> {
    let mut out = QClass::zero();
    for (d, lambda, coeff) in class.terms() {
        let step = pieri_chern(p, lambda, params)?;
        out.add_scaled(&step, coeff, d);
    }
    Ok(out)
}

fn apply_special(p: u32, class: &QClass, params: &RingParams) -> Result<QClass> {
    let mut out = QClass::zero();
    for (d, lambda, coeff) in class.terms() {
        let step = pieri_special(p, lambda, params)?;
        out.add_scaled(&step, coeff, d);
    }
    Ok(out)
}

/// Visits every permutation of `0..r` together with its sign.
fn for_each_permutation<F: FnMut(&[usize], i64)>(r: usize, f: &mut F) {
    fn rec<F: FnMut(&[usize], i64)>(
        r: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        sign: i64,
        f: &mut F,
    ) {
        if current.len() == r {
            f(current, sign);
            return;
        }
        // Inserting value v after the already-placed values flips the sign
        // once per larger value already placed.
        for v in 0..r {
            if used[v] {
                continue;
            }
            let flips = current.iter().filter(|&&u| u > v).count();
            let new_sign = if flips % 2 == 0 { sign } else { -sign };
            used[v] = true;
            current.push(v);
            rec(r, used, current, new_sign, f);
            current.pop();
            used[v] = false;
        }
    }
    let mut used = vec![false; r];
    let mut current = Vec::with_capacity(r);
    rec(r, &mut used, &mut current, 1, f);
}

/// The conjugate Giambelli expansion of `sigma_mu` as a signed sum of
/// Chern-class monomials: the determinant `det(c_{mu'_i + j - i})` collected
/// by the multiset of factor indices. Entries with index above `m` vanish.
fn chern_expansion(mu: &Partition, m: u32) -> BTreeMap<Vec<u32>, i64> {
    let key = (m, mu.clone());
    let cache = chern_expansion_cache();
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let conj = mu.conjugate();
    let r = conj.len();
    let mut map: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for_each_permutation(r, &mut |perm, sign| {
        let mut factors = Vec::with_capacity(r);
        for (i, &w) in perm.iter().enumerate() {
            let s = conj[i] as i64 + w as i64 - i as i64;
            if s < 0 || s > m as i64 {
                return;
            }
            if s > 0 {
                factors.push(s as u32);
            }
        }
        factors.sort_unstable();
        *map.entry(factors).or_insert(0) += sign;
    });
    map.retain(|_, coeff| *coeff != 0);
    cache
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert_with(|| map.clone());
    map
}

/// The basis product `sigma_lambda * sigma_mu`, memoized per ring and pair.
fn sigma_product(lambda: &Partition, mu: &Partition, params: &RingParams) -> Result<QClass> {
    let key = (params_key(params), lambda.clone(), mu.clone());
    let cache = sigma_product_cache();
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let expansion = chern_expansion(mu, params.m);
    let mut out = QClass::zero();
    for (factors, coeff) in &expansion {
        let mut class = QClass::sigma(lambda.clone());
        for &s in factors {
            class = apply_chern(s, &class, params)?;
        }
        out.add_scaled(&class, &rat_int(*coeff), 0);
    }
    cache
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert_with(|| out.clone());
    Ok(out)
}

/// The bilinear product of two ring elements over the same parameters.
pub fn multiply(x: &QClass, y: &QClass, params: &RingParams) -> Result<QClass> {
    check_class(x, params)?;
    check_class(y, params)?;
    let mut out = QClass::zero();
    for (dx, lx, cx) in x.terms() {
        for (dy, ly, cy) in y.terms() {
            let prod = sigma_product(lx, ly, params)?;
            out.add_scaled(&prod, &(cx * cy), dx + dy);
        }
    }
    Ok(out)
}

/// Structure constants `N^{nu,d}_{lambda,mu}` indexed by `(lambda, mu, nu, d)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureConstantTable {
    entries: BTreeMap<(Partition, Partition, Partition, u32), Rational>,
}

impl StructureConstantTable {
    pub fn insert(&mut self, lambda: Partition, mu: Partition, nu: Partition, d: u32, n: Rational) {
        if !n.is_zero() {
            self.entries.insert((lambda, mu, nu, d), n);
        }
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition, nu: &Partition, d: u32) -> Rational {
        self.entries
            .get(&(lambda.clone(), mu.clone(), nu.clone(), d))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(
        &self,
    ) -> impl Iterator<Item = (&(Partition, Partition, Partition, u32), &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The structure-constant slice of one basis product.
pub fn structure_constants(
    lambda: &Partition,
    mu: &Partition,
    params: &RingParams,
) -> Result<StructureConstantTable> {
    check_in_box(lambda, params)?;
    check_in_box(mu, params)?;
    let product = multiply(&QClass::sigma(lambda.clone()), &QClass::sigma(mu.clone()), params)?;
    let mut table = StructureConstantTable::default();
    for (d, nu, coeff) in product.terms() {
        table.insert(lambda.clone(), mu.clone(), nu.clone(), d, coeff.clone());
    }
    Ok(table)
}

/// The full table over every ordered pair of basis partitions, optionally
/// restricted to pairs with `|lambda| + |mu| <= max_total_degree`.
pub fn full_structure_table(
    params: &RingParams,
    max_total_degree: Option<u32>,
) -> Result<StructureConstantTable> {
    let all = Partition::all_in_box(&params.bbox());
    let mut table = StructureConstantTable::default();
    for lambda in &all {
        for mu in &all {
            if let Some(cap) = max_total_degree {
                if lambda.weight() + mu.weight() > cap {
                    continue;
                }
            }
            let slice = structure_constants(lambda, mu, params)?;
            for ((l, m_, nu, d), value) in slice.iter() {
                table.insert(l.clone(), m_.clone(), nu.clone(), *d, value.clone());
            }
        }
    }
    Ok(table)
}

/// Evaluates the `m x m` Giambelli determinant `det(sigma_{lambda_i + j - i})`
/// through iterated special-class multiplication and reports whether it
/// reproduces `sigma_lambda`. Special indices follow the defining relations:
/// `sigma_s` vanishes for `k < s < n` and `sigma_n` contributes
/// `(-1)^(m-1) alpha q`; indices above `n` are rejected.
pub fn giambelli_check(lambda: &Partition, params: &RingParams) -> Result<bool> {
    check_in_box(lambda, params)?;
    let m = params.m as usize;
    let n = params.n();
    let k = params.k;
    let mut acc = QClass::zero();
    let mut failure: Option<Error> = None;
    for_each_permutation(m, &mut |perm, sign| {
        if failure.is_some() {
            return;
        }
        let mut coeff = rat_int(sign);
        let mut q_power = 0u32;
        let mut specials: Vec<u32> = Vec::with_capacity(m);
        for (i, &w) in perm.iter().enumerate() {
            let s = lambda[i] as i64 + w as i64 - i as i64;
            if s < 0 {
                return;
            }
            let s = s as u32;
            if s == 0 {
                continue;
            } else if s <= k {
                specials.push(s);
            } else if s < n {
                return;
            } else if s == n {
                let sign_alpha = if params.m % 2 == 1 {
                    params.alpha.clone()
                } else {
                    -params.alpha.clone()
                };
                coeff *= sign_alpha;
                q_power += 1;
            } else {
                failure = Some(Error::SpecialIndexTooLarge { s, n });
                return;
            }
        }
        let mut class = QClass::single(q_power, Partition::empty(), coeff);
        for &s in &specials {
            match apply_special(s, &class, params) {
                Ok(next) => class = next,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
        acc.add_scaled(&class, &Rational::one(), 0);
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(acc == QClass::sigma(lambda.clone()))
}

type PieriCache = RwLock<BTreeMap<(ParamsKey, u32, Partition), QClass>>;
type ExpansionCache = RwLock<BTreeMap<(u32, Partition), BTreeMap<Vec<u32>, i64>>>;
type ProductCache = RwLock<BTreeMap<(ParamsKey, Partition, Partition), QClass>>;

fn pieri_chern_cache() -> &'static PieriCache {
    static CACHE: OnceLock<PieriCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

fn pieri_special_cache() -> &'static PieriCache {
    static CACHE: OnceLock<PieriCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

fn chern_expansion_cache() -> &'static ExpansionCache {
    static CACHE: OnceLock<ExpansionCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

fn sigma_product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}
