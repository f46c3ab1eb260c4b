//! Determinantal symmetric-function engine over exact rationals and an
//! independent normal-form oracle for the quantum ring.
//!
//! The oracle never touches the Pieri combinatorics in `qring`: it reduces
//! polynomials in `Q[c_1..c_m, q]` modulo the defining ideal by exact graded
//! linear algebra, one degree slice at a time, and expresses the result in
//! the module basis `{q^d * Delta_{lambda'}(c)}`. Agreement of the two routes
//! is the main cross-validation of the whole crate.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qring::{QClass, RingParams};
use crate::rational::{format_rational, Rational};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, OnceLock, RwLock};

/// A sequence `h_1, h_2, ...` of exact rationals. The accessor extends it by
/// `h_0 = 1`, `h_i = 0` for `i < 0`, and `h_i = 0` past the stored length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSequence {
    values: Vec<Rational>,
}

impl RationalSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        RationalSequence { values }
    }

    pub fn get(&self, index: i64) -> Rational {
        match index {
            0 => Rational::one(),
            i if i < 0 => Rational::zero(),
            i => self
                .values
                .get((i - 1) as usize)
                .cloned()
                .unwrap_or_else(Rational::zero),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Division-free determinant: Laplace expansion along rows, memoized on the
/// set of unused columns. Equivalent to the signed permutation sum, but
/// usable up to sizes where the naive sum is hopeless.
fn det_memo<T, E>(size: usize, entry: &E, zero: T, one: T) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
    E: Fn(usize, usize) -> T,
{
    assert!(size < 26, "determinant size {size} out of supported range");
    fn rec<T, E>(size: usize, entry: &E, mask: u32, memo: &mut HashMap<u32, T>, zero: &T, one: &T) -> T
    where
        T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
        E: Fn(usize, usize) -> T,
    {
        if mask == 0 {
            return one.clone();
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let row = size - mask.count_ones() as usize;
        let mut acc = zero.clone();
        let mut position = 0;
        for col in 0..size {
            if mask & (1 << col) == 0 {
                continue;
            }
            let minor = rec(size, entry, mask & !(1 << col), memo, zero, one);
            let term = entry(row, col) * minor;
            acc = if position % 2 == 0 { acc + term } else { acc - term };
            position += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    if size == 0 {
        return one;
    }
    let mut memo = HashMap::new();
    let full = if size == 32 { u32::MAX } else { (1u32 << size) - 1 };
    rec(size, entry, full, &mut memo, &zero, &one)
}

/// The Jacobi-Trudi determinant `Delta_lambda(h) = det(h_{lambda_i + j - i})`.
/// `Delta` of the empty partition is 1.
pub fn delta(lambda: &Partition, h: &RationalSequence) -> Rational {
    let ell = lambda.len();
    det_memo(
        ell,
        &|i, j| h.get(lambda[i] as i64 + j as i64 - i as i64),
        Rational::zero(),
        Rational::one(),
    )
}

/// The dual sequence `e_p = Delta_{(1^p)}(h)`, computed by the recursion
/// `e_p = sum_{i=1}^{p} (-1)^(i-1) h_i e_{p-i}`.
pub fn dual_sequence(h: &RationalSequence, up_to: usize) -> RationalSequence {
    let mut e: Vec<Rational> = Vec::with_capacity(up_to);
    for p in 1..=up_to as i64 {
        let mut acc = Rational::zero();
        for i in 1..=p {
            let prev = if p - i == 0 {
                Rational::one()
            } else {
                e[(p - i - 1) as usize].clone()
            };
            let term = h.get(i) * prev;
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc);
    }
    RationalSequence::new(e)
}

/// A polynomial in `Q[c_1, ..., c_m, q]`, stored as a map from exponent
/// vectors to nonzero rational coefficients. Grading: `deg c_p = p`,
/// `deg q = n` (the ring degree, supplied where needed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPolynomial {
    vars: usize,
    terms: BTreeMap<(Vec<u32>, u32), Rational>,
}

impl CPolynomial {
    pub fn zero(vars: usize) -> Self {
        CPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        CPolynomial::monomial(vars, vec![0; vars], 0, Rational::one())
    }

    /// The generator `c_p` (`c_0` is 1). Panics if `p` exceeds the variable
    /// count; callers model `c_{p>m} = 0` themselves.
    pub fn c(vars: usize, p: usize) -> Self {
        if p == 0 {
            return CPolynomial::one(vars);
        }
        assert!(p <= vars, "c_{p} does not exist with {vars} variables");
        let mut exp = vec![0; vars];
        exp[p - 1] = 1;
        CPolynomial::monomial(vars, exp, 0, Rational::one())
    }

    /// The quantum variable `q`.
    pub fn q(vars: usize) -> Self {
        CPolynomial::monomial(vars, vec![0; vars], 1, Rational::one())
    }

    pub fn monomial(vars: usize, c_exp: Vec<u32>, q_exp: u32, coeff: Rational) -> Self {
        assert_eq!(c_exp.len(), vars);
        let mut out = CPolynomial::zero(vars);
        out.add_term(c_exp, q_exp, coeff);
        out
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u32>, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, c_exp: Vec<u32>, q_exp: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(c_exp.len(), self.vars);
        match self.terms.entry((c_exp, q_exp)) {
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

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for coeff in self.terms.values_mut() {
            *coeff *= factor;
        }
    }

    pub fn mul_q_power(&self, e: u32) -> CPolynomial {
        let mut out = CPolynomial::zero(self.vars);
        for ((c_exp, q_exp), coeff) in &self.terms {
            out.add_term(c_exp.clone(), q_exp + e, coeff.clone());
        }
        out
    }

    fn monomial_degree(c_exp: &[u32], q_exp: u32, n: u32) -> u32 {
        let c_part: u32 = c_exp
            .iter()
            .enumerate()
            .map(|(i, e)| (i as u32 + 1) * e)
            .sum();
        c_part + n * q_exp
    }

    /// Splits into homogeneous components under `deg c_p = p`, `deg q = n`.
    pub fn graded_components(&self, n: u32) -> BTreeMap<u32, CPolynomial> {
        let mut out: BTreeMap<u32, CPolynomial> = BTreeMap::new();
        for ((c_exp, q_exp), coeff) in &self.terms {
            let d = Self::monomial_degree(c_exp, *q_exp, n);
            out.entry(d)
                .or_insert_with(|| CPolynomial::zero(self.vars))
                .add_term(c_exp.clone(), *q_exp, coeff.clone());
        }
        out
    }
}

impl Add for CPolynomial {
    type Output = CPolynomial;

    fn add(self, rhs: CPolynomial) -> CPolynomial {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = self;
        for ((c_exp, q_exp), coeff) in rhs.terms {
            out.add_term(c_exp, q_exp, coeff);
        }
        out
    }
}

impl Sub for CPolynomial {
    type Output = CPolynomial;

    fn sub(self, rhs: CPolynomial) -> CPolynomial {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = self;
        for ((c_exp, q_exp), coeff) in rhs.terms {
            out.add_term(c_exp, q_exp, -coeff);
        }
        out
    }
}

impl Mul for CPolynomial {
    type Output = CPolynomial;

    fn mul(self, rhs: CPolynomial) -> CPolynomial {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = CPolynomial::zero(self.vars);
        for ((ca, qa), xa) in &self.terms {
            for ((cb, qb), xb) in &rhs.terms {
                let c_exp: Vec<u32> = ca.iter().zip(cb).map(|(a, b)| a + b).collect();
                out.add_term(c_exp, qa + qb, xa * xb);
            }
        }
        out
    }
}

impl fmt::Display for CPolynomial {
    /// Diagnostic rendering, e.g. `3/2*c1^2*q - c2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((c_exp, q_exp), coeff) in self.terms.iter().rev() {
            let negative = coeff < &Rational::zero();
            let magnitude = if negative { -coeff.clone() } else { coeff.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !magnitude.is_one() || (c_exp.iter().all(|&e| e == 0) && *q_exp == 0) {
                pieces.push(format_rational(&magnitude));
            }
            for (i, &e) in c_exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => pieces.push(format!("c{}", i + 1)),
                    _ => pieces.push(format!("c{}^{}", i + 1, e)),
                }
            }
            match q_exp {
                0 => {}
                1 => pieces.push("q".into()),
                _ => pieces.push(format!("q^{q_exp}")),
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// The Schubert polynomial representative `sigma_lambda = Delta_{lambda'}(c)`
/// in `S = Q[c_1..c_m]`, zero when the partition has more than `m` rows.
pub fn sigma_polynomial(lambda: &Partition, params: &RingParams) -> CPolynomial {
    let m = params.m() as usize;
    let conj = lambda.conjugate();
    let size = conj.len();
    det_memo(
        size,
        &|i, j| {
            let s = conj[i] as i64 + j as i64 - i as i64;
            if s < 0 || s > m as i64 {
                CPolynomial::zero(m)
            } else {
                CPolynomial::c(m, s as usize)
            }
        },
        CPolynomial::zero(m),
        CPolynomial::one(m),
    )
}

/// One cached degree slice of the quotient `S[q] / I`: a row-echelon basis of
/// the ideal slice plus the reduced images of the module basis, preprocessed
/// so that individual normal forms are a back-substitution.
struct SliceSolver {
    /// Index of every monomial of this degree, in lex order on exponent
    /// vectors with `q` last.
    mono_index: BTreeMap<(Vec<u32>, u32), usize>,
    /// Echelon rows of the ideal slice, keyed by pivot column. Rows are
    /// normalized to a unit pivot.
    echelon: BTreeMap<usize, Vec<Rational>>,
    /// The basis pairs `(d, lambda)` of this degree.
    basis: Vec<(u32, Partition)>,
    /// Reduced basis images, one dense column per basis pair.
    reduced_basis: Vec<Vec<Rational>>,
    /// Row subset on which the reduced basis is invertible, with the inverse.
    solve_rows: Vec<usize>,
    inverse: Vec<Vec<Rational>>,
}

impl SliceSolver {
    fn reduce(&self, vector: &mut [Rational]) {
        for (&pivot, row) in &self.echelon {
            if vector[pivot].is_zero() {
                continue;
            }
            let factor = vector[pivot].clone();
            for (slot, value) in vector.iter_mut().zip(row) {
                if !value.is_zero() {
                    *slot -= &factor * value;
                }
            }
        }
    }

    fn solve(&self, component: &CPolynomial) -> Result<QClass> {
        let dim = self.mono_index.len();
        let mut vector = vec![Rational::zero(); dim];
        for ((c_exp, q_exp), coeff) in component.terms() {
            let index = self
                .mono_index
                .get(&(c_exp.clone(), *q_exp))
                .ok_or_else(|| Error::Internal("monomial missing from degree slice".into()))?;
            vector[*index] = coeff.clone();
        }
        self.reduce(&mut vector);
        let r = self.basis.len();
        let mut solution = vec![Rational::zero(); r];
        for (i, &row) in self.solve_rows.iter().enumerate() {
            if vector[row].is_zero() {
                continue;
            }
            for (slot, inv) in solution.iter_mut().zip(&self.inverse) {
                *slot += &inv[i] * &vector[row];
            }
        }
        // The expansion must reproduce the reduced vector exactly;
        // anything else contradicts the freeness of the module basis.
        let mut check = vector.clone();
        for (j, x) in solution.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (slot, value) in check.iter_mut().zip(&self.reduced_basis[j]) {
                if !value.is_zero() {
                    *slot -= x * value;
                }
            }
        }
        if check.iter().any(|v| !v.is_zero()) {
            return Err(Error::Internal(
                "normal-form system inconsistent with the free module basis".into(),
            ));
        }
        let mut out = QClass::zero();
        for (j, x) in solution.into_iter().enumerate() {
            let (d, lambda) = &self.basis[j];
            out.add_term(*d, lambda.clone(), x);
        }
        Ok(out)
    }
}

/// Monomials `(c_exp, q_exp)` of homogeneous degree `degree`.
fn monomials_of_degree(m: usize, n: u32, degree: u32) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    let mut exp = vec![0u32; m];
    fn rec(var: usize, m: usize, n: u32, left: u32, exp: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, u32)>) {
        if var == m {
            if left.is_multiple_of(n) {
                out.push((exp.clone(), left / n));
            }
            return;
        }
        let weight = var as u32 + 1;
        let mut used = 0;
        loop {
            exp[var] = used / weight;
            rec(var + 1, m, n, left - used, exp, out);
            used += weight;
            if used > left {
                break;
            }
        }
        exp[var] = 0;
    }
    rec(0, m, n, degree, &mut exp, &mut out);
    out.sort();
    out
}

fn ideal_generators(params: &RingParams) -> Vec<CPolynomial> {
    let m = params.m() as usize;
    let n = params.n();
    let mut gens = Vec::new();
    for j in params.k() + 1..n {
        gens.push(sigma_polynomial(&Partition::of(&[j]), params));
    }
    // sigma_n + (-1)^m alpha q
    let last = sigma_polynomial(&Partition::of(&[n]), params);
    let sign = if params.m().is_multiple_of(2) {
        params.alpha().clone()
    } else {
        -params.alpha().clone()
    };
    let mut q_term = CPolynomial::q(m);
    q_term.scale(&sign);
    gens.push(last + q_term);
    gens
}

fn build_slice(params: &RingParams, degree: u32) -> Result<SliceSolver> {
    let m = params.m() as usize;
    let n = params.n();
    let monos = monomials_of_degree(m, n, degree);
    let mono_index: BTreeMap<(Vec<u32>, u32), usize> = monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, key)| (key, i))
        .collect();
    let dim = monos.len();
    let vectorize = |poly: &CPolynomial| -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); dim];
        for ((c_exp, q_exp), coeff) in poly.terms() {
            let index = mono_index
                .get(&(c_exp.clone(), *q_exp))
                .ok_or_else(|| Error::Internal("generator product off its degree slice".into()))?;
            v[*index] = coeff.clone();
        }
        Ok(v)
    };

    // Row-echelon span of { monomial * generator } at this degree.
    let mut echelon: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
    let mut insert = |mut v: Vec<Rational>| {
        loop {
            let pivot = match v.iter().position(|x| !x.is_zero()) {
                Some(p) => p,
                None => return,
            };
            if let Some(row) = echelon.get(&pivot) {
                let factor = v[pivot].clone();
                for (slot, value) in v.iter_mut().zip(row) {
                    if !value.is_zero() {
                        *slot -= &factor * value;
                    }
                }
            } else {
                let lead = v[pivot].clone();
                for slot in v.iter_mut() {
                    if !slot.is_zero() {
                        *slot /= &lead;
                    }
                }
                echelon.insert(pivot, v);
                return;
            }
        }
    };
    for generator in ideal_generators(params) {
        let gen_degree = generator
            .graded_components(n)
            .keys()
            .next_back()
            .copied()
            .unwrap_or(0);
        if gen_degree > degree {
            continue;
        }
        for (c_exp, q_exp) in monomials_of_degree(m, n, degree - gen_degree) {
            let product =
                generator.clone() * CPolynomial::monomial(m, c_exp, q_exp, Rational::one());
            insert(vectorize(&product)?);
        }
    }

    // Basis pairs (d, lambda) with d*n + |lambda| = degree, reduced mod the ideal.
    let bbox = params.bbox();
    let mut basis = Vec::new();
    for lambda in Partition::all_in_box(&bbox) {
        let w = lambda.weight();
        if w <= degree && (degree - w).is_multiple_of(n) {
            basis.push(((degree - w) / n, lambda));
        }
    }
    basis.sort();
    let mut reduced_basis = Vec::with_capacity(basis.len());
    for (d, lambda) in &basis {
        let poly = sigma_polynomial(lambda, params).mul_q_power(*d);
        let mut v = vectorize(&poly)?;
        for (&pivot, row) in &echelon {
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            for (slot, value) in v.iter_mut().zip(row) {
                if !value.is_zero() {
                    *slot -= &factor * value;
                }
            }
        }
        reduced_basis.push(v);
    }

    // Choose rows making the reduced basis square and invertible, and invert.
    let r = basis.len();
    let mut solve_rows = Vec::with_capacity(r);
    let mut work: Vec<Vec<Rational>> = reduced_basis.clone();
    let mut transform: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            let mut row = vec![Rational::zero(); r];
            row[i] = Rational::one();
            row
        })
        .collect();
    // Gauss-Jordan across columns of the reduced basis, tracking the
    // inverse of the selected square submatrix.
    for col in 0..r {
        let pivot_row = (0..dim)
            .find(|&row| {
                !work[col][row].is_zero() && !solve_rows.contains(&row)
            })
            .ok_or_else(|| {
                Error::Internal("reduced basis images are linearly dependent".into())
            })?;
        solve_rows.push(pivot_row);
        let lead = work[col][pivot_row].clone();
        for entry in work[col].iter_mut() {
            *entry /= &lead;
        }
        for entry in transform[col].iter_mut() {
            *entry /= &lead;
        }
        let pivot_vec = work[col].clone();
        let pivot_transform = transform[col].clone();
        for other in 0..r {
            if other == col || work[other][pivot_row].is_zero() {
                continue;
            }
            let factor = work[other][pivot_row].clone();
            for row in 0..dim {
                let value = pivot_vec[row].clone();
                if !value.is_zero() {
                    work[other][row] -= &factor * &value;
                }
            }
            for (slot, value) in transform[other].iter_mut().zip(&pivot_transform) {
                if !value.is_zero() {
                    *slot -= &factor * value;
                }
            }
        }
    }
    // After full elimination, work[j] = sum_i transform[j][i] * b_i restricts
    // to the j-th unit vector on solve_rows, so the matrix (transform[j][i])
    // is the transposed inverse of the square submatrix b_i[solve_rows]. The
    // solution of f = sum_j x_j b_j is x_j = sum_i transform[i][j] * f[rows_i].
    let inverse: Vec<Vec<Rational>> = (0..r)
        .map(|j| (0..r).map(|i| transform[i][j].clone()).collect())
        .collect();

    Ok(SliceSolver {
        mono_index,
        echelon,
        basis,
        reduced_basis,
        solve_rows,
        inverse,
    })
}

type SliceKey = (u32, u32, Rational, u32);

fn slice_cache() -> &'static RwLock<BTreeMap<SliceKey, Arc<SliceSolver>>> {
    static CACHE: OnceLock<RwLock<BTreeMap<SliceKey, Arc<SliceSolver>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

fn slice_solver(params: &RingParams, degree: u32) -> Result<Arc<SliceSolver>> {
    let key = (params.m(), params.k(), params.alpha().clone(), degree);
    if let Some(hit) = slice_cache().read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let solver = Arc::new(build_slice(params, degree)?);
    let mut guard = slice_cache().write().expect("cache lock");
    Ok(guard.entry(key).or_insert(solver).clone())
}

/// The unique expansion of `f` modulo the defining ideal in the module basis
/// `{q^d sigma_lambda}`, computed degree by degree via exact row reduction.
/// Errors when a graded component exceeds `degree_cap`.
pub fn normal_form(f: &CPolynomial, params: &RingParams, degree_cap: u32) -> Result<QClass> {
    if f.vars() != params.m() as usize {
        return Err(Error::InvalidParams(format!(
            "polynomial in {} variables against m = {}",
            f.vars(),
            params.m()
        )));
    }
    let mut out = QClass::zero();
    for (degree, component) in f.graded_components(params.n()) {
        if degree > degree_cap {
            return Err(Error::DegreeCapExceeded {
                degree,
                cap: degree_cap,
            });
        }
        let solver = slice_solver(params, degree)?;
        let part = solver.solve(&component)?;
        for (d, lambda, coeff) in part.terms() {
            out.add_term(d, lambda.clone(), coeff.clone());
        }
    }
    Ok(out)
}

/// Default degree cap used by the command-line driver.
pub fn default_degree_cap(params: &RingParams) -> u32 {
    3 * params.n()
}
