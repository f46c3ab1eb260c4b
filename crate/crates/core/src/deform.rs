//! Candidate deformed bases `tau_lambda = sigma_lambda + sum_mu a_{lambda,mu}
//! q^((|lambda|-|mu|)/n) sigma_mu`, their structure constants in the tau
//! basis, negativity-witness search, and the machine-checkable certificates
//! showing that non-negativity forces every deformation coefficient to zero.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qring::{self, QClass, RingParams, StructureConstantTable};
use crate::rational::{parse_rational, Rational};
use crate::seidel;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::str::FromStr;

/// All pairs `(lambda, mu)` of box partitions with `|lambda| - |mu|` a
/// positive multiple of `n`, sorted by degree-lex on `lambda` then `mu`.
/// These are the only slots where a deformation coefficient may live.
pub fn admissible_pairs(params: &RingParams) -> Vec<(Partition, Partition)> {
    let all = Partition::all_in_box(&params.bbox());
    let n = params.n();
    let mut out = Vec::new();
    for lambda in &all {
        for mu in &all {
            let (lw, mw) = (lambda.weight(), mu.weight());
            if mw < lw && (lw - mw) % n == 0 {
                out.push((lambda.clone(), mu.clone()));
            }
        }
    }
    out.sort();
    out
}

/// A concrete rational deformation: the coefficients `a_{lambda,mu}` keyed by
/// admissible pairs. The zero deformation is the Schubert basis itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationCoeffs {
    params: RingParams,
    coeffs: BTreeMap<(Partition, Partition), Rational>,
}

impl DeformationCoeffs {
    pub fn zero(params: RingParams) -> Self {
        DeformationCoeffs {
            params,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a deformation, rejecting any coefficient keyed by an
    /// inadmissible pair. Zero coefficients are dropped.
    pub fn new(
        params: RingParams,
        entries: Vec<(Partition, Partition, Rational)>,
    ) -> Result<Self> {
        let mut out = DeformationCoeffs::zero(params);
        for (lambda, mu, value) in entries {
            out.set(lambda, mu, value)?;
        }
        Ok(out)
    }

    pub fn set(&mut self, lambda: Partition, mu: Partition, value: Rational) -> Result<()> {
        let bbox = self.params.bbox();
        let n = self.params.n();
        let admissible = lambda.fits_in(&bbox)
            && mu.fits_in(&bbox)
            && mu.weight() < lambda.weight()
            && (lambda.weight() - mu.weight()).is_multiple_of(n);
        if !admissible {
            return Err(Error::InadmissiblePair(
                lambda.to_string(),
                mu.to_string(),
            ));
        }
        if value.is_zero() {
            self.coeffs.remove(&(lambda, mu));
        } else {
            self.coeffs.insert((lambda, mu), value);
        }
        Ok(())
    }

    /// Parses the text format `<lambda> ; <mu> ; <rational>`, one entry per
    /// line; blank lines and `#` comments are skipped.
    pub fn from_text(params: RingParams, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split(';').collect();
            if fields.len() != 3 {
                return Err(Error::CoeffFile(format!(
                    "line {}: expected `<lambda> ; <mu> ; <rational>`, got {trimmed:?}",
                    lineno + 1
                )));
            }
            let lambda = Partition::from_str(fields[0])
                .map_err(|e| Error::CoeffFile(format!("line {}: {e}", lineno + 1)))?;
            let mu = Partition::from_str(fields[1])
                .map_err(|e| Error::CoeffFile(format!("line {}: {e}", lineno + 1)))?;
            let value = parse_rational(fields[2])
                .map_err(|e| Error::CoeffFile(format!("line {}: {e}", lineno + 1)))?;
            entries.push((lambda, mu, value));
        }
        DeformationCoeffs::new(params, entries)
    }

    pub fn params(&self) -> &RingParams {
        &self.params
    }

    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> Rational {
        self.coeffs
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &Rational)> {
        self.coeffs.iter()
    }

    /// The element `tau_lambda` written in sigma coordinates.
    pub fn tau_class(&self, lambda: &Partition) -> QClass {
        let n = self.params.n();
        let mut out = QClass::sigma(lambda.clone());
        for ((l, mu), a) in &self.coeffs {
            if l == lambda {
                let d = (lambda.weight() - mu.weight()) / n;
                out.add_term(d, mu.clone(), a.clone());
            }
        }
        out
    }

    /// Rewrites a sigma-coordinate class in tau coordinates. The change of
    /// basis is triangular in the weight, so substitution from the top down
    /// terminates.
    pub fn sigma_to_tau(&self, class: &QClass) -> BTreeMap<(u32, Partition), Rational> {
        let n = self.params.n();
        let mut work: BTreeMap<(u32, Partition), Rational> = class
            .terms()
            .map(|(d, nu, c)| ((d, nu.clone()), c.clone()))
            .collect();
        let mut out: BTreeMap<(u32, Partition), Rational> = BTreeMap::new();
        while let Some(max_weight) = work.keys().map(|(_, nu)| nu.weight()).max() {
            let batch: Vec<(u32, Partition)> = work
                .keys()
                .filter(|(_, nu)| nu.weight() == max_weight)
                .cloned()
                .collect();
            for key in batch {
                let coeff = work.remove(&key).expect("key just listed");
                if coeff.is_zero() {
                    continue;
                }
                let (d, nu) = &key;
                for ((l, rho), a) in &self.coeffs {
                    if l == nu {
                        let shift = (nu.weight() - rho.weight()) / n;
                        let slot = work
                            .entry((d + shift, rho.clone()))
                            .or_insert_with(Rational::zero);
                        *slot -= &coeff * a;
                    }
                }
                let slot = out.entry(key).or_insert_with(Rational::zero);
                *slot += coeff;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Expands tau coordinates back into a sigma-coordinate class.
    pub fn tau_to_sigma(&self, coords: &BTreeMap<(u32, Partition), Rational>) -> QClass {
        let mut out = QClass::zero();
        for ((d, nu), coeff) in coords {
            let tau = self.tau_class(nu);
            out.add_scaled(&tau, coeff, *d);
        }
        out
    }

    /// Structure constants of the tau basis over every ordered pair of box
    /// partitions: expand `tau_lambda * tau_mu` through the ring product and
    /// convert back through the triangular change of basis.
    pub fn tau_structure_constants(&self) -> Result<StructureConstantTable> {
        let all = Partition::all_in_box(&self.params.bbox());
        let mut table = StructureConstantTable::default();
        for lambda in &all {
            let tau_lambda = self.tau_class(lambda);
            for mu in &all {
                let tau_mu = self.tau_class(mu);
                let product = qring::multiply(&tau_lambda, &tau_mu, &self.params)?;
                for ((d, nu), value) in self.sigma_to_tau(&product) {
                    table.insert(lambda.clone(), mu.clone(), nu, d, value);
                }
            }
        }
        Ok(table)
    }

    /// Lists every negative tau structure constant, in ascending
    /// `(d, lambda, mu, nu)` order.
    pub fn check_nonnegative(&self) -> Result<NegativityReport> {
        let table = self.tau_structure_constants()?;
        let mut violations: Vec<Violation> = table
            .iter()
            .filter(|(_, value)| value.is_negative())
            .map(|((lambda, mu, nu, d), value)| Violation {
                lambda: lambda.clone(),
                mu: mu.clone(),
                nu: nu.clone(),
                d: *d,
                value: value.clone(),
            })
            .collect();
        violations.sort_by(|a, b| {
            (a.d, &a.lambda, &a.mu, &a.nu).cmp(&(b.d, &b.lambda, &b.mu, &b.nu))
        });
        Ok(NegativityReport { violations })
    }
}

/// One negative structure constant of a deformed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub d: u32,
    pub value: Rational,
}

/// The outcome of a non-negativity scan; empty exactly when the deformation
/// multiplies with non-negative constants.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NegativityReport {
    violations: Vec<Violation>,
}

impl NegativityReport {
    pub fn is_nonnegative(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

/// Witness data for one admissible pair in the positive branch: the
/// separating shift `p` and the two verified q-exponents with `e_prime < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftCertificate {
    pub lambda: Partition,
    pub mu: Partition,
    pub p: u32,
    pub d: u32,
    pub e_prime: u32,
}

/// The verified certificate of the uniqueness argument for one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateReport {
    /// One shift witness per admissible pair; valid whenever `alpha > 0`.
    Positive {
        params: RingParams,
        pairs: Vec<ShiftCertificate>,
    },
    /// Classical product identities backing the `alpha = 0` branch.
    Classical {
        params: RingParams,
        admissible_pairs: Vec<(Partition, Partition)>,
        strip_maxima: usize,
        dual_products: usize,
        equal_weight_zero: usize,
        lower_weight_zero: usize,
    },
}

/// Certifies the positive branch: for every admissible pair `(lambda, mu)`,
/// the separating shift `p` gives exponents `d = (mp + |lambda| -
/// |lambda^p|)/n` and `e' = (|lambda| - |mu|)/n + (mp + |mu| - |mu^p|)/n`
/// which are non-negative integers with `e' < d`. A product divisible by
/// `q^d` thus cannot contain the surviving `q^(e')` term, forcing the
/// deformation coefficient to vanish.
pub fn certify_positive_branch(params: &RingParams) -> Result<CertificateReport> {
    if !params.alpha().is_positive() {
        return Err(Error::AlphaNotPositive);
    }
    let bbox = params.bbox();
    let n = i64::from(params.n());
    let m = i64::from(params.m());
    let mut pairs = Vec::new();
    for (lambda, mu) in admissible_pairs(params) {
        let (p, shifted_lambda_weight, shifted_mu_weight) =
            seidel::find_separating_shift(&lambda, &mu, &bbox)?;
        let d_num = m * i64::from(p) + i64::from(lambda.weight())
            - i64::from(shifted_lambda_weight);
        let e_num = m * i64::from(p) + i64::from(mu.weight()) - i64::from(shifted_mu_weight);
        let gap_num = i64::from(lambda.weight()) - i64::from(mu.weight());
        let valid = d_num >= 0
            && e_num >= 0
            && d_num % n == 0
            && e_num % n == 0
            && gap_num > 0
            && gap_num % n == 0;
        if !valid {
            return Err(Error::Internal(format!(
                "shift exponents for ([{lambda}], [{mu}]) are not non-negative multiples of n"
            )));
        }
        let d = (d_num / n) as u32;
        let e_prime = ((gap_num + e_num) / n) as u32;
        let gap_check = i64::from(shifted_mu_weight) - i64::from(shifted_lambda_weight);
        if e_prime >= d || gap_check <= 0 || d_num - (gap_num + e_num) != gap_check {
            return Err(Error::Internal(format!(
                "certificate inequality e' < d failed for ([{lambda}], [{mu}])"
            )));
        }
        pairs.push(ShiftCertificate {
            lambda,
            mu,
            p,
            d,
            e_prime,
        });
    }
    Ok(CertificateReport::Positive {
        params: params.clone(),
        pairs,
    })
}

fn multiply_by_specials(factors: &[u32], class: &QClass, params: &RingParams) -> Result<QClass> {
    let mut out = class.clone();
    for &s in factors {
        if s == 0 {
            continue;
        }
        let mut next = QClass::zero();
        for (d, lambda, coeff) in out.terms() {
            let step = qring::pieri_special(s, lambda, params)?;
            next.add_scaled(&step, coeff, d);
        }
        out = next;
    }
    Ok(out)
}

/// Certifies the classical branch (`alpha = 0`):
/// (i) every box partition is the degree-lex maximum among the vertical-strip
/// completions of its first-column removal, (ii) the dual special-class
/// product lands every `sigma_nu` on the rectangle class, (iii) the same
/// product annihilates `sigma_mu` for equal-weight `mu != nu` with
/// lex-smaller dual, and (iv) annihilates every strictly heavier `sigma_mu`.
pub fn certify_classical_branch(params: &RingParams) -> Result<CertificateReport> {
    if !params.alpha().is_zero() {
        return Err(Error::AlphaNotZero);
    }
    let bbox = params.bbox();
    let all = Partition::all_in_box(&bbox);
    let rectangle = QClass::sigma(bbox.rectangle());

    // (i) strip maximality
    let mut strip_maxima = 0;
    for lambda in &all {
        let ell = lambda.len();
        let trimmed: Vec<u32> = (0..ell).map(|i| lambda[i] - 1).collect();
        let hat = Partition::new(trimmed).expect("column removal keeps monotonicity");
        let strips: Vec<Partition> = hat
            .add_vertical_strips(ell as u32, params.m())
            .into_iter()
            .filter(|mu| mu.fits_in(&bbox))
            .collect();
        let maximum = strips.iter().max();
        if maximum != Some(lambda) {
            return Err(Error::Internal(format!(
                "[{lambda}] is not the degree-lex maximal strip completion of [{hat}]"
            )));
        }
        strip_maxima += 1;
    }

    // (ii) dual products hit the rectangle
    let mut dual_products = 0;
    for nu in &all {
        let dual = nu.dual_in(&bbox)?;
        let product = multiply_by_specials(dual.parts(), &QClass::sigma(nu.clone()), params)?;
        if product != rectangle {
            return Err(Error::Internal(format!(
                "dual product of [{nu}] is {product}, not the rectangle class"
            )));
        }
        dual_products += 1;
    }

    // (iii) equal-weight annihilation under the lex hypothesis
    let mut equal_weight_zero = 0;
    for nu in &all {
        let nu_dual = nu.dual_in(&bbox)?;
        for mu in &all {
            if mu == nu || mu.weight() != nu.weight() {
                continue;
            }
            let mu_dual = mu.dual_in(&bbox)?;
            if nu_dual.parts() <= mu_dual.parts() {
                continue;
            }
            let product =
                multiply_by_specials(nu_dual.parts(), &QClass::sigma(mu.clone()), params)?;
            if !product.is_zero() {
                return Err(Error::Internal(format!(
                    "dual product of [{nu}] against [{mu}] is {product}, expected 0"
                )));
            }
            equal_weight_zero += 1;
        }
    }

    // (iv) heavier classes are annihilated on degree grounds
    let mut lower_weight_zero = 0;
    for nu in &all {
        let nu_dual = nu.dual_in(&bbox)?;
        for mu in &all {
            if nu.weight() >= mu.weight() {
                continue;
            }
            let product =
                multiply_by_specials(nu_dual.parts(), &QClass::sigma(mu.clone()), params)?;
            if !product.is_zero() {
                return Err(Error::Internal(format!(
                    "overweight dual product of [{nu}] against [{mu}] is {product}, expected 0"
                )));
            }
            lower_weight_zero += 1;
        }
    }

    Ok(CertificateReport::Classical {
        params: params.clone(),
        admissible_pairs: admissible_pairs(params),
        strip_maxima,
        dual_products,
        equal_weight_zero,
        lower_weight_zero,
    })
}
