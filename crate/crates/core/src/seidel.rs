//! Seidel shift dynamics on partitions in a box: the order-`n` cyclic shift,
//! full orbits with their weight-sum law, and the separating-shift search
//! used by the positivity certificates.

use crate::error::{Error, Result};
use crate::partition::{BoxBound, Partition};

/// One Seidel step: add a box to every row if the first row is short of `k`,
/// otherwise drop the first row.
fn shift_once(lambda: &Partition, bbox: &BoxBound) -> Partition {
    if lambda.first_part() < bbox.k() {
        let parts = (0..bbox.m() as usize).map(|i| lambda[i] + 1).collect();
        Partition::new(parts).expect("shift preserves monotonicity")
    } else {
        let parts = (1..bbox.m() as usize).map(|i| lambda[i]).collect();
        Partition::new(parts).expect("tail of a partition is a partition")
    }
}

/// The `p`-fold Seidel shift. `p` may be any integer; it is reduced mod `n`
/// first, which is justified by the period-`n` law `shift(lambda, n) = lambda`.
pub fn shift(lambda: &Partition, p: i64, bbox: &BoxBound) -> Result<Partition> {
    if !lambda.fits_in(bbox) {
        return Err(Error::OutOfBox {
            partition: lambda.to_string(),
            m: bbox.m(),
            k: bbox.k(),
        });
    }
    let n = bbox.n() as i64;
    let steps = p.rem_euclid(n);
    let mut out = lambda.clone();
    for _ in 0..steps {
        out = shift_once(&out, bbox);
    }
    Ok(out)
}

/// A full Seidel orbit: the `n` shifts of a base partition together with
/// their weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelOrbit {
    base: Partition,
    bbox: BoxBound,
    shifts: Vec<Partition>,
}

impl SeidelOrbit {
    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn bbox(&self) -> &BoxBound {
        &self.bbox
    }

    /// The shifts `base^0, ..., base^(n-1)` in step order.
    pub fn shifts(&self) -> &[Partition] {
        &self.shifts
    }

    pub fn weights(&self) -> Vec<u32> {
        self.shifts.iter().map(|s| s.weight()).collect()
    }

    pub fn weight_sum(&self) -> u32 {
        self.shifts.iter().map(|s| s.weight()).sum()
    }
}

/// Walks the full `n`-cycle of `lambda` and checks the two orbit laws:
/// the walk closes up after `n` steps and the weights sum to `kmn/2`.
pub fn orbit(lambda: &Partition, bbox: &BoxBound) -> Result<SeidelOrbit> {
    if !lambda.fits_in(bbox) {
        return Err(Error::OutOfBox {
            partition: lambda.to_string(),
            m: bbox.m(),
            k: bbox.k(),
        });
    }
    let n = bbox.n();
    let mut shifts = Vec::with_capacity(n as usize);
    let mut current = lambda.clone();
    for _ in 0..n {
        shifts.push(current.clone());
        current = shift_once(&current, bbox);
    }
    if &current != lambda {
        return Err(Error::Internal(format!(
            "Seidel orbit of [{lambda}] in {} x {} did not close after {n} steps",
            bbox.m(),
            bbox.k()
        )));
    }
    let orbit = SeidelOrbit {
        base: lambda.clone(),
        bbox: *bbox,
        shifts,
    };
    let expected = bbox.k() * bbox.m() * n / 2;
    if orbit.weight_sum() != expected {
        return Err(Error::Internal(format!(
            "orbit weight sum {} differs from kmn/2 = {expected}",
            orbit.weight_sum()
        )));
    }
    Ok(orbit)
}

/// The smallest `p` in `0..n-1` whose shift reverses the weight comparison:
/// `|lambda^p| < |mu^p|`. Requires `|lambda| > |mu|`; such a `p` always
/// exists, so failure to find one is an internal error.
pub fn find_separating_shift(
    lambda: &Partition,
    mu: &Partition,
    bbox: &BoxBound,
) -> Result<(u32, u32, u32)> {
    if lambda.weight() <= mu.weight() {
        return Err(Error::WeightNotLarger {
            lambda_weight: lambda.weight(),
            mu_weight: mu.weight(),
        });
    }
    let lambda_orbit = orbit(lambda, bbox)?;
    let mu_orbit = orbit(mu, bbox)?;
    for p in 0..bbox.n() as usize {
        let lw = lambda_orbit.shifts()[p].weight();
        let mw = mu_orbit.shifts()[p].weight();
        if lw < mw {
            return Ok((p as u32, lw, mw));
        }
    }
    Err(Error::Internal(format!(
        "no separating shift for [{lambda}] and [{mu}] in {} x {}",
        bbox.m(),
        bbox.k()
    )))
}
