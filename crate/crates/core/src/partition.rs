//! Young-diagram combinatorics: partitions, containment, conjugation,
//! horizontal/vertical strips, the outer rim and rim removals, the
//! degree-lexicographic order, box duals, and the dictionary between
//! partitions in an `m x k` box and permutations with a single descent.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

/// A partition: weakly decreasing positive integer parts. The empty
/// partition is a first-class value, rendered `-`.
///
/// Parts are stored without trailing zeros; indexing past the length reads 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// The `m x k` rectangle bounding partitions: at most `m` rows of length at most `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxBound {
    m: u32,
    k: u32,
}

/// Which boundary lines of the diagram a rim removal must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RimMode {
    /// Every column of the diagram loses at least one box.
    EachColumn,
    /// Every nonempty row of the diagram loses at least one box.
    EachRow,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// trimmed, anything else out of order is rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Literal constructor for trusted input; panics on invalid parts.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonempty rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn first_part(&self) -> u32 {
        self[0]
    }

    /// Containment of Young diagrams: `self` fits inside `other` row by row.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.len()).all(|i| self[i] <= other[i])
    }

    pub fn fits_in(&self, bbox: &BoxBound) -> bool {
        self.len() as u32 <= bbox.m && self[0] <= bbox.k
    }

    fn check_in_box(&self, bbox: &BoxBound) -> Result<()> {
        if self.fits_in(bbox) {
            Ok(())
        } else {
            Err(Error::OutOfBox {
                partition: self.to_string(),
                m: bbox.m,
                k: bbox.k,
            })
        }
    }

    /// Mirror in the diagonal: the conjugate has `#{i : parts[i] >= j}` boxes
    /// in row `j`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols as u32 {
            out.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition { parts: out }
    }

    /// All partitions obtained by adding a vertical strip of `p` boxes
    /// (at most one box per row), using at most `rows` rows. No column bound.
    pub fn add_vertical_strips(&self, p: u32, rows: u32) -> Vec<Partition> {
        if self.len() as u32 > rows {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows as usize);
        self.vertical_rec(0, rows as usize, p, u32::MAX, &mut current, &mut out);
        out.sort();
        out
    }

    fn vertical_rec(
        &self,
        row: usize,
        rows: usize,
        budget: u32,
        prev: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if budget == 0 {
                out.push(Partition::new(current.clone()).expect("rows built decreasing"));
            }
            return;
        }
        // Remaining rows can absorb at most one box each.
        if budget > (rows - row) as u32 {
            return;
        }
        let base = self[row];
        for delta in 0..=1u32 {
            if delta > budget {
                break;
            }
            let value = base + delta;
            if value > prev {
                continue;
            }
            current.push(value);
            self.vertical_rec(row + 1, rows, budget - delta, value, current, out);
            current.pop();
        }
    }

    /// All partitions inside `bbox` obtained by adding a horizontal strip of
    /// `p` boxes (at most one box per column).
    pub fn add_horizontal_strips(&self, p: u32, bbox: &BoxBound) -> Vec<Partition> {
        if !self.fits_in(bbox) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(bbox.m as usize);
        self.horizontal_rec(0, bbox, p, &mut current, &mut out);
        out.sort();
        out
    }

    fn horizontal_rec(
        &self,
        row: usize,
        bbox: &BoxBound,
        budget: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == bbox.m as usize {
            if budget == 0 {
                out.push(Partition::new(current.clone()).expect("rows built decreasing"));
            }
            return;
        }
        let lo = self[row];
        // At most one new box per column forces row i+1 to stop at old row i.
        let hi = if row == 0 { bbox.k } else { self[row - 1] };
        for value in lo..=hi {
            let used = value - lo;
            if used > budget {
                break;
            }
            current.push(value);
            self.horizontal_rec(row + 1, bbox, budget - used, current, out);
            current.pop();
        }
    }

    /// The outer rim: boxes `(i, j)` (1-based) with `parts[i+1] <= j <= parts[i]`,
    /// i.e. boxes with no box strictly south-east inside the diagram.
    pub fn outer_rim(&self) -> Result<Vec<(u32, u32)>> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut rim = Vec::new();
        for i in 0..self.len() {
            let lo = self[i + 1].max(1);
            for j in lo..=self[i] {
                rim.push((i as u32 + 1, j));
            }
        }
        Ok(rim)
    }

    /// All partitions obtained by deleting exactly `boxes` boxes from the
    /// outer rim so that a partition shape remains and every column
    /// ([`RimMode::EachColumn`]) or every nonempty row ([`RimMode::EachRow`])
    /// loses at least one box.
    pub fn rim_removals(&self, boxes: u32, mode: RimMode) -> Result<Vec<Partition>> {
        let rim = self.outer_rim()?;
        let rows = self.len();
        let cols = self.first_part();
        let mut found: Vec<Partition> = Vec::new();
        if boxes as usize > rim.len() {
            return Ok(found);
        }
        // Rim has at most m+k-1 boxes, so scanning subsets is cheap.
        for mask in 0u32..(1 << rim.len()) {
            if mask.count_ones() != boxes {
                continue;
            }
            let mut removed_per_row = vec![0u32; rows];
            let mut min_col_per_row = vec![u32::MAX; rows];
            let mut col_hit = vec![false; cols as usize];
            for (b, &(i, j)) in rim.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    let r = (i - 1) as usize;
                    removed_per_row[r] += 1;
                    min_col_per_row[r] = min_col_per_row[r].min(j);
                    col_hit[(j - 1) as usize] = true;
                }
            }
            // Removed boxes must be a suffix of their row, and the remaining
            // row lengths must still be weakly decreasing.
            let mut shape = Vec::with_capacity(rows);
            let mut ok = true;
            for r in 0..rows {
                let cnt = removed_per_row[r];
                if cnt > 0 && min_col_per_row[r] != self[r] - cnt + 1 {
                    ok = false;
                    break;
                }
                shape.push(self[r] - cnt);
            }
            if !ok || !shape.windows(2).all(|w| w[0] >= w[1]) {
                continue;
            }
            let covered = match mode {
                RimMode::EachColumn => col_hit.iter().all(|&h| h),
                RimMode::EachRow => removed_per_row.iter().all(|&c| c > 0),
            };
            if !covered {
                continue;
            }
            let nu = Partition::new(shape).expect("checked decreasing");
            if !found.contains(&nu) {
                found.push(nu);
            }
        }
        found.sort();
        Ok(found)
    }

    /// The complement `(k - parts[m-1], ..., k - parts[0])` inside the box.
    pub fn dual_in(&self, bbox: &BoxBound) -> Result<Partition> {
        self.check_in_box(bbox)?;
        let parts = (0..bbox.m as usize)
            .rev()
            .map(|i| bbox.k - self[i])
            .collect();
        Partition::new(parts)
    }

    /// All partitions contained in the box, sorted in degree-lexicographic order.
    pub fn all_in_box(bbox: &BoxBound) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(row: u32, m: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(current.clone()).expect("built decreasing"));
            if row == m {
                return;
            }
            for value in (1..=max).rev() {
                current.push(value);
                rec(row + 1, m, value, current, out);
                current.pop();
            }
        }
        rec(0, bbox.m, bbox.k, &mut current, &mut out);
        out.sort();
        out
    }
}

/// Degree-lexicographic comparison: first by weight, then lexicographically
/// on the parts. This is the `Ord` instance of [`Partition`].
pub fn deg_lex_compare(a: &Partition, b: &Partition) -> Ordering {
    a.cmp(b)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Index<usize> for Partition {
    type Output = u32;

    fn index(&self, index: usize) -> &Self::Output {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `2,1`, `-`, or the empty string (the last two denote the empty
    /// partition).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let value: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {piece:?} in {t:?}")))?;
            if value == 0 {
                return Err(Error::InvalidPartition(format!("zero part in {t:?}")));
            }
            parts.push(value);
        }
        Partition::new(parts)
    }
}

impl BoxBound {
    pub fn new(m: u32, k: u32) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::InvalidParams(format!(
                "box bounds must be positive, got {m} x {k}"
            )));
        }
        Ok(BoxBound { m, k })
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

    /// The full rectangle `(k^m)` as a partition.
    pub fn rectangle(&self) -> Partition {
        Partition::new(vec![self.k; self.m as usize]).expect("rectangle is a partition")
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[(v - 1) as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a bijection of 1..{n}"
                )));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: u32) -> u32 {
        self.values[(i - 1) as usize]
    }

    /// Composition `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            values: other.values.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    /// Number of inversions `#{i < j : w(i) > w(j)}`; the Weyl-group length.
    pub fn length(&self) -> u32 {
        let v = &self.values;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let text: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", text.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `321654` or `3,2,1,6,5,4` (the comma form is required for `n > 9`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::InvalidPermutation("empty string".into()));
        }
        let values: Vec<u32> = if t.contains(',') {
            t.split(',')
                .map(|piece| {
                    piece.trim().parse().map_err(|_| {
                        Error::InvalidPermutation(format!("bad value {piece:?} in {t:?}"))
                    })
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?} in {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// The partition `(w_m - m, ..., w_2 - 2, w_1 - 1)` of a permutation whose
/// only descent is at position `m`.
pub fn perm_to_partition(w: &Permutation, m: u32) -> Result<Partition> {
    let n = w.n();
    if m == 0 || m >= n {
        return Err(Error::IndexOutOfRange { p: m, max: n - 1 });
    }
    for i in 1..n {
        if i != m && w.apply(i) > w.apply(i + 1) {
            return Err(Error::DescentViolation { m, pos: i });
        }
    }
    let parts = (1..=m).rev().map(|i| w.apply(i) - i).collect();
    Partition::new(parts)
}

/// Inverse of [`perm_to_partition`]: the unique permutation with descent only
/// at position `m` representing `lambda` inside the `m x (n-m)` box.
pub fn partition_to_perm(lambda: &Partition, m: u32, n: u32) -> Result<Permutation> {
    if m == 0 || m >= n {
        return Err(Error::IndexOutOfRange { p: m, max: n - 1 });
    }
    let bbox = BoxBound::new(m, n - m)?;
    lambda.check_in_box(&bbox)?;
    let mut values: Vec<u32> = (1..=m)
        .map(|i| lambda[(m - i) as usize] + i)
        .collect();
    let mut used = vec![false; n as usize];
    for &v in &values {
        used[(v - 1) as usize] = true;
    }
    for v in 1..=n {
        if !used[(v - 1) as usize] {
            values.push(v);
        }
    }
    Permutation::new(values)
}
