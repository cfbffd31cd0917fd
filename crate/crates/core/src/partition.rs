//! Partitions, skew shapes and integer sequences.
//!
//! Diagrams follow the French convention: row 1 is the bottom row and holds
//! the largest part. Rows and columns are 0-based in code (`part(0)` is the
//! first part), which only matters when reading cell coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the part sum accepted by the text parsers.
pub const DEFAULT_SUM_LIMIT: u64 = 64;

/// A weakly decreasing sequence of positive integers.
///
/// Indexing past the last part yields 0, so `part(i)` is total.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary non-negative parts into decreasing order and drops zeros.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// `(part^count)`, e.g. `rectangle(3, 2)` is `(3,3)`.
    pub fn rectangle(part: u32, count: usize) -> Self {
        if part == 0 {
            return Partition::empty();
        }
        Partition(vec![part; count])
    }

    /// Drops trailing zeros from a weakly decreasing slice.
    pub(crate) fn from_padded(parts: &[u32]) -> Self {
        let end = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        debug_assert!(parts[..end].windows(2).all(|w| w[0] >= w[1]));
        Partition(parts[..end].to_vec())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Decreasing rearrangement of the parts of both partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        Partition(v)
    }

    /// Componentwise sum, padding the shorter partition with zeros.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Dominance order `self ⪯ other`. Only defined for equal sizes.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SumMismatch {
                left: self.size() as i64,
                right: other.size() as i64,
            });
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.0[i] <= self.0[i])
    }

    /// Increases the first part by one.
    pub fn add_to_first(&self) -> Partition {
        let mut v = self.0.clone();
        match v.first_mut() {
            Some(p) => *p += 1,
            None => v.push(1),
        }
        Partition(v)
    }

    /// `(j, 1^k)` with `j >= 1`.
    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.0[1..].iter().all(|&p| p == 1)
    }

    /// Distinct part sizes, largest first.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.dedup();
        v
    }

    pub fn classify(&self) -> Result<ShapeClass> {
        ShapeClass::of(self)
    }

    /// Every partition whose diagram is contained in this one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[u32], row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if row >= outer.len() {
                return;
            }
            for p in 1..=cap.min(outer[row]) {
                cur.push(p);
                go(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, self.first(), &mut Vec::new(), &mut out);
        out
    }

    pub(crate) fn parse_bounded(s: &str, limit: u64) -> Result<Partition> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        let err = |reason: String| Error::Parse {
            what: "partition",
            input: s.to_string(),
            reason,
        };
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|e| err(format!("{tok:?}: {e}")))?;
            parts.push(v);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let p = Partition::new(parts).map_err(|e| err(e.to_string()))?;
        let sum = p.size() as u64;
        if sum > limit {
            return Err(Error::SumLimit { sum, limit });
        }
        Ok(p)
    }

    /// Parses comma-separated parts with a custom bound on the part sum.
    pub fn parse_with_limit(s: &str, limit: u64) -> Result<Partition> {
        Self::parse_bounded(s, limit)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse_bounded(s, DEFAULT_SUM_LIMIT)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Shorthand for building partitions in tests and examples. Panics on bad input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// Is `small` contained in `big` componentwise, i.e. `α ⊆ μ` and `β ⊆ ν`.
pub fn pair_contained_in(small: (&Partition, &Partition), big: (&Partition, &Partition)) -> bool {
    big.0.contains(small.0) && big.1.contains(small.1)
}

/// Stembridge-style shape classes. Flags overlap: a near-rectangle is also a
/// fat hook, and a hook with two part sizes is a fat hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShapeClass {
    pub rectangle: bool,
    pub fat_hook: bool,
    pub near_rectangle: bool,
    pub hook: bool,
    rows: usize,
    cols: usize,
}

impl ShapeClass {
    fn of(p: &Partition) -> Result<ShapeClass> {
        if p.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let sizes = p.distinct_parts();
        let rectangle = sizes.len() == 1;
        let fat_hook = sizes.len() == 2;
        let near_rectangle = fat_hook && {
            // (a^r, b^s) with a > b
            let (a, b) = (sizes[0], sizes[1]);
            let r = p.parts().iter().filter(|&&x| x == a).count();
            let s = p.len() - r;
            r == 1 || s == 1 || b == 1 || a - b == 1
        };
        Ok(ShapeClass {
            rectangle,
            fat_hook,
            near_rectangle,
            hook: p.is_hook(),
            rows: p.len(),
            cols: p.first() as usize,
        })
    }

    /// A rectangle with exactly `k` rows or exactly `k` columns.
    pub fn is_k_line_rectangle(&self, k: usize) -> bool {
        self.rectangle && (self.rows == k || self.cols == k)
    }

    pub fn is_other(&self) -> bool {
        !(self.rectangle || self.fat_hook || self.near_rectangle || self.hook)
    }
}

/// A finite integer sequence, possibly unsorted and possibly negative.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSequence(pub Vec<i64>);

impl IntSequence {
    pub fn new(v: Vec<i64>) -> Self {
        IntSequence(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Stable sort into weakly decreasing order.
    pub fn sorted_desc(&self) -> IntSequence {
        let mut v = self.0.clone();
        v.sort_by(|a, b| b.cmp(a));
        IntSequence(v)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Number of pairs `i < j` with `a_i > a_j`.
    pub fn inversions(&self) -> usize {
        let v = &self.0;
        let mut n = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// Elementwise sum of two sequences of equal length.
    pub fn plus(&self, other: &IntSequence) -> Result<IntSequence> {
        if self.len() != other.len() {
            return Err(Error::BadInput(format!(
                "length mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(IntSequence(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Dominance order on weakly decreasing sequences with equal sums.
    /// The shorter sequence is padded with zeros.
    pub fn dominance_leq(&self, other: &IntSequence) -> Result<bool> {
        if !self.is_weakly_decreasing() || !other.is_weakly_decreasing() {
            return Err(Error::BadInput(
                "dominance order needs weakly decreasing sequences".into(),
            ));
        }
        if self.total() != other.total() {
            return Err(Error::SumMismatch {
                left: self.total(),
                right: other.total(),
            });
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0i64, 0i64);
        for i in 0..n {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl From<&Partition> for IntSequence {
    fn from(p: &Partition) -> Self {
        IntSequence(p.parts().iter().map(|&x| x as i64).collect())
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A skew shape given by its description `outer/inner`.
///
/// Equality compares descriptions, so `21/1` and `32/21` are different
/// shapes even though their cells agree up to translation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Strip and ribbon properties of the explicit cell set of a skew shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StripKind {
    pub horizontal_strip: bool,
    pub vertical_strip: bool,
    pub weak_ribbon: bool,
    pub ribbon: bool,
    pub skewed_hook: bool,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells as 0-based `(row, column)` pairs, row by row from the bottom.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.size());
        for r in 0..self.outer.len() {
            for c in self.inner.part(r) as usize..self.outer.part(r) as usize {
                v.push((r, c));
            }
        }
        v
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        (col as u32) < self.outer.part(row) && (col as u32) >= self.inner.part(row)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Row lengths sorted into a partition.
    pub fn row_lengths(&self) -> Partition {
        Partition::from_unsorted(
            (0..self.outer.len()).map(|r| self.outer.part(r) - self.inner.part(r)),
        )
    }

    /// Column lengths sorted into a partition.
    pub fn col_lengths(&self) -> Partition {
        self.conjugate().row_lengths()
    }

    pub fn strip_kind(&self) -> StripKind {
        let cols: Vec<u32> = {
            let (o, i) = (self.outer.conjugate(), self.inner.conjugate());
            (0..o.len()).map(|c| o.part(c) - i.part(c)).collect()
        };
        let rows: Vec<u32> = (0..self.outer.len())
            .map(|r| self.outer.part(r) - self.inner.part(r))
            .collect();
        let horizontal_strip = cols.iter().all(|&c| c <= 1);
        let vertical_strip = rows.iter().all(|&r| r <= 1);
        let weak_ribbon = !self.cells().iter().any(|&(r, c)| {
            self.contains_cell(r + 1, c)
                && self.contains_cell(r, c + 1)
                && self.contains_cell(r + 1, c + 1)
        });
        let ribbon = weak_ribbon && !self.is_empty() && self.is_connected();
        let skewed_hook = self.outer.is_hook() && self.inner.is_hook();
        StripKind {
            horizontal_strip,
            vertical_strip,
            weak_ribbon,
            ribbon,
            skewed_hook,
        }
    }

    /// Edgewise connectivity of the cell set.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        let Some(&start) = cells.first() else {
            return true;
        };
        let mut seen = std::collections::HashSet::from([start]);
        let mut stack = vec![start];
        while let Some((r, c)) = stack.pop() {
            let mut nbrs = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                nbrs.push((r - 1, c));
            }
            if c > 0 {
                nbrs.push((r, c - 1));
            }
            for (nr, nc) in nbrs {
                if self.contains_cell(nr, nc) && seen.insert((nr, nc)) {
                    stack.push((nr, nc));
                }
            }
        }
        seen.len() == cells.len()
    }

    /// Every row of `inner` and every column of `inner` is followed by at
    /// least one cell of the shape.
    pub fn is_minimal_pair(&self) -> bool {
        let rows_ok = (0..self.inner.len()).all(|i| self.inner.part(i) < self.outer.part(i));
        let (ic, oc) = (self.inner.conjugate(), self.outer.conjugate());
        let cols_ok = (0..ic.len()).all(|j| ic.part(j) < oc.part(j));
        rows_ok && cols_ok
    }

    pub(crate) fn parse_bounded(s: &str, limit: u64) -> Result<SkewShape> {
        let (o, i) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        let outer = Partition::parse_bounded(o, limit)?;
        let inner = Partition::parse_bounded(i, limit)?;
        SkewShape::new(outer, inner)
    }

    pub fn parse_with_limit(s: &str, limit: u64) -> Result<SkewShape> {
        Self::parse_bounded(s, limit)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SkewShape::parse_bounded(s, DEFAULT_SUM_LIMIT)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

/// Lexicographic comparison of part sequences (`3221 < 5`).
pub fn lex_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.parts().cmp(b.parts())
}
