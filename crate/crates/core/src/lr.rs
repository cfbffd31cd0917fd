//! Littlewood-Richardson fillings.
//!
//! Two enumerators live here. [`enumerate_lr_fillings`] walks the cells in
//! reading order (bottom row first, right to left), which makes the lattice
//! condition an incremental check and yields fillings sorted by reading
//! word. The row-at-a-time enumerator behind [`skew_schur_expand`] and
//! [`product_terms`] places a whole row per step as a multiset of letters and
//! is the one used for products, where the outer shape is not known upfront.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::schur::SchurVector;

/// A semistandard filling of a skew shape whose reading word is a lattice word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LRFilling {
    pub shape: SkewShape,
    /// Entries of each row of the shape, bottom row first, left to right.
    pub rows: Vec<Vec<u32>>,
}

impl LRFilling {
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    pub fn content(&self) -> Partition {
        let mut counts: Vec<u32> = Vec::new();
        for &x in self.rows.iter().flatten() {
            let i = x as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        Partition::from_unsorted(counts)
    }

    /// Rows weakly increase and columns strictly increase upwards.
    pub fn is_semistandard(&self) -> bool {
        let inner = self.shape.inner();
        let outer = self.shape.outer();
        if self.rows.len() != outer.len() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != (outer.part(r) - inner.part(r)) as usize {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) || row.contains(&0) {
                return false;
            }
            if r == 0 {
                continue;
            }
            let below = &self.rows[r - 1];
            let below_start = inner.part(r - 1) as usize;
            for (k, &x) in row.iter().enumerate() {
                let col = inner.part(r) as usize + k;
                if col >= below_start
                    && col - below_start < below.len()
                    && below[col - below_start] >= x
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Every prefix has at least as many `i`s as `i+1`s.
pub fn is_lattice(word: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        let i = x as usize - 1;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
        if i > 0 && counts[i - 1] < counts[i] {
            return false;
        }
    }
    true
}

fn reading_order_cells(shape: &SkewShape) -> Vec<(usize, usize)> {
    let outer = shape.outer();
    let inner = shape.inner();
    let mut cells = Vec::with_capacity(shape.size());
    for r in 0..outer.len() {
        for c in (inner.part(r) as usize..outer.part(r) as usize).rev() {
            cells.push((r, c));
        }
    }
    cells
}

struct ReadingOrderSearch<'a> {
    shape: &'a SkewShape,
    cells: Vec<(usize, usize)>,
    content: Vec<u32>,
    counts: Vec<u32>,
    grid: Vec<Vec<u32>>,
}

impl<'a> ReadingOrderSearch<'a> {
    fn new(shape: &'a SkewShape, content: &Partition) -> Result<Self> {
        if shape.size() != content.size() {
            return Err(Error::SizeMismatch {
                cells: shape.size(),
                content: content.size(),
            });
        }
        let width = shape.outer().first() as usize;
        Ok(ReadingOrderSearch {
            shape,
            cells: reading_order_cells(shape),
            content: content.parts().to_vec(),
            counts: vec![0; content.len()],
            grid: vec![vec![0; width]; shape.outer().len()],
        })
    }

    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&Self)) {
        if idx == self.cells.len() {
            visit(self);
            return;
        }
        let (r, c) = self.cells[idx];
        let upper = if self.shape.contains_cell(r, c + 1) {
            self.grid[r][c + 1]
        } else {
            u32::MAX
        };
        let lower = if r > 0 && self.shape.contains_cell(r - 1, c) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let top = (self.content.len() as u32).min(upper);
        for v in lower..=top {
            let i = v as usize - 1;
            if self.counts[i] >= self.content[i] {
                continue;
            }
            if i > 0 && self.counts[i - 1] <= self.counts[i] {
                continue;
            }
            self.counts[i] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1, visit);
            self.counts[i] -= 1;
        }
        self.grid[r][c] = 0;
    }

    fn filling(&self) -> LRFilling {
        let outer = self.shape.outer();
        let inner = self.shape.inner();
        let rows = (0..outer.len())
            .map(|r| self.grid[r][inner.part(r) as usize..outer.part(r) as usize].to_vec())
            .collect();
        LRFilling {
            shape: self.shape.clone(),
            rows,
        }
    }
}

/// All LR-fillings of `shape` with the given content, ordered by reading word.
pub fn enumerate_lr_fillings(shape: &SkewShape, content: &Partition) -> Result<Vec<LRFilling>> {
    let mut search = ReadingOrderSearch::new(shape, content)?;
    let mut out = Vec::new();
    search.run(0, &mut |s| out.push(s.filling()));
    Ok(out)
}

/// Number of LR-fillings of `shape` with the given content.
pub fn count_lr_fillings(shape: &SkewShape, content: &Partition) -> Result<u64> {
    let mut search = ReadingOrderSearch::new(shape, content)?;
    let mut n = 0u64;
    search.run(0, &mut |_| n += 1);
    Ok(n)
}

/// The Littlewood-Richardson coefficient `c^θ_{μν}`; zero unless `μ ⊆ θ` and
/// `|θ| = |μ| + |ν|`.
pub fn lr_coefficient(theta: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !theta.contains(mu) || theta.size() != mu.size() + nu.size() {
        return 0;
    }
    let shape = SkewShape::new(theta.clone(), mu.clone()).expect("containment checked");
    count_lr_fillings(&shape, nu).expect("sizes checked")
}

/// `(θ/μ) * (π/ν)`: the second shape is placed above and to the left of the
/// first so that the two cell sets share no row and no column.
pub fn star_concatenate(a: &SkewShape, b: &SkewShape) -> SkewShape {
    if b.is_empty() {
        return a.clone();
    }
    if a.is_empty() {
        return b.clone();
    }
    let shift = b.outer().first();
    let rows = a.outer().len();
    let mut outer: Vec<u32> = a.outer().parts().iter().map(|&p| p + shift).collect();
    outer.extend_from_slice(b.outer().parts());
    let mut inner: Vec<u32> = (0..rows).map(|i| a.inner().part(i) + shift).collect();
    inner.extend((0..b.outer().len()).map(|i| b.inner().part(i)));
    SkewShape::new(
        Partition::from_padded(&outer),
        Partition::from_padded(&inner),
    )
    .expect("star concatenation yields a valid skew shape")
}

/// Row-at-a-time LR enumeration.
///
/// Either the outer shape is fixed and the content is free (skew expansion),
/// or the content is fixed and the outer shape is free (products). Each row is
/// filled with a sorted multiset of letters; letter `v` may appear in row `r`
/// only if `v <= r + 1`, and the lattice condition for a row reduces to
/// `before[v] + row[v] <= before[v - 1]` because a row is read right to left.
struct RowSearch<'a, F> {
    inner: Vec<u32>,
    outer: Option<Vec<u32>>,
    content: Option<&'a [u32]>,
    total: u32,
    nrows: usize,
    inner_len: usize,
    counts: Vec<u32>,
    // letters placed in each row, indexed by row then letter
    row_counts: Vec<Vec<u32>>,
    rows: Vec<Vec<u32>>,
    outer_now: Vec<u32>,
    emit: F,
}

impl<'a, F: FnMut(&[u32], &[u32])> RowSearch<'a, F> {
    fn start_row(&mut self, r: usize, placed: u32) {
        if placed == self.total {
            let mut shape = self.outer_now[..r].to_vec();
            shape.extend_from_slice(&self.inner[r..]);
            (self.emit)(&shape, &self.counts);
            return;
        }
        if r == self.nrows {
            return;
        }
        let start = self.inner[r];
        let room = match &self.outer {
            Some(o) => o[r] - start,
            None if r == 0 => self.total - placed,
            None => (self.outer_now[r - 1] - start).min(self.total - placed),
        };
        if room == 0 && self.outer.is_none() && r >= self.inner_len {
            return;
        }
        self.rows[r].clear();
        let nvals = match self.content {
            Some(c) => c.len().min(r + 1),
            None => r + 1,
        };
        if self.counts.len() < nvals {
            self.counts.resize(nvals, 0);
        }
        self.row_counts[r].clear();
        self.row_counts[r].resize(nvals, 0);
        self.fill(r, 1, nvals as u32, start, room, placed);
    }

    fn fill(&mut self, r: usize, v: u32, nvals: u32, col: u32, room: u32, placed: u32) {
        let exact = self.outer.is_some();
        if v > nvals || room == 0 {
            if exact && room > 0 {
                return;
            }
            // commit the row
            for i in 0..nvals as usize {
                self.counts[i] += self.row_counts[r][i];
            }
            let row_len = col - self.inner[r];
            self.outer_now[r] = col;
            self.start_row(r + 1, placed + row_len);
            for i in 0..nvals as usize {
                self.counts[i] -= self.row_counts[r][i];
            }
            return;
        }
        let i = v as usize - 1;
        let mut kmax = room;
        if i > 0 {
            kmax = kmax.min(self.counts[i - 1].saturating_sub(self.counts[i]));
        }
        if let Some(c) = self.content {
            kmax = kmax.min(c[i] - self.counts[i]);
        }
        // column strictness against the row below
        if r > 0 {
            let below_start = self.inner[r - 1];
            let below_end = self.outer_now[r - 1];
            let mut k = 0;
            while k < kmax {
                let j = col + k;
                if j >= below_start && j < below_end {
                    let below = self.rows[r - 1][(j - below_start) as usize];
                    if below >= v {
                        break;
                    }
                }
                k += 1;
            }
            kmax = k;
        }
        let base = self.rows[r].len();
        for k in (0..=kmax).rev() {
            self.rows[r].truncate(base);
            self.rows[r].extend(std::iter::repeat_n(v, k as usize));
            self.row_counts[r][i] = k;
            self.fill(r, v + 1, nvals, col + k, room - k, placed);
        }
        self.row_counts[r][i] = 0;
        self.rows[r].truncate(base);
    }
}

fn run_row_search<F: FnMut(&[u32], &[u32])>(
    inner: &Partition,
    outer: Option<&Partition>,
    content: Option<&Partition>,
    emit: F,
) {
    let nrows = match (outer, content) {
        (Some(o), _) => o.len(),
        (None, Some(c)) => inner.len() + c.len(),
        (None, None) => unreachable!("either outer or content must be fixed"),
    };
    let total = match (outer, content) {
        (Some(o), _) => (o.size() - inner.size()) as u32,
        (None, Some(c)) => c.size() as u32,
        (None, None) => unreachable!(),
    };
    let pad = |p: &Partition| -> Vec<u32> { (0..nrows.max(1)).map(|i| p.part(i)).collect() };
    let mut search = RowSearch {
        inner: pad(inner),
        outer: outer.map(pad),
        content: content.map(|c| c.parts()),
        total,
        nrows,
        inner_len: inner.len(),
        counts: Vec::new(),
        row_counts: vec![Vec::new(); nrows.max(1)],
        rows: vec![Vec::new(); nrows.max(1)],
        outer_now: vec![0; nrows.max(1)],
        emit,
    };
    search.start_row(0, 0);
}

/// Schur expansion of a skew Schur function: the coefficient of `s_ν` in
/// `s_{θ/μ}` is `c^θ_{μν}`.
pub fn skew_schur_expand(shape: &SkewShape) -> SchurVector {
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    run_row_search(shape.inner(), Some(shape.outer()), None, |_, counts| {
        let end = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
        *acc.entry(counts[..end].to_vec()).or_insert(0) += 1;
    });
    SchurVector::from_counts(acc)
}

/// Terms of `s_μ s_ν` by LR-fillings of `θ/μ` with content `ν`, θ free.
pub(crate) fn product_terms(mu: &Partition, nu: &Partition) -> HashMap<Vec<u32>, i64> {
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    if nu.is_empty() {
        acc.insert(mu.parts().to_vec(), 1);
        return acc;
    }
    run_row_search(mu, None, Some(nu), |shape, _| {
        let end = shape.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
        *acc.entry(shape[..end].to_vec()).or_insert(0) += 1;
    });
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn skew(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice(&[1, 1, 2, 2, 1, 3, 1, 2]));
        assert!(!is_lattice(&[2]));
        assert!(is_lattice(&[1, 1, 2, 2, 1, 2]));
        assert!(is_lattice(&[]));
        assert!(!is_lattice(&[1, 2, 2]));
    }

    #[test]
    fn fillings_of_4421_over_21() {
        let f = enumerate_lr_fillings(&skew("4,4,2,1/2,1"), &part![4, 3, 1]).unwrap();
        let words: Vec<Vec<u32>> = f.iter().map(|f| f.reading_word()).collect();
        assert_eq!(
            words,
            vec![vec![1, 1, 2, 2, 1, 2, 1, 3], vec![1, 1, 2, 2, 1, 3, 1, 2]]
        );
        // the second one is the tableau with a 2 in the top cell
        assert_eq!(
            f[1].rows,
            vec![vec![1, 1], vec![1, 2, 2], vec![1, 3], vec![2]]
        );
        for t in &f {
            assert!(t.is_semistandard());
            assert_eq!(t.content(), part![4, 3, 1]);
        }
    }

    #[test]
    fn empty_and_rectangle_fillings() {
        let f = enumerate_lr_fillings(&skew("3,1/3,1"), &Partition::empty()).unwrap();
        assert_eq!(f.len(), 1);
        assert!(f[0].reading_word().is_empty());
        let f = enumerate_lr_fillings(&skew("4,4/2,2"), &part![2, 2]).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].rows, vec![vec![1, 1], vec![2, 2]]);
        assert!(matches!(
            enumerate_lr_fillings(&skew("4,4/2,2"), &part![3]),
            Err(Error::SizeMismatch {
                cells: 4,
                content: 3
            })
        ));
    }

    #[test]
    fn coefficients() {
        assert_eq!(
            lr_coefficient(&part![4, 4, 2, 1], &part![2, 1], &part![4, 3, 1]),
            2
        );
        assert_eq!(
            lr_coefficient(&part![3, 2, 1], &part![2, 1], &part![2, 1]),
            2
        );
        assert_eq!(lr_coefficient(&part![4, 4], &part![2, 2, 2], &part![2]), 0);
        assert_eq!(lr_coefficient(&part![3], &part![1], &part![1, 1]), 0);
    }

    #[test]
    fn star_concatenation() {
        let one = skew("1");
        assert_eq!(star_concatenate(&one, &one), skew("2,1/1"));
        assert_eq!(star_concatenate(&skew("2"), &skew("1")), skew("3,1/1"));
        let a = skew("3,2/1");
        assert_eq!(star_concatenate(&a, &skew("2,1/2,1")), a);
        assert_eq!(star_concatenate(&skew("2/2"), &a), a);
        let s = star_concatenate(&skew("2,1/1"), &skew("2,2/1"));
        assert_eq!(s.size(), 5);
        assert_eq!(s.row_lengths(), part![2, 1, 1, 1]);
    }

    #[test]
    fn skew_expansions() {
        let v = skew_schur_expand(&skew("2,1/1"));
        assert_eq!(v.terms().len(), 2);
        assert_eq!(v.coeff(&part![2]), 1);
        assert_eq!(v.coeff(&part![1, 1]), 1);
        let v = skew_schur_expand(&skew("3,2"));
        assert_eq!(v, SchurVector::schur(part![3, 2]));
        let v = skew_schur_expand(&skew("4,4,2,1/2,1"));
        assert_eq!(v.coeff(&part![4, 3, 1]), 2);
        assert_eq!(skew_schur_expand(&skew("2/2")), SchurVector::one());
    }
}
