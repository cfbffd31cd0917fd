//! Posets of unordered pairs of partitions, ordered by Schur-positivity of
//! the difference of products.
//!
//! `(μ, ν) < (τ, σ)` when `s_τ s_σ − s_μ s_ν` is Schur-positive and nonzero.
//! Distinct pairs with equal products would break antisymmetry; construction
//! checks for this and fails with [`Error::NotAntisymmetric`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::lr_coefficient;
use crate::partition::{partitions_of, Partition};
use crate::schur::{h_to_schur, ProductCache, SchurVector};

/// Largest `n` accepted by [`build_pn`] unless a caller passes its own bound.
pub const DEFAULT_PN_BOUND: usize = 10;

/// An unordered pair, stored with the lexicographically smaller partition
/// second.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Partition, Partition)", into = "(Partition, Partition)")]
pub struct PairElement {
    first: Partition,
    second: Partition,
}

impl PairElement {
    pub fn new(a: Partition, b: Partition) -> Self {
        if a >= b {
            PairElement {
                first: a,
                second: b,
            }
        } else {
            PairElement {
                first: b,
                second: a,
            }
        }
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    fn product(&self) -> Arc<SchurVector> {
        ProductCache::global().product(&self.first, &self.second)
    }
}

impl From<(Partition, Partition)> for PairElement {
    fn from((a, b): (Partition, Partition)) -> Self {
        PairElement::new(a, b)
    }
}

impl From<PairElement> for (Partition, Partition) {
    fn from(p: PairElement) -> Self {
        (p.first, p.second)
    }
}

impl fmt::Display for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.first, self.second)
    }
}

/// How elements are labelled in DOT output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelStyle {
    /// Only the lexicographically smaller component, or the other one if
    /// that is empty.
    Smaller,
    /// Both components, empty ones omitted.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<PairElement>,
    /// `less[i][j]` iff element `i` is strictly below element `j`.
    less: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    label_style: LabelStyle,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    label_style: LabelStyle,
    elements: Vec<PairElement>,
    relations: Vec<(usize, usize)>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from a strict order, checking irreflexivity,
    /// antisymmetry and transitivity.
    pub fn from_relation(
        elements: Vec<PairElement>,
        less: Vec<Vec<bool>>,
        label_style: LabelStyle,
    ) -> Result<Poset> {
        let n = elements.len();
        if less.len() != n || less.iter().any(|r| r.len() != n) {
            return Err(Error::BadInput(
                "relation matrix has the wrong shape".into(),
            ));
        }
        for i in 0..n {
            if less[i][i] {
                return Err(Error::NotAntisymmetric(format!("{} < itself", elements[i])));
            }
            for j in 0..n {
                if less[i][j] && less[j][i] {
                    return Err(Error::NotAntisymmetric(format!(
                        "{} and {} are below each other",
                        elements[i], elements[j]
                    )));
                }
                if less[i][j] {
                    for k in 0..n {
                        if less[j][k] && !less[i][k] {
                            return Err(Error::BadInput(format!(
                                "relation is not transitive at {}, {}, {}",
                                elements[i], elements[j], elements[k]
                            )));
                        }
                    }
                }
            }
        }
        let covers = transitive_reduction(&less);
        Ok(Poset {
            elements,
            less,
            covers,
            label_style,
        })
    }

    pub fn elements(&self) -> &[PairElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, e: &PairElement) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    /// All strict relations `(i, j)` with `i < j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.less[i][j])
            .collect()
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.less[j][i]).count());
        let mut h = vec![0; n];
        for &i in &order {
            h[i] = (0..n)
                .filter(|&j| self.less[j][i])
                .map(|j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| i == j || self.less[i][j] || self.less[j][i]))
    }

    fn label(&self, e: &PairElement) -> String {
        match self.label_style {
            LabelStyle::Smaller => {
                if e.second.is_empty() {
                    e.first.to_string()
                } else {
                    e.second.to_string()
                }
            }
            LabelStyle::Both => {
                let shown: Vec<String> = [&e.first, &e.second]
                    .into_iter()
                    .filter(|p| !p.is_empty())
                    .map(|p| p.to_string())
                    .collect();
                if shown.is_empty() {
                    "∅".to_string()
                } else {
                    shown.join(" | ")
                }
            }
        }
    }

    /// Hasse diagram in DOT, drawn bottom to top with one rank per height.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", self.label(e));
        }
        let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, h) in self.heights().into_iter().enumerate() {
            ranks.entry(h).or_default().push(i);
        }
        for ids in ranks.values() {
            let names: Vec<String> = ids.iter().map(|i| format!("n{i}")).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn export_json(&self) -> String {
        let doc = PosetJson {
            label_style: self.label_style,
            elements: self.elements.clone(),
            relations: self.relations(),
            covers: self.covers.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("poset serializes")
    }

    /// Parses the output of [`Poset::export_json`], revalidating the order.
    pub fn from_json(s: &str) -> Result<Poset> {
        let doc: PosetJson =
            serde_json::from_str(s).map_err(|e| Error::BadInput(format!("poset JSON: {e}")))?;
        let n = doc.elements.len();
        let mut less = vec![vec![false; n]; n];
        for (i, j) in doc.relations {
            if i >= n || j >= n {
                return Err(Error::BadInput(format!("relation ({i}, {j}) out of range")));
            }
            less[i][j] = true;
        }
        let p = Poset::from_relation(doc.elements, less, doc.label_style)?;
        if p.covers != doc.covers {
            return Err(Error::BadInput("covers do not match relations".into()));
        }
        Ok(p)
    }
}

fn transitive_reduction(less: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = less.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if less[i][j] && !(0..n).any(|k| less[i][k] && less[k][j]) {
                covers.push((i, j));
            }
        }
    }
    covers
}

/// Compares every pair of products. `less[i][j]` iff the difference
/// `product(j) − product(i)` is Schur-positive and nonzero.
fn schur_positivity_order(
    products: &[Arc<SchurVector>],
    elements: &[PairElement],
) -> Result<Vec<Vec<bool>>> {
    let n = products.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let cmp: Vec<(usize, usize, Option<bool>)> = pairs
        .par_iter()
        .map(|&(i, j)| (i, j, compare(&products[i], &products[j])))
        .collect();
    let mut less = vec![vec![false; n]; n];
    for (i, j, c) in cmp {
        match c {
            Some(true) => less[i][j] = true,
            Some(false) => less[j][i] = true,
            None => {}
        }
        if products[i] == products[j] {
            return Err(Error::NotAntisymmetric(format!(
                "{} and {} have the same product",
                elements[i], elements[j]
            )));
        }
    }
    Ok(less)
}

/// `Some(true)` if `b − a` is Schur-positive and nonzero, `Some(false)` if
/// `a − b` is, `None` if neither.
fn compare(a: &SchurVector, b: &SchurVector) -> Option<bool> {
    if a == b {
        return None;
    }
    let keys: BTreeSet<&Partition> = a.terms().keys().chain(b.terms().keys()).collect();
    let (mut up, mut down) = (true, true);
    for k in keys {
        let (x, y) = (a.coeff(k), b.coeff(k));
        up &= y >= x;
        down &= x >= y;
    }
    match (up, down) {
        (true, _) => Some(true),
        (_, true) => Some(false),
        _ => None,
    }
}

fn build_from_elements(elements: Vec<PairElement>, style: LabelStyle) -> Result<Poset> {
    let products: Vec<Arc<SchurVector>> = elements.par_iter().map(|e| e.product()).collect();
    let less = schur_positivity_order(&products, &elements)?;
    Poset::from_relation(elements, less, style)
}

/// All unordered pairs `(μ, ν)` with `|μ| + |ν| = n`, in a fixed order.
pub fn pairs_of_size(n: usize) -> Vec<PairElement> {
    let mut set = BTreeSet::new();
    for a in 0..=n / 2 {
        for mu in partitions_of(a) {
            for nu in partitions_of(n - a) {
                set.insert(PairElement::new(mu.clone(), nu));
            }
        }
    }
    set.into_iter().collect()
}

/// `P_n` with the default bound on `n`.
pub fn build_pn(n: usize) -> Result<Poset> {
    build_pn_bounded(n, DEFAULT_PN_BOUND)
}

pub fn build_pn_bounded(n: usize, max: usize) -> Result<Poset> {
    if n > max {
        return Err(Error::BoundExceeded { bound: n, max });
    }
    build_from_elements(pairs_of_size(n), LabelStyle::Both)
}

/// All ways of splitting the parts of `gamma` between two partitions, up to
/// swapping the two.
pub fn dealings(gamma: &Partition) -> Vec<PairElement> {
    let blocks = blocks(gamma);
    let mut set = BTreeSet::new();
    let mut counts = vec![0usize; blocks.len()];
    loop {
        set.insert(deal_by_counts(&blocks, &counts));
        let mut i = 0;
        loop {
            if i == blocks.len() {
                return set.into_iter().collect();
            }
            if counts[i] < blocks[i].1 {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// Runs of equal parts as `(value, multiplicity)`, largest first.
fn blocks(gamma: &Partition) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &x in gamma.parts() {
        match out.last_mut() {
            Some((v, m)) if *v == x => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// The pair taking `counts[i]` parts from block `i` into the first partition.
fn deal_by_counts(blocks: &[(u32, usize)], counts: &[usize]) -> PairElement {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (&(v, m), &c) in blocks.iter().zip(counts) {
        a.extend(std::iter::repeat_n(v, c));
        b.extend(std::iter::repeat_n(v, m - c));
    }
    PairElement::new(Partition::from_unsorted(a), Partition::from_unsorted(b))
}

fn counts_of(blocks: &[(u32, usize)], p: &Partition) -> Vec<usize> {
    blocks
        .iter()
        .map(|&(v, _)| p.parts().iter().filter(|&&x| x == v).count())
        .collect()
}

/// `P(γ)`: the dealings of `γ` with the order induced from `P_{|γ|}`.
pub fn build_dealings(gamma: &Partition) -> Result<Poset> {
    build_from_elements(dealings(gamma), LabelStyle::Smaller)
}

/// The unique element above all others, if there is one.
pub fn maximum_element(p: &Poset) -> Option<&PairElement> {
    let n = p.len();
    (0..n)
        .find(|&i| (0..n).all(|j| j == i || p.less(j, i)))
        .map(|i| &p.elements[i])
}

/// Maps each dealing of `g1` to the dealing of `g2` that takes the same
/// number of parts from each run of equal parts. The two partitions must
/// have the same pattern of strict descents.
pub fn canonical_dealing_map(
    g1: &Partition,
    g2: &Partition,
    p1: &Poset,
    p2: &Poset,
) -> Result<Vec<usize>> {
    let (b1, b2) = (blocks(g1), blocks(g2));
    let shape1: Vec<usize> = b1.iter().map(|b| b.1).collect();
    let shape2: Vec<usize> = b2.iter().map(|b| b.1).collect();
    if shape1 != shape2 {
        return Err(Error::BadInput(format!(
            "{g1} and {g2} have different patterns of equal parts"
        )));
    }
    p1.elements
        .iter()
        .map(|e| {
            let image = deal_by_counts(&b2, &counts_of(&b1, &e.first));
            p2.index_of(&image)
                .ok_or_else(|| Error::BadInput(format!("{image} is not an element of the target")))
        })
        .collect()
}

/// Every relation of `p` holds in `q` between the images under `map`.
pub fn is_weak_subposet(p: &Poset, q: &Poset, map: &[usize]) -> Result<bool> {
    if p.len() != q.len() || map.len() != p.len() {
        return Err(Error::PosetSizeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(p.relations()
        .into_iter()
        .all(|(i, j)| q.less(map[i], map[j])))
}

/// Whether `map` is an order isomorphism from `p` onto `q`.
pub fn is_isomorphism(p: &Poset, q: &Poset, map: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    (0..n).all(|i| (0..n).all(|j| p.less(i, j) == q.less(map[i], map[j])))
}

type Fingerprint = (usize, usize, usize, usize, usize);

fn fingerprints(p: &Poset) -> Vec<Fingerprint> {
    let n = p.len();
    let heights = p.heights();
    (0..n)
        .map(|i| {
            let below = (0..n).filter(|&j| p.less(j, i)).count();
            let above = (0..n).filter(|&j| p.less(i, j)).count();
            let cov_in = p.covers.iter().filter(|c| c.1 == i).count();
            let cov_out = p.covers.iter().filter(|c| c.0 == i).count();
            (heights[i], below, above, cov_in, cov_out)
        })
        .collect()
}

/// Finds an order isomorphism by backtracking over candidates with equal
/// fingerprints.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    if q.len() != n || p.covers.len() != q.covers.len() {
        return None;
    }
    let (fp, fq) = (fingerprints(p), fingerprints(q));
    let mut sp = fp.clone();
    let mut sq = fq.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (fp.iter().filter(|&&f| f == fp[i]).count(), fp[i]));

    struct Search<'a> {
        order: Vec<usize>,
        p: &'a Poset,
        q: &'a Poset,
        fp: Vec<Fingerprint>,
        fq: Vec<Fingerprint>,
        map: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn go(&mut self, k: usize) -> bool {
            if k == self.order.len() {
                return true;
            }
            let i = self.order[k];
            for c in 0..self.q.len() {
                if self.used[c] || self.fq[c] != self.fp[i] {
                    continue;
                }
                let ok = self.order[..k].iter().all(|&j| {
                    let m = self.map[j].expect("assigned");
                    self.p.less(i, j) == self.q.less(c, m) && self.p.less(j, i) == self.q.less(m, c)
                });
                if !ok {
                    continue;
                }
                self.map[i] = Some(c);
                self.used[c] = true;
                if self.go(k + 1) {
                    return true;
                }
                self.map[i] = None;
                self.used[c] = false;
            }
            false
        }
    }

    let mut search = Search {
        order,
        p,
        q,
        fp,
        fq,
        map: vec![None; n],
        used: vec![false; n],
    };
    search.go(0).then(|| {
        search
            .map
            .into_iter()
            .map(|m| m.expect("complete"))
            .collect()
    })
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    find_isomorphism(p, q).is_some()
}

/// The witness `θ = ((2k)^r, k^{m−2r})` separating the `(r−1)`-th and `r`-th
/// dealings of `k^m`, with `c^θ_{k^{m−r+1}, k^{r−1}}` and `c^θ_{k^{m−r}, k^r}`.
pub fn chain_witness(k: u32, m: usize, r: usize) -> Result<(Partition, u64, u64)> {
    if r == 0 || r > m / 2 || k == 0 {
        return Err(Error::BadRank { r, max: m / 2 });
    }
    let theta = Partition::from_unsorted(
        std::iter::repeat_n(2 * k, r).chain(std::iter::repeat_n(k, m - 2 * r)),
    );
    let rect = |c: usize| Partition::rectangle(k, c);
    let low = lr_coefficient(&theta, &rect(m - r + 1), &rect(r - 1));
    let high = lr_coefficient(&theta, &rect(m - r), &rect(r));
    Ok((theta, low, high))
}

/// Partitions of `n` under `h_τ h_σ − h_μ h_ν` Schur-positive, with pairs of
/// equal union identified. Each class is represented by `(μ ∪ ν, ∅)`.
pub fn build_h_poset(n: usize) -> Result<Poset> {
    let elements: Vec<PairElement> = partitions_of(n)
        .into_iter()
        .map(|g| PairElement::new(g, Partition::empty()))
        .collect();
    let products = elements
        .iter()
        .map(|e| h_to_schur(&e.first).map(Arc::new))
        .collect::<Result<Vec<_>>>()?;
    let less = schur_positivity_order(&products, &elements)?;
    Poset::from_relation(elements, less, LabelStyle::Both)
}

/// Strict dominance order on the partitions of `n`, as `(λ, ∅)` elements.
pub fn dominance_poset(n: usize) -> Result<Poset> {
    let parts = partitions_of(n);
    let mut less = vec![vec![false; parts.len()]; parts.len()];
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate() {
            less[i][j] = i != j && a.dominance_leq(b)?;
        }
    }
    let elements = parts
        .into_iter()
        .map(|g| PairElement::new(g, Partition::empty()))
        .collect();
    Poset::from_relation(elements, less, LabelStyle::Both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::tilde::tilde_pair;

    fn el(a: Partition, b: Partition) -> PairElement {
        PairElement::new(a, b)
    }

    #[test]
    fn canonical_orientation() {
        let e = el(part![3, 2, 2, 1], part![5]);
        assert_eq!(e.first(), &part![5]);
        assert_eq!(e.second(), &part![3, 2, 2, 1]);
        assert_eq!(e, el(part![5], part![3, 2, 2, 1]));
        assert_eq!(
            el(Partition::empty(), part![1]).second(),
            &Partition::empty()
        );
    }

    #[test]
    fn p2_by_hand() {
        let p = build_pn(2).unwrap();
        assert_eq!(p.len(), 3);
        let i = |e: PairElement| p.index_of(&e).unwrap();
        let two = i(el(part![2], Partition::empty()));
        let ones = i(el(part![1, 1], Partition::empty()));
        let pair = i(el(part![1], part![1]));
        // s_1 s_1 = s_2 + s_11
        assert!(p.less(two, pair));
        assert!(p.less(ones, pair));
        assert!(!p.less(two, ones) && !p.less(ones, two));
        assert_eq!(maximum_element(&p), Some(&p.elements()[pair]));
    }

    #[test]
    fn pn_bound() {
        assert_eq!(
            build_pn_bounded(11, 10),
            Err(Error::BoundExceeded { bound: 11, max: 10 })
        );
    }

    #[test]
    fn dealings_of_11() {
        let p = build_dealings(&part![1, 1]).unwrap();
        assert_eq!(p.len(), 2);
        let lo = p.index_of(&el(part![1, 1], Partition::empty())).unwrap();
        let hi = p.index_of(&el(part![1], part![1])).unwrap();
        assert!(p.less(lo, hi));
        assert_eq!(p.covers(), &[(lo, hi)]);
    }

    #[test]
    fn maximum_of_53221() {
        let g = part![5, 3, 2, 2, 1];
        let p = build_dealings(&g).unwrap();
        let (l, r) = tilde_pair(&g, &Partition::empty());
        assert_eq!(maximum_element(&p), Some(&el(l, r)));
        assert_eq!(
            maximum_element(&p).unwrap(),
            &el(part![5, 2, 1], part![3, 2])
        );
    }

    #[test]
    fn no_maximum_in_antichain() {
        let elements = vec![
            el(part![2], Partition::empty()),
            el(part![1, 1], Partition::empty()),
        ];
        let p = Poset::from_relation(elements, vec![vec![false; 2]; 2], LabelStyle::Both).unwrap();
        assert_eq!(maximum_element(&p), None);
        assert!(!p.export_dot().contains("->"));
    }

    #[test]
    fn relation_checks() {
        let elements = vec![
            el(part![2], Partition::empty()),
            el(part![1, 1], Partition::empty()),
        ];
        let both = vec![vec![false, true], vec![true, false]];
        assert!(matches!(
            Poset::from_relation(elements, both, LabelStyle::Both),
            Err(Error::NotAntisymmetric(_))
        ));
    }

    #[test]
    fn rectangle_chains() {
        for k in 1..=3u32 {
            for m in 1..=5usize {
                let p = build_dealings(&Partition::rectangle(k, m)).unwrap();
                assert_eq!(p.len(), m / 2 + 1);
                assert!(p.is_chain());
                assert_eq!(p.export_dot().matches("->").count(), m / 2);
            }
        }
    }

    #[test]
    fn chain_witness_examples() {
        assert_eq!(chain_witness(2, 4, 2).unwrap(), (part![4, 4], 0, 1));
        assert_eq!(chain_witness(1, 2, 1).unwrap(), (part![2], 0, 1));
        assert_eq!(chain_witness(3, 5, 2).unwrap(), (part![6, 6, 3], 0, 1));
        assert_eq!(chain_witness(2, 4, 3), Err(Error::BadRank { r: 3, max: 2 }));
        assert_eq!(chain_witness(2, 4, 0), Err(Error::BadRank { r: 0, max: 2 }));
    }

    #[test]
    fn json_round_trip() {
        let p = build_dealings(&part![4, 3, 2, 2, 1]).unwrap();
        let q = Poset::from_json(&p.export_json()).unwrap();
        assert_eq!(p, q);
        assert!(is_isomorphic(&p, &p));
    }

    #[test]
    fn dot_labels() {
        let p = build_dealings(&part![5, 3, 2, 2, 1]).unwrap();
        let dot = p.export_dot();
        assert!(dot.contains("label=\"3,2,2,1\""));
        assert!(dot.contains("label=\"5,3,2,2,1\""));
        assert!(dot.contains("rankdir=BT"));
        let pn = build_pn(3).unwrap().export_dot();
        assert!(pn.contains("label=\"2,1 | 1\"") || pn.contains("label=\"2 | 1\""));
    }

    #[test]
    fn h_poset_is_dominance() {
        for n in 1..=6 {
            let h = build_h_poset(n).unwrap();
            let d = dominance_poset(n).unwrap();
            assert!(is_isomorphic(&h, &d), "n = {n}");
        }
    }
}
