//! Integer linear combinations of Schur functions.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::{product_terms, skew_schur_expand, star_concatenate};
use crate::partition::{Partition, SkewShape};

/// Environment variable bounding the number of Schur terms kept in the
/// shared product memo.
pub const MEMO_CAP_ENV: &str = "SCHURPOS_MEMO_CAP";

const DEFAULT_MEMO_CAP: usize = 2_000_000;

/// A finite sum `Σ c_λ s_λ` with nonzero integer coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchurVector {
    terms: BTreeMap<Partition, i64>,
}

/// One `{partition, coeff}` entry of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub partition: Partition,
    pub coeff: i64,
}

impl SchurVector {
    pub fn zero() -> Self {
        SchurVector::default()
    }

    /// `s_∅ = 1`.
    pub fn one() -> Self {
        SchurVector::schur(Partition::empty())
    }

    pub fn schur(p: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, 1);
        SchurVector { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(terms: I) -> Self {
        let mut v = SchurVector::zero();
        for (p, c) in terms {
            v.add_term(p, c);
        }
        v
    }

    pub(crate) fn from_counts(acc: HashMap<Vec<u32>, i64>) -> Self {
        SchurVector {
            terms: acc
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|(p, c)| (Partition::new(p).expect("LR shapes are partitions"), c))
                .collect(),
        }
    }

    fn add_term(&mut self, p: Partition, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut o) => {
                let v = o.get().checked_add(c).expect("Schur coefficient overflow");
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero counts as Schur-positive.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Terms with negative coefficients.
    pub fn negative_terms(&self) -> Vec<(Partition, i64)> {
        self.terms
            .iter()
            .filter(|(_, &c)| c < 0)
            .map(|(p, &c)| (p.clone(), c))
            .collect()
    }

    pub fn max_coeff(&self) -> i64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    /// Partitions with nonzero coefficient.
    pub fn support(&self) -> Vec<Partition> {
        self.terms.keys().cloned().collect()
    }

    /// Degrees of the terms, if all agree.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|p| p.size());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// `ω(s_λ) = s_λ'`.
    pub fn omega(&self) -> SchurVector {
        SchurVector {
            terms: self
                .terms
                .iter()
                .map(|(p, &c)| (p.conjugate(), c))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Result<SchurVector> {
        let mut terms = BTreeMap::new();
        if k != 0 {
            for (p, &c) in &self.terms {
                terms.insert(p.clone(), c.checked_mul(k).ok_or(Error::Overflow)?);
            }
        }
        Ok(SchurVector { terms })
    }

    pub fn checked_add(&self, other: &SchurVector) -> Result<SchurVector> {
        let mut terms = self.terms.clone();
        for (p, &c) in &other.terms {
            let e = terms.entry(p.clone()).or_insert(0);
            *e = e.checked_add(c).ok_or(Error::Overflow)?;
            if *e == 0 {
                terms.remove(p);
            }
        }
        Ok(SchurVector { terms })
    }

    pub fn checked_sub(&self, other: &SchurVector) -> Result<SchurVector> {
        let mut terms = self.terms.clone();
        for (p, &c) in &other.terms {
            let e = terms.entry(p.clone()).or_insert(0);
            *e = e.checked_sub(c).ok_or(Error::Overflow)?;
            if *e == 0 {
                terms.remove(p);
            }
        }
        Ok(SchurVector { terms })
    }

    pub fn to_json_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .map(|(p, &c)| Term {
                partition: p.clone(),
                coeff: c,
            })
            .collect()
    }
}

impl Add for &SchurVector {
    type Output = SchurVector;

    /// Panics on coefficient overflow; use [`SchurVector::checked_add`] to
    /// get an error instead.
    fn add(self, rhs: &SchurVector) -> SchurVector {
        self.checked_add(rhs).expect("Schur coefficient overflow")
    }
}

impl Sub for &SchurVector {
    type Output = SchurVector;

    fn sub(self, rhs: &SchurVector) -> SchurVector {
        self.checked_sub(rhs).expect("Schur coefficient overflow")
    }
}

impl Neg for &SchurVector {
    type Output = SchurVector;

    fn neg(self) -> SchurVector {
        self.scale(-1).expect("Schur coefficient overflow")
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "s[{p}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurVector({self})")
    }
}

impl Serialize for SchurVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        Ok(SchurVector::from_terms(
            terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

/// Memo of `s_μ s_ν` keyed by the unordered pair. Concurrent inserts of the
/// same key store equal values, so the memo behaves as a pure cache.
pub struct ProductCache {
    map: DashMap<(Partition, Partition), Arc<SchurVector>>,
    stored_terms: std::sync::atomic::AtomicUsize,
    cap_terms: usize,
}

impl ProductCache {
    pub fn new(cap_terms: usize) -> Self {
        ProductCache {
            map: DashMap::new(),
            stored_terms: Default::default(),
            cap_terms,
        }
    }

    /// The process-wide cache. Its capacity (in stored terms) comes from
    /// `SCHURPOS_MEMO_CAP`.
    pub fn global() -> &'static ProductCache {
        static CACHE: OnceLock<ProductCache> = OnceLock::new();
        CACHE.get_or_init(|| {
            let cap = std::env::var(MEMO_CAP_ENV)
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .unwrap_or(DEFAULT_MEMO_CAP);
            ProductCache::new(cap)
        })
    }

    pub fn product(&self, mu: &Partition, nu: &Partition) -> Arc<SchurVector> {
        let key = if mu <= nu {
            (mu.clone(), nu.clone())
        } else {
            (nu.clone(), mu.clone())
        };
        if let Some(v) = self.map.get(&key) {
            return Arc::clone(&v);
        }
        let v = Arc::new(schur_product(mu, nu));
        use std::sync::atomic::Ordering::Relaxed;
        if self.stored_terms.load(Relaxed) + v.len() <= self.cap_terms {
            self.stored_terms.fetch_add(v.len(), Relaxed);
            self.map.insert(key, Arc::clone(&v));
        }
        v
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// `s_μ s_ν` via the LR rule, without memoization.
pub fn schur_product(mu: &Partition, nu: &Partition) -> SchurVector {
    // The content side drives the branching; letting the partition with fewer
    // rows be the content keeps the letter alphabet small.
    let (inner, content) = if (nu.len(), nu.size()) <= (mu.len(), mu.size()) {
        (mu, nu)
    } else {
        (nu, mu)
    };
    SchurVector::from_counts(product_terms(inner, content))
}

/// Bilinear extension of the Schur product, using the shared memo.
pub fn multiply(a: &SchurVector, b: &SchurVector) -> Result<SchurVector> {
    let cache = ProductCache::global();
    let mut acc: HashMap<&Partition, i64> = HashMap::new();
    let mut products = Vec::new();
    for (p, &c) in a.terms() {
        for (q, &d) in b.terms() {
            let cd = c.checked_mul(d).ok_or(Error::Overflow)?;
            products.push((cache.product(p, q), cd));
        }
    }
    for (prod, k) in &products {
        for (t, &e) in prod.terms() {
            let slot = acc.entry(t).or_insert(0);
            let add = e.checked_mul(*k).ok_or(Error::Overflow)?;
            *slot = slot.checked_add(add).ok_or(Error::Overflow)?;
        }
    }
    Ok(SchurVector::from_terms(
        acc.into_iter().map(|(p, c)| (p.clone(), c)),
    ))
}

/// Product of several Schur functions.
pub fn multiply_all<'a, I: IntoIterator<Item = &'a Partition>>(parts: I) -> Result<SchurVector> {
    let mut acc = SchurVector::one();
    for p in parts {
        acc = multiply(&acc, &SchurVector::schur(p.clone()))?;
    }
    Ok(acc)
}

/// `s_{a} s_{b}` for skew shapes, through the single skew shape `a * b`.
pub fn multiply_skew(a: &SkewShape, b: &SkewShape) -> SchurVector {
    skew_schur_expand(&star_concatenate(a, b))
}

/// Partitions θ with `c^θ_{μν} ≠ 0`.
pub fn support(mu: &Partition, nu: &Partition) -> Vec<Partition> {
    ProductCache::global().product(mu, nu).support()
}

/// Support of `s_{a} s_{b}` for skew shapes.
pub fn support_skew(a: &SkewShape, b: &SkewShape) -> Vec<Partition> {
    multiply_skew(a, b).support()
}

/// `h_μ = h_{μ_1} h_{μ_2} ⋯` in the Schur basis.
pub fn h_to_schur(mu: &Partition) -> Result<SchurVector> {
    let rows: Vec<Partition> = mu
        .parts()
        .iter()
        .map(|&p| Partition::rectangle(p, 1))
        .collect();
    multiply_all(&rows)
}

/// `e_μ = e_{μ_1} e_{μ_2} ⋯` in the Schur basis.
pub fn e_to_schur(mu: &Partition) -> Result<SchurVector> {
    let cols: Vec<Partition> = mu
        .parts()
        .iter()
        .map(|&p| Partition::rectangle(1, p as usize))
        .collect();
    multiply_all(&cols)
}

/// Whether `h_θ − h_π` is Schur-positive, which happens exactly when `θ ⪯ π`.
pub fn h_difference_positive(theta: &Partition, pi: &Partition) -> Result<bool> {
    theta.dominance_leq(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn s(p: Partition) -> SchurVector {
        SchurVector::schur(p)
    }

    #[test]
    fn linear_ops() {
        let a = &s(part![2]) + &s(part![1, 1]);
        assert!((&a - &a).is_zero());
        assert_eq!(&a - &s(part![1, 1]), s(part![2]));
        assert!((-&SchurVector::zero()).is_zero());
        assert_eq!((&a - &a).len(), 0);
    }

    #[test]
    fn products() {
        let v = multiply(&s(part![1]), &s(part![1])).unwrap();
        assert_eq!(v, &s(part![2]) + &s(part![1, 1]));
        let v = multiply(&s(part![2, 1]), &s(part![4, 3, 1])).unwrap();
        assert_eq!(v.coeff(&part![4, 4, 2, 1]), 2);
        let v = multiply(&s(part![2, 1]), &s(part![2, 1])).unwrap();
        assert_eq!(v.coeff(&part![3, 2, 1]), 2);
        assert_eq!(v.degree(), Some(6));
        assert_eq!(multiply(&SchurVector::one(), &v).unwrap(), v);
        assert!(multiply(&SchurVector::zero(), &v).unwrap().is_zero());
    }

    #[test]
    fn positivity() {
        assert!((&s(part![2]) + &s(part![1, 1])).is_schur_positive());
        assert!(!(&s(part![2]) - &s(part![1, 1])).is_schur_positive());
        assert!(SchurVector::zero().is_schur_positive());
    }

    #[test]
    fn supports() {
        assert_eq!(support(&part![1], &part![1]), vec![part![1, 1], part![2]]);
        let mut s22 = support(&part![2], &part![2]);
        s22.sort();
        assert_eq!(s22, vec![part![2, 2], part![3, 1], part![4]]);
        let small = support(&part![4, 1, 1], &part![3, 1, 1, 1, 1, 1]);
        let big = support(&part![4, 1, 1, 1, 1], &part![3, 1, 1, 1]);
        assert!(small.iter().all(|t| big.contains(t)));
        assert!(small.contains(&part![6, 2, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(s(part![2, 1]).omega(), s(part![2, 1]));
        assert_eq!(s(part![3]).omega(), s(part![1, 1, 1]));
        let v = multiply(&s(part![2, 1]), &s(part![3])).unwrap();
        assert_eq!(v.omega().omega(), v);
    }

    #[test]
    fn h_and_e() {
        assert_eq!(
            h_to_schur(&part![1, 1]).unwrap(),
            &s(part![2]) + &s(part![1, 1])
        );
        assert_eq!(e_to_schur(&part![2]).unwrap(), s(part![1, 1]));
        for mu in crate::partition::partitions_of(5) {
            assert_eq!(h_to_schur(&mu).unwrap().omega(), e_to_schur(&mu).unwrap());
        }
        assert_eq!(h_to_schur(&Partition::empty()).unwrap(), SchurVector::one());
    }

    #[test]
    fn h_difference_examples() {
        let diff = |a: &Partition, b: &Partition| {
            (&h_to_schur(a).unwrap() - &h_to_schur(b).unwrap()).is_schur_positive()
        };
        let (t, p) = (part![2, 2], part![3, 1]);
        assert!(h_difference_positive(&t, &p).unwrap());
        assert!(diff(&t, &p));
        assert!(!diff(&p, &t));
        assert!(h_difference_positive(&t, &t).unwrap());
        let (a, b) = (part![3, 1, 1, 1], part![2, 2, 2]);
        assert!(!h_difference_positive(&a, &b).unwrap() && !h_difference_positive(&b, &a).unwrap());
        assert!(!diff(&a, &b) && !diff(&b, &a));
        assert!(h_difference_positive(&part![2], &part![1]).is_err());
    }

    #[test]
    fn skew_products() {
        let a: SkewShape = "2,1/1".parse().unwrap();
        let b: SkewShape = "1".parse().unwrap();
        let v = multiply_skew(&a, &b);
        // h_1^3 = s_3 + 2 s_21 + s_111
        assert_eq!(v, h_to_schur(&part![1, 1, 1]).unwrap());
        let e: SkewShape = "2/2".parse().unwrap();
        assert_eq!(multiply_skew(&e, &a), skew_schur_expand(&a));
        let (t, p) = (part![3, 1], part![2]);
        assert_eq!(
            multiply_skew(
                &SkewShape::straight(t.clone()),
                &SkewShape::straight(p.clone())
            ),
            multiply(&s(t), &s(p)).unwrap()
        );
    }

    #[test]
    fn json_form() {
        let v = &s(part![2]) - &s(part![1, 1]);
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(
            j,
            r#"[{"partition":[1,1],"coeff":-1},{"partition":[2],"coeff":1}]"#
        );
        let back: SchurVector = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn cache_respects_cap() {
        let c = ProductCache::new(3);
        let v = c.product(&part![2], &part![2]);
        assert_eq!(v.len(), 3);
        assert_eq!(c.len(), 1);
        c.product(&part![1], &part![1]);
        assert_eq!(c.len(), 1);
        assert_eq!(*c.product(&part![2], &part![2]), *v);
    }
}
