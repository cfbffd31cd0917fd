//! The dealing operation on pairs and tuples of partitions and on pairs of
//! skew shapes.
//!
//! The parts of the inputs are merged into one decreasing list and dealt out
//! like cards: the first, third, fifth, ... parts go to the first output and
//! the rest to the second. On conjugates this balances every column length
//! pair `(a, b)` into `(⌈(a+b)/2⌉, ⌊(a+b)/2⌋)`, which is how
//! [`tilde_pair_by_columns`] computes the same result.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{IntSequence, Partition, SkewShape};

/// Deals the parts of `mu ∪ nu` alternately, the larger parts first.
pub fn tilde_pair(mu: &Partition, nu: &Partition) -> (Partition, Partition) {
    let gamma = mu.union(nu);
    let odd = gamma.parts().iter().step_by(2).copied();
    let even = gamma.parts().iter().skip(1).step_by(2).copied();
    (
        Partition::from_unsorted(odd),
        Partition::from_unsorted(even),
    )
}

/// The same pair as [`tilde_pair`], built from column lengths.
pub fn tilde_pair_by_columns(mu: &Partition, nu: &Partition) -> (Partition, Partition) {
    let (mc, nc) = (mu.conjugate(), nu.conjugate());
    let width = mc.len().max(nc.len());
    let sums: Vec<u32> = (0..width).map(|i| mc.part(i) + nc.part(i)).collect();
    let hi: Vec<u32> = sums.iter().map(|s| s.div_ceil(2)).collect();
    let lo: Vec<u32> = sums.iter().map(|s| s / 2).collect();
    (
        Partition::from_padded(&hi).conjugate(),
        Partition::from_padded(&lo).conjugate(),
    )
}

/// Deals the parts of `m` partitions round-robin, padding with zeros to a
/// multiple of `m`.
pub fn tilde_m(mus: &[Partition], m: usize) -> Result<Vec<Partition>> {
    if m < 2 || mus.len() != m {
        return Err(Error::BadArity {
            expected: m.max(2),
            got: mus.len(),
        });
    }
    let gamma = mus.iter().fold(Partition::empty(), |acc, p| acc.union(p));
    Ok((0..m)
        .map(|i| Partition::from_unsorted(gamma.parts().iter().skip(i).step_by(m).copied()))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewPair {
    pub first: SkewShape,
    pub second: SkewShape,
}

impl SkewPair {
    pub fn new(first: SkewShape, second: SkewShape) -> Self {
        SkewPair { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn is_fixed_point(&self) -> bool {
        skew_tilde(self) == *self
    }
}

impl std::fmt::Display for SkewPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Deals outers and inners separately. The inner pair stays inside the outer
/// pair because dealing is monotone under containment.
pub fn skew_tilde(p: &SkewPair) -> SkewPair {
    let (lambda, rho) = tilde_pair(p.first.outer(), p.second.outer());
    let (sigma, tau) = tilde_pair(p.first.inner(), p.second.inner());
    let q = SkewPair {
        first: SkewShape::new(lambda, sigma).expect("dealing preserves containment"),
        second: SkewShape::new(rho, tau).expect("dealing preserves containment"),
    };
    debug_assert!(check_column_def(p, &q));
    q
}

fn columns_balanced(mu: &Partition, nu: &Partition, lambda: &Partition, rho: &Partition) -> bool {
    let (mc, nc, lc, rc) = (
        mu.conjugate(),
        nu.conjugate(),
        lambda.conjugate(),
        rho.conjugate(),
    );
    let width = mc.len().max(nc.len()).max(lc.len()).max(rc.len());
    (0..width).all(|i| {
        let (l, r) = (lc.part(i), rc.part(i));
        l + r == mc.part(i) + nc.part(i) && (l == r || l == r + 1)
    })
}

/// Does `q` satisfy the column characterisation of the dealing of `p`, on
/// outers and on inners?
pub fn check_column_def(p: &SkewPair, q: &SkewPair) -> bool {
    columns_balanced(
        p.first.outer(),
        p.second.outer(),
        q.first.outer(),
        q.second.outer(),
    ) && columns_balanced(
        p.first.inner(),
        p.second.inner(),
        q.first.inner(),
        q.second.inner(),
    )
}

/// Dominance-largest element of the support of `s_{first} s_{second}`.
pub fn support_max(p: &SkewPair) -> Partition {
    p.first
        .col_lengths()
        .union(&p.second.col_lengths())
        .conjugate()
}

/// Dominance-smallest element of the support of `s_{first} s_{second}`.
pub fn support_min(p: &SkewPair) -> Partition {
    p.first.row_lengths().union(&p.second.row_lengths())
}

/// Row lengths of `p` dominate those of its dealing, and likewise columns.
pub fn check_row_col_dominance(p: &SkewPair) -> bool {
    let q = skew_tilde(p);
    let rows_p = p.first.row_lengths().union(&p.second.row_lengths());
    let rows_q = q.first.row_lengths().union(&q.second.row_lengths());
    let cols_p = p.first.col_lengths().union(&p.second.col_lengths());
    let cols_q = q.first.col_lengths().union(&q.second.col_lengths());
    rows_q
        .dominance_leq(&rows_p)
        .expect("dealing preserves cell count")
        && cols_q
            .dominance_leq(&cols_p)
            .expect("dealing preserves cell count")
}

/// For `γ` weakly decreasing, `δ` weakly increasing and `ε` a rearrangement
/// of `δ`, reports whether `sort(γ + δ) ⪯ sort(γ + ε)`.
pub fn resequence_dominance(
    gamma: &IntSequence,
    delta: &IntSequence,
    epsilon: &IntSequence,
) -> Result<bool> {
    if gamma.len() != delta.len() || delta.len() != epsilon.len() {
        return Err(Error::BadInput("sequences must have equal length".into()));
    }
    if !gamma.is_weakly_decreasing() {
        return Err(Error::BadInput(format!(
            "γ = {gamma} is not weakly decreasing"
        )));
    }
    if !delta.is_weakly_increasing() {
        return Err(Error::BadInput(format!(
            "δ = {delta} is not weakly increasing"
        )));
    }
    let mut sorted_eps = epsilon.0.clone();
    sorted_eps.sort_unstable();
    if sorted_eps != delta.0 {
        return Err(Error::BadInput(format!(
            "ε = {epsilon} is not a permutation of δ"
        )));
    }
    let low = gamma.plus(delta)?.sorted_desc();
    let high = gamma.plus(epsilon)?.sorted_desc();
    low.dominance_leq(&high)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions_of;

    fn skew(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> SkewPair {
        SkewPair::new(skew(a), skew(b))
    }

    #[test]
    fn tilde_pair_examples() {
        assert_eq!(
            tilde_pair(&part![4, 1, 1], &part![3, 1, 1, 1, 1, 1]),
            (part![4, 1, 1, 1, 1], part![3, 1, 1, 1])
        );
        assert_eq!(
            tilde_pair(&part![5, 4, 4, 4], &part![5, 2, 1, 1]),
            (part![5, 4, 4, 1], part![5, 4, 2, 1])
        );
        let dealt = (part![5, 3, 1], part![4, 2]);
        assert_eq!(tilde_pair(&dealt.0, &dealt.1), dealt);
        assert_eq!(
            tilde_pair(&part![1], &Partition::empty()),
            (part![1], Partition::empty())
        );
    }

    #[test]
    fn tilde_m_examples() {
        let (a, b) = (part![3, 2, 2], part![4]);
        let pair = tilde_pair(&a, &b);
        assert_eq!(tilde_m(&[a, b], 2).unwrap(), vec![pair.0, pair.1]);
        let dealt = vec![part![3], part![2], part![1]];
        assert_eq!(tilde_m(&dealt, 3).unwrap(), dealt);
        assert_eq!(
            tilde_m(&[part![2, 2], part![2], Partition::empty()], 3).unwrap(),
            vec![part![2], part![2], part![2]]
        );
        assert!(matches!(
            tilde_m(&[part![1]], 2),
            Err(Error::BadArity { .. })
        ));
        assert!(matches!(
            tilde_m(&[part![1], part![1]], 1),
            Err(Error::BadArity { .. })
        ));
    }

    #[test]
    fn skew_tilde_examples() {
        assert_eq!(skew_tilde(&pair("3,2/2,1", "2,1")), pair("3,2/2", "2,1/1"));
        assert_eq!(skew_tilde(&pair("2,1/1", "2,1")), pair("2,1/1", "2,1"));
        assert_eq!(skew_tilde(&pair("2,2/1", "1")), pair("2,1/1", "2"));
    }

    #[test]
    fn column_definition() {
        let p = pair("3,2/2,1", "2,1");
        assert!(check_column_def(&p, &skew_tilde(&p)));
        // the dealt pair in the wrong order has λ' − ρ' = −1 in some column
        let q = skew_tilde(&p);
        let swapped = SkewPair::new(q.second.clone(), q.first.clone());
        assert!(!check_column_def(&p, &swapped));
    }

    #[test]
    fn dealing_matches_column_balancing() {
        for n in 0..=10 {
            for a in 0..=n {
                for mu in partitions_of(a) {
                    for nu in partitions_of(n - a) {
                        assert_eq!(tilde_pair(&mu, &nu), tilde_pair_by_columns(&mu, &nu));
                    }
                }
            }
        }
    }

    #[test]
    fn support_extremes_examples() {
        let p = pair("2", "2");
        assert_eq!(support_max(&p), part![4]);
        assert_eq!(support_min(&p), part![2, 2]);
        let t = part![3, 1];
        let p = SkewPair::new(SkewShape::straight(t.clone()), skew("3,1/3,1"));
        assert_eq!(support_max(&p), t);
        assert_eq!(support_min(&p), t);
        let p = pair("1", "1");
        assert_eq!(support_max(&p), part![2]);
        assert_eq!(support_min(&p), part![1, 1]);
    }

    #[test]
    fn row_col_dominance_examples() {
        assert!(check_row_col_dominance(&pair("3,2/2,1", "2,1")));
        assert!(check_row_col_dominance(&pair("2,1/1", "2,1")));
    }

    #[test]
    fn resequence_examples() {
        let g = IntSequence(vec![3, 2, 1]);
        let d = IntSequence(vec![-1, 0, 1]);
        assert!(resequence_dominance(&g, &d, &d).unwrap());
        assert!(resequence_dominance(&g, &d, &IntSequence(vec![1, 0, -1])).unwrap());
        assert!(resequence_dominance(&IntSequence(vec![1, 2, 3]), &d, &d).is_err());
        assert!(resequence_dominance(&g, &IntSequence(vec![1, 0, -1]), &d).is_err());
        assert!(resequence_dominance(&g, &d, &IntSequence(vec![1, 1, -1])).is_err());
        assert!(resequence_dominance(&g, &d, &IntSequence(vec![1, 0])).is_err());
    }

    #[test]
    fn hook_pairs_deal_into_hooks() {
        for m in 2..=6u32 {
            for n in 2..=m {
                for r in 0..=4usize {
                    for s in 0..=4usize {
                        let mu = Partition::from_unsorted(
                            std::iter::once(m).chain(std::iter::repeat_n(1, r)),
                        );
                        let nu = Partition::from_unsorted(
                            std::iter::once(n).chain(std::iter::repeat_n(1, s)),
                        );
                        let hook = |top: u32, k: usize| {
                            Partition::from_unsorted(
                                std::iter::once(top).chain(std::iter::repeat_n(1, k)),
                            )
                        };
                        assert_eq!(
                            tilde_pair(&mu, &nu),
                            (hook(m, (r + s).div_ceil(2)), hook(n, (r + s) / 2))
                        );
                    }
                }
            }
        }
    }
}
