//! Jacobi-Trudi determinants and Plücker relations on their minors.
//!
//! A row of a Jacobi-Trudi style matrix is `h_e, h_{e+1}, …, h_{e+p-1}` and
//! is described by its leading index `e` ([`JTRowSpec`]). Any `p × p` minor
//! built from such rows is `±s_α` or zero, which [`minor_to_schur`] reads off
//! the leading indices without expanding a determinant.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{IntSequence, Partition};
use crate::schur::{multiply_all, SchurVector};
use crate::tilde::tilde_pair;

/// One row `h_e, h_{e+1}, …, h_{e+width-1}` with `h_0 = 1` and `h_{<0} = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JTRowSpec {
    pub leading_index: i64,
    pub width: usize,
}

/// A sequence of 1-based row indices into a list of row specs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MinorSelection {
    pub rows: Vec<usize>,
}

impl MinorSelection {
    pub fn new(rows: Vec<usize>) -> Self {
        MinorSelection { rows }
    }
}

impl fmt::Display for MinorSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.rows.iter().any(|&r| r >= 10) {
            ","
        } else {
            ""
        };
        let body: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", body.join(sep))
    }
}

/// Rows of the Jacobi-Trudi matrix `(h_{μ_i − i + j})` of size `p`.
pub fn jt_rows(mu: &Partition, p: usize) -> Result<Vec<JTRowSpec>> {
    if p < mu.len() {
        return Err(Error::BadInput(format!(
            "matrix size {p} is smaller than the length of {mu}"
        )));
    }
    Ok((0..p)
        .map(|i| JTRowSpec {
            leading_index: mu.part(i) as i64 - i as i64,
            width: p,
        })
        .collect())
}

/// The `2p` rows of `H_γ`: first the rows for `γ_1, γ_3, …`, then the rows
/// for `γ_2, γ_4, …`, each completed as in a Jacobi-Trudi matrix.
pub fn h_gamma_rows(gamma: &Partition, p: usize) -> Result<Vec<JTRowSpec>> {
    if gamma.len() > 2 * p {
        return Err(Error::BadInput(format!(
            "{gamma} has more than {} parts",
            2 * p
        )));
    }
    let odd = (0..p).map(|i| gamma.part(2 * i) as i64 - i as i64);
    let even = (0..p).map(|i| gamma.part(2 * i + 1) as i64 - i as i64);
    Ok(odd
        .chain(even)
        .map(|e| JTRowSpec {
            leading_index: e,
            width: p,
        })
        .collect())
}

/// Leading indices of the selected rows, in selection order.
pub fn delta_sequence(rows: &MinorSelection, specs: &[JTRowSpec]) -> IntSequence {
    IntSequence(
        rows.rows
            .iter()
            .map(|&r| specs[r - 1].leading_index)
            .collect(),
    )
}

/// The minor on the selected rows as a signed Schur function.
///
/// Rows with leading indices `e_1, …, e_p` give `h_{e_r + j - 1}`. Sorting
/// the `e_r` strictly decreasingly turns this into the Jacobi-Trudi matrix of
/// `α_r = e_r + r − 1`. The sort contributes the parity of the pairs that
/// are out of decreasing order, i.e. `(−1)^{inv(e) − C(p,2)}`.
pub fn minor_to_schur(rows: &MinorSelection, specs: &[JTRowSpec]) -> SchurVector {
    match signed_minor(rows, specs) {
        Some((sign, alpha)) => SchurVector::from_terms([(alpha, sign)]),
        None => SchurVector::zero(),
    }
}

fn signed_minor(rows: &MinorSelection, specs: &[JTRowSpec]) -> Option<(i64, Partition)> {
    let delta = delta_sequence(rows, specs);
    let sorted = delta.sorted_desc();
    if sorted.0.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let alpha: Vec<i64> = sorted
        .0
        .iter()
        .enumerate()
        .map(|(r, &e)| e + r as i64)
        .collect();
    if alpha.last().is_some_and(|&a| a < 0) {
        return None;
    }
    let p = delta.len();
    let ascents = p * p.saturating_sub(1) / 2 - delta.inversions();
    let sign = if ascents.is_multiple_of(2) { 1 } else { -1 };
    let parts = alpha.into_iter().filter(|&a| a > 0).map(|a| a as u32);
    Some((sign, Partition::from_unsorted(parts)))
}

/// `seq` with the entry `from[i]` replaced by `to[i]` for every `i`, in place.
fn replace(seq: &[usize], from: &[usize], to: &[usize]) -> Vec<usize> {
    seq.iter()
        .map(|x| match from.iter().position(|f| f == x) {
            Some(i) => to[i],
            None => *x,
        })
        .collect()
}

/// All increasing `k`-subsequences of `items`, in lexicographic order.
fn subsequences(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Right-hand side of `[1…p][p+1…2p] = Σ_𝔡 [𝔞|𝔠←𝔡][𝔟|𝔡←𝔠]`, one pair of
/// minors per `k`-subsequence `𝔡` of `(p+1, …, 2p)`, with `k = |𝔠|`.
pub fn plucker_terms(p: usize, c: &[usize]) -> Result<Vec<(MinorSelection, MinorSelection)>> {
    if c.windows(2).any(|w| w[0] >= w[1]) || c.iter().any(|&x| x == 0 || x > p) {
        return Err(Error::BadInput(format!(
            "{c:?} is not an increasing subsequence of 1..={p}"
        )));
    }
    let a: Vec<usize> = (1..=p).collect();
    let b: Vec<usize> = (p + 1..=2 * p).collect();
    Ok(subsequences(&b, c.len())
        .into_iter()
        .map(|d| {
            (
                MinorSelection::new(replace(&a, c, &d)),
                MinorSelection::new(replace(&b, &d, c)),
            )
        })
        .collect())
}

/// A term `sign · s_α s_β` of a Plücker expansion, with the minors it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedProduct {
    pub sign: i64,
    pub alpha: Partition,
    pub beta: Partition,
    pub left: MinorSelection,
    pub right: MinorSelection,
}

/// The expansion of `s_λ s_ρ − s_μ s_ν` for `(λ, ρ)` the dealing of `(μ, ν)`,
/// obtained from a Plücker relation on `H_{μ∪ν}`. Zero minors are dropped.
pub fn specialcase_expansion(mu: &Partition, nu: &Partition) -> Result<Vec<SignedProduct>> {
    let (mu, nu) = if mu.first() >= nu.first() {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let (lambda, rho) = tilde_pair(mu, nu);
    if mu.sum(nu) != lambda.sum(&rho) {
        return Err(Error::PreconditionViolated(format!(
            "({mu}) + ({nu}) differs from ({lambda}) + ({rho})"
        )));
    }
    let gamma = mu.union(nu);
    let p = gamma.len().div_ceil(2).max(mu.len()).max(nu.len()).max(1);
    let specs = h_gamma_rows(&gamma, p)?;
    let c: Vec<usize> = (1..=p)
        .filter(|&i| mu.part(i - 1) != lambda.part(i - 1))
        .collect();
    let skip: Vec<usize> = c.iter().map(|x| x + p).collect();
    let own_term = replace(&(1..=p).collect::<Vec<_>>(), &c, &skip);
    let mut out = Vec::new();
    for (left, right) in plucker_terms(p, &c)? {
        // this term is s_μ s_ν itself
        if left.rows == own_term {
            continue;
        }
        let (Some((sa, alpha)), Some((sb, beta))) =
            (signed_minor(&left, &specs), signed_minor(&right, &specs))
        else {
            continue;
        };
        out.push(SignedProduct {
            sign: sa * sb,
            alpha,
            beta,
            left,
            right,
        });
    }
    Ok(out)
}

/// Sum of `sign · s_α s_β` over the terms.
pub fn expansion_total(terms: &[SignedProduct]) -> Result<SchurVector> {
    let mut acc = SchurVector::zero();
    for t in terms {
        let prod = multiply_all([&t.alpha, &t.beta])?;
        acc = acc.checked_add(&prod.scale(t.sign)?)?;
    }
    Ok(acc)
}

/// Compares `inv(𝔞|𝔠←𝔡)` with `inv(𝔟|𝔡←𝔠)`, where `c_idx` and `d_idx` are
/// increasing 0-based positions into `a` and `b` of equal count.
///
/// `NotDistinct` reports that a swapped sequence has a repeated entry, in
/// which case the identity makes no claim.
pub fn inversion_lemma_check(
    a: &IntSequence,
    b: &IntSequence,
    c_idx: &[usize],
    d_idx: &[usize],
) -> Result<bool> {
    let p = a.len();
    if b.len() != p || c_idx.len() != d_idx.len() {
        return Err(Error::BadInput("length mismatch".into()));
    }
    for idx in [c_idx, d_idx] {
        if idx.windows(2).any(|w| w[0] >= w[1]) || idx.iter().any(|&i| i >= p) {
            return Err(Error::BadInput(format!(
                "{idx:?} is not an index subsequence"
            )));
        }
    }
    let (a, b) = (&a.0, &b.0);
    for i in 0..p {
        if a[i] < b[i] || (i + 1 < p && b[i] <= a[i + 1]) {
            return Err(Error::BadInterleaving);
        }
    }
    let mut a2 = a.clone();
    let mut b2 = b.clone();
    for (&ci, &di) in c_idx.iter().zip(d_idx) {
        a2[ci] = b[di];
        b2[di] = a[ci];
    }
    for s in [&a2, &b2] {
        let mut t = s.clone();
        t.sort_unstable();
        if t.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotDistinct);
        }
    }
    Ok(IntSequence(a2).inversions() == IntSequence(b2).inversions())
}

fn permutations(p: usize) -> Vec<Vec<usize>> {
    fn go(used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![false; p], &mut Vec::new(), &mut out);
    out
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let seq = IntSequence(perm.iter().map(|&x| x as i64).collect());
    if seq.inversions().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Determinant of a `p × p` matrix whose entries are single Schur functions
/// (`None` for zero), expanded over permutations.
pub fn schur_determinant<F>(p: usize, entry: F) -> Result<SchurVector>
where
    F: Fn(usize, usize) -> Option<Partition> + Sync,
{
    let terms: Vec<SchurVector> = permutations(p)
        .par_iter()
        .filter_map(|perm| {
            let factors: Option<Vec<Partition>> =
                perm.iter().enumerate().map(|(i, &j)| entry(i, j)).collect();
            let factors = factors?;
            Some(multiply_all(&factors).and_then(|v| v.scale(permutation_sign(perm))))
        })
        .collect::<Result<_>>()?;
    terms
        .iter()
        .try_fold(SchurVector::zero(), |acc, t| acc.checked_add(t))
}

/// Expands the determinant of the Jacobi-Trudi style matrix on `specs`.
pub fn jt_determinant(specs: &[JTRowSpec]) -> Result<SchurVector> {
    let p = specs.len();
    schur_determinant(p, |i, j| {
        let n = specs[i].leading_index + j as i64;
        (n >= 0).then(|| Partition::rectangle(n as u32, 1))
    })
}

/// `det(s_{(n^k)})` with `n = μ_i − i + j`, over a `p × p` matrix.
pub fn exploded_jt(mu: &Partition, k: usize, p: usize) -> Result<SchurVector> {
    if k == 0 {
        return Err(Error::BadInput(
            "rectangle height k must be positive".into(),
        ));
    }
    let specs = jt_rows(mu, p)?;
    schur_determinant(p, |i, j| {
        let n = specs[i].leading_index + j as i64;
        (n >= 0).then(|| Partition::rectangle(n as u32, k))
    })
}

/// Integer determinant by permutation expansion.
pub fn int_determinant(m: &[Vec<i64>]) -> i128 {
    permutations(m.len())
        .iter()
        .map(|perm| {
            let prod: i128 = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| m[i][j] as i128)
                .product();
            permutation_sign(perm) as i128 * prod
        })
        .sum()
}

/// Checks the Plücker relation for `𝔠` on the `p × p` minors of a `2p × p`
/// integer matrix.
pub fn plucker_check_numeric(m: &[Vec<i64>], c: &[usize]) -> Result<bool> {
    let p = m.first().map_or(0, |r| r.len());
    if m.len() != 2 * p || m.iter().any(|r| r.len() != p) {
        return Err(Error::BadInput("expected a 2p × p matrix".into()));
    }
    let minor = |sel: &[usize]| -> i128 {
        let rows: Vec<Vec<i64>> = sel.iter().map(|&r| m[r - 1].clone()).collect();
        int_determinant(&rows)
    };
    let a: Vec<usize> = (1..=p).collect();
    let b: Vec<usize> = (p + 1..=2 * p).collect();
    let lhs = minor(&a) * minor(&b);
    let rhs: i128 = plucker_terms(p, c)?
        .iter()
        .map(|(l, r)| minor(&l.rows) * minor(&r.rows))
        .sum();
    Ok(lhs == rhs)
}
