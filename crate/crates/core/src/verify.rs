//! Exhaustive and randomized verification sweeps.
//!
//! Every sweep enumerates its domain in a fixed order (by total size, then
//! lexicographically), checks items on the configured worker pool, and
//! aggregates outcomes in enumeration order, so reports do not depend on the
//! number of workers. Long sweeps can record progress in a checkpoint file
//! and resume from it.

use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::jacobi_trudi::{
    expansion_total, inversion_lemma_check, plucker_check_numeric, specialcase_expansion,
};
use crate::partition::{partitions_of, IntSequence, Partition, SkewShape};
use crate::poset::{pairs_of_size, PairElement};
use crate::schur::{h_to_schur, multiply_all, multiply_skew, ProductCache, SchurVector};
use crate::tilde::{
    check_column_def, check_row_col_dominance, resequence_dominance, skew_tilde, support_max,
    support_min, tilde_m, tilde_pair, SkewPair,
};

/// Evidence against a checked statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub detail: String,
    /// The full difference whose positivity failed, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference: Option<SchurVector>,
}

impl Counterexample {
    fn negative(input: String, difference: SchurVector) -> Self {
        let neg: Vec<String> = difference
            .negative_terms()
            .iter()
            .map(|(p, c)| format!("{c}·s[{p}]"))
            .collect();
        Counterexample {
            input,
            detail: format!("negative terms: {}", neg.join(", ")),
            difference: Some(difference),
        }
    }

    fn new(input: String, detail: String) -> Self {
        Counterexample {
            input,
            detail,
            difference: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub command: String,
    pub bound: usize,
    /// Size of the enumerated domain.
    pub items: usize,
    /// Items that needed a check.
    pub checked: usize,
    /// Items the statement says nothing about, e.g. fixed points.
    pub skipped: usize,
    pub resumed_from: Option<usize>,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// 0 when the statement held everywhere, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (bound {}): {} items, {} checked, {} skipped, {} counterexamples",
            self.command,
            self.bound,
            self.items,
            self.checked,
            self.skipped,
            self.counterexamples.len()
        )?;
        if let Some(r) = self.resumed_from {
            write!(f, ", resumed at item {r}")?;
        }
        for c in &self.counterexamples {
            write!(f, "\n  COUNTEREXAMPLE {}: {}", c.input, c.detail)?;
            if let Some(d) = &c.difference {
                write!(f, "\n    difference = {d}")?;
            }
        }
        Ok(())
    }
}

/// On-disk progress of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub command: String,
    pub bound: usize,
    pub last_completed_index: usize,
    #[serde(default)]
    pub checked: usize,
    #[serde(default)]
    pub skipped: usize,
    #[serde(default)]
    pub counterexamples: Vec<Counterexample>,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Option<Checkpoint>> {
        match std::fs::read_to_string(path) {
            Ok(s) => serde_json::from_str(&s)
                .map(Some)
                .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display()))),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::Checkpoint(format!("{}: {e}", path.display()))),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let body = serde_json::to_string_pretty(self).expect("checkpoint serializes");
        std::fs::write(&tmp, body)
            .and_then(|_| std::fs::rename(&tmp, path))
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))
    }
}

enum Outcome {
    Skipped,
    Passed,
    Failed(Counterexample),
}

fn run_sweep<T, F>(
    command: &str,
    bound: usize,
    items: &[T],
    cfg: &RunConfig,
    check: F,
) -> Result<SweepReport>
where
    T: Sync,
    F: Fn(&T) -> Result<Outcome> + Sync,
{
    let pool = cfg.pool()?;
    let mut report = SweepReport {
        command: command.to_string(),
        bound,
        items: items.len(),
        checked: 0,
        skipped: 0,
        resumed_from: None,
        counterexamples: Vec::new(),
    };
    let mut start = 0;
    if let Some(path) = &cfg.checkpoint {
        if let Some(cp) = Checkpoint::load(path)? {
            if cp.command != command || cp.bound != bound {
                return Err(Error::Checkpoint(format!(
                    "{} records `{}` with bound {}, not `{command}` with bound {bound}",
                    path.display(),
                    cp.command,
                    cp.bound
                )));
            }
            start = cp.last_completed_index + 1;
            report.resumed_from = Some(start);
            report.checked = cp.checked;
            report.skipped = cp.skipped;
            report.counterexamples = cp.counterexamples;
        }
    }
    let mut lo = start;
    while lo < items.len() {
        let hi = (lo + cfg.checkpoint_every).min(items.len());
        let outcomes: Vec<Result<Outcome>> =
            pool.install(|| items[lo..hi].par_iter().map(&check).collect());
        for o in outcomes {
            match o? {
                Outcome::Skipped => report.skipped += 1,
                Outcome::Passed => report.checked += 1,
                Outcome::Failed(c) => {
                    report.checked += 1;
                    report.counterexamples.push(c);
                }
            }
        }
        if let Some(path) = &cfg.checkpoint {
            Checkpoint {
                command: command.to_string(),
                bound,
                last_completed_index: hi - 1,
                checked: report.checked,
                skipped: report.skipped,
                counterexamples: report.counterexamples.clone(),
            }
            .save(path)?;
        }
        lo = hi;
    }
    Ok(report)
}

fn product(mu: &Partition, nu: &Partition) -> std::sync::Arc<SchurVector> {
    ProductCache::global().product(mu, nu)
}

/// All unordered pairs with `|μ| + |ν| ≤ bound`, by total size.
pub fn pairs_up_to(bound: usize) -> Vec<PairElement> {
    (0..=bound).flat_map(pairs_of_size).collect()
}

/// `s_λ s_ρ − s_μ s_ν` is Schur-positive for `(λ, ρ)` the dealing of `(μ, ν)`.
pub fn verify_fflp(bound: usize, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    let items = pairs_up_to(bound);
    run_sweep("fflp", bound, &items, cfg, |pair| {
        let (l, r) = tilde_pair(pair.first(), pair.second());
        if PairElement::new(l.clone(), r.clone()) == *pair {
            return Ok(Outcome::Skipped);
        }
        let diff = product(&l, &r).checked_sub(&product(pair.first(), pair.second()))?;
        Ok(if diff.is_schur_positive() {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::negative(pair.to_string(), diff))
        })
    })
}

/// Skew shapes `μ/α` with `|μ| = n`.
pub fn skew_shapes_with_outer_size(n: usize) -> Vec<SkewShape> {
    partitions_of(n)
        .into_iter()
        .flat_map(|mu| {
            mu.subpartitions()
                .into_iter()
                .map(move |a| SkewShape::new(mu.clone(), a).expect("subpartition"))
        })
        .collect()
}

/// Minimal-pair descriptions `μ/α` with exactly `cells` cells: every row of
/// `α` and every column of `α` is extended by at least one cell of `μ/α`.
pub fn minimal_skew_shapes(cells: usize) -> Vec<SkewShape> {
    fn go(alpha: &mut Vec<u32>, mu: &mut Vec<u32>, left: u32, out: &mut Vec<SkewShape>) {
        if left == 0 {
            let a = Partition::from_unsorted(alpha.iter().copied());
            let m = Partition::from_unsorted(mu.iter().copied());
            let s = SkewShape::new(m, a).expect("rows nest");
            if s.is_minimal_pair() {
                out.push(s);
            }
            return;
        }
        let a_cap = alpha.last().copied().unwrap_or(left);
        let m_cap = mu.last().copied().unwrap_or(u32::MAX);
        for a in 0..=a_cap {
            // a row of α needs a skew cell; an empty-α row must be nonempty
            let lo = a + 1;
            let hi = m_cap.min(a + left);
            for m in lo..=hi {
                alpha.push(a);
                mu.push(m);
                go(alpha, mu, left - (m - a), out);
                alpha.pop();
                mu.pop();
            }
        }
    }
    if cells == 0 {
        return vec![SkewShape::straight(Partition::empty())];
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut Vec::new(), cells as u32, &mut out);
    out
}

/// Unordered pairs drawn from `shapes_by_size[k]` (shapes of weight `k`)
/// with total weight at most `bound`, by total weight.
fn skew_pairs(shapes_by_size: &[Vec<SkewShape>], bound: usize) -> Vec<SkewPair> {
    let mut out = Vec::new();
    for total in 0..=bound {
        for a in 0..=total / 2 {
            let b = total - a;
            if b >= shapes_by_size.len() {
                continue;
            }
            for (i, x) in shapes_by_size[a].iter().enumerate() {
                let ys = &shapes_by_size[b];
                let from = if a == b { i } else { 0 };
                for y in &ys[from..] {
                    out.push(SkewPair::new(x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// Minimal-pair skew pairs with `|μ/α| + |ν/β| ≤ bound`.
pub fn minimal_skew_pairs(bound: usize) -> Vec<SkewPair> {
    let by_size: Vec<Vec<SkewShape>> = (0..=bound).map(minimal_skew_shapes).collect();
    skew_pairs(&by_size, bound)
}

/// All skew pairs with `|μ| + |ν| ≤ bound`.
pub fn all_skew_pairs(bound: usize) -> Vec<SkewPair> {
    let by_size: Vec<Vec<SkewShape>> = (0..=bound).map(skew_shapes_with_outer_size).collect();
    skew_pairs(&by_size, bound)
}

fn swapped(p: &SkewPair) -> SkewPair {
    SkewPair::new(p.second.clone(), p.first.clone())
}

/// The skew analogue of [`verify_fflp`]. With `minimal_only` the bound is on
/// the number of cells, otherwise on `|μ| + |ν|`.
pub fn verify_skew(bound: usize, minimal_only: bool, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    let (command, items) = if minimal_only {
        ("skew-minimal", minimal_skew_pairs(bound))
    } else {
        ("skew-all", all_skew_pairs(bound))
    };
    run_sweep(command, bound, &items, cfg, |p| {
        let q = skew_tilde(p);
        if q == *p || q == swapped(p) {
            return Ok(Outcome::Skipped);
        }
        let diff =
            multiply_skew(&q.first, &q.second).checked_sub(&multiply_skew(&p.first, &p.second))?;
        Ok(if diff.is_schur_positive() {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::negative(p.to_string(), diff))
        })
    })
}

/// Multisets of `m` partitions with total size at most `bound`, each listed
/// once.
pub fn tuples_up_to(m: usize, bound: usize) -> Vec<Vec<Partition>> {
    fn go(
        m: usize,
        left: usize,
        pool: &[Partition],
        max_idx: usize,
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in 0..=max_idx {
            let p = &pool[i];
            if p.size() <= left {
                cur.push(p.clone());
                go(m, left - p.size(), pool, i, cur, out);
                cur.pop();
            }
        }
    }
    // pool sorted by size then lexicographically, so tuples come out by weight
    let pool: Vec<Partition> = (0..=bound).flat_map(partitions_of).collect();
    let mut out = Vec::new();
    if pool.is_empty() || m == 0 {
        return out;
    }
    go(m, bound, &pool, pool.len() - 1, &mut Vec::new(), &mut out);
    out.sort_by_key(|t| t.iter().map(Partition::size).sum::<usize>());
    out
}

fn sorted_multiset(v: &[Partition]) -> Vec<Partition> {
    let mut s = v.to_vec();
    s.sort();
    s
}

fn show_tuple(t: &[Partition]) -> String {
    let parts: Vec<String> = t.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join("; "))
}

/// The `m`-tuple analogue of [`verify_fflp`].
pub fn verify_mtilde(bound: usize, m: usize, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    if m < 2 {
        return Err(Error::BadArity {
            expected: 2,
            got: m,
        });
    }
    let items = tuples_up_to(m, bound);
    run_sweep(&format!("mtilde-{m}"), bound, &items, cfg, |t| {
        let dealt = tilde_m(t, m)?;
        if sorted_multiset(&dealt) == sorted_multiset(t) {
            return Ok(Outcome::Skipped);
        }
        let diff = multiply_all(&dealt)?.checked_sub(&multiply_all(t)?)?;
        Ok(if diff.is_schur_positive() {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::negative(show_tuple(t), diff))
        })
    })
}

/// The shape conditions under which `s_μ s_ν` is multiplicity-free. The
/// empty partition counts as a one-line rectangle.
pub fn stembridge_predicate(mu: &Partition, nu: &Partition) -> bool {
    if mu.is_empty() || nu.is_empty() {
        return true;
    }
    let a = mu.classify().expect("nonempty");
    let b = nu.classify().expect("nonempty");
    a.is_k_line_rectangle(1)
        || b.is_k_line_rectangle(1)
        || (a.is_k_line_rectangle(2) && b.fat_hook)
        || (b.is_k_line_rectangle(2) && a.fat_hook)
        || (a.rectangle && b.near_rectangle)
        || (b.rectangle && a.near_rectangle)
        || (a.rectangle && b.rectangle)
}

/// Compares [`stembridge_predicate`] with the largest coefficient of the
/// product.
pub fn verify_stembridge(bound: usize, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    let items = pairs_up_to(bound);
    run_sweep("stembridge", bound, &items, cfg, |pair| {
        let predicted = stembridge_predicate(pair.first(), pair.second());
        let max = product(pair.first(), pair.second()).max_coeff();
        let actual = max <= 1;
        Ok(if predicted == actual {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::new(
                pair.to_string(),
                format!("predicate says {predicted}, largest coefficient is {max}"),
            ))
        })
    })
}

/// `supp(μ, ν) ⊆ supp(λ, ρ)` for `(λ, ρ)` the dealing of `(μ, ν)`.
pub fn verify_support_containment(bound: usize, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    let items = pairs_up_to(bound);
    run_sweep("support", bound, &items, cfg, |pair| {
        let (l, r) = tilde_pair(pair.first(), pair.second());
        let big = product(&l, &r);
        let small = product(pair.first(), pair.second());
        let missing: Vec<String> = small
            .terms()
            .keys()
            .filter(|t| big.coeff(t) == 0)
            .map(|t| t.to_string())
            .collect();
        Ok(if missing.is_empty() {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::new(
                pair.to_string(),
                format!("not in the dealt support: {}", missing.join(", ")),
            ))
        })
    })
}

/// Expanding the Plücker relation on `H_{μ∪ν}` yields `s_λ s_ρ − s_μ s_ν`
/// with only plus signs, for every pair with `μ + ν = λ + ρ`.
pub fn verify_specialcase(bound: usize, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    let items = pairs_up_to(bound);
    run_sweep("specialcase", bound, &items, cfg, |pair| {
        let (mu, nu) = (pair.first(), pair.second());
        let terms = match specialcase_expansion(mu, nu) {
            Ok(t) => t,
            Err(Error::PreconditionViolated(_)) => return Ok(Outcome::Skipped),
            Err(e) => return Err(e),
        };
        let (l, r) = tilde_pair(mu, nu);
        let diff = product(&l, &r).checked_sub(&product(mu, nu))?;
        let total = expansion_total(&terms)?;
        let negative = terms.iter().filter(|t| t.sign < 0).count();
        Ok(if total == diff && negative == 0 {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::new(
                pair.to_string(),
                format!("expansion sums to {total}, expected {diff}; {negative} minus signs"),
            ))
        })
    })
}

/// The dominance-largest and -smallest elements of `support`, if unique.
pub fn dominance_extremes(support: &[Partition]) -> Result<(Option<Partition>, Option<Partition>)> {
    let mut top = None;
    let mut bottom = None;
    for x in support {
        let mut is_top = true;
        let mut is_bottom = true;
        for y in support {
            is_top &= y.dominance_leq(x)?;
            is_bottom &= x.dominance_leq(y)?;
        }
        if is_top {
            top = Some(x.clone());
        }
        if is_bottom {
            bottom = Some(x.clone());
        }
    }
    Ok((top, bottom))
}

type ShapeTest = fn(&SkewShape) -> bool;

fn both_have(p: &SkewPair, f: impl Fn(&SkewShape) -> bool) -> bool {
    f(&p.first) && f(&p.second)
}

/// Checks on skew pairs with `|μ| + |ν| ≤ bound`: the dealing satisfies the
/// column characterisation, row and column multisets only lose dominance,
/// the extremes of the support are read off rows and columns and move the
/// right way, and strip-like families are preserved.
pub fn verify_skew_lemmas(bound: usize, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    let items = all_skew_pairs(bound);
    run_sweep("skew-lemmas", bound, &items, cfg, |p| {
        let q = skew_tilde(p);
        let mut failures = Vec::new();
        if !check_column_def(p, &q) {
            failures.push("column characterisation".to_string());
        }
        if !check_row_col_dominance(p) {
            failures.push("row/column dominance".to_string());
        }
        if p.size() > 0 {
            let supp = multiply_skew(&p.first, &p.second).support();
            let (top, bottom) = dominance_extremes(&supp)?;
            if top.as_ref() != Some(&support_max(p)) || bottom.as_ref() != Some(&support_min(p)) {
                failures.push(format!(
                    "support extremes {top:?}/{bottom:?} vs {}/{}",
                    support_max(p),
                    support_min(p)
                ));
            }
            if !support_max(p).dominance_leq(&support_max(&q))?
                || !support_min(&q).dominance_leq(&support_min(p))?
            {
                failures.push("support extremes move the wrong way".to_string());
            }
        }
        let families: [(&str, ShapeTest); 4] = [
            ("horizontal strips", |s| s.strip_kind().horizontal_strip),
            ("vertical strips", |s| s.strip_kind().vertical_strip),
            ("weak ribbons", |s| s.strip_kind().weak_ribbon),
            ("skewed hooks", |s| s.strip_kind().skewed_hook),
        ];
        for (name, f) in families {
            if both_have(p, f) && !both_have(&q, f) {
                failures.push(format!("{name} not preserved"));
            }
        }
        Ok(if failures.is_empty() {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::new(
                format!("{p} -> {q}"),
                failures.join("; "),
            ))
        })
    })
}

/// `h_θ − h_π` is Schur-positive exactly when `θ ⪯ π`.
pub fn verify_h_criterion(bound: usize, cfg: &RunConfig) -> Result<SweepReport> {
    cfg.check_bound(bound)?;
    let items: Vec<(Partition, Partition)> = (0..=bound)
        .flat_map(|n| {
            let ps = partitions_of(n);
            ps.iter()
                .flat_map(|a| ps.iter().map(move |b| (a.clone(), b.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    run_sweep("h-criterion", bound, &items, cfg, |(theta, pi)| {
        let diff = h_to_schur(theta)?.checked_sub(&h_to_schur(pi)?)?;
        let dom = theta.dominance_leq(pi)?;
        Ok(if diff.is_schur_positive() == dom {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::new(
                format!("({theta}; {pi})"),
                format!("dominance says {dom}, h difference is {diff}"),
            ))
        })
    })
}

fn random_subsequence(rng: &mut ChaCha8Rng, len: usize, k: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = rand::seq::index::sample(rng, len, k).into_vec();
    idx.sort_unstable();
    idx
}

/// Random instances of the inversion identity for exchanged subsequences of
/// interleaved sequences of length at most `max_len`. Instances with
/// repeated entries after the exchange are skipped.
pub fn verify_inversion_lemma_random(
    samples: usize,
    max_len: usize,
    cfg: &RunConfig,
) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut items = Vec::with_capacity(samples);
    for _ in 0..samples {
        let p = rng.gen_range(1..=max_len.max(1));
        // a_1 ≥ b_1 > a_2 ≥ b_2 > … built from the bottom up
        let mut a = vec![0i64; p];
        let mut b = vec![0i64; p];
        let mut cur: i64 = rng.gen_range(-6..=3);
        for i in (0..p).rev() {
            b[i] = cur;
            cur += rng.gen_range(0..=2);
            a[i] = cur;
            cur += rng.gen_range(1..=3);
        }
        let k = rng.gen_range(0..=p);
        let c = random_subsequence(&mut rng, p, k);
        let d = random_subsequence(&mut rng, p, k);
        items.push((IntSequence(a), IntSequence(b), c, d));
    }
    run_sweep(
        "inversion-lemma",
        max_len,
        &items,
        cfg,
        |(a, b, c, d)| match inversion_lemma_check(a, b, c, d) {
            Ok(true) => Ok(Outcome::Passed),
            Ok(false) => Ok(Outcome::Failed(Counterexample::new(
                format!("a={a} b={b} c={c:?} d={d:?}"),
                "inversion counts differ".into(),
            ))),
            Err(Error::NotDistinct) => Ok(Outcome::Skipped),
            Err(e) => Err(e),
        },
    )
}

/// The Plücker relation for every `𝔠` on random `2p × p` integer matrices
/// with entries in `[−9, 9]`.
pub fn verify_plucker_random(p: usize, samples: usize, cfg: &RunConfig) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (p as u64) << 32);
    let items: Vec<Vec<Vec<i64>>> = (0..samples)
        .map(|_| {
            (0..2 * p)
                .map(|_| (0..p).map(|_| rng.gen_range(-9..=9)).collect())
                .collect()
        })
        .collect();
    let subsets: Vec<Vec<usize>> = (0u32..1 << p)
        .map(|mask| (1..=p).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    run_sweep(&format!("plucker-{p}"), p, &items, cfg, |m| {
        for c in &subsets {
            if !plucker_check_numeric(m, c)? {
                return Ok(Outcome::Failed(Counterexample::new(
                    format!("{m:?}"),
                    format!("relation fails for c = {c:?}"),
                )));
            }
        }
        Ok(Outcome::Passed)
    })
}

/// Random instances of `sort(γ + δ) ⪯ sort(γ + ε)` for `ε` a shuffle of `δ`.
pub fn verify_resequence_random(
    samples: usize,
    max_len: usize,
    cfg: &RunConfig,
) -> Result<SweepReport> {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let items: Vec<[IntSequence; 3]> = (0..samples)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            let mut g: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
            g.sort_unstable_by(|a, b| b.cmp(a));
            let mut d: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
            d.sort_unstable();
            let mut e = d.clone();
            e.shuffle(&mut rng);
            [IntSequence(g), IntSequence(d), IntSequence(e)]
        })
        .collect();
    run_sweep("resequence", max_len, &items, cfg, |[g, d, e]| {
        Ok(if resequence_dominance(g, d, e)? {
            Outcome::Passed
        } else {
            Outcome::Failed(Counterexample::new(
                format!("γ={g} δ={d} ε={e}"),
                "dominance fails".into(),
            ))
        })
    })
}
