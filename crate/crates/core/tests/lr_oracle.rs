//! LR fillings and Schur products against brute-force tableau counts.

use std::collections::{BTreeSet, HashMap};

use schurpos::lr::{count_lr_fillings, enumerate_lr_fillings, lr_coefficient, skew_schur_expand};
use schurpos::partition::partitions_of;
use schurpos::schur::schur_product;
use schurpos::{Partition, SkewShape};

/// Every filling of `shape` with content exactly `content`, checked cell by
/// cell. Rows are stored bottom first.
fn brute_fillings(outer: &[u32], inner: &[u32], content: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let rows = outer.len();
    let inn = |r: usize| inner.get(r).copied().unwrap_or(0) as usize;
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inn(r)..outer[r] as usize).map(move |c| (r, c)))
        .collect();
    let letters = content.len() as u32;
    let mut out = Vec::new();
    let mut vals = vec![0u32; cells.len()];
    loop {
        // odometer over all assignments
        let mut i = 0;
        loop {
            if i == vals.len() {
                return out;
            }
            vals[i] += 1;
            if vals[i] <= letters {
                break;
            }
            vals[i] = 1;
            i += 1;
        }
        if vals.contains(&0) {
            continue;
        }
        let mut grid: Vec<Vec<Option<u32>>> =
            (0..rows).map(|r| vec![None; outer[r] as usize]).collect();
        for (k, &(r, c)) in cells.iter().enumerate() {
            grid[r][c] = Some(vals[k]);
        }
        let mut counts = vec![0u32; letters as usize];
        for &v in &vals {
            counts[v as usize - 1] += 1;
        }
        if counts != content {
            continue;
        }
        let mut ok = true;
        for &(r, c) in &cells {
            let v = grid[r][c].unwrap();
            if c + 1 < grid[r].len() && grid[r][c + 1].unwrap() < v {
                ok = false;
            }
            if r > 0 && c < grid[r - 1].len() {
                if let Some(b) = grid[r - 1][c] {
                    if b >= v {
                        ok = false;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        let word: Vec<u32> = (0..rows)
            .flat_map(|r| grid[r].iter().rev().filter_map(|x| *x).collect::<Vec<_>>())
            .collect();
        let mut seen = vec![0u32; letters as usize + 1];
        let lattice = word.iter().all(|&x| {
            seen[x as usize] += 1;
            x == 1 || seen[x as usize - 1] >= seen[x as usize]
        });
        if lattice {
            out.push(
                (0..rows)
                    .map(|r| grid[r].iter().filter_map(|x| *x).collect())
                    .collect(),
            );
        }
    }
}

fn shapes_up_to(cells: usize) -> Vec<(Partition, Partition)> {
    let mut v = Vec::new();
    for n in 1..=cells + 3 {
        for outer in partitions_of(n) {
            for inner in outer.subpartitions() {
                let k = n - inner.size();
                if k >= 1 && k <= cells {
                    v.push((outer.clone(), inner));
                }
            }
        }
    }
    v
}

#[test]
fn enumerator_matches_brute_force() {
    for (outer, inner) in shapes_up_to(6) {
        let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
        for content in partitions_of(shape.size()) {
            if content.len() > 4 {
                continue;
            }
            let brute: BTreeSet<Vec<Vec<u32>>> =
                brute_fillings(outer.parts(), inner.parts(), content.parts())
                    .into_iter()
                    .collect();
            let fast: BTreeSet<Vec<Vec<u32>>> = enumerate_lr_fillings(&shape, &content)
                .unwrap()
                .into_iter()
                .map(|f| f.rows)
                .collect();
            assert_eq!(brute, fast, "{shape} content {content}");
            assert_eq!(
                count_lr_fillings(&shape, &content).unwrap(),
                brute.len() as u64
            );
        }
    }
}

#[test]
fn fillings_are_semistandard_and_lattice() {
    let shape: SkewShape = "4,4,2,1/2,1".parse().unwrap();
    for content in partitions_of(shape.size()) {
        for f in enumerate_lr_fillings(&shape, &content).unwrap() {
            assert!(f.is_semistandard());
            assert!(schurpos::lr::is_lattice(&f.reading_word()));
            assert_eq!(f.content(), content);
        }
    }
}

/// Number of semistandard tableaux of shape `shape` and weight `weight`.
fn kostka(shape: &[u32], weight: &[u32]) -> u64 {
    let mut counts: HashMap<(Vec<u32>, usize), u64> = HashMap::new();
    kostka_rec(shape, weight, &vec![0; shape.len()], 0, &mut counts)
}

// Adds the letters `idx + 1` as a horizontal strip on top of `filled`.
fn kostka_rec(
    shape: &[u32],
    weight: &[u32],
    filled: &[u32],
    idx: usize,
    memo: &mut HashMap<(Vec<u32>, usize), u64>,
) -> u64 {
    if idx == weight.len() {
        return u64::from(filled == shape);
    }
    if let Some(&v) = memo.get(&(filled.to_vec(), idx)) {
        return v;
    }
    let mut total = 0;
    let mut next = filled.to_vec();
    strips(shape, filled, weight[idx], 0, &mut next, &mut |n| {
        total += kostka_rec(shape, weight, n, idx + 1, memo);
    });
    memo.insert((filled.to_vec(), idx), total);
    total
}

fn strips(
    shape: &[u32],
    filled: &[u32],
    left: u32,
    row: usize,
    next: &mut Vec<u32>,
    f: &mut dyn FnMut(&[u32]),
) {
    if row == shape.len() {
        if left == 0 {
            f(next);
        }
        return;
    }
    // a new row may not pass the old row below it
    let cap = if row == 0 {
        shape[0]
    } else {
        shape[row].min(filled[row - 1])
    };
    let room = cap.saturating_sub(filled[row]).min(left);
    for add in 0..=room {
        next[row] = filled[row] + add;
        strips(shape, filled, left - add, row + 1, next, f);
    }
    next[row] = filled[row];
}

/// Expands `s_mu s_nu` by matching monomial coefficients against Kostka
/// numbers, largest partitions first.
fn product_by_kostka(mu: &Partition, nu: &Partition) -> HashMap<Partition, i64> {
    let n = mu.size() + nu.size();
    let mut lex: Vec<Partition> = partitions_of(n);
    lex.sort_by(|a, b| b.parts().cmp(a.parts()));
    let mut coeffs: HashMap<Partition, i64> = HashMap::new();
    for lam in &lex {
        // monomial coefficient of x^lam in s_mu s_nu
        let l = lam.len();
        let mut mono: i64 = 0;
        let mut split = vec![0u32; l];
        compositions_below(lam.parts(), 0, mu.size() as u32, &mut split, &mut |a| {
            let b: Vec<u32> = lam.parts().iter().zip(a).map(|(x, y)| x - y).collect();
            let ka = kostka(&pad(mu, l), a);
            if ka > 0 {
                mono += (ka * kostka(&pad(nu, l), &b)) as i64;
            }
        });
        let mut c = mono;
        for (theta, &ct) in &coeffs {
            c -= ct
                * kostka(
                    &pad(theta, l.max(theta.len())),
                    &padv(lam.parts(), l.max(theta.len())),
                ) as i64;
        }
        if c != 0 {
            coeffs.insert(lam.clone(), c);
        }
    }
    coeffs
}

fn pad(p: &Partition, l: usize) -> Vec<u32> {
    padv(p.parts(), l)
}

fn padv(p: &[u32], l: usize) -> Vec<u32> {
    let mut v = p.to_vec();
    v.resize(l.max(v.len()), 0);
    v
}

fn compositions_below(
    top: &[u32],
    i: usize,
    left: u32,
    cur: &mut Vec<u32>,
    f: &mut dyn FnMut(&[u32]),
) {
    if i == top.len() {
        if left == 0 {
            f(cur);
        }
        return;
    }
    for x in 0..=top[i].min(left) {
        cur[i] = x;
        compositions_below(top, i + 1, left - x, cur, f);
    }
    cur[i] = 0;
}

#[test]
fn kostka_sanity() {
    assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(kostka(&[3, 0, 0], &[1, 1, 1]), 1);
    assert_eq!(kostka(&[2, 2, 0], &[2, 1, 1]), 1);
    assert_eq!(kostka(&[1, 1, 0], &[2, 0, 0]), 0);
}

#[test]
fn products_match_kostka_inversion() {
    for n in 0..=7 {
        for a in 0..=n {
            for mu in partitions_of(a) {
                for nu in partitions_of(n - a) {
                    if lex_less(&mu, &nu) {
                        continue;
                    }
                    let fast = schur_product(&mu, &nu);
                    let slow = product_by_kostka(&mu, &nu);
                    assert_eq!(fast.len(), slow.len(), "{mu} * {nu}");
                    for (theta, c) in &slow {
                        assert_eq!(fast.coeff(theta), *c, "{mu} * {nu} at {theta}");
                        assert_eq!(lr_coefficient(theta, &mu, &nu) as i64, *c);
                    }
                }
            }
        }
    }
}

fn lex_less(a: &Partition, b: &Partition) -> bool {
    (a.size(), a.parts()) < (b.size(), b.parts())
}

#[test]
fn lr_symmetry() {
    for n in 0..=9 {
        for theta in partitions_of(n) {
            for mu in theta.subpartitions() {
                for nu in partitions_of(n - mu.size()) {
                    assert_eq!(
                        lr_coefficient(&theta, &mu, &nu),
                        lr_coefficient(&theta, &nu, &mu),
                        "{theta}; {mu}, {nu}"
                    );
                    assert_eq!(
                        lr_coefficient(&theta, &mu, &nu),
                        lr_coefficient(&theta.conjugate(), &mu.conjugate(), &nu.conjugate()),
                    );
                }
            }
        }
    }
}

#[test]
fn skew_expansion_is_lr_column() {
    for n in 1..=8 {
        for outer in partitions_of(n) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                let e = skew_schur_expand(&shape);
                for nu in partitions_of(shape.size()) {
                    assert_eq!(e.coeff(&nu), lr_coefficient(&outer, &inner, &nu) as i64);
                }
            }
        }
    }
}
