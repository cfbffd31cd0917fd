use schurpos::lr::{skew_schur_expand, star_concatenate};
use schurpos::partition::partitions_of;
use schurpos::schur::{
    e_to_schur, h_difference_positive, h_to_schur, multiply, multiply_skew, schur_product,
};
use schurpos::{Partition, SchurVector, SkewShape};

fn s(p: &Partition) -> SchurVector {
    SchurVector::schur(p.clone())
}

fn all_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[test]
fn product_is_commutative() {
    let ps = all_up_to(5);
    for a in &ps {
        for b in &ps {
            if a.size() + b.size() <= 10 {
                assert_eq!(schur_product(a, b), schur_product(b, a), "{a} {b}");
            }
        }
    }
}

#[test]
fn product_is_associative() {
    let ps = all_up_to(4);
    for a in &ps {
        for b in &ps {
            for c in &ps {
                if a.size() + b.size() + c.size() > 8 {
                    continue;
                }
                let left = multiply(&schur_product(a, b), &s(c)).unwrap();
                let right = multiply(&s(a), &schur_product(b, c)).unwrap();
                assert_eq!(left, right, "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn omega_is_a_ring_map() {
    let ps = all_up_to(4);
    for a in &ps {
        for b in &ps {
            let prod = schur_product(a, b);
            assert_eq!(prod.omega(), schur_product(&a.conjugate(), &b.conjugate()));
            assert_eq!(prod.omega().omega(), prod);
        }
    }
    for n in 1..=7 {
        for mu in partitions_of(n) {
            assert_eq!(h_to_schur(&mu).unwrap().omega(), e_to_schur(&mu).unwrap());
        }
    }
}

#[test]
fn product_degree_and_support_bounds() {
    for n in 0..=12 {
        for a in 0..=n / 2 {
            for mu in partitions_of(a) {
                for nu in partitions_of(n - a) {
                    let prod = schur_product(&mu, &nu);
                    if n > 0 {
                        assert_eq!(prod.degree(), Some(n));
                    }
                    assert!(prod.is_schur_positive());
                    let low = mu.union(&nu);
                    let high = mu.sum(&nu);
                    assert_eq!(prod.coeff(&low), 1);
                    assert_eq!(prod.coeff(&high), 1);
                    for theta in prod.support() {
                        assert!(low.dominance_leq(&theta).unwrap(), "{mu} {nu}: {theta}");
                        assert!(theta.dominance_leq(&high).unwrap(), "{mu} {nu}: {theta}");
                        assert!(theta.contains(&mu) && theta.contains(&nu));
                    }
                }
            }
        }
    }
}

#[test]
fn skew_product_is_product_of_expansions() {
    let mut shapes: Vec<SkewShape> = Vec::new();
    for n in 1..=5 {
        for outer in partitions_of(n) {
            for inner in outer.subpartitions() {
                if inner.size() < n {
                    shapes.push(SkewShape::new(outer.clone(), inner).unwrap());
                }
            }
        }
    }
    for a in &shapes {
        for b in &shapes {
            if a.size() + b.size() > 8 {
                continue;
            }
            let expected = multiply(&skew_schur_expand(a), &skew_schur_expand(b)).unwrap();
            assert_eq!(multiply_skew(a, b), expected, "{a} {b}");
            assert_eq!(star_concatenate(a, b).size(), a.size() + b.size());
        }
    }
}

#[test]
fn straight_skew_shape_expands_to_itself() {
    for mu in all_up_to(7) {
        assert_eq!(skew_schur_expand(&SkewShape::straight(mu.clone())), s(&mu));
    }
}

#[test]
fn h_products_follow_dominance() {
    for n in 1..=8 {
        let ps = partitions_of(n);
        for theta in &ps {
            for pi in &ps {
                let diff = h_to_schur(theta)
                    .unwrap()
                    .checked_sub(&h_to_schur(pi).unwrap())
                    .unwrap();
                assert_eq!(
                    diff.is_schur_positive(),
                    h_difference_positive(theta, pi).unwrap(),
                    "{theta} {pi}"
                );
            }
        }
    }
}
