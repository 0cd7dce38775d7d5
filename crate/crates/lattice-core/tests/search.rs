use lattice_core::{
    classify_element, indecomposable_summands, isometry_test, short_vectors, ElementClass,
    GramLattice, LatticeError, SearchLimits,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashSet;

fn gram(rows: &[&[i64]]) -> GramLattice {
    GramLattice::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn gram_of_triangular(cols: &[&[i64]]) -> GramLattice {
    let r = cols.len();
    let mut g = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            g[i][j] = cols[i].iter().zip(cols[j]).map(|(a, b)| a * b).sum();
        }
    }
    GramLattice::new(g).unwrap()
}

#[test]
fn short_vectors_of_scaled_line() {
    let l = gram(&[&[4]]);
    let vs = short_vectors(&l, 4, SearchLimits::default()).unwrap();
    let set: HashSet<Vec<i64>> = vs.into_iter().collect();
    assert_eq!(set, HashSet::from([vec![0], vec![1], vec![-1]]));
}

#[test]
fn short_vectors_of_triangular_rank_two() {
    let l = gram_of_triangular(&[&[2, 1], &[0, 2]]);
    let vs = short_vectors(&l, 4, SearchLimits::default()).unwrap();
    let set: HashSet<Vec<i64>> = vs.into_iter().collect();
    assert_eq!(set, HashSet::from([vec![0, 0], vec![0, 1], vec![0, -1]]));
    assert_eq!(l.norm(&[1, 0]), 5);
}

#[test]
fn hexagonal_root_count() {
    let l = gram(&[&[2, 1], &[1, 2]]);
    let vs = short_vectors(&l, 2, SearchLimits::default()).unwrap();
    assert_eq!(vs.len(), 7);
    assert_eq!(vs.iter().filter(|v| l.norm(v) == 2).count(), 6);
}

#[test]
fn rank_zero_short_vectors() {
    let l = GramLattice::new(vec![]).unwrap();
    assert_eq!(short_vectors(&l, 10, SearchLimits::default()).unwrap(), vec![Vec::<i64>::new()]);
}

fn random_gram(rng: &mut StdRng, r: usize) -> GramLattice {
    loop {
        let a: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..r).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        let mut g = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                g[i][j] = (0..r).map(|k| a[i][k] * a[j][k]).sum();
            }
        }
        if let Ok(l) = GramLattice::new(g) {
            return l;
        }
    }
}

#[test]
fn enumeration_matches_box_brute_force() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let r = rng.gen_range(1..=3);
        let l = random_gram(&mut rng, r);
        let bound = rng.gen_range(0..=8);
        let fast: HashSet<Vec<i64>> =
            short_vectors(&l, bound, SearchLimits::default()).unwrap().into_iter().collect();
        assert_eq!(fast.len(), short_vectors(&l, bound, SearchLimits::default()).unwrap().len());
        let mut slow = HashSet::new();
        let b = 12i64;
        let mut x = vec![-b; r];
        loop {
            if l.norm(&x) <= bound as i128 {
                slow.insert(x.clone());
            }
            let mut i = 0;
            loop {
                if i == r {
                    break;
                }
                x[i] += 1;
                if x[i] <= b {
                    break;
                }
                x[i] = -b;
                i += 1;
            }
            if i == r {
                break;
            }
        }
        assert_eq!(fast, slow, "gram {:?} bound {bound}", l.gram());
    }
}

#[test]
fn node_ceiling_is_enforced() {
    let l = gram(&[&[1, 0], &[0, 1]]);
    let err = short_vectors(&l, 10_000, SearchLimits { node_ceiling: 5 }).unwrap_err();
    assert!(matches!(err, LatticeError::BoundTooLarge(_)));
}

#[test]
fn classify_examples() {
    let limits = SearchLimits::default();
    let f = gram_of_triangular(&[&[2, 1], &[0, 2]]);
    assert_eq!(classify_element(&f, &[1, 0], limits).unwrap(), ElementClass::Irreducible);
    assert_eq!(classify_element(&f, &[0, 1], limits).unwrap(), ElementClass::Irreducible);
    // difference of the two columns, with column pairing 2 > 0
    assert_eq!(classify_element(&f, &[1, -1], limits).unwrap(), ElementClass::Irreducible);

    let d = gram(&[&[4, 0], &[0, 4]]);
    assert_eq!(classify_element(&d, &[1, 1], limits).unwrap(), ElementClass::Rigid);
    assert_eq!(classify_element(&d, &[1, 0], limits).unwrap(), ElementClass::Irreducible);
    assert_eq!(classify_element(&d, &[2, 0], limits).unwrap(), ElementClass::NotSimple);

    // Z^2: (1,1) splits orthogonally as e1 + e2 only, so it is rigid;
    // (2,1) splits as e1 + (1,1) with positive pairing.
    let z2 = gram(&[&[1, 0], &[0, 1]]);
    assert_eq!(classify_element(&z2, &[1, 1], limits).unwrap(), ElementClass::Rigid);
    assert_eq!(classify_element(&z2, &[2, 1], limits).unwrap(), ElementClass::NotSimple);

    // 2Z^3: (2,2,2)/2 = (1,1,1) has three orthogonal splits, simple only.
    let z3 = gram(&[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
    assert_eq!(classify_element(&z3, &[1, 1, 1], limits).unwrap(), ElementClass::SimpleOnly);
}

#[test]
fn classification_is_sign_and_basis_invariant() {
    let limits = SearchLimits::default();
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..25 {
        let r = rng.gen_range(1..=3);
        let l = random_gram(&mut rng, r);
        let x: Vec<i64> = (0..r).map(|_| rng.gen_range(-2..=2)).collect();
        if x.iter().all(|&c| c == 0) {
            continue;
        }
        let cls = classify_element(&l, &x, limits).unwrap();
        let neg: Vec<i64> = x.iter().map(|c| -c).collect();
        assert_eq!(classify_element(&l, &neg, limits).unwrap(), cls);

        // Rebase by a random unimodular matrix built from elementary moves.
        let mut u: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        for _ in 0..6 {
            let i = rng.gen_range(0..r);
            let j = rng.gen_range(0..r);
            if i != j {
                let c = rng.gen_range(-1..=1);
                for k in 0..r {
                    u[k][i] += c * u[k][j];
                }
            }
        }
        // New gram: columns of u express the new basis in the old one.
        let mut g2 = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let bi: Vec<i64> = (0..r).map(|k| u[k][i]).collect();
                let bj: Vec<i64> = (0..r).map(|k| u[k][j]).collect();
                g2[i][j] = l.pair(&bi, &bj) as i64;
            }
        }
        let l2 = GramLattice::new(g2).unwrap();
        // Coefficients of x in the new basis: solve u * y = x.
        let Some(y) = solve_unimodular(&u, &x) else {
            continue;
        };
        assert_eq!(classify_element(&l2, &y, limits).unwrap(), cls);
    }
}

fn solve_unimodular(u: &[Vec<i64>], x: &[i64]) -> Option<Vec<i64>> {
    // Gaussian elimination over the rationals, integer answer expected.
    let r = x.len();
    let mut m: Vec<Vec<f64>> = (0..r)
        .map(|i| {
            (0..=r)
                .map(|j| if j < r { u[i][j] as f64 } else { x[i] as f64 })
                .collect()
        })
        .collect();
    for c in 0..r {
        let p = (c..r).find(|&i| m[i][c].abs() > 1e-9)?;
        m.swap(c, p);
        let d = m[c][c];
        for j in c..=r {
            m[c][j] /= d;
        }
        for i in 0..r {
            if i != c {
                let f = m[i][c];
                for j in c..=r {
                    let s = m[c][j];
                    m[i][j] -= f * s;
                }
            }
        }
    }
    Some((0..r).map(|i| m[i][r].round() as i64).collect())
}

#[test]
fn summand_partitions() {
    let d = gram(&[&[4, 0], &[0, 4]]);
    let basis = vec![vec![1, 0], vec![0, 1]];
    assert_eq!(indecomposable_summands(&d, &basis).unwrap(), vec![vec![0], vec![1]]);

    let f = gram_of_triangular(&[&[2, 1], &[0, 2]]);
    assert_eq!(
        indecomposable_summands(&f, &basis).unwrap(),
        vec![vec![0, 1]]
    );

    let h2 = gram_of_triangular(&[&[2, 0, 1], &[0, 2, 1], &[0, 0, 2]]);
    let basis3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    assert_eq!(indecomposable_summands(&h2, &basis3).unwrap(), vec![vec![0, 1, 2]]);

    // Reordering the basis elements does not change the partition shape.
    let reordered = vec![vec![0, 1], vec![1, 0]];
    assert_eq!(indecomposable_summands(&d, &reordered).unwrap(), vec![vec![0], vec![1]]);

    assert_eq!(
        indecomposable_summands(&d, &vec![vec![1, 0], vec![2, 0]]).unwrap_err(),
        LatticeError::NotABasis
    );
    assert_eq!(
        indecomposable_summands(&d, &vec![vec![1, 0]]).unwrap_err(),
        LatticeError::NotABasis
    );
}

#[test]
fn isometry_identity_and_remark_pair() {
    let limits = SearchLimits::default();
    let f = gram_of_triangular(&[&[2, 1], &[0, 2]]);
    let id = isometry_test(&f, &f, limits).unwrap().unwrap();
    assert_eq!(check_isometry(&f, &f, &id), true);

    // Two distinct triangular matrices with isometric lattices.
    let h = gram_of_triangular(&[&[2, 1, 0], &[0, 2, 1], &[0, 0, 2]]);
    let hp = gram_of_triangular(&[&[2, 1, 1], &[0, 2, 1], &[0, 0, 2]]);
    assert_ne!(h.gram(), hp.gram());
    let t = isometry_test(&h, &hp, limits).unwrap().expect("isometry exists");
    assert!(check_isometry(&h, &hp, &t));

    let h1 = gram_of_triangular(&[&[2, 1, 1], &[0, 2, 1], &[0, 0, 2]]);
    let cube = gram(&[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
    assert!(isometry_test(&h1, &cube, limits).unwrap().is_none());

    // Fast rejects.
    let hex = gram(&[&[2, 1], &[1, 2]]);
    let sq = gram(&[&[1, 0], &[0, 1]]);
    assert!(isometry_test(&hex, &sq, limits).unwrap().is_none());
}

fn check_isometry(l1: &GramLattice, l2: &GramLattice, t: &[Vec<i64>]) -> bool {
    let r = l1.rank();
    (0..r).all(|i| (0..r).all(|j| l1.pair(&t[i], &t[j]) == l2.gram()[i][j] as i128))
}

#[test]
fn isometry_rank_cap() {
    let big = GramLattice::new(
        (0..7)
            .map(|i| (0..7).map(|j| if i == j { 2 } else { 0 }).collect())
            .collect(),
    )
    .unwrap();
    assert!(matches!(
        isometry_test(&big, &big, SearchLimits::default()),
        Err(LatticeError::BoundTooLarge(_))
    ));
}
