use crate::{short_vectors, GramLattice, LatticeError, SearchLimits};
use crate::matrix::bareiss_determinant;

/// Brute-force classification of a nonzero lattice element by exhausting
/// decompositions x = y + z:
///
/// * not-simple: some split has y·z > 0;
/// * simple-only: no positively-paired split, but several orthogonal ones;
/// * rigid: simple with exactly one unordered orthogonal split;
/// * irreducible: no split with y·z >= 0 at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementClass {
    NotSimple,
    SimpleOnly,
    Irreducible,
    Rigid,
}

pub fn classify_element(
    l: &GramLattice,
    x: &[i64],
    limits: SearchLimits,
) -> Result<ElementClass, LatticeError> {
    assert_eq!(x.len(), l.rank());
    assert!(x.iter().any(|&c| c != 0), "cannot classify the zero element");
    let n = l.norm(x);
    // Any split with y·z >= 0 has |y|^2, |z|^2 <= |x|^2.
    let candidates = short_vectors(l, n, limits)?;
    let mut orthogonal_splits = 0usize;
    let mut positive_split = false;
    for y in &candidates {
        if y.iter().all(|&c| c == 0) {
            continue;
        }
        let z: Vec<i64> = x.iter().zip(y).map(|(&a, &b)| a - b).collect();
        if z.iter().all(|&c| c == 0) {
            continue;
        }
        // Count each unordered pair {y, z} once.
        if *y > z {
            continue;
        }
        let p = l.pair(y, &z);
        if p > 0 {
            positive_split = true;
            break;
        }
        if p == 0 {
            orthogonal_splits += 1;
        }
    }
    Ok(if positive_split {
        ElementClass::NotSimple
    } else if orthogonal_splits == 0 {
        ElementClass::Irreducible
    } else if orthogonal_splits == 1 {
        ElementClass::Rigid
    } else {
        ElementClass::SimpleOnly
    })
}

/// Partitions an irreducible basis into the index sets generating the
/// indecomposable orthogonal summands: connected components of the
/// "nonzero pairing" relation.
pub fn indecomposable_summands(
    l: &GramLattice,
    basis: &[Vec<i64>],
) -> Result<Vec<Vec<usize>>, LatticeError> {
    let r = l.rank();
    if basis.len() != r {
        return Err(LatticeError::NotABasis);
    }
    if r > 0 {
        let m: Vec<Vec<i128>> = (0..r)
            .map(|i| (0..r).map(|j| basis[j][i] as i128).collect())
            .collect();
        let det = bareiss_determinant(&m);
        if det != 1 && det != -1 {
            return Err(LatticeError::NotABasis);
        }
    }
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for i in 0..r {
        for j in i + 1..r {
            if l.pair(&basis[i], &basis[j]) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..r {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    Ok(out)
}
