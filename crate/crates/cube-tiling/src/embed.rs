use crate::{is_cubiquitous, CubeError, HajosMatrix};
use lattice_core::{isometry_test, EmbeddedLattice, GramLattice, LatticeError, SearchLimits};

const EMBED_RANK_CAP: usize = 5;

fn is_perfect_square(d: i128) -> bool {
    if d < 0 {
        return false;
    }
    let mut s = (d as f64).sqrt() as i128;
    while s * s > d {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= d {
        s += 1;
    }
    s * s == d
}

/// Exhaustive search for a cubiquitous full-rank realization of an
/// abstract form inside Z^rank. Complete up to signed coordinate
/// permutation, so `None` proves no such embedding exists at this ambient
/// rank.
pub fn find_cubiquitous_embedding(
    g: &GramLattice,
    limits: SearchLimits,
) -> Result<Option<EmbeddedLattice>, CubeError> {
    let r = g.rank();
    if r > EMBED_RANK_CAP {
        return Err(CubeError::Lattice(LatticeError::BoundTooLarge(format!(
            "embedding search supports rank <= {EMBED_RANK_CAP}, got {r}"
        ))));
    }
    if r == 0 {
        return Ok(Some(EmbeddedLattice::new(0, vec![]).unwrap()));
    }
    // A full-rank sublattice has determinant = index^2.
    if !is_perfect_square(g.determinant()) {
        return Ok(None);
    }
    let mut assigned: Vec<Vec<i64>> = Vec::new();
    let mut nodes = 0u64;
    search(g, &mut assigned, &mut nodes, limits.node_ceiling)
}

fn norm_vectors(n: usize, target: i64) -> Vec<Vec<i64>> {
    // All integer vectors of given squared length, by bounded box walk.
    let mut out = Vec::new();
    let mut v = vec![0i64; n];
    let b = {
        let mut s = 0i64;
        while s * s < target + 1 {
            s += 1;
        }
        s
    };
    walk(&mut v, 0, b, target, &mut out);
    out
}

fn walk(v: &mut Vec<i64>, i: usize, b: i64, remaining: i64, out: &mut Vec<Vec<i64>>) {
    if i == v.len() {
        if remaining == 0 {
            out.push(v.clone());
        }
        return;
    }
    for x in -b..=b {
        if x * x <= remaining {
            v[i] = x;
            walk(v, i + 1, b, remaining - x * x, out);
            v[i] = 0;
        }
    }
}

fn search(
    g: &GramLattice,
    assigned: &mut Vec<Vec<i64>>,
    nodes: &mut u64,
    ceiling: u64,
) -> Result<Option<EmbeddedLattice>, CubeError> {
    let r = g.rank();
    let i = assigned.len();
    if i == r {
        let l = match EmbeddedLattice::new(r, assigned.clone()) {
            Ok(l) => l,
            Err(_) => return Ok(None),
        };
        if l.determinant() == g.determinant() && is_cubiquitous(&l)?.cubiquitous {
            return Ok(Some(l));
        }
        return Ok(None);
    }
    for cand in norm_vectors(r, g.gram()[i][i]) {
        *nodes += 1;
        if *nodes > ceiling {
            return Err(CubeError::Lattice(LatticeError::BoundTooLarge(
                "embedding search passed its node ceiling".into(),
            )));
        }
        // Signed coordinate permutations preserve both the Gram data and
        // cubiquity, so the first vector can be normalized to sorted
        // nonnegative entries without losing completeness.
        if i == 0 {
            let mut sorted = cand.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted != cand || cand.iter().any(|&x| x < 0) {
                continue;
            }
        }
        let ok = assigned.iter().enumerate().all(|(j, prev)| {
            let dot: i64 = prev.iter().zip(&cand).map(|(a, b)| a * b).sum();
            dot == g.gram()[j][i]
        });
        if !ok {
            continue;
        }
        assigned.push(cand);
        if let Some(found) = search(g, assigned, nodes, ceiling)? {
            return Ok(Some(found));
        }
        assigned.pop();
    }
    Ok(None)
}

/// A cubiquitous image of a second lattice inside the stabilization
/// Λ(H₁) ⊕ Z^m, realized through an extension certificate matrix.
#[derive(Clone, Debug)]
pub struct StabilizedEmbedding {
    pub base: HajosMatrix,
    pub stabilization_rank: usize,
    pub extension: HajosMatrix,
    /// Images of the second lattice's basis in the ambient Z^{r1+m},
    /// whose first r1 coordinates live in Λ(H₁)'s ambient.
    pub image_columns: Vec<Vec<i64>>,
}

/// Searches the certificate extensions of H₁ for one isometric to the
/// target form. Only the equal-normalized-determinant case is supported;
/// there the stabilization rank is forced to the rank difference.
pub fn find_stabilized_cubiquitous_embedding(
    h1: &HajosMatrix,
    l2: &GramLattice,
    limits: SearchLimits,
) -> Result<Option<StabilizedEmbedding>, CubeError> {
    let r1 = h1.rank;
    let r2 = l2.rank();
    let l1 = h1.lattice();
    if l1.normalized_determinant() != l2.normalized_determinant() {
        return Err(CubeError::UnequalNormalizedDeterminant);
    }
    if r2 < r1 {
        return Ok(None);
    }
    let m = r2 - r1;
    // Free below-diagonal bits of the extension rows.
    let free: usize = (r1..r2).map(|i| i).sum();
    for mask in 0u64..(1 << free) {
        let mut rows = vec![vec![0i64; r2]; r2];
        for i in 0..r1 {
            rows[i][..r1].copy_from_slice(&h1.rows[i]);
        }
        let mut bit = 0;
        for i in r1..r2 {
            rows[i][i] = 2;
            for j in 0..i {
                rows[i][j] = ((mask >> bit) & 1) as i64;
                bit += 1;
            }
        }
        let h = HajosMatrix::new(rows).expect("constructed extension is triangular");
        let Some(t) = isometry_test(h.lattice().gram_lattice(), l2, limits)? else {
            continue;
        };
        let ambient = h.lattice();
        let image_columns: Vec<Vec<i64>> = t.iter().map(|c| ambient.to_ambient(c)).collect();
        return Ok(Some(StabilizedEmbedding {
            base: h1.clone(),
            stabilization_rank: m,
            extension: h,
            image_columns,
        }));
    }
    Ok(None)
}
