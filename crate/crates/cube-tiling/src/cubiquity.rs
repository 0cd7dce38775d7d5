use crate::CubeError;
use lattice_core::EmbeddedLattice;
use serde::Serialize;
use std::collections::{HashMap, HashSet, VecDeque};

const AMBIENT_CAP: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub struct CubiquityReport {
    pub cubiquitous: bool,
    pub cosets_covered: u64,
    pub cosets_total: u64,
    /// For a negative verdict, a cube corner x such that x + {0,1}^n
    /// contains no lattice point; re-verified before being reported.
    pub witness_cube: Option<Vec<i64>>,
}

/// Decides cubiquity of a full-rank sublattice of Z^n by testing whether
/// the corners of {0,1}^n cover every coset: the lattice meets every unit
/// cube if and only if they do.
pub fn is_cubiquitous(l: &EmbeddedLattice) -> Result<CubiquityReport, CubeError> {
    if !l.is_full_rank() {
        return Err(CubeError::NotFullRank);
    }
    let n = l.ambient_rank();
    if n > AMBIENT_CAP {
        return Err(CubeError::AmbientTooLarge(n, AMBIENT_CAP));
    }
    let dg = l.discriminant_group()?;
    let total = dg.order() as u64;
    let mut corner_negatives: HashSet<Vec<i128>> = HashSet::new();
    let mut covered: HashSet<Vec<i128>> = HashSet::new();
    for mask in 0u64..(1 << n) {
        let corner: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
        covered.insert(dg.coset_label(&corner));
        let neg: Vec<i64> = corner.iter().map(|&c| -c).collect();
        corner_negatives.insert(dg.coset_label(&neg));
    }
    if covered.len() as u64 == total {
        return Ok(CubiquityReport {
            cubiquitous: true,
            cosets_covered: total,
            cosets_total: total,
            witness_cube: None,
        });
    }
    // The cube x + {0,1}^n misses the lattice exactly when the label of x
    // avoids the labels of the negated corners; walk outward from the
    // origin until a vector with such a label appears.
    let witness = find_label_representative(l, &dg, |label| !corner_negatives.contains(label));
    let witness = witness.expect("uncovered coset has a representative");
    debug_assert!(verify_empty_cube(l, &witness));
    Ok(CubiquityReport {
        cubiquitous: false,
        cosets_covered: covered.len() as u64,
        cosets_total: total,
        witness_cube: Some(witness),
    })
}

fn find_label_representative(
    l: &EmbeddedLattice,
    dg: &lattice_core::DiscriminantGroup,
    accept: impl Fn(&Vec<i128>) -> bool,
) -> Option<Vec<i64>> {
    let n = l.ambient_rank();
    let mut seen: HashMap<Vec<i128>, ()> = HashMap::new();
    let mut queue = VecDeque::from([vec![0i64; n]]);
    seen.insert(dg.coset_label(&vec![0; n]), ());
    while let Some(v) = queue.pop_front() {
        if accept(&dg.coset_label(&v)) {
            return Some(v);
        }
        for i in 0..n {
            for d in [1i64, -1] {
                let mut w = v.clone();
                w[i] += d;
                let label = dg.coset_label(&w);
                if !seen.contains_key(&label) {
                    seen.insert(label, ());
                    queue.push_back(w);
                }
            }
        }
    }
    None
}

fn verify_empty_cube(l: &EmbeddedLattice, x: &[i64]) -> bool {
    let n = l.ambient_rank();
    (0u64..(1 << n)).all(|mask| {
        let p: Vec<i64> = (0..n).map(|i| x[i] + ((mask >> i) & 1) as i64).collect();
        l.membership(&p).is_none()
    })
}

/// True iff the lattice is cubiquitous of maximal determinant 4^n, so its
/// points center a tiling by side-2 cubes.
pub fn is_2cube_tiling(l: &EmbeddedLattice) -> Result<bool, CubeError> {
    if !l.is_full_rank() {
        return Err(CubeError::NotFullRank);
    }
    let n = l.ambient_rank();
    if l.determinant() != 4i128.pow(n as u32) {
        return Ok(false);
    }
    Ok(is_cubiquitous(l)?.cubiquitous)
}
