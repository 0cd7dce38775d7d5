use crate::{short_vectors, GramLattice, LatticeError, SearchLimits};

/// Searches for an isometry from `l1` to `l2`: an integer matrix T whose
/// columns t_i satisfy t_i · t_j = gram2[i][j] in l1's form. With equal
/// determinants such a T is automatically unimodular, so pairing-matched
/// assignment of all basis images is a complete test.
///
/// Returns the columns of T (coefficient vectors in l1) or `None`.
pub fn isometry_test(
    l1: &GramLattice,
    l2: &GramLattice,
    limits: SearchLimits,
) -> Result<Option<Vec<Vec<i64>>>, LatticeError> {
    if l1.rank() != l2.rank() || l1.determinant() != l2.determinant() {
        return Ok(None);
    }
    let r = l1.rank();
    if r > 6 {
        return Err(LatticeError::BoundTooLarge(format!(
            "isometry search supports rank <= 6, got {r}"
        )));
    }
    if r == 0 {
        return Ok(Some(Vec::new()));
    }
    let max_norm = (0..r).map(|i| l2.gram()[i][i] as i128).max().unwrap();
    let pool = short_vectors(l1, max_norm, limits)?;
    let mut assigned: Vec<Vec<i64>> = Vec::new();
    if assign(l1, l2, &pool, &mut assigned) {
        Ok(Some(assigned))
    } else {
        Ok(None)
    }
}

fn assign(
    l1: &GramLattice,
    l2: &GramLattice,
    pool: &[Vec<i64>],
    assigned: &mut Vec<Vec<i64>>,
) -> bool {
    let i = assigned.len();
    if i == l1.rank() {
        return true;
    }
    for cand in pool {
        if l1.norm(cand) != l2.gram()[i][i] as i128 {
            continue;
        }
        if assigned
            .iter()
            .enumerate()
            .any(|(j, prev)| l1.pair(prev, cand) != l2.gram()[j][i] as i128)
        {
            continue;
        }
        assigned.push(cand.clone());
        if assign(l1, l2, pool, assigned) {
            return true;
        }
        assigned.pop();
    }
    false
}
