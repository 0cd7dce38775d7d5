use crate::{CubeError, HajosMatrix};
use lattice_core::EmbeddedLattice;

/// The coordinate change that carries the input lattice onto the image of
/// a certificate matrix: `permutation[p]` is the original coordinate
/// placed at position p, and `signs[p]` the sign applied to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    pub permutation: Vec<usize>,
    pub signs: Vec<i64>,
}

impl CoordinateChange {
    pub fn identity(n: usize) -> Self {
        CoordinateChange { permutation: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.permutation
            .iter()
            .zip(&self.signs)
            .map(|(&orig, &s)| s * v[orig])
            .collect()
    }
}

/// Column-operation Hermite reduction: returns a lower-triangular basis
/// (columns) of the lattice spanned by the given columns, with positive
/// diagonal. The input columns may be dependent or redundant.
fn hermite_lower_triangular(ambient: usize, columns: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut cols: Vec<Vec<i128>> = columns
        .iter()
        .map(|c| c.iter().map(|&x| x as i128).collect())
        .collect();
    let mut basis: Vec<Vec<i128>> = Vec::new();
    for row in 0..ambient {
        // gcd-combine all columns with a nonzero entry in this row.
        loop {
            let mut nz: Vec<usize> = (0..cols.len()).filter(|&j| cols[j][row] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&j| cols[j][row].abs());
            let (a, b) = (nz[0], nz[1]);
            let q = cols[b][row] / cols[a][row];
            for i in 0..ambient {
                let s = cols[a][i];
                cols[b][i] -= q * s;
            }
        }
        if let Some(j) = (0..cols.len()).find(|&j| cols[j][row] != 0) {
            let mut pivot = cols.swap_remove(j);
            if pivot[row] < 0 {
                for x in pivot.iter_mut() {
                    *x = -*x;
                }
            }
            basis.push(pivot);
        }
    }
    basis
        .into_iter()
        .map(|c| c.into_iter().map(|x| i64::try_from(x).expect("entry overflow")).collect())
        .collect()
}

fn project_out(columns: &[Vec<i64>], coord: usize) -> Vec<Vec<i64>> {
    columns
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .filter(|&(i, _)| i != coord)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

fn unit_doubled(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i] = 2;
    v
}

/// Recovers the certificate matrix of a 2-cube tiling lattice.
///
/// The recursion: some coordinate i has 2e_i in the lattice (a pair of
/// tiles sharing a codimension-1 face guarantees one); that coordinate is
/// sent to the last position, the lattice is projected off it, and the
/// recursion continues. The largest available i is preferred, which keeps
/// a lattice already presented by a certificate matrix fixed. After
/// reordering, Hermite reduction gives a triangular basis with diagonal 2
/// and the below-diagonal entries are folded into {0,1} with column moves.
pub fn extract_hajos(
    l: &EmbeddedLattice,
) -> Result<(CoordinateChange, HajosMatrix), CubeError> {
    if !l.is_full_rank() {
        return Err(CubeError::NotFullRank);
    }
    let n = l.ambient_rank();

    // Coordinate picking order: first pick goes to the last position.
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut placed_rev: Vec<usize> = Vec::new();
    let mut columns = l.columns().clone();
    while !remaining.is_empty() {
        let k = remaining.len();
        let current = EmbeddedLattice::new(k, hermite_lower_triangular(k, &columns))
            .map_err(|e| CubeError::NotTiling(format!("degenerate projection: {e}")))?;
        let Some(pos) = (0..k)
            .rev()
            .find(|&p| current.membership(&unit_doubled(k, p)).is_some())
        else {
            return Err(CubeError::NotTiling(format!(
                "no doubled unit vector among coordinates {remaining:?}"
            )));
        };
        placed_rev.push(remaining[pos]);
        remaining.remove(pos);
        columns = project_out(&columns, pos);
    }
    let permutation: Vec<usize> = placed_rev.into_iter().rev().collect();
    let change = CoordinateChange { permutation, signs: vec![1; n] };

    // Reorder the original basis and re-triangularize.
    let reordered: Vec<Vec<i64>> = l.columns().iter().map(|c| change.apply(c)).collect();
    let mut tri = hermite_lower_triangular(n, &reordered);
    for (j, col) in tri.iter().enumerate() {
        if col[j] != 2 {
            return Err(CubeError::NotTiling(format!(
                "triangular diagonal entry {} at position {j}, expected 2",
                col[j]
            )));
        }
    }
    // Fold below-diagonal entries into {0,1} using later columns.
    for j in 0..n {
        for i in j + 1..n {
            let r = tri[j][i].rem_euclid(2);
            let q = (tri[j][i] - r) / 2;
            if q != 0 {
                for t in i..n {
                    tri[j][t] -= q * tri[i][t];
                }
            }
        }
    }
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| tri[j][i]).collect()).collect();
    let h = HajosMatrix::new(rows)
        .map_err(|e| CubeError::NotTiling(format!("reduced basis is not a certificate: {e}")))?;
    Ok((change, h))
}

/// Moves a self-pairing-4 element to the last certificate column.
///
/// Such an element of a certificate lattice is always (plus or minus) a
/// doubled unit vector 2e_i; transposing coordinate i with the last one
/// and flipping the sign when needed gives a new certificate matrix whose
/// last column is the image of the element.
pub fn reorder_for_square4(
    h: &HajosMatrix,
    y_coeffs: &[i64],
) -> Result<(CoordinateChange, HajosMatrix), CubeError> {
    let n = h.rank;
    let l = h.lattice();
    let ambient = l.to_ambient(y_coeffs);
    let norm: i64 = ambient.iter().map(|x| x * x).sum();
    if norm != 4 {
        return Err(CubeError::NotSquare4);
    }
    let Some(i) = (0..n).find(|&i| ambient[i].abs() == 2) else {
        return Err(CubeError::NotTiling(
            "self-pairing-4 element is not a doubled unit vector".into(),
        ));
    };
    let sign = ambient[i].signum();

    // Transpose i to the back and orient it positively, then re-extract.
    let mut change = CoordinateChange::identity(n);
    change.permutation.swap(i, n - 1);
    change.signs[n - 1] = sign;
    let moved: Vec<Vec<i64>> = l.columns().iter().map(|c| change.apply(c)).collect();
    let moved = EmbeddedLattice::new(n, moved).expect("signed permutation keeps a basis");
    let (inner, new_h) = extract_hajos(&moved)?;

    // Compose the two coordinate changes into one.
    let permutation: Vec<usize> = inner.permutation.iter().map(|&p| change.permutation[p]).collect();
    let signs: Vec<i64> = inner
        .permutation
        .iter()
        .zip(&inner.signs)
        .map(|(&p, &s)| s * change.signs[p])
        .collect();
    debug_assert_eq!(new_h.column(n - 1), unit_doubled(n, n - 1));
    Ok((CoordinateChange { permutation, signs }, new_h))
}
