use crate::CubeError;
use lattice_core::{EmbeddedLattice, ElementClass};
use serde::{Deserialize, Serialize};

/// Lower-triangular certificate matrix: diagonal entries 2, entries below
/// the diagonal in {0,1}, zeros above.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HajosMatrix {
    pub rank: usize,
    pub rows: Vec<Vec<i64>>,
}

impl HajosMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, CubeError> {
        let r = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(CubeError::Invalid("matrix is not square".into()));
            }
            for (j, &x) in row.iter().enumerate() {
                let ok = if i == j {
                    x == 2
                } else if j < i {
                    x == 0 || x == 1
                } else {
                    x == 0
                };
                if !ok {
                    return Err(CubeError::Invalid(format!(
                        "entry ({i},{j}) = {x} violates the triangular shape"
                    )));
                }
            }
        }
        Ok(HajosMatrix { rank: r, rows })
    }

    pub fn identity_like(rank: usize) -> Self {
        let rows = (0..rank)
            .map(|i| (0..rank).map(|j| if i == j { 2 } else { 0 }).collect())
            .collect();
        HajosMatrix { rank, rows }
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.rows[i][j]).collect()
    }

    /// The lattice spanned by the columns inside Z^rank.
    pub fn lattice(&self) -> EmbeddedLattice {
        let cols = (0..self.rank).map(|j| self.column(j)).collect();
        EmbeddedLattice::new(self.rank, cols).expect("triangular columns are independent")
    }

    pub fn column_pairing(&self, j: usize, k: usize) -> i64 {
        self.column(j).iter().zip(self.column(k)).map(|(a, b)| a * b).sum()
    }

    /// All rank-2^k Hajós matrices of the given rank, in lexicographic
    /// order of their below-diagonal bits.
    pub fn enumerate(rank: usize) -> Vec<HajosMatrix> {
        let free = rank * (rank - 1) / 2;
        let mut out = Vec::with_capacity(1 << free);
        for mask in 0u64..(1 << free) {
            let mut rows = HajosMatrix::identity_like(rank).rows;
            let mut bit = 0;
            for i in 0..rank {
                for j in 0..i {
                    rows[i][j] = ((mask >> bit) & 1) as i64;
                    bit += 1;
                }
            }
            out.push(HajosMatrix { rank, rows });
        }
        out
    }

    pub fn direct_sum(&self, other: &HajosMatrix) -> HajosMatrix {
        let r = self.rank + other.rank;
        let mut rows = vec![vec![0i64; r]; r];
        for i in 0..self.rank {
            rows[i][..self.rank].copy_from_slice(&self.rows[i]);
        }
        for i in 0..other.rank {
            rows[self.rank + i][self.rank..].copy_from_slice(&other.rows[i]);
        }
        HajosMatrix { rank: r, rows }
    }
}

/// Exhaustive scan for the vectors of the shape (0,...,0,2,e,...,e) with
/// e in {0,1} that lie in the lattice. These are exactly the columns of
/// the certificate matrix; the scan verifies that instead of assuming it.
pub fn hajos_vectors(h: &HajosMatrix) -> Vec<Vec<i64>> {
    let n = h.rank;
    let l = h.lattice();
    let mut found = Vec::new();
    for k in 0..n {
        let tail = n - k - 1;
        for mask in 0u64..(1 << tail) {
            let mut v = vec![0i64; n];
            v[k] = 2;
            for t in 0..tail {
                v[k + 1 + t] = ((mask >> t) & 1) as i64;
            }
            if l.membership(&v).is_some() {
                found.push(v);
            }
        }
    }
    found
}

/// The difference of two distinct certificate columns, classified by the
/// column pairing: positive pairing gives an irreducible element, zero
/// pairing a rigid one. (Pairings of distinct columns are never negative.)
pub fn classify_hajos_difference(h: &HajosMatrix, j: usize, k: usize) -> ElementClass {
    assert_ne!(j, k);
    if h.column_pairing(j, k) > 0 {
        ElementClass::Irreducible
    } else {
        ElementClass::Rigid
    }
}
