use crate::matrix::{bareiss_determinant, mat_vec, smith_normal_form};
use crate::LatticeError;
use num_rational::Ratio;

/// An abstract lattice given by its Gram matrix (symmetric, positive
/// definite, integral).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
}

impl GramLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let r = gram.len();
        for row in &gram {
            if row.len() != r {
                return Err(LatticeError::Invalid("gram matrix is not square".into()));
            }
        }
        for i in 0..r {
            for j in 0..r {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::Invalid("gram matrix is not symmetric".into()));
                }
            }
        }
        let l = GramLattice { gram };
        // Positive definiteness: all leading principal minors positive.
        for k in 1..=r {
            let minor: Vec<Vec<i128>> = (0..k)
                .map(|i| (0..k).map(|j| l.gram[i][j] as i128).collect())
                .collect();
            if bareiss_determinant(&minor) <= 0 {
                return Err(LatticeError::Invalid(
                    "gram matrix is not positive definite".into(),
                ));
            }
        }
        Ok(l)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Vec<Vec<i64>> {
        &self.gram
    }

    pub fn determinant(&self) -> i128 {
        let m: Vec<Vec<i128>> = self
            .gram
            .iter()
            .map(|row| row.iter().map(|&x| x as i128).collect())
            .collect();
        bareiss_determinant(&m)
    }

    /// det / 4^rank as an exact rational.
    pub fn normalized_determinant(&self) -> Ratio<i128> {
        Ratio::new(self.determinant(), 4i128.pow(self.rank() as u32))
    }

    /// Pairing of two coefficient vectors.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i128 {
        let r = self.rank();
        let mut s = 0i128;
        for i in 0..r {
            for j in 0..r {
                s += x[i] as i128 * self.gram[i][j] as i128 * y[j] as i128;
            }
        }
        s
    }

    pub fn norm(&self, x: &[i64]) -> i128 {
        self.pair(x, x)
    }

    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        let (a, b) = (self.rank(), other.rank());
        let mut gram = vec![vec![0i64; a + b]; a + b];
        for i in 0..a {
            gram[i][..a].copy_from_slice(&self.gram[i]);
        }
        for i in 0..b {
            gram[a + i][a..].copy_from_slice(&other.gram[i]);
        }
        GramLattice { gram }
    }
}

/// A lattice embedded in Z^n: columns of `basis` are the basis vectors in
/// ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedLattice {
    ambient_rank: usize,
    columns: Vec<Vec<i64>>,
    gram: GramLattice,
}

impl EmbeddedLattice {
    pub fn new(ambient_rank: usize, columns: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        for c in &columns {
            if c.len() != ambient_rank {
                return Err(LatticeError::Invalid(
                    "basis column has wrong ambient dimension".into(),
                ));
            }
        }
        let r = columns.len();
        let mut gram = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let dot: i128 = columns[i]
                    .iter()
                    .zip(&columns[j])
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum();
                gram[i][j] = i64::try_from(dot)
                    .map_err(|_| LatticeError::Invalid("gram entry overflow".into()))?;
            }
        }
        // GramLattice::new rejects dependent columns (zero minor).
        let gram = GramLattice::new(gram)?;
        Ok(EmbeddedLattice { ambient_rank, columns, gram })
    }

    pub fn standard(n: usize) -> Self {
        let columns = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        EmbeddedLattice::new(n, columns).unwrap()
    }

    /// The sublattice c·Z^n of Z^n.
    pub fn scaled_standard(n: usize, c: i64) -> Self {
        let columns = (0..n)
            .map(|i| (0..n).map(|j| if i == j { c } else { 0 }).collect())
            .collect();
        EmbeddedLattice::new(n, columns).unwrap()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &Vec<Vec<i64>> {
        &self.columns
    }

    pub fn gram_lattice(&self) -> &GramLattice {
        &self.gram
    }

    pub fn determinant(&self) -> i128 {
        self.gram.determinant()
    }

    pub fn normalized_determinant(&self) -> Ratio<i128> {
        self.gram.normalized_determinant()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_rank
    }

    /// Maps a coefficient vector to ambient coordinates.
    pub fn to_ambient(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut v = vec![0i64; self.ambient_rank];
        for (c, col) in coeffs.iter().zip(&self.columns) {
            for (vi, &ci) in v.iter_mut().zip(col) {
                *vi += c * ci;
            }
        }
        v
    }

    /// Integer coefficients of `v` in this basis, or `None` when v is not
    /// in the lattice. Exact rational elimination.
    pub fn membership(&self, v: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(v.len(), self.ambient_rank);
        let n = self.ambient_rank;
        let r = self.rank();
        let mut aug: Vec<Vec<Ratio<i128>>> = (0..n)
            .map(|i| {
                (0..=r)
                    .map(|j| {
                        let x = if j < r { self.columns[j][i] } else { v[i] };
                        Ratio::from_integer(x as i128)
                    })
                    .collect()
            })
            .collect();
        let zero = Ratio::from_integer(0);
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..r {
            let Some(p) = (row..n).find(|&i| aug[i][col] != zero) else {
                continue;
            };
            aug.swap(row, p);
            let inv = aug[row][col];
            for j in col..=r {
                aug[row][j] /= inv;
            }
            for i in 0..n {
                if i != row && aug[i][col] != zero {
                    let f = aug[i][col];
                    for j in col..=r {
                        let s = aug[row][j];
                        aug[i][j] -= f * s;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        // Consistency: rows without pivots must have zero right-hand side.
        for i in row..n {
            if aug[i][r] != zero {
                return None;
            }
        }
        let mut coeffs = vec![0i64; r];
        for &(pr, pc) in &pivots {
            let val = aug[pr][r];
            if !val.is_integer() {
                return None;
            }
            coeffs[pc] = i64::try_from(val.to_integer()).ok()?;
        }
        Some(coeffs)
    }

    /// Discriminant group of a full-rank embedded lattice.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup, LatticeError> {
        if !self.is_full_rank() {
            return Err(LatticeError::NotFullRank);
        }
        let n = self.ambient_rank;
        // Basis matrix with columns as basis vectors.
        let a: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| self.columns[j][i] as i128).collect())
            .collect();
        let snf = smith_normal_form(&a);
        let factors = snf.diagonal();
        Ok(DiscriminantGroup { invariant_factors: factors, u: snf.u })
    }
}

/// The finite group Z^n / Λ for a full-rank Λ, as invariant factors plus a
/// reduction map to canonical coset labels.
#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    invariant_factors: Vec<i128>,
    u: Vec<Vec<i128>>,
}

impl DiscriminantGroup {
    pub fn invariant_factors(&self) -> &[i128] {
        &self.invariant_factors
    }

    /// Invariant factors with the leading 1s dropped.
    pub fn nontrivial_factors(&self) -> Vec<i128> {
        self.invariant_factors.iter().copied().filter(|&d| d != 1).collect()
    }

    pub fn order(&self) -> i128 {
        self.invariant_factors.iter().product()
    }

    /// Canonical label of the coset of an ambient vector: the transformed
    /// coordinates reduced modulo the invariant factors.
    pub fn coset_label(&self, v: &[i64]) -> Vec<i128> {
        let x: Vec<i128> = v.iter().map(|&a| a as i128).collect();
        let y = mat_vec(&self.u, &x);
        y.iter()
            .zip(&self.invariant_factors)
            .map(|(&a, &d)| a.rem_euclid(d))
            .collect()
    }
}
