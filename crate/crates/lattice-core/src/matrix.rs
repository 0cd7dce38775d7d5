//! Integer matrix kernels: fraction-free determinants and Smith normal
//! form with transform tracking. Entries are i128 throughout; inputs of
//! practical size here (rank at most ~12, entries small) stay far from
//! overflow, and debug builds check arithmetic.

/// Determinant by the Bareiss fraction-free elimination.
pub fn bareiss_determinant(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Smith normal form data: `u * a * v = d` with `u`, `v` unimodular and
/// `d` diagonal with each diagonal entry dividing the next.
pub struct SmithForm {
    pub d: Vec<Vec<i128>>,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.d.len().min(self.d.first().map_or(0, |r| r.len())))
            .map(|i| self.d[i][i])
            .collect()
    }
}

pub fn smith_normal_form(a: &[Vec<i128>]) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut d: Vec<Vec<i128>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        // Bring a nonzero pivot to (t, t).
        let mut pivot = None;
        'outer: for i in t..rows {
            for j in t..cols {
                if d[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            d.swap(pi, t);
            u.swap(pi, t);
        }
        if pj != t {
            swap_cols(&mut d, pj, t);
            swap_cols(&mut v, pj, t);
        }
        loop {
            // Clear column t below the pivot.
            let mut dirty = false;
            for i in t + 1..rows {
                while d[i][t] != 0 {
                    let q = d[i][t].div_euclid(d[t][t]);
                    row_sub(&mut d, i, t, q);
                    row_sub(&mut u, i, t, q);
                    if d[i][t] != 0 {
                        d.swap(i, t);
                        u.swap(i, t);
                        dirty = true;
                    }
                }
            }
            // Clear row t right of the pivot.
            for j in t + 1..cols {
                while d[t][j] != 0 {
                    let q = d[t][j].div_euclid(d[t][t]);
                    col_sub(&mut d, j, t, q);
                    col_sub(&mut v, j, t, q);
                    if d[t][j] != 0 {
                        swap_cols(&mut d, j, t);
                        swap_cols(&mut v, j, t);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        // Enforce divisibility of the remaining block by the pivot.
        let mut fixed = true;
        'check: for i in t + 1..rows {
            for j in t + 1..cols {
                if d[i][j] % d[t][t] != 0 {
                    // Fold row i into row t and restart this pivot.
                    for jj in 0..cols {
                        d[t][jj] += d[i][jj];
                    }
                    for jj in 0..rows {
                        u[t][jj] += u[i][jj];
                    }
                    fixed = false;
                    break 'check;
                }
            }
        }
        if fixed {
            if d[t][t] < 0 {
                for j in 0..cols {
                    d[t][j] = -d[t][j];
                }
                for j in 0..rows {
                    u[t][j] = -u[t][j];
                }
            }
            t += 1;
        }
    }
    SmithForm { d, u, v }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn row_sub(m: &mut [Vec<i128>], i: usize, t: usize, q: i128) {
    if q == 0 {
        return;
    }
    let cols = m[0].len();
    for j in 0..cols {
        let s = m[t][j];
        m[i][j] -= q * s;
    }
}

fn col_sub(m: &mut [Vec<i128>], j: usize, t: usize, q: i128) {
    if q == 0 {
        return;
    }
    for row in m.iter_mut() {
        let s = row[t];
        row[j] -= q * s;
    }
}

pub fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0i128; m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t] == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &[Vec<i128>], x: &[i128]) -> Vec<i128> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(&r, &v)| r * v).sum())
        .collect()
}
