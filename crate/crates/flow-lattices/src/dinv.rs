use crate::{FlowError, FlowLattice};
use lattice_core::{smith_normal_form, GramLattice};
use num_rational::Ratio;
use num_traits::Zero;
use std::collections::BTreeMap;

/// The d-invariant as a map from coset labels of the characteristic torsor
/// to the minimum of (χ·χ − rank) / 4 over the coset.
pub type DInvariant = BTreeMap<Vec<i64>, Ratio<i128>>;

const DET_CAP: i128 = 4096;
const RANK_CAP: usize = 12;
const GROUP_CAP: i128 = 64;

/// Canonical residue labels for Z^r modulo the column span of an integer
/// matrix, through its Smith normal form.
pub(crate) struct CosetLabeler {
    u: Vec<Vec<i128>>,
    diag: Vec<i128>,
}

impl CosetLabeler {
    pub(crate) fn new(m: &[Vec<i128>]) -> Self {
        let snf = smith_normal_form(m);
        let diag = snf.diagonal();
        CosetLabeler { u: snf.u, diag }
    }

    pub(crate) fn label(&self, t: &[i128]) -> Vec<i64> {
        (0..self.diag.len())
            .map(|i| {
                let s: i128 = (0..t.len()).map(|j| self.u[i][j] * t[j]).sum();
                let r = if self.diag[i] == 0 { s } else { s.rem_euclid(self.diag[i]) };
                i64::try_from(r).expect("label overflow")
            })
            .collect()
    }
}

/// Solves g·s = t exactly over the rationals; g must be invertible.
pub(crate) fn rational_solve(g: &[Vec<i128>], t: &[i128]) -> Vec<Ratio<i128>> {
    let n = g.len();
    let mut a: Vec<Vec<Ratio<i128>>> = (0..n)
        .map(|i| {
            (0..=n)
                .map(|j| Ratio::from_integer(if j < n { g[i][j] } else { t[i] }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular matrix");
        a.swap(col, pivot);
        let p = a[col][col];
        for j in col..=n {
            a[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in col..=n {
                    let s = a[col][j];
                    a[r][j] -= f * s;
                }
            }
        }
    }
    (0..n).map(|i| a[i][n]).collect()
}

fn unimodular_inverse(u: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = u.len();
    let mut inv = vec![vec![0i128; n]; n];
    for j in 0..n {
        let mut e = vec![0i128; n];
        e[j] = 1;
        for (i, x) in rational_solve(u, &e).into_iter().enumerate() {
            assert!(x.is_integer(), "matrix is not unimodular");
            inv[i][j] = x.to_integer();
        }
    }
    inv
}

fn nearest_integer(r: Ratio<i128>) -> i128 {
    (r + Ratio::new(1, 2)).floor().to_integer()
}

fn cholesky(g: &[Vec<i128>]) -> Vec<Vec<Ratio<i128>>> {
    let n = g.len();
    let mut q: Vec<Vec<Ratio<i128>>> = g
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            let v = q[i][j] / q[i][i];
            q[i][j] = v;
        }
        for k in i + 1..n {
            for l in k..n {
                let v = q[k][l] - q[k][i] * q[i][l];
                q[k][l] = v;
            }
            q[k][i] = Ratio::zero();
        }
    }
    q
}

/// Minimum of (c + center)ᵀ g (c + center) over integer vectors c, by
/// depth-first branch and bound on the Cholesky form.
pub(crate) fn quadratic_min_over_translates(
    g: &[Vec<i128>],
    center: &[Ratio<i128>],
) -> Ratio<i128> {
    let n = g.len();
    if n == 0 {
        return Ratio::zero();
    }
    let q = cholesky(g);
    let mut u = vec![Ratio::<i128>::zero(); n];
    let mut best: Option<Ratio<i128>> = None;
    descend(&q, center, n - 1, Ratio::zero(), &mut u, &mut best);
    best.unwrap()
}

fn descend(
    q: &[Vec<Ratio<i128>>],
    center: &[Ratio<i128>],
    level: usize,
    acc: Ratio<i128>,
    u: &mut Vec<Ratio<i128>>,
    best: &mut Option<Ratio<i128>>,
) {
    let n = q.len();
    let mut cp = center[level];
    for j in level + 1..n {
        cp += q[level][j] * u[j];
    }
    let x0 = nearest_integer(-cp);
    for dir in [1i128, -1] {
        let mut x = if dir == 1 { x0 } else { x0 - 1 };
        loop {
            let w = Ratio::from_integer(x) + cp;
            let total = acc + q[level][level] * w * w;
            if best.map_or(false, |b| total >= b) {
                break;
            }
            if level == 0 {
                *best = Some(total);
            } else {
                u[level] = Ratio::from_integer(x) + center[level];
                descend(q, center, level - 1, total, u, best);
            }
            x += dir;
        }
    }
}

fn gram_i128(l: &GramLattice) -> Vec<Vec<i128>> {
    l.gram()
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect()
}

fn doubled(g: &[Vec<i128>]) -> Vec<Vec<i128>> {
    g.iter().map(|row| row.iter().map(|&x| 2 * x).collect()).collect()
}

/// Characteristic dual-coordinate representatives, one per coset of the
/// torsor X(Λ), together with the coset labeler for 2·Λ.
fn characteristic_reps(g: &[Vec<i128>]) -> (Vec<Vec<i128>>, CosetLabeler) {
    let n = g.len();
    let labeler = CosetLabeler::new(&doubled(g));
    if n == 0 {
        return (vec![vec![]], labeler);
    }
    let snf = smith_normal_form(g);
    let uinv = unimodular_inverse(&snf.u);
    let diag = snf.diagonal();
    let mut reps = Vec::new();
    let mut a = vec![0i128; n];
    loop {
        let t: Vec<i128> = (0..n)
            .map(|i| {
                let x: i128 = (0..n).map(|j| uinv[i][j] * a[j]).sum();
                g[i][i].rem_euclid(2) + 2 * x
            })
            .collect();
        reps.push(t);
        let mut k = 0;
        while k < n {
            a[k] += 1;
            if a[k] < diag[k] {
                break;
            }
            a[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    (reps, labeler)
}

/// Minimum self-pairing over the coset of a characteristic element, given
/// in dual coordinates.
pub(crate) fn min_coset_self_pairing(g: &[Vec<i128>], t: &[i128]) -> Ratio<i128> {
    let half = Ratio::new(1i128, 2);
    let center: Vec<Ratio<i128>> =
        rational_solve(g, t).into_iter().map(|x| x * half).collect();
    quadratic_min_over_translates(g, &center) * Ratio::from_integer(4)
}

pub fn d_invariant(l: &GramLattice) -> Result<DInvariant, FlowError> {
    let r = l.rank();
    if r > RANK_CAP {
        return Err(FlowError::BoundTooLarge(format!(
            "d-invariant supports rank <= {RANK_CAP}, got {r}"
        )));
    }
    let det = l.determinant();
    if det > DET_CAP {
        return Err(FlowError::BoundTooLarge(format!(
            "d-invariant supports determinant <= {DET_CAP}, got {det}"
        )));
    }
    let g = gram_i128(l);
    let (reps, labeler) = characteristic_reps(&g);
    let mut out = DInvariant::new();
    let quarter = Ratio::new(1i128, 4);
    for t in &reps {
        let q = if r == 0 { Ratio::zero() } else { min_coset_self_pairing(&g, t) };
        let d = (q - Ratio::from_integer(r as i128)) * quarter;
        let prev = out.insert(labeler.label(t), d);
        debug_assert!(prev.is_none(), "duplicate coset representative");
    }
    debug_assert_eq!(out.len() as i128, det);
    Ok(out)
}

/// The d-invariant of a flow lattice computed from the orientation side:
/// every short characteristic element is the restriction of an orientation
/// class, so the minima can be read off the orientation enumeration.
pub fn d_invariant_from_orientations(f: &FlowLattice) -> Result<DInvariant, FlowError> {
    let shorts = crate::short_characteristic_elements(f)?;
    let r = f.rank() as i128;
    let quarter = Ratio::new(1i128, 4);
    Ok(shorts
        .into_iter()
        .map(|(label, elems)| {
            let q = elems[0].self_pairing;
            (label, (q - Ratio::from_integer(r)) * quarter)
        })
        .collect())
}

struct TorsorData {
    d: Vec<Ratio<i128>>,
    factors: Vec<i128>,
    /// act[a][s] = index of the coset reached from coset s under the
    /// torsor action of group element a.
    act: Vec<Vec<usize>>,
}

fn torsor_data(l: &GramLattice) -> TorsorData {
    let g = gram_i128(l);
    let n = g.len();
    let (reps, labeler) = characteristic_reps(&g);
    let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (i, t) in reps.iter().enumerate() {
        index.insert(labeler.label(t), i);
    }
    let d_map = d_invariant(l).expect("caps checked by the caller");
    let mut d = vec![Ratio::zero(); reps.len()];
    for (label, &i) in &index {
        d[i] = d_map[label];
    }

    let snf = smith_normal_form(&g);
    let diag = snf.diagonal();
    let uinv = if n == 0 { Vec::new() } else { unimodular_inverse(&snf.u) };
    let factors: Vec<i128> = diag.iter().copied().filter(|&x| x > 1).collect();

    // One representative x in Z^n per group element, in mixed-radix order
    // over the nontrivial invariant factors.
    let order: usize = factors.iter().product::<i128>() as usize;
    let nontrivial: Vec<usize> = (0..n).filter(|&i| diag[i] > 1).collect();
    let mut act = Vec::with_capacity(order);
    let mut tuple = vec![0i128; factors.len()];
    for _ in 0..order {
        let mut a_full = vec![0i128; n];
        for (k, &pos) in nontrivial.iter().enumerate() {
            a_full[pos] = tuple[k];
        }
        let x: Vec<i128> =
            (0..n).map(|i| (0..n).map(|j| uinv[i][j] * a_full[j]).sum()).collect();
        let row: Vec<usize> = reps
            .iter()
            .map(|t| {
                let shifted: Vec<i128> =
                    (0..n).map(|i| t[i] + 2 * x[i]).collect();
                index[&labeler.label(&shifted)]
            })
            .collect();
        act.push(row);
        let mut k = 0;
        while k < factors.len() {
            tuple[k] += 1;
            if tuple[k] < factors[k] {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
    }
    TorsorData { d, factors, act }
}

fn tuple_index(factors: &[i128], tuple: &[i128]) -> usize {
    let mut idx = 0usize;
    for k in (0..factors.len()).rev() {
        idx = idx * factors[k] as usize + tuple[k] as usize;
    }
    idx
}

fn index_tuple(factors: &[i128], mut idx: usize) -> Vec<i128> {
    factors
        .iter()
        .map(|&f| {
            let r = (idx % f as usize) as i128;
            idx /= f as usize;
            r
        })
        .collect()
}

fn tuple_add(factors: &[i128], a: &[i128], b: &[i128]) -> Vec<i128> {
    (0..factors.len()).map(|k| (a[k] + b[k]).rem_euclid(factors[k])).collect()
}

fn tuple_scale(factors: &[i128], c: i128, a: &[i128]) -> Vec<i128> {
    (0..factors.len()).map(|k| (c * a[k]).rem_euclid(factors[k])).collect()
}

fn tuple_order(factors: &[i128], a: &[i128]) -> i128 {
    let mut ord = 1i128;
    for k in 0..factors.len() {
        let g = gcd(a[k], factors[k]);
        ord = lcm(ord, factors[k] / g);
    }
    ord
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

/// Enumerates automorphisms of ∏ Z/factors as generator image lists,
/// pruning assignments that fail injectivity on the generated subgroup.
fn automorphisms(factors: &[i128]) -> Vec<Vec<Vec<i128>>> {
    let order: usize = factors.iter().product::<i128>() as usize;
    let all: Vec<Vec<i128>> = (0..order).map(|i| index_tuple(factors, i)).collect();
    let mut out = Vec::new();
    let mut images: Vec<Vec<i128>> = Vec::new();
    assign(factors, &all, &mut images, &mut out);
    out
}

fn assign(
    factors: &[i128],
    all: &[Vec<i128>],
    images: &mut Vec<Vec<i128>>,
    out: &mut Vec<Vec<Vec<i128>>>,
) {
    let j = images.len();
    if j == factors.len() {
        out.push(images.clone());
        return;
    }
    for cand in all {
        if factors[j] % tuple_order(factors, cand) != 0 {
            continue;
        }
        images.push(cand.clone());
        if partial_injective(factors, images) {
            assign(factors, all, images, out);
        }
        images.pop();
    }
}

fn partial_injective(factors: &[i128], images: &[Vec<i128>]) -> bool {
    let j = images.len();
    let sub: i128 = factors[..j].iter().product();
    let mut seen = std::collections::BTreeSet::new();
    let mut coeffs = vec![0i128; j];
    for _ in 0..sub {
        let mut img = vec![0i128; factors.len()];
        for k in 0..j {
            img = tuple_add(factors, &img, &tuple_scale(factors, coeffs[k], &images[k]));
        }
        if !seen.insert(img) {
            return false;
        }
        let mut k = 0;
        while k < j {
            coeffs[k] += 1;
            if coeffs[k] < factors[k] {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
    true
}

/// Decides whether two lattices have isomorphic d-invariants: a bijection
/// of the characteristic torsors covering a determinant-group isomorphism
/// and equating the d-functions.
pub fn d_invariants_isomorphic(l1: &GramLattice, l2: &GramLattice) -> Result<bool, FlowError> {
    let (det1, det2) = (l1.determinant(), l2.determinant());
    if det1.max(det2) > GROUP_CAP {
        return Err(FlowError::BoundTooLarge(format!(
            "d-invariant comparison supports determinant groups of order <= {GROUP_CAP}"
        )));
    }
    if det1 != det2 {
        return Ok(false);
    }
    let t1 = torsor_data(l1);
    let t2 = torsor_data(l2);
    if t1.factors != t2.factors {
        return Ok(false);
    }
    let mut v1 = t1.d.clone();
    let mut v2 = t2.d.clone();
    v1.sort();
    v2.sort();
    if v1 != v2 {
        return Ok(false);
    }
    let factors = &t1.factors;
    let order = t1.act.len();
    for phi in automorphisms(factors) {
        // The automorphism as a permutation of group element indices.
        let phi_idx: Vec<usize> = (0..order)
            .map(|i| {
                let a = index_tuple(factors, i);
                let mut img = vec![0i128; factors.len()];
                for k in 0..factors.len() {
                    img = tuple_add(factors, &img, &tuple_scale(factors, a[k], &phi[k]));
                }
                tuple_index(factors, &img)
            })
            .collect();
        for base2 in 0..t2.d.len() {
            if t2.d[base2] != t1.d[0] {
                continue;
            }
            let ok = (0..order).all(|a| {
                let s1 = t1.act[a][0];
                let s2 = t2.act[phi_idx[a]][base2];
                t1.d[s1] == t2.d[s2]
            });
            if ok {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
