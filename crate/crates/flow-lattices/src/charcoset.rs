use crate::dinv::{rational_solve, CosetLabeler};
use crate::{FlowError, FlowLattice};
use graph_core::{is_acyclic_orientation, EdgeOrientation};
use num_rational::Ratio;
use num_traits::Zero;
use std::collections::BTreeMap;

const ORIENTATION_CAP: usize = 20;

/// A characteristic element of a flow lattice, recorded as the edge vector
/// of an orientation class, its restriction to the dual in fundamental
/// cycle coordinates, and its coset label modulo twice the flow lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCoset {
    pub edge_vector: Vec<i64>,
    pub dual_coords: Vec<i64>,
    pub label: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct ShortElement {
    pub chi: CharCoset,
    pub self_pairing: Ratio<i128>,
    pub orientation: EdgeOrientation,
}

fn gram_i128(f: &FlowLattice) -> Vec<Vec<i128>> {
    f.gram_lattice()
        .gram()
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect()
}

fn doubled_gram(f: &FlowLattice) -> Vec<Vec<i128>> {
    gram_i128(f)
        .into_iter()
        .map(|row| row.into_iter().map(|x| 2 * x).collect())
        .collect()
}

fn restriction(f: &FlowLattice, eps: &[i64]) -> Vec<i64> {
    f.lattice()
        .columns()
        .iter()
        .map(|col| col.iter().zip(eps).map(|(&c, &s)| c * s).sum())
        .collect()
}

fn inverse_gram(g: &[Vec<i128>]) -> Vec<Vec<Ratio<i128>>> {
    let n = g.len();
    (0..n)
        .map(|j| {
            let mut e = vec![0i128; n];
            e[j] = 1;
            rational_solve(g, &e)
        })
        .collect()
}

fn self_pairing(ginv: &[Vec<Ratio<i128>>], t: &[i64]) -> Ratio<i128> {
    let n = t.len();
    let mut q = Ratio::zero();
    for i in 0..n {
        for j in 0..n {
            q += ginv[j][i] * Ratio::from_integer(t[i] as i128 * t[j] as i128);
        }
    }
    q
}

/// Self-pairing of a characteristic element under the dual form of the
/// flow lattice.
pub fn characteristic_self_pairing(f: &FlowLattice, chi: &CharCoset) -> Ratio<i128> {
    if f.rank() == 0 {
        return Ratio::zero();
    }
    let g = gram_i128(f);
    self_pairing(&inverse_gram(&g), &chi.dual_coords)
}

/// The characteristic element obtained by restricting an orientation class
/// to the flow lattice's dual.
pub fn characteristic_from_orientation(f: &FlowLattice, o: &EdgeOrientation) -> CharCoset {
    let eps: Vec<i64> = (0..f.edge_count())
        .map(|e| if o.is_forward(e) == f.orientation().is_forward(e) { 1 } else { -1 })
        .collect();
    let dual_coords = restriction(f, &eps);
    let labeler = CosetLabeler::new(&doubled_gram(f));
    let t128: Vec<i128> = dual_coords.iter().map(|&x| x as i128).collect();
    let label = labeler.label(&t128);
    CharCoset { edge_vector: eps, dual_coords, label }
}

/// Enumerates all orientations, restricts each to the flow dual, groups
/// the restrictions by coset modulo 2·Flow(G), and keeps the elements of
/// minimum self-pairing per coset.
pub fn short_characteristic_elements(
    f: &FlowLattice,
) -> Result<BTreeMap<Vec<i64>, Vec<ShortElement>>, FlowError> {
    let m = f.edge_count();
    if m > ORIENTATION_CAP {
        return Err(FlowError::BoundTooLarge(format!(
            "orientation enumeration supports at most {ORIENTATION_CAP} edges, got {m}"
        )));
    }
    let g = gram_i128(f);
    let ginv = inverse_gram(&g);
    let labeler = CosetLabeler::new(&doubled_gram(f));
    let mut out: BTreeMap<Vec<i64>, (Ratio<i128>, Vec<ShortElement>)> = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let forward: Vec<bool> = (0..m)
            .map(|e| f.orientation().is_forward(e) == ((mask >> e) & 1 == 0))
            .collect();
        let eps: Vec<i64> =
            (0..m).map(|e| if (mask >> e) & 1 == 0 { 1 } else { -1 }).collect();
        let dual_coords = restriction(f, &eps);
        let t128: Vec<i128> = dual_coords.iter().map(|&x| x as i128).collect();
        let label = labeler.label(&t128);
        let q = self_pairing(&ginv, &dual_coords);
        let element = || ShortElement {
            chi: CharCoset {
                edge_vector: eps.clone(),
                dual_coords: dual_coords.clone(),
                label: label.clone(),
            },
            self_pairing: q,
            orientation: EdgeOrientation::new(forward.clone()),
        };
        match out.get_mut(&label) {
            None => {
                out.insert(label.clone(), (q, vec![element()]));
            }
            Some((best, elems)) => {
                if q < *best {
                    *best = q;
                    elems.clear();
                    elems.push(element());
                } else if q == *best
                    && !elems.iter().any(|s| s.chi.dual_coords == dual_coords)
                {
                    elems.push(element());
                }
            }
        }
    }
    if out.len() as i128 != f.determinant() {
        return Err(FlowError::Invalid(format!(
            "found {} characteristic cosets, expected the determinant {}",
            out.len(),
            f.determinant()
        )));
    }
    Ok(out.into_iter().map(|(label, (_, elems))| (label, elems)).collect())
}

/// True iff the given short element is alone in its coset. Decided by
/// direct enumeration and certified, when unique, by an acyclic
/// orientation restricting to it.
pub fn unique_short_in_coset(
    f: &FlowLattice,
    chi: &CharCoset,
) -> Result<(bool, Option<EdgeOrientation>), FlowError> {
    let shorts = short_characteristic_elements(f)?;
    let Some(elems) = shorts.get(&chi.label) else {
        return Err(FlowError::Invalid("unknown coset label".into()));
    };
    if !elems.iter().any(|s| s.chi.dual_coords == chi.dual_coords) {
        return Err(FlowError::Invalid(
            "the element is not short in its coset".into(),
        ));
    }
    let unique = elems.len() == 1;
    let m = f.edge_count();
    let mut witness = None;
    for mask in 0u64..(1u64 << m) {
        let forward: Vec<bool> = (0..m)
            .map(|e| f.orientation().is_forward(e) == ((mask >> e) & 1 == 0))
            .collect();
        let o = EdgeOrientation::new(forward);
        if !is_acyclic_orientation(f.graph(), &o) {
            continue;
        }
        let eps: Vec<i64> =
            (0..m).map(|e| if (mask >> e) & 1 == 0 { 1 } else { -1 }).collect();
        if restriction(f, &eps) == chi.dual_coords {
            witness = Some(o);
            break;
        }
    }
    debug_assert_eq!(unique, witness.is_some());
    Ok((unique, witness))
}
