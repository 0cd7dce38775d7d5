use crate::classify::classify_g;
use crate::decompose::{compose, decompose, find_4cycles, is_decomposing_cycle, CycleCheck};
use crate::PlanarError;
use graph_core::{canonical_form, CanonicalForm, EdgeEnd, PlanarMultigraph};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

pub const ENUM_EDGE_CAP: usize = 16;

fn singleton_graph() -> PlanarMultigraph {
    PlanarMultigraph::build(1, Vec::new(), vec![Vec::new()]).unwrap()
}

fn edge_graph() -> PlanarMultigraph {
    PlanarMultigraph::build(
        2,
        vec![(0, 1)],
        vec![vec![EdgeEnd::new(0, 0)], vec![EdgeEnd::new(0, 1)]],
    )
    .unwrap()
}

/// All members of the composition closure with at most `max_edges` edges,
/// up to abstract multigraph isomorphism, ordered by edge count.
pub fn enumerate_g(max_edges: usize) -> Result<Vec<PlanarMultigraph>, PlanarError> {
    if max_edges > ENUM_EDGE_CAP {
        return Err(PlanarError::BoundTooLarge(format!(
            "enumeration limited to {ENUM_EDGE_CAP} edges, requested {max_edges}"
        )));
    }
    let mut by_edges: BTreeMap<usize, Vec<PlanarMultigraph>> = BTreeMap::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let push = |by_edges: &mut BTreeMap<usize, Vec<PlanarMultigraph>>,
                    seen: &mut HashSet<CanonicalForm>,
                    g: PlanarMultigraph| {
        if seen.insert(canonical_form(&g)) {
            by_edges.entry(g.edge_count()).or_default().push(g);
        }
    };
    push(&mut by_edges, &mut seen, singleton_graph());
    if max_edges >= 1 {
        push(&mut by_edges, &mut seen, edge_graph());
    }
    for total in 4..=max_edges {
        for ea in 1..=total.saturating_sub(3) {
            let eb = total - 2 - ea;
            if ea > eb {
                break;
            }
            let left: Vec<PlanarMultigraph> =
                by_edges.get(&ea).cloned().unwrap_or_default();
            let right: Vec<PlanarMultigraph> =
                by_edges.get(&eb).cloned().unwrap_or_default();
            for ga in &left {
                for gb in &right {
                    for fa in (0..ga.edge_count()).filter(|&e| !ga.is_loop(e)) {
                        for fb in (0..gb.edge_count()).filter(|&e| !gb.is_loop(e)) {
                            for r1 in [false, true] {
                                for r2 in [false, true] {
                                    let g = compose(ga, fa, gb, fb, r1, r2)?;
                                    push(&mut by_edges, &mut seen, g);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(by_edges.into_values().flatten().collect())
}

/// Verdicts shared between calls; positives recompute their chain but
/// prune through cached negatives.
fn memo() -> &'static RwLock<HashMap<(CanonicalForm, CanonicalForm), bool>> {
    static MEMO: OnceLock<RwLock<HashMap<(CanonicalForm, CanonicalForm), bool>>> =
        OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Whether `g0` precedes `g` in the factor order: equal, or a factor of a
/// decomposition of `g` recursively. Returns the chain of intermediate
/// graphs from `g` down to `g0` on success.
pub fn preceq(
    g0: &PlanarMultigraph,
    g: &PlanarMultigraph,
) -> Result<Option<Vec<PlanarMultigraph>>, PlanarError> {
    for (name, x) in [("first", g0), ("second", g)] {
        match classify_g(x) {
            Ok(certs) if certs.len() == 1 => {}
            Ok(_) => {
                return Err(PlanarError::NotInG(format!(
                    "the {name} argument is not a single block"
                )));
            }
            Err(w) => {
                return Err(PlanarError::NotInG(format!(
                    "the {name} argument fails classification: {:?}",
                    w.reason
                )));
            }
        }
    }
    Ok(search(g0, &canonical_form(g0), g))
}

fn search(
    g0: &PlanarMultigraph,
    g0_form: &CanonicalForm,
    g: &PlanarMultigraph,
) -> Option<Vec<PlanarMultigraph>> {
    let g_form = canonical_form(g);
    if g_form == *g0_form {
        return Some(vec![g.clone()]);
    }
    let key = (g0_form.clone(), g_form);
    if let Some(&hit) = memo().read().unwrap().get(&key) {
        if !hit {
            return None;
        }
    }
    let mut found = None;
    if g.edge_count() > g0.edge_count() {
        'outer: for c in find_4cycles(g) {
            let CycleCheck::Decomposing(d) = is_decomposing_cycle(g, &c) else {
                continue;
            };
            let (fa, fb) = decompose(g, &d);
            for factor in [fa.graph, fb.graph] {
                if let Some(mut chain) = search(g0, g0_form, &factor) {
                    chain.insert(0, g.clone());
                    found = Some(chain);
                    break 'outer;
                }
            }
        }
    }
    memo().write().unwrap().entry(key).or_insert(found.is_some());
    found
}
