use crate::{EdgeId, PlanarMultigraph, VertexId};
use std::collections::BTreeSet;

/// A cycle stored as an unsigned edge set. One of the two traversal
/// orientations is recorded as a signed vector over all edges of the host
/// graph; the other is its negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub edges: Vec<EdgeId>,
    pub signs: Vec<i64>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn reversed_signs(&self) -> Vec<i64> {
        self.signs.iter().map(|s| -s).collect()
    }

    pub fn vertices(&self, g: &PlanarMultigraph) -> BTreeSet<VertexId> {
        let mut vs = BTreeSet::new();
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            vs.insert(u);
            vs.insert(v);
        }
        vs
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// All cycles of `g` with at most `max_length` edges (all cycles when
/// unbounded). A loop is a cycle of length 1; a pair of parallel edges is a
/// cycle of length 2. Each cycle appears exactly once.
pub fn enumerate_cycles(g: &PlanarMultigraph, max_length: Option<usize>) -> Vec<Cycle> {
    let cap = max_length.unwrap_or(usize::MAX);
    let m = g.edge_count();
    let mut out = Vec::new();
    if cap == 0 {
        return out;
    }
    for e in 0..m {
        if g.is_loop(e) {
            let mut signs = vec![0i64; m];
            signs[e] = 1;
            out.push(Cycle { edges: vec![e], signs });
        }
    }
    // Non-loop cycles, anchored at their minimal edge id and traversed from
    // its first endpoint so each one is produced exactly once.
    for e0 in 0..m {
        if g.is_loop(e0) {
            continue;
        }
        let (a, b) = g.endpoints(e0);
        let mut visited: BTreeSet<VertexId> = BTreeSet::new();
        visited.insert(a);
        visited.insert(b);
        let mut path: Vec<(EdgeId, VertexId, VertexId)> = vec![(e0, a, b)];
        search(g, e0, a, b, cap, &mut visited, &mut path, &mut out);
    }
    out
}

fn search(
    g: &PlanarMultigraph,
    anchor: EdgeId,
    home: VertexId,
    at: VertexId,
    cap: usize,
    visited: &mut BTreeSet<VertexId>,
    path: &mut Vec<(EdgeId, VertexId, VertexId)>,
    out: &mut Vec<Cycle>,
) {
    for &end in g.rotation(at) {
        let e = end.edge;
        if e <= anchor || g.is_loop(e) {
            continue;
        }
        if path.iter().any(|&(pe, _, _)| pe == e) {
            continue;
        }
        let w = g.end_vertex(end.other());
        if w == home {
            if path.len() + 1 <= cap {
                let m = g.edge_count();
                let mut signs = vec![0i64; m];
                let mut edges = Vec::with_capacity(path.len() + 1);
                for &(pe, pa, pb) in path.iter() {
                    signs[pe] = g.ref_sign(pe, pa, pb);
                    edges.push(pe);
                }
                signs[e] = g.ref_sign(e, at, w);
                edges.push(e);
                edges.sort_unstable();
                out.push(Cycle { edges, signs });
            }
            continue;
        }
        if visited.contains(&w) || path.len() + 1 >= cap {
            continue;
        }
        visited.insert(w);
        path.push((e, at, w));
        search(g, anchor, home, w, cap, visited, path, out);
        path.pop();
        visited.remove(&w);
    }
}
