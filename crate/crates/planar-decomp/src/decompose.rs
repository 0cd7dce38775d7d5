use crate::PlanarError;
use graph_core::{enumerate_cycles, Cycle, EdgeEnd, EdgeId, PlanarMultigraph, VertexId};
use std::collections::HashSet;

/// A 4-cycle whose four vertices split the rest of the graph between the
/// two regions it bounds: all non-cycle edge-ends at `vertices[0]` and
/// `vertices[2]` fall in the first region, all at `vertices[1]` and
/// `vertices[3]` in the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposingCycle {
    /// v1..v4 in cyclic order.
    pub vertices: [VertexId; 4],
    /// e1..e4 in cyclic order; `edges[i]` joins `vertices[i]` and
    /// `vertices[(i + 1) % 4]`.
    pub edges: [EdgeId; 4],
    /// Non-cycle edges in the region carrying the extra ends of v1, v3.
    pub side1: Vec<EdgeId>,
    /// Non-cycle edges in the other region.
    pub side2: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleCheck {
    Decomposing(DecomposingCycle),
    /// A cycle vertex with non-cycle ends in a region its position forbids
    /// under every labeling.
    NotDecomposing { vertex: VertexId },
}

/// All cycles of length exactly 4. Loops and parallel-edge 2-cycles are
/// never 4-cycles.
pub fn find_4cycles(g: &PlanarMultigraph) -> Vec<Cycle> {
    enumerate_cycles(g, Some(4)).into_iter().filter(|c| c.len() == 4).collect()
}

/// Walks a 4-cycle to recover its vertices and edges in cyclic order,
/// starting from the lowest edge id.
fn cyclic_order(g: &PlanarMultigraph, c: &Cycle) -> ([VertexId; 4], [EdgeId; 4]) {
    debug_assert_eq!(c.len(), 4);
    let mut verts = [0usize; 4];
    let mut edges = [0usize; 4];
    edges[0] = c.edges[0];
    let (a, b) = g.endpoints(edges[0]);
    verts[0] = a;
    verts[1] = b;
    for i in 1..4 {
        let prev = edges[i - 1];
        let v = verts[i];
        edges[i] = *c
            .edges
            .iter()
            .find(|&&e| e != prev && {
                let (p, q) = g.endpoints(e);
                p == v || q == v
            })
            .expect("a 4-cycle has two cycle edges at each vertex");
        if i < 3 {
            let (p, q) = g.endpoints(edges[i]);
            verts[i + 1] = if p == v { q } else { p };
        }
    }
    (verts, edges)
}

pub fn is_decomposing_cycle(g: &PlanarMultigraph, c: &Cycle) -> CycleCheck {
    let (verts, edges) = cyclic_order(g, c);
    let cycle_set: HashSet<EdgeId> = edges.iter().copied().collect();
    let (faces_a, faces_b) =
        g.cycle_regions(&c.edges).expect("a cycle separates its component's sphere");
    let in_a: HashSet<usize> = faces_a.iter().copied().collect();
    let in_b: HashSet<usize> = faces_b.iter().copied().collect();
    // 0 = region A, 1 = region B, None for edges of other components.
    let side_of = |e: EdgeId| -> Option<usize> {
        let (f, _) = g.faces_of_edge(e);
        if in_a.contains(&f) {
            Some(0)
        } else if in_b.contains(&f) {
            Some(1)
        } else {
            None
        }
    };
    // Which regions carry non-cycle ends at each cycle vertex.
    let mut touches = [[false; 2]; 4];
    for (i, &v) in verts.iter().enumerate() {
        for end in g.rotation(v) {
            if cycle_set.contains(&end.edge) {
                continue;
            }
            if let Some(s) = side_of(end.edge) {
                touches[i][s] = true;
            }
        }
    }
    for (i, t) in touches.iter().enumerate() {
        if t[0] && t[1] {
            return CycleCheck::NotDecomposing { vertex: verts[i] };
        }
    }
    // Try both cyclic labelings and both region namings: positions of v1,
    // v3 may only touch region R1, positions of v2, v4 only R2.
    for shift in 0..2usize {
        for r1 in 0..2usize {
            let ok = (0..4).all(|i| {
                let pos = (i + shift) % 4;
                let allowed = if i % 2 == 0 { r1 } else { 1 - r1 };
                !touches[pos][1 - allowed]
            });
            if !ok {
                continue;
            }
            let vertices = [
                verts[shift % 4],
                verts[(1 + shift) % 4],
                verts[(2 + shift) % 4],
                verts[(3 + shift) % 4],
            ];
            let cyc_edges = [
                edges[shift % 4],
                edges[(1 + shift) % 4],
                edges[(2 + shift) % 4],
                edges[(3 + shift) % 4],
            ];
            let mut side1 = Vec::new();
            let mut side2 = Vec::new();
            for e in 0..g.edge_count() {
                if cycle_set.contains(&e) {
                    continue;
                }
                match side_of(e) {
                    Some(s) if s == r1 => side1.push(e),
                    Some(_) => side2.push(e),
                    None => {}
                }
            }
            return CycleCheck::Decomposing(DecomposingCycle {
                vertices,
                edges: cyc_edges,
                side1,
                side2,
            });
        }
    }
    // Every single vertex is single-sided but the opposite pairs clash:
    // report a vertex whose side conflicts with its pair partner.
    for i in 0..4 {
        for s in 0..2 {
            if touches[i][s] && touches[(i + 1) % 4][s] {
                return CycleCheck::NotDecomposing { vertex: verts[(i + 1) % 4] };
            }
        }
    }
    let bad = (0..4).find(|&i| touches[i][0] && touches[(i + 2) % 4][1]).unwrap_or(0);
    CycleCheck::NotDecomposing { vertex: verts[(bad + 2) % 4] }
}

/// One factor of a decomposition, with id translations back into the
/// decomposed graph.
pub struct Factor {
    pub graph: PlanarMultigraph,
    /// Image of the contracted cycle path inside the factor.
    pub distinguished: EdgeId,
    /// Old edge id -> factor edge id; `None` for edges outside the factor.
    pub edge_map: Vec<Option<EdgeId>>,
    /// Old vertex id -> factor vertex id; the absorbed cycle vertices map
    /// to `None`.
    pub vertex_map: Vec<Option<VertexId>>,
}

/// Splits the graph along a decomposing cycle. The first factor keeps the
/// side-1 edges plus the image of e1 joining v1 to the merged v2/v3
/// vertex; the second keeps side 2 plus the image of e3 joining the
/// merged vertex to v4.
pub fn decompose(g: &PlanarMultigraph, d: &DecomposingCycle) -> (Factor, Factor) {
    let [v1, v2, v3, v4] = d.vertices;
    let [e1, e2, e3, _e4] = d.edges;
    let f1 = build_factor(g, &d.side1, e1, e2, v2, v3, 1);
    let f2 = build_factor(g, &d.side2, e3, e2, v3, v2, 0);
    debug_assert_eq!(f1.vertex_map[v4], None);
    debug_assert_eq!(f2.vertex_map[v1], None);
    (f1, f2)
}

/// Common construction for both factors: keep `side` plus `kept_cycle`
/// (whose endpoint `absorbed` is rerouted to `merge_into`) and substitute
/// `kept_cycle`'s absorbed end into `merge_into`'s rotation at the slot
/// of `contracted`; the remaining cycle edges are filtered out. The kept
/// edge's endpoints are ordered so its absorbed end sits at position
/// `absorbed_goal`, matching the slot conventions of `compose_full`.
fn build_factor(
    g: &PlanarMultigraph,
    side: &[EdgeId],
    kept_cycle: EdgeId,
    contracted: EdgeId,
    absorbed: VertexId,
    merge_into: VertexId,
    absorbed_goal: u8,
) -> Factor {
    let mut keep_edge = vec![false; g.edge_count()];
    for &e in side {
        keep_edge[e] = true;
    }
    keep_edge[kept_cycle] = true;
    let kept_edges: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| keep_edge[e]).collect();
    let mut keep_vertex = vec![false; g.vertex_count()];
    for &e in side {
        let (u, v) = g.endpoints(e);
        keep_vertex[u] = true;
        keep_vertex[v] = true;
    }
    let (p, q) = g.endpoints(kept_cycle);
    let far = if p == absorbed { q } else { p };
    keep_vertex[far] = true;
    keep_vertex[merge_into] = true;
    keep_vertex[absorbed] = false;
    let kept_vertices: Vec<VertexId> =
        (0..g.vertex_count()).filter(|&v| keep_vertex[v]).collect();

    let mut edge_map = vec![None; g.edge_count()];
    for (new, &old) in kept_edges.iter().enumerate() {
        edge_map[old] = Some(new);
    }
    let mut vertex_map = vec![None; g.vertex_count()];
    for (new, &old) in kept_vertices.iter().enumerate() {
        vertex_map[old] = Some(new);
    }
    let map_end = |v: VertexId| {
        if v == absorbed {
            vertex_map[merge_into].unwrap()
        } else {
            vertex_map[v].unwrap()
        }
    };
    let absorbed_which: u8 = if g.endpoints(kept_cycle).0 == absorbed { 0 } else { 1 };
    let flip_kept = absorbed_which != absorbed_goal;
    let edges: Vec<(VertexId, VertexId)> = kept_edges
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            if e == kept_cycle {
                let (a, b) = (map_end(u), map_end(v));
                if flip_kept {
                    (b, a)
                } else {
                    (a, b)
                }
            } else {
                (vertex_map[u].unwrap(), vertex_map[v].unwrap())
            }
        })
        .collect();
    let kept_cycle_new = edge_map[kept_cycle].unwrap();
    let rotations: Vec<Vec<EdgeEnd>> = kept_vertices
        .iter()
        .map(|&v| {
            g.rotation(v)
                .iter()
                .filter_map(|end| {
                    if v == merge_into && end.edge == contracted {
                        Some(EdgeEnd::new(kept_cycle_new, absorbed_goal))
                    } else if end.edge == kept_cycle && flip_kept {
                        Some(EdgeEnd::new(kept_cycle_new, 1 - end.which))
                    } else {
                        edge_map[end.edge].map(|ne| EdgeEnd::new(ne, end.which))
                    }
                })
                .collect()
        })
        .collect();
    let graph = PlanarMultigraph::build(kept_vertices.len(), edges, rotations)
        .expect("a factor of a decomposing cycle stays spherical");
    Factor { graph, distinguished: kept_cycle_new, edge_map, vertex_map }
}

/// A composition together with the id translations from its factors.
pub struct Composition {
    pub graph: PlanarMultigraph,
    /// g1 edge -> composed edge; `None` for f1.
    pub edge_map1: Vec<Option<EdgeId>>,
    /// g2 edge -> composed edge; `None` for f2.
    pub edge_map2: Vec<Option<EdgeId>>,
    /// g1 vertices keep their ids; g2 vertices are offset.
    pub vertex_offset2: usize,
    /// The four new cycle edges e1..e4 in cyclic order.
    pub cycle_edges: [EdgeId; 4],
    /// v1, v2, v3, v4 in the composed graph.
    pub cycle_vertices: [VertexId; 4],
}

/// Replaces the distinguished edges f1 = (v1, v3) and f2 = (v2, v4) by a
/// 4-cycle on (v1, v2, v3, v4). The reflection flags mirror the embedding
/// of the corresponding factor before splicing; together they realize the
/// drawings the composition depends on.
pub fn compose_full(
    g1: &PlanarMultigraph,
    f1: EdgeId,
    g2: &PlanarMultigraph,
    f2: EdgeId,
    reflect1: bool,
    reflect2: bool,
) -> Result<Composition, PlanarError> {
    if g1.is_loop(f1) {
        return Err(PlanarError::LoopDistinguished(f1));
    }
    if g2.is_loop(f2) {
        return Err(PlanarError::LoopDistinguished(f2));
    }
    let n1 = g1.vertex_count();
    let m1 = g1.edge_count() - 1;
    let m2 = g2.edge_count() - 1;
    let base = m1 + m2;
    let mut edge_map1 = vec![None; g1.edge_count()];
    let mut next = 0;
    for e in 0..g1.edge_count() {
        if e != f1 {
            edge_map1[e] = Some(next);
            next += 1;
        }
    }
    let mut edge_map2 = vec![None; g2.edge_count()];
    for e in 0..g2.edge_count() {
        if e != f2 {
            edge_map2[e] = Some(next);
            next += 1;
        }
    }
    let (v1, v3) = g1.endpoints(f1);
    let (p2, p4) = g2.endpoints(f2);
    let (v2, v4) = (p2 + n1, p4 + n1);
    let cycle_edges = [base, base + 1, base + 2, base + 3];
    let cycle_vertices = [v1, v2, v3, v4];

    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(base + 4);
    for e in 0..g1.edge_count() {
        if e != f1 {
            edges.push(g1.endpoints(e));
        }
    }
    for e in 0..g2.edge_count() {
        if e != f2 {
            let (u, v) = g2.endpoints(e);
            edges.push((u + n1, v + n1));
        }
    }
    edges.push((v1, v2));
    edges.push((v2, v3));
    edges.push((v3, v4));
    edges.push((v4, v1));

    let [e1, e2, e3, e4] = cycle_edges;
    let splice1 = |which: u8| -> [EdgeEnd; 2] {
        if which == 0 {
            [EdgeEnd::new(e1, 0), EdgeEnd::new(e4, 1)]
        } else {
            [EdgeEnd::new(e3, 0), EdgeEnd::new(e2, 1)]
        }
    };
    let splice2 = |which: u8| -> [EdgeEnd; 2] {
        if which == 0 {
            [EdgeEnd::new(e1, 1), EdgeEnd::new(e2, 0)]
        } else {
            [EdgeEnd::new(e3, 1), EdgeEnd::new(e4, 0)]
        }
    };
    let mut rotations: Vec<Vec<EdgeEnd>> = Vec::with_capacity(n1 + g2.vertex_count());
    for v in 0..n1 {
        let mut rot: Vec<EdgeEnd> = g1.rotation(v).to_vec();
        if reflect1 {
            rot.reverse();
        }
        let mut out = Vec::with_capacity(rot.len() + 1);
        for end in rot {
            if end.edge == f1 {
                out.extend(splice1(end.which));
            } else {
                out.push(EdgeEnd::new(edge_map1[end.edge].unwrap(), end.which));
            }
        }
        rotations.push(out);
    }
    for v in 0..g2.vertex_count() {
        let mut rot: Vec<EdgeEnd> = g2.rotation(v).to_vec();
        if reflect2 {
            rot.reverse();
        }
        let mut out = Vec::with_capacity(rot.len() + 1);
        for end in rot {
            if end.edge == f2 {
                out.extend(splice2(end.which));
            } else {
                out.push(EdgeEnd::new(edge_map2[end.edge].unwrap(), end.which));
            }
        }
        rotations.push(out);
    }
    let graph = PlanarMultigraph::build(n1 + g2.vertex_count(), edges, rotations)?;
    Ok(Composition {
        graph,
        edge_map1,
        edge_map2,
        vertex_offset2: n1,
        cycle_edges,
        cycle_vertices,
    })
}

pub fn compose(
    g1: &PlanarMultigraph,
    f1: EdgeId,
    g2: &PlanarMultigraph,
    f2: EdgeId,
    reflect1: bool,
    reflect2: bool,
) -> Result<PlanarMultigraph, PlanarError> {
    compose_full(g1, f1, g2, f2, reflect1, reflect2).map(|c| c.graph)
}
