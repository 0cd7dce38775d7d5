use crate::decompose::{
    compose_full, decompose, find_4cycles, is_decomposing_cycle, Composition, CycleCheck,
    DecomposingCycle, Factor,
};
use crate::PlanarError;
use graph_core::{blocks, restrict_to_edges, EdgeEnd, EdgeId, PlanarMultigraph, VertexId};
use serde_json::{json, Value};

/// Certificate that a block lies in the composition closure of the
/// singleton and the edge graph: a binary tree of composition moves with
/// enough data for bit-exact replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionCertificate {
    Singleton,
    Edge,
    Composition {
        cycle: DecomposingCycle,
        /// Distinguished edge in the first factor (image of e1).
        f1: EdgeId,
        /// Distinguished edge in the second factor (image of e3).
        f2: EdgeId,
        reflect: [bool; 2],
        left: Box<DecompositionCertificate>,
        right: Box<DecompositionCertificate>,
    },
}

impl DecompositionCertificate {
    /// Total edge count of the certified graph: every composition node
    /// adds the two cycle edges that survive neither factor.
    pub fn edge_total(&self) -> usize {
        match self {
            DecompositionCertificate::Singleton => 0,
            DecompositionCertificate::Edge => 1,
            DecompositionCertificate::Composition { left, right, .. } => {
                left.edge_total() + right.edge_total() + 2
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionCertificate::Singleton | DecompositionCertificate::Edge => 1,
            DecompositionCertificate::Composition { left, right, .. } => {
                left.leaf_count() + right.leaf_count()
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            DecompositionCertificate::Singleton => json!({ "leaf": "singleton" }),
            DecompositionCertificate::Edge => json!({ "leaf": "edge" }),
            DecompositionCertificate::Composition { cycle, f1, f2, reflect, left, right } => {
                json!({
                    "cycle": {
                        "vertices": cycle.vertices,
                        "edges": cycle.edges,
                        "side1": cycle.side1,
                        "side2": cycle.side2,
                    },
                    "f1": f1,
                    "f2": f2,
                    "reflect": reflect,
                    "left": left.to_json(),
                    "right": right.to_json(),
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// A block with at least one cycle but no 4-cycle.
    NoFourCycle,
    NonDecomposing { cycle_edges: [EdgeId; 4], vertex: VertexId },
}

/// Why classification failed, pinned to the derived graph it failed on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureWitness {
    pub edge_count: usize,
    pub reason: FailureReason,
}

/// Classifies every block of the graph, returning one certificate per
/// block or the first failure.
pub fn classify_g(
    g: &PlanarMultigraph,
) -> Result<Vec<DecompositionCertificate>, FailureWitness> {
    let mut out = Vec::new();
    for b in blocks(g) {
        if b.edges.is_empty() {
            out.push(DecompositionCertificate::Singleton);
        } else if b.trivial {
            out.push(DecompositionCertificate::Edge);
        } else {
            let sub = restrict_to_edges(g, &b.edges);
            out.push(classify_block(&sub.graph)?);
        }
    }
    Ok(out)
}

fn classify_block(h: &PlanarMultigraph) -> Result<DecompositionCertificate, FailureWitness> {
    if h.edge_count() == 0 {
        return Ok(DecompositionCertificate::Singleton);
    }
    if h.edge_count() == 1 && !h.is_loop(0) {
        return Ok(DecompositionCertificate::Edge);
    }
    let candidates = find_4cycles(h);
    let Some(c) = candidates.into_iter().min_by(|a, b| a.edges.cmp(&b.edges)) else {
        return Err(FailureWitness {
            edge_count: h.edge_count(),
            reason: FailureReason::NoFourCycle,
        });
    };
    let d = match is_decomposing_cycle(h, &c) {
        CycleCheck::Decomposing(d) => d,
        CycleCheck::NotDecomposing { vertex } => {
            let mut cycle_edges = [0; 4];
            cycle_edges.copy_from_slice(&c.edges);
            return Err(FailureWitness {
                edge_count: h.edge_count(),
                reason: FailureReason::NonDecomposing { cycle_edges, vertex },
            });
        }
    };
    let (fa, fb) = decompose(h, &d);
    let left = classify_block(&fa.graph)?;
    let right = classify_block(&fb.graph)?;
    let reflect = reflection_flags(h, &d, &fa, &fb);
    Ok(DecompositionCertificate::Composition {
        cycle: d,
        f1: fa.distinguished,
        f2: fb.distinguished,
        reflect,
        left: Box::new(left),
        right: Box::new(right),
    })
}

/// Finds the reflection pair under which composing the two factors
/// reproduces the decomposed graph as an embedded map (allowing a global
/// mirror).
fn reflection_flags(
    h: &PlanarMultigraph,
    d: &DecomposingCycle,
    fa: &Factor,
    fb: &Factor,
) -> [bool; 2] {
    for r1 in [false, true] {
        for r2 in [false, true] {
            if let Ok(comp) =
                compose_full(&fa.graph, fa.distinguished, &fb.graph, fb.distinguished, r1, r2)
            {
                if matches_input(h, d, fa, fb, &comp) {
                    return [r1, r2];
                }
            }
        }
    }
    unreachable!("a decomposition recomposes under some reflection pair");
}

/// Checks that the composed graph equals `h` under the known vertex and
/// edge correspondence, up to a rotation shift at every vertex and an
/// optional global mirror.
fn matches_input(
    h: &PlanarMultigraph,
    d: &DecomposingCycle,
    fa: &Factor,
    fb: &Factor,
    comp: &Composition,
) -> bool {
    let Some(r) = pull_back(h, d, fa, fb, comp) else {
        return false;
    };
    for mirror in [false, true] {
        let ok = (0..h.vertex_count()).all(|v| {
            let mut want: Vec<EdgeEnd> = h.rotation(v).to_vec();
            if mirror {
                want.reverse();
            }
            cyclic_eq(&want, r.rotation(v))
        });
        if ok {
            return true;
        }
    }
    false
}

/// Relabels a composition back into the id space of the graph it was
/// decomposed from, using the factor translation tables. Returns `None`
/// when the composition does not correspond to `h` edge for edge.
fn pull_back(
    h: &PlanarMultigraph,
    d: &DecomposingCycle,
    fa: &Factor,
    fb: &Factor,
    comp: &Composition,
) -> Option<PlanarMultigraph> {
    let g = &comp.graph;
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut vmap = vec![usize::MAX; h.vertex_count()];
    for v in 0..h.vertex_count() {
        if let Some(x) = fa.vertex_map[v] {
            vmap[v] = x;
        } else if let Some(x) = fb.vertex_map[v] {
            vmap[v] = x + comp.vertex_offset2;
        } else {
            return None;
        }
    }
    let mut inv_v = vec![usize::MAX; g.vertex_count()];
    for (v, &x) in vmap.iter().enumerate() {
        if inv_v[x] != usize::MAX {
            return None;
        }
        inv_v[x] = v;
    }
    // h edge -> (composed edge, endpoint order flipped)
    let mut emap: Vec<(EdgeId, bool)> = vec![(usize::MAX, false); h.edge_count()];
    for e in 0..h.edge_count() {
        if let Some(i) = d.edges.iter().position(|&ce| ce == e) {
            let want = (d.vertices[i], d.vertices[(i + 1) % 4]);
            emap[e] = (comp.cycle_edges[i], h.endpoints(e) != want);
        } else if let Some(ne) = fa.edge_map[e] {
            emap[e] = (comp.edge_map1[ne]?, false);
        } else if let Some(ne) = fb.edge_map[e] {
            emap[e] = (comp.edge_map2[ne]?, false);
        } else {
            return None;
        }
    }
    let mut inv_e: Vec<(EdgeId, bool)> = vec![(usize::MAX, false); g.edge_count()];
    for (e, &(ne, flip)) in emap.iter().enumerate() {
        if inv_e[ne].0 != usize::MAX {
            return None;
        }
        inv_e[ne] = (e, flip);
    }
    let edges: Vec<(VertexId, VertexId)> = (0..h.edge_count())
        .map(|e| {
            let (ne, flip) = emap[e];
            let (u, v) = g.endpoints(ne);
            let (u, v) = (inv_v[u], inv_v[v]);
            if flip {
                (v, u)
            } else {
                (u, v)
            }
        })
        .collect();
    let rotations: Vec<Vec<EdgeEnd>> = (0..h.vertex_count())
        .map(|v| {
            g.rotation(vmap[v])
                .iter()
                .map(|end| {
                    let (oe, flip) = inv_e[end.edge];
                    EdgeEnd::new(oe, if flip { 1 - end.which } else { end.which })
                })
                .collect()
        })
        .collect();
    PlanarMultigraph::build(h.vertex_count(), edges, rotations).ok()
}

fn cyclic_eq(a: &[EdgeEnd], b: &[EdgeEnd]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]))
}

/// Replays a certificate against the graph it was issued for, rebuilding
/// the graph bottom-up from its factors. The result carries the vertex
/// and edge ids of the input so nested replays stay aligned. Errors when
/// the certificate does not fit the graph.
pub fn recompose(
    g: &PlanarMultigraph,
    cert: &DecompositionCertificate,
) -> Result<PlanarMultigraph, PlanarError> {
    match cert {
        DecompositionCertificate::Singleton => {
            if g.edge_count() != 0 || g.vertex_count() != 1 {
                return Err(PlanarError::Invalid("certificate leaf mismatch".into()));
            }
            Ok(g.clone())
        }
        DecompositionCertificate::Edge => {
            if g.edge_count() != 1 || g.is_loop(0) {
                return Err(PlanarError::Invalid("certificate leaf mismatch".into()));
            }
            Ok(g.clone())
        }
        DecompositionCertificate::Composition { cycle, f1, f2, reflect, left, right } => {
            let (fa, fb) = decompose(g, cycle);
            if fa.distinguished != *f1 || fb.distinguished != *f2 {
                return Err(PlanarError::Invalid(
                    "certificate distinguished edges do not match the replayed factors".into(),
                ));
            }
            let left_g = recompose(&fa.graph, left)?;
            let right_g = recompose(&fb.graph, right)?;
            let comp = compose_full(&left_g, *f1, &right_g, *f2, reflect[0], reflect[1])?;
            pull_back(g, cycle, &fa, &fb, &comp).ok_or_else(|| {
                PlanarError::Invalid(
                    "the replayed composition does not correspond to the graph".into(),
                )
            })
        }
    }
}
