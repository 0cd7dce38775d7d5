use crate::{EdgeEnd, EdgeId, GraphError, PlanarMultigraph, VertexId};

/// Result of an edge surgery, carrying the id translations back into the
/// original graph.
pub struct Surgered {
    pub graph: PlanarMultigraph,
    /// old edge id -> new edge id, `None` for removed edges.
    pub edge_map: Vec<Option<EdgeId>>,
    /// old vertex id -> new vertex id, `None` for removed vertices.
    pub vertex_map: Vec<Option<VertexId>>,
}

/// Removes the listed edges, keeping every vertex.
pub fn delete_edges(g: &PlanarMultigraph, remove: &[EdgeId]) -> Surgered {
    let mut drop = vec![false; g.edge_count()];
    for &e in remove {
        drop[e] = true;
    }
    let keep: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !drop[e]).collect();
    rebuild(g, &keep, &(0..g.vertex_count()).collect::<Vec<_>>())
}

/// Keeps only the listed edges and the vertices incident to them.
pub fn restrict_to_edges(g: &PlanarMultigraph, keep: &[EdgeId]) -> Surgered {
    let mut keep_edge = vec![false; g.edge_count()];
    for &e in keep {
        keep_edge[e] = true;
    }
    let kept_edges: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| keep_edge[e]).collect();
    let mut keep_vertex = vec![false; g.vertex_count()];
    for &e in &kept_edges {
        let (u, v) = g.endpoints(e);
        keep_vertex[u] = true;
        keep_vertex[v] = true;
    }
    let kept_vertices: Vec<VertexId> =
        (0..g.vertex_count()).filter(|&v| keep_vertex[v]).collect();
    rebuild(g, &kept_edges, &kept_vertices)
}

fn rebuild(g: &PlanarMultigraph, kept_edges: &[EdgeId], kept_vertices: &[VertexId]) -> Surgered {
    let mut edge_map = vec![None; g.edge_count()];
    for (new, &old) in kept_edges.iter().enumerate() {
        edge_map[old] = Some(new);
    }
    let mut vertex_map = vec![None; g.vertex_count()];
    for (new, &old) in kept_vertices.iter().enumerate() {
        vertex_map[old] = Some(new);
    }
    let edges: Vec<(VertexId, VertexId)> = kept_edges
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (vertex_map[u].unwrap(), vertex_map[v].unwrap())
        })
        .collect();
    let rotations: Vec<Vec<EdgeEnd>> = kept_vertices
        .iter()
        .map(|&v| {
            g.rotation(v)
                .iter()
                .filter_map(|end| {
                    edge_map[end.edge].map(|ne| EdgeEnd::new(ne, end.which))
                })
                .collect()
        })
        .collect();
    let graph = PlanarMultigraph::build(kept_vertices.len(), edges, rotations)
        .expect("edge removal preserves a spherical embedding");
    Surgered { graph, edge_map, vertex_map }
}

/// Contracts a non-loop edge, merging its endpoints. Parallel edges become
/// loops. The rotations at the two endpoints are spliced at the contracted
/// edge so the embedding stays spherical.
pub fn contract_edge(g: &PlanarMultigraph, e: EdgeId) -> Result<Surgered, GraphError> {
    let (u, w) = g.endpoints(e);
    if u == w {
        return Err(GraphError::MalformedRotation(format!(
            "cannot contract loop edge {e}"
        )));
    }
    // The merged vertex keeps u's id slot; w disappears.
    let rot_u = g.rotation(u);
    let rot_w = g.rotation(w);
    let pu = rot_u.iter().position(|end| end.edge == e).unwrap();
    let pw = rot_w.iter().position(|end| end.edge == e).unwrap();
    let mut merged: Vec<EdgeEnd> = Vec::with_capacity(rot_u.len() + rot_w.len() - 2);
    for i in 1..rot_u.len() {
        merged.push(rot_u[(pu + i) % rot_u.len()]);
    }
    for i in 1..rot_w.len() {
        merged.push(rot_w[(pw + i) % rot_w.len()]);
    }

    let mut edge_map = vec![None; g.edge_count()];
    let mut next = 0;
    for old in 0..g.edge_count() {
        if old != e {
            edge_map[old] = Some(next);
            next += 1;
        }
    }
    let mut vertex_map = vec![None; g.vertex_count()];
    let mut nv = 0;
    for old in 0..g.vertex_count() {
        if old != w {
            vertex_map[old] = Some(nv);
            nv += 1;
        }
    }
    vertex_map[w] = vertex_map[u];

    let edges: Vec<(VertexId, VertexId)> = (0..g.edge_count())
        .filter(|&old| old != e)
        .map(|old| {
            let (a, b) = g.endpoints(old);
            (vertex_map[a].unwrap(), vertex_map[b].unwrap())
        })
        .collect();
    let remap = |rot: &[EdgeEnd]| -> Vec<EdgeEnd> {
        rot.iter()
            .filter_map(|end| edge_map[end.edge].map(|ne| EdgeEnd::new(ne, end.which)))
            .collect()
    };
    let mut rotations: Vec<Vec<EdgeEnd>> = Vec::with_capacity(nv);
    for old in 0..g.vertex_count() {
        if old == w {
            continue;
        }
        if old == u {
            rotations.push(remap(&merged));
        } else {
            rotations.push(remap(g.rotation(old)));
        }
    }
    let graph = PlanarMultigraph::build(nv, edges, rotations)?;
    Ok(Surgered { graph, edge_map, vertex_map })
}
