use crate::{EdgeId, GraphError, VertexId};
use std::collections::HashMap;

/// One end of an edge: `which` is 0 or 1, matching the endpoint slot.
/// A loop contributes two distinct ends at the same vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub which: u8,
}

impl EdgeEnd {
    pub fn new(edge: EdgeId, which: u8) -> Self {
        EdgeEnd { edge, which }
    }

    pub fn other(self) -> Self {
        EdgeEnd { edge: self.edge, which: 1 - self.which }
    }
}

/// A dart traverses `edge` from endpoint `from` toward the other endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dart {
    pub edge: EdgeId,
    pub from: u8,
}

impl Dart {
    pub fn reverse(self) -> Self {
        Dart { edge: self.edge, from: 1 - self.from }
    }

    pub fn departure_end(self) -> EdgeEnd {
        EdgeEnd { edge: self.edge, which: self.from }
    }

    pub fn arrival_end(self) -> EdgeEnd {
        EdgeEnd { edge: self.edge, which: 1 - self.from }
    }
}

/// A face boundary walk. Isolated vertices get an empty walk.
#[derive(Clone, Debug)]
pub struct Face {
    pub walk: Vec<Dart>,
    /// Vertex whose "empty" face this is, for isolated vertices.
    pub isolated_vertex: Option<VertexId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }
}

/// A planar multigraph given by a rotation system on the sphere.
///
/// Each connected component is required to satisfy Euler's formula
/// V - E + F = 2 with F traced from the rotations.
#[derive(Clone, Debug)]
pub struct PlanarMultigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    rotations: Vec<Vec<EdgeEnd>>,
    faces: Vec<Face>,
    /// face index per dart, darts indexed as 2*edge + from
    dart_face: Vec<usize>,
}

pub struct SpanningForest {
    pub tree_edges: Vec<EdgeId>,
    /// (non-tree edge, edge walk of the fundamental cycle, signed vector
    /// over all edges with respect to the reference orientation)
    pub fundamental_cycles: Vec<(EdgeId, Vec<EdgeId>, Vec<i64>)>,
}

impl PlanarMultigraph {
    pub fn build(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        rotations: Vec<Vec<EdgeEnd>>,
    ) -> Result<Self, GraphError> {
        if rotations.len() != vertex_count {
            return Err(GraphError::MalformedRotation(format!(
                "{} rotations for {} vertices",
                rotations.len(),
                vertex_count
            )));
        }
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::MalformedRotation(format!(
                    "edge endpoint out of range ({u},{v})"
                )));
            }
        }
        // Each end must appear exactly once, at the vertex it is incident to.
        let mut seen: HashMap<EdgeEnd, VertexId> = HashMap::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &end in rot {
                if end.edge >= edges.len() || end.which > 1 {
                    return Err(GraphError::MalformedRotation(format!(
                        "unknown end {}.{}",
                        end.edge, end.which
                    )));
                }
                if seen.insert(end, v).is_some() {
                    return Err(GraphError::MalformedRotation(format!(
                        "end {}.{} appears twice",
                        end.edge, end.which
                    )));
                }
                let (a, b) = edges[end.edge];
                let expect = if end.which == 0 { a } else { b };
                if expect != v {
                    return Err(GraphError::MalformedRotation(format!(
                        "end {}.{} listed at vertex {} but belongs to {}",
                        end.edge, end.which, v, expect
                    )));
                }
            }
        }
        if seen.len() != 2 * edges.len() {
            return Err(GraphError::MalformedRotation(
                "missing edge-ends in rotations".into(),
            ));
        }
        let mut g = PlanarMultigraph {
            vertex_count,
            edges,
            rotations,
            faces: Vec::new(),
            dart_face: Vec::new(),
        };
        g.trace_faces();
        g.check_euler()?;
        Ok(g)
    }

    fn trace_faces(&mut self) {
        let e = self.edges.len();
        let mut end_pos: HashMap<EdgeEnd, (VertexId, usize)> = HashMap::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for (i, &end) in rot.iter().enumerate() {
                end_pos.insert(end, (v, i));
            }
        }
        let mut dart_face = vec![usize::MAX; 2 * e];
        let mut faces = Vec::new();
        for start_edge in 0..e {
            for from in 0..2u8 {
                let start = Dart { edge: start_edge, from };
                if dart_face[2 * start.edge + start.from as usize] != usize::MAX {
                    continue;
                }
                let fid = faces.len();
                let mut walk = Vec::new();
                let mut d = start;
                loop {
                    dart_face[2 * d.edge + d.from as usize] = fid;
                    walk.push(d);
                    // Arrive at the far end, take the rotation successor there.
                    let arr = d.arrival_end();
                    let (v, i) = end_pos[&arr];
                    let rot = &self.rotations[v];
                    let next_end = rot[(i + 1) % rot.len()];
                    d = Dart { edge: next_end.edge, from: next_end.which };
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { walk, isolated_vertex: None });
            }
        }
        for v in 0..self.vertex_count {
            if self.rotations[v].is_empty() {
                faces.push(Face { walk: Vec::new(), isolated_vertex: Some(v) });
            }
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        for comp in self.components() {
            let vc = comp.len() as i64;
            let ec = self
                .edges
                .iter()
                .filter(|(u, _)| comp.contains(u))
                .count() as i64;
            let mut fc = 0i64;
            for f in &self.faces {
                let in_comp = match f.isolated_vertex {
                    Some(v) => comp.contains(&v),
                    None => comp.contains(&self.endpoints(f.walk[0].edge).0),
                };
                if in_comp {
                    fc += 1;
                }
            }
            if vc - ec + fc != 2 {
                return Err(GraphError::NonSpherical(vc - ec + fc));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeEnd] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeEnd>] {
        &self.rotations
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.dart_face[2 * d.edge + d.from as usize]
    }

    /// The two faces on either side of an edge (equal for a bridge seen
    /// from both sides of a pendant tree, distinct otherwise).
    pub fn faces_of_edge(&self, e: EdgeId) -> (usize, usize) {
        (
            self.face_of_dart(Dart { edge: e, from: 0 }),
            self.face_of_dart(Dart { edge: e, from: 1 }),
        )
    }

    pub fn incident_ends(&self, v: VertexId) -> &[EdgeEnd] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn end_vertex(&self, end: EdgeEnd) -> VertexId {
        let (a, b) = self.edges[end.edge];
        if end.which == 0 {
            a
        } else {
            b
        }
    }

    pub fn components(&self) -> Vec<std::collections::BTreeSet<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut comps = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            let mut comp = std::collections::BTreeSet::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &end in &self.rotations[v] {
                    let w = self.end_vertex(end.other());
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// BFS spanning forest plus one fundamental cycle per non-tree edge.
    pub fn spanning_forest(&self) -> SpanningForest {
        let n = self.vertex_count;
        let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
        let mut visited = vec![false; n];
        let mut tree_edges = Vec::new();
        let mut tree_mark = vec![false; self.edges.len()];
        for s in 0..n {
            if visited[s] {
                continue;
            }
            visited[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &end in &self.rotations[v] {
                    let w = self.end_vertex(end.other());
                    if !visited[w] {
                        visited[w] = true;
                        parent[w] = Some((v, end.edge));
                        tree_edges.push(end.edge);
                        tree_mark[end.edge] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let depth = |mut v: VertexId| {
            let mut d = 0;
            while let Some((p, _)) = parent[v] {
                v = p;
                d += 1;
            }
            d
        };
        let mut fundamental_cycles = Vec::new();
        for e in 0..self.edges.len() {
            if tree_mark[e] {
                continue;
            }
            let (u, v) = self.edges[e];
            let mut vec = vec![0i64; self.edges.len()];
            let mut walk = vec![e];
            // Traverse e from u to v (positive if the reference orientation
            // points u -> v), then walk the tree path v -> u.
            vec[e] = self.ref_sign(e, u, v);
            let (mut a, mut b) = (v, u);
            let (mut da, mut db) = (depth(a), depth(b));
            while da > db {
                let (p, pe) = parent[a].unwrap();
                vec[pe] += self.ref_sign(pe, a, p);
                walk.push(pe);
                a = p;
                da -= 1;
            }
            while db > da {
                let (p, pe) = parent[b].unwrap();
                vec[pe] += self.ref_sign(pe, p, b);
                walk.push(pe);
                b = p;
                db -= 1;
            }
            while a != b {
                let (pa, pea) = parent[a].unwrap();
                let (pb, peb) = parent[b].unwrap();
                vec[pea] += self.ref_sign(pea, a, pa);
                vec[peb] += self.ref_sign(peb, pb, b);
                walk.push(pea);
                walk.push(peb);
                a = pa;
                b = pb;
            }
            fundamental_cycles.push((e, walk, vec));
        }
        SpanningForest { tree_edges, fundamental_cycles }
    }

    /// Sign of traversing edge `e` from `a` to `b` against the reference
    /// orientation (tail = endpoint 0, head = endpoint 1).
    pub fn ref_sign(&self, e: EdgeId, a: VertexId, b: VertexId) -> i64 {
        let (t, h) = self.edges[e];
        debug_assert!((a, b) == (t, h) || (a, b) == (h, t));
        if (a, b) == (t, h) {
            1
        } else {
            -1
        }
    }

    /// Groups the faces into the two regions bounded by a cycle: faces are
    /// merged across every edge not on the cycle. Returns `None` if the
    /// edge set does not separate the face set into exactly two groups.
    pub fn cycle_regions(&self, cycle_edges: &[EdgeId]) -> Option<(Vec<usize>, Vec<usize>)> {
        let on_cycle: std::collections::HashSet<EdgeId> = cycle_edges.iter().copied().collect();
        let nf = self.faces.len();
        let mut dsu: Vec<usize> = (0..nf).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        for e in 0..self.edges.len() {
            if on_cycle.contains(&e) {
                continue;
            }
            let (f1, f2) = self.faces_of_edge(e);
            let (r1, r2) = (find(&mut dsu, f1), find(&mut dsu, f2));
            if r1 != r2 {
                dsu[r1] = r2;
            }
        }
        // Restrict to faces of the cycle's component; other components'
        // faces live on separate spheres and belong to neither region.
        let comp_vertex = self.endpoints(cycle_edges[0]).0;
        let comp = self
            .components()
            .into_iter()
            .find(|c| c.contains(&comp_vertex))
            .unwrap();
        let relevant: Vec<usize> = (0..nf)
            .filter(|&f| match self.faces[f].isolated_vertex {
                Some(v) => comp.contains(&v),
                None => comp.contains(&self.endpoints(self.faces[f].walk[0].edge).0),
            })
            .collect();
        let mut roots = std::collections::BTreeSet::new();
        for &f in &relevant {
            roots.insert(find(&mut dsu, f));
        }
        if roots.len() != 2 {
            return None;
        }
        let roots: Vec<usize> = roots.into_iter().collect();
        let mut g1 = Vec::new();
        let mut g2 = Vec::new();
        for &f in &relevant {
            if find(&mut dsu, f) == roots[0] {
                g1.push(f);
            } else {
                g2.push(f);
            }
        }
        Some((g1, g2))
    }
}
