use crate::{EdgeId, PlanarMultigraph, VertexId};
use std::collections::VecDeque;

/// A direction for every edge. `forward` means the edge points from its
/// first recorded endpoint to its second; a loop carries a direction of
/// traversal the same way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrientation {
    forward: Vec<bool>,
}

impl EdgeOrientation {
    pub fn new(forward: Vec<bool>) -> Self {
        EdgeOrientation { forward }
    }

    /// The reference orientation: every edge from lower to higher vertex id,
    /// loops traversed endpoint-0 to endpoint-1.
    pub fn reference(g: &PlanarMultigraph) -> Self {
        let forward = g.edges().iter().map(|&(u, v)| u <= v).collect();
        EdgeOrientation { forward }
    }

    pub fn edge_count(&self) -> usize {
        self.forward.len()
    }

    pub fn is_forward(&self, e: EdgeId) -> bool {
        self.forward[e]
    }

    pub fn tail(&self, g: &PlanarMultigraph, e: EdgeId) -> VertexId {
        let (a, b) = g.endpoints(e);
        if self.forward[e] {
            a
        } else {
            b
        }
    }

    pub fn head(&self, g: &PlanarMultigraph, e: EdgeId) -> VertexId {
        let (a, b) = g.endpoints(e);
        if self.forward[e] {
            b
        } else {
            a
        }
    }

    /// Signs of this orientation against the reference one.
    pub fn signs_against_reference(&self, g: &PlanarMultigraph) -> Vec<i64> {
        let r = EdgeOrientation::reference(g);
        (0..self.forward.len())
            .map(|e| if self.forward[e] == r.forward[e] { 1 } else { -1 })
            .collect()
    }

    pub fn reversed(&self) -> Self {
        EdgeOrientation { forward: self.forward.iter().map(|b| !b).collect() }
    }

    pub fn flip(&mut self, e: EdgeId) {
        self.forward[e] = !self.forward[e];
    }
}

/// True iff the orientation contains no directed cycle, i.e. the vertices
/// admit a linear order with every edge pointing up. A loop always makes
/// this false.
pub fn is_acyclic_orientation(g: &PlanarMultigraph, o: &EdgeOrientation) -> bool {
    assert_eq!(o.edge_count(), g.edge_count());
    if (0..g.edge_count()).any(|e| g.is_loop(e)) {
        return false;
    }
    let n = g.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut outgoing: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in 0..g.edge_count() {
        let (t, h) = (o.tail(g, e), o.head(g, e));
        indeg[h] += 1;
        outgoing[t].push(h);
    }
    let mut queue: VecDeque<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut done = 0;
    while let Some(v) = queue.pop_front() {
        done += 1;
        for &w in &outgoing[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    done == n
}

/// True iff every connected component is strongly connected under `o`:
/// each ordered pair of vertices in a component is joined by a directed
/// path. Equivalently, the orientation contains no oriented cut.
pub fn is_strongly_connected_orientation(g: &PlanarMultigraph, o: &EdgeOrientation) -> bool {
    assert_eq!(o.edge_count(), g.edge_count());
    let n = g.vertex_count();
    let mut fwd: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut bwd: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in 0..g.edge_count() {
        let (t, h) = (o.tail(g, e), o.head(g, e));
        fwd[t].push(h);
        bwd[h].push(t);
    }
    for comp in g.components() {
        let root = *comp.iter().next().unwrap();
        for adj in [&fwd, &bwd] {
            let mut seen = vec![false; n];
            let mut stack = vec![root];
            seen[root] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != comp.len() {
                return false;
            }
        }
    }
    true
}
