use graph_core::{Cycle, EdgeOrientation, PlanarMultigraph, VertexId};
use lattice_core::{EmbeddedLattice, GramLattice};

/// The lattice of integer flows of a graph, presented inside the edge
/// lattice Z^E. Coordinates are read against a chosen reference
/// orientation; the basis consists of the fundamental cycles of a
/// spanning forest.
#[derive(Clone, Debug)]
pub struct FlowLattice {
    graph: PlanarMultigraph,
    orientation: EdgeOrientation,
    lattice: EmbeddedLattice,
}

pub fn flow_lattice(g: &PlanarMultigraph, o: &EdgeOrientation) -> FlowLattice {
    assert_eq!(o.edge_count(), g.edge_count());
    let m = g.edge_count();
    let forest = g.spanning_forest();
    let columns: Vec<Vec<i64>> = forest
        .fundamental_cycles
        .iter()
        .map(|(_, _, vec)| {
            (0..m).map(|e| if o.is_forward(e) { vec[e] } else { -vec[e] }).collect()
        })
        .collect();
    let lattice =
        EmbeddedLattice::new(m, columns).expect("fundamental cycles are independent");
    FlowLattice { graph: g.clone(), orientation: o.clone(), lattice }
}

impl FlowLattice {
    pub fn graph(&self) -> &PlanarMultigraph {
        &self.graph
    }

    pub fn orientation(&self) -> &EdgeOrientation {
        &self.orientation
    }

    pub fn lattice(&self) -> &EmbeddedLattice {
        &self.lattice
    }

    pub fn gram_lattice(&self) -> &GramLattice {
        self.lattice.gram_lattice()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn determinant(&self) -> i128 {
        self.gram_lattice().determinant()
    }

    /// Net flux at every vertex: incoming minus outgoing edge values.
    pub fn boundary(&self, x: &[i64]) -> Vec<i64> {
        let mut net = vec![0i64; self.graph.vertex_count()];
        for e in 0..self.graph.edge_count() {
            if self.graph.is_loop(e) {
                continue;
            }
            net[self.orientation.head(&self.graph, e)] += x[e];
            net[self.orientation.tail(&self.graph, e)] -= x[e];
        }
        net
    }

    pub fn is_flow(&self, x: &[i64]) -> bool {
        x.len() == self.graph.edge_count() && self.boundary(x).iter().all(|&b| b == 0)
    }

    /// Coordinates of an edge vector in the fundamental-cycle basis.
    pub fn coefficients(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.lattice.membership(x)
    }

    /// The class of an oriented cycle in the reference coordinates.
    pub fn cycle_class(&self, c: &Cycle) -> Vec<i64> {
        let mut v = vec![0i64; self.graph.edge_count()];
        for &e in &c.edges {
            let s = c.signs[e];
            v[e] = if self.orientation.is_forward(e) { s } else { -s };
        }
        v
    }
}

/// The lattice of integer cuts of a graph, presented inside the edge
/// lattice Z^E with basis the vertex stars of all but one vertex per
/// component.
#[derive(Clone, Debug)]
pub struct CutLattice {
    graph: PlanarMultigraph,
    orientation: EdgeOrientation,
    lattice: EmbeddedLattice,
    star_vertices: Vec<VertexId>,
}

pub fn cut_lattice(g: &PlanarMultigraph, o: &EdgeOrientation) -> CutLattice {
    assert_eq!(o.edge_count(), g.edge_count());
    let mut excluded = vec![false; g.vertex_count()];
    for comp in g.components() {
        excluded[*comp.iter().next_back().unwrap()] = true;
    }
    let star_vertices: Vec<VertexId> =
        (0..g.vertex_count()).filter(|&v| !excluded[v]).collect();
    let columns: Vec<Vec<i64>> =
        star_vertices.iter().map(|&v| star_vector(g, o, v)).collect();
    let lattice =
        EmbeddedLattice::new(g.edge_count(), columns).expect("vertex stars are independent");
    CutLattice { graph: g.clone(), orientation: o.clone(), lattice, star_vertices }
}

fn star_vector(g: &PlanarMultigraph, o: &EdgeOrientation, v: VertexId) -> Vec<i64> {
    (0..g.edge_count())
        .map(|e| {
            if g.is_loop(e) {
                0
            } else if o.tail(g, e) == v {
                1
            } else if o.head(g, e) == v {
                -1
            } else {
                0
            }
        })
        .collect()
}

impl CutLattice {
    pub fn graph(&self) -> &PlanarMultigraph {
        &self.graph
    }

    pub fn orientation(&self) -> &EdgeOrientation {
        &self.orientation
    }

    pub fn lattice(&self) -> &EmbeddedLattice {
        &self.lattice
    }

    pub fn gram_lattice(&self) -> &GramLattice {
        self.lattice.gram_lattice()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn determinant(&self) -> i128 {
        self.gram_lattice().determinant()
    }

    pub fn star_vertices(&self) -> &[VertexId] {
        &self.star_vertices
    }

    pub fn star(&self, v: VertexId) -> Vec<i64> {
        star_vector(&self.graph, &self.orientation, v)
    }

    /// The cut class of an integer vertex potential.
    pub fn potential_class(&self, z: &[i64]) -> Vec<i64> {
        (0..self.graph.edge_count())
            .map(|e| {
                if self.graph.is_loop(e) {
                    0
                } else {
                    z[self.orientation.tail(&self.graph, e)]
                        - z[self.orientation.head(&self.graph, e)]
                }
            })
            .collect()
    }

    /// Recovers a vertex potential with the given cut class, normalized to
    /// minimum 0 on every component. `None` when the vector is not a cut.
    pub fn potential(&self, x: &[i64]) -> Option<Vec<i64>> {
        if x.len() != self.graph.edge_count() {
            return None;
        }
        let g = &self.graph;
        let n = g.vertex_count();
        let mut z = vec![0i64; n];
        let mut seen = vec![false; n];
        for comp in g.components() {
            let root = *comp.iter().next().unwrap();
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for end in g.incident_ends(v) {
                    let e = end.edge;
                    let w = g.end_vertex(end.other());
                    if g.is_loop(e) {
                        if x[e] != 0 {
                            return None;
                        }
                        continue;
                    }
                    let t = self.orientation.tail(g, e);
                    let zw = if v == t { z[v] - x[e] } else { z[v] + x[e] };
                    if seen[w] {
                        if z[w] != zw {
                            return None;
                        }
                    } else {
                        seen[w] = true;
                        z[w] = zw;
                        queue.push_back(w);
                    }
                }
            }
            let low = comp.iter().map(|&v| z[v]).min().unwrap();
            for &v in &comp {
                z[v] -= low;
            }
        }
        Some(z)
    }

    pub fn is_cut(&self, x: &[i64]) -> bool {
        self.potential(x).is_some()
    }
}
