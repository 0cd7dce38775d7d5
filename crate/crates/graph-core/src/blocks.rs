use crate::{EdgeId, PlanarMultigraph, VertexId};
use std::collections::BTreeSet;

/// A block of a graph: a maximal 2-connected subgraph, a bridge with its
/// endpoints, a loop with its vertex, or an isolated vertex.
///
/// A block is trivial when it is a single vertex or a single non-loop edge.
/// A loop counts as nontrivial: it carries a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub trivial: bool,
}

impl Block {
    fn from_edges(g: &PlanarMultigraph, mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        let mut vs = BTreeSet::new();
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            vs.insert(u);
            vs.insert(v);
        }
        let trivial = edges.len() == 1 && !g.is_loop(edges[0]);
        Block { vertices: vs.into_iter().collect(), edges, trivial }
    }
}

struct BlockFinder<'a> {
    g: &'a PlanarMultigraph,
    disc: Vec<Option<usize>>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<EdgeId>,
    out: Vec<Block>,
}

impl BlockFinder<'_> {
    fn dfs(&mut self, u: VertexId, parent_edge: Option<EdgeId>) {
        self.disc[u] = Some(self.time);
        self.low[u] = self.time;
        self.time += 1;
        for i in 0..self.g.rotation(u).len() {
            let end = self.g.rotation(u)[i];
            let e = end.edge;
            if self.g.is_loop(e) {
                if end.which == 0 {
                    self.out.push(Block::from_edges(self.g, vec![e]));
                }
                continue;
            }
            if parent_edge == Some(e) {
                continue;
            }
            let w = self.g.end_vertex(end.other());
            match self.disc[w] {
                None => {
                    self.stack.push(e);
                    self.dfs(w, Some(e));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u].unwrap() {
                        let mut es = Vec::new();
                        loop {
                            let top = self.stack.pop().unwrap();
                            es.push(top);
                            if top == e {
                                break;
                            }
                        }
                        self.out.push(Block::from_edges(self.g, es));
                    }
                }
                Some(dw) if dw < self.disc[u].unwrap() => {
                    self.stack.push(e);
                    self.low[u] = self.low[u].min(dw);
                }
                _ => {}
            }
        }
    }
}

/// Block decomposition via the classical lowpoint DFS. Every edge lies in
/// exactly one block; cut vertices lie in several.
pub fn blocks(g: &PlanarMultigraph) -> Vec<Block> {
    let n = g.vertex_count();
    let mut f = BlockFinder {
        g,
        disc: vec![None; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if f.disc[v].is_none() {
            f.dfs(v, None);
        }
        if g.degree(v) == 0 {
            f.out.push(Block { vertices: vec![v], edges: Vec::new(), trivial: true });
        }
    }
    f.out
}
