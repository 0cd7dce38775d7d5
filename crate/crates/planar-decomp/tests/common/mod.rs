#![allow(dead_code)]

use graph_core::{EdgeEnd, PlanarMultigraph, VertexId};
use planar_decomp::compose;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn singleton_graph() -> PlanarMultigraph {
    PlanarMultigraph::build(1, Vec::new(), vec![Vec::new()]).unwrap()
}

pub fn edge_graph() -> PlanarMultigraph {
    PlanarMultigraph::build(
        2,
        vec![(0, 1)],
        vec![vec![EdgeEnd::new(0, 0)], vec![EdgeEnd::new(0, 1)]],
    )
    .unwrap()
}

/// Cycle on n vertices (n >= 2).
pub fn cycle_graph(n: usize) -> PlanarMultigraph {
    let edges: Vec<(VertexId, VertexId)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rotations: Vec<Vec<EdgeEnd>> = (0..n)
        .map(|v| {
            let prev = (v + n - 1) % n;
            vec![EdgeEnd::new(prev, 1), EdgeEnd::new(v, 0)]
        })
        .collect();
    PlanarMultigraph::build(n, edges, rotations).unwrap()
}

/// Two hub vertices joined by three disjoint paths of lengths 2, 2 and 3:
/// six vertices, seven edges, exactly one 4-cycle.
pub fn theta_2_2_3() -> PlanarMultigraph {
    let edges = vec![(0, 1), (1, 2), (2, 5), (5, 0), (2, 3), (3, 4), (4, 0)];
    let rotations = vec![
        vec![EdgeEnd::new(0, 0), EdgeEnd::new(3, 1), EdgeEnd::new(6, 1)],
        vec![EdgeEnd::new(0, 1), EdgeEnd::new(1, 0)],
        vec![EdgeEnd::new(4, 0), EdgeEnd::new(2, 0), EdgeEnd::new(1, 1)],
        vec![EdgeEnd::new(4, 1), EdgeEnd::new(5, 0)],
        vec![EdgeEnd::new(5, 1), EdgeEnd::new(6, 0)],
        vec![EdgeEnd::new(2, 1), EdgeEnd::new(3, 0)],
    ];
    PlanarMultigraph::build(6, edges, rotations).unwrap()
}

/// The complete graph on four vertices with its planar embedding: one
/// vertex drawn inside the triangle on the other three.
pub fn k4() -> PlanarMultigraph {
    let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let rotations = vec![
        vec![EdgeEnd::new(0, 0), EdgeEnd::new(2, 0), EdgeEnd::new(1, 0)],
        vec![EdgeEnd::new(3, 0), EdgeEnd::new(4, 0), EdgeEnd::new(0, 1)],
        vec![EdgeEnd::new(1, 1), EdgeEnd::new(5, 0), EdgeEnd::new(3, 1)],
        vec![EdgeEnd::new(5, 1), EdgeEnd::new(2, 1), EdgeEnd::new(4, 1)],
    ];
    PlanarMultigraph::build(4, edges, rotations).unwrap()
}

/// Random connected planar map grown by face-respecting edge insertions.
pub fn random_planar_map(seed: u64, target_edges: usize) -> PlanarMultigraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut n = 1usize;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut rotations: Vec<Vec<EdgeEnd>> = vec![vec![]];
    while edges.len() < target_edges {
        let g = PlanarMultigraph::build(n, edges.clone(), rotations.clone()).unwrap();
        let faces = g.faces();
        let f = &faces[rng.gen_range(0..faces.len())];
        let corners = face_corners(&g, f);
        let m = edges.len();
        if rng.gen_bool(0.4) {
            let (v, p) = corners[rng.gen_range(0..corners.len())];
            edges.push((v, n));
            rotations[v].insert(p, EdgeEnd::new(m, 0));
            rotations.push(vec![EdgeEnd::new(m, 1)]);
            n += 1;
        } else {
            let (v1, p1) = corners[rng.gen_range(0..corners.len())];
            let (v2, p2) = corners[rng.gen_range(0..corners.len())];
            edges.push((v1, v2));
            if v1 == v2 {
                let (lo, hi) = (p1.min(p2), p1.max(p2));
                rotations[v1].insert(hi, EdgeEnd::new(m, 1));
                rotations[v1].insert(lo, EdgeEnd::new(m, 0));
            } else {
                rotations[v1].insert(p1, EdgeEnd::new(m, 0));
                rotations[v2].insert(p2, EdgeEnd::new(m, 1));
            }
        }
    }
    PlanarMultigraph::build(n, edges, rotations).unwrap()
}

fn face_corners(g: &PlanarMultigraph, f: &graph_core::Face) -> Vec<(VertexId, usize)> {
    if let Some(v) = f.isolated_vertex {
        return vec![(v, 0)];
    }
    f.walk
        .iter()
        .map(|d| {
            let end = d.arrival_end();
            let v = g.end_vertex(end);
            let i = g.rotation(v).iter().position(|&x| x == end).unwrap();
            (v, i + 1)
        })
        .collect()
}

/// Attaches a two-edge path from `a` to `b` through a fresh vertex, drawn
/// inside a face having corners at both. With `avoid_edge_at_least` set,
/// faces touching any edge with that id or higher are skipped, which
/// steers the path into a face untouched by earlier insertions.
pub fn attach_path(
    g: &PlanarMultigraph,
    a: VertexId,
    b: VertexId,
    avoid_edge_at_least: Option<usize>,
) -> PlanarMultigraph {
    let faces = g.faces();
    let f = faces
        .iter()
        .find(|f| {
            avoid_edge_at_least.map_or(true, |m| f.walk.iter().all(|d| d.edge < m)) && {
                let cs = face_corners(g, f);
                cs.iter().any(|&(v, _)| v == a) && cs.iter().any(|&(v, _)| v == b)
            }
        })
        .expect("no face carries both attachment corners");
    let corners = face_corners(g, f);
    let (_, pa) = *corners.iter().find(|&&(v, _)| v == a).unwrap();
    let (_, pb) = *corners.iter().find(|&&(v, _)| v == b).unwrap();
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut edges: Vec<(VertexId, VertexId)> = (0..m).map(|e| g.endpoints(e)).collect();
    let mut rotations: Vec<Vec<EdgeEnd>> = (0..n).map(|v| g.rotation(v).to_vec()).collect();
    edges.push((a, n));
    edges.push((n, b));
    rotations[a].insert(pa, EdgeEnd::new(m, 0));
    rotations[b].insert(pb, EdgeEnd::new(m + 1, 1));
    rotations.push(vec![EdgeEnd::new(m, 1), EdgeEnd::new(m + 1, 0)]);
    PlanarMultigraph::build(n + 1, edges, rotations).unwrap()
}

/// Random member of the composition closure grown by repeated composition
/// with smaller members, mostly edges.
pub fn random_g_member(seed: u64, min_edges: usize) -> PlanarMultigraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut g = edge_graph();
    while g.edge_count() < min_edges {
        let other = if g.edge_count() >= 4 && rng.gen_bool(0.2) {
            random_g_member(rng.gen(), 4.min(min_edges))
        } else {
            edge_graph()
        };
        let f1 = loop {
            let e = rng.gen_range(0..g.edge_count());
            if !g.is_loop(e) {
                break e;
            }
        };
        let f2 = rng.gen_range(0..other.edge_count());
        g = compose(&g, f1, &other, f2, rng.gen(), rng.gen()).unwrap();
    }
    g
}

/// Kirchhoff spanning-tree oracle for the flow lattice determinant.
pub fn spanning_tree_count(g: &PlanarMultigraph) -> i128 {
    use std::collections::HashMap;
    let mut total = 1i128;
    for comp in g.components() {
        let verts: Vec<VertexId> = comp.iter().copied().collect();
        if verts.len() == 1 {
            continue;
        }
        let index: HashMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let k = verts.len() - 1;
        let mut l = vec![vec![0i128; k]; k];
        for e in 0..g.edge_count() {
            let (u, v) = g.endpoints(e);
            if u == v || !comp.contains(&u) {
                continue;
            }
            let (iu, iv) = (index[&u], index[&v]);
            if iu < k {
                l[iu][iu] += 1;
            }
            if iv < k {
                l[iv][iv] += 1;
            }
            if iu < k && iv < k {
                l[iu][iv] -= 1;
                l[iv][iu] -= 1;
            }
        }
        total *= lattice_core::bareiss_determinant(&l);
    }
    total
}
