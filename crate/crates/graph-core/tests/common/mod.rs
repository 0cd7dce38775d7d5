#![allow(dead_code)]

use graph_core::{EdgeEnd, PlanarMultigraph, VertexId};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn singleton() -> PlanarMultigraph {
    PlanarMultigraph::build(1, vec![], vec![vec![]]).unwrap()
}

pub fn edge_graph() -> PlanarMultigraph {
    PlanarMultigraph::build(
        2,
        vec![(0, 1)],
        vec![vec![EdgeEnd::new(0, 0)], vec![EdgeEnd::new(0, 1)]],
    )
    .unwrap()
}

/// Cycle on n vertices (n >= 1; n = 1 is a single loop).
pub fn cycle_graph(n: usize) -> PlanarMultigraph {
    if n == 1 {
        return PlanarMultigraph::build(
            1,
            vec![(0, 0)],
            vec![vec![EdgeEnd::new(0, 0), EdgeEnd::new(0, 1)]],
        )
        .unwrap();
    }
    let edges: Vec<(VertexId, VertexId)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let rotations: Vec<Vec<EdgeEnd>> = (0..n)
        .map(|v| {
            let prev = (v + n - 1) % n;
            vec![EdgeEnd::new(prev, 1), EdgeEnd::new(v, 0)]
        })
        .collect();
    PlanarMultigraph::build(n, edges, rotations).unwrap()
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> PlanarMultigraph {
    PlanarMultigraph::build(
        2,
        vec![(0, 1), (0, 1), (0, 1)],
        vec![
            vec![EdgeEnd::new(0, 0), EdgeEnd::new(1, 0), EdgeEnd::new(2, 0)],
            vec![EdgeEnd::new(2, 1), EdgeEnd::new(1, 1), EdgeEnd::new(0, 1)],
        ],
    )
    .unwrap()
}

/// Two vertices joined by three disjoint paths of lengths 2, 2 and 3:
/// six vertices, seven edges, a 4-cycle and two 5-cycles.
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

/// Random connected planar map grown by face-respecting edge insertions:
/// each step either hangs a pendant edge at a corner or draws a chord
/// between two corners of one face. Always spherical by construction.
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

/// Corners of a face as (vertex, rotation insertion position) pairs.
pub fn face_corners(g: &PlanarMultigraph, f: &graph_core::Face) -> Vec<(VertexId, usize)> {
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

/// Rebuilds `g` with vertices, edges and end slots shuffled.
pub fn shuffled_copy(g: &PlanarMultigraph, seed: u64) -> PlanarMultigraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut pv: Vec<usize> = (0..n).collect();
    let mut pe: Vec<usize> = (0..m).collect();
    for i in (1..n).rev() {
        pv.swap(i, rng.gen_range(0..=i));
    }
    for i in (1..m).rev() {
        pe.swap(i, rng.gen_range(0..=i));
    }
    let swap_end: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = vec![(0, 0); m];
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        let (mut a, mut b) = (pv[u], pv[v]);
        if swap_end[e] {
            std::mem::swap(&mut a, &mut b);
        }
        edges[pe[e]] = (a, b);
    }
    let mut rotations = vec![vec![]; n];
    for v in 0..n {
        let rot = g.rotation(v);
        let shift = if rot.is_empty() { 0 } else { rng.gen_range(0..rot.len()) };
        let mut new_rot = Vec::with_capacity(rot.len());
        for i in 0..rot.len() {
            let end = rot[(i + shift) % rot.len()];
            let which = if swap_end[end.edge] { 1 - end.which } else { end.which };
            new_rot.push(EdgeEnd::new(pe[end.edge], which));
        }
        rotations[pv[v]] = new_rot;
    }
    PlanarMultigraph::build(n, edges, rotations).unwrap()
}
