#![allow(dead_code)]

use graph_core::{EdgeEnd, PlanarMultigraph, VertexId};
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

/// Two hub vertices joined by disjoint paths of the given lengths, drawn
/// as parallel strands.
pub fn generalized_theta(lengths: &[usize]) -> PlanarMultigraph {
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut internal_rotations: Vec<Vec<EdgeEnd>> = Vec::new();
    let mut first_edges = Vec::new();
    let mut last_edges = Vec::new();
    let mut next_vertex = 2usize;
    for &l in lengths {
        assert!(l >= 1);
        let mut prev = 0usize;
        for step in 0..l {
            let to = if step + 1 == l { 1 } else { next_vertex };
            let e = edges.len();
            edges.push((prev, to));
            if step == 0 {
                first_edges.push(EdgeEnd::new(e, 0));
            } else {
                internal_rotations.push(vec![EdgeEnd::new(e - 1, 1), EdgeEnd::new(e, 0)]);
            }
            if step + 1 == l {
                last_edges.push(EdgeEnd::new(e, 1));
            } else {
                next_vertex += 1;
            }
            prev = to;
        }
    }
    last_edges.reverse();
    let mut rotations = vec![first_edges, last_edges];
    rotations.extend(internal_rotations);
    PlanarMultigraph::build(next_vertex, edges, rotations).unwrap()
}

/// Two hub vertices joined by three disjoint paths of lengths 2, 2 and 3.
pub fn theta_2_2_3() -> PlanarMultigraph {
    generalized_theta(&[2, 2, 3])
}

/// The complete graph on four vertices with its planar embedding.
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

/// PD code of the alternating diagram whose black Tait graph is `g`: one
/// crossing per edge, one arc per vertex corner. The tuple at the
/// crossing of edge (u, v) lists the two corners flanking the edge at u
/// and then the two flanking it at v, so the black corners are the ones
/// containing u and v.
pub fn pd_from_graph(g: &PlanarMultigraph) -> String {
    if g.edge_count() == 0 {
        return "PD[U[1]]".to_string();
    }
    // corner (v, i) sits between rotation positions i and i + 1 at v.
    let mut corner_label = std::collections::HashMap::new();
    let mut next = 1usize;
    for v in 0..g.vertex_count() {
        for i in 0..g.degree(v) {
            corner_label.insert((v, i), next);
            next += 1;
        }
    }
    let flank = |end: EdgeEnd| {
        let v = g.end_vertex(end);
        let d = g.degree(v);
        let p = g.rotation(v).iter().position(|&x| x == end).unwrap();
        (corner_label[&(v, (p + d - 1) % d)], corner_label[&(v, p)])
    };
    let items: Vec<String> = (0..g.edge_count())
        .map(|e| {
            let (pre_u, post_u) = flank(EdgeEnd::new(e, 0));
            let (pre_v, post_v) = flank(EdgeEnd::new(e, 1));
            format!("X[{pre_u},{post_u},{pre_v},{post_v}]")
        })
        .collect();
    format!("PD[{}]", items.join(","))
}

/// Serializes crossing tuples and an unknot count back to PD text.
pub fn pd_text(crossings: &[[usize; 4]], unknots: usize) -> String {
    let mut items: Vec<String> = crossings
        .iter()
        .map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3]))
        .collect();
    if unknots > 0 {
        items.push(format!("U[{unknots}]"));
    }
    format!("PD[{}]", items.join(","))
}

pub fn colored(pd: &str) -> link_cli::ColoredDiagram {
    link_cli::chessboard(link_cli::parse_pd(pd).unwrap()).unwrap()
}
