use crate::{cut_lattice, flow_lattice, CutLattice, FlowError, FlowLattice};
use graph_core::{EdgeOrientation, PlanarMultigraph, VertexId};
use lattice_core::EmbeddedLattice;
use std::collections::BTreeSet;

/// Graph-side classification of a flow element, with class vectors of the
/// witness subgraphs in the reference coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowClass {
    NotSimple,
    Simple { eulerian: Vec<i64> },
    Irreducible { cycle: Vec<i64> },
    Rigid { cycles: [Vec<i64>; 2] },
}

/// Graph-side classification of a cut element. A simple element carries
/// the vertex potential realizing it; an irreducible one carries the two
/// connected vertex sides of its bond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutClass {
    NotSimple,
    Simple { potential: Vec<i64> },
    Irreducible { side_a: Vec<VertexId>, side_b: Vec<VertexId> },
}

/// A directed arc of the support of a unit flow.
#[derive(Clone, Copy, Debug)]
struct Arc {
    edge: usize,
    tail: VertexId,
    head: VertexId,
}

fn support_arcs(f: &FlowLattice, x: &[i64]) -> Vec<Arc> {
    let g = f.graph();
    let o = f.orientation();
    (0..g.edge_count())
        .filter(|&e| x[e] != 0)
        .map(|e| {
            let (t, h) = (o.tail(g, e), o.head(g, e));
            if x[e] > 0 {
                Arc { edge: e, tail: t, head: h }
            } else {
                Arc { edge: e, tail: h, head: t }
            }
        })
        .collect()
}

fn arcs_form_single_cycle(arcs: &[Arc]) -> bool {
    if arcs.is_empty() {
        return false;
    }
    let mut out = std::collections::HashMap::new();
    let mut indeg = std::collections::HashMap::new();
    for a in arcs {
        if out.insert(a.tail, a.head).is_some() {
            return false;
        }
        *indeg.entry(a.head).or_insert(0usize) += 1;
    }
    if indeg.values().any(|&d| d != 1) || indeg.len() != arcs.len() {
        return false;
    }
    // Connected: walk from one tail and count distinct vertices visited.
    let mut v = arcs[0].tail;
    let mut steps = 0;
    loop {
        v = out[&v];
        steps += 1;
        if v == arcs[0].tail {
            break;
        }
        if steps > arcs.len() {
            return false;
        }
    }
    steps == arcs.len()
}

fn arc_vertices(arcs: &[Arc], subset: &[usize]) -> BTreeSet<VertexId> {
    subset
        .iter()
        .flat_map(|&i| [arcs[i].tail, arcs[i].head])
        .collect()
}

/// All simple directed cycles through arc 0, as sorted arc-index sets.
fn cycles_through_first(arcs: &[Arc]) -> Vec<Vec<usize>> {
    let mut by_tail: std::collections::HashMap<VertexId, Vec<usize>> = Default::default();
    for (i, a) in arcs.iter().enumerate() {
        by_tail.entry(a.tail).or_default().push(i);
    }
    let mut found = Vec::new();
    let target = arcs[0].tail;
    let mut path = vec![0usize];
    let mut visited = BTreeSet::from([arcs[0].tail]);
    fn go(
        arcs: &[Arc],
        by_tail: &std::collections::HashMap<VertexId, Vec<usize>>,
        target: VertexId,
        path: &mut Vec<usize>,
        visited: &mut BTreeSet<VertexId>,
        found: &mut Vec<Vec<usize>>,
    ) {
        let at = arcs[*path.last().unwrap()].head;
        if at == target {
            let mut c = path.clone();
            c.sort_unstable();
            found.push(c);
            return;
        }
        if !visited.insert(at) {
            return;
        }
        for &i in by_tail.get(&at).into_iter().flatten() {
            path.push(i);
            go(arcs, by_tail, target, path, visited, found);
            path.pop();
        }
        visited.remove(&at);
    }
    go(arcs, &by_tail, target, &mut path, &mut visited, &mut found);
    found
}

fn class_of_arcs(m: usize, arcs: &[Arc], subset: &[usize], x: &[i64]) -> Vec<i64> {
    let mut v = vec![0i64; m];
    for &i in subset {
        v[arcs[i].edge] = x[arcs[i].edge].signum();
    }
    v
}

pub fn classify_flow_element(f: &FlowLattice, x: &[i64]) -> Result<FlowClass, FlowError> {
    if !f.is_flow(x) {
        return Err(FlowError::NotAFlow(format!(
            "nonzero net flux at a vertex for {x:?}"
        )));
    }
    if x.iter().any(|&v| v.abs() > 1) {
        return Ok(FlowClass::NotSimple);
    }
    let arcs = support_arcs(f, x);
    if arcs_form_single_cycle(&arcs) {
        return Ok(FlowClass::Irreducible { cycle: x.to_vec() });
    }
    if !arcs.is_empty() {
        let m = f.edge_count();
        let all: BTreeSet<usize> = (0..arcs.len()).collect();
        for cycle in cycles_through_first(&arcs) {
            let rest: Vec<usize> =
                all.difference(&cycle.iter().copied().collect()).copied().collect();
            let rest_arcs: Vec<Arc> = rest.iter().map(|&i| arcs[i]).collect();
            if !arcs_form_single_cycle(&rest_arcs) {
                continue;
            }
            let shared = arc_vertices(&arcs, &cycle)
                .intersection(&arc_vertices(&arcs, &rest))
                .count();
            if shared <= 1 {
                return Ok(FlowClass::Rigid {
                    cycles: [
                        class_of_arcs(m, &arcs, &cycle, x),
                        class_of_arcs(m, &arcs, &rest, x),
                    ],
                });
            }
        }
    }
    Ok(FlowClass::Simple { eulerian: x.to_vec() })
}

pub fn classify_cut_element(c: &CutLattice, x: &[i64]) -> Result<CutClass, FlowError> {
    let Some(z) = c.potential(x) else {
        return Err(FlowError::NotACut(format!(
            "no vertex potential realizes {x:?}"
        )));
    };
    if x.iter().any(|&v| v.abs() > 1) {
        return Ok(CutClass::NotSimple);
    }
    let g = c.graph();
    let support: Vec<usize> = (0..g.edge_count()).filter(|&e| x[e] != 0).collect();
    if !support.is_empty() {
        let comp = g
            .components()
            .into_iter()
            .find(|comp| comp.contains(&g.endpoints(support[0]).0));
        let comp = comp.unwrap();
        let in_one_component =
            support.iter().all(|&e| comp.contains(&g.endpoints(e).0));
        let two_leveled = comp.iter().all(|&v| z[v] <= 1);
        if in_one_component && two_leveled {
            let side_a: Vec<VertexId> = comp.iter().copied().filter(|&v| z[v] == 1).collect();
            let side_b: Vec<VertexId> = comp.iter().copied().filter(|&v| z[v] == 0).collect();
            if induces_connected(g, &side_a) && induces_connected(g, &side_b) {
                return Ok(CutClass::Irreducible { side_a, side_b });
            }
        }
    }
    Ok(CutClass::Simple { potential: z })
}

fn induces_connected(g: &PlanarMultigraph, side: &[VertexId]) -> bool {
    if side.is_empty() {
        return false;
    }
    let inside: BTreeSet<VertexId> = side.iter().copied().collect();
    let mut seen = BTreeSet::from([side[0]]);
    let mut stack = vec![side[0]];
    while let Some(v) = stack.pop() {
        for end in g.incident_ends(v) {
            let w = g.end_vertex(end.other());
            if inside.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == side.len()
}

/// Splits an oriented subgraph whose class lies in Flow ⊕ Cut into an
/// Eulerian part and a cut part with disjoint edge supports, by repeatedly
/// peeling the cut at the top level set of the potential.
pub fn decompose_simple_chain(
    g: &PlanarMultigraph,
    o: &EdgeOrientation,
    h: &[i64],
) -> Result<(Vec<i64>, Vec<i64>), FlowError> {
    let m = g.edge_count();
    if h.len() != m || h.iter().any(|&v| v.abs() > 1) {
        return Err(FlowError::Invalid(
            "an oriented subgraph class has entries in {-1, 0, 1}".into(),
        ));
    }
    let f = flow_lattice(g, o);
    let c = cut_lattice(g, o);
    let mut combined = f.lattice().columns().clone();
    combined.extend(c.lattice().columns().iter().cloned());
    let sum = EmbeddedLattice::new(m, combined).expect("flow and cut bases are complementary");
    let Some(coeffs) = sum.membership(h) else {
        return Err(FlowError::NotInDirectSum(format!("{h:?}")));
    };
    let mut z = vec![0i64; g.vertex_count()];
    for (i, &v) in c.star_vertices().iter().enumerate() {
        z[v] = coeffs[f.rank() + i];
    }
    let components = g.components();
    let mut cut_part = vec![0i64; m];
    loop {
        let mut level = false;
        for comp in &components {
            let top = comp.iter().map(|&v| z[v]).max().unwrap();
            let low = comp.iter().map(|&v| z[v]).min().unwrap();
            if top == low {
                continue;
            }
            level = true;
            let a: BTreeSet<VertexId> =
                comp.iter().copied().filter(|&v| z[v] == top).collect();
            for e in 0..m {
                if g.is_loop(e) {
                    continue;
                }
                let (t, hd) = (o.tail(g, e), o.head(g, e));
                if a.contains(&t) && !a.contains(&hd) && comp.contains(&hd) {
                    cut_part[e] += 1;
                } else if a.contains(&hd) && !a.contains(&t) && comp.contains(&t) {
                    cut_part[e] -= 1;
                }
            }
            for &v in &a {
                z[v] -= 1;
            }
        }
        if !level {
            break;
        }
    }
    let eulerian: Vec<i64> = h.iter().zip(&cut_part).map(|(a, b)| a - b).collect();
    debug_assert!(f.is_flow(&eulerian));
    debug_assert!(c.is_cut(&cut_part));
    debug_assert!(eulerian.iter().zip(&cut_part).all(|(a, b)| a * b == 0));
    Ok((eulerian, cut_part))
}
