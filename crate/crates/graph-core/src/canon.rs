use crate::{Dart, PlanarMultigraph, VertexId};
use std::collections::{BTreeMap, HashMap};

/// Canonical form of the underlying abstract multigraph (embedding
/// ignored): vertex count plus the lexicographically least relabeled edge
/// multiset over all vertex orderings compatible with color refinement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn canonical_form(g: &PlanarMultigraph) -> CanonicalForm {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalForm { vertex_count: 0, edges: Vec::new() };
    }
    let colors = refine_colors(g);
    // Group vertices by color; orderings permute within classes only.
    let mut classes: BTreeMap<u64, Vec<VertexId>> = BTreeMap::new();
    for v in 0..n {
        classes.entry(colors[v]).or_default().push(v);
    }
    let classes: Vec<Vec<VertexId>> = classes.into_values().collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![0usize; n];
    permute_classes(g, &classes, 0, &mut label, &mut best);
    CanonicalForm { vertex_count: n, edges: best.unwrap() }
}

fn permute_classes(
    g: &PlanarMultigraph,
    classes: &[Vec<VertexId>],
    idx: usize,
    label: &mut Vec<usize>,
    best: &mut Option<Vec<(usize, usize)>>,
) {
    if idx == classes.len() {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (label[u], label[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().map_or(true, |b| edges < *b) {
            *best = Some(edges);
        }
        return;
    }
    let offset: usize = classes[..idx].iter().map(|c| c.len()).sum();
    let mut members = classes[idx].clone();
    permute_all(&mut members, 0, &mut |perm| {
        for (i, &v) in perm.iter().enumerate() {
            label[v] = offset + i;
        }
        permute_classes(g, classes, idx + 1, label, best);
    });
}

fn permute_all(items: &mut Vec<VertexId>, k: usize, f: &mut impl FnMut(&[VertexId])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Iterated neighborhood color refinement. Stable colors only narrow the
/// permutation search; correctness does not depend on them separating
/// non-equivalent vertices.
fn refine_colors(g: &PlanarMultigraph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut colors: Vec<u64> = (0..n)
        .map(|v| {
            let loops = g
                .rotation(v)
                .iter()
                .filter(|end| g.is_loop(end.edge) && end.which == 0)
                .count();
            hash_seq(&[g.degree(v) as u64, loops as u64])
        })
        .collect();
    for _ in 0..n {
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u64> = g
                .rotation(v)
                .iter()
                .map(|end| colors[g.end_vertex(end.other())])
                .collect();
            nb.sort_unstable();
            nb.insert(0, colors[v]);
            next.push(hash_seq(&nb));
        }
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

fn hash_seq(xs: &[u64]) -> u64 {
    // FNV-1a over the little-endian bytes.
    let mut h: u64 = 0xcbf29ce484222325;
    for &x in xs {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

pub fn graphs_isomorphic(a: &PlanarMultigraph, b: &PlanarMultigraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// Canonical code of the embedded map. Two graphs get equal codes exactly
/// when some relabeling of vertices and edges matches their rotation
/// systems, up to global reflection when `with_reflection` is set.
pub fn canonical_map_code(g: &PlanarMultigraph, with_reflection: bool) -> Vec<usize> {
    let mut comp_codes: Vec<Vec<usize>> = Vec::new();
    let comps = g.components();
    for comp in &comps {
        let mut darts = Vec::new();
        for &v in comp {
            for end in g.rotation(v) {
                darts.push(Dart { edge: end.edge, from: end.which });
            }
        }
        if darts.is_empty() {
            continue;
        }
        let mut best: Option<Vec<usize>> = None;
        let reflections: &[bool] = if with_reflection { &[false, true] } else { &[false] };
        for &refl in reflections {
            for &start in &darts {
                let code = trace_code(g, start, refl);
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
        comp_codes.push(best.unwrap());
    }
    comp_codes.sort();
    let isolated = comps.iter().filter(|c| c.iter().all(|&v| g.degree(v) == 0)).count();
    let mut out = vec![g.vertex_count(), g.edge_count(), isolated];
    for c in comp_codes {
        out.push(usize::MAX);
        out.extend(c);
    }
    out
}

/// Breadth-first dart labeling from `start`; the code lists, per dart in
/// discovery order, the labels of its rotation successor and its reversal.
fn trace_code(g: &PlanarMultigraph, start: Dart, reflect: bool) -> Vec<usize> {
    let mut labels: HashMap<Dart, usize> = HashMap::new();
    let mut order = vec![start];
    labels.insert(start, 0);
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        for nd in [rotation_next(g, d, reflect), d.reverse()] {
            if !labels.contains_key(&nd) {
                labels.insert(nd, order.len());
                order.push(nd);
            }
        }
        i += 1;
    }
    let mut code = Vec::with_capacity(2 * order.len());
    for &d in &order {
        code.push(labels[&rotation_next(g, d, reflect)]);
        code.push(labels[&d.reverse()]);
    }
    code
}

fn rotation_next(g: &PlanarMultigraph, d: Dart, reflect: bool) -> Dart {
    let v = g.end_vertex(d.departure_end());
    let rot = g.rotation(v);
    let i = rot
        .iter()
        .position(|&end| end == d.departure_end())
        .expect("dart departs from its vertex");
    let j = if reflect {
        (i + rot.len() - 1) % rot.len()
    } else {
        (i + 1) % rot.len()
    };
    Dart { edge: rot[j].edge, from: rot[j].which }
}

/// True when the two embedded maps are equivalent as maps on the oriented
/// sphere (or unoriented sphere when `with_reflection`).
pub fn maps_equivalent(
    a: &PlanarMultigraph,
    b: &PlanarMultigraph,
    with_reflection: bool,
) -> bool {
    canonical_map_code(a, with_reflection) == canonical_map_code(b, with_reflection)
}
