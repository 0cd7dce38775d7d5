use crate::LinkError;
use graph_core::{EdgeEnd, PlanarMultigraph};
use std::collections::HashMap;

/// A link diagram given by its PD code: one 4-tuple of arc labels per
/// crossing, in cyclic order, plus markers for crossingless unknot
/// components. The underlying 4-valent map has one vertex per crossing
/// and one edge per arc, edge ids following sorted arc labels.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    pub crossings: Vec<[usize; 4]>,
    pub unknot_components: usize,
    pub map: PlanarMultigraph,
    /// Sorted arc labels; position = edge id in the map.
    pub arcs: Vec<usize>,
    pub components: usize,
}

impl LinkDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

/// Parses `PD[X[a,b,c,d], ..., U[k]]`. Arc labels are positive integers,
/// each appearing exactly twice; `U[k]` adds k crossingless unknot
/// components.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, LinkError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("PD[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| LinkError::MalformedPd("input must be wrapped in PD[...]".into()))?;
    let mut crossings: Vec<[usize; 4]> = Vec::new();
    let mut unknots = 0usize;
    for item in split_items(inner) {
        if let Some(body) = item.strip_prefix("X[").and_then(|s| s.strip_suffix(']')) {
            let labels = parse_numbers(body)?;
            let four: [usize; 4] = labels
                .try_into()
                .map_err(|_| LinkError::MalformedPd(format!("crossing `{item}` needs 4 arcs")))?;
            crossings.push(four);
        } else if let Some(body) = item.strip_prefix("U[").and_then(|s| s.strip_suffix(']')) {
            let nums = parse_numbers(body)?;
            if nums.len() != 1 {
                return Err(LinkError::MalformedPd(format!("`{item}` needs one count")));
            }
            unknots += nums[0];
        } else if !item.is_empty() {
            return Err(LinkError::MalformedPd(format!("unrecognized item `{item}`")));
        }
    }

    let mut occurrences: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (c, x) in crossings.iter().enumerate() {
        for (slot, &a) in x.iter().enumerate() {
            occurrences.entry(a).or_default().push((c, slot));
        }
    }
    for (a, occ) in &occurrences {
        if occ.len() != 2 {
            return Err(LinkError::ArcMultiplicity(format!(
                "arc {a} appears {} times, expected 2",
                occ.len()
            )));
        }
    }
    let mut arcs: Vec<usize> = occurrences.keys().copied().collect();
    arcs.sort();
    let edge_of: HashMap<usize, usize> =
        arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();

    let edges: Vec<(usize, usize)> = arcs
        .iter()
        .map(|a| {
            let occ = &occurrences[a];
            (occ[0].0, occ[1].0)
        })
        .collect();
    let rotations: Vec<Vec<EdgeEnd>> = crossings
        .iter()
        .enumerate()
        .map(|(c, x)| {
            x.iter()
                .enumerate()
                .map(|(slot, a)| {
                    let e = edge_of[a];
                    let which = if occurrences[a][0] == (c, slot) { 0 } else { 1 };
                    EdgeEnd::new(e, which)
                })
                .collect()
        })
        .collect();
    let map = PlanarMultigraph::build(crossings.len(), edges, rotations)?;

    // Strands pass straight through: opposite slots carry the same
    // component.
    let mut comp = DisjointSet::new(arcs.len());
    for x in &crossings {
        comp.union(edge_of[&x[0]], edge_of[&x[2]]);
        comp.union(edge_of[&x[1]], edge_of[&x[3]]);
    }
    let components = comp.count() + unknots;

    Ok(LinkDiagram {
        crossings,
        unknot_components: unknots,
        map,
        arcs,
        components,
    })
}

/// Splits on commas at bracket depth zero.
fn split_items(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_numbers(s: &str) -> Result<Vec<usize>, LinkError> {
    s.split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| LinkError::MalformedPd(format!("bad number `{t}`")))
        })
        .collect()
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
