use graph_core::{Cycle, EdgeId, PlanarMultigraph};
use std::collections::BTreeSet;

/// Verdict of the disk-containment test for two cycles of an embedded
/// graph. Nested cycles bound disks, one inside the other; the disks are
/// reported as the face sets of their interiors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nesting {
    Nested {
        inner_faces: Vec<usize>,
        outer_faces: Vec<usize>,
        shared_edges: Vec<EdgeId>,
    },
    NotNested,
}

/// Decides whether two cycles are nested: some disk bounded by the first
/// is contained in some disk bounded by the second, or vice versa. Each
/// cycle splits its component's faces into two groups, and containment of
/// disks is containment of face groups.
pub fn nesting_check(g: &PlanarMultigraph, c1: &Cycle, c2: &Cycle) -> Nesting {
    let Some((a1, b1)) = g.cycle_regions(&c1.edges) else {
        return Nesting::NotNested;
    };
    let Some((a2, b2)) = g.cycle_regions(&c2.edges) else {
        return Nesting::NotNested;
    };
    let shared_edges: Vec<EdgeId> = c1
        .edges
        .iter()
        .copied()
        .filter(|e| c2.edges.contains(e))
        .collect();
    let sides1 = [a1, b1];
    let sides2 = [a2, b2];
    for s1 in &sides1 {
        for s2 in &sides2 {
            let set1: BTreeSet<usize> = s1.iter().copied().collect();
            let set2: BTreeSet<usize> = s2.iter().copied().collect();
            if set1.is_subset(&set2) {
                return Nesting::Nested {
                    inner_faces: s1.clone(),
                    outer_faces: s2.clone(),
                    shared_edges,
                };
            }
            if set2.is_subset(&set1) {
                return Nesting::Nested {
                    inner_faces: s2.clone(),
                    outer_faces: s1.clone(),
                    shared_edges,
                };
            }
        }
    }
    Nesting::NotNested
}
