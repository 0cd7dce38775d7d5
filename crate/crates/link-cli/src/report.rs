use crate::color::ColoredDiagram;
use crate::tait::tait_graph;
use crate::LinkError;
use cube_tiling::HajosMatrix;
use graph_core::{blocks, restrict_to_edges, write_graph_text, PlanarMultigraph, VertexId};
use planar_decomp::{
    certificate_hajos, classify_g, preceq, DecompositionCertificate, FailureReason,
    FailureWitness, PlanarError,
};
use serde::Serialize;
use serde_json::{json, Value};

/// A reduced exact fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rational {
    pub num: i128,
    pub den: i128,
}

impl Rational {
    pub fn reduced(num: i128, den: i128) -> Rational {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 { a.abs() } else { gcd(b, a % b) }
        }
        let g = gcd(num, den).max(1);
        Rational { num: num / g, den: den / g }
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummandReport {
    pub crossings: usize,
    pub rank: usize,
    pub determinant: i128,
    pub in_d: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mod3Check {
    pub crossings: usize,
    pub residue: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BandMove {
    pub summand: usize,
    pub node: String,
    pub left_crossings: usize,
    pub right_crossings: usize,
    pub moves: [&'static str; 2],
}

/// The full diagram-level verdict: lattice data, the membership
/// certificate for the composition closure, and the slice-obstruction
/// conclusions that follow from it.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub crossings: usize,
    pub components: usize,
    pub reduced: bool,
    pub rank: usize,
    pub lattice_determinant: i128,
    pub link_determinant: i128,
    pub normalized_determinant: Rational,
    pub prime_summands: Vec<SummandReport>,
    pub in_d: bool,
    pub tiling: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hajos_matrix: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Value>,
    pub chi_slice: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod3: Option<Mod3Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub band_moves: Option<Vec<BandMove>>,
}

/// Determinant of the link, equal to the spanning-tree count of the Tait
/// graph, computed by Kirchhoff's theorem. It also equals the Gram
/// determinant of the flow lattice of the Tait graph.
pub fn link_determinant(g: &PlanarMultigraph) -> i128 {
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

fn failure_json(w: &FailureWitness) -> Value {
    match &w.reason {
        FailureReason::NoFourCycle => json!({
            "edge_count": w.edge_count,
            "reason": "no-four-cycle",
        }),
        FailureReason::NonDecomposing { cycle_edges, vertex } => json!({
            "edge_count": w.edge_count,
            "reason": "non-decomposing-cycle",
            "cycle_edges": cycle_edges,
            "vertex": vertex,
        }),
    }
}

fn collect_band_moves(
    cert: &DecompositionCertificate,
    summand: usize,
    node: String,
    out: &mut Vec<BandMove>,
) {
    if let DecompositionCertificate::Composition { left, right, .. } = cert {
        out.push(BandMove {
            summand,
            node: node.clone(),
            left_crossings: left.edge_total(),
            right_crossings: right.edge_total(),
            moves: ["split", "band"],
        });
        collect_band_moves(left, summand, format!("{node}L"), out);
        collect_band_moves(right, summand, format!("{node}R"), out);
    }
}

/// Runs the full pipeline on a colored diagram: Tait graph, block
/// decomposition, membership classification per block, certificate
/// matrix extraction on success, and the slice verdicts that apply when
/// the normalized determinant is 1.
pub fn classify_link(colored: &ColoredDiagram) -> Result<ClassificationReport, LinkError> {
    let g = tait_graph(colored)?;
    let crossings = g.edge_count();
    let has_loop = (0..crossings).any(|e| g.is_loop(e));
    let block_list = blocks(&g);
    let has_bridge = block_list.iter().any(|b| b.trivial && !b.edges.is_empty());
    let reduced = !has_loop && !has_bridge;
    let rank = crossings + g.component_count() - g.vertex_count();
    let det = link_determinant(&g);
    let normalized = Rational::reduced(det, 4i128.pow(rank as u32));

    let mut prime_summands = Vec::new();
    for b in &block_list {
        if b.edges.is_empty() {
            continue;
        }
        let sub = restrict_to_edges(&g, &b.edges).graph;
        let sub_rank = sub.edge_count() + 1 - sub.vertex_count();
        prime_summands.push(SummandReport {
            crossings: sub.edge_count(),
            rank: sub_rank,
            determinant: link_determinant(&sub),
            in_d: classify_g(&sub).is_ok(),
        });
    }

    let outcome = classify_g(&g);
    let (in_d, certificate, failure, hajos_matrix, band_moves) = match &outcome {
        Ok(certs) => {
            let mut h = HajosMatrix::new(Vec::new())?;
            for b in &block_list {
                if b.edges.is_empty() || b.trivial {
                    continue;
                }
                let sub = restrict_to_edges(&g, &b.edges).graph;
                let sub_certs = classify_g(&sub)
                    .map_err(|w| PlanarError::Invalid(format!("block reclassification failed: {w:?}")))?;
                for c in &sub_certs {
                    let (hb, _) = certificate_hajos(&sub, c)?;
                    h = h.direct_sum(&hb);
                }
            }
            let mut moves = Vec::new();
            for (i, c) in certs.iter().enumerate() {
                collect_band_moves(c, i, String::new(), &mut moves);
            }
            (
                true,
                Some(Value::Array(certs.iter().map(|c| c.to_json()).collect())),
                None,
                Some(h.rows),
                Some(moves),
            )
        }
        Err(w) => (false, None, Some(failure_json(w)), None, None),
    };

    let tiling = in_d;
    let chi_slice = if normalized.is_one() {
        if in_d { "YES" } else { "NO" }
    } else {
        "OUT-OF-SCOPE"
    };
    let mod3 = normalized
        .is_one()
        .then(|| Mod3Check { crossings, residue: crossings % 3 });

    Ok(ClassificationReport {
        crossings,
        components: colored.diagram.components,
        reduced,
        rank,
        lattice_determinant: det,
        link_determinant: det,
        normalized_determinant: normalized,
        prime_summands,
        in_d,
        tiling,
        hajos_matrix,
        certificate,
        failure,
        chi_slice,
        mod3,
        band_moves,
    })
}

/// Outcome of the diagram-level partial-order test. The relation is
/// computed on Tait graphs, which may identify diagrams the drawing-level
/// relation would distinguish; the marker records that.
#[derive(Clone, Debug, Serialize)]
pub struct PreceqReport {
    pub related: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<String>>,
    pub relation_level: &'static str,
}

fn prime_tait(colored: &ColoredDiagram) -> Result<PlanarMultigraph, LinkError> {
    let g = tait_graph(colored)?;
    let nontrivial = blocks(&g).iter().filter(|b| !b.trivial || !b.edges.is_empty()).count();
    if nontrivial > 1 {
        return Err(LinkError::NotPrime(format!(
            "the diagram splits into {nontrivial} summands"
        )));
    }
    classify_g(&g).map_err(|w| LinkError::NotInD(format!("{w:?}")))?;
    Ok(g)
}

/// Tests whether the first diagram precedes the second in the recursive
/// partial order, working on the Tait graphs. Both inputs must be prime
/// members of the closure.
pub fn preceq_link(
    smaller: &ColoredDiagram,
    larger: &ColoredDiagram,
) -> Result<PreceqReport, LinkError> {
    let a = prime_tait(smaller)?;
    let b = prime_tait(larger)?;
    let chain = preceq(&a, &b).map_err(|e| match e {
        PlanarError::NotInG(s) => LinkError::NotInD(s),
        other => LinkError::Planar(other),
    })?;
    Ok(PreceqReport {
        related: chain.is_some(),
        chain: chain.map(|gs| gs.iter().map(write_graph_text).collect()),
        relation_level: "tait-graph",
    })
}
