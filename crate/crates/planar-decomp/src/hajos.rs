use crate::classify::DecompositionCertificate;
use crate::decompose::decompose;
use crate::PlanarError;
use cube_tiling::HajosMatrix;
use graph_core::PlanarMultigraph;

/// Builds the certificate matrix of the flow lattice from a composition
/// certificate, together with oriented cycle classes realizing its
/// columns in edge coordinates, each edge oriented by its stored endpoint
/// order. The Gram matrix of the returned classes is verified to equal
/// the product of the matrix with its transpose.
pub fn certificate_hajos(
    g: &PlanarMultigraph,
    cert: &DecompositionCertificate,
) -> Result<(HajosMatrix, Vec<Vec<i64>>), PlanarError> {
    let (h, cycles) = build(g, cert)?;
    let n = h.rank;
    for i in 0..n {
        for j in i..n {
            let dot: i64 = cycles[i].iter().zip(&cycles[j]).map(|(a, b)| a * b).sum();
            let want: i64 = (0..n).map(|k| h.rows[k][i] * h.rows[k][j]).sum();
            if dot != want {
                return Err(PlanarError::Invalid(format!(
                    "cycle pairing ({i},{j}) = {dot} disagrees with the certificate value {want}"
                )));
            }
        }
    }
    Ok((h, cycles))
}

fn build(
    g: &PlanarMultigraph,
    cert: &DecompositionCertificate,
) -> Result<(HajosMatrix, Vec<Vec<i64>>), PlanarError> {
    let (cycle, f1, f2, left, right) = match cert {
        DecompositionCertificate::Singleton | DecompositionCertificate::Edge => {
            return Ok((HajosMatrix::new(Vec::new())?, Vec::new()));
        }
        DecompositionCertificate::Composition { cycle, f1, f2, left, right, .. } => {
            (cycle, *f1, *f2, left, right)
        }
    };
    let (fa, fb) = decompose(g, cycle);
    if fa.distinguished != f1 || fb.distinguished != f2 {
        return Err(PlanarError::Invalid(
            "certificate distinguished edges do not match the replayed factors".into(),
        ));
    }
    let (h1, cyc1) = build(&fa.graph, left)?;
    let (h2, cyc2) = build(&fb.graph, right)?;

    let m = g.edge_count();
    let [v1, v2, v3, v4] = cycle.vertices;
    let [e1, e2, e3, e4] = cycle.edges;
    let dir2 = g.ref_sign(e2, v2, v3);

    // A factor flow crossing the distinguished edge crosses the two-edge
    // cycle path in the composed graph. The distinguished coordinate is
    // oriented from v1 (resp. v2) towards the merged end, so the path
    // legs pick up the reference signs of e1, e2 (resp. e2, e3).
    let r1 = g.ref_sign(e1, v1, v2);
    let mut mapped1: Vec<Vec<i64>> = cyc1
        .iter()
        .map(|x| {
            let mut y = vec![0i64; m];
            for (e, ne) in fa.edge_map.iter().enumerate() {
                if let Some(ne) = ne {
                    y[e] = x[*ne];
                }
            }
            y[e1] = x[f1] * r1;
            y[e2] = x[f1] * dir2;
            y
        })
        .collect();
    let r3 = g.ref_sign(e3, v3, v4);
    let mut mapped2: Vec<Vec<i64>> = cyc2
        .iter()
        .map(|x| {
            let mut y = vec![0i64; m];
            for (e, ne) in fb.edge_map.iter().enumerate() {
                if let Some(ne) = ne {
                    y[e] = x[*ne];
                }
            }
            y[e3] = x[f2] * r3;
            y[e2] = x[f2] * dir2;
            y
        })
        .collect();
    // Orient each factor family so its crossings of e2 agree with the
    // distinguished 4-cycle; a whole-family flip preserves its Gram.
    for family in [&mut mapped1, &mut mapped2] {
        if family.iter().any(|y| y[e2] * dir2 < 0) {
            for y in family.iter_mut() {
                for v in y.iter_mut() {
                    *v = -*v;
                }
            }
        }
    }
    let mut z = vec![0i64; m];
    z[e1] = g.ref_sign(e1, v1, v2);
    z[e2] = dir2;
    z[e3] = g.ref_sign(e3, v3, v4);
    z[e4] = g.ref_sign(e4, v4, v1);

    let mut cycles: Vec<Vec<i64>> = mapped1;
    cycles.extend(mapped2);
    cycles.push(z);

    let single = HajosMatrix::new(vec![vec![2]])?;
    let mut rows = h1.direct_sum(&h2).direct_sum(&single).rows;
    let n = rows.len();
    for (i, y) in cycles.iter().enumerate().take(n - 1) {
        rows[n - 1][i] = if y[e2] != 0 { 1 } else { 0 };
    }
    Ok((HajosMatrix::new(rows)?, cycles))
}
