use crate::{EdgeEnd, GraphError, PlanarMultigraph, VertexId};

/// Parses the plain text graph format:
///
/// ```text
/// V 3
/// E 0 0 1
/// E 1 1 2
/// R 0: 0.0
/// R 1: 0.1 1.0
/// R 2: 1.1
/// ```
///
/// Edge ids must cover 0..m. Vertices with no `R` line get an empty
/// rotation. `#` starts a comment.
pub fn parse_graph_text(input: &str) -> Result<PlanarMultigraph, GraphError> {
    let mut vertex_count: Option<usize> = None;
    let mut edges: Vec<Option<(VertexId, VertexId)>> = Vec::new();
    let mut rotations: Vec<(usize, Vec<EdgeEnd>)> = Vec::new();

    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| GraphError::Parse(format!("line {}: {}", lineno + 1, msg));
        let mut parts = line.split_whitespace();
        match parts.next().unwrap() {
            "V" => {
                let n: usize = parts
                    .next()
                    .ok_or_else(|| err("missing vertex count".into()))?
                    .parse()
                    .map_err(|_| err("bad vertex count".into()))?;
                if vertex_count.replace(n).is_some() {
                    return Err(err("duplicate V line".into()));
                }
            }
            "E" => {
                let mut num = |what: &str| -> Result<usize, GraphError> {
                    parts
                        .next()
                        .ok_or_else(|| err(format!("missing {what}")))?
                        .parse()
                        .map_err(|_| err(format!("bad {what}")))
                };
                let id = num("edge id")?;
                let u = num("endpoint")?;
                let v = num("endpoint")?;
                if edges.len() <= id {
                    edges.resize(id + 1, None);
                }
                if edges[id].replace((u, v)).is_some() {
                    return Err(err(format!("duplicate edge id {id}")));
                }
            }
            "R" => {
                let rest = line[1..].trim_start();
                let (vtx, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| err("R line needs a colon".into()))?;
                let v: usize = vtx
                    .trim()
                    .parse()
                    .map_err(|_| err("bad vertex id in R line".into()))?;
                let mut rot = Vec::new();
                for tok in ends.split_whitespace() {
                    let (e, w) = tok
                        .split_once('.')
                        .ok_or_else(|| err(format!("bad end `{tok}`")))?;
                    let edge: usize =
                        e.parse().map_err(|_| err(format!("bad end `{tok}`")))?;
                    let which: u8 = match w {
                        "0" => 0,
                        "1" => 1,
                        _ => return Err(err(format!("bad end `{tok}`"))),
                    };
                    rot.push(EdgeEnd::new(edge, which));
                }
                rotations.push((v, rot));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let n = vertex_count.ok_or_else(|| GraphError::Parse("missing V line".into()))?;
    let edges: Vec<(VertexId, VertexId)> = edges
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| GraphError::Parse(format!("missing edge id {i}"))))
        .collect::<Result<_, _>>()?;
    let mut rots: Vec<Vec<EdgeEnd>> = vec![Vec::new(); n];
    for (v, rot) in rotations {
        if v >= n {
            return Err(GraphError::Parse(format!("R line for unknown vertex {v}")));
        }
        if !rots[v].is_empty() {
            return Err(GraphError::Parse(format!("duplicate R line for vertex {v}")));
        }
        rots[v] = rot;
    }
    PlanarMultigraph::build(n, edges, rots)
}

pub fn write_graph_text(g: &PlanarMultigraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("V {}\n", g.vertex_count()));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        out.push_str(&format!("E {e} {u} {v}\n"));
    }
    for v in 0..g.vertex_count() {
        let rot = g.rotation(v);
        if rot.is_empty() {
            continue;
        }
        let ends: Vec<String> = rot.iter().map(|e| format!("{}.{}", e.edge, e.which)).collect();
        out.push_str(&format!("R {}: {}\n", v, ends.join(" ")));
    }
    out
}
