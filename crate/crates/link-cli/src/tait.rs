use crate::color::{corner_face, ColoredDiagram};
use crate::LinkError;
use graph_core::{EdgeEnd, PlanarMultigraph};

/// The checkerboard graph on the black faces: one vertex per black face,
/// one edge per crossing, with edge id equal to the crossing index. The
/// first endpoint of each edge is the black face at the corner between
/// tuple slots 0 and 1; the rotation at each vertex follows the boundary
/// walk of its face.
pub fn tait_graph(colored: &ColoredDiagram) -> Result<PlanarMultigraph, LinkError> {
    let d = &colored.diagram;
    if d.crossings.is_empty() {
        let g = PlanarMultigraph::build(1, Vec::new(), vec![Vec::new()])?;
        return Ok(g);
    }
    let mut vertex_of_face = vec![usize::MAX; colored.black.len()];
    for (v, &f) in colored.black_faces.iter().enumerate() {
        vertex_of_face[f] = v;
    }
    let edges: Vec<(usize, usize)> = (0..d.crossings.len())
        .map(|c| {
            (
                vertex_of_face[corner_face(d, c, 0)],
                vertex_of_face[corner_face(d, c, 2)],
            )
        })
        .collect();
    let rotations: Vec<Vec<EdgeEnd>> = colored
        .black_faces
        .iter()
        .map(|&f| {
            d.map.faces()[f]
                .walk
                .iter()
                .map(|dart| {
                    let c = d.map.end_vertex(dart.departure_end());
                    let pos = d
                        .map
                        .rotation(c)
                        .iter()
                        .position(|&e| e == dart.departure_end())
                        .unwrap();
                    let corner = (pos + 3) % 4;
                    debug_assert!(corner == 0 || corner == 2);
                    EdgeEnd::new(c, if corner == 0 { 0 } else { 1 })
                })
                .collect()
        })
        .collect();
    Ok(PlanarMultigraph::build(colored.black_faces.len(), edges, rotations)?)
}
