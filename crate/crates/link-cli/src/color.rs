use crate::pd::LinkDiagram;
use crate::LinkError;
use graph_core::Dart;

/// A diagram together with its checkerboard face coloring. At every
/// crossing the black corners are the one between tuple slots 0 and 1 and
/// the one between slots 2 and 3; the coloring is consistent across the
/// whole sphere exactly when the diagram is alternating.
#[derive(Clone, Debug)]
pub struct ColoredDiagram {
    pub diagram: LinkDiagram,
    /// Face id -> black?
    pub black: Vec<bool>,
    pub black_faces: Vec<usize>,
}

/// The face containing the corner between rotation slots `i` and `i + 1`
/// at crossing `c`.
pub fn corner_face(d: &LinkDiagram, c: usize, i: usize) -> usize {
    let end = d.map.rotation(c)[(i + 1) % 4];
    d.map.face_of_dart(Dart { edge: end.edge, from: end.which })
}

/// Checkerboard-colors an alternating diagram. Crossingless diagrams must
/// be a single round unknot; anything split is rejected.
pub fn chessboard(diagram: LinkDiagram) -> Result<ColoredDiagram, LinkError> {
    if diagram.crossings.is_empty() {
        if diagram.unknot_components != 1 {
            return Err(LinkError::SplitDiagram(
                "a crossingless diagram must be a single round unknot".into(),
            ));
        }
        return Ok(ColoredDiagram { diagram, black: Vec::new(), black_faces: Vec::new() });
    }
    if diagram.unknot_components > 0 {
        return Err(LinkError::SplitDiagram(
            "crossingless components split off from the rest of the diagram".into(),
        ));
    }
    if !diagram.map.is_connected() {
        return Err(LinkError::SplitDiagram(
            "the diagram falls apart into distant pieces".into(),
        ));
    }

    let nf = diagram.map.faces().len();
    let mut color: Vec<Option<bool>> = vec![None; nf];
    for c in 0..diagram.crossings.len() {
        for i in 0..4 {
            let f = corner_face(&diagram, c, i);
            let want = i % 2 == 0;
            match color[f] {
                None => color[f] = Some(want),
                Some(have) if have != want => {
                    return Err(LinkError::NotAlternating(format!(
                        "face {f} would need both colors at crossing {c}"
                    )));
                }
                _ => {}
            }
        }
    }
    let black: Vec<bool> = color.into_iter().map(|c| c.unwrap_or(false)).collect();
    let black_faces: Vec<usize> = (0..nf).filter(|&f| black[f]).collect();
    Ok(ColoredDiagram { diagram, black, black_faces })
}
