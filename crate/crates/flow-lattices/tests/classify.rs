mod common;

use common::*;
use flow_lattices::{
    classify_cut_element, classify_flow_element, cut_lattice, decompose_simple_chain,
    flow_lattice, CutClass, FlowClass, FlowError,
};
use graph_core::{EdgeOrientation, PlanarMultigraph};
use lattice_core::{classify_element, short_vectors, ElementClass, SearchLimits};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn reference(g: &PlanarMultigraph) -> EdgeOrientation {
    EdgeOrientation::reference(g)
}

#[test]
fn theta_two_cycle_is_irreducible() {
    let g = theta();
    let f = flow_lattice(&g, &reference(&g));
    let x = vec![1, -1, 0];
    assert!(f.is_flow(&x));
    assert_eq!(
        classify_flow_element(&f, &x).unwrap(),
        FlowClass::Irreducible { cycle: x.clone() }
    );
}

#[test]
fn doubled_cycle_is_not_simple() {
    let g = theta();
    let f = flow_lattice(&g, &reference(&g));
    assert_eq!(
        classify_flow_element(&f, &[2, -2, 0]).unwrap(),
        FlowClass::NotSimple
    );
}

#[test]
fn figure_eight_sum_of_triangles_is_rigid() {
    let g = figure_eight();
    let f = flow_lattice(&g, &reference(&g));
    // The sum of the two triangle classes.
    let cycles = graph_core::enumerate_cycles(&g, None);
    assert_eq!(cycles.len(), 2);
    let (a, b) = (f.cycle_class(&cycles[0]), f.cycle_class(&cycles[1]));
    let x: Vec<i64> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
    assert!(f.is_flow(&x));
    match classify_flow_element(&f, &x).unwrap() {
        FlowClass::Rigid { cycles } => {
            let mut supports: Vec<Vec<usize>> = cycles
                .iter()
                .map(|c| {
                    c.iter().enumerate().filter(|&(_, &v)| v != 0).map(|(e, _)| e).collect()
                })
                .collect();
            supports.sort();
            assert_eq!(supports, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        }
        other => panic!("expected rigid, got {other:?}"),
    }
}

#[test]
fn long_theta_basis_combination_gives_the_third_cycle() {
    // The two basis cycles share the edges of one of the three paths. One
    // combination cancels the shared path and traverses the third cycle;
    // the other doubles the shared edges.
    let g = theta_2_2_3();
    let f = flow_lattice(&g, &reference(&g));
    let cols = f.lattice().columns().clone();
    let combos: Vec<Vec<i64>> = vec![
        cols[0].iter().zip(&cols[1]).map(|(a, b)| a + b).collect(),
        cols[0].iter().zip(&cols[1]).map(|(a, b)| a - b).collect(),
    ];
    let unit: Vec<&Vec<i64>> =
        combos.iter().filter(|x| x.iter().all(|&v| v.abs() <= 1)).collect();
    assert_eq!(unit.len(), 1);
    let support = unit[0].iter().filter(|&&v| v != 0).count();
    assert!(support == 4 || support == 5);
    match classify_flow_element(&f, unit[0]).unwrap() {
        FlowClass::Irreducible { .. } => {}
        other => panic!("expected the third cycle to be irreducible, got {other:?}"),
    }
    let doubled = combos.iter().find(|x| x.iter().any(|&v| v.abs() > 1)).unwrap();
    assert_eq!(classify_flow_element(&f, doubled).unwrap(), FlowClass::NotSimple);
}

#[test]
fn not_a_flow_is_rejected() {
    let g = theta();
    let f = flow_lattice(&g, &reference(&g));
    assert!(matches!(
        classify_flow_element(&f, &[1, 0, 0]),
        Err(FlowError::NotAFlow(_))
    ));
}

#[test]
fn cut_classification_examples() {
    let g = edge_graph();
    let c = cut_lattice(&g, &reference(&g));
    assert_eq!(
        classify_cut_element(&c, &[1]).unwrap(),
        CutClass::Irreducible { side_a: vec![0], side_b: vec![1] }
    );

    // End star of a path: one side is the end vertex, the other the rest.
    let g = path_graph(2);
    let c = cut_lattice(&g, &reference(&g));
    assert_eq!(
        classify_cut_element(&c, &c.star(0)).unwrap(),
        CutClass::Irreducible { side_a: vec![0], side_b: vec![1, 2] }
    );
    // The middle star splits orthogonally into the two end stars, so it is
    // simple but not irreducible.
    assert!(matches!(
        classify_cut_element(&c, &c.star(1)).unwrap(),
        CutClass::Simple { .. }
    ));

    // Opposite-vertex cut of the 4-cycle: both sides disconnect.
    let g = cycle_graph(4);
    let c = cut_lattice(&g, &reference(&g));
    let x: Vec<i64> = c
        .star(0)
        .iter()
        .zip(&c.star(2))
        .map(|(a, b)| a + b)
        .collect();
    assert!(x.iter().all(|&v| v.abs() == 1));
    assert!(matches!(
        classify_cut_element(&c, &x).unwrap(),
        CutClass::Simple { .. }
    ));
    let doubled: Vec<i64> = x.iter().map(|v| 2 * v).collect();
    assert_eq!(classify_cut_element(&c, &doubled).unwrap(), CutClass::NotSimple);
    assert!(matches!(
        classify_cut_element(&c, &[1, 1, 1, 1]),
        Err(FlowError::NotACut(_))
    ));
}

fn expected_class(v: &FlowClass) -> ElementClass {
    match v {
        FlowClass::NotSimple => ElementClass::NotSimple,
        FlowClass::Simple { .. } => ElementClass::SimpleOnly,
        FlowClass::Irreducible { .. } => ElementClass::Irreducible,
        FlowClass::Rigid { .. } => ElementClass::Rigid,
    }
}

/// The graph-side classification agrees with the brute-force lattice
/// classification on every flow of norm at most 12.
#[test]
fn flow_classification_matches_lattice_oracle() {
    let limits = SearchLimits::default();
    let mut graphs: Vec<PlanarMultigraph> =
        vec![theta(), figure_eight(), cycle_graph(3), cycle_graph(1)];
    for seed in 100..118u64 {
        let mut rng = StdRng::seed_from_u64(seed);
        graphs.push(random_planar_map(seed, rng.gen_range(2..=6)));
    }
    for g in &graphs {
        let o = reference(g);
        let f = flow_lattice(g, &o);
        if f.rank() == 0 {
            continue;
        }
        for coeffs in short_vectors(f.gram_lattice(), 12, limits).unwrap() {
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            let x = f.lattice().to_ambient(&coeffs);
            let got = classify_flow_element(&f, &x).unwrap();
            let want = classify_element(f.gram_lattice(), &coeffs, limits).unwrap();
            assert_eq!(expected_class(&got), want, "graph {g:?}, flow {x:?}");
        }
    }
}

#[test]
fn decompose_cycle_and_star_edge_cases() {
    let g = theta();
    let o = reference(&g);
    let cycle = vec![1i64, -1, 0];
    let (eul, cut) = decompose_simple_chain(&g, &o, &cycle).unwrap();
    assert_eq!((eul, cut), (cycle, vec![0, 0, 0]));

    let g = path_graph(2);
    let o = reference(&g);
    let star = cut_lattice(&g, &o).star(1);
    let (eul, cut) = decompose_simple_chain(&g, &o, &star).unwrap();
    assert_eq!((eul, cut), (vec![0, 0], star));
}

#[test]
fn theta_orientations_split_exactly_when_in_the_sum() {
    let g = theta();
    let o = reference(&g);
    let f = flow_lattice(&g, &o);
    let c = cut_lattice(&g, &o);
    let mut in_sum = 0;
    let mut rejected = 0;
    for mask in 0u8..8 {
        let h: Vec<i64> = (0..3).map(|e| if (mask >> e) & 1 == 0 { 1 } else { -1 }).collect();
        match decompose_simple_chain(&g, &o, &h) {
            Ok((eul, cut)) => {
                in_sum += 1;
                assert!(f.is_flow(&eul));
                assert!(c.is_cut(&cut));
                assert!(eul.iter().zip(&cut).all(|(a, b)| a * b == 0));
                let sum: Vec<i64> = eul.iter().zip(&cut).map(|(a, b)| a + b).collect();
                assert_eq!(sum, h);
            }
            Err(FlowError::NotInDirectSum(_)) => rejected += 1,
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }
    assert!(in_sum > 0 && rejected > 0);
    assert_eq!(in_sum + rejected, 8);
}

/// Random simple chains across the corpus: whenever membership holds, the
/// peeling produces an edge-disjoint Eulerian plus cut splitting.
#[test]
fn random_simple_chains_decompose() {
    for seed in 0..25u64 {
        let mut rng = StdRng::seed_from_u64(seed ^ 0xfeed);
        let g = random_planar_map(seed, rng.gen_range(1..=8));
        let o = reference(&g);
        let f = flow_lattice(&g, &o);
        let c = cut_lattice(&g, &o);
        for _ in 0..40 {
            let h: Vec<i64> =
                (0..g.edge_count()).map(|_| rng.gen_range(-1..=1)).collect();
            match decompose_simple_chain(&g, &o, &h) {
                Ok((eul, cut)) => {
                    assert!(f.is_flow(&eul));
                    assert!(c.is_cut(&cut));
                    assert!(eul.iter().zip(&cut).all(|(a, b)| a * b == 0));
                    let sum: Vec<i64> =
                        eul.iter().zip(&cut).map(|(a, b)| a + b).collect();
                    assert_eq!(sum, h);
                }
                Err(FlowError::NotInDirectSum(_)) => {}
                Err(e) => panic!("unexpected error {e:?}"),
            }
        }
    }
}
