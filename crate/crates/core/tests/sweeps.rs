mod common;

use std::collections::BTreeSet;

use litgame_core::classifier::{bipartite_one_lit, classify_graph, dual_graph, orbit_class, OrbitClass, Verdict};
use litgame_core::enumerate::{connected_bipartite_graphs, connected_graphs, trees};
use litgame_core::f2::{adjacency_matrix, F2Vector, QuadraticSpace};
use litgame_core::game::{enumerate_orbits, min_light_number_bruteforce, Configuration};
use litgame_core::graph::{bipartition, generate_graph, is_nondegenerate_line_graph, prufer_decode, Graph, GraphKind};
use litgame_core::transvections::{no_branch_with_two_leaves, tv_orbits, visit_t_class, VectorSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corpus, example, is_invertible};

#[test]
fn tv_orbits_are_quadric_level_sets() {
    for g in corpus(8) {
        let qs = QuadraticSpace::of_graph(&g);
        let n = g.order();
        let orbits = tv_orbits(&VectorSet::standard(&g), 20).unwrap();
        assert_eq!(orbits.orbit_count(), 3);
        let members = orbits.members();
        assert_eq!(members[0], vec![0]);
        for orbit in &members[1..] {
            let q = |m: u64| qs.quadratic(&F2Vector::from_mask(n, m)).unwrap();
            let value = q(orbit[0]);
            assert!(orbit.iter().all(|&m| q(m) == value));
        }
    }
}

#[test]
fn adjacency_maps_vector_orbits_onto_game_orbits() {
    for g in corpus(6) {
        let n = g.order();
        let a = adjacency_matrix(&g);
        let vector_orbits = tv_orbits(&VectorSet::standard(&g), 20).unwrap().members();
        let table = enumerate_orbits(&g, 20).unwrap();
        for orbit in vector_orbits {
            let image: BTreeSet<u64> =
                orbit.iter().map(|&m| a.mul_vec(&F2Vector::from_mask(n, m)).unwrap().to_mask().unwrap()).collect();
            let id = table.orbit_id_of_bits(*image.first().unwrap());
            let target: BTreeSet<u64> = (0..1u64 << n).filter(|&b| table.orbit_id_of_bits(b) == id).collect();
            assert_eq!(image, target);
        }
    }
}

#[test]
fn unit_vectors_sum_neighbouring_dual_vectors() {
    for g in corpus(8) {
        let n = g.order();
        let dual = QuadraticSpace::of_graph(&g).dual_basis().unwrap();
        for s in 0..n {
            let sum = g.neighbors(s).fold(F2Vector::zeros(n), |acc, t| &acc ^ &dual[t]);
            assert_eq!(sum, F2Vector::unit(n, s));
        }
        let d = dual_graph(&g).unwrap();
        let basis = VectorSet::standard(&g);
        for s in 0..n {
            let sum = d.neighbors(s).fold(F2Vector::zeros(n), |acc, t| &acc ^ &basis.vectors()[t]);
            assert_eq!(sum, dual[s]);
        }
    }
}

#[test]
fn bipartite_duals_keep_the_bipartition() {
    for n in [2, 4, 6, 8] {
        for g in connected_bipartite_graphs(n).into_iter().filter(is_invertible) {
            let [side, _] = bipartition(&g).unwrap();
            let d = dual_graph(&g).unwrap();
            for (u, v) in d.edges() {
                assert_ne!(side.contains(&u), side.contains(&v));
            }
        }
    }
}

#[test]
fn cube_is_the_smallest_odd_bipartite_counterexample() {
    let cube = Graph::from_edges(
        8,
        &[(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)],
    )
    .unwrap();
    assert!(is_invertible(&cube));
    assert!(!bipartite_one_lit(&cube).unwrap());
    assert_eq!(min_light_number_bruteforce(&cube, 20).unwrap(), 2);
    for n in [4, 6] {
        for g in connected_bipartite_graphs(n).into_iter().filter(is_invertible) {
            assert!(g.degrees().iter().any(|d| d % 2 == 0));
        }
    }
}

#[test]
fn random_order_ten_graphs_have_three_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checked = 0;
    while checked < 25 {
        let code: Vec<usize> = (0..8).map(|_| rng.gen_range(0..10)).collect();
        let mut edges = prufer_decode(10, &code);
        for u in 0..10 {
            for v in u + 1..10 {
                if rng.gen_bool(0.3) && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        if !is_invertible(&g) || is_nondegenerate_line_graph(&g) {
            continue;
        }
        checked += 1;
        let table = enumerate_orbits(&g, 20).unwrap();
        assert_eq!(table.orbit_count(), 3);
        let report = classify_graph(&g);
        assert_eq!(report.min_light, Some(table.min_light_number() as u8));
        let sizes = report.orbit_sizes.unwrap();
        for bits in 0..1u64 << 10 {
            let f = Configuration::from_bits(10, bits).unwrap();
            let size = table.orbits()[table.orbit_id(&f)].size;
            let expected = match orbit_class(&g, &f).unwrap() {
                OrbitClass::Zero => 1,
                OrbitClass::Q0 => u64::try_from(&sizes.q0_nonzero).unwrap(),
                OrbitClass::Q1 => u64::try_from(&sizes.q1).unwrap(),
            };
            assert_eq!(size, expected);
        }
    }
}

#[test]
fn tree_shaped_pairings_never_branch_into_two_leaves() {
    let mut trees_seen = 0;
    for g in corpus(6) {
        visit_t_class(&VectorSet::standard(&g), 2, |set, _| {
            if let Ok(p) = set.pairing_graph() {
                if p.is_tree() {
                    trees_seen += 1;
                    assert!(no_branch_with_two_leaves(&p));
                }
            }
            true
        });
    }
    for n in [4, 6, 8] {
        for t in trees(n).into_iter().filter(is_invertible) {
            trees_seen += 1;
            assert!(no_branch_with_two_leaves(&VectorSet::standard(&t).pairing_graph().unwrap()));
        }
    }
    assert!(trees_seen > 0);
}

#[test]
fn verdicts_follow_structure() {
    let claw = generate_graph(GraphKind::Star, &[4], None).unwrap();
    let report = classify_graph(&claw);
    assert_eq!((report.verdict, report.rank), (Verdict::DegenerateOutOfScope, 2));
    let p4 = generate_graph(GraphKind::Path, &[4], None).unwrap();
    assert_eq!(classify_graph(&p4).verdict, Verdict::LineGraphOutOfScope);
    assert_eq!(classify_graph(&example()).verdict, Verdict::Classified);
    let grid = generate_graph(GraphKind::Grid, &[2, 3], None).unwrap();
    let report = classify_graph(&grid);
    assert!(report.nondegenerate);
    assert_eq!(report.one_lit, Some(true));
}

#[test]
fn line_graph_verdict_matches_small_class() {
    // Every nondegenerate connected graph of order at most 4 is a line graph.
    for n in 1..=4 {
        for g in connected_graphs(n).into_iter().filter(is_invertible) {
            assert!(is_nondegenerate_line_graph(&g));
        }
    }
}
