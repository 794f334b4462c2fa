use litgame_core::classifier::OrbitClassifier;
use litgame_core::enumerate::{canonical_code, is_isomorphic};
use litgame_core::f2::{adjacency_matrix, bilinear_mask, quadratic_mask, F2Matrix, F2Vector, Inversion, QuadraticSpace};
use litgame_core::game::{apply_move, replay, solve, Configuration, OrbitDistances};
use litgame_core::graph::{bipartition, generate_graph, parse_graph, prufer_decode, Graph, GraphJson, GraphKind};
use litgame_core::transvections::transvection_apply;
use proptest::prelude::*;

/// Connected graphs: a random tree plus a random set of extra edges.
fn graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), prop::collection::vec(0..n, n.saturating_sub(2)), prop::collection::vec(prop::bool::weighted(0.3), pairs))
        })
        .prop_map(|(n, code, extra)| {
            let mut edges = if n >= 2 { prufer_decode(n, &code) } else { Vec::new() };
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

fn nondegenerate_graph() -> impl Strategy<Value = Graph> {
    graph(2, 12).prop_filter("invertible adjacency", |g| matches!(adjacency_matrix(g).invert(), Inversion::Invertible(_)))
}

/// Vertices reachable from `v` by walks of odd length.
fn odd_reach(g: &Graph, v: usize) -> u64 {
    let step = |set: u64| (0..g.order()).filter(|&u| set >> u & 1 == 1).fold(0, |acc, u| acc | g.neighbor_mask(u));
    let (mut even, mut odd) = (1u64 << v, 0u64);
    for _ in 0..2 * g.order() {
        let (next_odd, next_even) = (odd | step(even), even | step(odd));
        odd = next_odd;
        even = next_even;
    }
    odd
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quadratic_polarization(g in graph(1, 16), u in any::<u64>(), v in any::<u64>()) {
        let n = g.order();
        let mask = if n == 64 { u64::MAX } else { (1 << n) - 1 };
        let qs = QuadraticSpace::of_graph(&g);
        let (u, v) = (F2Vector::from_mask(n, u & mask), F2Vector::from_mask(n, v & mask));
        let lhs = qs.quadratic(&(&u ^ &v)).unwrap();
        let rhs = qs.quadratic(&u).unwrap() ^ qs.quadratic(&v).unwrap() ^ qs.bilinear(&u, &v).unwrap();
        prop_assert_eq!(lhs, rhs);
        let rows = g.rows();
        prop_assert_eq!(quadratic_mask(rows, u.to_mask().unwrap()), qs.quadratic(&u).unwrap());
        prop_assert_eq!(bilinear_mask(rows, u.to_mask().unwrap(), v.to_mask().unwrap()), qs.bilinear(&u, &v).unwrap());
    }

    #[test]
    fn inversion_is_two_sided(n in 1usize..40, seed in prop::collection::vec(any::<u64>(), 40)) {
        let mask = (1u64 << n) - 1;
        let m = F2Matrix::from_mask_rows(&seed[..n].iter().map(|r| r & mask).collect::<Vec<_>>());
        match m.invert() {
            Inversion::Invertible(inv) => {
                prop_assert!(inv.mul(&m).unwrap().is_identity());
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert_eq!(m.rank(), n);
            }
            Inversion::Singular { rank } => {
                prop_assert!(rank < n);
                prop_assert_eq!(rank, m.rank());
            }
        }
    }

    #[test]
    fn nondegenerate_graphs_have_even_order(g in nondegenerate_graph()) {
        prop_assert_eq!(g.order() % 2, 0);
    }

    #[test]
    fn dual_basis_is_dual(g in nondegenerate_graph()) {
        let qs = QuadraticSpace::of_graph(&g);
        let dual = qs.dual_basis().unwrap();
        let n = g.order();
        for s in 0..n {
            for t in 0..n {
                prop_assert_eq!(qs.bilinear(&dual[s], &F2Vector::unit(n, t)).unwrap(), s == t);
            }
        }
    }

    #[test]
    fn moves_are_involutions(g in graph(1, 20), bits in any::<u64>(), s in 0usize..20) {
        let n = g.order();
        let s = s % n;
        let f = Configuration::from_bits(n, bits & ((1 << n) - 1)).unwrap();
        let once = apply_move(&g, &f, s).unwrap();
        prop_assert_eq!(once.is_on(s), f.is_on(s));
        prop_assert_eq!(apply_move(&g, &once, s).unwrap(), f);
        if !f.is_on(s) {
            prop_assert_eq!(once, f);
        }
    }

    #[test]
    fn legal_moves_preserve_orbit_class(g in nondegenerate_graph(), bits in any::<u64>(), word in prop::collection::vec(0usize..12, 0..20)) {
        let n = g.order();
        let Ok(classifier) = OrbitClassifier::new(&g) else { return Ok(()) };
        let mut f = Configuration::from_bits(n, bits & ((1 << n) - 1)).unwrap();
        let class = classifier.classify(&f).unwrap();
        for s in word {
            f = apply_move(&g, &f, s % n).unwrap();
            prop_assert_eq!(classifier.classify(&f).unwrap(), class);
        }
    }

    #[test]
    fn bipartition_matches_odd_walks(g in graph(1, 14)) {
        let odd_cycle = (0..g.order()).any(|v| odd_reach(&g, v) >> v & 1 == 1);
        match bipartition(&g) {
            None => prop_assert!(odd_cycle),
            Some([a, b]) => {
                prop_assert!(!odd_cycle);
                prop_assert_eq!(a.len() + b.len(), g.order());
                for (u, v) in g.edges() {
                    prop_assert_ne!(a.contains(&u), a.contains(&v));
                }
            }
        }
    }

    #[test]
    fn generated_graphs_are_simple(kind in 0usize..6, p in 1i64..9, q in 1i64..9, seed in any::<u64>()) {
        let (kind, params) = match kind {
            0 => (GraphKind::Path, vec![p]),
            1 => (GraphKind::Cycle, vec![p + 2]),
            2 => (GraphKind::Complete, vec![p]),
            3 => (GraphKind::Star, vec![p]),
            4 => (GraphKind::Grid, vec![p, q]),
            _ => (GraphKind::Tree, vec![p + q]),
        };
        let g = generate_graph(kind, &params, Some(seed)).unwrap();
        let rows = g.rows();
        for u in 0..g.order() {
            prop_assert_eq!(rows[u] >> u & 1, 0);
            for v in 0..g.order() {
                prop_assert_eq!(rows[u] >> v & 1, rows[v] >> u & 1);
            }
        }
        if kind == GraphKind::Tree {
            prop_assert!(g.is_tree());
        }
    }

    #[test]
    fn text_and_json_round_trip(g in graph(1, 20)) {
        prop_assert_eq!(&parse_graph(&g.to_text()).unwrap(), &g);
        let json: GraphJson = serde_json::from_str(&serde_json::to_string(&g.to_json()).unwrap()).unwrap();
        prop_assert_eq!(&Graph::try_from(&json).unwrap(), &g);
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(1, 9), perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.order()).collect();
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn vertex_transvections_are_isometries(g in graph(1, 12), x in any::<u64>(), y in any::<u64>(), s in 0usize..12) {
        let n = g.order();
        let s = s % n;
        let qs = QuadraticSpace::of_graph(&g);
        let alpha = F2Vector::unit(n, s);
        let (x, y) = (F2Vector::from_mask(n, x & ((1 << n) - 1)), F2Vector::from_mask(n, y & ((1 << n) - 1)));
        let (tx, ty) = (transvection_apply(&qs, &alpha, &x).unwrap(), transvection_apply(&qs, &alpha, &y).unwrap());
        prop_assert_eq!(qs.bilinear(&tx, &ty).unwrap(), qs.bilinear(&x, &y).unwrap());
        prop_assert_eq!(qs.quadratic(&tx).unwrap(), qs.quadratic(&x).unwrap());
        prop_assert_eq!(transvection_apply(&qs, &alpha, &tx).unwrap(), x);
    }

    #[test]
    fn solutions_are_legal_and_minimal(g in graph(1, 10), bits in any::<u64>()) {
        let n = g.order();
        let f = Configuration::from_bits(n, bits & ((1 << n) - 1)).unwrap();
        let solution = solve(&g, &f, 20).unwrap();
        let outcome = replay(&g, &f, &solution.moves).unwrap();
        prop_assert!(outcome.all_legal());
        prop_assert_eq!(outcome.end, solution.target);
        let distances = OrbitDistances::new(&g, &f, 20).unwrap();
        prop_assert_eq!(solution.target.weight(), distances.target_weight());
        prop_assert_eq!(distances.distance(&f), Some(solution.moves.len() as u32));
    }

    #[test]
    fn bitstrings_round_trip(n in 1usize..64, bits in any::<u64>()) {
        let v = F2Vector::from_mask(n, bits & (u64::MAX >> (64 - n)));
        prop_assert_eq!(v.to_bitstring().parse::<F2Vector>().unwrap(), v.clone());
        let f = Configuration::from_bits(n, v.to_mask().unwrap()).unwrap();
        prop_assert_eq!(Configuration::parse(&f.to_bitstring(), n, false).unwrap(), f);
    }
}
