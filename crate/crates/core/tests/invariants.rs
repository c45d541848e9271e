//! Cross-module invariant suites that go beyond per-module unit tests:
//! exhaustive small-graph cross-checks and property tests.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use triarc::gen;
use triarc::graph::{
    is_connected, is_two_edge_connected, parse_edge_list, serialize_edge_list, SimpleGraph,
};
use triarc::ham_cycle::{check_conditions, is_x_hamiltonian};
use triarc::three_arc::three_arc_graph;
use triarc::verify::brute_force_hamiltonian_with_cap;

/// Removing any single edge of a 2-edge-connected graph keeps it
/// connected; the low-link implementation agrees with explicit removal on
/// every labeled graph with up to seven vertices.
#[test]
fn two_edge_connectivity_matches_explicit_removal() {
    for n in 1..=7usize {
        let bits = n * (n - 1) / 2;
        for mask in 0u64..(1 << bits) {
            let g = gen::from_bitmask(n, mask);
            let brute = {
                if !is_connected(&g) {
                    false
                } else {
                    g.edges().iter().all(|&(u, v)| {
                        let mut h = SimpleGraph::new(n);
                        for (a, b) in g.edges() {
                            if (a, b) != (u, v) {
                                h.add_edge(a, b).unwrap();
                            }
                        }
                        is_connected(&h)
                    })
                }
            };
            assert_eq!(
                is_two_edge_connected(&g),
                brute,
                "mismatch on {}",
                serialize_edge_list(&g)
            );
        }
    }
}

/// The hamiltonicity decision agrees with the brute-force oracle on every
/// labeled graph without isolated vertices up to five vertices, including
/// disconnected ones, plus a sample of six-vertex graphs.
#[test]
fn decision_equivalence_covers_disconnected_graphs() {
    let run = |g: &SimpleGraph| {
        if (0..g.vertex_count()).any(|v| g.degree(v) == 0) || g.edge_count() == 0 {
            return;
        }
        let (x, _) = three_arc_graph(g).unwrap();
        let oracle = brute_force_hamiltonian_with_cap(&x, 64).unwrap();
        assert_eq!(is_x_hamiltonian(g), oracle, "on {}", serialize_edge_list(g));
        assert_eq!(is_x_hamiltonian(g), check_conditions(g).all_hold());
    };
    for n in 2..=5usize {
        let bits = n * (n - 1) / 2;
        for mask in 0u64..(1 << bits) {
            run(&gen::from_bitmask(n, mask));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xD15C);
    for _ in 0..800 {
        let mask: u64 = rng.gen_range(0..(1 << 15));
        run(&gen::from_bitmask(6, mask));
    }
}

/// The endpoint case analysis of the path pipeline covers every pattern
/// that arises on the Petersen graph: all 870 ordered arc pairs certify.
#[test]
fn petersen_arc_pair_sweep_never_hits_an_unhandled_pattern() {
    let done = triarc::ham_path::exhaustive_arc_pair_sweep(&gen::petersen()).unwrap();
    assert_eq!(done, 870);
}

/// A sparse graph whose minimal odd paths run through prescribed tails
/// (and whose degree-three tails trigger the withheld-bounce cases): every
/// ordered arc pair still certifies.
#[test]
fn sparse_fixture_arc_pair_sweep_certifies() {
    let g = SimpleGraph::from_edges(
        8,
        &[
            (0, 1), (0, 2), (0, 3), (2, 3),
            (1, 4), (1, 5), (4, 5),
            (2, 6), (3, 6), (6, 7), (4, 7), (5, 7),
        ],
    )
    .unwrap();
    let done = triarc::ham_path::exhaustive_arc_pair_sweep(&g).unwrap();
    assert_eq!(done, 552);
}

/// Mutations of the golden cycle are caught with the right defect kinds.
#[test]
fn golden_cycle_mutations_are_rejected() {
    use triarc::verify::{validate_cycle, ValidationErrorKind};

    let g = gen::petersen();
    let (x, idx) = three_arc_graph(&g).unwrap();
    let golden = common::golden_petersen_cycle();

    let mut swapped = golden.clone();
    swapped.swap(4, 11);
    let err = validate_cycle(&x, &idx, &swapped).unwrap_err();
    assert_eq!(err.kind, ValidationErrorKind::NonAdjacentPair);

    let prefix = &golden[..29];
    let err = validate_cycle(&x, &idx, prefix).unwrap_err();
    assert_eq!(err.kind, ValidationErrorKind::WrongLength);
}

/// Random eligible graphs keep the path pipeline honest away from the
/// named fixtures.
#[test]
fn random_eligible_graphs_yield_verified_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    for _ in 0..8 {
        let g = gen::random_hamilton_path_eligible(9, 8, &mut rng);
        let arcs: Vec<triarc::Arc> = (0..g.vertex_count())
            .flat_map(|u| g.neighbors(u).iter().map(move |&w| triarc::Arc::new(u, w)))
            .collect();
        for k in 0..6 {
            let a1 = arcs[(7 * k + 1) % arcs.len()];
            let a2 = arcs[(11 * k + 5) % arcs.len()];
            if a1 == a2 {
                continue;
            }
            let path = triarc::ham_path::hamilton_path_of_x(&g, a1, a2)
                .unwrap_or_else(|e| panic!("failed on {}: {e}", serialize_edge_list(&g)));
            assert!(path.verified);
            assert_eq!(path.len(), 2 * g.edge_count());
        }
    }
}

/// The constructive path route needs an Eulerian tour through the two
/// single edges at the tail, which cannot exist when those edges separate
/// the tail from the heads' side. On such inputs (2-edge-connected but
/// with a cut vertex at the tail) the pipeline must refuse loudly rather
/// than emit anything, even though the target path itself exists.
#[test]
fn cut_separated_tail_is_refused_not_miscertified() {
    // Two K4 blocks meeting only at vertex 8; the prescribed arcs point
    // into one block, the tail's other edges into the other.
    let mut edges = Vec::new();
    for u in 0..4usize {
        for v in (u + 1)..4 {
            edges.push((u, v));
        }
    }
    for u in 4..8usize {
        for v in (u + 1)..8 {
            edges.push((u, v));
        }
    }
    edges.extend([(8, 0), (8, 1), (8, 4), (8, 5)]);
    let g = SimpleGraph::from_edges(9, &edges).unwrap();
    assert!(triarc::ham_path::check_hypotheses(&g).all_hold());

    let a1 = triarc::Arc::new(8, 0);
    let a2 = triarc::Arc::new(8, 1);
    match triarc::ham_path::hamilton_path_of_x(&g, a1, a2) {
        Err(triarc::Error::Internal(msg)) => assert!(msg.contains("anchors"), "{msg}"),
        other => panic!("expected a loud refusal, got {other:?}"),
    }

    // The path exists; only the constructive route is out of reach here.
    let (x, idx) = three_arc_graph(&g).unwrap();
    let i = idx.index_of(a1).unwrap();
    let j = idx.index_of(a2).unwrap();
    assert!(triarc::verify::brute_force_hamilton_path_with_cap(&x, i, j, 64).unwrap());
}

/// A golden Eulerian tour of the doubled Petersen graph, rebuilt with
/// explicit edge ids: it admits a perfect visit/arc matching at every
/// vertex, induces the visit (0, 1, 2), and chaining any fixed matchings
/// along it yields a valid Hamilton cycle of the 3-arc graph.
#[test]
fn golden_petersen_tour_induces_a_valid_cycle() {
    use triarc::euler::{build_h, perfect_matching, visits_of_trail, VisitDecomposition};
    use triarc::graph::{doubled, Trail};
    use triarc::verify::validate_cycle;
    use triarc::Arc;

    let g = gen::petersen();
    let m = doubled(&g);
    // Outer cycle 0..5, pentagram 5..10, spokes i <-> i+5.
    let route = [
        0, 1, 2, 3, 4, 0, 5, 8, 6, 9, 7, 5, 0, 1, 6, 9, 4, 3, 8, 6, 1, 2, 7, 5, 8, 3, 2, 7,
        9, 4, 0,
    ];
    let mut used = vec![false; m.edge_count()];
    let mut edge_ids = Vec::with_capacity(30);
    for pair in route.windows(2) {
        let id = m
            .incident_edges(pair[0])
            .iter()
            .copied()
            .find(|&e| m.other_end(e, pair[0]) == pair[1] && !used[e])
            .expect("the golden tour uses each copy once");
        used[id] = true;
        edge_ids.push(id);
    }
    let tour = Trail::new(route.to_vec(), edge_ids, true);
    tour.validate(&m).unwrap();

    let at_one = visits_of_trail(&tour, 1).unwrap();
    assert!(at_one.iter().any(|p| (p.entry, p.exit) == (0, 2)));

    // Fix a matching per vertex, then read the cycle off the tour.
    let mut queues: Vec<std::collections::VecDeque<Arc>> = (0..10)
        .map(|v| {
            let j = VisitDecomposition { mid: v, visits: visits_of_trail(&tour, v).unwrap() };
            let arcs: Vec<Arc> = g.neighbors(v).iter().map(|&h| Arc::new(v, h)).collect();
            let matching = perfect_matching(&build_h(&j, &arcs).unwrap())
                .expect("the golden tour matches everywhere");
            matching.pairs.into_iter().map(|(_, a)| a).collect()
        })
        .collect();
    let verts = tour.verts();
    let mut seq = Vec::with_capacity(30);
    for mid in verts.iter().take(30).skip(1) {
        seq.push(queues[*mid].pop_front().unwrap());
    }
    seq.push(queues[verts[0]].pop_front().unwrap()); // wrap-around visit
    let (x, idx) = three_arc_graph(&g).unwrap();
    validate_cycle(&x, &idx, &seq).unwrap();
}

fn arbitrary_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..12, any::<u64>()).prop_map(|(n, seed)| {
        let bits = n * (n - 1) / 2;
        let mask = if bits == 0 { 0 } else { seed & ((1u64 << bits) - 1) };
        gen::from_bitmask(n, mask)
    })
}

proptest! {
    #[test]
    fn serialization_round_trips(g in arbitrary_graph()) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn three_arc_adjacency_is_symmetric(g in arbitrary_graph()) {
        prop_assume!(g.edge_count() > 0);
        let (x, idx) = three_arc_graph(&g).unwrap();
        for i in 0..idx.len() {
            for j in 0..idx.len() {
                prop_assert_eq!(x.has_edge(i, j), x.has_edge(j, i));
                prop_assert_eq!(
                    triarc::verify::arcs_adjacent(&idx, idx.arc(i), idx.arc(j)),
                    x.has_edge(i, j)
                );
            }
        }
    }
}
