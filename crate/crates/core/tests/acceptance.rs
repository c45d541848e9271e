//! Acceptance suite: every criterion runs exactly, prints one pass/fail
//! line, and enforces its time budget.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use triarc::euler::{
    build_h, enumerate_decompositions, has_twin_visits, perfect_matching, visits_of_trail,
    VisitDecomposition,
};
use triarc::gen;
use triarc::graph::{doubled, is_connected, Multigraph, SimpleGraph};
use triarc::ham_cycle::{check_conditions, hamilton_cycle_of_x, is_x_hamiltonian};
use triarc::ham_path::{exhaustive_arc_pair_sweep, has_all_pairs_odd_paths};
use triarc::three_arc::three_arc_graph;
use triarc::verify::{
    brute_force_hamilton_connected, brute_force_hamiltonian_with_cap, validate_cycle,
};
use triarc::Arc;

fn criterion<F: FnOnce()>(name: &str, budget: Duration, f: F) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => {
            println!("[acceptance] {name}: PASS ({elapsed:.2?}, budget {budget:.2?})");
            assert!(
                elapsed <= budget,
                "{name} exceeded its time budget: {elapsed:.2?} > {budget:.2?}"
            );
        }
        Err(cause) => {
            println!("[acceptance] {name}: FAIL ({elapsed:.2?})");
            std::panic::resume_unwind(cause);
        }
    }
}

#[test]
fn criterion_1_golden_petersen_cycle() {
    criterion("criterion 1 (golden Petersen cycle)", Duration::from_millis(10), || {
        let g = gen::petersen();
        let (x, idx) = three_arc_graph(&g).unwrap();
        let seq = common::golden_petersen_cycle();
        validate_cycle(&x, &idx, &seq).expect("golden cycle must validate");
    });
}

#[test]
fn criterion_2_size_formulas() {
    criterion("criterion 2 (size formulas, 200 random graphs)", Duration::from_secs(1), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5123);
        for _ in 0..200 {
            let n = rng.gen_range(3..=30);
            let extra = rng.gen_range(0..=n);
            let g = gen::random_connected(n, extra, &mut rng);
            let (x, _) = three_arc_graph(&g).unwrap();
            assert_eq!(x.vertex_count(), 2 * g.edge_count());
            let expect: usize = g
                .edges()
                .iter()
                .map(|&(u, v)| (g.degree(u) - 1) * (g.degree(v) - 1))
                .sum();
            assert_eq!(x.edge_count(), expect);
        }
    });
}

fn decision_matches_oracle(g: &SimpleGraph) {
    let decided = is_x_hamiltonian(g);
    let (x, _) = three_arc_graph(g).unwrap();
    let oracle = brute_force_hamiltonian_with_cap(&x, 64).unwrap();
    assert_eq!(
        decided,
        oracle,
        "decision mismatch on {}",
        triarc::graph::serialize_edge_list(g)
    );
    // Both routes to the decision agree as well.
    assert_eq!(decided, check_conditions(g).all_hold());
}

#[test]
fn criterion_3_decision_equivalence() {
    criterion("criterion 3 (decision vs oracle, n <= 6)", Duration::from_secs(300), || {
        // Full labeled enumeration for up to five vertices.
        for n in 3..=5usize {
            let bits = n * (n - 1) / 2;
            for mask in 0u64..(1 << bits) {
                let g = gen::from_bitmask(n, mask);
                if !is_connected(&g) {
                    continue;
                }
                decision_matches_oracle(&g);
            }
        }
        // Sampled labeled graphs on six vertices.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5303);
        let mut sampled = 0;
        while sampled < 1500 {
            let mask: u64 = rng.gen_range(0..(1 << 15));
            let g = gen::from_bitmask(6, mask);
            if !is_connected(&g) {
                continue;
            }
            decision_matches_oracle(&g);
            sampled += 1;
        }
    });
}

#[test]
fn criterion_4_constructive_cycle_pipeline() {
    criterion("criterion 4 (cycle pipeline corpus)", Duration::from_secs(60), || {
        let per_graph = Duration::from_millis(100);
        let check = |g: &SimpleGraph, label: &str| {
            let start = Instant::now();
            let cycle = hamilton_cycle_of_x(g)
                .unwrap_or_else(|e| panic!("pipeline failed on {label}: {e}"));
            let spent = start.elapsed();
            assert!(cycle.verified);
            assert_eq!(cycle.len(), 2 * g.edge_count(), "wrong length on {label}");
            assert!(spent <= per_graph, "{label} took {spent:.2?}");
        };

        check(&gen::petersen(), "petersen");
        check(&gen::complete(4), "K4");
        check(&gen::complete(5), "K5");
        check(&gen::complete_bipartite(3, 3), "K3,3");
        check(&gen::hypercube(3), "Q3");

        let mut rng = ChaCha8Rng::seed_from_u64(0x5404);
        for i in 0..50 {
            let n = 2 * rng.gen_range(2..=10);
            let g = gen::random_cubic_connected(n, &mut rng);
            check(&g, &format!("cubic #{i} (n = {n})"));
        }
        for i in 0..50 {
            let core = rng.gen_range(5..=10);
            let subdiv = rng.gen_range(1..=3);
            let g = gen::random_with_degree_two(core, core, subdiv, &mut rng);
            assert!(!g.vertices_of_degree(2).is_empty());
            check(&g, &format!("subdivided #{i}"));
        }
    });
}

fn pattern_multigraph(multiplicities: &[usize]) -> (Multigraph, SimpleGraph) {
    let d = multiplicities.len();
    let mut m = Multigraph::new(d + 1);
    for (i, &k) in multiplicities.iter().enumerate() {
        for _ in 0..k {
            m.add_edge(0, i + 1).unwrap();
        }
    }
    (m, gen::star(d))
}

#[test]
fn criterion_5_matching_absence_charaterization() {
    criterion("criterion 5 (matching absence = six twins)", Duration::from_secs(10), || {
        let patterns: [&[usize]; 6] = [
            &[2, 2, 2],
            &[2, 2, 2, 2],
            &[2, 2, 2, 2, 2],
            &[1, 3, 2],
            &[1, 3, 2, 2],
            &[1, 3, 2, 2, 2],
        ];
        for pattern in patterns {
            let (m, star) = pattern_multigraph(pattern);
            let degree = m.degree(0);
            let arcs: Vec<Arc> = star.neighbors(0).iter().map(|&h| Arc::new(0, h)).collect();
            let decompositions = enumerate_decompositions(&m, 0);
            // (d* - 1)!! decompositions in total.
            let expect: usize = (1..degree).rev().step_by(2).product();
            assert_eq!(decompositions.len(), expect);
            for j in decompositions {
                let h = build_h(&j, &arcs).unwrap();
                let absent = perfect_matching(&h).is_none();
                let twins = degree == 6 && has_twin_visits(&j);
                assert_eq!(
                    absent, twins,
                    "pattern {pattern:?}: matching absence must equal six-edge twins"
                );
            }
        }
    });
}

#[test]
fn criterion_6_iterated_hamiltonicity() {
    criterion("criterion 6 (iterated cycles of K4)", Duration::from_secs(10), || {
        let k4 = gen::complete(4);
        let x1 = triarc::three_arc::iterate_three_arc(&k4, 1).unwrap();
        let x2 = triarc::three_arc::iterate_three_arc(&k4, 2).unwrap();

        let c1 = hamilton_cycle_of_x(&k4).unwrap();
        assert_eq!(c1.len(), 12);
        let c2 = hamilton_cycle_of_x(&x1).unwrap();
        assert_eq!(c2.len(), 48);
        let c3 = hamilton_cycle_of_x(&x2).unwrap();
        assert_eq!(c3.len(), 432);
        assert!(c1.verified && c2.verified && c3.verified);
    });
}

#[test]
fn criterion_7_path_sweep() {
    criterion("criterion 7 (path sweep K4 and K5)", Duration::from_secs(30), || {
        // K2 v K3 is K5, so the smallest join instance folds into this sweep.
        assert_eq!(gen::join(&gen::complete(2), &gen::complete(3)), gen::complete(5));
        let counts = [(gen::complete(4), 132), (gen::complete(5), 380)];
        for (g, expect) in counts {
            let done = exhaustive_arc_pair_sweep(&g).unwrap();
            assert_eq!(done, expect);
        }
    });
}

#[test]
fn criterion_8_hamilton_connected_implies_odd_paths() {
    criterion("criterion 8 (odd paths in Hamilton-connected graphs)", Duration::from_secs(300), || {
        let mut pair_bits = Vec::new();
        for n in 4..=7usize {
            let bits = n * (n - 1) / 2;
            let mut table = Vec::with_capacity(bits);
            for u in 0..n {
                for v in (u + 1)..n {
                    table.push((u, v));
                }
            }
            pair_bits.push((n, bits, table));
        }
        let mut checked = 0u64;
        for (n, bits, table) in pair_bits {
            for mask in 0u64..(1 << bits) {
                // Cheap degree prefilter before building anything.
                let mut deg = [0usize; 7];
                let mut bit_mask = mask;
                while bit_mask != 0 {
                    let b = bit_mask.trailing_zeros() as usize;
                    bit_mask &= bit_mask - 1;
                    let (u, v) = table[b];
                    deg[u] += 1;
                    deg[v] += 1;
                }
                if deg[..n].iter().any(|&d| d < 3) {
                    continue;
                }
                let g = gen::from_bitmask(n, mask);
                if !is_connected(&g) {
                    continue;
                }
                if !brute_force_hamilton_connected(&g).unwrap() {
                    continue;
                }
                checked += 1;
                assert!(
                    has_all_pairs_odd_paths(&g),
                    "Hamilton-connected graph without all odd paths: {}",
                    triarc::graph::serialize_edge_list(&g)
                );
            }
        }
        println!("    checked {checked} Hamilton-connected graphs");
        assert!(checked > 1000, "the sweep should cover a nontrivial corpus");
    });
}

#[test]
fn criterion_9_repair_invariants() {
    criterion("criterion 9 (repair fuzzing)", Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5909);
        for case in 0..500 {
            let g = match case % 3 {
                0 => gen::random_cubic_connected(2 * rng.gen_range(2..=7), &mut rng),
                1 => gen::random_min_degree_three(rng.gen_range(5..=10), 4, &mut rng),
                _ => gen::random_with_degree_two(rng.gen_range(5..=8), 4, 2, &mut rng),
            };
            let m = doubled(&g);
            let mut tour = triarc::euler::euler_tour(&m, 0).unwrap();
            // Scramble the visit pairings with random bow-ties.
            for _ in 0..20 {
                let v = rng.gen_range(0..g.vertex_count());
                let visits = visits_of_trail(&tour, v).unwrap();
                if visits.len() < 2 {
                    continue;
                }
                let i = rng.gen_range(0..visits.len());
                let mut j = rng.gen_range(0..visits.len());
                while j == i {
                    j = rng.gen_range(0..visits.len());
                }
                tour = triarc::euler::bow_tie(&tour, &visits[i], &visits[j]).unwrap();
            }

            let mut before = tour.edges().to_vec();
            before.sort_unstable();
            let repaired = triarc::euler::repair_twin_visits(&tour, &m, None)
                .unwrap_or_else(|e| panic!("repair failed on fuzz case {case}: {e}"));
            let mut after = repaired.edges().to_vec();
            after.sort_unstable();
            assert_eq!(before, after, "edge multiset changed in case {case}");

            // Defect set is empty: every vertex matches.
            for v in 0..g.vertex_count() {
                let j = VisitDecomposition { mid: v, visits: visits_of_trail(&repaired, v).unwrap() };
                let arcs: Vec<Arc> = g.neighbors(v).iter().map(|&h| Arc::new(v, h)).collect();
                let h = build_h(&j, &arcs).unwrap();
                assert!(
                    perfect_matching(&h).is_some(),
                    "vertex {v} still defective in case {case}"
                );
            }
        }
    });
}
