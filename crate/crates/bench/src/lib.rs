//! Shared benchmark inputs: named graphs plus seeded random instances so
//! every run measures identical work.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use triarc::gen;
use triarc::graph::SimpleGraph;

pub const SEED: u64 = 0xBE7C8;

/// Graphs used by the construction and cycle benchmarks.
pub fn cycle_inputs() -> Vec<(&'static str, SimpleGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    vec![
        ("petersen", gen::petersen()),
        ("k5", gen::complete(5)),
        ("q3", gen::hypercube(3)),
        ("cubic20", gen::random_cubic_connected(20, &mut rng)),
        ("dense30", gen::random_connected(30, 60, &mut rng)),
    ]
}

/// Graphs (with arc pairs) used by the path benchmarks.
pub fn path_inputs() -> Vec<(&'static str, SimpleGraph)> {
    vec![("k5", gen::complete(5)), ("petersen", gen::petersen())]
}
