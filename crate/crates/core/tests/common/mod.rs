//! Fixtures shared between the integration suites.

use triarc::Arc;

/// A golden 30-arc Hamilton cycle of the 3-arc graph of the Petersen
/// graph, with the outer cycle as 0..5, the inner pentagram as 5..10 and
/// spokes i <-> i+5.
pub fn golden_petersen_cycle() -> Vec<Arc> {
    [
        (1, 6), (2, 7), (3, 8), (4, 9), (0, 1), (5, 7), (8, 3), (6, 1), (9, 4), (7, 2),
        (5, 8), (0, 4), (1, 2), (6, 8), (9, 7), (4, 0), (3, 2), (8, 5), (6, 9), (1, 0),
        (2, 3), (7, 9), (5, 0), (8, 6), (3, 4), (2, 1), (7, 5), (9, 6), (4, 3), (0, 5),
    ]
    .into_iter()
    .map(|(t, h)| Arc::new(t, h))
    .collect()
}
