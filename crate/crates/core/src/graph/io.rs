//! Edge-list text format.
//!
//! First significant line is `n m`, followed by exactly `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored. Serialization
//! writes edges sorted lexicographically, so parse/serialize round-trips.

use super::SimpleGraph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut g: Option<SimpleGraph> = None;
    let mut edges_read = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                reason: format!("expected two fields, got {}", fields.len()),
            });
        }
        let a: usize = fields[0].parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("not a nonnegative integer: {:?}", fields[0]),
        })?;
        let b: usize = fields[1].parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("not a nonnegative integer: {:?}", fields[1]),
        })?;

        match (header, &mut g) {
            (None, _) => {
                header = Some((a, b, lineno));
                g = Some(SimpleGraph::new(a));
            }
            (Some((n, m, _)), Some(graph)) => {
                if edges_read == m {
                    return Err(Error::Parse {
                        line: lineno,
                        reason: format!("more than the declared {m} edges"),
                    });
                }
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        reason: format!("vertex out of range: {a} {b} (n = {n})"),
                    });
                }
                if a == b {
                    return Err(Error::Parse { line: lineno, reason: format!("loop at vertex {a}") });
                }
                if graph.has_edge(a, b) {
                    return Err(Error::Parse {
                        line: lineno,
                        reason: format!("duplicate edge ({a}, {b})"),
                    });
                }
                graph.add_edge(a, b).expect("validated above");
                edges_read += 1;
            }
            _ => unreachable!(),
        }
    }

    match (header, g) {
        (Some((_, m, line)), Some(graph)) => {
            if edges_read != m {
                return Err(Error::Parse {
                    line,
                    reason: format!("declared {m} edges but found {edges_read}"),
                });
            }
            Ok(graph)
        }
        _ => Err(Error::Parse { line: 1, reason: "empty input".into() }),
    }
}

pub fn serialize_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
