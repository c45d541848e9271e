//! Command-line frontend: construct 3-arc graphs, decide hamiltonicity,
//! emit and verify Hamilton cycle/path certificates, iterate the operator,
//! and sweep the decision against the brute-force oracle.
//!
//! Exit codes: 0 success, 1 failed hypotheses or invalid certificate,
//! 2 I/O or parse errors, 3 internal validation failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use triarc::gen;
use triarc::graph::{is_connected, parse_edge_list, serialize_edge_list, SimpleGraph};
use triarc::ham_cycle::{check_conditions, hamilton_cycle_of_x, is_x_hamiltonian};
use triarc::ham_path::hamilton_path_of_x;
use triarc::three_arc::three_arc_graph;
use triarc::verify::{brute_force_hamiltonian_with_cap, validate_cycle, validate_path};
use triarc::{Arc, Error};

#[derive(Parser)]
#[command(name = "triarc", version, about = "3-arc graphs with verified Hamilton cycle and path certificates")]
struct Cli {
    /// Deterministic, seed-free operation. This is the only mode; the flag
    /// is accepted for interface stability.
    #[arg(long, global = true)]
    seedless_deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 3-arc graph as an edge list
    Xgraph {
        graph: PathBuf,
        /// Also print the arc numbering as lines `index tail head`
        #[arg(long)]
        emit_arc_index: bool,
        /// Refuse outputs larger than this many vertices
        #[arg(long, default_value_t = triarc::three_arc::DEFAULT_SIZE_CAP)]
        max_vertices: usize,
    },
    /// Evaluate the three hamiltonicity conditions
    Check { graph: PathBuf },
    /// Print a verified Hamilton cycle of the 3-arc graph
    Hamcycle {
        graph: PathBuf,
        /// Also write a certificate file (`cycle <n>` header plus arcs)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a verified Hamilton path of the 3-arc graph between two arcs
    Hampath {
        graph: PathBuf,
        tail1: usize,
        head1: usize,
        tail2: usize,
        head2: usize,
        /// Also write a certificate file (`path <n>` header plus arcs)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the sizes of iterated 3-arc graphs, optionally certifying a
    /// Hamilton cycle at every level
    Iterate {
        graph: PathBuf,
        count: usize,
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = triarc::three_arc::DEFAULT_SIZE_CAP)]
        max_vertices: usize,
    },
    /// Validate a certificate file against a graph
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Sweep the hamiltonicity decision against the brute-force oracle
    /// over exhaustively enumerated (and sampled) small graphs
    Sweep {
        /// Largest vertex count; up to five is exhaustive, beyond is sampled
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Sample size per vertex count beyond five
        #[arg(long, default_value_t = 300)]
        samples: usize,
        /// Seed for the sampled part of the sweep
        #[arg(long, default_value_t = 0xC0FFEE)]
        shuffle: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Parse { .. } | Error::Input(_) => 2,
                Error::Internal(_) => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn load_graph(path: &Path) -> Result<SimpleGraph, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text)
}

fn write_certificate(path: &Path, kind: &str, arcs: &[Arc]) -> Result<(), Error> {
    let mut out = format!("{kind} {}\n", arcs.len());
    for a in arcs {
        out.push_str(&format!("{a}\n"));
    }
    fs::write(path, out).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

/// Prints arc lines, stopping quietly if the consumer closes the pipe.
fn print_arcs<'a>(arcs: impl IntoIterator<Item = &'a Arc>) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for a in arcs {
        if writeln!(out, "{a}").is_err() {
            return;
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Xgraph { graph, emit_arc_index, max_vertices } => {
            let g = load_graph(&graph)?;
            if 2 * g.edge_count() > max_vertices {
                return Err(Error::SizeCap { size: 2 * g.edge_count(), cap: max_vertices });
            }
            let (x, idx) = three_arc_graph(&g)?;
            print!("{}", serialize_edge_list(&x));
            if emit_arc_index {
                println!("# arc index");
                print!("{}", idx.serialize());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { graph } => {
            let g = load_graph(&graph)?;
            let report = check_conditions(&g);
            println!("{report}");
            Ok(if report.all_hold() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Hamcycle { graph, out } => {
            let g = load_graph(&graph)?;
            let cycle = hamilton_cycle_of_x(&g)?;
            if let Some(path) = out {
                write_certificate(&path, "cycle", &cycle.arcs)?;
            }
            print_arcs(cycle.arcs.iter().chain([&cycle.arcs[0]]));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hampath { graph, tail1, head1, tail2, head2, out } => {
            let g = load_graph(&graph)?;
            let a1 = Arc::new(tail1, head1);
            let a2 = Arc::new(tail2, head2);
            let path = hamilton_path_of_x(&g, a1, a2)?;
            if let Some(file) = out {
                write_certificate(&file, "path", &path.arcs)?;
            }
            print_arcs(&path.arcs);
            Ok(ExitCode::SUCCESS)
        }
        Command::Iterate { graph, count, certify, max_vertices } => {
            let g = load_graph(&graph)?;
            let mut cur = g;
            for i in 1..=count {
                let next_size = 2 * cur.edge_count();
                if next_size > max_vertices {
                    return Err(Error::SizeCap { size: next_size, cap: max_vertices });
                }
                if certify {
                    let cycle = hamilton_cycle_of_x(&cur)?;
                    println!("X^{i}: verified Hamilton cycle ({} arcs)", cycle.len());
                }
                let (x, _) = three_arc_graph(&cur)?;
                println!("X^{i}: {} vertices {} edges", x.vertex_count(), x.edge_count());
                cur = x;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graph, certificate } => {
            let g = load_graph(&graph)?;
            let (kind, arcs) = read_certificate(&certificate)?;
            let (x, idx) = three_arc_graph(&g)?;
            let outcome = match kind.as_str() {
                "cycle" => validate_cycle(&x, &idx, &arcs),
                "path" => {
                    let endpoints = (arcs[0], *arcs.last().unwrap());
                    validate_path(&x, &idx, &arcs, endpoints)
                }
                other => {
                    return Err(Error::Input(format!("unknown certificate kind {other:?}")))
                }
            };
            match outcome {
                Ok(()) => {
                    println!("OK: valid {kind} certificate ({} arcs)", arcs.len());
                    Ok(ExitCode::SUCCESS)
                }
                Err(defect) => {
                    println!("INVALID: {defect}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Sweep { max_n, samples, shuffle } => {
            if !(3..=7).contains(&max_n) {
                return Err(Error::Input("sweep supports 3 <= max-n <= 7".into()));
            }
            sweep(max_n, samples, shuffle)
        }
    }
}

fn read_certificate(path: &Path) -> Result<(String, Vec<Arc>), Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, reason: "empty certificate".into() })?;
    let mut fields = header.split_whitespace();
    let kind = fields
        .next()
        .ok_or_else(|| Error::Parse { line: 1, reason: "missing certificate kind".into() })?
        .to_string();
    let declared: usize = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse { line: 1, reason: "missing arc count".into() })?;

    let mut arcs = Vec::with_capacity(declared);
    for (idx, line) in lines {
        let lineno = idx + 1;
        let (t, h) = line
            .trim()
            .split_once('>')
            .ok_or_else(|| Error::Parse { line: lineno, reason: format!("expected tail>head, got {line:?}") })?;
        let tail = t.trim().parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("bad tail {t:?}"),
        })?;
        let head = h.trim().parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("bad head {h:?}"),
        })?;
        arcs.push(Arc::new(tail, head));
    }
    if arcs.len() != declared {
        return Err(Error::Parse {
            line: 1,
            reason: format!("header declares {declared} arcs but {} follow", arcs.len()),
        });
    }
    if arcs.is_empty() {
        return Err(Error::Parse { line: 1, reason: "certificate without arcs".into() });
    }
    Ok((kind, arcs))
}

fn sweep(max_n: usize, samples: usize, shuffle: u64) -> Result<ExitCode, Error> {
    println!("{:>3} {:>9} {:>12} {:>10}", "n", "graphs", "hamiltonian", "mismatches");
    let mut total_mismatches = 0u64;
    for n in 3..=max_n {
        let bits = n * (n - 1) / 2;
        let exhaustive = n <= 5;
        let mut graphs = 0u64;
        let mut hamiltonian = 0u64;
        let mut mismatches = 0u64;

        let mut run_one = |g: &SimpleGraph| -> Result<(), Error> {
            if !is_connected(g) {
                return Ok(());
            }
            graphs += 1;
            let decided = is_x_hamiltonian(g);
            let (x, _) = three_arc_graph(g)?;
            let oracle = brute_force_hamiltonian_with_cap(&x, 64)?;
            if decided {
                hamiltonian += 1;
            }
            if decided != oracle {
                mismatches += 1;
            }
            Ok(())
        };

        if exhaustive {
            for mask in 0u64..(1 << bits) {
                run_one(&gen::from_bitmask(n, mask))?;
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(shuffle ^ n as u64);
            let mut seen = 0;
            while seen < samples {
                let mask: u64 = rng.gen_range(0..(1u64 << bits));
                let g = gen::from_bitmask(n, mask);
                if !is_connected(&g) {
                    continue;
                }
                run_one(&g)?;
                seen += 1;
            }
        }
        println!("{n:>3} {graphs:>9} {hamiltonian:>12} {mismatches:>10}");
        total_mismatches += mismatches;
    }
    if total_mismatches == 0 {
        println!("sweep: decision agrees with the oracle everywhere");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("sweep: {total_mismatches} mismatches");
        Ok(ExitCode::from(1))
    }
}
