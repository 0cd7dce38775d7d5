use clap::{Parser, Subcommand};
use lattice_core::{parse_lattice_text, GramLattice, ParsedLattice, SearchLimits};
use link_cli::{chessboard, classify_link, parse_pd, preceq_link, ColoredDiagram};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Classifiers for alternating link diagrams, their Tait graphs and flow
/// lattices. Prints JSON to standard output; exits 0 on positive
/// verdicts, 1 on negative verdicts, 2 on input errors.
#[derive(Parser)]
#[command(name = "cubetile")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report for a PD file (or every .pd file in a
    /// directory with --dir)
    Classify {
        path: Option<PathBuf>,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Certificate matrix of a diagram in the composition closure
    Hajos { path: PathBuf },
    /// Classify a planar graph given as a rotation-system file
    Decompose { path: PathBuf },
    /// Cubiquity and tiling verdicts for a lattice file
    Cubiquity {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// d-invariant of a Gram matrix given as a JSON array of rows
    Dinv {
        #[arg(long)]
        gram: String,
    },
    /// Partial-order test between two prime member diagrams
    Preceq { smaller: PathBuf, larger: PathBuf },
    /// Members of the composition closure up to an edge bound
    Enumerate {
        #[arg(long)]
        max_edges: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_diagram(path: &Path) -> Result<ColoredDiagram, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let d = parse_pd(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    chessboard(d).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).unwrap());
}

fn verdict(positive: bool) -> ExitCode {
    ExitCode::from(if positive { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Command::Classify { path, dir } => match (path, dir) {
            (Some(p), None) => {
                let report = classify_link(&read_diagram(&p)?).map_err(|e| e.to_string())?;
                emit(&serde_json::to_value(&report).unwrap());
                Ok(verdict(report.in_d))
            }
            (None, Some(d)) => classify_dir(&d),
            _ => Err("classify needs exactly one of a PD file or --dir".into()),
        },
        Command::Hajos { path } => {
            let report = classify_link(&read_diagram(&path)?).map_err(|e| e.to_string())?;
            match report.hajos_matrix {
                Some(rows) => {
                    emit(&json!({ "rank": rows.len(), "hajos_matrix": rows }));
                    Ok(ExitCode::from(0))
                }
                None => {
                    emit(&json!({ "failure": report.failure }));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Decompose { path } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let g = graph_core::parse_graph_text(&text).map_err(|e| e.to_string())?;
            match planar_decomp::classify_g(&g) {
                Ok(certs) => {
                    let arr: Vec<Value> = certs.iter().map(|c| c.to_json()).collect();
                    emit(&json!({ "in_g": true, "certificates": arr }));
                    Ok(ExitCode::from(0))
                }
                Err(w) => {
                    emit(&json!({
                        "in_g": false,
                        "failure": { "edge_count": w.edge_count, "reason": format!("{:?}", w.reason) },
                    }));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Cubiquity { lattice } => {
            let text = std::fs::read_to_string(&lattice)
                .map_err(|e| format!("{}: {e}", lattice.display()))?;
            let parsed = parse_lattice_text(&text).map_err(|e| e.to_string())?;
            let embedded = match parsed {
                ParsedLattice::Embedded(l) => Some(l),
                ParsedLattice::Gram(g) => {
                    cube_tiling::find_cubiquitous_embedding(&g, SearchLimits::from_env())
                        .map_err(|e| e.to_string())?
                }
            };
            match embedded {
                Some(l) => {
                    let report =
                        cube_tiling::is_cubiquitous(&l).map_err(|e| e.to_string())?;
                    let tiling = report.cubiquitous
                        && cube_tiling::is_2cube_tiling(&l).map_err(|e| e.to_string())?;
                    emit(&json!({
                        "cubiquitous": report.cubiquitous,
                        "tiling": tiling,
                        "report": serde_json::to_value(&report).unwrap(),
                    }));
                    Ok(verdict(report.cubiquitous))
                }
                None => {
                    emit(&json!({ "cubiquitous": false, "tiling": false }));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Dinv { gram } => {
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(&gram).map_err(|e| format!("bad gram matrix: {e}"))?;
            let l = GramLattice::new(rows).map_err(|e| e.to_string())?;
            let d = flow_lattices::d_invariant(&l).map_err(|e| e.to_string())?;
            let cosets: Vec<Value> = d
                .iter()
                .map(|(coset, value)| {
                    json!({ "coset": coset, "num": value.numer().to_string(), "den": value.denom().to_string() })
                })
                .collect();
            emit(&json!({ "cosets": cosets }));
            Ok(ExitCode::from(0))
        }
        Command::Preceq { smaller, larger } => {
            let report = preceq_link(&read_diagram(&smaller)?, &read_diagram(&larger)?)
                .map_err(|e| e.to_string())?;
            emit(&serde_json::to_value(&report).unwrap());
            Ok(verdict(report.related))
        }
        Command::Enumerate { max_edges } => {
            let members = planar_decomp::enumerate_g(max_edges).map_err(|e| e.to_string())?;
            let texts: Vec<String> =
                members.iter().map(graph_core::write_graph_text).collect();
            emit(&json!({ "count": texts.len(), "members": texts }));
            Ok(ExitCode::from(0))
        }
    }
}

/// Classifies every .pd file under the directory concurrently, printing
/// one result array in path order.
fn classify_dir(dir: &Path) -> Result<ExitCode, String> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "pd"))
        .collect();
    paths.sort();
    let results: Vec<Value> = std::thread::scope(|scope| {
        let handles: Vec<_> = paths
            .iter()
            .map(|p| {
                scope.spawn(move || match read_diagram(p).and_then(|c| {
                    classify_link(&c).map_err(|e| e.to_string())
                }) {
                    Ok(r) => json!({
                        "path": p.display().to_string(),
                        "report": serde_json::to_value(&r).unwrap(),
                    }),
                    Err(e) => json!({ "path": p.display().to_string(), "error": e }),
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let any_error = results.iter().any(|r| r.get("error").is_some());
    let all_positive = results
        .iter()
        .all(|r| r["report"]["in_d"].as_bool().unwrap_or(false));
    emit(&Value::Array(results));
    if any_error {
        Ok(ExitCode::from(2))
    } else {
        Ok(verdict(all_positive))
    }
}
