//! `schubert`: queries, theorem sweeps and explorers for Schubert-variety
//! Poincaré polynomials and inversion arrangements.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schubert_core::arrangement::{
    exponents_via_simple_peo, inversion_graph, rook_diagram, sector_diagram,
};
use schubert_core::bruhat::{lower_interval, poincare_polynomial};
use schubert_core::graph::region_polynomial;
use schubert_core::harness::{
    explore_factorization, explore_gamma, verify, SweepOptions, Theorem, DEFAULT_MAX_VERTICES,
};
use schubert_core::{Error, Permutation};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Poincaré polynomials, inversion arrangements and their sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object attached to a permutation.
    Query {
        /// One-line notation: `5164732` or `10,1,2,...`.
        w: String,
        what: Query,
        /// Print polynomials as products of q-numbers.
        #[arg(long)]
        factored: bool,
        #[arg(long)]
        json: bool,
        /// Also write DOT files (inversion graph, Hasse diagram) here.
        #[arg(long, value_name = "DIR")]
        dot_out: Option<PathBuf>,
    },
    /// Check a theorem on every permutation of size up to --max-n.
    Verify {
        /// p-eq-r, hlss, formula, palindromic-r, palindromic-p, simple-peo,
        /// chordal-smooth, recurrence, chromatic-roots, or all.
        theorem: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        /// Permit --max-n 8.
        #[arg(long)]
        allow_large: bool,
    },
    /// Compare the region graph of the inversion arrangement with the Bruhat interval.
    ExploreGamma {
        w: String,
        #[arg(long, value_name = "DIR")]
        dot_out: Option<PathBuf>,
        /// Seconds allowed for the embedding search.
        #[arg(long, default_value_t = 10.0)]
        time_budget: f64,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate q-number factorizability of R_G against nice PEOs over all small graphs.
    ExploreFactorization {
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Query {
    Poincare,
    Regions,
    Smooth,
    Exponents,
    Interval,
    Diagram,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Query {
            w,
            what,
            factored,
            json,
            dot_out,
        } => {
            let w: Permutation = w.parse()?;
            if let Some(dir) = dot_out {
                write_query_dots(&w, &dir)?;
            }
            Ok(if query(&w, what, factored, json)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Verify {
            theorem,
            max_n,
            jobs,
            json,
            allow_large,
        } => {
            let theorems = if theorem == "all" {
                Theorem::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            let opts = SweepOptions {
                max_n,
                jobs,
                allow_large,
            };
            if allow_large && max_n == 8 {
                eprintln!("warning: sweeping S_8 (40320 permutations) takes a while");
            }
            let mut reports = Vec::new();
            for t in theorems {
                reports.push(verify(t, &opts)?);
            }
            if json {
                let value = if reports.len() == 1 {
                    serde_json::to_value(&reports[0])
                } else {
                    serde_json::to_value(&reports)
                };
                println!("{}", serde_json::to_string_pretty(&value.expect("serializable")).unwrap());
            } else {
                for r in &reports {
                    print!("{}", r.render_text());
                }
            }
            Ok(if reports.iter().all(|r| r.is_success()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ExploreGamma {
            w,
            dot_out,
            time_budget,
            json,
        } => {
            let w: Permutation = w.parse()?;
            if !(time_budget.is_finite() && time_budget >= 0.0) {
                return Err(Error::Parse(format!("bad --time-budget {time_budget}")));
            }
            let report = explore_gamma(&w, Duration::from_secs_f64(time_budget))?;
            if let Some(dir) = dot_out {
                fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
                write_file(&dir.join(format!("gamma_{}.dot", file_stem(&w))), &report.gamma.to_dot())?;
                write_file(&dir.join(format!("hasse_{}.dot", file_stem(&w))), &report.hasse.to_dot())?;
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print!("{}", report.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ExploreFactorization {
            max_vertices,
            jobs,
            json,
        } => {
            let e = explore_factorization(max_vertices, jobs)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&e).unwrap());
            } else {
                let c = &e.contingency;
                println!("graphs on 1..={max_vertices} vertices: {}", c.total());
                println!("                    nice PEO   no nice PEO");
                println!("factorizable      {:>10}  {:>12}", c.factorizable_nice, c.factorizable_not_nice);
                println!("not factorizable  {:>10}  {:>12}", c.not_factorizable_nice, c.not_factorizable_not_nice);
                println!(
                    "graphs with more than one factorization: {}",
                    e.report.detail("multiple-factorizations")
                );
                if e.candidates.is_empty() {
                    println!("off-diagonal graphs: none");
                } else {
                    println!("off-diagonal graphs:");
                    for cand in &e.candidates {
                        println!(
                            "  {}  R_G = {}  factorizations {:?}  nice PEO {:?}",
                            cand.graph, cand.region_polynomial, cand.factorizations, cand.nice_peo
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// `Ok(false)` when the request is refused (factored exponents of a non-smooth `w`).
fn query(w: &Permutation, what: Query, factored: bool, json: bool) -> Result<bool, Error> {
    match what {
        Query::Poincare | Query::Regions => {
            let (name, p) = match what {
                Query::Poincare => ("poincare", poincare_polynomial(w)),
                _ => ("regions", region_polynomial(inversion_graph(w).graph())),
            };
            let factors = if factored { p.factor_into_q_numbers()? } else { None };
            if json {
                println!("{}", json!({ "w": w, name: p, "factors": factors }));
            } else if factored {
                match factors {
                    Some(f) if f.is_empty() => println!("1"),
                    Some(f) => println!("{}", f.iter().map(|a| format!("[{a}]")).collect::<String>()),
                    None => println!("{p} (not a product of q-numbers)"),
                }
            } else {
                println!("{p}");
            }
        }
        Query::Smooth => {
            let witness = w.smoothness_witness();
            if json {
                let (pattern, positions) = witness.map_or((None, None), |(s, pos)| (Some(s), Some(pos)));
                println!(
                    "{}",
                    json!({ "w": w, "smooth": pattern.is_none(), "pattern": pattern, "positions": positions })
                );
            } else {
                match witness {
                    None => println!("smooth"),
                    Some((pattern, positions)) => println!(
                        "non-smooth: contains {pattern} at positions {}",
                        join(&positions)
                    ),
                }
            }
        }
        Query::Exponents => return exponents(w, factored, json),
        Query::Interval => {
            let interval = lower_interval(w);
            if json {
                println!("{}", serde_json::to_string(&interval.summary()).unwrap());
            } else {
                println!("B_w = {}", interval.size());
                println!("rank counts: {:?}", interval.rank_counts());
                println!("P_w = {}", interval.poincare_polynomial());
            }
        }
        Query::Diagram => {
            if json {
                println!(
                    "{}",
                    json!({ "w": w, "rooks": rook_diagram(w), "sectors": sector_diagram(w) })
                );
            } else {
                print!("{}", rook_diagram(w));
                print!("{}", sector_diagram(w));
            }
        }
    }
    Ok(true)
}

fn exponents(w: &Permutation, factored: bool, json: bool) -> Result<bool, Error> {
    let records = w.exponents_by_records();
    let witness = w.smoothness_witness();
    if let Some((pattern, positions)) = &witness {
        let why = format!(
            "w is not smooth (contains {pattern} at positions {}), so P_w != R_w and no factorization is asserted",
            join(positions)
        );
        if factored {
            eprintln!("{records}; {why}");
            return Ok(false);
        }
        if json {
            println!("{}", json!({ "w": w, "records": records.entries(), "smooth": false }));
        } else {
            println!("{records}; {why}");
        }
        return Ok(true);
    }
    let simple = exponents_via_simple_peo(w)?;
    let product = records.q_product();
    let p = poincare_polynomial(w);
    let r = region_polynomial(inversion_graph(w).graph());
    if p != product || r != product {
        return Err(Error::Inconsistent(format!(
            "record product {product} differs from P_w = {p} or R_w = {r}"
        )));
    }
    if json {
        println!(
            "{}",
            json!({
                "w": w,
                "smooth": true,
                "records": records.entries(),
                "simple_peo": simple.ordering.order,
                "simple_peo_exponents": simple.ordering.exponents,
                "simple_peo_by_vertex": simple.by_vertex.entries(),
                "polynomial": product,
            })
        );
        return Ok(true);
    }
    println!("{records}; R_w = P_w = {}", records.bracket_form());
    println!(
        "simple PEO ({}): ({})",
        join(&simple.ordering.order),
        join(&simple.ordering.exponents)
    );
    if factored {
        println!("= {product}");
    }
    Ok(true)
}

fn write_query_dots(w: &Permutation, dir: &Path) -> Result<(), Error> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let stem = file_stem(w);
    write_file(&dir.join(format!("inversion_graph_{stem}.dot")), &inversion_graph(w).to_dot())
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents).map_err(|e| io_error(path, e))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

fn file_stem(w: &Permutation) -> String {
    w.to_text().replace(',', "-")
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
