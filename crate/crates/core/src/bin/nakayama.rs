use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nakayama::filtration::{b_filtration_in, delta_blocks, epsilon, epsilon_tower};
use nakayama::harness::{parse_check_list, run_checks, sweep, CheckOutcome};
use nakayama::report::{block_table, InvariantsReport};
use nakayama::uniserial::{make_module, syzygy_orbit, ModuleSpec};
use nakayama::{kupisch_from_relations, Algebra, EnumerationSpec, RelationSystem};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "nakayama",
    version,
    about = "Homological invariants of cyclic Nakayama algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AlgebraArgs {
    /// Kupisch series, e.g. "3,4,3,3,2"
    #[arg(long)]
    kupisch: Option<String>,
    /// Relations as "n=N;start:arrows,...", e.g. "n=5;1:3,3:3,5:2"
    #[arg(long)]
    relations: Option<String>,
}

impl AlgebraArgs {
    fn parse(&self) -> Result<Algebra, String> {
        match (&self.kupisch, &self.relations) {
            (Some(k), _) => k.parse::<Algebra>().map_err(|e| e.to_string()),
            (None, Some(r)) => {
                let rels = r.parse::<RelationSystem>().map_err(|e| e.to_string())?;
                kupisch_from_relations(&rels).map_err(|e| e.to_string())
            }
            (None, None) => Err("one of --kupisch or --relations is required".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, delooping levels, opposite algebra, blocks and eps
    Invariants {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
    },
    /// Print the minimal projective resolution of a uniserial module
    Resolve {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Module as "top=T,len=L"
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 32)]
        max_steps: usize,
    },
    /// Syzygy filtered algebra and its tower
    Epsilon {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively check every algebra up to the given size
    Sweep {
        #[arg(long, default_value_t = 1)]
        rank_min: usize,
        #[arg(long, default_value_t = 5)]
        rank_max: usize,
        #[arg(long, default_value_t = 7)]
        max_len: usize,
        /// "all" or a comma separated list of check names
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report file; ".csv" writes one row per algebra, anything else JSON
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep every rotation instead of one representative per class
        #[arg(long)]
        no_dedupe: bool,
    },
    /// Run checks on a single algebra
    Check {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        json: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Invariants {
            algebra,
            json,
            table: _,
        } => {
            let a = match algebra.parse() {
                Ok(a) => a,
                Err(e) => return usage(e),
            };
            let report = InvariantsReport::compute(&a);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_table());
            }
            ExitCode::SUCCESS
        }
        Command::Resolve {
            algebra,
            module,
            max_steps,
        } => {
            let a = match algebra.parse() {
                Ok(a) => a,
                Err(e) => return usage(e),
            };
            let spec: ModuleSpec = match module.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            match make_module(&a, spec.top, spec.len) {
                Ok(m) => {
                    print!("{}", resolve(&a, &m, max_steps));
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Command::Epsilon { algebra, json } => {
            let a = match algebra.parse() {
                Ok(a) => a,
                Err(e) => return usage(e),
            };
            cmd_epsilon(&a, json)
        }
        Command::Sweep {
            rank_min,
            rank_max,
            max_len,
            checks,
            jobs,
            out,
            no_dedupe,
        } => {
            let spec = match EnumerationSpec::new(rank_min, rank_max, max_len, !no_dedupe) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let checks = match parse_check_list(&checks) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            if jobs == 0 {
                return usage("--jobs must be at least 1");
            }
            let report = sweep(&spec, &checks, jobs);
            println!("algebras: {}", report.algebras);
            for (id, t) in &report.totals {
                println!(
                    "{:<20} pass {:>6}  fail {:>6}  skip {:>6}",
                    id.name(),
                    t.pass,
                    t.fail,
                    t.skip
                );
            }
            for f in &report.failures {
                println!("FAILED {}: {:?}", f.algebra, f.failed());
            }
            eprintln!("wall time: {:.3}s", report.wall_time.as_secs_f64());
            if let Some(path) = out {
                if let Err(e) = report.write_to(&path) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            }
            if report.failure_count() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Command::Check {
            algebra,
            checks,
            json,
        } => {
            let a = match algebra.parse() {
                Ok(a) => a,
                Err(e) => return usage(e),
            };
            let checks = match parse_check_list(&checks) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let report = run_checks(&a, &checks);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                for (id, outcome) in &report.outcomes {
                    match outcome {
                        CheckOutcome::Pass => println!("{:<20} pass", id.name()),
                        CheckOutcome::Fail { detail } => {
                            println!("{:<20} FAIL  {detail}", id.name())
                        }
                        CheckOutcome::Skipped { reason } => {
                            println!("{:<20} skip  {reason}", id.name())
                        }
                    }
                }
            }
            if report.failed().is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
    }
}

fn resolve(a: &Algebra, m: &nakayama::UniserialModule, max_steps: usize) -> String {
    use std::fmt::Write as _;

    let mut out = String::new();
    if m.is_projective(a) {
        let _ = writeln!(out, "{m} {:?}: projective, pdim 0", m.composition_series(a));
        return out;
    }
    let orbit = syzygy_orbit(a, m);
    let blocks = delta_blocks(a);
    for (k, term) in orbit.visited.iter().enumerate().take(max_steps + 1) {
        let mut notes = Vec::new();
        if term.is_projective(a) {
            notes.push("projective".to_string());
        }
        if let Some(p) = orbit.period.filter(|_| k == orbit.preperiod) {
            notes.push(format!("periodic, period {p}"));
        }
        if k >= 2 {
            if let Ok(f) = b_filtration_in(a, &blocks, term) {
                let parts: Vec<String> = f
                    .blocks
                    .iter()
                    .map(|&i| {
                        let v = blocks[i].vertices(a);
                        format!(
                            "[{}]",
                            v.iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                notes.push(format!("B-filtration {}", parts.join("")));
            }
        }
        let _ = writeln!(
            out,
            "Omega^{k}: {term} {:?}{}",
            term.composition_series(a),
            if notes.is_empty() {
                String::new()
            } else {
                format!("  ({})", notes.join("; "))
            }
        );
    }
    if orbit.visited.len() > max_steps + 1 {
        let _ = writeln!(out, "... truncated after {max_steps} steps");
    }
    match orbit.period {
        Some(p) => {
            let _ = writeln!(
                out,
                "cycle: Omega^{} = Omega^{} (preperiod {}, period {p}); pdim inf",
                orbit.preperiod + p,
                orbit.preperiod,
                orbit.preperiod
            );
        }
        None => {
            let _ = writeln!(out, "pdim {}", orbit.visited.len() - 1);
        }
    }
    out
}

fn cmd_epsilon(a: &Algebra, as_json: bool) -> ExitCode {
    let tower = match epsilon_tower(a) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    let eps = epsilon(a);
    if as_json {
        let value = json!({
            "kupisch": a.lengths(),
            "epsilon_kupisch": eps.as_ref().ok().map(|e| e.algebra.lengths().to_vec()),
            "blocks": eps.as_ref().ok().map(|e| e.blocks.iter().map(|b| (b.top, b.len)).collect::<Vec<_>>()),
            "error": eps.as_ref().err().map(ToString::to_string),
            "tower": tower.levels.iter().map(|l| l.lengths().to_vec()).collect::<Vec<_>>(),
            "tower_phi_dims": tower.phi_dims,
            "depth": tower.depth,
            "terminal": tower.terminal,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        return ExitCode::SUCCESS;
    }
    match &eps {
        Ok(e) => {
            println!("epsilon: {}", e.algebra);
            print!("{}", block_table(a, e));
        }
        Err(err) => println!("epsilon: undefined ({err})"),
    }
    println!(
        "tower (depth {}, terminal {:?}):",
        tower.depth, tower.terminal
    );
    for (i, (level, phi)) in tower.levels.iter().zip(&tower.phi_dims).enumerate() {
        println!("  eps^{i}: {level}  phi_dim {phi}");
    }
    ExitCode::SUCCESS
}
