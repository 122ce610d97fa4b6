//! Command-line front end: exact solves, bound tables, simulations,
//! catalog access and interactive play.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use pursuit_core::catalog;
use pursuit_core::game::{align_cop_step, Game, GameState};
use pursuit_core::sim::{self, load_graph, CopPolicy, CopStrategy, SimError, SimulationSpec, Transcript, Verdict};
use pursuit_core::solver::{cops_win_with, SolverConfig};
use pursuit_core::strategy::{self, BoundParams, StrategyOutcome};
use pursuit_core::Vertex;

/// Exit status for domain errors (bad graphs, failed preconditions).
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for command-line usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pursuit", version, about = "Cops and robbers with a fast robber")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length of a shortest cycle.
    Girth {
        /// `catalog:<name>` or an edge-list file
        graph: String,
    },
    /// Exact cop number by state-space search.
    Copnum {
        #[arg(long)]
        speed: usize,
        #[arg(long = "max-cops")]
        max_cops: usize,
        graph: String,
    },
    /// Exact value of the lower bound for (d, t, m).
    Bound {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        speed: u64,
        #[arg(long)]
        m: u64,
    },
    /// Play cops against the evasion strategy.
    Simulate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of runs; run i uses seed + i.
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        /// Worker threads for repeated runs.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Directory to write `run-<i>.json` transcripts into.
        #[arg(long = "out-dir")]
        out_dir: Option<PathBuf>,
    },
    /// Catalog of named cages.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Attach a path so the graph has exactly N vertices.
    PadPath {
        graph: String,
        #[arg(long)]
        n: usize,
    },
    /// Move the cops yourself against the evasion strategy.
    Play {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Re-check a transcript against the rules and its recorded verdict.
    Replay { transcript: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    /// Write the named graph as an edge list.
    Get { name: String },
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// `catalog:<name>` or an edge-list file
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub speed: usize,
    #[arg(long, default_value_t = 1)]
    pub cops: usize,
    /// stationary, random, greedy or script
    #[arg(long, default_value = "greedy")]
    pub strategy: CopStrategy,
    #[arg(long = "max-rounds", default_value_t = 100)]
    pub max_rounds: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Witness size (default floor(d^t / 2)).
    #[arg(long)]
    pub m: Option<u64>,
    /// Comma-separated initial cop vertices (default: all on vertex 0).
    #[arg(long = "initial-cops", value_delimiter = ',')]
    pub initial_cops: Option<Vec<Vertex>>,
    /// File with one line of cop vertices per round, for `--strategy script`.
    #[arg(long)]
    pub script: Option<PathBuf>,
}

impl SpecArgs {
    fn to_spec(&self, strategy: CopStrategy) -> Result<SimulationSpec> {
        let script = match &self.script {
            Some(path) => Some(read_script(path)?),
            None => None,
        };
        Ok(SimulationSpec {
            graph: self.graph.clone(),
            speed: self.speed,
            cop_count: self.cops,
            cop_strategy: strategy,
            max_rounds: self.max_rounds,
            seed: self.seed,
            m: self.m,
            initial_cops: self.initial_cops.clone(),
            script,
        })
    }
}

fn read_script(path: &PathBuf) -> Result<Vec<Vec<Vertex>>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading script {}", path.display()))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_vertices)
        .collect()
}

fn parse_vertices(line: &str) -> Result<Vec<Vertex>> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().with_context(|| format!("`{t}` is not a vertex id")))
        .collect()
}

/// Cop moves typed in at a prompt. Illegal entries are re-prompted with the
/// list of legal cop multisets.
pub struct HumanPolicy<'a> {
    pub input: &'a mut dyn BufRead,
    pub output: &'a mut dyn Write,
}

impl CopPolicy for HumanPolicy<'_> {
    fn step(&mut self, game: &Game<'_>, state: &GameState) -> Result<Vec<Vertex>, SimError> {
        let io_err = |e: std::io::Error| SimError::Controller(e.to_string());
        loop {
            write!(
                self.output,
                "round {}: robber at {}, cops at {:?}. New cop positions: ",
                state.round(),
                state.robber().unwrap_or_default(),
                state.cops()
            )
            .map_err(io_err)?;
            self.output.flush().map_err(io_err)?;
            let mut line = String::new();
            if self.input.read_line(&mut line).map_err(io_err)? == 0 {
                return Err(SimError::Controller("input closed".into()));
            }
            let mut wanted = match parse_vertices(line.trim()) {
                Ok(v) => v,
                Err(e) => {
                    writeln!(self.output, "{e}").map_err(io_err)?;
                    continue;
                }
            };
            wanted.sort_unstable();
            if let Some(pairs) = align_cop_step(game.graph(), state.cops(), &wanted) {
                return Ok(pairs.into_iter().map(|(_, to)| to).collect());
            }
            let legal = game.cop_move_candidates(state)?;
            writeln!(self.output, "illegal move; legal choices: {legal:?}").map_err(io_err)?;
        }
    }
}

/// Parses `argv` and runs the command. Returns the process exit code.
pub fn dispatch<I, T>(argv: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, input, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_DOMAIN
        }
    }
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::RobberSurvived { rounds } => format!("robber survived {rounds} rounds"),
        Verdict::Captured { round } => format!("captured in round {round}"),
        Verdict::StrategyFailure { outcome } => match outcome {
            StrategyOutcome::NoSafeSuccessor { controlled } => {
                format!("strategy failure: no safe successor (controlled paths per target: {controlled:?})")
            }
            StrategyOutcome::PreconditionViolated { violation } => {
                format!("strategy failure: {violation:?}")
            }
            other => format!("strategy failure: {other:?}"),
        },
    }
}

pub fn execute(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Girth { graph } => {
            let g = load_graph(graph)?;
            let girth = g.girth();
            if cli.json {
                emit(out, &json!({"graph": graph, "n": g.n(), "m": g.m(), "girth": girth}))?;
            } else {
                match girth {
                    Some(x) => writeln!(out, "{x}")?,
                    None => writeln!(out, "acyclic")?,
                }
            }
        }
        Command::Copnum { speed, max_cops, graph } => {
            let g = load_graph(graph)?;
            let cfg = SolverConfig::from_env()?;
            let mut reports = Vec::new();
            let mut found = None;
            for k in 1..=*max_cops {
                let r = cops_win_with(&g, k, *speed, &cfg)?;
                reports.push(r);
                if r.cop_win {
                    found = Some(k);
                    break;
                }
            }
            if cli.json {
                emit(
                    out,
                    &json!({"graph": graph, "speed": speed, "max_cops": max_cops,
                            "cop_number": found, "reports": reports}),
                )?;
            } else {
                match found {
                    Some(k) => writeln!(out, "{k}")?,
                    None => writeln!(out, "more than {max_cops}")?,
                }
            }
        }
        Command::Bound { d, speed, m } => {
            let p = BoundParams::new(*d, *speed, *m)?;
            let bound = strategy::evasion_bound(&p);
            let decimal = strategy::to_f64(&bound);
            let certified = strategy::certified_cop_lower_bound(&bound);
            if cli.json {
                emit(
                    out,
                    &json!({"d": d, "speed": speed, "m": m,
                            "alpha": p.alpha().to_string(),
                            "bound": bound.to_string(),
                            "decimal": decimal,
                            "certified_cops": certified.to_string(),
                            "speed_hypothesis": p.speed_hypothesis_holds()}),
                )?;
            } else {
                writeln!(out, "{bound} ({decimal:.6})")?;
                writeln!(out, "cop number >= {certified} (alpha = {})", p.alpha())?;
                if !p.speed_hypothesis_holds() {
                    writeln!(out, "note: speed {speed} exceeds d + 1 = {}", d + 1)?;
                }
            }
        }
        Command::Simulate { spec, repeat, jobs, out_dir } => {
            if *repeat == 0 || *jobs == 0 {
                bail!("--repeat and --jobs must be positive");
            }
            if spec.strategy == CopStrategy::Human {
                bail!("use `play` for human-controlled cops");
            }
            let base = spec.to_spec(spec.strategy)?;
            base.validate()?;
            let specs: Vec<SimulationSpec> = (0..*repeat as u64)
                .map(|i| {
                    let mut s = base.clone();
                    s.seed = base.seed.map(|x| x.wrapping_add(i));
                    s
                })
                .collect();
            let pool = rayon::ThreadPoolBuilder::new().num_threads(*jobs).build()?;
            let results: Vec<Result<Transcript, SimError>> =
                pool.install(|| specs.par_iter().map(sim::run_simulation).collect());
            let transcripts = results.into_iter().collect::<Result<Vec<_>, _>>()?;
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(dir)?;
                for (i, t) in transcripts.iter().enumerate() {
                    std::fs::write(dir.join(format!("run-{i:04}.json")), t.to_json())?;
                }
            }
            if cli.json {
                if transcripts.len() == 1 {
                    writeln!(out, "{}", transcripts[0].to_json())?;
                } else {
                    emit(out, &serde_json::to_value(&transcripts)?)?;
                }
            } else {
                for (i, t) in transcripts.iter().enumerate() {
                    writeln!(out, "run {i}: {}", verdict_line(&t.verdict))?;
                }
            }
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries = catalog::list_entries();
                if cli.json {
                    let rows: Vec<_> = entries
                        .iter()
                        .map(|e| json!({"name": e.name, "degree": e.degree, "girth": e.girth,
                                        "order": e.order, "moore_extremal": e.moore_extremal,
                                        "moore_bound": e.moore_bound() as u64}))
                        .collect();
                    emit(out, &serde_json::Value::Array(rows))?;
                } else {
                    writeln!(out, "{:<18}{:>7}{:>7}{:>7}{:>7}", "name", "degree", "girth", "order", "moore")?;
                    for e in entries {
                        writeln!(
                            out,
                            "{:<18}{:>7}{:>7}{:>7}{:>7}{}",
                            e.name,
                            e.degree,
                            e.girth,
                            e.order,
                            e.moore_bound(),
                            if e.moore_extremal { "  *" } else { "" }
                        )?;
                    }
                }
            }
            CatalogAction::Get { name } => {
                write!(out, "{}", catalog::build(name)?.to_edge_list())?;
            }
        },
        Command::PadPath { graph, n } => {
            let g = load_graph(graph)?;
            write!(out, "{}", g.pad_with_path(*n)?.to_edge_list())?;
        }
        Command::Play { spec } => {
            let spec = spec.to_spec(CopStrategy::Human)?;
            let g = load_graph(&spec.graph)?;
            let transcript = {
                let mut human = HumanPolicy {
                    input,
                    output: &mut *out,
                };
                sim::run_with_policy(&spec, &g, &mut human, |_| {})?
            };
            writeln!(out)?;
            if cli.json {
                writeln!(out, "{}", transcript.to_json())?;
            } else {
                writeln!(out, "{}", verdict_line(&transcript.verdict))?;
            }
        }
        Command::Replay { transcript } => {
            let text = std::fs::read_to_string(transcript)
                .with_context(|| format!("reading {}", transcript.display()))?;
            let t = Transcript::from_json(&text)?;
            let g = load_graph(&t.spec.graph)?;
            let verdict = sim::replay(&t, &g)?;
            if cli.json {
                emit(out, &json!({"ok": true, "verdict": verdict}))?;
            } else {
                writeln!(out, "ok: {}", verdict_line(&verdict))?;
            }
        }
    }
    Ok(())
}
