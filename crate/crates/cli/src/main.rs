//! `mhv`: generate, decompose and solve maximum happy vertices instances.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use mhv_core::baselines::{greedy_mhv, growth_mhv, GrowthOptions};
use mhv_core::exact::{solve_exact, ExactOptions, DEFAULT_STATE_CAP};
use mhv_core::graph::{validate_instance, Instance};
use mhv_core::harness::{bench_run, generate, load_manifest, GeneratorParams};
use mhv_core::heuristic::{solve_heuristic, DistanceWeighting, HeuristicConfig, JoinLoop, LabelWeights, MergeMethod};
use mhv_core::io::{parse_colouring, parse_graph, write_colouring, write_full_colouring, write_graph};
use mhv_core::oracle::{brute_force, DEFAULT_BRUTE_FORCE_CAP};
use mhv_core::parallel::Execution;
use mhv_core::treedec::{make_nice, min_fill_decompose, parse_td, td_stats, write_td, NiceTreeDecomposition};
use mhv_core::{Error, SolveResult};

#[derive(Parser)]
#[command(name = "mhv", version, about = "Maximum happy vertices solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance (writes PREFIX.gr and PREFIX.col).
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        /// Edge probability [default: 5/(n-1)].
        #[arg(long)]
        p: Option<f64>,
        /// Fraction of precoloured vertices [default: 0.1].
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Min-fill tree decomposition in PACE .td format.
    Decompose {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Report colour classes and connectivity of an instance.
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Heuristic tree-decomposition DP.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        td: TdArgs,
        /// Tuple list capacity W.
        #[arg(long, default_value_t = 67)]
        width: usize,
        /// Label weights "H,U,PH,PU".
        #[arg(long, default_value_t = LabelWeights::TUNED)]
        weights: LabelWeights,
        #[arg(long, default_value_t = JoinLoop::SmallerList)]
        join_loop: JoinLoop,
        #[arg(long, default_value_t = DistanceWeighting::CountExternalNeighbours)]
        join_distance: DistanceWeighting,
        #[arg(long, default_value_t = MergeMethod::CopyBag)]
        join_merge: MergeMethod,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact tree-decomposition DP.
    Exact {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        td: TdArgs,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Best single-colour completion.
    Greedy {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Growth-MHV.
    Growth {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Break ties towards low degree.
        #[arg(long)]
        low_degree: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive search over all completions.
    Brute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        cap: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a TOML batch manifest and write CSV.
    Bench {
        manifest: PathBuf,
        /// CSV destination instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long, env = "MHV_WORKERS")]
        workers: Option<usize>,
        /// Leave wall_ms empty for reproducible output.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    graph: PathBuf,
    colouring: PathBuf,
}

#[derive(Args)]
struct TdArgs {
    /// Use this .td file instead of min-fill.
    #[arg(long)]
    td: Option<PathBuf>,
    /// Seed for min-fill tie-breaking.
    #[arg(long, default_value_t = 0)]
    td_seed: u64,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the full colouring here.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(input: &InputArgs) -> Result<Instance> {
    let graph = parse_graph(&read(&input.graph)?).with_context(|| input.graph.display().to_string())?;
    let col = parse_colouring(&read(&input.colouring)?, &graph).with_context(|| input.colouring.display().to_string())?;
    Ok(Instance::new(graph, col)?)
}

fn decompose(inst: &Instance, td: &TdArgs) -> Result<NiceTreeDecomposition> {
    let g = &inst.graph;
    let plain = match &td.td {
        Some(path) => parse_td(&read(path)?, g).with_context(|| path.display().to_string())?,
        None => min_fill_decompose(g, td.td_seed),
    };
    let nice = make_nice(&plain, g)?;
    log::info!("decomposition width {} with {} nice nodes", nice.width(), nice.len());
    Ok(nice)
}

fn report(res: &SolveResult, output: &OutputArgs) -> Result<()> {
    println!(
        "happy {} n {} percent {:.3} optimal {} ms {:.3}",
        res.happy,
        res.colouring.as_slice().len(),
        res.percent_happy,
        res.optimal,
        res.elapsed.as_secs_f64() * 1e3
    );
    if let Some(path) = &output.out {
        fs::write(path, write_full_colouring(&res.colouring)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { n, k, p, q, seed, out } => {
            let preset = GeneratorParams::hard(n, k, seed);
            let params = GeneratorParams {
                p: p.unwrap_or(preset.p),
                q: q.unwrap_or(preset.q),
                ..preset
            };
            let inst = generate(&params)?;
            fs::write(out.with_extension("gr"), write_graph(&inst.graph))?;
            fs::write(out.with_extension("col"), write_colouring(&inst.colouring))?;
        }
        Command::Decompose { graph, seed, out } => {
            let g = parse_graph(&read(&graph)?)?;
            let td = min_fill_decompose(&g, seed);
            let text = write_td(&td, g.n());
            match out {
                Some(path) => fs::write(path, text)?,
                None => io::stdout().write_all(text.as_bytes())?,
            }
            let stats = td_stats(&make_nice(&td, &g)?);
            eprintln!(
                "width {} nice nodes {} (leaves {}, introduce {}, forget {}, join {})",
                stats.width, stats.node_count, stats.leaves, stats.introduces, stats.forgets, stats.joins
            );
        }
        Command::Check { input } => {
            let inst = load(&input)?;
            let rep = validate_instance(&inst);
            println!("n {} k {} precoloured {} components {}", rep.n, rep.k, rep.coloured, rep.components);
            for msg in rep.messages() {
                println!("warning: {msg}");
            }
        }
        Command::Solve { input, td, width, weights, join_loop, join_distance, join_merge, seed, output } => {
            if width == 0 {
                return Err(Error::InvalidParams("width must be at least 1".into()).into());
            }
            let inst = load(&input)?;
            let nice = decompose(&inst, &td)?;
            let config = HeuristicConfig { width, weights, join_loop, join_distance, join_merge, seed };
            report(&solve_heuristic(&inst, &nice, &config)?, &output)?;
        }
        Command::Exact { input, td, state_cap, output } => {
            let inst = load(&input)?;
            let nice = decompose(&inst, &td)?;
            let opts = ExactOptions { state_cap, augment: true };
            report(&solve_exact(&inst, &nice, &opts)?, &output)?;
        }
        Command::Greedy { input, output } => report(&greedy_mhv(&load(&input)?), &output)?,
        Command::Growth { input, seed, low_degree, output } => {
            let opts = GrowthOptions { seed, prefer_low_degree: low_degree };
            report(&growth_mhv(&load(&input)?, opts), &output)?;
        }
        Command::Brute { input, cap, output } => report(&brute_force(&load(&input)?, cap)?, &output)?,
        Command::Bench { manifest, out, workers, no_timing } => {
            let (m, instances, algorithms) = load_manifest(&manifest)?;
            let mut opts = m.options();
            if let Some(w) = workers {
                opts.execution = if w <= 1 {
                    Execution::Sequential
                } else {
                    Execution::Parallel { workers: Some(w) }
                };
            }
            opts.timing &= !no_timing;
            let rows = match out {
                Some(path) => bench_run(&instances, &algorithms, &opts, fs::File::create(path)?)?,
                None => bench_run(&instances, &algorithms, &opts, io::stdout().lock())?,
            };
            let failed = rows.iter().filter(|r| r.status != "ok").count();
            eprintln!("{} runs, {} failed", rows.len(), failed);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let limit = e.downcast_ref::<Error>().is_some_and(Error::is_resource_limit);
            ExitCode::from(if limit { 3 } else { 2 })
        }
    }
}
