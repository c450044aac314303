use std::io::Write;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::baselines::{greedy_mhv, growth_mhv, GrowthOptions};
use crate::error::Result;
use crate::exact::{solve_exact, ExactOptions};
use crate::graph::Instance;
use crate::heuristic::{solve_heuristic, HeuristicConfig};
use crate::oracle::brute_force;
use crate::parallel::{Execution, Executor};
use crate::solution::SolveResult;
use crate::treedec::{make_nice, min_fill_decompose, NiceTreeDecomposition};

/// Bumped whenever the column set or its meaning changes.
pub const BENCH_CSV_VERSION: u32 = 1;
pub const BENCH_CSV_HEADER: &str =
    "instance,algorithm,config,seed,repetition,n,happy,percent_happy,optimal,wall_ms,td_width,td_nodes,status";

#[derive(Debug, Clone)]
pub struct BenchInstance {
    pub name: String,
    pub instance: Instance,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Algorithm {
    Heuristic(HeuristicConfig),
    Exact(ExactOptions),
    Greedy,
    Growth(GrowthOptions),
    Brute { cap: u64 },
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Heuristic(_) => "heuristic",
            Algorithm::Exact(_) => "exact",
            Algorithm::Greedy => "greedy",
            Algorithm::Growth(_) => "growth",
            Algorithm::Brute { .. } => "brute",
        }
    }

    pub fn config(&self) -> String {
        match self {
            Algorithm::Heuristic(c) => format!(
                "W={} weights={} loop={} distance={} merge={}",
                c.width, c.weights, c.join_loop, c.join_distance, c.join_merge
            ),
            Algorithm::Exact(o) => format!("state_cap={} augment={}", o.state_cap, o.augment),
            Algorithm::Greedy => String::new(),
            Algorithm::Growth(o) => {
                format!("ties={}", if o.prefer_low_degree { "low_degree" } else { "high_degree" })
            }
            Algorithm::Brute { cap } => format!("cap={cap}"),
        }
    }

    fn uses_decomposition(&self) -> bool {
        matches!(self, Algorithm::Heuristic(_) | Algorithm::Exact(_))
    }

    /// The seed each repetition actually runs with.
    fn seeded(&self, repetition: usize) -> (Algorithm, Option<u64>) {
        let rep = repetition as u64;
        match self {
            Algorithm::Heuristic(c) => {
                let seed = c.seed.wrapping_add(rep);
                (Algorithm::Heuristic(HeuristicConfig { seed, ..c.clone() }), Some(seed))
            }
            Algorithm::Growth(o) => {
                let seed = o.seed.wrapping_add(rep);
                (Algorithm::Growth(GrowthOptions { seed, ..*o }), Some(seed))
            }
            other => (other.clone(), None),
        }
    }

    fn solve(&self, inst: &Instance, nice: Option<&NiceTreeDecomposition>) -> Result<SolveResult> {
        match self {
            Algorithm::Heuristic(c) => solve_heuristic(inst, nice.expect("decomposed"), c),
            Algorithm::Exact(o) => solve_exact(inst, nice.expect("decomposed"), o),
            Algorithm::Greedy => Ok(greedy_mhv(inst)),
            Algorithm::Growth(o) => Ok(growth_mhv(inst, *o)),
            Algorithm::Brute { cap } => brute_force(inst, *cap),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    pub repetitions: usize,
    /// Leave `wall_ms` empty so the output is byte-for-byte reproducible.
    pub timing: bool,
    /// Count min-fill and nice conversion towards decomposition-based runs.
    pub include_decomposition: bool,
    pub td_seed: u64,
    pub execution: Execution,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            repetitions: 1,
            timing: true,
            include_decomposition: false,
            td_seed: 0,
            execution: Execution::Sequential,
        }
    }
}

/// One CSV row. Failed runs keep their row with the error in `status`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub instance: String,
    pub algorithm: String,
    pub config: String,
    pub seed: Option<u64>,
    pub repetition: usize,
    pub n: usize,
    pub happy: Option<usize>,
    pub percent_happy: Option<f64>,
    pub optimal: Option<bool>,
    pub wall_ms: Option<f64>,
    pub td_width: Option<usize>,
    pub td_nodes: Option<usize>,
    pub status: String,
}

struct Decomposed {
    nice: Result<NiceTreeDecomposition, String>,
    time: Duration,
}

/// Runs every algorithm on every instance `repetitions` times and writes the
/// rows to `out` as CSV, flushing after each batch of jobs. Row order is
/// instance, then algorithm, then repetition regardless of execution mode.
pub fn bench_run<W: Write>(
    instances: &[BenchInstance],
    algorithms: &[Algorithm],
    opts: &BenchOptions,
    out: W,
) -> Result<Vec<BenchRecord>> {
    let exec = Executor::new(opts.execution);
    let want_td = algorithms.iter().any(Algorithm::uses_decomposition);
    let decomposed = exec.map(instances, |bi| {
        let start = Instant::now();
        let nice = if want_td {
            let g = &bi.instance.graph;
            make_nice(&min_fill_decompose(g, opts.td_seed), g).map_err(|e| e.to_string())
        } else {
            Err("not decomposed".into())
        };
        Decomposed { nice, time: start.elapsed() }
    });

    let jobs: Vec<(usize, usize, usize)> = (0..instances.len())
        .flat_map(|i| (0..algorithms.len()).flat_map(move |a| (0..opts.repetitions).map(move |r| (i, a, r))))
        .collect();

    let mut writer = csv::Writer::from_writer(out);
    let mut records = Vec::with_capacity(jobs.len());
    for chunk in jobs.chunks(exec.workers() * 4) {
        let rows = exec.map(chunk, |&(i, a, r)| run_one(&instances[i], &decomposed[i], &algorithms[a], r, opts));
        for row in &rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
        records.extend(rows);
    }
    if records.is_empty() {
        // The header is written with the first row; keep it for empty runs.
        writer.write_record(BENCH_CSV_HEADER.split(','))?;
        writer.flush()?;
    }
    Ok(records)
}

fn run_one(bi: &BenchInstance, dec: &Decomposed, alg: &Algorithm, rep: usize, opts: &BenchOptions) -> BenchRecord {
    let (alg, seed) = alg.seeded(rep);
    let mut rec = BenchRecord {
        instance: bi.name.clone(),
        algorithm: alg.name().into(),
        config: alg.config(),
        seed,
        repetition: rep,
        n: bi.instance.graph.n(),
        happy: None,
        percent_happy: None,
        optimal: None,
        wall_ms: None,
        td_width: None,
        td_nodes: None,
        status: "ok".into(),
    };
    let mut extra = Duration::ZERO;
    let nice = if alg.uses_decomposition() {
        match &dec.nice {
            Ok(nice) => {
                rec.td_width = Some(nice.width());
                rec.td_nodes = Some(nice.len());
                if opts.include_decomposition {
                    extra = dec.time;
                }
                Some(nice)
            }
            Err(e) => {
                rec.status = format!("error: {e}");
                return rec;
            }
        }
    } else {
        None
    };
    let start = Instant::now();
    let outcome = alg.solve(&bi.instance, nice);
    let wall = start.elapsed() + extra;
    if opts.timing {
        rec.wall_ms = Some(wall.as_secs_f64() * 1e3);
    }
    match outcome {
        Ok(res) => {
            rec.happy = Some(res.happy);
            rec.percent_happy = Some(res.percent_happy);
            rec.optimal = Some(res.optimal);
        }
        Err(e) => rec.status = format!("error: {e}"),
    }
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{generate, GeneratorParams};
    use crate::oracle::DEFAULT_BRUTE_FORCE_CAP;

    fn batch() -> Vec<BenchInstance> {
        (0..6)
            .map(|s| BenchInstance {
                name: format!("er{s}"),
                instance: generate(&GeneratorParams { q: 0.3, ..GeneratorParams::hard(14, 2, s) }).unwrap(),
            })
            .collect()
    }

    fn algorithms() -> Vec<Algorithm> {
        vec![
            Algorithm::Heuristic(HeuristicConfig::default()),
            Algorithm::Exact(ExactOptions::default()),
            Algorithm::Greedy,
            Algorithm::Growth(GrowthOptions::default()),
            Algorithm::Brute { cap: DEFAULT_BRUTE_FORCE_CAP },
        ]
    }

    #[test]
    fn csv_is_deterministic_across_execution_modes() {
        let insts = batch();
        let mut opts = BenchOptions { repetitions: 2, timing: false, ..BenchOptions::default() };
        let mut seq = Vec::new();
        let rows = bench_run(&insts, &algorithms(), &opts, &mut seq).unwrap();
        opts.execution = Execution::Parallel { workers: Some(3) };
        let mut par = Vec::new();
        bench_run(&insts, &algorithms(), &opts, &mut par).unwrap();
        assert_eq!(seq, par);
        let text = String::from_utf8(seq).unwrap();
        assert_eq!(text.lines().next(), Some(BENCH_CSV_HEADER));
        assert_eq!(rows.len(), 6 * 5 * 2);
        for chunk in rows.chunks(10) {
            let exact = chunk[2].happy;
            assert_eq!(chunk[8].happy, exact);
            assert!(chunk.iter().all(|r| r.happy <= exact && r.status == "ok"));
        }
    }

    #[test]
    fn failures_become_rows() {
        let insts = batch();
        let algs = [Algorithm::Brute { cap: 1 }, Algorithm::Exact(ExactOptions { state_cap: 1, augment: true })];
        let rows = bench_run(&insts[..1], &algs, &BenchOptions::default(), std::io::sink()).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.status.starts_with("error: resource limit") && r.happy.is_none()));
    }

    #[test]
    fn empty_run_keeps_header() {
        let mut out = Vec::new();
        bench_run(&[], &algorithms(), &BenchOptions::default(), &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap().trim_end(), BENCH_CSV_HEADER);
    }
}
