use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::bench::{Algorithm, BenchInstance, BenchOptions};
use super::generate::{generate, GeneratorParams};
use crate::baselines::GrowthOptions;
use crate::error::{Error, Result};
use crate::exact::{ExactOptions, DEFAULT_STATE_CAP};
use crate::graph::Instance;
use crate::heuristic::HeuristicConfig;
use crate::io::{parse_colouring, parse_graph};
use crate::oracle::DEFAULT_BRUTE_FORCE_CAP;
use crate::parallel::Execution;

/// A batch experiment read from TOML.
///
/// ```toml
/// repetitions = 3
/// timing = true
///
/// [[instances]]
/// name = "small"
/// graph = "small.gr"
/// colouring = "small.col"
///
/// [[generate]]
/// prefix = "er"
/// n = 100
/// k = 3
/// seeds = [1, 2, 3]
///
/// [[runs]]
/// algorithm = "heuristic"
/// width = 67
///
/// [[runs]]
/// algorithm = "greedy"
/// ```
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default = "one")]
    pub repetitions: usize,
    #[serde(default = "yes")]
    pub timing: bool,
    #[serde(default)]
    pub include_decomposition: bool,
    #[serde(default)]
    pub td_seed: u64,
    /// Worker threads; absent means sequential.
    pub workers: Option<usize>,
    #[serde(default)]
    pub instances: Vec<FileInstance>,
    #[serde(default)]
    pub generate: Vec<GeneratedSet>,
    pub runs: Vec<Run>,
}

fn one() -> usize {
    1
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileInstance {
    pub name: Option<String>,
    pub graph: PathBuf,
    pub colouring: PathBuf,
}

/// Generated instances; `p` and `q` default to the sparse preset.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratedSet {
    #[serde(default = "er")]
    pub prefix: String,
    pub n: usize,
    pub k: u32,
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub seeds: Vec<u64>,
}

fn er() -> String {
    "er".into()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "algorithm", rename_all = "snake_case", deny_unknown_fields)]
pub enum Run {
    Heuristic {
        width: Option<usize>,
        weights: Option<String>,
        join_loop: Option<String>,
        join_distance: Option<String>,
        join_merge: Option<String>,
        seed: Option<u64>,
    },
    Exact {
        state_cap: Option<usize>,
        augment: Option<bool>,
    },
    Greedy,
    Growth {
        seed: Option<u64>,
        #[serde(default)]
        prefer_low_degree: bool,
    },
    Brute {
        cap: Option<u64>,
    },
}

fn field<T: std::str::FromStr>(value: &Option<String>, default: T) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    match value {
        None => Ok(default),
        Some(s) => s.parse().map_err(|e| Error::InvalidParams(format!("{s:?}: {e}"))),
    }
}

impl Run {
    pub fn to_algorithm(&self) -> Result<Algorithm> {
        Ok(match self {
            Run::Heuristic { width, weights, join_loop, join_distance, join_merge, seed } => {
                let d = HeuristicConfig::default();
                let config = HeuristicConfig {
                    width: width.unwrap_or(d.width),
                    weights: field(weights, d.weights)?,
                    join_loop: field(join_loop, d.join_loop)?,
                    join_distance: field(join_distance, d.join_distance)?,
                    join_merge: field(join_merge, d.join_merge)?,
                    seed: seed.unwrap_or(d.seed),
                };
                if config.width == 0 {
                    return Err(Error::InvalidParams("width must be at least 1".into()));
                }
                Algorithm::Heuristic(config)
            }
            Run::Exact { state_cap, augment } => Algorithm::Exact(ExactOptions {
                state_cap: state_cap.unwrap_or(DEFAULT_STATE_CAP),
                augment: augment.unwrap_or(true),
            }),
            Run::Greedy => Algorithm::Greedy,
            Run::Growth { seed, prefer_low_degree } => Algorithm::Growth(GrowthOptions {
                seed: seed.unwrap_or(0),
                prefer_low_degree: *prefer_low_degree,
            }),
            Run::Brute { cap } => Algorithm::Brute { cap: cap.unwrap_or(DEFAULT_BRUTE_FORCE_CAP) },
        })
    }
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::InvalidParams(format!("manifest: {e}")))
    }

    pub fn options(&self) -> BenchOptions {
        BenchOptions {
            repetitions: self.repetitions,
            timing: self.timing,
            include_decomposition: self.include_decomposition,
            td_seed: self.td_seed,
            execution: match self.workers {
                None => Execution::Sequential,
                Some(w) => Execution::Parallel { workers: Some(w) },
            },
        }
    }

    pub fn algorithms(&self) -> Result<Vec<Algorithm>> {
        self.runs.iter().map(Run::to_algorithm).collect()
    }

    /// Loads file instances relative to `base` and generates the rest.
    pub fn instances(&self, base: &Path) -> Result<Vec<BenchInstance>> {
        let mut out = Vec::new();
        for fi in &self.instances {
            let graph = parse_graph(&fs::read_to_string(base.join(&fi.graph))?)?;
            let colouring = parse_colouring(&fs::read_to_string(base.join(&fi.colouring))?, &graph)?;
            let name = fi.name.clone().unwrap_or_else(|| {
                fi.graph.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned())
            });
            out.push(BenchInstance { name, instance: Instance::new(graph, colouring)? });
        }
        for set in &self.generate {
            for &seed in &set.seeds {
                let preset = GeneratorParams::hard(set.n, set.k, seed);
                let params = GeneratorParams {
                    p: set.p.unwrap_or(preset.p),
                    q: set.q.unwrap_or(preset.q),
                    ..preset
                };
                out.push(BenchInstance {
                    name: format!("{}-n{}-k{}-s{}", set.prefix, set.n, set.k, seed),
                    instance: generate(&params)?,
                });
            }
        }
        Ok(out)
    }
}

/// Reads a manifest file; instance paths resolve against its directory.
pub fn load_manifest(path: &Path) -> Result<(Manifest, Vec<BenchInstance>, Vec<Algorithm>)> {
    let manifest = Manifest::parse(&fs::read_to_string(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let instances = manifest.instances(base)?;
    let algorithms = manifest.algorithms()?;
    Ok((manifest, instances, algorithms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heuristic::{JoinLoop, LabelWeights};

    #[test]
    fn parses_runs() {
        let m = Manifest::parse(
            r#"
            repetitions = 2
            workers = 2
            [[generate]]
            n = 30
            k = 3
            seeds = [1, 2]
            [[runs]]
            algorithm = "heuristic"
            width = 5
            weights = "1,0,0,0"
            join_loop = "random"
            [[runs]]
            algorithm = "greedy"
            [[runs]]
            algorithm = "growth"
            prefer_low_degree = true
            "#,
        )
        .unwrap();
        let algs = m.algorithms().unwrap();
        let Algorithm::Heuristic(c) = &algs[0] else { panic!() };
        assert_eq!((c.width, c.weights, c.join_loop), (5, LabelWeights::HAPPY_ONLY, JoinLoop::Random));
        assert_eq!(algs[1], Algorithm::Greedy);
        assert_eq!(m.options().execution, Execution::Parallel { workers: Some(2) });
        let insts = m.instances(Path::new(".")).unwrap();
        assert_eq!(insts[1].name, "er-n30-k3-s2");
    }

    #[test]
    fn rejects_bad_values() {
        let m = Manifest::parse("[[runs]]\nalgorithm = \"heuristic\"\njoin_merge = \"zip\"\n").unwrap();
        assert!(m.algorithms().is_err());
        assert!(Manifest::parse("[[runs]]\nalgorithm = \"magic\"\n").is_err());
        assert!(Manifest::parse("runs = []\nbogus = 1\n").is_err());
    }
}
