//! Scaling benchmark: times every engine for k = 2..=kmax.

use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use kpath::rng::trial_rng;
use kpath::{Algorithm, Graph, TrialReport};
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::dispatch::{decide, DispatchError};
use crate::generators::{complete, erdos_renyi, path_plus_noise, EDGE_PROBABILITY};

/// Divide-and-color recursion trees grow past practical sizes beyond this k.
pub const DEFAULT_DC_KMAX: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// A planted k-path on 2k vertices plus k noise edges among the other k.
    Path,
    /// G(2k, 0.3).
    Random,
    /// The complete graph on 2k vertices.
    Complete,
}

impl Family {
    pub fn instance<R: Rng + ?Sized>(self, k: usize, rng: &mut R) -> Graph {
        let n = 2 * k;
        match self {
            Family::Path => path_plus_noise(n, k, k, rng),
            Family::Random => erdos_renyi(n, EDGE_PROBABILITY, false, rng),
            Family::Complete => complete(n),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub kmax: usize,
    pub family: Family,
    pub reps: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub dc_kmax: usize,
    pub algorithms: Vec<Algorithm>,
}

#[derive(Debug, Serialize)]
pub struct BenchRecord {
    #[serde(flatten)]
    pub report: TrialReport,
    pub n: usize,
    pub m: usize,
    pub family: Family,
    pub rep: usize,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("--reps must be at least 1")]
    ZeroReps,
    #[error("--kmax must be at least 2")]
    KmaxTooSmall,
    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Dispatch(#[from] DispatchError),
}

#[derive(Debug, Clone)]
pub struct EngineGrowth {
    pub algorithm: Algorithm,
    /// Median wall time per k, as (k, seconds).
    pub medians: Vec<(usize, f64)>,
    /// Median of successive ratios of `medians`; `None` with fewer than two points.
    pub growth: Option<f64>,
}

fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

fn growth_factor(medians: &[(usize, f64)]) -> Option<f64> {
    let mut ratios: Vec<f64> = medians
        .windows(2)
        .filter(|w| w[0].1 > 0.0)
        .map(|w| w[1].1 / w[0].1)
        .collect();
    (!ratios.is_empty()).then(|| median(&mut ratios))
}

/// Runs the benchmark, appending one JSON line per engine call to `cfg.out`.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<EngineGrowth>, BenchError> {
    if cfg.reps == 0 {
        return Err(BenchError::ZeroReps);
    }
    if cfg.kmax < 2 {
        return Err(BenchError::KmaxTooSmall);
    }
    let io_err = |source| BenchError::Output {
        path: cfg.out.clone(),
        source,
    };
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(&cfg.out)
        .map_err(io_err)?;
    let mut out = BufWriter::new(file);

    let mut times: Vec<Vec<(usize, Vec<f64>)>> = vec![Vec::new(); cfg.algorithms.len()];
    for k in 2..=cfg.kmax {
        for t in &mut times {
            t.push((k, Vec::with_capacity(cfg.reps)));
        }
        for rep in 0..cfg.reps {
            let mut rng = trial_rng(cfg.seed, ((k as u64) << 32) | rep as u64);
            let g = cfg.family.instance(k, &mut rng);
            let engine_seed: u64 = rng.gen();
            for (slot, &algo) in cfg.algorithms.iter().enumerate() {
                if algo == Algorithm::DivideColor && k > cfg.dc_kmax {
                    continue;
                }
                let report = decide(&g, k, algo, None, engine_seed, false)?;
                times[slot].last_mut().unwrap().1.push(report.wall_time);
                let record = BenchRecord {
                    report,
                    n: g.n(),
                    m: g.edge_count(),
                    family: cfg.family,
                    rep,
                };
                serde_json::to_writer(&mut out, &record).map_err(|e| io_err(e.into()))?;
                out.write_all(b"\n").map_err(io_err)?;
            }
            out.flush().map_err(io_err)?;
        }
    }

    Ok(cfg
        .algorithms
        .iter()
        .zip(times)
        .map(|(&algorithm, per_k)| {
            let medians: Vec<(usize, f64)> = per_k
                .into_iter()
                .filter(|(_, ts)| !ts.is_empty())
                .map(|(k, mut ts)| (k, median(&mut ts)))
                .collect();
            let growth = growth_factor(&medians);
            EngineGrowth {
                algorithm,
                medians,
                growth,
            }
        })
        .collect())
}
