//! Engine dispatch for `decide` and `count`.

use std::time::Instant;

use kpath::algebraic::{self, williams_decide, FieldError};
use kpath::color_coding::{
    color_coding_search, color_coding_trials, colorful_walk_count_ie, random_coloring, Coloring,
    ColoringError, DEFAULT_DELTA,
};
use kpath::divide_color::dc_search;
use kpath::graph::{dfs_decide, enumerate_k_paths};
use kpath::hom::{
    col_inj, count_search_trials, extended_palette, randomized_count_search, sub_path,
};
use kpath::rng::trial_rng;
use kpath::{Algorithm, Decision, Graph, TrialReport};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DispatchError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("--trials must be at least 1")]
    ZeroTrials,
    #[error("--colors has {got} entries but the graph has {n} vertices")]
    ColorCount { got: usize, n: usize },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Trials used when `--trials` is not given.
pub fn default_trials(algo: Algorithm, k: usize) -> u64 {
    match algo {
        Algorithm::ColorCoding => color_coding_trials(k, DEFAULT_DELTA),
        Algorithm::CountColorful => count_search_trials(k, DEFAULT_DELTA),
        Algorithm::Algebraic => algebraic::DEFAULT_TRIALS,
        Algorithm::Dfs | Algorithm::CountIe | Algorithm::DivideColor => 1,
    }
}

/// Runs a decision engine. Witnesses are dropped unless `keep_witness`.
pub fn decide(
    g: &Graph,
    k: usize,
    algo: Algorithm,
    trials: Option<u64>,
    seed: u64,
    keep_witness: bool,
) -> Result<TrialReport, DispatchError> {
    if k == 0 {
        return Err(DispatchError::ZeroK);
    }
    let trials = trials.unwrap_or_else(|| default_trials(algo, k));
    if trials == 0 {
        return Err(DispatchError::ZeroTrials);
    }
    let mut report = match algo {
        Algorithm::Dfs => {
            let started = Instant::now();
            let witness = dfs_decide(g, k);
            TrialReport {
                algorithm: algo,
                k,
                seed,
                trials_run: 1,
                decision: Decision::from(witness.is_some()),
                witness,
                count: None,
                wall_time: started.elapsed().as_secs_f64(),
            }
        }
        Algorithm::CountIe => {
            let started = Instant::now();
            let count = sub_path(g, k);
            TrialReport {
                algorithm: algo,
                k,
                seed,
                trials_run: 1,
                decision: Decision::from(count > BigUint::default()),
                witness: None,
                count: Some(count),
                wall_time: started.elapsed().as_secs_f64(),
            }
        }
        Algorithm::ColorCoding => color_coding_search(g, k, trials, seed),
        Algorithm::DivideColor => dc_search(g, k, seed),
        Algorithm::CountColorful => randomized_count_search(g, k, trials, seed),
        Algorithm::Algebraic => williams_decide(g, k, trials, seed)?,
    };
    if !keep_witness {
        report.witness = None;
    }
    Ok(report)
}

/// Counting engines exposed by `count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CountAlgo {
    /// Exhaustive path enumeration.
    Dfs,
    /// Inclusion-exclusion over homomorphism counts.
    Ie,
    /// Colorful injective homomorphisms under a coloring.
    ColorfulIe,
    /// Colorful walk sequences by inclusion-exclusion over k colors.
    AppendixA,
}

/// Exact count. Colorful variants use `colors` (1-based, one per vertex)
/// or draw a coloring from `seed`.
pub fn count(
    g: &Graph,
    k: usize,
    algo: CountAlgo,
    colors: Option<Vec<u32>>,
    seed: u64,
) -> Result<TrialReport, DispatchError> {
    if k == 0 {
        return Err(DispatchError::ZeroK);
    }
    if let Some(c) = &colors {
        if c.len() != g.n() {
            return Err(DispatchError::ColorCount {
                got: c.len(),
                n: g.n(),
            });
        }
    }
    let coloring = |palette: u32| -> Result<Coloring, DispatchError> {
        Ok(match &colors {
            Some(c) => Coloring::new(palette, c.clone())?,
            None => random_coloring(g.n(), palette, &mut trial_rng(seed, 0)),
        })
    };
    let started = Instant::now();
    let (algorithm, value) = match algo {
        CountAlgo::Dfs => (Algorithm::Dfs, enumerate_k_paths(g, k, Some(0)).count),
        CountAlgo::Ie => (Algorithm::CountIe, sub_path(g, k)),
        CountAlgo::ColorfulIe => {
            let palette = match &colors {
                Some(c) => c.iter().copied().max().unwrap_or(1).max(k as u32),
                None => extended_palette(k),
            };
            (Algorithm::CountColorful, col_inj(g, &coloring(palette)?, k))
        }
        CountAlgo::AppendixA => (
            Algorithm::ColorCoding,
            colorful_walk_count_ie(g, &coloring(k as u32)?, k),
        ),
    };
    Ok(TrialReport {
        algorithm,
        k,
        seed,
        trials_run: 1,
        decision: Decision::from(value > BigUint::default()),
        witness: None,
        count: Some(value),
        wall_time: started.elapsed().as_secs_f64(),
    })
}
