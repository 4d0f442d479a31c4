//! Cross-engine verification on small generated graphs.

use std::fmt;
use std::ops::ControlFlow;

use kpath::algebraic::{brute_eval_p, eval_p, field_make, random_assignment, williams_decide};
use kpath::color_coding::{
    color_coding_search, colorful_path_dp, colorful_walk_count_ie, random_coloring, Coloring,
};
use kpath::divide_color::{dc_search, improved_colors_paths};
use kpath::graph::{enumerate_k_paths, for_each_k_path, k_path_endpoints};
use kpath::hom::{col_inj, extended_palette, inj_path, randomized_count_search, sub_path};
use kpath::rng::trial_rng;
use kpath::Graph;
use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

use crate::generators::{complete, cycle, erdos_renyi, path, EDGE_PROBABILITY};

/// Largest `n` for which `eval_p` is compared against the permutation sum.
const EVAL_MAX_N: usize = 5;
const EVAL_MAX_K: usize = 4;
/// Largest `k` run through divide-and-color.
const DC_MAX_K: usize = 5;
/// Trials per randomized engine on no-instances.
const SOUNDNESS_TRIALS: u64 = 3;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub graphs: usize,
    pub seed: u64,
    /// Corrupts one engine output so the harness can be seen to fail.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 7,
            graphs: 200,
            seed: 0,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    SubPathMatchesDfs,
    InjIsTwiceSub,
    ColorfulIeMatchesBrute,
    ColorfulDpMatchesIe,
    ColInjMatchesBrute,
    EvalPMatchesBrute,
    DivideColorEntriesAreReal,
    OneSidedSoundness,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::SubPathMatchesDfs,
        Check::InjIsTwiceSub,
        Check::ColorfulIeMatchesBrute,
        Check::ColorfulDpMatchesIe,
        Check::ColInjMatchesBrute,
        Check::EvalPMatchesBrute,
        Check::DivideColorEntriesAreReal,
        Check::OneSidedSoundness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::SubPathMatchesDfs => "sub_path = dfs count",
            Check::InjIsTwiceSub => "inj = aut * sub",
            Check::ColorfulIeMatchesBrute => "colorful IE = brute colorful sequences",
            Check::ColorfulDpMatchesIe => "colorful DP finds a path iff colorful IE > 0",
            Check::ColInjMatchesBrute => "col_inj = brute colorful sequences",
            Check::EvalPMatchesBrute => "eval_p = brute_eval_p",
            Check::DivideColorEntriesAreReal => "divide-color entries are real k-paths",
            Check::OneSidedSoundness => "randomized engines never say YES on no-instances",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub graph_index: usize,
    pub graph: Graph,
    pub k: usize,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph #{} k={}: {}",
            self.graph_index, self.k, self.detail
        )?;
        write!(f, "{}", self.graph.to_edge_list())
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub check: Check,
    pub cases: u64,
    pub failure: Option<Counterexample>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub graphs: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }
}

/// Graph `index` of the corpus: structured families first, then G(n, 0.3)
/// alternating between undirected and directed.
pub fn corpus_graph(max_n: usize, seed: u64, index: usize) -> Graph {
    let max_n = max_n.max(1);
    let structured = 3 * max_n;
    if index < structured {
        let n = index % max_n + 1;
        return match index / max_n {
            0 => path(n),
            1 => cycle(n),
            _ => complete(n),
        };
    }
    let mut rng = trial_rng(seed, index as u64);
    let n = rng.gen_range(1..=max_n);
    erdos_renyi(n, EDGE_PROBABILITY, index % 2 == 1, &mut rng)
}

/// Number of `k`-vertex sequences that are paths and colorful under `phi`.
pub fn brute_colorful_sequences(g: &Graph, phi: &Coloring, k: usize) -> BigUint {
    let mut count = BigUint::default();
    let _ = for_each_k_path(g, k, |p| {
        if phi.is_colorful(p) {
            count += 1u32;
        }
        ControlFlow::Continue(())
    });
    count
}

type Outcomes = [(u64, Option<Counterexample>); Check::ALL.len()];

struct Recorder<'a> {
    index: usize,
    graph: &'a Graph,
    out: Outcomes,
}

impl Recorder<'_> {
    fn record(&mut self, check: Check, k: usize, ok: bool, detail: impl FnOnce() -> String) {
        let slot = &mut self.out[check as usize];
        slot.0 += 1;
        if !ok && slot.1.is_none() {
            slot.1 = Some(Counterexample {
                graph_index: self.index,
                graph: self.graph.clone(),
                k,
                detail: detail(),
            });
        }
    }
}

fn check_graph(cfg: &VerifyConfig, index: usize) -> Outcomes {
    let g = corpus_graph(cfg.max_n, cfg.seed, index);
    let mut rec = Recorder {
        index,
        graph: &g,
        out: Default::default(),
    };
    let seed = cfg.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut rng = trial_rng(seed, u64::MAX);
    let zero = BigUint::default();

    for k in 1..=g.n() {
        let oracle = enumerate_k_paths(&g, k, Some(0)).count;
        let mut sub = sub_path(&g, k);
        if cfg.inject_fault && oracle > zero {
            sub += 1u32;
        }
        rec.record(Check::SubPathMatchesDfs, k, sub == oracle, || {
            format!("sub_path = {sub}, dfs = {oracle}")
        });

        let aut = if !g.is_directed() && k >= 2 { 2u32 } else { 1 };
        let inj = inj_path(&g, k);
        rec.record(Check::InjIsTwiceSub, k, inj == &oracle * aut, || {
            format!("inj = {inj}, dfs = {oracle}, aut = {aut}")
        });

        let phi = random_coloring(g.n(), k as u32, &mut rng);
        let ie = colorful_walk_count_ie(&g, &phi, k);
        let brute = brute_colorful_sequences(&g, &phi, k);
        rec.record(Check::ColorfulIeMatchesBrute, k, ie == brute, || {
            format!(
                "colorful IE = {ie}, brute = {brute}, colors = {:?}",
                phi.colors()
            )
        });
        let dp = colorful_path_dp(&g, &phi, k);
        let dp_ok = match &dp {
            Some(w) => {
                ie > zero && w.is_valid_in(&g) && w.len() == k && phi.is_colorful(w.vertices())
            }
            None => ie == zero,
        };
        rec.record(Check::ColorfulDpMatchesIe, k, dp_ok, || {
            format!(
                "dp = {dp:?}, colorful IE = {ie}, colors = {:?}",
                phi.colors()
            )
        });

        let wide = random_coloring(g.n(), extended_palette(k), &mut rng);
        let ci = col_inj(&g, &wide, k);
        let brute_wide = brute_colorful_sequences(&g, &wide, k);
        rec.record(Check::ColInjMatchesBrute, k, ci == brute_wide, || {
            format!(
                "col_inj = {ci}, brute = {brute_wide}, colors = {:?}",
                wide.colors()
            )
        });

        if g.n() <= EVAL_MAX_N && k <= EVAL_MAX_K {
            let spec = field_make(k).expect("small k has a field");
            let asg = random_assignment(&g, k, spec, &mut rng);
            let (fast, slow) = (eval_p(&g, k, &asg), brute_eval_p(&g, k, &asg));
            rec.record(Check::EvalPMatchesBrute, k, fast == slow, || {
                format!(
                    "eval_p = {:#x}, brute_eval_p = {:#x}",
                    fast.bits(),
                    slow.bits()
                )
            });
        }

        if (2..=DC_MAX_K).contains(&k) {
            let all: Vec<usize> = (0..g.n()).collect();
            let ends = k_path_endpoints(&g, k);
            let m = improved_colors_paths(&g, &all, k, k, &mut rng);
            let bad = m.entries().find(|e| !ends.contains(e));
            rec.record(Check::DivideColorEntriesAreReal, k, bad.is_none(), || {
                format!("entry {bad:?} has no {k}-path")
            });
        }

        if oracle == zero {
            let s = rng.gen();
            let mut yes = Vec::new();
            if color_coding_search(&g, k, SOUNDNESS_TRIALS, s)
                .decision
                .is_yes()
            {
                yes.push("color-coding");
            }
            if k <= DC_MAX_K && dc_search(&g, k, s).decision.is_yes() {
                yes.push("divide-color");
            }
            if randomized_count_search(&g, k, SOUNDNESS_TRIALS, s)
                .decision
                .is_yes()
            {
                yes.push("count-colorful");
            }
            if williams_decide(&g, k, SOUNDNESS_TRIALS, s).is_ok_and(|r| r.decision.is_yes()) {
                yes.push("algebraic");
            }
            rec.record(Check::OneSidedSoundness, k, yes.is_empty(), || {
                format!("YES from {yes:?} with seed {s}")
            });
        }
    }
    rec.out
}

pub fn run_verify(cfg: &VerifyConfig) -> VerifySummary {
    let per_graph: Vec<Outcomes> = (0..cfg.graphs)
        .into_par_iter()
        .map(|i| check_graph(cfg, i))
        .collect();
    let outcomes = Check::ALL
        .iter()
        .map(|&check| {
            let slot = check as usize;
            CheckOutcome {
                check,
                cases: per_graph.iter().map(|o| o[slot].0).sum(),
                failure: per_graph.iter().find_map(|o| o[slot].1.clone()),
            }
        })
        .collect();
    VerifySummary {
        graphs: cfg.graphs,
        outcomes,
    }
}
