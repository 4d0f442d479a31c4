//! Path counting through homomorphisms.
//!
//! `Hom(P_k, G)` (the number of k-vertex walks) is a cheap dynamic program.
//! Inclusion-exclusion over the vertex subsets a walk may use turns it into
//! `Inj(P_k, G)`, the number of injective maps, i.e. path sequences.
//! Restricting the subsets to unions of color classes gives the number of
//! colorful injective maps, which drives a randomized decision procedure
//! with `⌈1.3k⌉` colors.

use std::time::Instant;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::Signed;

use crate::color_coding::{random_coloring, Coloring};
use crate::graph::Graph;
use crate::report::{Algorithm, Decision, TrialReport};
use crate::rng::trial_rng;
use crate::walks::count_walks;

/// Number of homomorphisms from the k-vertex path into `g`, which is the
/// number of k-vertex walk sequences.
pub fn hom_path(g: &Graph, k: usize) -> BigUint {
    assert!(k >= 1);
    count_walks(g, k, &vec![true; g.n()])
}

/// `Hom(P_k, g[Y])` where `Y = { v : keep[v] }`.
pub fn hom_path_induced(g: &Graph, k: usize, keep: &[bool]) -> BigUint {
    assert!(k >= 1);
    count_walks(g, k, keep)
}

/// Accumulates a signed sum of unsigned terms.
#[derive(Default)]
struct SignedSum {
    plus: BigUint,
    minus: BigUint,
}

impl SignedSum {
    fn add(&mut self, negative: bool, term: BigUint) {
        if negative {
            self.minus += term;
        } else {
            self.plus += term;
        }
    }

    /// The total, which must be non-negative.
    fn into_count(self) -> BigUint {
        let total = BigInt::from(self.plus) - BigInt::from(self.minus);
        assert!(
            !total.is_negative(),
            "inclusion-exclusion produced a negative count"
        );
        total.magnitude().clone()
    }
}

/// Number of injective homomorphisms from the k-vertex path into `g`:
///
/// `Σ_{Y ⊆ V, |Y| ≤ k} (-1)^{k-|Y|} · C(n-|Y|, k-|Y|) · Hom(P_k, g[Y])`.
///
/// Every subset of at most `k` vertices is visited, so this is meant for
/// small graphs. `k > n` gives zero.
pub fn inj_path(g: &Graph, k: usize) -> BigUint {
    assert!(k >= 1);
    let n = g.n();
    if k > n {
        return BigUint::default();
    }
    let mut sum = SignedSum::default();
    let mut keep = vec![false; n];
    for size in 1..=k {
        let coeff = binomial(BigUint::from(n - size), BigUint::from(k - size));
        for subset in (0..n).combinations(size) {
            keep.iter_mut().for_each(|b| *b = false);
            for &v in &subset {
                keep[v] = true;
            }
            let hom = count_walks(g, k, &keep);
            sum.add((k - size) % 2 == 1, &coeff * hom);
        }
    }
    sum.into_count()
}

/// Number of distinct k-vertex paths: `Inj / Aut(P_k)`.
///
/// An undirected path with at least two vertices has two automorphisms;
/// a single vertex has one, and directed paths are counted per sequence.
pub fn sub_path(g: &Graph, k: usize) -> BigUint {
    let inj = inj_path(g, k);
    if k >= 2 && !g.is_directed() {
        inj / 2u32
    } else {
        inj
    }
}

/// Drops every arc whose endpoints share a color.
pub fn strip_monochromatic(g: &Graph, phi: &Coloring) -> Graph {
    assert_eq!(phi.len(), g.n());
    g.filter_arcs(|u, v| phi.color(u) != phi.color(v))
}

/// Number of colorful injective homomorphisms from the k-vertex path into
/// `g` under `phi` (palette `k* ≥ k`):
///
/// `Σ_{I ⊆ [k*], |I| ≤ k} (-1)^{k-|I|} · C(k*-|I|, k-|I|) · Hom(P_k, G#[∪_{i∈I} V_i])`
///
/// where `G#` is `g` without monochromatic arcs and `V_i` the class of
/// color `i`.
pub fn col_inj(g: &Graph, phi: &Coloring, k: usize) -> BigUint {
    assert!(k >= 1);
    let palette = phi.palette_size() as usize;
    assert!(palette >= k, "col-Inj needs at least k colors");
    assert!(palette < 64);
    let stripped = strip_monochromatic(g, phi);
    col_inj_on_stripped(&stripped, phi, k)
}

fn col_inj_on_stripped(stripped: &Graph, phi: &Coloring, k: usize) -> BigUint {
    let palette = phi.palette_size() as usize;
    let mut sum = SignedSum::default();
    let mut keep = vec![false; stripped.n()];
    for size in 1..=k {
        let coeff = binomial(BigUint::from(palette - size), BigUint::from(k - size));
        for classes in (0..palette).combinations(size) {
            let mask: u64 = classes.iter().map(|&c| 1u64 << c).sum();
            for (v, b) in keep.iter_mut().enumerate() {
                *b = mask & (1 << phi.index(v)) != 0;
            }
            let hom = count_walks(stripped, k, &keep);
            sum.add((k - size) % 2 == 1, &coeff * hom);
        }
    }
    sum.into_count()
}

/// `⌈1.3k⌉`, the palette used by [`randomized_count_search`].
pub fn extended_palette(k: usize) -> u32 {
    (13 * k).div_ceil(10) as u32
}

/// `⌈1.752^k · ln(1/δ)⌉` passes, from the lower bound `1.752^-k` on the
/// probability that a fixed k-path is colorful under `⌈1.3k⌉` colors.
pub fn count_search_trials(k: usize, delta: f64) -> u64 {
    assert!(delta > 0.0 && delta < 1.0);
    (1.752f64.powi(k as i32) * (1.0 / delta).ln())
        .ceil()
        .max(1.0) as u64
}

/// Up to `trials` passes of: random `⌈1.3k⌉`-coloring, then [`col_inj`].
/// YES on the first pass with a positive count.
pub fn randomized_count_search(g: &Graph, k: usize, trials: u64, seed: u64) -> TrialReport {
    assert!(trials >= 1);
    assert!(k >= 1);
    let started = Instant::now();
    let mut report = TrialReport::new(Algorithm::CountColorful, k, seed, started);
    let palette = extended_palette(k);
    for t in 0..trials {
        let phi = random_coloring(g.n(), palette, &mut trial_rng(seed, t));
        let count = col_inj(g, &phi, k);
        if count > BigUint::default() {
            report.trials_run = t + 1;
            report.decision = Decision::Yes;
            report.count = Some(count);
            return report.finish(started);
        }
    }
    report.trials_run = trials;
    report.finish(started)
}

#[cfg(test)]
mod tests {
    use std::ops::ControlFlow;

    use rand::Rng;

    use super::*;
    use crate::graph::{enumerate_k_paths, for_each_k_path};

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, false, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, false, &edges).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn random_graph(seed: u64, max_n: usize, directed: bool) -> Graph {
        let mut rng = trial_rng(seed, 7);
        let n = rng.gen_range(1..=max_n);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && (directed || u < v) && rng.gen_bool(0.35) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, directed, &edges).unwrap()
    }

    /// Walk sequences by direct enumeration of all n^k vertex tuples.
    fn brute_walks(g: &Graph, k: usize) -> u64 {
        (0..k)
            .map(|_| 0..g.n())
            .multi_cartesian_product()
            .filter(|seq| seq.windows(2).all(|w| g.has_arc(w[0], w[1])))
            .count() as u64
    }

    #[test]
    fn hom_examples() {
        let g = random_graph(3, 6, false);
        assert_eq!(hom_path(&g, 1), big(g.n() as u64));
        assert_eq!(hom_path(&complete(3), 3), big(12));
        assert_eq!(hom_path(&g, 2), big(2 * g.edge_count() as u64));
    }

    #[test]
    fn hom_matches_tuple_enumeration() {
        for seed in 0..30 {
            let g = random_graph(seed, 5, seed % 2 == 0);
            for k in 1..=4 {
                assert_eq!(hom_path(&g, k), big(brute_walks(&g, k)));
            }
        }
    }

    #[test]
    fn hom_on_complete_graphs() {
        for n in 1..=8u64 {
            let g = complete(n as usize);
            for k in 1..=6u32 {
                assert_eq!(hom_path(&g, k as usize), big(n * (n - 1).pow(k - 1)));
            }
        }
    }

    #[test]
    fn hom_on_induced_subgraph_matches_deletion() {
        let g = random_graph(11, 7, false);
        let keep: Vec<bool> = (0..g.n()).map(|v| v % 3 != 1).collect();
        let removed: Vec<usize> = (0..g.n()).filter(|&v| !keep[v]).collect();
        let sub = g.induced_delete(&removed);
        for k in 1..=4 {
            assert_eq!(hom_path_induced(&g, k, &keep), hom_path(&sub.graph, k));
        }
    }

    #[test]
    fn inj_examples() {
        assert_eq!(inj_path(&complete(3), 3), big(6));
        assert_eq!(inj_path(&path(4), 4), big(2));
        assert_eq!(inj_path(&Graph::empty(3, false), 2), big(0));
        assert_eq!(inj_path(&complete(3), 5), big(0));
    }

    #[test]
    fn sub_examples() {
        assert_eq!(sub_path(&complete(3), 3), big(3));
        assert_eq!(sub_path(&complete(4), 3), big(12));
        let g = random_graph(5, 7, false);
        assert_eq!(sub_path(&g, 1), big(g.n() as u64));
    }

    #[test]
    fn sub_equals_oracle() {
        for seed in 0..60 {
            let g = random_graph(seed, 7, seed % 4 == 0);
            for k in 1..=g.n() {
                let oracle = enumerate_k_paths(&g, k, Some(0)).count;
                assert_eq!(sub_path(&g, k), oracle, "{g:?} k={k}");
                if k >= 2 && !g.is_directed() {
                    assert_eq!(inj_path(&g, k), oracle * 2u32);
                }
            }
        }
    }

    /// n = k: the sum runs over every vertex subset and the binomial is 1.
    #[test]
    fn inj_when_pattern_and_host_have_equal_size() {
        for seed in 0..20 {
            let g = random_graph(seed, 6, false);
            let k = g.n();
            let mut direct = BigInt::default();
            for mask in 0u32..(1 << k) {
                let keep: Vec<bool> = (0..k).map(|v| mask & (1 << v) == 0).collect();
                let term = BigInt::from(hom_path_induced(&g, k, &keep));
                if mask.count_ones() % 2 == 0 {
                    direct += term;
                } else {
                    direct -= term;
                }
            }
            assert_eq!(BigInt::from(inj_path(&g, k)), direct);
        }
    }

    #[test]
    fn strip_examples() {
        let g = complete(3);
        let c = |cs: &[u32]| Coloring::new(3, cs.to_vec()).unwrap();
        assert_eq!(strip_monochromatic(&g, &c(&[1, 2, 3])), g);
        assert_eq!(strip_monochromatic(&g, &c(&[1, 1, 1])).arc_count(), 0);
        let two = strip_monochromatic(&g, &c(&[1, 1, 2]));
        assert_eq!(two.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn col_inj_examples() {
        let g = complete(3);
        let c = |cs: &[u32]| Coloring::new(3, cs.to_vec()).unwrap();
        assert_eq!(col_inj(&g, &c(&[1, 2, 3]), 3), big(6));
        assert_eq!(col_inj(&g, &c(&[1, 1, 2]), 3), big(0));
    }

    #[test]
    fn col_inj_reads_only_the_stripped_graph() {
        for seed in 0..30 {
            let g = random_graph(seed, 7, seed % 3 == 0);
            let mut rng = trial_rng(seed, 1);
            for k in 1..=g.n().min(5) {
                let phi = random_coloring(g.n(), extended_palette(k), &mut rng);
                let stripped = strip_monochromatic(&g, &phi);
                assert_eq!(col_inj(&g, &phi, k), col_inj(&stripped, &phi, k));
            }
        }
    }

    #[test]
    fn col_inj_counts_colorful_sequences() {
        for seed in 0..40 {
            let g = random_graph(seed, 7, seed % 3 == 0);
            let mut rng = trial_rng(seed, 2);
            for k in 1..=g.n().min(5) {
                let phi = random_coloring(g.n(), extended_palette(k), &mut rng);
                let mut brute = 0u64;
                let _ = for_each_k_path(&g, k, |seq| {
                    if phi.is_colorful(seq) {
                        brute += 1;
                    }
                    ControlFlow::Continue(())
                });
                let ci = col_inj(&g, &phi, k);
                assert_eq!(ci, big(brute));
                assert!(ci <= inj_path(&g, k));
            }
        }
    }

    #[test]
    fn trial_budgets() {
        assert_eq!(extended_palette(1), 2);
        assert_eq!(extended_palette(4), 6);
        assert_eq!(extended_palette(10), 13);
        assert_eq!(count_search_trials(4, 0.05), 29);
    }

    #[test]
    fn search_cases() {
        let star = Graph::new(5, false, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        for seed in 0..10 {
            assert_eq!(
                randomized_count_search(&star, 4, 20, seed).decision,
                Decision::No
            );
        }
        let r = randomized_count_search(&Graph::empty(2, false), 1, 1, 0);
        assert!(r.decision.is_yes());
        assert_eq!(r.trials_run, 1);
        let hits = (0..40)
            .filter(|&s| {
                randomized_count_search(&path(4), 4, count_search_trials(4, 0.05), s)
                    .decision
                    .is_yes()
            })
            .count();
        assert!(hits >= 38, "{hits}/40");
    }
}
