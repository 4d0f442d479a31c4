//! Divide and color.
//!
//! A random Red/Blue split of the vertex set sends the first `⌈l/2⌉`
//! vertices of a fixed l-path to Red and the rest to Blue with probability
//! `2^-l`. Recursing on both halves and gluing the results along a
//! Red→Blue arc (the Δ-join) yields reachability matrices whose 1-entries
//! are always backed by genuine simple paths. The improved variant repeats
//! the split `f(l, k)` times per recursion node and ORs the results.

use std::time::Instant;

use fixedbitset::FixedBitSet;
use rand::Rng;

use crate::graph::Graph;
use crate::report::{Algorithm, Decision, TrialReport};
use crate::rng::trial_rng;

/// Boolean endpoint matrix over a vertex subset at a fixed path length.
///
/// `get(u, v)` at level `l` means "a simple l-vertex path from `u` to `v`
/// inside the support was found". Rows are indexed by position in the
/// support; columns by global vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    level: usize,
    support: Vec<usize>,
    rows: Vec<FixedBitSet>,
}

impl ReachMatrix {
    /// All-zero matrix; `support` must be sorted.
    pub fn zero(n: usize, support: Vec<usize>, level: usize) -> Self {
        debug_assert!(support.windows(2).all(|w| w[0] < w[1]));
        let rows = vec![FixedBitSet::with_capacity(n); support.len()];
        ReachMatrix {
            level,
            support,
            rows,
        }
    }

    /// Level-1 matrix: `[v, v] = 1` for every `v` in the support.
    pub fn diagonal(n: usize, support: Vec<usize>) -> Self {
        let mut m = Self::zero(n, support, 1);
        for (row, &v) in m.rows.iter_mut().zip(&m.support) {
            row.insert(v);
        }
        m
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    fn position(&self, v: usize) -> Option<usize> {
        self.support.binary_search(&v).ok()
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.position(u).is_some_and(|i| self.rows[i].contains(v))
    }

    /// All 1-entries `(u, v)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.support
            .iter()
            .zip(&self.rows)
            .flat_map(|(&u, row)| row.ones().map(move |v| (u, v)))
    }

    pub fn has_off_diagonal(&self) -> bool {
        self.entries().any(|(u, v)| u != v)
    }

    fn or_assign(&mut self, other: &ReachMatrix) {
        debug_assert_eq!(self.support, other.support);
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            a.union_with(b);
        }
    }
}

/// A Red/Blue split of a vertex subset. Both sides stay sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPartition {
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
}

/// Sends each vertex of `subset` to Red or Blue with probability 1/2.
pub fn split_red_blue<R: Rng + ?Sized>(subset: &[usize], rng: &mut R) -> ColorPartition {
    let (red, blue) = subset.iter().partition(|_| rng.gen_bool(0.5));
    ColorPartition { red, blue }
}

/// `Z[u, v] = 1` iff `u ∈ R`, `v ∈ B`, and some arc `(x, y)` with
/// `x ∈ R`, `y ∈ B` has `X[u, x] = 1` and `Y[y, v] = 1`.
pub fn delta_join(red: &ReachMatrix, blue: &ReachMatrix, g: &Graph) -> ReachMatrix {
    let mut support: Vec<usize> = red.support.iter().chain(&blue.support).copied().collect();
    support.sort_unstable();
    let mut z = ReachMatrix::zero(g.n(), support, red.level + blue.level);
    for (&u, x_row) in red.support.iter().zip(&red.rows) {
        let mut acc = FixedBitSet::with_capacity(g.n());
        for x in x_row.ones() {
            for &y in g.neighbors_out(x) {
                if let Some(j) = blue.position(y) {
                    acc.union_with(&blue.rows[j]);
                }
            }
        }
        let i = z.position(u).expect("red vertex in joined support");
        z.rows[i] = acc;
    }
    z
}

/// `f(l, k) = max(1, ⌈2^l · log₂(4k)⌉)` repetitions per recursion node.
/// With this choice `(1 − 2^-l)^f ≤ 1/(2k)`.
pub fn trial_count(l: usize, k: usize) -> u64 {
    let f = (l as f64).exp2() * ((4 * k) as f64).log2();
    if f >= u64::MAX as f64 {
        u64::MAX
    } else {
        (f.ceil() as u64).max(1)
    }
}

/// One split per level, no repetition. Sound, but complete only with
/// probability `2^-O(k log k)`.
pub fn naive_colors_paths<R: Rng + ?Sized>(
    g: &Graph,
    subset: &[usize],
    k: usize,
    rng: &mut R,
) -> ReachMatrix {
    assert!(k >= 1);
    let subset = sorted(subset);
    if k == 1 {
        return ReachMatrix::diagonal(g.n(), subset);
    }
    if subset.len() < k {
        return ReachMatrix::zero(g.n(), subset, k);
    }
    let split = split_red_blue(&subset, rng);
    let red = naive_colors_paths(g, &split.red, k.div_ceil(2), rng);
    let blue = naive_colors_paths(g, &split.blue, k / 2, rng);
    delta_join(&red, &blue, g)
}

/// Repeats split / recurse / join `f(l, k)` times at every node and ORs the
/// joined matrices together.
pub fn improved_colors_paths<R: Rng + ?Sized>(
    g: &Graph,
    subset: &[usize],
    l: usize,
    k: usize,
    rng: &mut R,
) -> ReachMatrix {
    improved_colors_paths_with(g, subset, l, k, rng, &trial_count)
}

/// [`improved_colors_paths`] with a caller-supplied repetition schedule.
pub fn improved_colors_paths_with<R, F>(
    g: &Graph,
    subset: &[usize],
    l: usize,
    k: usize,
    rng: &mut R,
    schedule: &F,
) -> ReachMatrix
where
    R: Rng + ?Sized,
    F: Fn(usize, usize) -> u64,
{
    assert!(l >= 1 && l <= k.max(1));
    let subset = sorted(subset);
    improved_rec(g, subset, l, k, rng, schedule)
}

fn improved_rec<R, F>(
    g: &Graph,
    subset: Vec<usize>,
    l: usize,
    k: usize,
    rng: &mut R,
    schedule: &F,
) -> ReachMatrix
where
    R: Rng + ?Sized,
    F: Fn(usize, usize) -> u64,
{
    if l == 1 {
        return ReachMatrix::diagonal(g.n(), subset);
    }
    let mut acc = ReachMatrix::zero(g.n(), subset, l);
    // No l-vertex path fits in fewer than l vertices.
    if acc.support.len() < l {
        return acc;
    }
    for _ in 0..schedule(l, k) {
        let split = split_red_blue(&acc.support, rng);
        let red = improved_rec(g, split.red, l.div_ceil(2), k, rng, schedule);
        let blue = improved_rec(g, split.blue, l / 2, k, rng, schedule);
        acc.or_assign(&delta_join(&red, &blue, g));
    }
    acc
}

fn sorted(subset: &[usize]) -> Vec<usize> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// Runs [`improved_colors_paths`] on the whole vertex set at `l = k` and
/// answers YES iff any endpoint pair was found (any vertex, for `k = 1`).
pub fn dc_search(g: &Graph, k: usize, seed: u64) -> TrialReport {
    assert!(k >= 1);
    let started = Instant::now();
    let mut report = TrialReport::new(Algorithm::DivideColor, k, seed, started);
    let all: Vec<usize> = (0..g.n()).collect();
    let m = improved_colors_paths(g, &all, k, k, &mut trial_rng(seed, 0));
    let yes = if k == 1 {
        g.n() > 0
    } else {
        m.has_off_diagonal()
    };
    report.decision = Decision::from(yes);
    report.finish(started)
}
