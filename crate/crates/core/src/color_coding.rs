//! Color coding.
//!
//! A random coloring with `k` colors makes any fixed k-path colorful (all
//! colors distinct) with probability `k!/k^k > e^-k`. Colorful paths are
//! found deterministically by a dynamic program over color subsets, so
//! repeating coloring + DP about `e^k` times finds a k-path with constant
//! probability. Answers are one-sided: a witness is always a real path.

use std::time::Instant;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, PathWitness};
use crate::report::{Algorithm, Decision, TrialReport};
use crate::rng::trial_rng;
use crate::walks::count_walks;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette must have at least one color")]
    EmptyPalette,
    #[error("vertex {vertex} has color {color}, outside 1..={palette}")]
    ColorOutOfRange {
        vertex: usize,
        color: u32,
        palette: u32,
    },
}

/// Vertex coloring with colors `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    palette: u32,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(palette: u32, colors: Vec<u32>) -> Result<Self, ColoringError> {
        if palette == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        if let Some((vertex, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > palette)
        {
            return Err(ColoringError::ColorOutOfRange {
                vertex,
                color,
                palette,
            });
        }
        Ok(Coloring { palette, colors })
    }

    pub fn palette_size(&self) -> u32 {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of `v`, in `1..=palette`.
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Zero-based color index of `v`, for bit masks.
    pub(crate) fn index(&self, v: usize) -> usize {
        self.colors[v] as usize - 1
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// True when the vertices of `path` have pairwise distinct colors.
    pub fn is_colorful(&self, path: &[usize]) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.palette as usize);
        path.iter().all(|&v| !seen.put(self.index(v)))
    }
}

/// Independent uniform color in `1..=palette` for each of the `n` vertices.
pub fn random_coloring<R: Rng + ?Sized>(n: usize, palette: u32, rng: &mut R) -> Coloring {
    assert!(palette >= 1, "palette must have at least one color");
    let colors = (0..n).map(|_| rng.gen_range(1..=palette)).collect();
    Coloring { palette, colors }
}

/// Finds a path on `k` vertices whose colors are exactly `1..=k`.
///
/// `reach[S]` holds the vertices `u` that end a path using each color of
/// `S` exactly once. Singletons `{c}` hold the vertices of color `c`; a
/// larger `S` holds `u` when `color(u) ∈ S` and some in-neighbour of `u`
/// lies in `reach[S \ {color(u)}]`. The witness is rebuilt by walking the
/// table backwards from any vertex in `reach[[k]]`.
///
/// Panics unless `phi` has exactly `k` colors.
pub fn colorful_path_dp(g: &Graph, phi: &Coloring, k: usize) -> Option<PathWitness> {
    assert!(k >= 1);
    assert_eq!(
        phi.palette_size() as usize,
        k,
        "colorful DP needs exactly k colors"
    );
    assert_eq!(phi.len(), g.n());
    assert!(k < usize::BITS as usize);
    let n = g.n();
    if k > n {
        return None;
    }
    let subsets = 1usize << k;
    let mut reach = FixedBitSet::with_capacity(subsets * n);
    for set in 1..subsets {
        for u in 0..n {
            let c = phi.index(u);
            if set & (1 << c) == 0 {
                continue;
            }
            let rest = set ^ (1 << c);
            let hit = rest == 0
                || g.neighbors_in(u)
                    .iter()
                    .any(|&v| reach.contains(rest * n + v));
            if hit {
                reach.insert(set * n + u);
            }
        }
    }

    let full = subsets - 1;
    let mut u = (0..n).find(|&u| reach.contains(full * n + u))?;
    let mut set = full;
    let mut rev = vec![u];
    loop {
        set ^= 1 << phi.index(u);
        if set == 0 {
            break;
        }
        u = *g
            .neighbors_in(u)
            .iter()
            .find(|&&v| reach.contains(set * n + v))
            .expect("table entry without predecessor");
        rev.push(u);
    }
    rev.reverse();
    Some(PathWitness(rev))
}

/// `⌈e^k · ln(1/δ)⌉`: repetitions after which a fixed k-path has been
/// colorful at least once with probability ≥ 1 − δ.
pub fn color_coding_trials(k: usize, delta: f64) -> u64 {
    assert!(delta > 0.0 && delta < 1.0);
    ((k as f64).exp() * (1.0 / delta).ln()).ceil().max(1.0) as u64
}

pub const DEFAULT_DELTA: f64 = 0.05;

/// Up to `trials` rounds of random k-coloring plus [`colorful_path_dp`].
/// Trial `i` uses stream `i` of `seed`, so a YES after `t` trials stays a
/// YES for any larger budget.
pub fn color_coding_search(g: &Graph, k: usize, trials: u64, seed: u64) -> TrialReport {
    assert!(trials >= 1);
    assert!(k >= 1);
    let started = Instant::now();
    let mut report = TrialReport::new(Algorithm::ColorCoding, k, seed, started);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let phi = random_coloring(g.n(), k as u32, &mut rng);
        if let Some(w) = colorful_path_dp(g, &phi, k) {
            report.trials_run = t + 1;
            report.decision = Decision::Yes;
            report.witness = Some(w);
            return report.finish(started);
        }
    }
    report.trials_run = trials;
    report.finish(started)
}

/// Number of colorful k-vertex walk sequences, by inclusion-exclusion over
/// the set `X` of colors forbidden:
///
/// `Σ_{X ⊆ [k]} (-1)^{|X|} · #{k-walks avoiding every color of X}`.
///
/// A walk with k distinct colors visits k distinct vertices, so this is also
/// the number of colorful k-path sequences; an undirected path contributes
/// once per orientation. Memory stays polynomial.
pub fn colorful_walk_count_ie(g: &Graph, phi: &Coloring, k: usize) -> BigUint {
    assert!(k >= 1);
    assert_eq!(
        phi.palette_size() as usize,
        k,
        "colorful count needs exactly k colors"
    );
    assert_eq!(phi.len(), g.n());
    let mut plus = BigUint::default();
    let mut minus = BigUint::default();
    let mut allowed = vec![false; g.n()];
    for forbidden in 0u64..(1 << k) {
        for (v, a) in allowed.iter_mut().enumerate() {
            *a = forbidden & (1 << phi.index(v)) == 0;
        }
        let walks = count_walks(g, k, &allowed);
        if forbidden.count_ones() % 2 == 0 {
            plus += walks;
        } else {
            minus += walks;
        }
    }
    plus - minus
}
