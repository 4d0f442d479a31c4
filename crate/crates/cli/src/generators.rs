//! Instance generators for the verification harness and the benchmark.

use kpath::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub const EDGE_PROBABILITY: f64 = 0.3;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, false, &edges).expect("path edges")
}

pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::new(n, false, &edges).expect("cycle edges")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, false, &edges).expect("complete edges")
}

/// Vertex 0 joined to every other vertex. Longest path: 3 vertices.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, false, &edges).expect("star edges")
}

/// G(n, p): every pair (every ordered pair, if directed) independently.
pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, directed: bool, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && (directed || u < v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, directed, &edges).expect("random edges")
}

/// A path through `k` randomly chosen vertices of an `n`-vertex graph, plus
/// `noise` extra random edges.
pub fn planted_path<R: Rng + ?Sized>(n: usize, k: usize, noise: usize, rng: &mut R) -> Graph {
    assert!(k <= n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = order[..k].windows(2).map(|w| norm(w[0], w[1])).collect();
    let max_edges = n * n.saturating_sub(1) / 2;
    let mut added = 0;
    while added < noise && edges.len() < max_edges {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !edges.contains(&norm(u, v)) {
            edges.push(norm(u, v));
            added += 1;
        }
    }
    Graph::new(n, false, &edges).expect("planted edges")
}

/// A path through `k` randomly chosen vertices plus up to `noise` random
/// edges among the other `n - k` vertices. The noise never touches the
/// path, so the planted path is usually the only one on `k` vertices.
pub fn path_plus_noise<R: Rng + ?Sized>(n: usize, k: usize, noise: usize, rng: &mut R) -> Graph {
    assert!(k <= n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = order[..k].windows(2).map(|w| norm(w[0], w[1])).collect();
    let rest = &order[k..];
    let mut pairs: Vec<(usize, usize)> = (0..rest.len())
        .flat_map(|i| (i + 1..rest.len()).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    edges.extend(
        pairs
            .iter()
            .take(noise)
            .map(|&(i, j)| norm(rest[i], rest[j])),
    );
    Graph::new(n, false, &edges).expect("path plus noise edges")
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use kpath::graph::{dfs_decide, enumerate_k_paths};
    use kpath::rng::trial_rng;

    #[test]
    fn shapes() {
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(cycle(2).edge_count(), 1);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(star(5).edge_count(), 4);
        assert!(dfs_decide(&star(6), 4).is_none());
        assert_eq!(enumerate_k_paths(&cycle(5), 5, Some(0)).count, 5u32.into());
    }

    #[test]
    fn planted_path_is_present() {
        for seed in 0..20 {
            let g = planted_path(12, 5, 3, &mut trial_rng(seed, 0));
            assert_eq!(g.edge_count(), 4 + 3);
            assert!(dfs_decide(&g, 5).is_some());
        }
    }

    #[test]
    fn noise_stays_off_the_path() {
        for seed in 0..20 {
            let g = path_plus_noise(12, 6, 5, &mut trial_rng(seed, 0));
            assert_eq!(g.edge_count(), 5 + 5);
            assert!(dfs_decide(&g, 6).is_some());
            let on_path: Vec<usize> = (0..12)
                .filter(|&v| !g.neighbors_out(v).is_empty())
                .collect();
            assert!(on_path.len() >= 6);
        }
        assert_eq!(
            path_plus_noise(4, 4, 3, &mut trial_rng(0, 0)).edge_count(),
            3
        );
    }
}
