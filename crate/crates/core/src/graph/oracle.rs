//! Exhaustive depth-first search over simple paths.
//!
//! This is the reference every other engine is checked against, so it is
//! kept as plain as possible: extend a partial path by one unvisited
//! out-neighbour at a time.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;

use super::{Graph, PathWitness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnumeration {
    pub count: BigUint,
    pub witnesses: Vec<PathWitness>,
}

/// Calls `visit` with every simple k-vertex path as a vertex sequence. On
/// undirected graphs both orientations of a path are visited.
pub fn for_each_k_path<F>(g: &Graph, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    assert!(k >= 1, "paths have at least one vertex");
    if k > g.n() {
        return ControlFlow::Continue(());
    }
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(k);
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        extend(g, k, &mut path, &mut on_path, &mut visit)?;
        on_path[start] = false;
        path.pop();
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Graph,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if path.len() == k {
        return visit(path);
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors_out(last) {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        let flow = extend(g, k, path, on_path, visit);
        path.pop();
        on_path[w] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Canonical orientation test: undirected paths are reported once, from
/// the smaller endpoint.
fn is_canonical(g: &Graph, seq: &[usize]) -> bool {
    g.is_directed() || seq.len() < 2 || seq[0] < seq[seq.len() - 1]
}

/// Counts simple k-vertex paths and collects up to `cap` witnesses
/// (`None` collects every path).
///
/// Undirected paths are counted once regardless of orientation; directed
/// paths are counted once per vertex sequence. `k > n` yields zero.
pub fn enumerate_k_paths(g: &Graph, k: usize, cap: Option<usize>) -> PathEnumeration {
    let mut count: u64 = 0;
    let mut witnesses = Vec::new();
    let _ = for_each_k_path(g, k, |seq| {
        if is_canonical(g, seq) {
            count += 1;
            if cap.is_none_or(|c| witnesses.len() < c) {
                witnesses.push(PathWitness(seq.to_vec()));
            }
        }
        ControlFlow::Continue(())
    });
    PathEnumeration {
        count: BigUint::from(count),
        witnesses,
    }
}

/// First simple k-vertex path found by the search, if any.
pub fn dfs_decide(g: &Graph, k: usize) -> Option<PathWitness> {
    let mut found = None;
    let _ = for_each_k_path(g, k, |seq| {
        found = Some(PathWitness(seq.to_vec()));
        ControlFlow::Break(())
    });
    found
}

/// Ordered endpoint pairs `(first, last)` over all k-path sequences.
pub fn k_path_endpoints(g: &Graph, k: usize) -> HashSet<(usize, usize)> {
    let mut ends = HashSet::new();
    let _ = for_each_k_path(g, k, |seq| {
        ends.insert((seq[0], seq[seq.len() - 1]));
        ControlFlow::Continue(())
    });
    ends
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, false, &edges).unwrap()
    }

    fn count(g: &Graph, k: usize) -> u64 {
        enumerate_k_paths(g, k, Some(0)).count.try_into().unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(count(&complete(3), 3), 3);
        let p4 = Graph::new(4, false, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count(&p4, 4), 1);
        assert_eq!(count(&complete(4), 3), 12);
        assert_eq!(count(&complete(3), 4), 0);
    }

    #[test]
    fn directed_sequences_counted_individually() {
        let g = Graph::new(3, true, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(count(&g, 3), 3);
        assert_eq!(count(&g, 2), 3);
    }

    #[test]
    fn cap_limits_witnesses_but_not_count() {
        let e = enumerate_k_paths(&complete(4), 3, Some(2));
        assert_eq!(e.count, BigUint::from(12u32));
        assert_eq!(e.witnesses.len(), 2);
        let all = enumerate_k_paths(&complete(4), 3, None);
        assert_eq!(all.witnesses.len(), 12);
        let g = complete(4);
        assert!(all.witnesses.iter().all(|w| w.is_valid_in(&g)));
    }

    #[test]
    fn decide_and_endpoints() {
        let p4 = Graph::new(4, false, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let w = dfs_decide(&p4, 4).unwrap();
        assert!(w.is_valid_in(&p4));
        assert!(dfs_decide(&p4, 5).is_none());
        let ends = k_path_endpoints(&p4, 3);
        let expected: HashSet<_> = [(0, 2), (2, 0), (1, 3), (3, 1)].into_iter().collect();
        assert_eq!(ends, expected);
    }
}
