//! Immutable graph representation shared by every engine.
//!
//! Arcs are stored twice in compressed sparse row form: once keyed by tail
//! (out-adjacency) and once keyed by head (in-adjacency). Undirected graphs
//! store both orientations of every edge, so an undirected edge `{u, v}`
//! contributes the arcs `(u, v)` and `(v, u)`.

mod oracle;
mod parse;

use std::fmt;

use thiserror::Error;

pub use oracle::{
    dfs_decide, enumerate_k_paths, for_each_k_path, k_path_endpoints, PathEnumeration,
};
pub use parse::{parse_graph, read_graph, ParseError};

/// Structural violations rejected when a graph is constructed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    out_offsets: Vec<usize>,
    out_targets: Vec<usize>,
    in_offsets: Vec<usize>,
    in_sources: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. For undirected graphs each edge is
    /// listed once and stored in both orientations; listing `(u, v)` and
    /// `(v, u)` is a duplicate.
    pub fn new(n: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut arcs = Vec::with_capacity(if directed {
            edges.len()
        } else {
            2 * edges.len()
        });
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            arcs.push((u, v));
            if !directed {
                arcs.push((v, u));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            let (u, v) = if directed {
                (u, v)
            } else {
                (u.min(v), u.max(v))
            };
            return Err(GraphError::DuplicateEdge(u, v));
        }
        Ok(Self::from_sorted_arcs(n, directed, &arcs))
    }

    /// `arcs` must be sorted, loop-free, duplicate-free and symmetric when
    /// `directed` is false.
    fn from_sorted_arcs(n: usize, directed: bool, arcs: &[(usize, usize)]) -> Self {
        let mut out_offsets = vec![0; n + 1];
        let mut in_offsets = vec![0; n + 1];
        for &(u, v) in arcs {
            out_offsets[u + 1] += 1;
            in_offsets[v + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let out_targets = arcs.iter().map(|&(_, v)| v).collect();
        let mut in_sources = vec![0; arcs.len()];
        let mut fill = in_offsets.clone();
        // Tails arrive in increasing order, so each in-list ends up sorted.
        for &(u, v) in arcs {
            in_sources[fill[v]] = u;
            fill[v] += 1;
        }
        Graph {
            n,
            directed,
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        }
    }

    pub fn empty(n: usize, directed: bool) -> Self {
        Self::from_sorted_arcs(n, directed, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Number of stored arcs; an undirected edge counts twice.
    pub fn arc_count(&self) -> usize {
        self.out_targets.len()
    }

    /// Number of edges as written in the edge-list format.
    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.arc_count()
        } else {
            self.arc_count() / 2
        }
    }

    /// Sorted out-neighbours of `v`. For undirected graphs this is N(v).
    pub fn neighbors_out(&self, v: usize) -> &[usize] {
        &self.out_targets[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    /// Sorted in-neighbours of `v`.
    pub fn neighbors_in(&self, v: usize) -> &[usize] {
        &self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors_out(u).binary_search(&v).is_ok()
    }

    /// Position of the arc `(u, v)` in [`Graph::arcs`], if present.
    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        self.neighbors_out(u)
            .binary_search(&v)
            .ok()
            .map(|i| self.out_offsets[u] + i)
    }

    /// Range of arc indices whose tail is `v`.
    pub fn out_arc_range(&self, v: usize) -> std::ops::Range<usize> {
        self.out_offsets[v]..self.out_offsets[v + 1]
    }

    /// All arcs in (tail, head) lexicographic order. The position of an arc
    /// in this iterator is its arc index.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors_out(u).iter().map(move |&v| (u, v)))
    }

    /// Edges as they appear in the edge-list format: every arc for directed
    /// graphs, `u < v` representatives for undirected ones.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        self.arcs().filter(move |&(u, v)| directed || u < v)
    }

    /// Keeps only the arcs accepted by `keep`. The vertex set is unchanged.
    /// For undirected graphs `keep` must be symmetric.
    pub fn filter_arcs(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let arcs: Vec<_> = self.arcs().filter(|&(u, v)| keep(u, v)).collect();
        Self::from_sorted_arcs(self.n, self.directed, &arcs)
    }

    /// Removes the vertices in `removed` and relabels the survivors densely
    /// in increasing order of their old ids.
    pub fn induced_delete(&self, removed: &[usize]) -> InducedSubgraph {
        let mut keep = vec![true; self.n];
        for &w in removed {
            keep[w] = false;
        }
        self.induced(&keep)
    }

    /// Subgraph induced by the vertices with `keep[v] == true`.
    pub fn induced(&self, keep: &[bool]) -> InducedSubgraph {
        let old_ids: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut new_of_old = vec![None; self.n];
        for (new, &old) in old_ids.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        let arcs: Vec<_> = self
            .arcs()
            .filter_map(|(u, v)| Some((new_of_old[u]?, new_of_old[v]?)))
            .collect();
        InducedSubgraph {
            graph: Self::from_sorted_arcs(old_ids.len(), self.directed, &arcs),
            old_ids,
            new_of_old,
        }
    }

    /// Serializes into the edge-list text format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!(
            "{} {} {}\n",
            self.n,
            self.edge_count(),
            if self.directed {
                "directed"
            } else {
                "undirected"
            }
        );
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("directed", &self.directed)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of deleting a vertex set: the remaining graph and the id mapping.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_ids[new]` is the id the vertex had in the parent graph.
    pub old_ids: Vec<usize>,
    new_of_old: Vec<Option<usize>>,
}

impl InducedSubgraph {
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.new_of_old.get(old).copied().flatten()
    }

    /// Maps a witness found in the subgraph back to parent ids.
    pub fn lift(&self, path: &PathWitness) -> PathWitness {
        PathWitness(path.0.iter().map(|&v| self.old_ids[v]).collect())
    }
}

/// A simple path given as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the vertices are pairwise distinct, in range, and every
    /// consecutive pair is an arc of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.0.windows(2).all(|w| g.has_arc(w[0], w[1]))
    }
}
