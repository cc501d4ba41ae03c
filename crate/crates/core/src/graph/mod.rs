//! Immutable simple undirected graphs with dense vertex indices.
//!
//! Neighbor lists are stored sorted in a flat array. Graphs up to
//! [`MATRIX_LIMIT`] vertices additionally carry a packed adjacency matrix so
//! that edge queries and neighborhood intersections are word operations.

mod generate;
mod graph6;
mod ops;

pub use generate::{
    random_connected_graph, random_regular_graph, random_tree, random_triangle_free_graph,
};
pub use graph6::{parse_graph6, to_graph6, GRAPH6_HEADER, MAX_GRAPH6_ORDER};
pub use ops::{cartesian_product, complement, disjoint_union, join};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Largest order for which the packed adjacency matrix is materialized.
pub const MATRIX_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {0} exceeds the supported range")]
    TooLarge(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("{0}")]
    Precondition(String),
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    words: usize,
    matrix: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, std::iter::empty()).expect("edgeless graph is always valid")
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        Ok(Graph::from_lists(lists))
    }

    fn from_lists(mut lists: Vec<Vec<usize>>) -> Graph {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for list in lists.iter_mut() {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let (words, matrix) = if n <= MATRIX_LIMIT {
            let words = n.div_ceil(64);
            let mut matrix = vec![0u64; words * n];
            for (u, list) in lists.iter().enumerate() {
                for &v in list {
                    matrix[u * words + v / 64] |= 1 << (v % 64);
                }
            }
            (words, matrix)
        } else {
            (0, Vec::new())
        };
        Graph {
            n,
            offsets,
            targets,
            words,
            matrix,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        if self.words > 0 {
            self.matrix[u * self.words + v / 64] >> (v % 64) & 1 == 1
        } else {
            self.neighbors(u).binary_search(&v).is_ok()
        }
    }

    /// Packed adjacency row of `v`, when the matrix is materialized.
    pub fn row(&self, v: usize) -> Option<&[u64]> {
        (self.words > 0).then(|| &self.matrix[v * self.words..(v + 1) * self.words])
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        match (self.row(u), self.row(v)) {
            (Some(a), Some(b)) => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x & y).count_ones() as usize)
                .sum(),
            _ => self
                .neighbors(u)
                .iter()
                .filter(|&&w| self.has_edge(v, w))
                .count(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Subgraph induced by `keep`, relabeled densely in increasing vertex order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph is simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` when the graph is acyclic.
    ///
    /// BFS from every vertex: a non-tree edge `(u, w)` met during the search
    /// from `s` closes a closed walk of length `d(u) + d(w) + 1` through `s`,
    /// and the minimum over all sources is the girth.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break 'bfs;
                    }
                }
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn predicates(&self) -> Predicates {
        Predicates::of(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A subset of the vertices of a graph of order `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            mask: vec![false; n],
        }
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet {
            mask: vec![true; n],
        }
    }

    pub fn from_members<I>(n: usize, members: I) -> Result<VertexSet, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = VertexSet::empty(n);
        for v in members {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            set.mask[v] = true;
        }
        Ok(set)
    }

    pub fn from_mask(mask: Vec<bool>) -> VertexSet {
        VertexSet { mask }
    }

    /// Order of the graph the set is bound to.
    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.contains(&true)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) {
        self.mask[v] = true;
    }

    pub fn remove(&mut self, v: usize) {
        self.mask[v] = false;
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            mask: self.mask.iter().map(|b| !b).collect(),
        }
    }

    pub fn as_mask(&self) -> &[bool] {
        &self.mask
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Structural facts about a graph, computed in one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicates {
    pub is_connected: bool,
    pub is_tree: bool,
    pub regular_degree: Option<usize>,
    pub is_triangle_free: bool,
    pub is_claw_free: bool,
    pub leaves: VertexSet,
    pub support_vertices: VertexSet,
    /// Support vertices adjacent to at least two leaves.
    pub strong_support_vertices: VertexSet,
    pub universal_vertices: VertexSet,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl Predicates {
    fn of(g: &Graph) -> Predicates {
        let n = g.order();
        let min_degree = g.min_degree();
        let max_degree = g.max_degree();
        let leaves = VertexSet::from_mask(g.vertices().map(|v| g.degree(v) == 1).collect());
        let mut support = VertexSet::empty(n);
        let mut strong = VertexSet::empty(n);
        for v in g.vertices() {
            let leaf_count = g
                .neighbors(v)
                .iter()
                .filter(|&&w| leaves.contains(w))
                .count();
            if leaf_count >= 1 {
                support.insert(v);
            }
            if leaf_count >= 2 {
                strong.insert(v);
            }
        }
        let universal = VertexSet::from_mask(g.vertices().map(|v| g.degree(v) + 1 == n).collect());
        Predicates {
            is_connected: g.is_connected(),
            is_tree: g.is_tree(),
            regular_degree: (n > 0 && min_degree == max_degree).then_some(min_degree),
            is_triangle_free: is_triangle_free(g),
            is_claw_free: is_claw_free(g),
            leaves,
            support_vertices: support,
            strong_support_vertices: strong,
            universal_vertices: universal,
            min_degree,
            max_degree,
        }
    }
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.common_neighbors(u, v) == 0)
}

/// No vertex has three pairwise non-adjacent neighbors.
fn is_claw_free(g: &Graph) -> bool {
    g.vertices().all(|v| {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return false;
                    }
                }
            }
        }
        true
    })
}
