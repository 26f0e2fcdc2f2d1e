//! Simple undirected graphs over dense vertex ids `0..n`.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Immutable simple graph. Neighbor lists are sorted; closed neighbourhoods
/// are cached as bitmasks since almost every algorithm in the crate needs them.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    closed: Vec<VertexSet>,
    edge_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub total: usize,
}

impl DegreeStats {
    pub fn is_regular(&self) -> bool {
        self.min == self.max
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            closed: (0..n).map(|v| VertexSet::from_iter(n, [v])).collect(),
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        line: 0,
                        vertex: x,
                        n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Normalizes raw adjacency lists (sorting, deduplicating). Lists must be
    /// symmetric and loop-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut s = VertexSet::from_iter(n, list.iter().copied());
                s.insert(v);
                s
            })
            .collect();
        Graph {
            n,
            adj,
            closed,
            edge_count: twice / 2,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// N[v] as a bitmask.
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// N(v) as a bitmask.
    pub fn open_nbhd(&self, v: usize) -> VertexSet {
        self.closed[v].without(v)
    }

    /// N[S], the set of vertices dominated by `s`.
    pub fn closed_nbhd_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in s {
            out.union_with(&self.closed[v]);
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.closed[u].contains(v)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats {
            min: self.min_degree(),
            max: self.max_degree(),
            total: 2 * self.edge_count,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || self.min_degree() == self.max_degree()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Connected, 2-regular, at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|l| l.len() == 2) && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_components().len() == 1
    }

    /// Components in order of their smallest vertex; each component is sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Induced subgraph on `keep` (in increasing order). Returns the subgraph
    /// and the map from new ids to old ids.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        (Graph::from_adjacency(adj), keep.to_vec())
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].push(perm[v]);
            adj[perm[v]].push(perm[u]);
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_adjacency(adj)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Small named graphs used throughout the tests and the CLI corpus.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// The Petersen graph (cubic, n = 10).
    pub fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::from_edges(10, e).unwrap()
    }
}
