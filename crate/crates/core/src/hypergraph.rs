use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A base set `0..n` with a family of hyperedges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Every edge must be nonempty and inside `0..n`.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut out = Vec::new();
        for (i, e) in edges.into_iter().enumerate() {
            let mut set = VertexSet::new(n);
            for v in e {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        line: 0,
                        vertex: v,
                        n,
                    });
                }
                set.insert(v);
            }
            if set.is_empty() {
                return Err(Error::EmptyHyperedge(i));
            }
            out.push(set);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub(crate) fn from_sets(n: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.iter().all(|e| !e.is_empty() && e.universe() == n));
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Largest hyperedge size (`d`); 0 for an edgeless hypergraph.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Vertices that occur in at least one edge.
    pub fn covered(&self) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        for e in &self.edges {
            s.union_with(e);
        }
        s
    }

    pub fn is_hitting_set(&self, h: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(h))
    }

    /// Hitting set in which every member is the sole hit of some edge.
    pub fn is_minimal_hitting_set(&self, h: &VertexSet) -> bool {
        if !self.is_hitting_set(h) {
            return false;
        }
        let mut private = VertexSet::new(self.n);
        for e in &self.edges {
            let hit = e.intersection(h);
            if hit.len() == 1 {
                private.union_with(&hit);
            }
        }
        h.is_subset(&private)
    }
}

/// One hyperedge `N[v]` per vertex; minimal hitting sets of the result are
/// exactly the minimal dominating sets of `g`.
pub fn closed_neighbourhood_hypergraph(g: &Graph) -> Hypergraph {
    Hypergraph::from_sets(g.n(), (0..g.n()).map(|v| g.closed_nbhd(v).clone()).collect())
}

/// The graph itself viewed as a 2-uniform hypergraph.
pub fn edge_hypergraph(g: &Graph) -> Hypergraph {
    Hypergraph::from_sets(
        g.n(),
        g.edges()
            .map(|(u, v)| VertexSet::from_iter(g.n(), [u, v]))
            .collect(),
    )
}
