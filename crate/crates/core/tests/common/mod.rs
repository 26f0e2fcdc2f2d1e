//! Brute-force reference implementations over bitmasks. Deliberately
//! naive: every answer comes from scanning all subsets against the
//! textbook definitions.

#![allow(dead_code)]

use updom::{Graph, Hypergraph, VertexSet};

pub struct Brute {
    pub n: usize,
    /// Closed neighbourhood masks.
    pub closed: Vec<u64>,
}

impl Brute {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        assert!(n <= 24, "brute force is for small graphs");
        let mut closed: Vec<u64> = (0..n).map(|v| 1 << v).collect();
        for (u, v) in g.edges() {
            closed[u] |= 1 << v;
            closed[v] |= 1 << u;
        }
        Brute { n, closed }
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    fn members(&self, s: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| s >> v & 1 == 1)
    }

    pub fn nbhd(&self, s: u64) -> u64 {
        self.members(s).fold(0, |acc, v| acc | self.closed[v])
    }

    pub fn dominating(&self, s: u64) -> bool {
        self.nbhd(s) == self.full()
    }

    /// `N[v] \ N[S \ {v}]`.
    pub fn private(&self, s: u64, v: usize) -> u64 {
        self.closed[v] & !self.nbhd(s & !(1 << v))
    }

    pub fn irredundant(&self, s: u64) -> bool {
        self.members(s).all(|v| self.private(s, v) != 0)
    }

    pub fn minimal_dominating(&self, s: u64) -> bool {
        self.dominating(s) && self.members(s).all(|v| !self.dominating(s & !(1 << v)))
    }

    pub fn independent(&self, s: u64) -> bool {
        self.members(s).all(|v| self.closed[v] & s == 1 << v)
    }

    fn all(&self) -> impl Iterator<Item = u64> {
        0..1u64 << self.n
    }

    pub fn upper_gamma(&self) -> usize {
        self.all().filter(|&s| self.minimal_dominating(s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn gamma(&self) -> usize {
        self.all().filter(|&s| self.dominating(s)).map(|s| s.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn alpha(&self) -> usize {
        self.all().filter(|&s| self.independent(s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn minimal_dominating_sets(&self) -> Vec<u64> {
        self.all().filter(|&s| self.minimal_dominating(s)).collect()
    }

    /// `(ir, γ, i, α, Γ, IR)`.
    pub fn chain(&self) -> [usize; 6] {
        let mut ir = usize::MAX;
        let mut upper_ir = 0;
        let mut gamma = usize::MAX;
        let mut i = usize::MAX;
        let mut alpha = 0;
        let mut upper_gamma = 0;
        for s in self.all() {
            let c = s.count_ones() as usize;
            if self.dominating(s) {
                gamma = gamma.min(c);
                if self.minimal_dominating(s) {
                    upper_gamma = upper_gamma.max(c);
                }
            }
            if self.independent(s) {
                alpha = alpha.max(c);
                let maximal = (0..self.n).all(|v| s >> v & 1 == 1 || !self.independent(s | 1 << v));
                if maximal {
                    i = i.min(c);
                }
            }
            if self.irredundant(s) {
                upper_ir = upper_ir.max(c);
                let maximal = (0..self.n).all(|v| s >> v & 1 == 1 || !self.irredundant(s | 1 << v));
                if maximal {
                    ir = ir.min(c);
                }
            }
        }
        [ir, gamma, i, alpha, upper_gamma, upper_ir]
    }

    /// Scans every superset of `s` for a minimal dominating set.
    pub fn mdse(&self, s: u64) -> bool {
        let rest = self.full() & !s;
        let mut sub = rest;
        loop {
            if self.minimal_dominating(s | sub) {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & rest;
        }
    }

    /// A multicoloured clique: one vertex per class, pairwise adjacent.
    pub fn multicoloured_clique(&self, classes: &[usize], k: usize) -> bool {
        self.all().any(|s| {
            let mut seen = vec![0; k];
            for v in self.members(s) {
                seen[classes[v]] += 1;
            }
            seen.iter().all(|&c| c == 1) && self.members(s).all(|v| self.closed[v] & s == s)
        })
    }
}

pub fn mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |acc, v| acc | 1 << v)
}

pub fn set(n: usize, m: u64) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&v| m >> v & 1 == 1))
}

fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges().iter().map(mask).collect()
}

pub fn hitting(edges: &[u64], s: u64) -> bool {
    edges.iter().all(|e| e & s != 0)
}

pub fn minimal_hitting(edges: &[u64], s: u64, n: usize) -> bool {
    hitting(edges, s) && (0..n).filter(|v| s >> v & 1 == 1).all(|v| !hitting(edges, s & !(1 << v)))
}

pub fn mmhs(h: &Hypergraph) -> usize {
    let edges = edge_masks(h);
    (0..1u64 << h.n())
        .filter(|&s| minimal_hitting(&edges, s, h.n()))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn is_minimal_hitting(h: &Hypergraph, s: &VertexSet) -> bool {
    minimal_hitting(&edge_masks(h), mask(s), h.n())
}
