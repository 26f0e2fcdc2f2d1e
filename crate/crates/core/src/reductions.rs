//! Instance generators from hardness constructions, each with forward and
//! backward witness maps.
//!
//! Source vertices keep their ids; new vertices are appended in blocks whose
//! layout is reported by [`Reduction::layout`].

use crate::domination::{extend_to_maximal_independent, is_independent};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use serde_json::json;

/// `opt(target) = a·opt(source) + b`, possibly only under `condition`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueRelation {
    pub a: i64,
    pub b: i64,
    pub condition: Option<&'static str>,
}

/// A contiguous block of target vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: &'static str,
    pub start: usize,
    pub len: usize,
    pub layout: String,
}

pub trait Reduction {
    fn name(&self) -> &'static str;
    /// Maps a source witness to a target witness.
    fn forward(&self, source: &VertexSet) -> Result<VertexSet>;
    /// Recovers a source witness from a target witness.
    fn backward(&self, target: &VertexSet) -> Result<VertexSet>;
    fn relation(&self) -> Option<ValueRelation>;
    fn layout(&self) -> Vec<Block>;

    /// One JSON object per line.
    fn sidecar(&self) -> String {
        let mut out = String::new();
        out.push_str(&json!({"record": "reduction", "name": self.name()}).to_string());
        out.push('\n');
        if let Some(r) = self.relation() {
            let rec = json!({"record": "relation", "a": r.a, "b": r.b, "condition": r.condition});
            out.push_str(&rec.to_string());
            out.push('\n');
        }
        for b in self.layout() {
            let rec = json!({"record": "block", "name": b.name, "start": b.start, "len": b.len, "layout": b.layout});
            out.push_str(&rec.to_string());
            out.push('\n');
        }
        out
    }
}

fn check_universe(s: &VertexSet, n: usize, what: &str) -> Result<()> {
    if s.universe() != n {
        return Err(Error::invalid(format!("{what} witness has universe {} but expected {n}", s.universe())));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GnVariant {
    Gn,
    /// Adds `v_0` adjacent to all of `V_n`.
    GnPrime,
    /// Adds `v_0` and `w_0` adjacent to all of `W_n`.
    GnDoublePrime,
}

/// Two `n`-cliques `V_n = 0..n` and `W_n = n..2n` joined by the matching
/// `i ~ n+i`; `v_0 = 2n`, `w_0 = 2n+1`.
pub fn gen_gn_family(n: usize, variant: GnVariant) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("Gn needs n >= 1"));
    }
    let extra = match variant {
        GnVariant::Gn => 0,
        GnVariant::GnPrime => 1,
        GnVariant::GnDoublePrime => 2,
    };
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
            edges.push((n + i, n + j));
        }
        edges.push((i, n + i));
        if extra >= 1 {
            edges.push((2 * n, i));
        }
        if extra == 2 {
            edges.push((2 * n + 1, n + i));
        }
    }
    Graph::from_edges(2 * n + extra, edges)
}

/// Each edge of a cubic graph becomes a six-vertex gadget.
#[derive(Debug, Clone)]
pub struct CubicGadget {
    pub source: Graph,
    pub target: Graph,
    pub edges: Vec<(usize, usize)>,
}

impl CubicGadget {
    /// Target ids of edge `idx = (u,v)`, `u < v`:
    /// `[u_v, u_v^1, u_v^2, v_u, v_u^1, v_u^2]`.
    pub fn gadget(&self, idx: usize) -> [usize; 6] {
        let b = self.source.n() + 6 * idx;
        [b, b + 1, b + 2, b + 3, b + 4, b + 5]
    }
}

pub fn mis_to_ud_cubic(g: &Graph) -> Result<CubicGadget> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::invalid(format!("input is not cubic: vertex {v} has degree {}", g.degree(v))));
    }
    let n = g.n();
    let src: Vec<(usize, usize)> = g.edges().collect();
    let mut edges = Vec::with_capacity(7 * src.len());
    for (idx, &(u, v)) in src.iter().enumerate() {
        let b = n + 6 * idx;
        let (uv, uv1, uv2, vu, vu1, vu2) = (b, b + 1, b + 2, b + 3, b + 4, b + 5);
        edges.extend([(u, uv), (v, vu), (uv, uv1), (uv, uv2), (vu, vu1), (vu, vu2)]);
        edges.extend([(uv1, vu1), (uv1, vu2), (uv2, vu1), (uv2, vu2)]);
    }
    let target = Graph::from_edges(n + 6 * src.len(), edges)?;
    Ok(CubicGadget { source: g.clone(), target, edges: src })
}

impl Reduction for CubicGadget {
    fn name(&self) -> &'static str {
        "mis-to-ud-cubic"
    }

    /// Independent set `I` to a minimal dominating set of size at least
    /// `|I| + 3m`.
    fn forward(&self, is: &VertexSet) -> Result<VertexSet> {
        check_universe(is, self.source.n(), "source")?;
        if !is_independent(&self.source, is) {
            return Err(Error::invalid("source witness is not independent"));
        }
        let mut d = VertexSet::new(self.target.n());
        for v in is {
            d.insert(v);
        }
        for (idx, &(_, v)) in self.edges.iter().enumerate() {
            let [uv, uv1, uv2, vu, vu1, vu2] = self.gadget(idx);
            if !is.contains(v) {
                d.insert(vu);
                d.insert(uv1);
                d.insert(uv2);
            } else {
                d.insert(uv);
                d.insert(vu1);
                d.insert(vu2);
            }
        }
        Ok(extend_to_maximal_independent(&self.target, &d))
    }

    /// Restricts to the source vertices, then drops the higher endpoint of
    /// each conflicting edge.
    fn backward(&self, d: &VertexSet) -> Result<VertexSet> {
        check_universe(d, self.target.n(), "target")?;
        let mut is = VertexSet::from_iter(self.source.n(), d.iter().filter(|&v| v < self.source.n()));
        for &(u, v) in &self.edges {
            if is.contains(u) && is.contains(v) {
                is.remove(v);
            }
        }
        Ok(is)
    }

    fn relation(&self) -> Option<ValueRelation> {
        Some(ValueRelation { a: 1, b: 3 * self.edges.len() as i64, condition: None })
    }

    fn layout(&self) -> Vec<Block> {
        vec![
            Block { name: "original", start: 0, len: self.source.n(), layout: "v".into() },
            Block {
                name: "edge-gadgets",
                start: self.source.n(),
                len: 6 * self.edges.len(),
                layout: "per edge (u<v): u_v u_v^1 u_v^2 v_u v_u^1 v_u^2".into(),
            },
        ]
    }
}

/// Vertex clique `0..n`, edge clique `n..n+m` (`u_e`), apex `n+m` on all of
/// `V`, and `i ~ u_e` iff `i ∈ e`.
#[derive(Debug, Clone)]
pub struct MmhsToUd {
    pub source: Hypergraph,
    pub target: Graph,
}

pub fn mmhs_to_ud(h: &Hypergraph) -> Result<MmhsToUd> {
    if h.edge_count() == 0 {
        return Err(Error::invalid("hypergraph has no edges"));
    }
    let (n, m) = (h.n(), h.edge_count());
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
        edges.push((i, n + m));
    }
    for a in 0..m {
        for b in a + 1..m {
            edges.push((n + a, n + b));
        }
        for i in &h.edges()[a] {
            edges.push((i, n + a));
        }
    }
    let target = Graph::from_edges(n + m + 1, edges)?;
    Ok(MmhsToUd { source: h.clone(), target })
}

impl Reduction for MmhsToUd {
    fn name(&self) -> &'static str {
        "mmhs-to-ud"
    }

    fn forward(&self, hs: &VertexSet) -> Result<VertexSet> {
        check_universe(hs, self.source.n(), "source")?;
        if !self.source.is_minimal_hitting_set(hs) {
            return Err(Error::invalid("source witness is not a minimal hitting set"));
        }
        Ok(VertexSet::from_iter(self.target.n(), hs.iter()))
    }

    fn backward(&self, d: &VertexSet) -> Result<VertexSet> {
        check_universe(d, self.target.n(), "target")?;
        Ok(VertexSet::from_iter(self.source.n(), d.iter().filter(|&v| v < self.source.n())))
    }

    fn relation(&self) -> Option<ValueRelation> {
        Some(ValueRelation { a: 1, b: 0, condition: Some("opt(source) >= 3") })
    }

    fn layout(&self) -> Vec<Block> {
        let (n, m) = (self.source.n(), self.source.edge_count());
        vec![
            Block { name: "vertices", start: 0, len: n, layout: "clique".into() },
            Block { name: "edges", start: n, len: m, layout: "clique, u_e in input order".into() },
            Block { name: "apex", start: n + m, len: 1, layout: "adjacent to all vertices".into() },
        ]
    }
}

/// Class cliques plus one edge-vertex per cross-class edge.
#[derive(Debug, Clone)]
pub struct MulticolouredCliqueToUd {
    pub source: Graph,
    pub classes: Vec<usize>,
    pub k: usize,
    pub target: Graph,
    /// Source edge of each edge-vertex, in target order after the source vertices.
    pub edge_vertices: Vec<(usize, usize)>,
}

impl MulticolouredCliqueToUd {
    /// `k + k(k−1)/2`.
    pub fn threshold(&self) -> usize {
        self.k + self.k * (self.k - 1) / 2
    }
}

/// `classes[v]` is the colour of `v` in `0..k`.
pub fn multicoloured_clique_to_ud(g: &Graph, classes: &[usize], k: usize) -> Result<MulticolouredCliqueToUd> {
    let n = g.n();
    if classes.len() != n {
        return Err(Error::invalid(format!("{} class labels for {n} vertices", classes.len())));
    }
    if let Some(&c) = classes.iter().find(|&&c| c >= k) {
        return Err(Error::invalid(format!("class {c} out of range 0..{k}")));
    }
    if let Some(c) = (0..k).find(|c| !classes.contains(c)) {
        return Err(Error::invalid(format!("class {c} is empty: trivial no-instance")));
    }
    let edge_vertices: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| classes[u] != classes[v]).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if classes[u] == classes[v] {
                edges.push((u, v));
            }
        }
    }
    let pair = |(u, v): (usize, usize)| {
        let (a, b) = (classes[u], classes[v]);
        (a.min(b), a.max(b))
    };
    for (a, &e) in edge_vertices.iter().enumerate() {
        let (u, w) = e;
        for x in 0..n {
            if x != u && x != w && (classes[x] == classes[u] || classes[x] == classes[w]) {
                edges.push((n + a, x));
            }
        }
        for (b, &f) in edge_vertices.iter().enumerate().skip(a + 1) {
            if pair(e) == pair(f) {
                edges.push((n + a, n + b));
            }
        }
    }
    let target = Graph::from_edges(n + edge_vertices.len(), edges)?;
    Ok(MulticolouredCliqueToUd { source: g.clone(), classes: classes.to_vec(), k, target, edge_vertices })
}

impl Reduction for MulticolouredCliqueToUd {
    fn name(&self) -> &'static str {
        "multicoloured-clique-to-ud"
    }

    /// A multicoloured clique `C` to `C` plus the edge-vertices inside `C`.
    fn forward(&self, c: &VertexSet) -> Result<VertexSet> {
        check_universe(c, self.source.n(), "source")?;
        let mut colours: Vec<usize> = c.iter().map(|v| self.classes[v]).collect();
        colours.sort_unstable();
        colours.dedup();
        let clique = c.iter().all(|u| c.iter().all(|v| u == v || self.source.has_edge(u, v)));
        if c.len() != self.k || colours.len() != self.k || !clique {
            return Err(Error::invalid("source witness is not a multicoloured clique"));
        }
        let n = self.source.n();
        let mut d = VertexSet::from_iter(self.target.n(), c.iter());
        for (a, &(u, v)) in self.edge_vertices.iter().enumerate() {
            if c.contains(u) && c.contains(v) {
                d.insert(n + a);
            }
        }
        Ok(d)
    }

    fn backward(&self, d: &VertexSet) -> Result<VertexSet> {
        check_universe(d, self.target.n(), "target")?;
        Ok(VertexSet::from_iter(self.source.n(), d.iter().filter(|&v| v < self.source.n())))
    }

    fn relation(&self) -> Option<ValueRelation> {
        None
    }

    fn layout(&self) -> Vec<Block> {
        let n = self.source.n();
        vec![
            Block { name: "vertices", start: 0, len: n, layout: "each class a clique".into() },
            Block {
                name: "edge-vertices",
                start: n,
                len: self.edge_vertices.len(),
                layout: format!("one per cross-class edge (u<v) in edge order; yes iff Gamma >= {}", self.threshold()),
            },
        ]
    }
}

/// Graph edges as 2-edges plus `S ∪ {u_{S,i}}` for every independent
/// `(d−1)`-set `S` and `i < n`.
#[derive(Debug, Clone)]
pub struct MisToMmhs {
    pub source: Graph,
    pub d: usize,
    pub target: Hypergraph,
    /// The independent `(d−1)`-sets in lexicographic order.
    pub sets: Vec<Vec<usize>>,
}

fn independent_sets_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in from..g.n() {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                rec(g, size, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, size, 0, &mut Vec::new(), &mut out);
    out
}

/// `max_vertices` caps the output size.
pub fn mis_to_mmhs(g: &Graph, d: usize, max_vertices: usize) -> Result<MisToMmhs> {
    if d < 2 {
        return Err(Error::invalid("d must be at least 2"));
    }
    let n = g.n();
    let sets = independent_sets_of_size(g, d - 1);
    let total = n + sets.len() * n;
    crate::limits::cap("mis-to-mmhs output vertices", total, max_vertices)?;
    let mut edges: Vec<Vec<usize>> = g.edges().map(|(u, v)| vec![u, v]).collect();
    for (j, s) in sets.iter().enumerate() {
        for i in 0..n {
            let mut e = s.clone();
            e.push(n + j * n + i);
            edges.push(e);
        }
    }
    let target = Hypergraph::new(total, edges)?;
    Ok(MisToMmhs { source: g.clone(), d, target, sets })
}

impl Reduction for MisToMmhs {
    fn name(&self) -> &'static str {
        "mis-to-mmhs"
    }

    /// Independent set `I` to `(V \ I) ∪ {u_{S,i} : S ⊆ I}`.
    fn forward(&self, is: &VertexSet) -> Result<VertexSet> {
        check_universe(is, self.source.n(), "source")?;
        if !is_independent(&self.source, is) {
            return Err(Error::invalid("source witness is not independent"));
        }
        let n = self.source.n();
        let mut h = VertexSet::from_iter(self.target.n(), is.complement().iter());
        for (j, s) in self.sets.iter().enumerate() {
            if s.iter().all(|&v| is.contains(v)) {
                for i in 0..n {
                    h.insert(n + j * n + i);
                }
            }
        }
        Ok(h)
    }

    /// A hitting set `H` to the independent set `V \ H`.
    fn backward(&self, h: &VertexSet) -> Result<VertexSet> {
        check_universe(h, self.target.n(), "target")?;
        let n = self.source.n();
        Ok(VertexSet::from_iter(n, (0..n).filter(|&v| !h.contains(v))))
    }

    fn relation(&self) -> Option<ValueRelation> {
        None
    }

    fn layout(&self) -> Vec<Block> {
        let n = self.source.n();
        vec![
            Block { name: "original", start: 0, len: n, layout: "v".into() },
            Block {
                name: "set-copies",
                start: n,
                len: self.sets.len() * n,
                layout: format!("u_(S,i) at n + j*n + i, S the j-th independent {}-set in lex order", self.d - 1),
            },
        ]
    }
}

/// Degree completion for MDSE instances of maximum degree 3: each missing
/// degree gets a five-vertex gadget whose two black vertices join `S`.
#[derive(Debug, Clone)]
pub struct PadToCubic {
    pub source: Graph,
    pub target: Graph,
    pub source_set: VertexSet,
    pub target_set: VertexSet,
    /// The attachment vertex of each gadget.
    pub attachments: Vec<usize>,
}

impl PadToCubic {
    /// Gadget ids `[a, b1, b2, c, y]`: `a` attaches to the host, `b1, b2`
    /// are black.
    pub fn gadget(&self, idx: usize) -> [usize; 5] {
        let b = self.source.n() + 5 * idx;
        [b, b + 1, b + 2, b + 3, b + 4]
    }
}

pub fn pad_to_cubic(g: &Graph, s: &VertexSet) -> Result<PadToCubic> {
    let n = g.n();
    check_universe(s, n, "source")?;
    if let Some(v) = (0..n).find(|&v| g.degree(v) > 3) {
        return Err(Error::invalid(format!("vertex {v} has degree {} > 3", g.degree(v))));
    }
    let attachments: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, 3 - g.degree(v))).collect();
    let total = n + 5 * attachments.len();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut target_set = VertexSet::from_iter(total, s.iter());
    for (idx, &host) in attachments.iter().enumerate() {
        let b = n + 5 * idx;
        let (a, b1, b2, c, y) = (b, b + 1, b + 2, b + 3, b + 4);
        edges.extend([(host, a), (a, b1), (a, b2), (b1, c), (b2, c), (b1, y), (b2, y), (c, y)]);
        target_set.insert(b1);
        target_set.insert(b2);
    }
    let target = Graph::from_edges(total, edges)?;
    Ok(PadToCubic { source: g.clone(), target, source_set: s.clone(), target_set, attachments })
}

impl Reduction for PadToCubic {
    fn name(&self) -> &'static str {
        "pad-to-cubic"
    }

    /// A minimal dominating superset of `S` to itself plus the black vertices.
    fn forward(&self, d: &VertexSet) -> Result<VertexSet> {
        check_universe(d, self.source.n(), "source")?;
        let mut out = self.target_set.clone();
        for v in d {
            out.insert(v);
        }
        Ok(out)
    }

    fn backward(&self, d: &VertexSet) -> Result<VertexSet> {
        check_universe(d, self.target.n(), "target")?;
        Ok(VertexSet::from_iter(self.source.n(), d.iter().filter(|&v| v < self.source.n())))
    }

    fn relation(&self) -> Option<ValueRelation> {
        None
    }

    fn layout(&self) -> Vec<Block> {
        vec![
            Block { name: "original", start: 0, len: self.source.n(), layout: "v".into() },
            Block {
                name: "padding",
                start: self.source.n(),
                len: 5 * self.attachments.len(),
                layout: "per gadget: a b1 b2 c y; a on host, b1 b2 black".into(),
            },
        ]
    }
}
