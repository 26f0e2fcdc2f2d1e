use crate::error::{Error, Result};
use crate::format::Base;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Introduce(usize),
    Forget(usize),
}

/// Sequence of single-vertex introduce/forget steps between empty bags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NicePathDecomposition {
    pub n: usize,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    BfsOrder,
    MinDegree,
    Random(u64),
}

impl PathDecomposition {
    /// Largest bag size minus one; `-1` for no bags is reported as 0.
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        if self.bags.iter().any(|b| b.universe() != n) {
            return bad("bag universe does not match the graph".into());
        }
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0; n];
        let mut count = vec![0; n];
        for (i, b) in self.bags.iter().enumerate() {
            for v in b {
                first[v] = first[v].min(i);
                last[v] = i;
                count[v] += 1;
            }
        }
        for v in 0..n {
            if count[v] == 0 {
                return bad(format!("vertex {v} is in no bag"));
            }
            if last[v] - first[v] + 1 != count[v] {
                return bad(format!("bags containing vertex {v} are not contiguous"));
            }
        }
        for (u, v) in g.edges() {
            if first[u].max(first[v]) > last[u].min(last[v]) {
                return bad(format!("edge {u}-{v} is in no bag"));
            }
        }
        Ok(())
    }

    pub fn reversed(&self) -> PathDecomposition {
        PathDecomposition {
            bags: self.bags.iter().rev().cloned().collect(),
        }
    }

    /// Bags from a vertex order: bag i holds the i-th vertex and every
    /// earlier vertex with a neighbour at position i or later.
    pub fn from_order(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        if order.len() != n || VertexSet::from_iter(n, order.iter().copied()).len() != n {
            return Err(Error::invalid("order is not a permutation of the vertices"));
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let reach: Vec<usize> = (0..n)
            .map(|v| g.neighbors(v).iter().map(|&w| pos[w]).max().unwrap_or(0).max(pos[v]))
            .collect();
        let mut bags = Vec::with_capacity(n);
        let mut active = VertexSet::new(n);
        for (i, &v) in order.iter().enumerate() {
            active.insert(v);
            bags.push(active.clone());
            for u in active.clone().iter() {
                if reach[u] <= i {
                    active.remove(u);
                }
            }
        }
        Ok(PathDecomposition { bags })
    }

    pub fn nicify(&self) -> NicePathDecomposition {
        let n = self.bags.first().map_or(0, VertexSet::universe);
        let mut steps = Vec::new();
        let mut prev = VertexSet::new(n);
        for b in &self.bags {
            for v in &prev.difference(b) {
                steps.push(Step::Forget(v));
            }
            for v in &b.difference(&prev) {
                steps.push(Step::Introduce(v));
            }
            prev = b.clone();
        }
        for v in &prev {
            steps.push(Step::Forget(v));
        }
        NicePathDecomposition { n, steps }
    }

    /// `s pd <#bags> <width+1> <n>` then `b <id> <v>...` with 1-based ids.
    pub fn to_text(&self, base: Base) -> String {
        let off = if base == Base::One { 1 } else { 0 };
        let n = self.bags.first().map_or(0, VertexSet::universe);
        let max_bag = self.bags.iter().map(VertexSet::len).max().unwrap_or(0);
        let mut s = format!("s pd {} {} {}\n", self.bags.len(), max_bag, n);
        for (i, b) in self.bags.iter().enumerate() {
            write!(s, "b {}", i + 1).unwrap();
            for v in b {
                write!(s, " {}", v + off).unwrap();
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str, base: Base) -> Result<Self> {
        let off = if base == Base::One { 1 } else { 0 };
        let mut header: Option<(usize, usize, usize)> = None;
        let mut bags: Vec<Option<VertexSet>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let ln = i + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(ln, format!("expected an integer, found '{t}'")))
            };
            match toks.first().copied() {
                None | Some("c") => continue,
                Some("s") => {
                    if toks.len() != 5 || toks[1] != "pd" {
                        return Err(Error::parse(ln, "expected 's pd <bags> <width+1> <n>'"));
                    }
                    let h = (num(toks[2])?, num(toks[3])?, num(toks[4])?);
                    bags = vec![None; h.0];
                    header = Some(h);
                }
                Some("b") => {
                    let (nb, maxb, n) = header.ok_or_else(|| Error::parse(ln, "bag before header"))?;
                    let id = num(toks.get(1).ok_or_else(|| Error::parse(ln, "missing bag id"))?)?;
                    if id == 0 || id > nb {
                        return Err(Error::parse(ln, format!("bag id {id} out of range")));
                    }
                    let mut bag = VertexSet::new(n);
                    for t in &toks[2..] {
                        let raw = num(t)?;
                        if raw < off || raw - off >= n {
                            return Err(Error::VertexOutOfRange { line: ln, vertex: raw, n });
                        }
                        bag.insert(raw - off);
                    }
                    if bag.len() > maxb {
                        return Err(Error::parse(ln, "bag larger than declared width + 1"));
                    }
                    bags[id - 1] = Some(bag);
                }
                Some(t) => return Err(Error::parse(ln, format!("unexpected record '{t}'"))),
            }
        }
        if header.is_none() {
            return Err(Error::parse(0, "missing 's pd' header"));
        }
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| Error::InvalidDecomposition(format!("bag {} missing", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(PathDecomposition { bags })
    }
}

impl NicePathDecomposition {
    pub fn width(&self) -> usize {
        let mut size: usize = 0;
        let mut best = 0;
        for s in &self.steps {
            match s {
                Step::Introduce(_) => {
                    size += 1;
                    best = best.max(size);
                }
                Step::Forget(_) => size = size.saturating_sub(1),
            }
        }
        best.saturating_sub(1)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        if self.n != n {
            return bad(format!("decomposition is for {} vertices, graph has {n}", self.n));
        }
        let mut state = vec![0u8; n];
        let mut bag = VertexSet::new(n);
        for s in &self.steps {
            match *s {
                Step::Introduce(v) => {
                    if v >= n || state[v] != 0 {
                        return bad(format!("vertex {v} introduced twice or out of range"));
                    }
                    state[v] = 1;
                    bag.insert(v);
                }
                Step::Forget(v) => {
                    if v >= n || state[v] != 1 {
                        return bad(format!("vertex {v} forgotten without being in the bag"));
                    }
                    // Edges to vertices already forgotten were covered then.
                    if g.neighbors(v).iter().any(|&w| state[w] == 0) {
                        return bad(format!("vertex {v} forgotten before a neighbour is introduced"));
                    }
                    state[v] = 2;
                    bag.remove(v);
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| state[v] != 2) {
            return bad(format!("vertex {v} is not introduced and forgotten"));
        }
        Ok(())
    }

    pub fn reversed(&self) -> NicePathDecomposition {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match *s {
                Step::Introduce(v) => Step::Forget(v),
                Step::Forget(v) => Step::Introduce(v),
            })
            .collect();
        NicePathDecomposition { n: self.n, steps }
    }

    /// `i <v>` / `f <v>` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for st in &self.steps {
            match st {
                Step::Introduce(v) => writeln!(s, "i {v}").unwrap(),
                Step::Forget(v) => writeln!(s, "f {v}").unwrap(),
            }
        }
        s
    }
}

/// Builds a decomposition with the given heuristic. Components are laid out
/// one after another.
pub fn build_path_decomposition(g: &Graph, strategy: Strategy) -> PathDecomposition {
    let order = match strategy {
        Strategy::BfsOrder => bfs_order(g),
        Strategy::MinDegree => min_frontier_order(g),
        Strategy::Random(seed) => {
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            order
        }
    };
    PathDecomposition::from_order(g, &order).expect("heuristic orders are permutations")
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.connected_components() {
        let root = *comp.iter().min_by_key(|&&v| (g.degree(v), v)).expect("nonempty");
        let start = order.len();
        let mut seen = VertexSet::new(g.n());
        seen.insert(root);
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in g.neighbors(u) {
                if seen.insert(w) {
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Greedy order keeping the active frontier small: next is the unplaced
/// vertex adding the fewest new unplaced neighbours, preferring vertices
/// adjacent to placed ones.
fn min_frontier_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = VertexSet::new(n);
    let mut touched = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| {
                let fresh = g.neighbors(v).iter().filter(|&&w| !placed.contains(w) && !touched.contains(w)).count();
                (!touched.contains(v), fresh, g.degree(v), v)
            })
            .expect("unplaced vertex");
        placed.insert(v);
        touched.union_with(g.closed_nbhd(v));
        order.push(v);
    }
    order
}
