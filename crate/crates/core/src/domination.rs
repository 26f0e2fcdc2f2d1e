//! Domination, independence and irredundance predicates, private
//! neighbourhoods, and the F/I/P/O partition of a minimal dominating set.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.closed_nbhd_of_set(d).len() == g.n()
}

/// `pn(v, S) = N[v] \ N[S \ {v}]`.
pub fn private_neighbours(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet> {
    if !s.contains(v) {
        return Err(Error::invalid(format!("vertex {v} is not in the set")));
    }
    Ok(private_unchecked(g, s, v))
}

fn private_unchecked(g: &Graph, s: &VertexSet, v: usize) -> VertexSet {
    let mut others = VertexSet::new(g.n());
    for w in s {
        if w != v {
            others.union_with(g.closed_nbhd(w));
        }
    }
    g.closed_nbhd(v).difference(&others)
}

/// Number of members of `s` dominating each vertex, capped at 2.
fn cover_counts(g: &Graph, s: &VertexSet) -> (VertexSet, VertexSet) {
    let mut once = VertexSet::new(g.n());
    let mut twice = VertexSet::new(g.n());
    for v in s {
        let nb = g.closed_nbhd(v);
        twice.union_with(&once.intersection(nb));
        once.union_with(nb);
    }
    (once, twice)
}

/// Every member of `s` has a nonempty private neighbourhood.
pub fn is_irredundant(g: &Graph, s: &VertexSet) -> bool {
    let (once, twice) = cover_counts(g, s);
    let exactly_once = once.difference(&twice);
    s.iter().all(|v| g.closed_nbhd(v).intersects(&exactly_once))
}

pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> bool {
    let (once, twice) = cover_counts(g, d);
    if once.len() != g.n() {
        return false;
    }
    let exactly_once = once.difference(&twice);
    d.iter().all(|v| g.closed_nbhd(v).intersects(&exactly_once))
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.closed_nbhd(v).intersection_len(s) == 1)
}

pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> bool {
    is_independent(g, s) && is_dominating(g, s)
}

/// Irredundant and no single vertex can be added while staying irredundant.
pub fn is_maximal_irredundant(g: &Graph, s: &VertexSet) -> bool {
    is_irredundant(g, s) && (0..g.n()).all(|v| s.contains(v) || !is_irredundant(g, &s.with(v)))
}

/// Grows an independent set to a maximal one, scanning vertices by index.
pub fn extend_to_maximal_independent(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    let mut blocked = g.closed_nbhd_of_set(s);
    for v in 0..g.n() {
        if !blocked.contains(v) {
            out.insert(v);
            blocked.union_with(g.closed_nbhd(v));
        }
    }
    out
}

/// The F/I/P/O partition associated with a minimal dominating set `D`:
/// `I` are members that are their own private neighbour, `F = D \ I`, each
/// `F` vertex is matched to one external private neighbour in `P`, and `O`
/// is everything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FipoPartition {
    pub f: VertexSet,
    pub i: VertexSet,
    pub p: VertexSet,
    pub o: VertexSet,
    /// `(f_vertex, p_vertex)` pairs, ordered by the F vertex.
    pub matching: Vec<(usize, usize)>,
}

impl FipoPartition {
    pub fn dominating_set(&self) -> VertexSet {
        self.f.union(&self.i)
    }

    /// Checks every structural property of the partition against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        let parts = [&self.f, &self.i, &self.p, &self.o];
        let mut seen = VertexSet::new(n);
        for part in parts {
            if seen.intersects(part) {
                return Err("parts are not pairwise disjoint".into());
            }
            seen.union_with(part);
        }
        if seen.len() != n {
            return Err("parts do not cover V".into());
        }
        if self.f.len() != self.p.len() || self.matching.len() != self.f.len() {
            return Err("|F| != |P| or matching size mismatch".into());
        }
        let d = self.dominating_set();
        let mut used_f = VertexSet::new(n);
        let mut used_p = VertexSet::new(n);
        for &(fv, pv) in &self.matching {
            if !self.f.contains(fv) || !self.p.contains(pv) {
                return Err(format!("matched pair ({fv},{pv}) not in F x P"));
            }
            if !used_f.insert(fv) || !used_p.insert(pv) {
                return Err("matching is not a bijection".into());
            }
            if !private_unchecked(g, &d, fv).contains(pv) {
                return Err(format!("{pv} is not a private neighbour of {fv}"));
            }
        }
        for v in &self.f {
            if !g.open_nbhd(v).intersects(&self.f) {
                return Err(format!("F vertex {v} has no friend in F"));
            }
        }
        if !is_independent(g, &self.i) {
            return Err("I is not independent".into());
        }
        for v in &self.i {
            if !g.open_nbhd(v).is_subset(&self.o) {
                return Err(format!("neighbourhood of I vertex {v} leaves O"));
            }
        }
        Ok(())
    }
}

/// Partition for a minimal dominating set. P is chosen by taking, for each F
/// vertex, its smallest external private neighbour.
pub fn fipo_decompose(g: &Graph, d: &VertexSet) -> Result<FipoPartition> {
    if !is_minimal_dominating(g, d) {
        return Err(Error::NotMinimalDominating);
    }
    let n = g.n();
    let mut f = VertexSet::new(n);
    let mut i = VertexSet::new(n);
    let mut p = VertexSet::new(n);
    let mut matching = Vec::new();
    for v in d {
        let pn = private_unchecked(g, d, v);
        if pn.contains(v) {
            i.insert(v);
        } else {
            f.insert(v);
            // pn(v) is nonempty by minimality and excludes v, so it lies outside D.
            let w = pn
                .difference(d)
                .first()
                .expect("minimal dominating set member without external private neighbour");
            p.insert(w);
            matching.push((v, w));
        }
    }
    let o = d.union(&p).complement();
    Ok(FipoPartition {
        f,
        i,
        p,
        o,
        matching,
    })
}
