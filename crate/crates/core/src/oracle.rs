//! Exhaustive reference solvers.
//!
//! Everything here is exponential and guarded by [`Limits`]. The other
//! solvers in the crate are tested against these.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::limits::{Limits, Meter};
use crate::report::SolveReport;
use crate::vertex_set::VertexSet;
use std::time::Instant;

/// The six parameters of the domination chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainValues {
    pub ir: usize,
    pub gamma: usize,
    pub i: usize,
    pub alpha: usize,
    pub upper_gamma: usize,
    pub upper_ir: usize,
}

impl ChainValues {
    pub fn is_chain(&self) -> bool {
        self.ir <= self.gamma
            && self.gamma <= self.i
            && self.i <= self.alpha
            && self.alpha <= self.upper_gamma
            && self.upper_gamma <= self.upper_ir
    }
}

/// Coverage bookkeeping for a partial dominating set.
#[derive(Clone)]
struct Partial {
    d: VertexSet,
    once: VertexSet,
    twice: VertexSet,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            d: VertexSet::new(n),
            once: VertexSet::new(n),
            twice: VertexSet::new(n),
        }
    }

    fn with(&self, g: &Graph, v: usize) -> Self {
        let nb = g.closed_nbhd(v);
        let mut twice = self.twice.clone();
        twice.union_with(&self.once.intersection(nb));
        Partial {
            d: self.d.with(v),
            once: self.once.union(nb),
            twice,
        }
    }

    /// All members still have a private neighbour. Adding vertices can only
    /// shrink private neighbourhoods, so a failure here is final.
    fn irredundant(&self, g: &Graph) -> bool {
        let exact = self.once.difference(&self.twice);
        self.d.iter().all(|v| g.closed_nbhd(v).intersects(&exact))
    }

    fn undominated(&self) -> VertexSet {
        self.once.complement()
    }
}

/// Calls `visit` once for every minimal dominating set of `g` and returns
/// how many there were.
pub fn enumerate_minimal_dominating_sets<F>(g: &Graph, limits: &Limits, mut visit: F) -> Result<u64>
where
    F: FnMut(&VertexSet),
{
    limits.check_enum(g.n())?;
    let mut meter = limits.meter();
    let mut count = 0;
    let start = Partial::new(g.n());
    enum_rec(g, &start, &VertexSet::new(g.n()), &mut meter, &mut |d| {
        count += 1;
        visit(d);
        true
    })?;
    Ok(count)
}

/// Branches on the lowest undominated vertex. Siblings tried earlier are
/// forbidden in later branches so each set is produced once. Returns
/// `false` when the visitor asked to stop.
fn enum_rec(
    g: &Graph,
    p: &Partial,
    forbidden: &VertexSet,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&VertexSet) -> bool,
) -> Result<bool> {
    meter.tick()?;
    let Some(u) = p.undominated().first() else {
        return Ok(!p.irredundant(g) || visit(&p.d));
    };
    let mut forb = forbidden.clone();
    for w in g.closed_nbhd(u) {
        if forb.contains(w) {
            continue;
        }
        let next = p.with(g, w);
        if next.irredundant(g) && !enum_rec(g, &next, &forb, meter, visit)? {
            return Ok(false);
        }
        forb.insert(w);
    }
    Ok(true)
}

/// Every minimal dominating set, in generation order.
pub fn all_minimal_dominating_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    enumerate_minimal_dominating_sets(g, limits, |d| out.push(d.clone()))?;
    Ok(out)
}

/// Γ(g) by branch and bound: each branch dominates a new vertex, so
/// `|D| + #undominated` bounds every completion.
pub fn upper_domination_exact(g: &Graph, limits: &Limits) -> Result<SolveReport> {
    limits.check_enum(g.n())?;
    let t0 = Instant::now();
    let mut meter = limits.meter();
    let seed = crate::domination::extend_to_maximal_independent(g, &VertexSet::new(g.n()));
    let mut best = seed;
    ud_rec(g, &Partial::new(g.n()), &VertexSet::new(g.n()), &mut best, &mut meter)?;
    let mut r = SolveReport::new(best.len(), Some(best));
    r.nodes_explored = meter.nodes();
    r.elapsed = t0.elapsed();
    Ok(r)
}

fn ud_rec(
    g: &Graph,
    p: &Partial,
    forbidden: &VertexSet,
    best: &mut VertexSet,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    let und = p.undominated();
    if p.d.len() + und.len() <= best.len() {
        return Ok(());
    }
    let Some(u) = und.first() else {
        if p.irredundant(g) {
            *best = p.d.clone();
        }
        return Ok(());
    };
    let mut forb = forbidden.clone();
    for w in g.closed_nbhd(u) {
        if forb.contains(w) {
            continue;
        }
        let next = p.with(g, w);
        if next.irredundant(g) {
            ud_rec(g, &next, &forb, best, meter)?;
        }
        forb.insert(w);
    }
    Ok(())
}

/// γ(g) with a minimum dominating set.
pub fn domination_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    limits.check_enum(g.n())?;
    let mut meter = limits.meter();
    let mut best = g.vertices();
    gamma_rec(g, &VertexSet::new(g.n()), &VertexSet::new(g.n()), &mut best, &mut meter)?;
    Ok((best.len(), best))
}

fn gamma_rec(
    g: &Graph,
    d: &VertexSet,
    dominated: &VertexSet,
    best: &mut VertexSet,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    let und = dominated.complement();
    let Some(u) = und.first() else {
        if d.len() < best.len() {
            *best = d.clone();
        }
        return Ok(());
    };
    let maxcov = (0..g.n())
        .map(|v| g.closed_nbhd(v).intersection_len(&und))
        .max()
        .unwrap_or(1)
        .max(1);
    if d.len() + und.len().div_ceil(maxcov) >= best.len() {
        return Ok(());
    }
    for w in g.closed_nbhd(u) {
        gamma_rec(g, &d.with(w), &dominated.union(g.closed_nbhd(w)), best, meter)?;
    }
    Ok(())
}

/// α(g) with a maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = VertexSet::new(g.n());
    mis_rec(g, &g.vertices(), &VertexSet::new(g.n()), &mut best);
    (best.len(), best)
}

fn mis_rec(g: &Graph, cand: &VertexSet, cur: &VertexSet, best: &mut VertexSet) {
    if cur.len() + cand.len() <= best.len() {
        return;
    }
    let Some(v) = cand
        .iter()
        .max_by_key(|&v| (g.closed_nbhd(v).intersection_len(cand), std::cmp::Reverse(v)))
    else {
        *best = cur.clone();
        return;
    };
    if g.closed_nbhd(v).intersection_len(cand) <= 1 {
        // Only isolated candidates remain.
        *best = cur.union(cand);
        return;
    }
    mis_rec(g, &cand.difference(g.closed_nbhd(v)), &cur.with(v), best);
    mis_rec(g, &cand.without(v), cur, best);
}

/// All six chain parameters by a full subset scan.
pub fn chain_values(g: &Graph, limits: &Limits) -> Result<ChainValues> {
    chain_values_with(g, limits, Execution::Sequential)
}

pub fn chain_values_with(g: &Graph, limits: &Limits, exec: Execution) -> Result<ChainValues> {
    limits.check_chain(g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(ChainValues {
            ir: 0,
            gamma: 0,
            i: 0,
            alpha: 0,
            upper_gamma: 0,
            upper_ir: 0,
        });
    }
    let closed: Vec<u64> = (0..n).map(|v| g.closed_nbhd(v).to_mask()).collect();
    let full = (1u64 << n) - 1;
    let classify = |m: u64| -> (bool, bool, bool) {
        let (mut once, mut twice, mut indep) = (0u64, 0u64, true);
        let mut rest = m;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nb = closed[v];
            if nb & m != 1 << v {
                indep = false;
            }
            twice |= once & nb;
            once |= nb;
        }
        let exact = once & !twice;
        let mut irr = true;
        let mut rest = m;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if closed[v] & exact == 0 {
                irr = false;
                break;
            }
        }
        (once == full, indep, irr)
    };
    let total = 1usize << n;
    let flags: Vec<u8> = exec.map_range(total, |m| {
        let (dom, ind, irr) = classify(m as u64);
        dom as u8 | (ind as u8) << 1 | (irr as u8) << 2
    });
    let mut cv = ChainValues {
        ir: usize::MAX,
        gamma: usize::MAX,
        i: usize::MAX,
        alpha: 0,
        upper_gamma: 0,
        upper_ir: 0,
    };
    for (m, &f) in flags.iter().enumerate() {
        let size = (m as u64).count_ones() as usize;
        let (dom, ind, irr) = (f & 1 != 0, f & 2 != 0, f & 4 != 0);
        if dom {
            cv.gamma = cv.gamma.min(size);
        }
        if ind {
            cv.alpha = cv.alpha.max(size);
            if dom {
                cv.i = cv.i.min(size);
            }
        }
        if irr {
            if dom {
                cv.upper_gamma = cv.upper_gamma.max(size);
            }
            cv.upper_ir = cv.upper_ir.max(size);
            let maximal = (0..n)
                .filter(|v| m >> v & 1 == 0)
                .all(|v| flags[m | 1 << v] & 4 == 0);
            if maximal {
                cv.ir = cv.ir.min(size);
            }
        }
    }
    Ok(cv)
}

/// Decides whether some minimal dominating set contains `s`, returning one.
pub fn mdse_decide(g: &Graph, s: &VertexSet, limits: &Limits) -> Result<Option<VertexSet>> {
    limits.check_enum(g.n())?;
    if s.universe() != g.n() {
        return Err(Error::invalid("set universe does not match the graph"));
    }
    let mut p = Partial::new(g.n());
    for v in s {
        p = p.with(g, v);
    }
    if !p.irredundant(g) {
        return Ok(None);
    }
    let mut meter = limits.meter();
    let mut found = None;
    enum_rec(g, &p, &VertexSet::new(g.n()), &mut meter, &mut |d| {
        found = Some(d.clone());
        false
    })?;
    Ok(found)
}

#[derive(Clone)]
struct PartialHit {
    h: VertexSet,
    /// Edge hit counts, capped at 2.
    hits: Vec<u8>,
}

impl PartialHit {
    fn with(&self, hg: &Hypergraph, v: usize) -> Self {
        let mut hits = self.hits.clone();
        for (c, e) in hits.iter_mut().zip(hg.edges()) {
            if e.contains(v) && *c < 2 {
                *c += 1;
            }
        }
        PartialHit {
            h: self.h.with(v),
            hits,
        }
    }

    fn minimal_so_far(&self, hg: &Hypergraph) -> bool {
        let mut private = VertexSet::new(hg.n());
        for (c, e) in self.hits.iter().zip(hg.edges()) {
            if *c == 1 {
                private.union_with(&e.intersection(&self.h));
            }
        }
        self.h.is_subset(&private)
    }

    fn first_unhit(&self) -> Option<usize> {
        self.hits.iter().position(|&c| c == 0)
    }

    fn unhit_count(&self) -> usize {
        self.hits.iter().filter(|&&c| c == 0).count()
    }
}

/// Calls `visit` for every minimal hitting set of `hg`.
pub fn enumerate_minimal_hitting_sets<F>(hg: &Hypergraph, limits: &Limits, mut visit: F) -> Result<u64>
where
    F: FnMut(&VertexSet),
{
    limits.check_enum(hg.n())?;
    let mut meter = limits.meter();
    let start = PartialHit {
        h: VertexSet::new(hg.n()),
        hits: vec![0; hg.edge_count()],
    };
    let mut count = 0;
    hit_rec(hg, &start, &VertexSet::new(hg.n()), &mut meter, &mut |h| {
        count += 1;
        visit(h);
    })?;
    Ok(count)
}

fn hit_rec(
    hg: &Hypergraph,
    p: &PartialHit,
    forbidden: &VertexSet,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&VertexSet),
) -> Result<()> {
    meter.tick()?;
    let Some(e) = p.first_unhit() else {
        visit(&p.h);
        return Ok(());
    };
    let mut forb = forbidden.clone();
    for w in &hg.edges()[e] {
        if forb.contains(w) {
            continue;
        }
        let next = p.with(hg, w);
        if next.minimal_so_far(hg) {
            hit_rec(hg, &next, &forb, meter, visit)?;
        }
        forb.insert(w);
    }
    Ok(())
}

/// Maximum minimal hitting set by branch and bound.
pub fn mmhs_exact(hg: &Hypergraph, limits: &Limits) -> Result<SolveReport> {
    limits.check_enum(hg.n())?;
    let t0 = Instant::now();
    let mut meter = limits.meter();
    let start = PartialHit {
        h: VertexSet::new(hg.n()),
        hits: vec![0; hg.edge_count()],
    };
    let mut best: Option<VertexSet> = None;
    mmhs_rec(hg, &start, &VertexSet::new(hg.n()), &mut best, &mut meter)?;
    let best = best.unwrap_or_else(|| VertexSet::new(hg.n()));
    let mut r = SolveReport::new(best.len(), Some(best));
    r.nodes_explored = meter.nodes();
    r.elapsed = t0.elapsed();
    Ok(r)
}

fn mmhs_rec(
    hg: &Hypergraph,
    p: &PartialHit,
    forbidden: &VertexSet,
    best: &mut Option<VertexSet>,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    if let Some(b) = best {
        if p.h.len() + p.unhit_count() <= b.len() {
            return Ok(());
        }
    }
    let Some(e) = p.first_unhit() else {
        *best = Some(p.h.clone());
        return Ok(());
    };
    let mut forb = forbidden.clone();
    for w in &hg.edges()[e] {
        if forb.contains(w) {
            continue;
        }
        let next = p.with(hg, w);
        if next.minimal_so_far(hg) {
            mmhs_rec(hg, &next, &forb, best, meter)?;
        }
        forb.insert(w);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_minimal_dominating;
    use crate::graph::named;

    fn sets(g: &Graph) -> Vec<Vec<usize>> {
        let mut v: Vec<_> = all_minimal_dominating_sets(g, &Limits::default())
            .unwrap()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        v.sort();
        v
    }

    #[test]
    fn k3_singletons() {
        assert_eq!(sets(&named::complete(3)), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn p4_full_list() {
        let g = named::path(4);
        let got = sets(&g);
        let mut want = Vec::new();
        for m in 0u64..16 {
            let d = VertexSet::from_mask(4, m);
            if is_minimal_dominating(&g, &d) {
                want.push(d.to_vec());
            }
        }
        want.sort();
        assert_eq!(got, want);
        assert_eq!(got, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn upper_domination_basics() {
        let l = Limits::default();
        assert_eq!(upper_domination_exact(&named::complete(5), &l).unwrap().value, 1);
        assert_eq!(upper_domination_exact(&Graph::empty(4), &l).unwrap().value, 4);
        assert_eq!(upper_domination_exact(&Graph::empty(0), &l).unwrap().value, 0);
        assert_eq!(upper_domination_exact(&named::path(4), &l).unwrap().value, 2);
    }

    #[test]
    fn chain_examples() {
        let l = Limits::default();
        let c5 = chain_values(&named::cycle(5), &l).unwrap();
        assert_eq!(
            (c5.ir, c5.gamma, c5.i, c5.alpha, c5.upper_gamma, c5.upper_ir),
            (2, 2, 2, 2, 2, 2)
        );
        let star = chain_values(&named::star(4), &l).unwrap();
        assert_eq!((star.gamma, star.alpha, star.upper_gamma), (1, 4, 4));
        let p4 = chain_values(&named::path(4), &l).unwrap();
        assert_eq!((p4.alpha, p4.upper_gamma), (2, 2));
        assert!(p4.is_chain());
    }

    #[test]
    fn mdse_examples() {
        let l = Limits::default();
        let p3 = named::path(3);
        assert!(mdse_decide(&p3, &VertexSet::new(3), &l).unwrap().is_some());
        let w = mdse_decide(&p3, &VertexSet::from_iter(3, [0, 2]), &l).unwrap();
        assert_eq!(w.unwrap().to_vec(), vec![0, 2]);
        assert!(mdse_decide(&p3, &VertexSet::from_iter(3, [0, 1]), &l).unwrap().is_none());
    }

    #[test]
    fn mmhs_examples() {
        let l = Limits::default();
        let h = Hypergraph::new(3, [vec![0, 1], vec![1, 2]]).unwrap();
        let r = mmhs_exact(&h, &l).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 2]);
        assert_eq!(mmhs_exact(&Hypergraph::new(1, [vec![0]]).unwrap(), &l).unwrap().value, 1);
        let p3 = crate::hypergraph::closed_neighbourhood_hypergraph(&named::path(3));
        assert_eq!(mmhs_exact(&p3, &l).unwrap().value, 2);
    }

    #[test]
    fn caps_are_errors() {
        let l = Limits {
            enum_cap: 3,
            ..Limits::default()
        };
        assert!(upper_domination_exact(&named::path(4), &l)
            .unwrap_err()
            .is_resource_error());
    }

    #[test]
    fn small_numbers() {
        let l = Limits::default();
        assert_eq!(domination_number(&named::path(4), &l).unwrap().0, 2);
        assert_eq!(domination_number(&named::petersen(), &l).unwrap().0, 3);
        assert_eq!(independence_number(&named::petersen()).0, 4);
        assert_eq!(independence_number(&Graph::empty(3)).0, 3);
    }
}
