//! Parameterized branching solvers.
//!
//! [`compute_coud`] decides Γ ≥ n − ℓ with rules H1, H2, R1, B1, B2, B3
//! applied in that order. The budget κ moves in half steps, so it is kept
//! doubled as `budget2`.
//!
//! [`ud_bounded_degree`] decides Γ ≥ k by guessing, for each of k dominators,
//! which vertex it dominates and which private neighbour it keeps.

use crate::bounds;
use crate::domination::is_minimal_dominating;
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::{Limits, Meter};
use crate::report::SolveReport;
use crate::vertex_set::VertexSet;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    H1,
    H2,
    R1,
    B1,
    B2,
    B3,
}

impl Rule {
    pub const ALL: [Rule; 6] = [Rule::H1, Rule::H2, Rule::R1, Rule::B1, Rule::B2, Rule::B3];

    pub fn name(self) -> &'static str {
        match self {
            Rule::H1 => "H1",
            Rule::H2 => "H2",
            Rule::R1 => "R1",
            Rule::B1 => "B1",
            Rule::B2 => "B2",
            Rule::B3 => "B3",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Nodes at which each rule fired, indexed like [`Rule::ALL`].
    pub rule_nodes: [u64; 6],
    pub max_depth: usize,
    /// Children whose budget did not drop as required. Always zero unless
    /// the solver is broken.
    pub budget_violations: u64,
}

impl SearchStats {
    pub fn nodes(&self) -> u64 {
        self.rule_nodes.iter().sum()
    }

    pub fn count(&self, rule: Rule) -> u64 {
        self.rule_nodes[rule as usize]
    }

    fn append_to(&self, mut r: SolveReport) -> SolveReport {
        for rule in Rule::ALL {
            r = r.with_extra(&format!("rule_{}", rule.name()), self.count(rule));
        }
        r.with_extra("max_depth", self.max_depth)
            .with_extra("budget_violations", self.budget_violations)
    }
}

/// Partial assignment of the search: committed F, I and complement D̄.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchState {
    pub f: VertexSet,
    pub i: VertexSet,
    pub dbar: VertexSet,
    /// Twice the remaining budget κ.
    pub budget2: i64,
}

impl BranchState {
    pub fn root(n: usize, ell: usize) -> Self {
        BranchState {
            f: VertexSet::new(n),
            i: VertexSet::new(n),
            dbar: VertexSet::new(n),
            budget2: 2 * ell as i64,
        }
    }

    pub fn undecided(&self) -> VertexSet {
        self.f.union(&self.i).union(&self.dbar).complement()
    }

    fn child(&self, f: &[usize], i: &[usize], dbar: &VertexSet, cost2: i64) -> Self {
        let mut s = self.clone();
        for &v in f {
            s.f.insert(v);
        }
        for &v in i {
            s.i.insert(v);
        }
        s.dbar.union_with(dbar);
        s.budget2 -= cost2;
        s
    }
}

struct CoudSearch<'a> {
    g: &'a Graph,
    ell: usize,
    stats: SearchStats,
    meter: Meter,
}

impl CoudSearch<'_> {
    fn single(&self, v: usize) -> VertexSet {
        VertexSet::from_iter(self.g.n(), [v])
    }

    fn fire(&mut self, rule: Rule) {
        self.stats.rule_nodes[rule as usize] += 1;
    }

    fn run(&mut self, s: &BranchState, depth: usize) -> Result<Option<VertexSet>> {
        self.meter.tick()?;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let g = self.g;
        let n = g.n();
        if s.budget2 < 0 {
            self.fire(Rule::H1);
            return Ok(None);
        }
        let r = s.undecided();
        if r.is_empty() {
            self.fire(Rule::H2);
            let d = s.f.union(&s.i);
            let ok = d.len() + self.ell >= n && is_minimal_dominating(g, &d);
            return Ok(ok.then_some(d));
        }
        if let Some(v) = r.iter().find(|&v| g.open_nbhd(v).is_subset(&s.dbar)) {
            self.fire(Rule::R1);
            let child = s.child(&[], &[v], &VertexSet::new(n), 0);
            return self.descend(s, &child, 0, depth);
        }
        if let Some(v) = r.iter().find(|&v| g.open_nbhd(v).intersects(&s.f)) {
            self.fire(Rule::B1);
            let empty = VertexSet::new(n);
            let children = [s.child(&[v], &[], &empty, 1), s.child(&[], &[], &self.single(v), 1)];
            return self.branch(s, &children, &[1, 1], depth);
        }
        if let Some(v) = r.iter().find(|&v| g.open_nbhd(v).intersection_len(&r) == 1) {
            self.fire(Rule::B2);
            let u = g.open_nbhd(v).intersection(&r).first().expect("one neighbour");
            let empty = VertexSet::new(n);
            let children = [
                s.child(&[u, v], &[], &empty, 2),
                s.child(&[u], &[], &self.single(v), 2),
                s.child(&[], &[v], &self.single(u), 2),
            ];
            return self.branch(s, &children, &[2, 2, 2], depth);
        }
        self.fire(Rule::B3);
        let v = r.first().expect("R nonempty");
        let nv = g.open_nbhd(v).intersection(&r);
        let empty = VertexSet::new(n);
        let children = [
            s.child(&[], &[v], &nv, 4),
            s.child(&[v], &[], &empty, 1),
            s.child(&[], &[], &self.single(v), 1),
        ];
        self.branch(s, &children, &[4, 1, 1], depth)
    }

    fn descend(
        &mut self,
        parent: &BranchState,
        child: &BranchState,
        min_drop: i64,
        depth: usize,
    ) -> Result<Option<VertexSet>> {
        if parent.budget2 - child.budget2 < min_drop || child.budget2 > parent.budget2 {
            self.stats.budget_violations += 1;
        }
        self.run(child, depth + 1)
    }

    fn branch(
        &mut self,
        parent: &BranchState,
        children: &[BranchState],
        min_drop: &[i64],
        depth: usize,
    ) -> Result<Option<VertexSet>> {
        for (c, &drop) in children.iter().zip(min_drop) {
            if let Some(w) = self.descend(parent, c, drop, depth)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

/// Decides Γ(g) ≥ n − ℓ. The report's witness is the accepting leaf's F ∪ I.
pub fn compute_coud(g: &Graph, ell: usize, limits: &Limits) -> Result<(SolveReport, SearchStats)> {
    let t0 = Instant::now();
    let mut search = CoudSearch {
        g,
        ell,
        stats: SearchStats::default(),
        meter: limits.meter(),
    };
    let found = search.run(&BranchState::root(g.n(), ell), 0)?;
    let stats = search.stats;
    let mut r = SolveReport::new(found.as_ref().map_or(0, VertexSet::len), found.clone());
    r.decision = Some(found.is_some());
    r.nodes_explored = stats.nodes();
    r.elapsed = t0.elapsed();
    Ok((stats.append_to(r), stats))
}

/// Smallest ℓ with Γ ≥ n − ℓ found by sweeping ℓ upward; returns `n − ℓ`.
pub fn upper_domination_by_coud(g: &Graph, limits: &Limits) -> Result<SolveReport> {
    let t0 = Instant::now();
    let mut nodes = 0;
    for ell in 0..=g.n() {
        let (r, _) = compute_coud(g, ell, limits)?;
        nodes += r.nodes_explored;
        if r.decision == Some(true) {
            let w = r.witness.expect("accepting run has a witness");
            let mut out = SolveReport::new(w.len(), Some(w));
            out.nodes_explored = nodes;
            out.elapsed = t0.elapsed();
            return Ok(out.with_extra("ell", ell));
        }
    }
    unreachable!("every graph has a minimal dominating set")
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UdStats {
    pub nodes: u64,
    /// Leaves where the greedy completion failed and an exact extension
    /// search was needed.
    pub exact_fallbacks: u64,
    pub pruned_by_bound: u64,
}

struct UdSearch<'a> {
    g: &'a Graph,
    k: usize,
    limits: &'a Limits,
    meter: Meter,
    stats: UdStats,
}

impl UdSearch<'_> {
    /// `d`: chosen dominators; `dominated = N[d]`; `privates`: the private
    /// neighbour assigned to each dominator; `blocked = N[privates]`, which
    /// later dominators must avoid; `forbidden`: excluded siblings.
    fn run(
        &mut self,
        d: &VertexSet,
        dominated: &VertexSet,
        blocked: &VertexSet,
        forbidden: &VertexSet,
    ) -> Result<Option<VertexSet>> {
        self.meter.tick()?;
        self.stats.nodes += 1;
        let g = self.g;
        if d.len() == self.k {
            return self.complete(d);
        }
        let und = dominated.complement();
        if d.len() + und.len() < self.k {
            self.stats.pruned_by_bound += 1;
            return Ok(None);
        }
        let Some(u) = und.first() else {
            return Ok(None);
        };
        let mut forb = forbidden.clone();
        for w in g.closed_nbhd(u) {
            if forb.contains(w) || blocked.contains(w) {
                continue;
            }
            let d2 = d.with(w);
            let dom2 = dominated.union(g.closed_nbhd(w));
            for p in g.closed_nbhd(w) {
                if dominated.contains(p) {
                    continue;
                }
                let blocked2 = blocked.union(g.closed_nbhd(p));
                if let Some(x) = self.run(&d2, &dom2, &blocked2, &forb)? {
                    return Ok(Some(x));
                }
            }
            forb.insert(w);
        }
        Ok(None)
    }

    /// Greedy completion respecting previous choices, then validation; an
    /// exact extension search if the greedy pass gets stuck.
    fn complete(&mut self, d: &VertexSet) -> Result<Option<VertexSet>> {
        let g = self.g;
        let mut cur = d.clone();
        let mut dominated = g.closed_nbhd_of_set(&cur);
        for v in 0..g.n() {
            if cur.contains(v) || g.closed_nbhd(v).is_subset(&dominated) {
                continue;
            }
            let cand = cur.with(v);
            if crate::domination::is_irredundant(g, &cand) {
                cur = cand;
                dominated.union_with(g.closed_nbhd(v));
            }
        }
        if is_minimal_dominating(g, &cur) {
            return Ok(Some(cur));
        }
        self.stats.exact_fallbacks += 1;
        crate::oracle::mdse_decide(g, d, self.limits)
    }
}

/// Decides Γ(g) ≥ k by bounded-degree branching.
pub fn ud_bounded_degree(g: &Graph, k: usize, limits: &Limits) -> Result<(SolveReport, UdStats)> {
    let t0 = Instant::now();
    let n = g.n();
    let mut search = UdSearch {
        g,
        k,
        limits,
        meter: limits.meter(),
        stats: UdStats::default(),
    };
    let found = if k == 0 {
        Some(crate::domination::extend_to_maximal_independent(g, &VertexSet::new(n)))
    } else if k > n
        || (n > 0
            && g.is_connected()
            && bounds::prune(n, bounds::alpha_upper_estimate(g), g.max_degree(), g.min_degree(), k))
    {
        search.stats.pruned_by_bound += 1;
        None
    } else {
        let empty = VertexSet::new(n);
        search.run(&empty, &empty, &empty, &empty)?
    };
    let stats = search.stats;
    let mut r = SolveReport::new(found.as_ref().map_or(0, VertexSet::len), found.clone());
    r.decision = Some(found.is_some());
    r.nodes_explored = stats.nodes;
    r.elapsed = t0.elapsed();
    let r = r
        .with_extra("exact_fallbacks", stats.exact_fallbacks)
        .with_extra("pruned_by_bound", stats.pruned_by_bound);
    Ok((r, stats))
}

/// Γ(g) from decision runs of [`ud_bounded_degree`]: each accepting
/// witness of size `s` moves the next query to `s + 1`.
pub fn upper_domination_by_ud(g: &Graph, limits: &Limits) -> Result<SolveReport> {
    let t0 = Instant::now();
    let mut nodes = 0;
    let mut best = crate::domination::extend_to_maximal_independent(g, &VertexSet::new(g.n()));
    loop {
        let (r, _) = ud_bounded_degree(g, best.len() + 1, limits)?;
        nodes += r.nodes_explored;
        match r.witness {
            Some(w) if r.decision == Some(true) => best = w,
            _ => break,
        }
    }
    let mut out = SolveReport::new(best.len(), Some(best));
    out.nodes_explored = nodes;
    out.elapsed = t0.elapsed();
    Ok(out)
}
