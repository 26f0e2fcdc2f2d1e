//! Polynomial-time approximation algorithms.

use crate::coloring::{brooks_coloring, color_classes, color_count, greedy_min_degree_is, smallest_last_coloring};
use crate::domination::extend_to_maximal_independent;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReport {
    pub witness: VertexSet,
    pub value: usize,
    /// The approximation guarantee, instantiated where possible.
    pub guarantee: String,
    /// Which sub-algorithm produced the witness.
    pub component: &'static str,
    /// Colors used, for the coloring approximation.
    pub colors: Option<usize>,
}

/// Peels `set` down to an inclusion-minimal subset satisfying `valid`,
/// trying the highest index first and never removing `protected` vertices.
pub fn minimalize<F>(set: &VertexSet, protected: &VertexSet, valid: F) -> Result<VertexSet>
where
    F: Fn(&VertexSet) -> bool,
{
    if !valid(set) {
        return Err(Error::invalid("input does not satisfy the property"));
    }
    let mut out = set.clone();
    let order: Vec<usize> = set.iter().collect();
    for &v in order.iter().rev() {
        if protected.contains(v) {
            continue;
        }
        out.remove(v);
        if !valid(&out) {
            out.insert(v);
        }
    }
    Ok(out)
}

fn maximal_matching_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::new(g.n());
    for (u, v) in g.edges() {
        if !cover.contains(u) && !cover.contains(v) {
            cover.insert(u);
            cover.insert(v);
        }
    }
    cover
}

/// Co-upper domination within factor 4. Returns the complement `V \ S` of a
/// maximal independent set `S` that extends the complement of a
/// maximal-matching vertex cover.
pub fn coud_4approx(g: &Graph) -> ApproxReport {
    let cover = maximal_matching_cover(g);
    let s = extend_to_maximal_independent(g, &cover.complement());
    let witness = s.complement();
    ApproxReport {
        value: witness.len(),
        guarantee: format!("{} <= 2*tau <= 4*(n - Gamma)", witness.len()),
        witness,
        component: "matching-cover",
        colors: None,
    }
}

/// Best of a greedy independent set and the largest color class of a
/// proper coloring, both extended to maximal independent sets.
pub fn ud_coloring_approx(g: &Graph) -> ApproxReport {
    let greedy = greedy_min_degree_is(g);
    let mut colors = smallest_last_coloring(g);
    if color_count(&colors) > g.max_degree().max(2) {
        let alt = brooks_coloring(g);
        if color_count(&alt) < color_count(&colors) {
            colors = alt;
        }
    }
    let p = color_count(&colors);
    let largest = color_classes(g.n(), &colors)
        .into_iter()
        .rev()
        .max_by_key(|c| c.len())
        .unwrap_or_else(|| VertexSet::new(g.n()));
    let from_coloring = extend_to_maximal_independent(g, &largest);
    let (witness, component) = if from_coloring.len() > greedy.len() {
        (from_coloring, "coloring")
    } else {
        (greedy, "greedy")
    };
    let delta = g.max_degree();
    ApproxReport {
        value: witness.len(),
        guarantee: format!(
            "max{{rho, ({}*rho + {})/({}*rho)}}",
            delta * p,
            delta.saturating_sub(1),
            2 * delta
        ),
        witness,
        component,
        colors: Some(p),
    }
}

/// A minimal hitting set of size `Ω(n^{1/d})`, `d` the rank.
pub fn mmhs_approx(h: &Hypergraph) -> Result<ApproxReport> {
    mmhs_approx_with(h, Execution::default())
}

pub fn mmhs_approx_with(h: &Hypergraph, exec: Execution) -> Result<ApproxReport> {
    if let Some(i) = h.edges().iter().position(|e| e.is_empty()) {
        return Err(Error::EmptyHyperedge(i));
    }
    let witness = recurse(h.n(), h.edges().to_vec(), exec);
    debug_assert!(h.is_minimal_hitting_set(&witness));
    Ok(ApproxReport {
        value: witness.len(),
        guarantee: format!("Omega(n^(1/{}))", h.rank()),
        witness,
        component: "recursive",
        colors: None,
    })
}

fn hits_all(edges: &[VertexSet], s: &VertexSet) -> bool {
    edges.iter().all(|e| e.intersects(s))
}

fn recurse(n: usize, edges: Vec<VertexSet>, exec: Execution) -> VertexSet {
    let mut active = VertexSet::new(n);
    for e in &edges {
        active.union_with(e);
    }
    let d = edges.iter().map(|e| e.len()).max().unwrap_or(0);
    if d <= 1 {
        return active;
    }
    let none = VertexSet::new(n);
    let peel_all = |set: &VertexSet| minimalize(set, &none, |s| hits_all(&edges, s)).expect("hitting set");
    let mut covered = VertexSet::new(n);
    let mut m = 0usize;
    for e in &edges {
        if !e.intersects(&covered) {
            covered.union_with(e);
            m += 1;
        }
    }
    if (m as u128).pow(d as u32) >= active.len() as u128 {
        return peel_all(&active);
    }
    let hset = covered;
    // B(S) for every S = e ∩ H with 1 <= |S| <= d-1.
    let mut seen: BTreeMap<Vec<usize>, VertexSet> = BTreeMap::new();
    for e in &edges {
        let s = e.intersection(&hset);
        if s.len() < d && !s.is_empty() {
            seen.entry(s.to_vec()).or_insert_with(|| VertexSet::new(n)).union_with(&e.difference(&hset));
        }
    }
    let candidates: Vec<(Vec<usize>, VertexSet)> = seen.into_iter().filter(|(_, b)| !b.is_empty()).collect();
    // V \ S must still hit every edge.
    let valid = exec.map(&candidates, |(s, _)| {
        let sset = VertexSet::from_iter(n, s.iter().copied());
        !edges.iter().any(|e| e.is_subset(&sset))
    });
    let candidates: Vec<_> = candidates.into_iter().zip(valid).filter(|(_, ok)| *ok).map(|(c, _)| c).collect();
    let mut by_size = vec![VertexSet::new(n); d];
    for (s, b) in &candidates {
        by_size[s.len()].union_with(b);
    }
    let Some(size) = (1..d).filter(|&i| !by_size[i].is_empty()).max_by_key(|&i| (by_size[i].len(), std::cmp::Reverse(i)))
    else {
        return peel_all(&active);
    };
    let (s_m, b_m) = candidates
        .iter()
        .filter(|(s, _)| s.len() == size)
        .max_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| b.0.cmp(&a.0)))
        .expect("class is non-empty");
    let s_m = VertexSet::from_iter(n, s_m.iter().copied());
    let region = s_m.union(b_m);
    let sub: Vec<VertexSet> = edges.iter().filter(|e| e.is_subset(&region)).map(|e| e.difference(&s_m)).collect();
    let h_prime = recurse(n, sub, exec);
    let start = active.difference(&region).union(&h_prime);
    let out = minimalize(&start, &h_prime, |s| hits_all(&edges, s)).expect("hitting set");
    debug_assert!(h_prime.is_subset(&out));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{is_dominating, is_minimal_dominating};
    use crate::graph::named;

    #[test]
    fn minimalize_examples() {
        let k3 = named::complete(3);
        let s = minimalize(&k3.vertices(), &VertexSet::new(3), |d| is_dominating(&k3, d)).unwrap();
        assert_eq!(s.len(), 1);
        let p4 = named::path(4);
        let s = minimalize(&p4.vertices(), &VertexSet::new(4), |d| is_dominating(&p4, d)).unwrap();
        assert!(is_minimal_dominating(&p4, &s) && s.len() <= 2);
        let keep = VertexSet::from_iter(4, [3]);
        let s = minimalize(&p4.vertices(), &keep, |d| is_dominating(&p4, d)).unwrap();
        assert!(s.contains(3) && is_dominating(&p4, &s));
        assert!(minimalize(&VertexSet::new(4), &VertexSet::new(4), |d| is_dominating(&p4, d)).is_err());
    }

    #[test]
    fn coud_examples() {
        let c4 = coud_4approx(&named::cycle(4));
        assert_eq!(c4.value, 2);
        assert_eq!(coud_4approx(&named::complete(2)).value, 1);
        let g3 = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])
            .unwrap();
        let r = coud_4approx(&g3);
        assert!(r.value <= 6);
        assert!(is_minimal_dominating(&g3, &r.witness.complement()));
    }

    #[test]
    fn coloring_examples() {
        let r = ud_coloring_approx(&named::complete(5));
        assert_eq!(r.value, 1);
        let r = ud_coloring_approx(&named::complete_bipartite(2, 3));
        assert_eq!(r.colors, Some(2));
        assert_eq!(r.value, 3);
        let pet = named::petersen();
        let r = ud_coloring_approx(&pet);
        assert!(r.value * r.colors.unwrap() >= pet.n());
        assert!(is_minimal_dominating(&pet, &r.witness));
    }

    #[test]
    fn mmhs_examples() {
        let h = Hypergraph::new(3, [vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(mmhs_approx(&h).unwrap().value, 3);
        let c4 = crate::hypergraph::edge_hypergraph(&named::cycle(4));
        let r = mmhs_approx(&c4).unwrap();
        assert!(c4.is_minimal_hitting_set(&r.witness));
        assert_eq!(r.value, 2);
        let h = Hypergraph::new(3, [vec![0, 1], vec![1, 2]]).unwrap();
        assert!(h.is_minimal_hitting_set(&mmhs_approx(&h).unwrap().witness));
        let empty = Hypergraph::new(4, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(mmhs_approx(&empty).unwrap().value, 0);
    }

    #[test]
    fn deterministic() {
        let g = named::petersen();
        let h = crate::hypergraph::closed_neighbourhood_hypergraph(&g);
        let a = mmhs_approx_with(&h, Execution::Sequential).unwrap();
        let b = mmhs_approx_with(&h, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(h.is_minimal_hitting_set(&a.witness));
    }
}
