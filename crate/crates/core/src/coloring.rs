//! Greedy independent sets and proper colorings, including a constructive
//! Brooks coloring.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Repeatedly takes a minimum-degree vertex of the remaining graph (lowest
/// index on ties) and deletes its closed neighbourhood.
pub fn greedy_min_degree_is(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut alive = g.vertices();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut out = VertexSet::new(n);
    while let Some(v) = alive.iter().min_by_key(|&v| (deg[v], v)) {
        out.insert(v);
        let removed = g.closed_nbhd(v).intersection(&alive);
        alive.difference_with(&removed);
        for w in &removed {
            for &x in g.neighbors(w) {
                if alive.contains(x) {
                    deg[x] -= 1;
                }
            }
        }
    }
    out
}

/// Smallest-last (degeneracy) order: vertices removed by minimum remaining
/// degree, returned in reverse removal order.
pub fn smallest_last_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex left");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// Greedy coloring in the given order with the smallest free color.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = Vec::new();
    for &v in order {
        used.clear();
        used.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if color[w] < used.len() {
                used[color[w]] = true;
            }
        }
        color[v] = used.iter().position(|&u| !u).expect("free color");
    }
    color
}

pub fn smallest_last_coloring(g: &Graph) -> Vec<usize> {
    greedy_coloring(g, &smallest_last_order(g))
}

pub fn color_count(colors: &[usize]) -> usize {
    colors.iter().map(|&c| c + 1).max().unwrap_or(0)
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

pub fn color_classes(n: usize, colors: &[usize]) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::new(n); color_count(colors)];
    for (v, &c) in colors.iter().enumerate() {
        classes[c].insert(v);
    }
    classes
}

/// BFS order of `members` from `root`, restricted to `members`.
fn bfs_order(g: &Graph, members: &VertexSet, root: usize) -> Vec<usize> {
    let mut seen = VertexSet::new(g.n());
    seen.insert(root);
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in g.neighbors(u) {
            if members.contains(w) && seen.insert(w) {
                order.push(w);
            }
        }
    }
    order
}

fn connected_within(g: &Graph, members: &VertexSet) -> bool {
    match members.first() {
        None => true,
        Some(r) => bfs_order(g, members, r).len() == members.len(),
    }
}

/// Colors `members` greedily in reverse BFS order from `root`. Every vertex
/// except the root has an uncolored parent when it is colored.
fn reverse_bfs_color(g: &Graph, members: &VertexSet, root: usize, color: &mut [usize]) {
    let mut order = bfs_order(g, members, root);
    order.reverse();
    for v in order {
        let mut used = vec![false; g.degree(v) + 1];
        for &w in g.neighbors(v) {
            if color[w] < used.len() {
                used[color[w]] = true;
            }
        }
        color[v] = used.iter().position(|&u| !u).expect("free color");
    }
}

/// Colors one connected component with at most `max(Δ_c, 2)` colors unless
/// it is a clique or an odd cycle.
fn brooks_component(g: &Graph, comp: &[usize], color: &mut [usize]) {
    let n = g.n();
    let members = VertexSet::from_iter(n, comp.iter().copied());
    let deg = |v: usize| g.closed_nbhd(v).intersection_len(&members) - 1;
    let dmax = comp.iter().map(|&v| deg(v)).max().unwrap_or(0);
    let is_clique = comp.iter().all(|&v| deg(v) + 1 == comp.len());
    if is_clique {
        for (i, &v) in comp.iter().enumerate() {
            color[v] = i;
        }
        return;
    }
    if dmax == 2 && comp.iter().all(|&v| deg(v) == 2) {
        // Cycle: walk it and alternate, with a third color at the end if odd.
        let mut walk = vec![comp[0]];
        let mut prev = usize::MAX;
        let mut cur = comp[0];
        while walk.len() < comp.len() {
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev && members.contains(w));
            let next = next.expect("cycle continues");
            prev = cur;
            cur = next;
            walk.push(cur);
        }
        for (i, &v) in walk.iter().enumerate() {
            color[v] = i % 2;
        }
        if walk.len() % 2 == 1 {
            color[*walk.last().unwrap()] = 2;
        }
        return;
    }
    if let Some(&root) = comp.iter().find(|&&v| deg(v) < dmax) {
        reverse_bfs_color(g, &members, root, color);
        return;
    }
    // Regular, not a clique or cycle, so dmax >= 3. A cut vertex splits the
    // component into parts where it has lower degree.
    for &c in comp {
        let rest = members.without(c);
        let Some(first) = rest.first() else { continue };
        let side = VertexSet::from_iter(n, bfs_order(g, &rest, first));
        if side.len() == rest.len() {
            continue;
        }
        let part_a = side.with(c);
        let part_b = members.difference(&side);
        reverse_bfs_color(g, &part_a, c, color);
        let keep = color[c];
        let saved: Vec<(usize, usize)> = side.iter().map(|v| (v, color[v])).collect();
        for &(v, _) in &saved {
            color[v] = usize::MAX;
        }
        reverse_bfs_color(g, &part_b, c, color);
        for (v, col) in saved {
            color[v] = col;
        }
        let got = color[c];
        if got != keep {
            for v in &part_b {
                if color[v] == got {
                    color[v] = keep;
                } else if color[v] == keep {
                    color[v] = got;
                }
            }
        }
        return;
    }
    // 2-connected: find x with non-adjacent neighbours y, z such that
    // removing y and z keeps the component connected.
    for &x in comp {
        let nx: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| members.contains(w)).collect();
        for (a, &y) in nx.iter().enumerate() {
            for &z in &nx[a + 1..] {
                if g.has_edge(y, z) {
                    continue;
                }
                let rest = members.without(y).without(z);
                if !connected_within(g, &rest) {
                    continue;
                }
                color[y] = 0;
                color[z] = 0;
                reverse_bfs_color(g, &rest, x, color);
                return;
            }
        }
    }
    unreachable!("regular 2-connected non-complete component without a Brooks triple");
}

/// Proper coloring with at most Δ colors on every component that is
/// neither a clique nor an odd cycle (and at most `max(Δ, 2)` in general
/// for such components).
pub fn brooks_coloring(g: &Graph) -> Vec<usize> {
    let mut color = vec![usize::MAX; g.n()];
    for comp in g.connected_components() {
        brooks_component(g, &comp, &mut color);
    }
    color
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn brooks_on_named_graphs() {
        for g in [
            named::petersen(),
            named::complete_bipartite(3, 3),
            named::cycle(6),
            named::path(5),
            crate::graph::Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
        ] {
            let c = brooks_coloring(&g);
            assert!(is_proper_coloring(&g, &c));
            assert!(color_count(&c) <= g.max_degree().max(2), "{g:?}");
        }
        let c = brooks_coloring(&named::cycle(5));
        assert!(is_proper_coloring(&named::cycle(5), &c));
        assert_eq!(color_count(&c), 3);
        assert_eq!(color_count(&brooks_coloring(&named::complete(4))), 4);
    }

    #[test]
    fn cubic_with_cut_vertex() {
        // Two copies of K4 minus an edge, each attached through a bridge path.
        let mut e = vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4)];
        e.extend([(5, 6), (5, 7), (6, 7), (6, 8), (7, 8), (5, 9)]);
        e.extend([(4, 10), (4, 11), (9, 10), (9, 11), (10, 11)]);
        e.push((3, 8));
        let g = Graph::from_edges(12, e).unwrap();
        let c = brooks_coloring(&g);
        assert!(is_proper_coloring(&g, &c));
        assert!(color_count(&c) <= g.max_degree());
    }

    #[test]
    fn greedy_is_is_maximal() {
        let g = named::petersen();
        let s = greedy_min_degree_is(&g);
        assert!(crate::domination::is_maximal_independent(&g, &s));
        let star = greedy_min_degree_is(&named::star(4));
        assert_eq!(star.len(), 4);
    }

    #[test]
    fn smallest_last_bound() {
        let g = named::petersen();
        let c = smallest_last_coloring(&g);
        assert!(is_proper_coloring(&g, &c));
        assert!(color_count(&c) <= 4);
    }
}
