//! Test and benchmark instances: every graph up to isomorphism for small n,
//! and seeded random families.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use std::collections::HashSet;

/// Largest `n` accepted by [`graphs_up_to_iso`].
pub const MAX_ISO_N: usize = 8;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

type Adj = Vec<u16>;

fn to_graph(adj: &Adj) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid adjacency")
}

fn code(adj: &Adj, order: &[usize]) -> u64 {
    let mut c = 0u64;
    for (i, &u) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            c = c << 1 | (adj[u] >> v & 1) as u64;
        }
    }
    c
}

/// Maximum upper-triangle code over all orderings that keep the vertices
/// sorted by (degree, neighbour degrees).
fn canonical(adj: &Adj) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match cells.last_mut() {
            Some(c) if key(c[0]) == key(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    permute_cells(adj, &mut cells, 0, 0, &mut order, &mut best);
    best
}

fn permute_cells(adj: &Adj, cells: &mut [Vec<usize>], ci: usize, k: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        *best = (*best).max(code(adj, order));
        return;
    }
    if k == cells[ci].len() {
        permute_cells(adj, cells, ci + 1, 0, order, best);
        return;
    }
    for i in k..cells[ci].len() {
        cells[ci].swap(k, i);
        order.push(cells[ci][k]);
        permute_cells(adj, cells, ci, k + 1, order, best);
        order.pop();
        cells[ci].swap(k, i);
    }
}

/// All graphs on `n` vertices up to isomorphism, by vertex augmentation.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ISO_N, "graphs_up_to_iso supports n <= {MAX_ISO_N}");
    let mut level: Vec<Adj> = vec![Vec::new()];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for mask in 0u16..1 << (size - 1) {
                let mut a = adj.clone();
                for (v, m) in a.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *m |= 1 << (size - 1);
                    }
                }
                a.push(mask);
                if seen.insert(canonical(&a)) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    level.iter().map(to_graph).collect()
}

pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Connected `G(n, p)` by rejection, at most `tries` draws.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R, tries: usize) -> Option<Graph> {
    (0..tries).map(|_| gnp(n, p, rng)).find(|g| g.is_connected())
}

/// Maximum degree at most 3: shuffled candidate edges, kept while both
/// endpoints have room, each with probability `density`.
pub fn random_subcubic<R: Rng>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in all {
        if deg[u] < 3 && deg[v] < 3 && rng.gen_bool(density) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// A uniform-ish `d`-regular graph by the pairing model with restarts.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Option<Graph> {
    if d >= n || n * d % 2 == 1 {
        return None;
    }
    'outer: for _ in 0..1000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        points.shuffle(rng);
        let mut edges = HashSet::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !edges.insert((u, v)) {
                continue 'outer;
            }
        }
        return Some(Graph::from_edges(n, edges).expect("valid edges"));
    }
    None
}

/// `m` random edges of size `1..=max_size` over `0..n`.
pub fn random_hypergraph<R: Rng>(n: usize, m: usize, max_size: usize, rng: &mut R) -> Hypergraph {
    let edges: Vec<VertexSet> = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(n).max(1));
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            VertexSet::from_iter(n, vs.into_iter().take(size))
        })
        .collect();
    Hypergraph::from_sets(n, edges)
}

/// A random subset of `0..n`, each vertex with probability `p`.
pub fn random_subset<R: Rng>(n: usize, p: f64, rng: &mut R) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|_| rng.gen_bool(p)))
}
