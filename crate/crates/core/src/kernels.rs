//! Kernelization for the upper domination decision problems.
//!
//! `coud_*` functions take the co-parameter ℓ (is Γ ≥ n − ℓ?), `ud_*`
//! functions take k (is Γ ≥ k?).

use crate::coloring::{brooks_coloring, color_classes};
use crate::domination::extend_to_maximal_independent;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    /// An equivalent instance. `map[i]` is the input id of kernel vertex `i`.
    Reduced {
        graph: Graph,
        param: usize,
        map: Vec<usize>,
    },
    Decided(bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// Vertex of degree above the current parameter removed; parameter drops by one.
    HighDegree { vertex: usize, degree: usize, param_after: i64 },
    Isolated { vertex: usize },
    /// A component solved outright and removed; `value` is its Γ.
    SolvedComponent { vertices: Vec<usize>, kind: &'static str, value: usize },
    /// A star component, whose complement of a minimal dominating set is one vertex.
    StarComponent { vertices: Vec<usize> },
    /// A certified lower bound on Γ from a colour class.
    ColorBound { classes: usize, independent: usize },
    SizeCheck { vertices: usize, edges: usize, vertex_bound: String, edge_bound: String },
}

impl TraceStep {
    fn removed(&self) -> Vec<usize> {
        match self {
            TraceStep::HighDegree { vertex, .. } | TraceStep::Isolated { vertex } => vec![*vertex],
            TraceStep::SolvedComponent { vertices, .. } | TraceStep::StarComponent { vertices } => {
                vertices.clone()
            }
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub outcome: KernelOutcome,
    pub trace: Vec<TraceStep>,
}

/// Re-applies the deletions of a trace to `g` and returns the induced graph
/// on the surviving vertices together with the id map.
pub fn replay_trace(g: &Graph, trace: &[TraceStep]) -> (Graph, Vec<usize>) {
    let mut alive = g.vertices();
    for step in trace {
        for v in step.removed() {
            alive.remove(v);
        }
    }
    g.induced_subgraph(&alive.to_vec())
}

fn degree_in(g: &Graph, alive: &VertexSet, v: usize) -> usize {
    g.closed_nbhd(v).intersection_len(alive) - 1
}

fn edges_in(g: &Graph, alive: &VertexSet) -> usize {
    alive.iter().map(|v| degree_in(g, alive, v)).sum::<usize>() / 2
}

/// Quadratic kernel: exhaust the high-degree rule (highest degree first,
/// lowest index on ties), drop isolated vertices, then check the size bounds
/// `ℓ′(ℓ′+1)` vertices and `ℓ′²` edges.
pub fn coud_kernelize(g: &Graph, ell: usize) -> KernelResult {
    let mut trace = Vec::new();
    let mut alive = g.vertices();
    let mut param = ell as i64;
    loop {
        let pick = alive
            .iter()
            .map(|v| (degree_in(g, &alive, v), v))
            .filter(|&(d, _)| d as i64 > param)
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
        if let Some((degree, vertex)) = pick {
            alive.remove(vertex);
            param -= 1;
            trace.push(TraceStep::HighDegree { vertex, degree, param_after: param });
            if param < 0 {
                return KernelResult { outcome: KernelOutcome::Decided(false), trace };
            }
            continue;
        }
        let isolated: Vec<usize> = alive.iter().filter(|&v| degree_in(g, &alive, v) == 0).collect();
        if isolated.is_empty() {
            break;
        }
        for vertex in isolated {
            alive.remove(vertex);
            trace.push(TraceStep::Isolated { vertex });
        }
    }
    let p = param as usize;
    let (nv, ne) = (alive.len(), edges_in(g, &alive));
    trace.push(TraceStep::SizeCheck {
        vertices: nv,
        edges: ne,
        vertex_bound: (p * (p + 1)).to_string(),
        edge_bound: (p * p).to_string(),
    });
    if nv > p * (p + 1) || ne > p * p {
        return KernelResult { outcome: KernelOutcome::Decided(false), trace };
    }
    let (graph, map) = g.induced_subgraph(&alive.to_vec());
    KernelResult { outcome: KernelOutcome::Reduced { graph, param: p, map }, trace }
}

/// Δk kernel. Cliques (Γ = 1) and cycles (Γ = ⌊n/2⌋) are solved directly;
/// on the rest a Brooks coloring certifies Γ ≥ n/Δ.
pub fn ud_kernel_brooks(g: &Graph, k: usize) -> KernelResult {
    let mut trace = Vec::new();
    let mut alive = g.vertices();
    let mut need = k as i64;
    for comp in g.connected_components() {
        let (sub, _) = g.induced_subgraph(&comp);
        let solved = if sub.is_complete() {
            Some(("clique", 1))
        } else if sub.is_cycle() {
            Some(("cycle", comp.len() / 2))
        } else {
            None
        };
        if let Some((kind, value)) = solved {
            for &v in &comp {
                alive.remove(v);
            }
            need -= value as i64;
            trace.push(TraceStep::SolvedComponent { vertices: comp, kind, value });
        }
    }
    if need <= 0 {
        return KernelResult { outcome: KernelOutcome::Decided(true), trace };
    }
    let (rest, map) = g.induced_subgraph(&alive.to_vec());
    if rest.n() == 0 {
        return KernelResult { outcome: KernelOutcome::Decided(false), trace };
    }
    let delta = rest.max_degree();
    let colors = brooks_coloring(&rest);
    let classes = color_classes(rest.n(), &colors);
    let biggest = classes.iter().max_by_key(|c| c.len()).cloned()
        .unwrap_or_else(|| VertexSet::new(rest.n()));
    let independent = extend_to_maximal_independent(&rest, &biggest);
    trace.push(TraceStep::ColorBound { classes: classes.len(), independent: independent.len() });
    let need = need as usize;
    if need * delta <= rest.n() {
        return KernelResult { outcome: KernelOutcome::Decided(true), trace };
    }
    trace.push(TraceStep::SizeCheck {
        vertices: rest.n(),
        edges: rest.edge_count(),
        vertex_bound: format!("{}", delta * need),
        edge_bound: "-".into(),
    });
    KernelResult { outcome: KernelOutcome::Reduced { graph: rest, param: need, map }, trace }
}

/// `(Δ+½)ℓ` kernel. Isolated vertices go first; star components (the case
/// `N[v] = V` with `v` outside the dominating set) cost exactly one each
/// and are solved directly.
pub fn coud_kernel_degree(g: &Graph, ell: usize) -> KernelResult {
    let mut trace = Vec::new();
    let mut alive = g.vertices();
    let mut param = ell as i64;
    for comp in g.connected_components() {
        if comp.len() == 1 {
            alive.remove(comp[0]);
            trace.push(TraceStep::Isolated { vertex: comp[0] });
            continue;
        }
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let is_star = edges == comp.len() - 1 && comp.iter().any(|&v| g.degree(v) == comp.len() - 1);
        if is_star {
            for &v in &comp {
                alive.remove(v);
            }
            param -= 1;
            trace.push(TraceStep::StarComponent { vertices: comp });
        }
    }
    if param < 0 {
        return KernelResult { outcome: KernelOutcome::Decided(false), trace };
    }
    let p = param as usize;
    let (rest, map) = g.induced_subgraph(&alive.to_vec());
    let delta = g.max_degree();
    trace.push(TraceStep::SizeCheck {
        vertices: rest.n(),
        edges: rest.edge_count(),
        vertex_bound: format!("{}", num_rational::Ratio::new((2 * delta + 1) * p, 2)),
        edge_bound: "-".into(),
    });
    if 2 * rest.n() > (2 * delta + 1) * p {
        return KernelResult { outcome: KernelOutcome::Decided(false), trace };
    }
    KernelResult { outcome: KernelOutcome::Reduced { graph: rest, param: p, map }, trace }
}
