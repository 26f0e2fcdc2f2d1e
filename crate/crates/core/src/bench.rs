//! Built-in instance suites and a cross-checking runner for the exact
//! solvers.

use crate::branching::{upper_domination_by_coud, upper_domination_by_ud};
use crate::corpus;
use crate::domination::is_minimal_dominating;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{named, Graph};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::oracle::{mmhs_exact, upper_domination_exact};
use crate::pathdp::{dp_with_strategy, DpOptions, Strategy};
use crate::reductions::{gen_gn_family, mmhs_to_ud, multicoloured_clique_to_ud, GnVariant};
use crate::report::SolveReport;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ExhaustiveN7,
    RandomSubcubic,
    GnFamily,
    ReductionSamples,
    Small,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::ExhaustiveN7, Suite::RandomSubcubic, Suite::GnFamily, Suite::ReductionSamples, Suite::Small];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ExhaustiveN7 => "exhaustive-n7",
            Suite::RandomSubcubic => "random-subcubic",
            Suite::GnFamily => "gn-family",
            Suite::ReductionSamples => "reduction-samples",
            Suite::Small => "small",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Oracle,
    /// DP over a min-degree decomposition.
    PathDp,
    /// DP over a BFS-order decomposition.
    PathDpBfs,
    CoudBranch,
    UdBranch,
}

impl Algo {
    pub const ALL: [Algo; 5] = [Algo::Oracle, Algo::PathDp, Algo::PathDpBfs, Algo::CoudBranch, Algo::UdBranch];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Oracle => "oracle",
            Algo::PathDp => "pathdp",
            Algo::PathDpBfs => "pathdp-bfs",
            Algo::CoudBranch => "coud-branch",
            Algo::UdBranch => "ud-branch",
        }
    }

    /// Runs the solver. `Ok(None)` means the instance is outside the
    /// algorithm's scope.
    pub fn solve(self, g: &Graph, limits: &Limits, exec: Execution) -> Result<Option<SolveReport>> {
        let dp = |strategy| {
            let opts = DpOptions { exec, witness: true, max_bag: limits.max_bag };
            dp_with_strategy(g, strategy, &opts).map(|(r, _)| r)
        };
        Ok(Some(match self {
            Algo::Oracle => upper_domination_exact(g, limits)?,
            Algo::PathDp => dp(Strategy::MinDegree)?,
            Algo::PathDpBfs => dp(Strategy::BfsOrder)?,
            Algo::CoudBranch => upper_domination_by_coud(g, limits)?,
            Algo::UdBranch if g.max_degree() <= 3 => upper_domination_by_ud(g, limits)?,
            Algo::UdBranch => return Ok(None),
        }))
    }
}

impl FromStr for Algo {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown algorithm '{s}'")))
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    /// Known Γ, if any.
    pub expected: Option<usize>,
}

impl Instance {
    fn new(name: impl Into<String>, graph: Graph, expected: Option<usize>) -> Self {
        Instance { name: name.into(), graph, expected }
    }
}

pub fn instances(suite: Suite, seed: u64) -> Vec<Instance> {
    let mut rng = corpus::rng(seed);
    match suite {
        Suite::ExhaustiveN7 => (1..=7)
            .flat_map(|n| {
                corpus::connected_graphs_up_to_iso(n)
                    .into_iter()
                    .enumerate()
                    .map(move |(i, g)| Instance::new(format!("c{n}_{i:04}"), g, None))
            })
            .collect(),
        Suite::RandomSubcubic => (0..40)
            .map(|i| {
                let n = 8 + i % 9;
                Instance::new(format!("sc_n{n}_{i:02}"), corpus::random_subcubic(n, 0.8, &mut rng), None)
            })
            .collect(),
        Suite::GnFamily => (3..=8)
            .flat_map(|n| {
                [
                    Instance::new(format!("gn_{n}"), gen_gn_family(n, GnVariant::Gn).expect("n >= 1"), Some(n)),
                    Instance::new(
                        format!("gnpp_{n}"),
                        gen_gn_family(n, GnVariant::GnDoublePrime).expect("n >= 1"),
                        Some(2),
                    ),
                ]
            })
            .collect(),
        Suite::ReductionSamples => {
            let mut out = Vec::new();
            let limits = Limits::default();
            for i in 0..20 {
                let h: Hypergraph = corpus::random_hypergraph(6, 2 + i % 4, 3, &mut rng);
                let opt = mmhs_exact(&h, &limits).expect("small hypergraph").value;
                let g = mmhs_to_ud(&h).expect("edges present").target;
                out.push(Instance::new(format!("mmhs_{i:02}"), g, (opt >= 3).then_some(opt)));
            }
            for i in 0..10 {
                let k = 2 + i % 2;
                let n = 2 * k + i % 3;
                let classes: Vec<usize> = (0..n).map(|v| v % k).collect();
                let g = corpus::gnp(n, 0.6, &mut rng);
                let r = multicoloured_clique_to_ud(&g, &classes, k).expect("classes non-empty");
                out.push(Instance::new(format!("mcc_k{k}_{i:02}"), r.target, None));
            }
            out
        }
        Suite::Small => vec![
            Instance::new("k1", Graph::empty(1), Some(1)),
            Instance::new("p4", named::path(4), Some(2)),
            Instance::new("c4", named::cycle(4), Some(2)),
            Instance::new("c5", named::cycle(5), Some(2)),
            Instance::new("k4", named::complete(4), Some(1)),
            Instance::new("star4", named::star(4), Some(4)),
            Instance::new("k23", named::complete_bipartite(2, 3), Some(3)),
            Instance::new("g3", gen_gn_family(3, GnVariant::Gn).expect("n >= 1"), Some(3)),
            Instance::new("petersen", named::petersen(), None),
        ],
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    BadWitness,
    Skipped(String),
    Failed(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Ok => write!(f, "ok"),
            Status::Mismatch => write!(f, "mismatch"),
            Status::BadWitness => write!(f, "bad-witness"),
            Status::Skipped(why) => write!(f, "skip:{why}"),
            Status::Failed(why) => write!(f, "error:{why}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub instance: String,
    pub algo: Algo,
    pub value: Option<usize>,
    pub time_ms: f64,
    pub nodes: u64,
    pub status: Status,
}

impl Record {
    /// `instance algo value time_ms nodes ok`.
    pub fn to_line(&self) -> String {
        let value = self.value.map_or("-".to_string(), |v| v.to_string());
        format!("{} {} {} {:.3} {} {}", self.instance, self.algo.name(), value, self.time_ms, self.nodes, self.status)
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub algos: Vec<Algo>,
    pub records: Vec<Record>,
}

impl BenchReport {
    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| matches!(r.status, Status::Mismatch | Status::BadWitness)).count()
    }

    pub fn errors(&self) -> usize {
        self.records.iter().filter(|r| matches!(r.status, Status::Failed(_))).count()
    }

    /// `m[a][b]`: instances where both `a` and `b` produced a value and the
    /// values agree.
    pub fn agreement(&self) -> Vec<Vec<usize>> {
        let k = self.algos.len();
        let mut m = vec![vec![0; k]; k];
        for chunk in self.records.chunks(k) {
            for a in 0..k {
                for b in 0..k {
                    if let (Some(x), Some(y)) = (chunk[a].value, chunk[b].value) {
                        if x == y {
                            m[a][b] += 1;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn agreement_table(&self) -> String {
        let m = self.agreement();
        let mut out = format!("{:>12}", "");
        for a in &self.algos {
            out.push_str(&format!(" {:>12}", a.name()));
        }
        out.push('\n');
        for (i, a) in self.algos.iter().enumerate() {
            out.push_str(&format!("{:>12}", a.name()));
            for v in &m[i] {
                out.push_str(&format!(" {v:>12}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Runs every algorithm on every instance. Records come out grouped by
/// instance, in input order, whatever the execution mode.
pub fn run(instances: &[Instance], algos: &[Algo], limits: &Limits, exec: Execution) -> BenchReport {
    let rows = exec.map(instances, |inst| run_one(inst, algos, limits));
    BenchReport { algos: algos.to_vec(), records: rows.into_iter().flatten().collect() }
}

fn run_one(inst: &Instance, algos: &[Algo], limits: &Limits) -> Vec<Record> {
    let mut out: Vec<Record> = algos
        .iter()
        .map(|&algo| {
            let t0 = Instant::now();
            let res = algo.solve(&inst.graph, limits, Execution::Sequential);
            let time_ms = t0.elapsed().as_secs_f64() * 1e3;
            let mut rec = Record {
                instance: inst.name.clone(),
                algo,
                value: None,
                time_ms,
                nodes: 0,
                status: Status::Ok,
            };
            match res {
                Ok(Some(r)) => {
                    rec.value = Some(r.value);
                    rec.nodes = r.nodes_explored;
                    if let Some(w) = &r.witness {
                        if w.len() != r.value || !is_minimal_dominating(&inst.graph, w) {
                            rec.status = Status::BadWitness;
                        }
                    }
                }
                Ok(None) => rec.status = Status::Skipped("scope".into()),
                Err(e) if e.is_resource_error() => rec.status = Status::Skipped("cap".into()),
                Err(e) => rec.status = Status::Failed(e.to_string().replace(' ', "_")),
            }
            rec
        })
        .collect();
    let reference = inst.expected.or_else(|| out.iter().find_map(|r| r.value));
    for r in &mut out {
        if r.status == Status::Ok && r.value != reference {
            r.status = Status::Mismatch;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_agrees() {
        let rep = run(&instances(Suite::Small, 7), &Algo::ALL, &Limits::default(), Execution::Parallel);
        assert_eq!(rep.mismatches(), 0, "{:#?}", rep.records);
        assert_eq!(rep.errors(), 0);
        let m = rep.agreement();
        assert_eq!(m[0][0], instances(Suite::Small, 7).len());
        assert!(rep.records[0].to_line().starts_with("k1 oracle 1 "));
    }

    #[test]
    fn deterministic_order() {
        let inst = instances(Suite::RandomSubcubic, 3);
        let a = run(&inst[..6], &[Algo::Oracle], &Limits::default(), Execution::Parallel);
        let b = run(&inst[..6], &[Algo::Oracle], &Limits::default(), Execution::Sequential);
        let strip = |r: &BenchReport| r.records.iter().map(|x| (x.instance.clone(), x.value)).collect::<Vec<_>>();
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        for a in Algo::ALL {
            assert_eq!(a.name().parse::<Algo>().unwrap(), a);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
