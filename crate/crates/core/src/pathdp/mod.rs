//! Upper domination over a nice path decomposition.
//!
//! Every bag vertex carries one of six labels:
//!
//! | label | meaning |
//! |-------|---------|
//! | `F`   | in D, private neighbour already matched |
//! | `F*`  | in D, private neighbour still to come |
//! | `I`   | in D, no neighbour in D |
//! | `P`   | matched private neighbour of exactly one `F` vertex |
//! | `O`   | outside D and dominated |
//! | `O*`  | outside D and not dominated yet |
//!
//! A state is the labelling of the bag, encoded with one base-6 digit per
//! bag position. Tables are dense; `-1` marks an infeasible state.

mod decomposition;

pub use decomposition::{build_path_decomposition, NicePathDecomposition, PathDecomposition, Step, Strategy};

use crate::domination::is_minimal_dominating;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::limits::cap;
use crate::report::SolveReport;
use crate::vertex_set::VertexSet;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Label {
    F = 0,
    FStar = 1,
    I = 2,
    P = 3,
    O = 4,
    OStar = 5,
}

const LABELS: usize = 6;
const INFEASIBLE: i32 = -1;
/// States per parallel work item.
const CHUNK: usize = 4096;

impl Label {
    fn from_digit(d: usize) -> Label {
        match d {
            0 => Label::F,
            1 => Label::FStar,
            2 => Label::I,
            3 => Label::P,
            4 => Label::O,
            _ => Label::OStar,
        }
    }

    pub fn in_dominating_set(self) -> bool {
        matches!(self, Label::F | Label::FStar | Label::I)
    }

    /// Labels that may be forgotten: no open promise left.
    pub fn fulfilled(self) -> bool {
        !matches!(self, Label::FStar | Label::OStar)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DpOptions {
    pub exec: Execution,
    /// Keep parent pointers to rebuild a witness.
    pub witness: bool,
    pub max_bag: usize,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions {
            exec: Execution::Parallel,
            witness: true,
            max_bag: crate::limits::Limits::default().max_bag,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpStats {
    pub steps: usize,
    pub max_bag: usize,
    /// Largest table, in states.
    pub max_states: usize,
    /// Feasible entries summed over all tables.
    pub feasible_states: u64,
    /// Every table had at most `7^|bag|` states.
    pub states_within_bound: bool,
    /// Old-table lookups per introduce never exceeded `7^|bag|`.
    pub work_within_bound: bool,
    /// Along the witness path every forgotten vertex had a fulfilled label.
    /// `None` for value-only runs.
    pub promises_fulfilled: Option<bool>,
}

fn pow7(k: usize) -> u128 {
    7u128.pow(k as u32)
}

/// `Σ C(p,i)·5^i·2^(p−i) = 7^p`.
pub fn binomial_identity_holds(p: u32) -> bool {
    let mut sum = 0u128;
    let mut c = 1u128;
    for i in 0..=p {
        sum += c * 5u128.pow(i) * 2u128.pow(p - i);
        c = c * (p - i) as u128 / (i + 1) as u128;
    }
    sum == 7u128.pow(p)
}

struct Tables {
    value: Vec<i32>,
    parent: Vec<u32>,
}

/// Γ(g) by dynamic programming over `nd`.
pub fn dp_upper_domination(
    g: &Graph,
    nd: &NicePathDecomposition,
    opts: &DpOptions,
) -> Result<(SolveReport, DpStats)> {
    let t0 = Instant::now();
    nd.validate(g)?;
    cap("path decomposition bag", nd.width() + 1, opts.max_bag)?;
    let mut pow = vec![1usize; opts.max_bag.max(1) + 2];
    for i in 1..pow.len() {
        pow[i] = pow[i - 1] * LABELS;
    }
    let mut stats = DpStats {
        steps: nd.steps.len(),
        states_within_bound: true,
        work_within_bound: true,
        ..DpStats::default()
    };
    let mut bag: Vec<usize> = Vec::new();
    let mut table = vec![0i32];
    let mut parents: Vec<Vec<u32>> = Vec::new();
    let mut bag_len_before = Vec::with_capacity(nd.steps.len());
    let mut forget_pos = Vec::with_capacity(nd.steps.len());
    let mut nodes = 0u64;
    for step in &nd.steps {
        bag_len_before.push(bag.len());
        let t = match *step {
            Step::Introduce(v) => {
                forget_pos.push(usize::MAX);
                let nb: Vec<usize> = (0..bag.len()).filter(|&j| g.has_edge(bag[j], v)).collect();
                let (t, work) = introduce(&table, &pow, bag.len(), &nb, opts);
                if work as u128 > pow7(bag.len() + 1) {
                    stats.work_within_bound = false;
                }
                bag.push(v);
                t
            }
            Step::Forget(v) => {
                let i = bag.iter().position(|&x| x == v).expect("validated decomposition");
                forget_pos.push(i);
                let t = forget(&table, &pow, bag.len(), i, opts);
                bag.remove(i);
                t
            }
        };
        table = t.value;
        nodes += table.len() as u64;
        stats.max_bag = stats.max_bag.max(bag.len());
        stats.max_states = stats.max_states.max(table.len());
        stats.feasible_states += table.iter().filter(|&&x| x >= 0).count() as u64;
        if table.len() as u128 > pow7(bag.len()) {
            stats.states_within_bound = false;
        }
        if opts.witness {
            parents.push(t.parent);
        }
    }
    debug_assert!(bag.is_empty() && table.len() == 1);
    let value = table[0];
    if value < 0 {
        return Err(Error::InvalidDecomposition("no feasible labelling survived".into()));
    }
    let mut witness = None;
    if opts.witness {
        let mut d = VertexSet::new(g.n());
        let mut ok = true;
        let mut s = 0usize;
        for (t, step) in nd.steps.iter().enumerate().rev() {
            let prev = parents[t][s] as usize;
            match *step {
                Step::Introduce(v) => {
                    let label = Label::from_digit(s / pow[bag_len_before[t]] % LABELS);
                    if label.in_dominating_set() {
                        d.insert(v);
                    }
                }
                Step::Forget(_) => {
                    let i = forget_pos[t];
                    ok &= Label::from_digit(prev / pow[i] % LABELS).fulfilled();
                }
            }
            s = prev;
        }
        stats.promises_fulfilled = Some(ok);
        debug_assert!(d.len() == value as usize && is_minimal_dominating(g, &d));
        witness = Some(d);
    }
    let mut r = SolveReport::new(value as usize, witness);
    r.nodes_explored = nodes;
    r.elapsed = t0.elapsed();
    let r = r
        .with_extra("width", nd.width())
        .with_extra("max_states", stats.max_states)
        .with_extra("feasible_states", stats.feasible_states);
    Ok((r, stats))
}

/// Builds a decomposition with `strategy` and runs the DP on it.
pub fn dp_with_strategy(g: &Graph, strategy: Strategy, opts: &DpOptions) -> Result<(SolveReport, DpStats)> {
    let pd = build_path_decomposition(g, strategy);
    dp_upper_domination(g, &pd.nicify(), opts)
}

/// Pull update for introducing a vertex at position `len` with bag
/// neighbours at positions `nb`. Returns the table and the number of
/// old-table lookups.
fn introduce(old: &[i32], pow: &[usize], len: usize, nb: &[usize], opts: &DpOptions) -> (Tables, u64) {
    let size = pow[len + 1];
    let chunks = opts.exec.map_range(size.div_ceil(CHUNK), |c| {
        let mut rows = Vec::with_capacity(CHUNK);
        let mut work = 0;
        for s in c * CHUNK..((c + 1) * CHUNK).min(size) {
            let (v, p, w) = introduce_state(old, pow, len, nb, s);
            rows.push((v, p));
            work += w;
        }
        (rows, work)
    });
    let work = chunks.iter().map(|c| c.1).sum();
    let (value, parent) = chunks.into_iter().flat_map(|c| c.0).unzip();
    (Tables { value, parent }, work)
}

fn introduce_state(old: &[i32], pow: &[usize], len: usize, nb: &[usize], s: usize) -> (i32, u32, u64) {
    let label = Label::from_digit(s / pow[len]);
    let rest = s % pow[len];
    let digit = |j: usize| Label::from_digit(rest / pow[j] % LABELS);
    let count = |l: Label| nb.iter().filter(|&&j| digit(j) == l).count();
    let any = |ls: &[Label]| nb.iter().any(|&j| ls.contains(&digit(j)));
    let best_over_o_subsets = |base: usize| -> (i32, u32, u64) {
        let o: Vec<usize> = nb.iter().copied().filter(|&j| digit(j) == Label::O).collect();
        let mut best = (INFEASIBLE, 0u32);
        for mask in 0u32..1 << o.len() {
            let mut id = base;
            for (b, &j) in o.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    id += pow[j];
                }
            }
            if old[id] > best.0 {
                best = (old[id], id as u32);
            }
        }
        (best.0, best.1, 1 << o.len())
    };
    let plus_one = |r: (i32, u32, u64)| if r.0 >= 0 { (r.0 + 1, r.1, r.2) } else { r };
    let infeasible = (INFEASIBLE, 0, 0);
    match label {
        Label::F => {
            if any(&[Label::I, Label::OStar]) || count(Label::P) != 1 {
                return infeasible;
            }
            let x = *nb.iter().find(|&&j| digit(j) == Label::P).expect("one P");
            // x was waiting to be dominated: P (3) back to O* (5).
            plus_one(best_over_o_subsets(rest + 2 * pow[x]))
        }
        Label::FStar => {
            if any(&[Label::I, Label::P, Label::OStar]) {
                return infeasible;
            }
            plus_one(best_over_o_subsets(rest))
        }
        Label::I => {
            if any(&[Label::F, Label::FStar, Label::I, Label::P, Label::OStar]) {
                return infeasible;
            }
            plus_one(best_over_o_subsets(rest))
        }
        Label::P => {
            if any(&[Label::I, Label::FStar]) || count(Label::F) != 1 {
                return infeasible;
            }
            let w = *nb.iter().find(|&&j| digit(j) == Label::F).expect("one F");
            // The partner was still looking for its private neighbour.
            let id = rest + pow[w];
            (old[id], id as u32, 1)
        }
        Label::O => {
            if !any(&[Label::F, Label::FStar, Label::I]) {
                return infeasible;
            }
            (old[rest], rest as u32, 1)
        }
        Label::OStar => {
            if any(&[Label::F, Label::FStar, Label::I]) {
                return infeasible;
            }
            (old[rest], rest as u32, 1)
        }
    }
}

/// Pull update for forgetting the vertex at position `i`: the maximum over
/// the fulfilled labels it may have carried.
fn forget(old: &[i32], pow: &[usize], len: usize, i: usize, opts: &DpOptions) -> Tables {
    let size = pow[len - 1];
    let chunks = opts.exec.map_range(size.div_ceil(CHUNK), |c| {
        ((c * CHUNK)..((c + 1) * CHUNK).min(size))
            .map(|s| {
                let low = s % pow[i];
                let high = s / pow[i];
                let mut best = (INFEASIBLE, 0u32);
                for l in [Label::F, Label::I, Label::P, Label::O] {
                    let id = low + l as usize * pow[i] + high * pow[i + 1];
                    if old[id] > best.0 {
                        best = (old[id], id as u32);
                    }
                }
                best
            })
            .collect::<Vec<_>>()
    });
    let rows = chunks.into_iter().flatten();
    let (value, parent) = rows.into_iter().unzip();
    Tables { value, parent }
}
