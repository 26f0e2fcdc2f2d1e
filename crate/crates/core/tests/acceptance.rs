//! End-to-end acceptance run. One line per criterion; exits non-zero if any
//! criterion fails.

mod common;

use common::{is_minimal_hitting, mask, Brute};
use rand::Rng;
use std::process::ExitCode;
use std::time::Instant;
use updom::approx::{coud_4approx, mmhs_approx_with, ud_coloring_approx};
use updom::bounds::{
    co_gamma_status, gamma_upper_bound_degree, gamma_upper_bound_exact, regular_bound_holds, CoBoundStatus,
};
use updom::branching::{compute_coud, ud_bounded_degree};
use updom::corpus::{self, connected_graphs_up_to_iso, graphs_up_to_iso};
use updom::domination::{is_independent, is_minimal_dominating};
use updom::graph::named;
use updom::kernels::{coud_kernel_degree, coud_kernelize, ud_kernel_brooks, KernelOutcome};
use updom::oracle::{chain_values, domination_number, independence_number, mdse_decide, upper_domination_exact};
use updom::pathdp::{
    binomial_identity_holds, build_path_decomposition, dp_upper_domination, DpOptions, DpStats, Strategy,
};
use updom::reductions::{
    gen_gn_family, mis_to_ud_cubic, mmhs_to_ud, multicoloured_clique_to_ud, GnVariant, Reduction,
};
use updom::{Execution, Graph, Hypergraph, Limits, VertexSet};

const SEED: u64 = 20_160_901;
const GROWTH: f64 = 4.3077;
/// Baseline of max nodes / 4.3077^ℓ over the criterion 7 sample.
const LOCKED_C: f64 = 5.0;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: String) -> Self {
        Verdict { pass, detail }
    }
}

/// Collects the first few failure messages and a total count.
#[derive(Default)]
struct Failures {
    count: usize,
    shown: Vec<String>,
}

impl Failures {
    fn push(&mut self, msg: String) {
        self.count += 1;
        if self.shown.len() < 5 {
            self.shown.push(msg);
        }
    }

    fn extend(&mut self, other: Vec<String>) {
        for m in other {
            self.push(m);
        }
    }

    fn summary(&self) -> String {
        if self.count == 0 {
            String::new()
        } else {
            format!("; first failures: {}", self.shown.join(" | "))
        }
    }
}

fn par<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    Execution::Parallel.map(items, f)
}

fn upper_gamma(g: &Graph) -> usize {
    upper_domination_exact(g, &Limits::default()).expect("oracle-solvable").value
}

// ---------------------------------------------------------------------------
// Criterion 1 instances and DP runs, shared with criteria 2 and 9.

struct Instance {
    name: String,
    graph: Graph,
    decompositions: Vec<Strategy>,
}

const STRATEGIES: [Strategy; 5] = [
    Strategy::MinDegree,
    Strategy::BfsOrder,
    Strategy::Random(1),
    Strategy::Random(2),
    Strategy::Random(3),
];

/// Two distinct decompositions within the DP bag cap, if there are two.
fn usable_decompositions(g: &Graph) -> Vec<Strategy> {
    let cap = Limits::default().max_bag;
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for s in STRATEGIES {
        let pd = build_path_decomposition(g, s);
        if pd.width() + 1 > cap || seen.contains(&pd.bags) {
            continue;
        }
        seen.push(pd.bags.clone());
        out.push(s);
        if out.len() == 2 {
            break;
        }
    }
    out
}

fn criterion1_instances() -> (Vec<Instance>, usize) {
    let mut out = Vec::new();
    for n in 1..=7 {
        for (i, g) in connected_graphs_up_to_iso(n).into_iter().enumerate() {
            let decompositions = usable_decompositions(&g);
            out.push(Instance { name: format!("conn{n}_{i}"), graph: g, decompositions });
        }
    }
    let mut rng = corpus::rng(SEED);
    let mut redraws = 0;
    let mut i = 0;
    while i < 500 {
        let n = 8 + i % 5;
        let g = match i % 4 {
            0 => corpus::gnp(n, 0.2, &mut rng),
            1 => corpus::gnp(n, 0.35, &mut rng),
            2 => corpus::gnp(n, 0.5, &mut rng),
            _ => corpus::random_subcubic(n, 0.8, &mut rng),
        };
        let decompositions = usable_decompositions(&g);
        if decompositions.len() < 2 {
            // Bag cap exceeded by all but one builder.
            redraws += 1;
            continue;
        }
        out.push(Instance { name: format!("rand{n}_{i}"), graph: g, decompositions });
        i += 1;
    }
    (out, redraws)
}

struct C1Result {
    errors: Vec<String>,
    dp_stats: Vec<DpStats>,
    ud_runs: usize,
    coud_runs: usize,
}

fn check_instance(inst: &Instance) -> C1Result {
    let g = &inst.graph;
    let n = g.n();
    let mut errors = Vec::new();
    let truth = Brute::new(g).upper_gamma();
    let oracle = upper_domination_exact(g, &Limits::default()).expect("oracle");
    let ow = oracle.witness.as_ref().expect("witness");
    if oracle.value != truth || ow.len() != truth || !is_minimal_dominating(g, ow) {
        errors.push(format!("{}: oracle {} vs brute {truth}", inst.name, oracle.value));
    }
    let mut dp_stats = Vec::new();
    // A single vertex has exactly one nice decomposition.
    if inst.decompositions.len() < 2 && n > 1 {
        errors.push(format!("{}: fewer than two decompositions fit the bag cap", inst.name));
    }
    let opts = DpOptions { exec: Execution::Sequential, ..DpOptions::default() };
    for (j, &s) in inst.decompositions.iter().enumerate() {
        let nice = build_path_decomposition(g, s).nicify();
        let runs = if j == 0 { vec![nice.reversed(), nice] } else { vec![nice] };
        for nd in runs {
            match dp_upper_domination(g, &nd, &opts) {
                Ok((r, st)) => {
                    let ok = r.value == truth
                        && r.witness.as_ref().is_some_and(|w| w.len() == truth && is_minimal_dominating(g, w));
                    if !ok {
                        errors.push(format!("{}: dp {s:?} gave {} vs {truth}", inst.name, r.value));
                    }
                    dp_stats.push(st);
                }
                Err(e) => errors.push(format!("{}: dp {s:?}: {e}", inst.name)),
            }
        }
    }
    let mut ud_runs = 0;
    if g.max_degree() <= 3 {
        for k in 0..=n {
            ud_runs += 1;
            match ud_bounded_degree(g, k, &Limits::default()) {
                Ok((r, _)) => {
                    let expect = truth >= k;
                    let witness_ok = r
                        .witness
                        .as_ref()
                        .map_or(!expect, |w| w.len() >= k && is_minimal_dominating(g, w));
                    if r.decision != Some(expect) || !witness_ok {
                        errors.push(format!("{}: ud k={k} gave {:?}, Gamma={truth}", inst.name, r.decision));
                    }
                }
                Err(e) => errors.push(format!("{}: ud k={k}: {e}", inst.name)),
            }
        }
    }
    let mut coud_runs = 0;
    for ell in 0..=n {
        coud_runs += 1;
        match compute_coud(g, ell, &Limits::default()) {
            Ok((r, st)) => {
                let expect = truth + ell >= n;
                let witness_ok = r
                    .witness
                    .as_ref()
                    .map_or(!expect, |w| w.len() + ell >= n && is_minimal_dominating(g, w));
                if r.decision != Some(expect) || !witness_ok || st.budget_violations != 0 {
                    errors.push(format!("{}: coud l={ell} gave {:?}, Gamma={truth}", inst.name, r.decision));
                }
            }
            Err(e) => errors.push(format!("{}: coud l={ell}: {e}", inst.name)),
        }
    }
    C1Result { errors, dp_stats, ud_runs, coud_runs }
}

fn criterion1(instances: &[Instance], redraws: usize) -> (Verdict, Vec<DpStats>) {
    let results = par(instances, check_instance);
    let mut f = Failures::default();
    let mut stats = Vec::new();
    let (mut ud, mut coud) = (0, 0);
    for r in results {
        f.extend(r.errors);
        stats.extend(r.dp_stats);
        ud += r.ud_runs;
        coud += r.coud_runs;
    }
    let exhaustive = instances.iter().filter(|i| i.name.starts_with("conn")).count();
    let single = instances.iter().filter(|i| i.decompositions.len() < 2).count();
    let detail = format!(
        "{} instances ({exhaustive} exhaustive, {} random, {redraws} redrawn for the bag cap, {single} with a unique decomposition), {} dp runs, {ud} ud decisions, {coud} coud decisions, {} mismatches{}",
        instances.len(),
        instances.len() - exhaustive,
        stats.len(),
        f.count,
        f.summary()
    );
    (Verdict::new(f.count == 0, detail), stats)
}

// ---------------------------------------------------------------------------

fn criterion2(instances: &[Instance]) -> Verdict {
    let small: Vec<&Instance> = instances.iter().filter(|i| i.graph.n() <= 10).collect();
    let errors = par(&small, |inst| {
        let cv = chain_values(&inst.graph, &Limits::default()).expect("chain");
        let b = Brute::new(&inst.graph).chain();
        let got = [cv.ir, cv.gamma, cv.i, cv.alpha, cv.upper_gamma, cv.upper_ir];
        if !cv.is_chain() || got != b || !b.windows(2).all(|w| w[0] <= w[1]) {
            Some(format!("{}: {got:?} vs brute {b:?}", inst.name))
        } else {
            None
        }
    });
    let mut f = Failures::default();
    f.extend(errors.into_iter().flatten().collect());
    Verdict::new(f.count == 0, format!("{} instances, {} violations{}", small.len(), f.count, f.summary()))
}

// ---------------------------------------------------------------------------

fn criterion3() -> Verdict {
    let graphs: Vec<Graph> = (1..=8).flat_map(connected_graphs_up_to_iso).collect();
    let rows = par(&graphs, |g| {
        let n = g.n();
        let ug = upper_gamma(g);
        let (alpha, _) = independence_number(g);
        let tau = n - alpha;
        let mut errors = Vec::new();
        let r = |x: usize| num_rational::Ratio::from_integer(x as i64);
        if r(ug) > gamma_upper_bound_exact(n, alpha).expect("bound") {
            errors.push(format!("eq1 n={n} edges={:?}", g.edges().collect::<Vec<_>>()));
        }
        let (dmin, dmax) = (g.min_degree(), g.max_degree());
        if dmax >= 1 && r(ug) > gamma_upper_bound_degree(n, alpha, dmin, dmax).expect("bound") {
            errors.push(format!("eq2 n={n} edges={:?}", g.edges().collect::<Vec<_>>()));
        }
        if g.is_regular() && dmax >= 1 && !regular_bound_holds(n, ug) {
            errors.push(format!("regular n={n}"));
        }
        let status = if n >= 3 { Some(co_gamma_status(n, tau, alpha, ug)) } else { None };
        if status == Some(CoBoundStatus::Violated) {
            errors.push(format!("eq3 n={n} tau={tau} Gamma={ug}"));
        }
        (errors, status == Some(CoBoundStatus::Boundary), g.is_regular() && dmax >= 1)
    });
    let mut f = Failures::default();
    let mut boundary = 0;
    let mut regular = 0;
    for (e, b, reg) in rows {
        f.extend(e);
        boundary += b as usize;
        regular += reg as usize;
    }
    Verdict::new(
        f.count == 0,
        format!(
            "{} connected graphs n<=8 ({regular} regular), {boundary} eq3 boundary cases (stars: Gamma = alpha, tau = 1), {} violations{}",
            graphs.len(),
            f.count,
            f.summary()
        ),
    )
}

// ---------------------------------------------------------------------------

fn kernel_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=8).flat_map(graphs_up_to_iso).collect();
    let mut rng = corpus::rng(SEED + 4);
    for i in 0..400 {
        let n = 9 + i % 2;
        let p = [0.15, 0.3, 0.5, 0.7][i % 4];
        out.push(corpus::gnp(n, p, &mut rng));
    }
    out
}

fn check_kernels(g: &Graph) -> (Vec<String>, usize, usize) {
    let n = g.n();
    let truth = upper_gamma(g);
    let mut errors = Vec::new();
    let mut degree_no = 0;
    let mut reduced = 0;
    for ell in 0..=4 {
        let yes = truth + ell >= n;
        match coud_kernelize(g, ell).outcome {
            KernelOutcome::Decided(b) if b != yes => errors.push(format!("quadratic n={n} l={ell} decided {b}")),
            KernelOutcome::Reduced { graph, param, .. } => {
                reduced += 1;
                let kyes = upper_gamma(&graph) + param >= graph.n();
                if kyes != yes {
                    errors.push(format!("quadratic n={n} l={ell} kernel answers {kyes}"));
                }
                if graph.n() > param * (param + 1) || graph.edge_count() > param * param {
                    errors.push(format!("quadratic n={n} l={ell} kernel size {} / {}", graph.n(), graph.edge_count()));
                }
            }
            _ => {}
        }
        match coud_kernel_degree(g, ell).outcome {
            KernelOutcome::Decided(false) => {
                degree_no += 1;
                if yes {
                    errors.push(format!("degree n={n} l={ell} said no, Gamma={truth}"));
                }
            }
            KernelOutcome::Decided(true) => errors.push(format!("degree n={n} l={ell} decided yes")),
            KernelOutcome::Reduced { graph, param, .. } => {
                if (upper_gamma(&graph) + param >= graph.n()) != yes {
                    errors.push(format!("degree n={n} l={ell} kernel disagrees"));
                }
            }
        }
    }
    for k in 0..=n {
        let yes = truth >= k;
        match ud_kernel_brooks(g, k).outcome {
            KernelOutcome::Decided(b) if b != yes => errors.push(format!("brooks n={n} k={k} decided {b}")),
            KernelOutcome::Reduced { graph, param, .. } => {
                if (upper_gamma(&graph) >= param) != yes {
                    errors.push(format!("brooks n={n} k={k} kernel disagrees"));
                }
                if graph.n() > graph.max_degree() * param || param > k {
                    errors.push(format!("brooks n={n} k={k} kernel size {} > {}*{param}", graph.n(), graph.max_degree()));
                }
            }
            _ => {}
        }
    }
    (errors, degree_no, reduced)
}

fn criterion4() -> Verdict {
    let graphs = kernel_graphs();
    let rows = par(&graphs, check_kernels);
    let mut f = Failures::default();
    let (mut no, mut reduced) = (0, 0);
    for (e, d, r) in rows {
        f.extend(e);
        no += d;
        reduced += r;
    }
    Verdict::new(
        f.count == 0,
        format!(
            "{} graphs (all n<=8, 400 random n=9,10), l<=4, k<=n; {reduced} quadratic kernels, {no} degree-kernel no answers, {} errors{}",
            graphs.len(),
            f.count,
            f.summary()
        ),
    )
}

// ---------------------------------------------------------------------------

fn criterion5() -> Verdict {
    let limits = Limits::default();
    let mut f = Failures::default();
    for n in 3..=8 {
        let g = gen_gn_family(n, GnVariant::Gn).expect("gn");
        let (gamma, _) = domination_number(&g, &limits).expect("gamma");
        let ug = upper_gamma(&g);
        if ug != n || gamma != 2 {
            f.push(format!("G{n}: Gamma={ug} gamma={gamma}"));
        }
        let g2 = gen_gn_family(n, GnVariant::GnDoublePrime).expect("gn''");
        let (gamma2, _) = domination_number(&g2, &limits).expect("gamma");
        let ug2 = upper_gamma(&g2);
        if ug2 != 2 || gamma2 != 2 {
            f.push(format!("G''{n}: Gamma={ug2} gamma={gamma2}"));
        }
    }

    for (name, src) in [("K4", named::complete(4)), ("K33", named::complete_bipartite(3, 3))] {
        let red = mis_to_ud_cubic(&src).expect("cubic");
        let (alpha, is) = independence_number(&src);
        let m = src.edge_count();
        let mut sources = vec![is];
        sources.extend((0..src.n()).map(|v| VertexSet::from_iter(src.n(), [v])));
        for s in sources.iter().filter(|s| is_independent(&src, s)) {
            let w = red.forward(s).expect("forward");
            let want = s.len() + 3 * m;
            let size_ok = if s.len() == alpha { w.len() == want } else { w.len() >= want };
            if !size_ok || !is_minimal_dominating(&red.target, &w) {
                f.push(format!("{name}: forward of {:?} has size {} (want {want})", s.to_vec(), w.len()));
            }
            let back = red.backward(&w).expect("backward");
            if !is_independent(&src, &back) || back.len() < s.len() {
                f.push(format!("{name}: backward lost the independent set"));
            }
        }
        if sources[0].len() != alpha {
            f.push(format!("{name}: independence witness has the wrong size"));
        }
    }

    let mut rng = corpus::rng(SEED + 5);
    let hypergraphs: Vec<Hypergraph> = (0..200)
        .map(|i| {
            let n = 5 + i % 6;
            let m = 2 + rng.gen_range(0..=(n.min(8) - 2));
            corpus::random_hypergraph(n, m, 2 + i % 3, &mut rng)
        })
        .collect();
    let rows = par(&hypergraphs, |h| {
        let opt = common::mmhs(h);
        let red = mmhs_to_ud(h).expect("reduction");
        let ug = upper_gamma(&red.target);
        (opt, ug)
    });
    let mut applicable = 0;
    for (i, (opt, ug)) in rows.into_iter().enumerate() {
        if opt >= 3 {
            applicable += 1;
            if ug != opt {
                f.push(format!("mmhs sample {i}: opt={opt} Gamma={ug}"));
            }
        }
    }

    let mut samples = Vec::new();
    for i in 0..90 {
        let k = 1 + i % 3;
        let n = k + 1 + rng.gen_range(0..=3usize);
        let classes: Vec<usize> = (0..n).map(|v| v % k).collect();
        let g = corpus::gnp(n, [0.3, 0.5, 0.8][i / 3 % 3], &mut rng);
        samples.push((g, classes, k));
    }
    let rows = par(&samples, |(g, classes, k)| {
        let red = multicoloured_clique_to_ud(g, classes, *k).expect("classes non-empty");
        let limits = Limits { enum_cap: 40, ..Limits::default() };
        let ug = upper_domination_exact(&red.target, &limits).expect("oracle").value;
        let brute = Brute::new(g).multicoloured_clique(classes, *k);
        (brute, ug >= red.threshold(), red.target.n())
    });
    let mut yes = 0;
    let mut largest = 0;
    for (i, (brute, got, size)) in rows.into_iter().enumerate() {
        yes += brute as usize;
        largest = largest.max(size);
        if brute != got {
            f.push(format!("mcc sample {i}: brute {brute} reduction {got}"));
        }
    }

    Verdict::new(
        f.count == 0,
        format!(
            "Gn/G''n n=3..8, cubic gadget on K4 and K33, {applicable}/200 hypergraphs with opt>=3, {} mcc samples k<=3 ({yes} yes, target up to {largest} vertices), {} mismatches{}",
            samples.len(),
            f.count,
            f.summary()
        ),
    )
}

// ---------------------------------------------------------------------------

fn criterion6(instances: &[Instance]) -> Verdict {
    let mut f = Failures::default();

    let rows = par(instances, |inst| {
        let g = &inst.graph;
        let n = g.n();
        let ug = upper_gamma(g);
        let (alpha, _) = independence_number(g);
        let mut errors = Vec::new();
        let a = coud_4approx(g);
        let dset = a.witness.complement();
        if a.value != a.witness.len() || !is_minimal_dominating(g, &dset) {
            errors.push(format!("{}: coud4 witness invalid", inst.name));
        }
        if a.value > 4 * (n - ug) || a.value > 2 * (n - alpha) {
            errors.push(format!("{}: coud4 {} vs n-Gamma {} tau {}", inst.name, a.value, n - ug, n - alpha));
        }
        let c = ud_coloring_approx(g);
        let p = c.colors.expect("colors");
        if !is_minimal_dominating(g, &c.witness) || c.value * p < n || c.value > ug {
            errors.push(format!("{}: udcolor {} with p={p}, n={n}", inst.name, c.value));
        }
        errors
    });
    for e in rows {
        f.extend(e);
    }

    let mut regular: Vec<Graph> = instances
        .iter()
        .map(|i| i.graph.clone())
        .filter(|g| g.is_regular() && g.max_degree() >= 2)
        .collect();
    let excluded = instances.iter().filter(|i| i.graph.is_regular() && i.graph.max_degree() < 2).count();
    let mut rng = corpus::rng(SEED + 6);
    for n in 6..=16 {
        for d in 2..=5 {
            for _ in 0..3 {
                if let Some(g) = corpus::random_regular(n, d, &mut rng) {
                    regular.push(g);
                }
            }
        }
    }
    regular.push(named::petersen());
    let rows = par(&regular, |g| {
        let ug = upper_gamma(g);
        let c = ud_coloring_approx(g);
        // Γ/value ≤ Δ/2
        (2 * ug > g.max_degree() * c.value).then(|| format!("regular n={} d={}: Gamma {ug} vs {}", g.n(), g.max_degree(), c.value))
    });
    f.extend(rows.into_iter().flatten().collect());

    let mut hs = Vec::new();
    for i in 0..1000 {
        let n = 3 + i % 14;
        let m = 1 + rng.gen_range(0..2 * n);
        hs.push(corpus::random_hypergraph(n, m, 1 + i % 5, &mut rng));
    }
    let rows = par(&hs, |h| match mmhs_approx_with(h, Execution::Sequential) {
        Ok(r) if is_minimal_hitting(h, &r.witness) && r.value == r.witness.len() => None,
        Ok(r) => Some(format!("mmhs {:?} not minimal", mask(&r.witness))),
        Err(e) => Some(format!("mmhs: {e}")),
    });
    f.extend(rows.into_iter().flatten().collect());

    let sizes = [64usize, 128, 256];
    let mut medians = Vec::new();
    for &n in &sizes {
        let hgs: Vec<Hypergraph> = (0..15)
            .map(|_| {
                let g = corpus::gnp(n, 2.0 / n as f64, &mut rng);
                let mut edges: Vec<Vec<usize>> = g.edges().map(|(u, v)| vec![u, v]).collect();
                if edges.is_empty() {
                    edges.push(vec![0, 1]);
                }
                Hypergraph::new(n, edges).expect("non-empty edges")
            })
            .collect();
        let mut vals: Vec<usize> = par(&hgs, |h| {
            let r = mmhs_approx_with(h, Execution::Sequential).expect("approx");
            assert!(h.is_minimal_hitting_set(&r.witness));
            r.value
        });
        vals.sort_unstable();
        medians.push(vals[vals.len() / 2] as f64);
    }
    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = medians.iter().map(|m| m.ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 3.0, ys.iter().sum::<f64>() / 3.0);
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    if slope < 0.4 {
        f.push(format!("mmhs growth exponent {slope:.3} < 0.4"));
    }

    Verdict::new(
        f.count == 0,
        format!(
            "{} graphs for coud4/udcolor, {} regular graphs with degree>=2 for the degree/2 ratio ({excluded} degree<2 excluded), 1000 mmhs instances, d=2 medians {medians:?} exponent {slope:.3}, {} violations{}",
            instances.len(),
            regular.len(),
            f.count,
            f.summary()
        ),
    )
}

// ---------------------------------------------------------------------------

fn criterion7() -> Verdict {
    let mut rng = corpus::rng(SEED + 7);
    let graphs: Vec<Graph> = (0..100)
        .map(|i| corpus::random_subcubic(10 + i % 9, 0.85, &mut rng))
        .collect();
    let rows = par(&graphs, |g| {
        let n = g.n();
        let best = n - upper_gamma(g);
        let mut worst: f64 = 0.0;
        let mut violations = 0;
        let mut wrong = 0;
        for ell in 0..=best {
            let (r, st) = compute_coud(g, ell, &Limits::default()).expect("coud");
            violations += st.budget_violations;
            if r.decision != Some(ell == best) {
                wrong += 1;
            }
            worst = worst.max(st.nodes() as f64 / GROWTH.powi(ell as i32));
        }
        (worst, violations, wrong, best)
    });
    let c = rows.iter().map(|r| r.0).fold(0.0, f64::max);
    let violations: u64 = rows.iter().map(|r| r.1).sum();
    let wrong: usize = rows.iter().map(|r| r.2).sum();
    let max_ell = rows.iter().map(|r| r.3).max().unwrap_or(0);
    let within = (c - LOCKED_C).abs() <= 0.1 * LOCKED_C;
    Verdict::new(
        within && violations == 0 && wrong == 0,
        format!(
            "100 subcubic graphs n=10..18, l<={max_ell}: max nodes/4.3077^l = {c:.4} (locked {LOCKED_C} +-10%), {violations} budget violations, {wrong} wrong decisions"
        ),
    )
}

// ---------------------------------------------------------------------------

fn criterion8() -> Verdict {
    let limits = Limits::default();
    let mut graphs: Vec<Graph> = (1..=8).flat_map(graphs_up_to_iso).collect();
    let mut rng = corpus::rng(SEED + 8);
    for i in 0..400 {
        let n = 9 + i % 2;
        graphs.push(corpus::gnp(n, [0.1, 0.25, 0.4, 0.6, 0.85][i % 5], &mut rng));
    }
    let rows = par(&graphs, |g| {
        let empty = VertexSet::new(g.n());
        match mdse_decide(g, &empty, &limits) {
            Ok(Some(w)) if is_minimal_dominating(g, &w) => None,
            other => Some(format!("empty set on n={}: {other:?}", g.n())),
        }
    });
    let mut f = Failures::default();
    f.extend(rows.into_iter().flatten().collect());

    let p3 = named::path(3);
    for (s, want) in [(vec![0, 2], true), (vec![0, 1], false)] {
        let got = mdse_decide(&p3, &VertexSet::from_iter(3, s.clone()), &limits).expect("mdse").is_some();
        if got != want {
            f.push(format!("P3 {s:?}: {got}"));
        }
    }

    let pairs: Vec<(Graph, VertexSet)> = (0..500)
        .map(|i| {
            let n = 3 + i % 10;
            let g = corpus::gnp(n, [0.2, 0.4, 0.6][i % 3], &mut rng);
            let s = corpus::random_subset(n, [0.15, 0.3, 0.5][i / 3 % 3], &mut rng);
            (g, s)
        })
        .collect();
    let rows = par(&pairs, |(g, s)| {
        let truth = Brute::new(g).mdse(mask(s));
        let got = mdse_decide(g, s, &limits).expect("mdse");
        let ok = match &got {
            Some(w) => truth && s.is_subset(w) && is_minimal_dominating(g, w),
            None => !truth,
        };
        (ok, truth)
    });
    let yes = rows.iter().filter(|r| r.1).count();
    for (i, (ok, truth)) in rows.into_iter().enumerate() {
        if !ok {
            f.push(format!("pair {i}: brute {truth}"));
        }
    }
    Verdict::new(
        f.count == 0,
        format!(
            "empty set on {} graphs (all n<=8, 400 random n=9,10), P3 examples, 500 random pairs ({yes} yes), {} mismatches{}",
            graphs.len(),
            f.count,
            f.summary()
        ),
    )
}

// ---------------------------------------------------------------------------

fn criterion9(stats: &[DpStats]) -> Verdict {
    let unfulfilled = stats.iter().filter(|s| s.promises_fulfilled != Some(true)).count();
    let states = stats.iter().filter(|s| !s.states_within_bound).count();
    let work = stats.iter().filter(|s| !s.work_within_bound).count();
    let identity = (0..=30).all(binomial_identity_holds);
    let biggest = stats.iter().map(|s| s.max_bag).max().unwrap_or(0);
    Verdict::new(
        unfulfilled == 0 && states == 0 && work == 0 && identity,
        format!(
            "{} dp runs (bags up to {biggest}): {unfulfilled} with open promises, {states} over 7^bag states, {work} over 7^bag work; binomial identity p<=30 {}",
            stats.len(),
            if identity { "holds" } else { "FAILS" }
        ),
    )
}

fn main() -> ExitCode {
    let t0 = Instant::now();
    let (instances, redraws) = criterion1_instances();
    let mut all_pass = true;
    let mut report = |id: usize, name: &str, started: Instant, v: Verdict| {
        all_pass &= v.pass;
        println!(
            "criterion {id} {name}: {} ({:.1}s) {}",
            if v.pass { "PASS" } else { "FAIL" },
            started.elapsed().as_secs_f64(),
            v.detail
        );
    };

    let t = Instant::now();
    let (v, dp_stats) = criterion1(&instances, redraws);
    report(1, "oracle agreement", t, v);
    let t = Instant::now();
    report(2, "domination chain", t, criterion2(&instances));
    let t = Instant::now();
    report(3, "bounds", t, criterion3());
    let t = Instant::now();
    report(4, "kernels", t, criterion4());
    let t = Instant::now();
    report(5, "reductions", t, criterion5());
    let t = Instant::now();
    report(6, "approximation", t, criterion6(&instances));
    let t = Instant::now();
    report(7, "branching", t, criterion7());
    let t = Instant::now();
    report(8, "mdse", t, criterion8());
    let t = Instant::now();
    report(9, "dp structure", t, criterion9(&dp_stats));

    println!("acceptance total {:.1}s", t0.elapsed().as_secs_f64());
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
