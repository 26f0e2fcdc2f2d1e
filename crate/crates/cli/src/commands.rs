use crate::args::*;
use crate::Outcome;
use anyhow::{anyhow, bail, Context, Result};
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::time::Duration;
use updom::approx::{coud_4approx, mmhs_approx_with, ud_coloring_approx, ApproxReport};
use updom::bench::{self, Algo, Suite};
use updom::bounds::{self, CoBoundStatus};
use updom::branching::{compute_coud, ud_bounded_degree, upper_domination_by_coud, upper_domination_by_ud};
use updom::domination::{is_independent, is_minimal_dominating};
use updom::format::{self, Base, GraphFormat};
use updom::kernels::{coud_kernel_degree, coud_kernelize, ud_kernel_brooks, KernelOutcome};
use updom::oracle;
use updom::pathdp::{build_path_decomposition, dp_upper_domination, DpOptions, PathDecomposition, Strategy};
use updom::reductions::{self, GnVariant, Reduction};
use updom::{corpus, Execution, Graph, Hypergraph, Limits, SolveReport, VertexSet};

struct Ctx {
    format: GraphFormat,
    base: Base,
    exec: Execution,
    limits: Limits,
}

impl Ctx {
    fn new(g: &Global) -> Result<Self> {
        let mut limits = Limits::default();
        if let Some(c) = g.enum_cap {
            limits.enum_cap = c;
        }
        if let Some(c) = g.chain_cap {
            limits.chain_cap = c;
        }
        if let Some(c) = g.max_bag {
            limits.max_bag = c;
        }
        limits.time_limit = g.time_limit_ms.map(Duration::from_millis);
        limits.node_limit = g.node_limit;
        Ok(Ctx {
            format: g.format.parse().map_err(|e: String| anyhow!(e))?,
            base: if g.one_based { Base::One } else { Base::Zero },
            exec: g.exec.parse().map_err(|e| anyhow!("{e}"))?,
            limits,
        })
    }

    fn graph(&self, path: &Path) -> Result<Graph> {
        let text = read(path)?;
        format::parse_graph(&text, self.format, self.base).with_context(|| format!("parsing {}", path.display()))
    }

    fn hypergraph(&self, path: &Path) -> Result<Hypergraph> {
        let text = read(path)?;
        format::parse_hypergraph(&text, self.base).with_context(|| format!("parsing {}", path.display()))
    }

    fn set(&self, path: &Path, n: usize) -> Result<VertexSet> {
        let text = read(path)?;
        format::parse_vertex_set(&text, n, self.base).with_context(|| format!("parsing {}", path.display()))
    }

    fn show(&self, s: &VertexSet) -> String {
        format::serialize_vertex_set(s, self.base).trim_end().to_string()
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(updom::Error::from).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(updom::Error::from).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_strategy(s: &str) -> Result<Strategy> {
    match s {
        "bfs" | "bfs-order" => Ok(Strategy::BfsOrder),
        "min-degree" => Ok(Strategy::MinDegree),
        _ => match s.strip_prefix("random:") {
            Some(seed) => Ok(Strategy::Random(seed.parse().context("random:<seed> needs an integer")?)),
            None => Err(usage(format!("unknown strategy '{s}'")).into()),
        },
    }
}

fn decision(yes: bool) -> Outcome {
    if yes {
        Outcome::Yes
    } else {
        Outcome::No
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let ctx = Ctx::new(&cli.global)?;
    match cli.command {
        Command::Solve(a) => solve(&ctx, a),
        Command::Enumerate(a) => enumerate(&ctx, a),
        Command::Chain(a) => chain(&ctx, a),
        Command::Bounds(a) => bounds_cmd(&ctx, a),
        Command::Kernelize(a) => kernelize(&ctx, a),
        Command::Approx(a) => approx(&ctx, a),
        Command::Mdse(a) => mdse(&ctx, a),
        Command::Decompose(a) => decompose(&ctx, a),
        Command::Gen(a) => gen(&ctx, a),
        Command::Bench(a) => bench_cmd(&ctx, a),
        Command::Validate(a) => validate(&ctx, a),
    }
}

/// Prints `report` with its witness in file ids, skipping the value line.
fn print_report(ctx: &Ctx, r: &SolveReport) {
    if let Some(w) = &r.witness {
        println!("witness {}", ctx.show(w));
    }
    for line in r.to_record().lines() {
        if !line.starts_with("value ") && !line.starts_with("witness ") && !line.starts_with("decision ") {
            println!("{line}");
        }
    }
}

fn optimum(ctx: &Ctx, g: &Graph, a: &SolveArgs) -> Result<SolveReport> {
    Ok(match a.algo {
        SolveAlgo::Oracle => oracle::upper_domination_exact(g, &ctx.limits)?,
        SolveAlgo::Pathdp => {
            let pd = match &a.decomposition {
                Some(p) => PathDecomposition::parse(&read(p)?, ctx.base)?,
                None => build_path_decomposition(g, parse_strategy(&a.strategy)?),
            };
            pd.validate(g)?;
            let opts = DpOptions { exec: ctx.exec, witness: !a.no_witness, max_bag: ctx.limits.max_bag };
            dp_upper_domination(g, &pd.nicify(), &opts)?.0
        }
        SolveAlgo::CoudBranch => upper_domination_by_coud(g, &ctx.limits)?,
        SolveAlgo::UdBranch => upper_domination_by_ud(g, &ctx.limits)?,
    })
}

fn solve(ctx: &Ctx, a: SolveArgs) -> Result<Outcome> {
    if a.problem == Problem::Mmhs {
        if a.algo != SolveAlgo::Oracle {
            bail!(usage("mmhs is solved by the oracle only"));
        }
        let h = ctx.hypergraph(&a.input)?;
        let r = oracle::mmhs_exact(&h, &ctx.limits)?;
        println!("MMHS {}", r.value);
        print_report(ctx, &r);
        return Ok(Outcome::Done);
    }
    if !matches!(a.problem, Problem::Ud | Problem::Coud) {
        bail!(usage("solve supports --problem ud, coud or mmhs"));
    }
    let g = ctx.graph(&a.input)?;
    let n = g.n();
    let target = match (a.decide, a.decide_ell) {
        (Some(k), _) => Some(k),
        (None, Some(ell)) => Some(n.saturating_sub(ell)),
        (None, None) => None,
    };
    let Some(k) = target else {
        let r = optimum(ctx, &g, &a)?;
        match a.problem {
            Problem::Coud => {
                println!("coGamma {}", n - r.value);
                let mut r = r;
                r.witness = r.witness.map(|w| w.complement());
                print_report(ctx, &r);
            }
            _ => {
                println!("Gamma {}", r.value);
                print_report(ctx, &r);
            }
        }
        return Ok(Outcome::Done);
    };
    let r = match a.algo {
        SolveAlgo::CoudBranch if k > n => {
            let mut r = SolveReport::new(0, None);
            r.decision = Some(false);
            r
        }
        SolveAlgo::CoudBranch => compute_coud(&g, n - k, &ctx.limits)?.0,
        SolveAlgo::UdBranch => ud_bounded_degree(&g, k, &ctx.limits)?.0,
        _ => {
            let mut r = optimum(ctx, &g, &a)?;
            r.decision = Some(r.value >= k);
            r
        }
    };
    let yes = r.decision == Some(true);
    println!("decision {}", if yes { "yes" } else { "no" });
    print_report(ctx, &r);
    Ok(decision(yes))
}

fn enumerate(ctx: &Ctx, a: EnumerateArgs) -> Result<Outcome> {
    let mut lines = String::new();
    let count = if a.hypergraph {
        let h = ctx.hypergraph(&a.input)?;
        oracle::enumerate_minimal_hitting_sets(&h, &ctx.limits, |s| {
            if !a.count {
                writeln!(lines, "{}", ctx.show(s)).unwrap();
            }
        })?
    } else {
        let g = ctx.graph(&a.input)?;
        oracle::enumerate_minimal_dominating_sets(&g, &ctx.limits, |s| {
            if !a.count {
                writeln!(lines, "{}", ctx.show(s)).unwrap();
            }
        })?
    };
    print!("{lines}");
    println!("count {count}");
    Ok(Outcome::Done)
}

fn chain(ctx: &Ctx, a: InputArgs) -> Result<Outcome> {
    let g = ctx.graph(&a.input)?;
    let c = oracle::chain_values_with(&g, &ctx.limits, ctx.exec)?;
    println!("ir {}\ngamma {}\ni {}\nalpha {}\nGamma {}\nIR {}", c.ir, c.gamma, c.i, c.alpha, c.upper_gamma, c.upper_ir);
    println!("chain {}", if c.is_chain() { "holds" } else { "violated" });
    Ok(decision(c.is_chain()))
}

fn bounds_cmd(ctx: &Ctx, a: InputArgs) -> Result<Outcome> {
    let g = ctx.graph(&a.input)?;
    let n = g.n();
    if n == 0 {
        bail!(usage("empty graph"));
    }
    let (alpha, _) = oracle::independence_number(&g);
    let gamma = oracle::upper_domination_exact(&g, &ctx.limits)?.value;
    let tau = n - alpha;
    let (dmin, dmax) = (g.min_degree(), g.max_degree());
    println!("n {n}\nalpha {alpha}\ntau {tau}\nGamma {gamma}");
    let eq1 = bounds::gamma_upper_bound_exact(n, alpha)?;
    let mut ok = gamma as i64 * *eq1.denom() <= *eq1.numer();
    println!("bound_alpha {eq1} {}", if ok { "holds" } else { "violated" });
    if dmax >= 1 {
        let eq2 = bounds::gamma_upper_bound_degree(n, alpha, dmin, dmax)?;
        let holds = gamma as i64 * *eq2.denom() <= *eq2.numer();
        ok &= holds;
        println!("bound_degree {eq2} {}", if holds { "holds" } else { "violated" });
    }
    let status = bounds::co_gamma_status(n, tau, alpha, gamma);
    ok &= status != CoBoundStatus::Violated;
    println!("co_bound {:?}", status);
    if g.is_regular() && dmax >= 1 {
        let holds = bounds::regular_bound_holds(n, gamma);
        ok &= holds;
        println!("regular_bound {}", if holds { "holds" } else { "violated" });
    }
    if let Some(z) = bounds::zverovich_estimate(n, alpha, dmax) {
        println!("estimate {z}");
    }
    Ok(decision(ok))
}

fn kernelize(ctx: &Ctx, a: KernelArgs) -> Result<Outcome> {
    let g = ctx.graph(&a.input)?;
    let res = match a.kernel {
        KernelKind::Quadratic => coud_kernelize(&g, a.param),
        KernelKind::Brooks => ud_kernel_brooks(&g, a.param),
        KernelKind::Degree => coud_kernel_degree(&g, a.param),
    };
    for step in &res.trace {
        println!("trace {step:?}");
    }
    match res.outcome {
        KernelOutcome::Decided(yes) => {
            println!("decision {}", if yes { "yes" } else { "no" });
            Ok(decision(yes))
        }
        KernelOutcome::Reduced { graph, param, map } => {
            println!("reduced n {} m {} param {param}", graph.n(), graph.edge_count());
            let ids: Vec<String> = map.iter().map(|v| v.to_string()).collect();
            println!("map {}", ids.join(" "));
            if let Some(out) = &a.out {
                emit(Some(out), &format::serialize_graph(&graph, ctx.format, ctx.base))?;
            }
            Ok(Outcome::Done)
        }
    }
}

fn approx(ctx: &Ctx, a: ApproxArgs) -> Result<Outcome> {
    let r: ApproxReport = match a.algo {
        ApproxAlgo::Coud4 => coud_4approx(&ctx.graph(&a.input)?),
        ApproxAlgo::Udcolor => ud_coloring_approx(&ctx.graph(&a.input)?),
        ApproxAlgo::Mmhs => mmhs_approx_with(&ctx.hypergraph(&a.input)?, ctx.exec)?,
    };
    println!("value {}\nwitness {}\nguarantee {}\ncomponent {}", r.value, ctx.show(&r.witness), r.guarantee, r.component);
    if let Some(p) = r.colors {
        println!("colors {p}");
    }
    Ok(Outcome::Done)
}

fn mdse(ctx: &Ctx, a: MdseArgs) -> Result<Outcome> {
    let g = ctx.graph(&a.input)?;
    let s = ctx.set(&a.set, g.n())?;
    let found = oracle::mdse_decide(&g, &s, &ctx.limits)?;
    println!("decision {}", if found.is_some() { "yes" } else { "no" });
    if let Some(w) = &found {
        println!("witness {}", ctx.show(w));
    }
    Ok(decision(found.is_some()))
}

fn decompose(ctx: &Ctx, a: DecomposeArgs) -> Result<Outcome> {
    let g = ctx.graph(&a.input)?;
    let pd = build_path_decomposition(&g, parse_strategy(&a.strategy)?);
    pd.validate(&g)?;
    let text = if a.nice { pd.nicify().to_text() } else { pd.to_text(ctx.base) };
    emit(a.out.as_deref(), &text)?;
    eprintln!("width {}", pd.width());
    Ok(Outcome::Done)
}

fn gen(ctx: &Ctx, a: GenArgs) -> Result<Outcome> {
    let mut rng = corpus::rng(a.seed);
    let source = || a.input.as_deref().ok_or_else(|| anyhow!(usage("this family needs --in")));
    let graph_text = |g: &Graph| format::serialize_graph(g, ctx.format, ctx.base);
    let (text, sidecar): (String, Option<String>) = match a.family {
        Family::Gn | Family::Gnp | Family::Gnpp => {
            let v = match a.family {
                Family::Gn => GnVariant::Gn,
                Family::Gnp => GnVariant::GnPrime,
                _ => GnVariant::GnDoublePrime,
            };
            (graph_text(&reductions::gen_gn_family(a.n, v)?), None)
        }
        Family::Random => (graph_text(&corpus::gnp(a.n, a.p, &mut rng)), None),
        Family::Subcubic => (graph_text(&corpus::random_subcubic(a.n, a.p, &mut rng)), None),
        Family::Regular => {
            let g = corpus::random_regular(a.n, a.d, &mut rng)
                .ok_or_else(|| usage(format!("no {}-regular graph on {} vertices", a.d, a.n)))?;
            (graph_text(&g), None)
        }
        Family::CubicGadget => {
            let r = reductions::mis_to_ud_cubic(&ctx.graph(source()?)?)?;
            (graph_text(&r.target), Some(r.sidecar()))
        }
        Family::Mcc => {
            let g = ctx.graph(source()?)?;
            let classes: Vec<usize> = (0..g.n()).map(|v| v % a.k.max(1)).collect();
            let r = reductions::multicoloured_clique_to_ud(&g, &classes, a.k)?;
            (graph_text(&r.target), Some(r.sidecar()))
        }
        Family::MmhsGap => {
            let r = reductions::mis_to_mmhs(&ctx.graph(source()?)?, a.d, a.max_vertices)?;
            (format::serialize_hypergraph(&r.target, ctx.base), Some(r.sidecar()))
        }
        Family::MmhsUd => {
            let r = reductions::mmhs_to_ud(&ctx.hypergraph(source()?)?)?;
            (graph_text(&r.target), Some(r.sidecar()))
        }
        Family::PadCubic => {
            let g = ctx.graph(source()?)?;
            let s = match &a.set {
                Some(p) => ctx.set(p, g.n())?,
                None => VertexSet::new(g.n()),
            };
            let r = reductions::pad_to_cubic(&g, &s)?;
            let mut side = r.sidecar();
            writeln!(side, "{{\"record\":\"set\",\"vertices\":[{}]}}", r.target_set.to_vec().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                .unwrap();
            (graph_text(&r.target), Some(side))
        }
    };
    emit(a.out.as_deref(), &text)?;
    match (&a.sidecar, sidecar) {
        (Some(p), Some(s)) => emit(Some(p), &s)?,
        (Some(_), None) => bail!(usage("this family has no sidecar")),
        _ => {}
    }
    Ok(Outcome::Done)
}

fn bench_cmd(ctx: &Ctx, a: BenchArgs) -> Result<Outcome> {
    let suite: Suite = a.suite.parse()?;
    let algos = a.algos.split(',').map(|s| s.trim().parse::<Algo>()).collect::<updom::Result<Vec<_>>>()?;
    let inst = bench::instances(suite, a.seed);
    let rep = bench::run(&inst, &algos, &ctx.limits, ctx.exec);
    let mut lines = String::new();
    for r in &rep.records {
        writeln!(lines, "{}", r.to_line()).unwrap();
    }
    print!("{lines}");
    if let Some(p) = &a.out {
        let mut f = fs::OpenOptions::new().create(true).append(true).open(p).map_err(updom::Error::from)?;
        f.write_all(lines.as_bytes()).map_err(updom::Error::from)?;
    }
    print!("{}", rep.agreement_table());
    println!("instances {} mismatches {} errors {}", inst.len(), rep.mismatches(), rep.errors());
    Ok(decision(rep.mismatches() == 0 && rep.errors() == 0))
}

fn validate(ctx: &Ctx, a: ValidateArgs) -> Result<Outcome> {
    let (valid, what) = if a.problem == Problem::Mmhs {
        let h = ctx.hypergraph(&a.input)?;
        let w = ctx.set(&a.witness, h.n())?;
        (h.is_minimal_hitting_set(&w), "minimal hitting set")
    } else {
        let g = ctx.graph(&a.input)?;
        let w = ctx.set(&a.witness, g.n())?;
        match a.problem {
            Problem::Ud => (is_minimal_dominating(&g, &w), "minimal dominating set"),
            Problem::Coud => (is_minimal_dominating(&g, &w.complement()), "complement of a minimal dominating set"),
            Problem::Is => (is_independent(&g, &w), "independent set"),
            Problem::Mdse => {
                let p = a.set.as_ref().ok_or_else(|| anyhow!(usage("mdse needs --set")))?;
                let s = ctx.set(p, g.n())?;
                (s.is_subset(&w) && is_minimal_dominating(&g, &w), "minimal dominating superset")
            }
            Problem::Mmhs => unreachable!(),
        }
    };
    println!("{} {what}", if valid { "valid" } else { "invalid" });
    Ok(decision(valid))
}

fn usage(msg: impl Into<String>) -> updom::Error {
    updom::Error::InvalidInput(msg.into())
}
