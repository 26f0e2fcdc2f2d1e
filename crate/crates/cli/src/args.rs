use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "updom", version, about = "Upper domination solvers, kernels, approximations and instance generators")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Graph file format.
    #[arg(long, global = true, default_value = "dimacs")]
    pub format: String,
    /// Vertex ids in files start at 1.
    #[arg(long, global = true)]
    pub one_based: bool,
    /// Execution mode: par or seq.
    #[arg(long, global = true, default_value = "par")]
    pub exec: String,
    /// Largest n for enumeration and exact search.
    #[arg(long, global = true, env = "UPDOM_ENUM_CAP")]
    pub enum_cap: Option<usize>,
    /// Largest n for the full chain computation.
    #[arg(long, global = true, env = "UPDOM_CHAIN_CAP")]
    pub chain_cap: Option<usize>,
    /// Largest bag for the path decomposition DP.
    #[arg(long, global = true, env = "UPDOM_DP_MAX_BAG")]
    pub max_bag: Option<usize>,
    /// Wall-clock limit per exponential search, in milliseconds.
    #[arg(long, global = true, env = "UPDOM_TIME_LIMIT_MS")]
    pub time_limit_ms: Option<u64>,
    /// Search-node limit per exponential search.
    #[arg(long, global = true, env = "UPDOM_NODE_LIMIT")]
    pub node_limit: Option<u64>,
    /// Exit with status 1 on a "no" answer.
    #[arg(long, global = true)]
    pub fail_on_no: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute Γ (or n − Γ, or a maximum minimal hitting set), or decide a threshold.
    Solve(SolveArgs),
    /// List all minimal dominating sets (or minimal hitting sets).
    Enumerate(EnumerateArgs),
    /// Print ir, γ, i, α, Γ and IR.
    Chain(InputArgs),
    /// Check the combinatorial bounds against exact values.
    Bounds(InputArgs),
    /// Apply a kernelization.
    Kernelize(KernelArgs),
    /// Run an approximation algorithm.
    Approx(ApproxArgs),
    /// Decide minimal dominating set extension.
    Mdse(MdseArgs),
    /// Build a path decomposition.
    Decompose(DecomposeArgs),
    /// Generate an instance.
    #[command(alias = "reduce")]
    Gen(GenArgs),
    /// Cross-check the exact solvers on a built-in suite.
    Bench(BenchArgs),
    /// Check a witness.
    Validate(ValidateArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Input file.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveAlgo {
    Oracle,
    Pathdp,
    CoudBranch,
    UdBranch,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    /// Upper domination.
    Ud,
    /// Co-upper domination, n − Γ.
    Coud,
    /// Maximum minimal hitting set; the input is a hypergraph.
    Mmhs,
    /// Independent set.
    Is,
    /// Minimal dominating set extension; needs --set.
    Mdse,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "oracle")]
    pub algo: SolveAlgo,
    #[arg(long, value_enum, default_value = "ud")]
    pub problem: Problem,
    /// Decide Γ ≥ k.
    #[arg(long, conflicts_with = "decide_ell")]
    pub decide: Option<usize>,
    /// Decide Γ ≥ n − ℓ.
    #[arg(long)]
    pub decide_ell: Option<usize>,
    /// Decomposition builder for pathdp: bfs, min-degree or random:<seed>.
    #[arg(long, default_value = "min-degree")]
    pub strategy: String,
    /// Path decomposition file for pathdp.
    #[arg(long, conflicts_with = "strategy")]
    pub decomposition: Option<PathBuf>,
    /// Skip witness reconstruction.
    #[arg(long)]
    pub no_witness: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// The input is a hypergraph; list minimal hitting sets.
    #[arg(long)]
    pub hypergraph: bool,
    /// Print only the count.
    #[arg(long)]
    pub count: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    /// ℓ(ℓ+1) vertices for co-upper domination.
    Quadratic,
    /// Δk vertices for upper domination.
    Brooks,
    /// (Δ+½)ℓ vertices for co-upper domination.
    Degree,
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "quadratic")]
    pub kernel: KernelKind,
    /// ℓ for the co-parameter kernels, k for brooks.
    #[arg(long)]
    pub param: usize,
    /// Write the reduced graph here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxAlgo {
    Coud4,
    Udcolor,
    Mmhs,
}

#[derive(Args, Debug)]
pub struct ApproxArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub algo: ApproxAlgo,
}

#[derive(Args, Debug)]
pub struct MdseArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Vertex set file.
    #[arg(long)]
    pub set: PathBuf,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value = "min-degree")]
    pub strategy: String,
    /// Emit introduce/forget steps instead of bags.
    #[arg(long)]
    pub nice: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Two n-cliques joined by a perfect matching.
    Gn,
    /// Gn plus an apex on one clique.
    Gnp,
    /// Gn plus an apex on each clique.
    Gnpp,
    /// Edge gadgets on a cubic input graph.
    CubicGadget,
    /// Multicoloured clique instance from an input graph.
    Mcc,
    /// Hitting set gap instance from an input graph.
    MmhsGap,
    /// Upper domination instance from an input hypergraph.
    MmhsUd,
    /// Degree padding of an extension instance to maximum degree 3.
    PadCubic,
    /// Erdős–Rényi G(n, p).
    Random,
    /// Random graph of maximum degree 3.
    Subcubic,
    /// Random d-regular graph.
    Regular,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Edge probability or density.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Degree, or hyperedge size for mmhs-gap.
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    /// Number of colour classes for mcc; vertex v gets class v mod k.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Source instance for the reduction families.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Vertex set for pad-cubic.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Cap on generated vertices.
    #[arg(long, default_value_t = 100_000)]
    pub max_vertices: usize,
    /// Output file; stdout if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Sidecar file with the index layout and value relation.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value = "small")]
    pub suite: String,
    /// Comma-separated: oracle, pathdp, pathdp-bfs, coud-branch, ud-branch.
    #[arg(long, default_value = "oracle,pathdp,coud-branch")]
    pub algos: String,
    #[arg(long, default_value_t = 2016)]
    pub seed: u64,
    /// Append records to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub witness: PathBuf,
    #[arg(long, value_enum, default_value = "ud")]
    pub problem: Problem,
    /// The set S for mdse.
    #[arg(long)]
    pub set: Option<PathBuf>,
}
