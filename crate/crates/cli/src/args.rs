use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use clique_spectra::spectral::IterationOptions;

#[derive(Debug, Parser)]
#[command(name = "clique-spectra", version, about = "Clique spectral radii and extremal sweeps of small graphs")]
pub(crate) struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Command {
    /// μ_r of each input graph.
    #[command(args_override_self = true)]
    Spectral(SpectralArgs),
    /// Build a named graph family.
    #[command(args_override_self = true)]
    Construct(ConstructArgs),
    /// μ_r next to its row-sum and clique-count bounds.
    #[command(args_override_self = true)]
    Bounds(BoundsArgs),
    /// Exhaustive extremal sweep.
    #[command(args_override_self = true)]
    Sweep(SweepArgs),
    /// Check a stated extremal result on all graphs of one order.
    #[command(args_override_self = true)]
    Verify(VerifyArgs),
    /// Largest clique count without two disjoint r-cliques.
    #[command(args_override_self = true)]
    TuranCount(TuranCountArgs),
}

impl Command {
    pub fn output_path(&self) -> Option<&PathBuf> {
        match self {
            Command::Spectral(a) => a.output.output.as_ref(),
            Command::Construct(a) => a.output.output.as_ref(),
            Command::Bounds(a) => a.output.output.as_ref(),
            Command::Sweep(a) => a.output.output.as_ref(),
            Command::Verify(a) => a.output.output.as_ref(),
            Command::TuranCount(a) => a.output.output.as_ref(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Emit {
    Graph6,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub(crate) struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum)]
    pub emit: Option<Emit>,
    /// Write data here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub(crate) struct GraphInput {
    /// A single graph in graph6 format.
    #[arg(long = "graph6", conflicts_with = "input")]
    pub graph6: Option<String>,
    /// File of graph6 lines; stdin when neither this nor --graph6 is given.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub(crate) struct IterationArgs {
    /// Width of the certified eigenvalue bracket.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long = "max-iter", default_value_t = 200_000)]
    pub max_iter: usize,
    /// Diagonal shift of the power iteration.
    #[arg(long, default_value_t = 1.0)]
    pub shift: f64,
}

impl IterationArgs {
    pub fn options(&self) -> IterationOptions {
        IterationOptions {
            tol: self.tol,
            max_iter: self.max_iter,
            shift: self.shift,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum SpectralMethod {
    /// Certified power iteration (always applicable).
    Power,
    /// Exact formula; refuses graphs it does not cover.
    ClosedForm,
}

#[derive(Debug, Args)]
pub(crate) struct SpectralArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Clique order.
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = SpectralMethod::Power)]
    pub method: SpectralMethod,
    #[command(flatten)]
    pub iteration: IterationArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Family {
    Complete,
    Empty,
    Path,
    Cycle,
    /// T_r(n).
    Turan,
    /// Complete multipartite with --parts.
    Multipartite,
    /// K_m ∨ T_{r-m}(n-m).
    KJoinTuran,
    /// K_3 ∨ (n-3)K_1.
    K3JoinEmpty,
    /// r-cliques of order k sharing 2k-2r+1 vertices, --petals of them.
    Flower,
}

#[derive(Debug, Args)]
pub(crate) struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
    #[arg(long)]
    pub petals: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub(crate) struct BoundsArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub r: usize,
    #[command(flatten)]
    pub iteration: IterationArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum ObjectiveKind {
    Mu,
    MuSum,
    CliqueCount,
}

#[derive(Debug, Args)]
pub(crate) struct PopulationArgs {
    /// Vertex count.
    #[arg(long)]
    pub n: usize,
    /// graph6 catalog of all graphs on n vertices; default is labeled
    /// enumeration (n <= 7) or the catalog directory from the environment.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Worker threads; default is the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Values this close to the best count as ties.
    #[arg(long, default_value_t = 1e-8)]
    pub slack: f64,
    #[command(flatten)]
    pub iteration: IterationArgs,
}

#[derive(Debug, Args)]
pub(crate) struct SweepArgs {
    #[command(flatten)]
    pub population: PopulationArgs,
    /// Order of the forbidden disjoint cliques.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = ObjectiveKind::Mu)]
    pub objective: ObjectiveKind,
    /// Objective order; defaults to r.
    #[arg(long)]
    pub k: Option<usize>,
    /// Last order of a mu-sum; defaults to 2r-1.
    #[arg(long)]
    pub upper: Option<usize>,
    /// Number of disjoint r-cliques that excludes a graph.
    #[arg(long, default_value_t = 2)]
    pub copies: usize,
    /// List every admitted graph in CSV output, not only the maximizers.
    #[arg(long)]
    pub rows: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Theorem {
    /// Maximum μ_3 without two disjoint triangles.
    #[value(name = "1.8")]
    Mu3,
    /// Maximum μ_{2r-1} without two disjoint r-cliques is 1.
    #[value(name = "1.7-top")]
    TopOrder,
    /// Maximizers of μ_k + ... + μ_{2r-1} against the conjectured graph.
    #[value(name = "1.7-explore")]
    Explore,
    /// Maximum triangle count without two disjoint triangles.
    #[value(name = "1.3")]
    TriangleCount,
    /// r-clique count without k+1 disjoint r-cliques against its bound.
    #[value(name = "2.10")]
    CountProbe,
}

#[derive(Debug, Args)]
pub(crate) struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    #[command(flatten)]
    pub population: PopulationArgs,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Lowest order of the explored sum (default 2r-2) or the number of
    /// allowed disjoint cliques of the count probe (default 1).
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub(crate) struct TuranCountArgs {
    #[command(flatten)]
    pub population: PopulationArgs,
    /// Order of the counted cliques.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Order of the forbidden disjoint cliques.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}
