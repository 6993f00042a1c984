use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "specq", version, about = "Least signless Laplacian eigenvalues, domination numbers and extremal checks on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Emit JSON (one object per line).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV with a header row.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "SPECQ_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    /// Permit order-8 exhaustive runs (slow).
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Global {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a member of the unicyclic families as graph6.
    Build(BuildArgs),
    /// Least eigenvalue of the signless Laplacian.
    Qmin(GraphInput),
    /// Domination number with a minimum dominating set.
    Gamma(GraphInput),
    /// List non-isomorphic graphs of a given order.
    Enumerate(EnumerateArgs),
    /// Run a named check and report its verdict.
    Verify(VerifyArgs),
    /// Tabulate least eigenvalues along a parameter.
    Sweep {
        #[command(subcommand)]
        what: SweepCommand,
    },
    /// Spanning unicyclic subgraph with an odd cycle and the same domination number.
    ExtractUnicyclic(GraphInput),
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// graph6 strings; read one per line from stdin when absent.
    pub graphs: Vec<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    U,
    V,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Pendant count (family U).
    #[arg(long, required_if_eq("family", "u"))]
    pub k: Option<usize>,
    /// Domination number (family V).
    #[arg(long, required_if_eq("family", "v"))]
    pub gamma: Option<usize>,
    /// Odd cycle length.
    #[arg(long, default_value_t = 3)]
    pub g: usize,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Include disconnected graphs.
    #[arg(long)]
    pub all: bool,
    /// Keep only non-bipartite graphs.
    #[arg(long)]
    pub non_bipartite: bool,
    /// Keep only unicyclic graphs.
    #[arg(long)]
    pub unicyclic: bool,
    #[arg(long)]
    pub gamma: Option<usize>,
    /// Keep only graphs whose shortest odd cycle has this length.
    #[arg(long)]
    pub odd_girth: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckId {
    /// Moving a bipartite branch toward the larger entry does not raise q_min.
    #[value(name = "lemma-relocate")]
    Relocate,
    /// Entries along tree branches are monotone.
    #[value(name = "lemma-value")]
    BranchValues,
    /// Sign pattern of the first eigenvector of U(n, k, g).
    #[value(name = "lemma-sign")]
    SignStructure,
    /// q_min(U(n, k, g)) strictly increases in k.
    #[value(name = "lemma-minpen-k")]
    PendantSweep,
    /// q_min(V(n, gamma, g)) strictly decreases in gamma.
    #[value(name = "cor-decr-gamma")]
    GammaSweep,
    /// q_min(V(n, gamma, g)) strictly increases in g.
    #[value(name = "cor-decr-girth")]
    GirthSweep,
    /// V(n, gamma, g) lies strictly below every other U with the same gamma.
    #[value(name = "cor-uv")]
    UAboveV,
    /// Spanning unicyclic extraction.
    #[value(name = "lemma-unispan")]
    SpanningUnicyclic,
    /// Exhaustive minimizer among unicyclic graphs with odd cycle g.
    #[value(name = "thm-minuni")]
    UnicyclicMinimizer,
    /// Exhaustive minimizer among graphs of odd girth g.
    #[value(name = "thm-main-g")]
    GirthMinimizer,
    /// Exhaustive minimizer among all connected non-bipartite graphs.
    #[value(name = "cor-final")]
    Minimizer,
    /// The odd cycle lies above U(n, 1, n-2).
    #[value(name = "cor-final-cycle")]
    CycleExclusion,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: CheckId,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long)]
    pub gamma: Option<usize>,
    /// lemma-relocate: current root of the branch in the first graph.
    #[arg(long)]
    pub v2: Option<usize>,
    /// lemma-relocate: new root in the first graph.
    #[arg(long)]
    pub v1: Option<usize>,
    /// lemma-relocate: attachment vertex of the second graph.
    #[arg(long)]
    pub u: Option<usize>,
    /// graph6 inputs for graph-level checks; stdin when absent.
    pub graphs: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum SweepCommand {
    /// U(n, k, g) over k.
    K {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        g: usize,
    },
    /// V(n, gamma, g) over gamma.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        g: usize,
    },
    /// V(n, gamma, g) over odd g.
    Girth {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: usize,
    },
}
