use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "ncrw", version, about = "Noncommutative rewriting, completion and homology checks")]
pub struct Cli {
    /// Worker threads for overlap resolution (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub parallel: usize,
    /// Maximum number of single rewrites per normal form computation.
    #[arg(long, global = true, default_value_t = ncrw_rewrite::DEFAULT_STEP_LIMIT)]
    pub step_limit: u64,
    /// Emit a JSON report (default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a plain-text report.
    #[arg(long, global = true)]
    pub text: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite abstract reduction systems.
    #[command(subcommand)]
    Ars(ArsCommand),
    /// Normal form of a polynomial.
    Reduce(ReduceArgs),
    /// Check every minimal overlap of a system for joinability.
    Verify(SystemArgs),
    /// Knuth-Bendix completion.
    Complete(CompleteArgs),
    /// Kernel generators of a module map given by its generator images.
    Kernel(KernelArgs),
    /// The rewriting system of the orthogonal free quantum group algebra.
    #[command(subcommand)]
    Aon(AonCommand),
    /// Factor automata of irreducible words.
    #[command(subcommand)]
    Automaton(AutomatonCommand),
    /// The stage systems of the bimodule resolution.
    #[command(subcommand)]
    Resolution(ResolutionCommand),
    /// Homology and cohomology dimensions of a one-dimensional module.
    Homology(HomologyArgs),
    /// Run the acceptance battery and print a pass/fail table.
    PaperSuite,
}

#[derive(Debug, Subcommand)]
pub enum ArsCommand {
    /// Noetherian and confluence properties plus normal forms.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    #[arg(long)]
    pub system: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long)]
    pub system: PathBuf,
    /// Polynomial as a JSON term list `[{"c":"1","w":["a","b"]}]`.
    #[arg(long, conflicts_with = "word", required_unless_present = "word")]
    pub poly: Option<PathBuf>,
    /// A single word written in the system's letter tokens.
    #[arg(long)]
    pub word: Option<String>,
    /// Include the rewrite steps.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct CompleteArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long, default_value_t = 200)]
    pub max_rules: usize,
    /// Write the completed system here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    /// Generator images `{"images":[{"generator":"f","image":[terms]}]}`.
    #[arg(long)]
    pub phi: PathBuf,
    /// Algebra rules over the full alphabet, module letters included.
    #[arg(long)]
    pub algebra: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum AonCommand {
    /// Write the system for `n` as JSON.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check completeness and the ideal certificates of every rule.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Irreducible words by length.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum AutomatonCommand {
    /// Factor automaton of the left-hand sides of a system.
    Build {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        minimize: bool,
        /// Also write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Number of accepted words of the given length.
    Count {
        #[arg(long)]
        dfa: PathBuf,
        #[arg(long)]
        length: usize,
    },
    /// Whether a word is irreducible.
    Check {
        #[arg(long)]
        dfa: PathBuf,
        #[arg(long)]
        word: String,
    },
}

#[derive(Debug, Args)]
pub struct StageArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub stage: u8,
    /// Build the stage for n < 3 as well (experimental, no completeness claim).
    #[arg(long)]
    pub allow_small_n: bool,
}

#[derive(Debug, Subcommand)]
pub enum ResolutionCommand {
    /// Write the stage system as JSON.
    Gen {
        #[command(flatten)]
        stage: StageArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weak completeness, overlap families and containment identities.
    Verify {
        #[command(flatten)]
        stage: StageArgs,
    },
    /// Kernel generators matched against the next map.
    Kernel {
        #[command(flatten)]
        stage: StageArgs,
    },
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    #[arg(long)]
    pub lambda: PathBuf,
    #[arg(long)]
    pub omega: PathBuf,
    /// Compute cohomology from the dual maps and compare ranks.
    #[arg(long)]
    pub ext: bool,
    /// Block structure of ΩΛ^t, e.g. `["rotation","minus"]`, for the k-value cross-check.
    #[arg(long)]
    pub blocks: Option<PathBuf>,
    /// Use the plus sign in the trace term of the third map.
    #[arg(long)]
    pub plus_sign: bool,
}
