use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact linear bialgebra over Q, GF(p) and Q(I).
#[derive(Debug, Parser)]
#[command(name = "bialg", disable_version_flag = true)]
pub struct Cli {
    /// `text` for a readable rendering, `doc` for the JSON document.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Print the version banner on stderr first.
    #[arg(long, global = true)]
    pub banner: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Doc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(subcommand)]
    Bimatrix(BimatrixCmd),
    #[command(subcommand)]
    Bispace(BispaceCmd),
    #[command(subcommand)]
    Bicode(BicodeCmd),
    #[command(subcommand)]
    Markov(MarkovCmd),
    #[command(subcommand)]
    Leontief(LeontiefCmd),
    #[command(subcommand)]
    Neutro(NeutroCmd),
    #[command(subcommand)]
    Fuzzy(FuzzyCmd),
    #[command(subcommand)]
    Examples(ExamplesCmd),
}

/// Operations on bimatrix documents.
#[derive(Debug, Subcommand)]
pub enum BimatrixCmd {
    Mul { a: String, b: String },
    Add { a: String, b: String },
    Det { a: String },
    Charpoly { a: String },
    Eigen { a: String },
    Diag { a: String },
    Jordan {
        a: String,
        /// Put the 1s above the diagonal.
        #[arg(long = "super")]
        super_diagonal: bool,
    },
    Minpoly { a: String },
}

/// Inner biproducts. Products are `dot`, `wdot:w1,…` or `l2:a,b`; pseudo
/// products are `gfdot` or `gfdot:w1,…`.
#[derive(Debug, Subcommand)]
pub enum BispaceCmd {
    GramSchmidt {
        #[arg(long, default_value = "dot")]
        ip1: String,
        #[arg(long, default_value = "dot")]
        ip2: String,
        /// Rescale outputs to primitive integer vectors.
        #[arg(long)]
        primitive: bool,
        set: String,
    },
    Project {
        #[arg(long, default_value = "dot")]
        ip1: String,
        #[arg(long, default_value = "dot")]
        ip2: String,
        basis: String,
        beta: String,
    },
    Complement {
        #[arg(long, default_value = "dot")]
        ip1: String,
        #[arg(long, default_value = "dot")]
        ip2: String,
        /// `row:N` or `poly:D`; defaults to the row space of the vectors.
        #[arg(long)]
        ambient1: Option<String>,
        #[arg(long)]
        ambient2: Option<String>,
        set: String,
    },
    PseudoIp {
        #[arg(long, default_value = "gfdot")]
        ip1: String,
        #[arg(long, default_value = "gfdot")]
        ip2: String,
        u: String,
        /// Defaults to `u`.
        v: Option<String>,
    },
}

/// Bicodes from code documents. Words are literals such as `110|10`.
#[derive(Debug, Subcommand)]
pub enum BicodeCmd {
    Build { code: String },
    Encode { code: String, message: String },
    Syndrome { code: String, word: String },
    /// Every bicode word; the cap comes from BIALG_MAX_ENUM.
    Enumerate { code: String },
    Dual { code: String },
    Decode {
        code: String,
        word: String,
        /// A basis for the first component, words separated by `;`.
        /// Repeat to try several in order.
        #[arg(long)]
        basis1: Vec<String>,
        #[arg(long)]
        basis2: Vec<String>,
        /// Keep the closest result over all bases instead of the first.
        #[arg(long)]
        best: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum MarkovCmd {
    Step {
        model: String,
    },
    /// One state per line.
    Iterate {
        model: String,
        #[arg(short = 'n', long)]
        steps: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    Steady {
        model: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum LeontiefCmd {
    Closed { model: String },
    Open { model: String },
    Classify { model: String },
}

/// Neutrosophic matrices over Q(I).
#[derive(Debug, Subcommand)]
pub enum NeutroCmd {
    Mul { a: String, b: String },
    Charpoly { a: String },
    Eigen { a: String },
}

#[derive(Debug, Subcommand)]
pub enum FuzzyCmd {
    /// Max-min composition.
    Compose { p: String, q: String },
}

/// Bundled worked examples with pinned expectations.
#[derive(Debug, Subcommand)]
pub enum ExamplesCmd {
    Run {
        #[arg(required_unless_present = "all")]
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
    },
    List,
}
