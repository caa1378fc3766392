use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lyubeznik::{FieldChoice, OracleConfig, SearchConfig, SearchMode};

/// Lyubeznik resolutions of monomial ideals.
///
/// INPUT is an ideal file (`vars x y z` then `gen x^2*y` lines), `-` for
/// standard input, or `corpus:<name>` for a bundled example.
#[derive(Debug, Parser)]
#[command(name = "lyubeznik", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Total order on the generators as a 1-based permutation, e.g. `3,1,2`.
    #[arg(long, global = true)]
    pub order: Option<String>,

    /// Order space for searches.
    #[arg(long, global = true, default_value = "exhaustive", value_parser = parse_mode)]
    pub search: SearchMode,

    /// Largest number of generators searched exhaustively.
    #[arg(long, global = true, default_value_t = lyubeznik::orders::DEFAULT_MAX_EXHAUSTIVE,
          value_parser = positive)]
    pub max_exhaustive: usize,

    /// Search every order even above --max-exhaustive.
    #[arg(long, global = true)]
    pub force: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true, value_parser = positive)]
    pub jobs: Option<usize>,

    /// Coefficient field of the homology oracle: `q` or `p:<prime>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: FieldChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Covers of every generator, with E-minimal flags and courts.
    Covers { input: String },
    /// Faces, facets, f-vector and subset classes of the Lyubeznik complex.
    Complex { input: String },
    /// Invariants under one order.
    Analyze { input: String },
    /// Invariants minimized over orders.
    Search { input: String },
    /// Betti numbers of R/I from the Taylor complex.
    OracleBetti { input: String },
    /// Checks that the Lyubeznik complex is a resolution.
    Verify { input: String },
    /// Polynomials generating the ideal up to radical.
    RadicalGens { input: String },
    /// Edge ideals of simple graphs.
    ///
    /// INPUT is a graph file (`vertex a b c` then `edge a b` lines), `-`,
    /// or `corpus:<name>` such as `corpus:cycle-4`.
    Graph {
        input: String,
        /// Evaluate the graph propositions.
        #[arg(long)]
        check_props: bool,
        /// Print the edge ideal as an ideal file.
        #[arg(long)]
        edge_ideal: bool,
    },
}

impl Command {
    pub fn input(&self) -> &str {
        match self {
            Command::Covers { input }
            | Command::Complex { input }
            | Command::Analyze { input }
            | Command::Search { input }
            | Command::OracleBetti { input }
            | Command::Verify { input }
            | Command::RadicalGens { input }
            | Command::Graph { input, .. } => input,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Covers { .. } => "covers",
            Command::Complex { .. } => "complex",
            Command::Analyze { .. } => "analyze",
            Command::Search { .. } => "search",
            Command::OracleBetti { .. } => "oracle-betti",
            Command::Verify { .. } => "verify",
            Command::RadicalGens { .. } => "radical-gens",
            Command::Graph { .. } => "graph",
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

fn parse_mode(s: &str) -> Result<SearchMode, String> {
    s.parse().map_err(|e: lyubeznik::Error| e.to_string())
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    s.parse().map_err(|e: lyubeznik::Error| e.to_string())
}

/// Where the input comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Stdin,
    Corpus(String),
    File(PathBuf),
}

impl Input {
    pub fn parse(text: &str) -> Self {
        if text == "-" {
            Input::Stdin
        } else if let Some(name) = text.strip_prefix("corpus:") {
            Input::Corpus(name.to_string())
        } else {
            Input::File(PathBuf::from(text))
        }
    }
}

/// Everything one invocation needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: Input,
    pub command: Command,
    /// 1-based permutation text, validated once the ideal is known.
    pub order: Option<String>,
    pub search: SearchConfig,
    pub format: Format,
    pub oracle: OracleConfig,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let o = cli.options;
        RunConfig {
            input: Input::parse(cli.command.input()),
            command: cli.command,
            order: o.order,
            search: SearchConfig {
                mode: o.search,
                max_exhaustive: o.max_exhaustive,
                force: o.force,
            },
            format: o.format,
            oracle: OracleConfig {
                field: o.field,
                ..OracleConfig::default()
            },
        }
    }
}
