//! `clusterpic`: command-line access to the cluster picture toolkit.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "clusterpic", version, about = "Signed exceptional sequences, cluster fans and picture groups of Dynkin quivers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct QuiverArgs {
    /// Quiver such as "A3: 1<2<3" or "B2: 1<(1,2)2".
    #[arg(long, short = 'q')]
    pub quiver: Option<String>,
    /// Explicit arrows such as "2>1,3>2"; a type tag may come from --quiver.
    #[arg(long)]
    pub arrows: Option<String>,
    /// Prime field used by the explicit-representation oracle.
    #[arg(long, env = "CLUSTERPIC_FIELD_ORDER", default_value_t = 2)]
    pub field_order: u64,
    /// Write the result to a file instead of stdout.
    #[arg(long, short = 'o')]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots in height order.
    Roots(QuiverArgs),
    /// Indecomposable modules with names, dimension and g-vectors.
    Indecomposables(QuiverArgs),
    /// All clusters (cluster-tilting objects).
    Clusters(QuiverArgs),
    /// The g-vector fan: rays, chambers and labelled facets.
    Fan(QuiverArgs),
    /// Wide subcategories, or the perpendicular category of some objects.
    Wide {
        #[command(flatten)]
        q: QuiverArgs,
        /// Comma-separated partial cluster, e.g. "S1,P2[1]".
        #[arg(long)]
        perp: Option<String>,
    },
    /// Exceptional sequences.
    ExcSeq {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(value_enum)]
        mode: ExcMode,
        /// Comma-separated sequence, e.g. "S2,I2,S3".
        #[arg(long)]
        seq: Option<String>,
        /// Length for enumeration (defaults to the rank).
        #[arg(long)]
        length: Option<usize>,
    },
    /// Signed exceptional sequences.
    SignedExcSeq {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(value_enum)]
        mode: SignedMode,
        /// Comma-separated signed sequence, e.g. "S2[1],I2,S3".
        #[arg(long)]
        seq: Option<String>,
        /// Comma-separated (ordered) cluster, e.g. "S1,S3,P1".
        #[arg(long)]
        cluster: Option<String>,
    },
    /// Compose `[second] ∘ [first]`, with `first` from mod-Λ.
    Compose {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Braid move on an exceptional sequence.
    Braid {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long)]
        seq: String,
        /// 1-based position i, acting on terms i and i+1.
        #[arg(long)]
        position: usize,
        /// Apply the inverse generator.
        #[arg(long)]
        inverse: bool,
    },
    /// Presentation of the picture group.
    PictureGroup {
        #[command(flatten)]
        q: QuiverArgs,
        /// Compare with the Stasheff group Sta_N instead.
        #[arg(long)]
        stasheff: Option<usize>,
    },
    /// Integral homology of the picture space.
    Homology {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long, value_enum, default_value_t = ComplexKind::Cubical)]
        complex: ComplexKind,
    },
    /// Torsion classes: the Hasse diagram, or the class of one point.
    Torsion {
        #[command(flatten)]
        q: QuiverArgs,
        /// Rational point such as "2,-1" or "1/2,3".
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Draw the walls as SVG or TikZ (rank at most three).
    Draw {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long, value_enum, default_value_t = DrawFormat::Svg)]
        format: DrawFormat,
        /// Stereographic pole "x,y,z" for rank three.
        #[arg(long, allow_hyphen_values = true)]
        pole: Option<String>,
        #[arg(long, default_value_t = 32)]
        samples: usize,
        /// Label chambers with torsion classes.
        #[arg(long)]
        chamber_labels: bool,
        #[arg(long, default_value_t = 480.0)]
        size: f64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcMode {
    Enumerate,
    Validate,
    Complete,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedMode {
    Enumerate,
    Validate,
    ToCluster,
    FromCluster,
    Factor,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    Cubical,
    Nerve,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrawFormat {
    Svg,
    Tikz,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            println!("{}", output::error_json(&e));
            ExitCode::FAILURE
        }
    }
}
