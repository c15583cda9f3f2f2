//! Command-line surface and the validated run configuration.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use signed_corona::gen::MarkingChoice;
use signed_corona::graph::families;
use signed_corona::spectra::FormVariant;
use signed_corona::structural::TableVariant;
use signed_corona::sweep::Fault;
use signed_corona::{random_orientation, MatrixKind, OrientedGraph, ProductKind, SignedGraph};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "signed-corona", version, about = "Corona-type products of signed graphs and their spectra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct a product and write it as an edge list.
    Build {
        #[command(flatten)]
        pair: PairArgs,
        /// Write the edge list here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write the vertex layout as JSON here.
        #[arg(long)]
        layout: Option<PathBuf>,
    },
    /// Closed-form characteristic polynomial of a product.
    Charpoly {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, short)]
        kind: MatrixKind,
        /// Also compute the product's polynomial directly and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = VariantArg::Derived)]
        variant: VariantArg,
    },
    /// Signed coronal of one graph.
    Coronal {
        graph: String,
        #[arg(long, short)]
        kind: MatrixKind,
        #[arg(long, value_enum, default_value_t = MarkingArg::Canonical)]
        marking: MarkingArg,
    },
    /// Predicted against counted edges and triangles of a product.
    Census {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = TableArg::Corrected)]
        table: TableArg,
    },
    /// Balance of a product of two balanced graphs.
    Balance {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Find and certify cospectral, non-isomorphic product pairs.
    CospectralSearch {
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        /// Matrix kinds to search; all when omitted.
        #[arg(long, short)]
        kind: Vec<MatrixKind>,
        /// Products to certify with; all when omitted.
        #[arg(long, short)]
        product: Vec<ProductKind>,
        /// First factors (file or C<n>, K<n>, P<n>); C3, C4, K4 when omitted.
        #[arg(long = "first-factor")]
        first_factors: Vec<String>,
        /// Include disconnected second factors.
        #[arg(long)]
        disconnected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = signed_corona::cospectral::DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        /// Write the JSON-lines catalogue here.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Randomized check of every closed form against direct computation.
    VerifyAll {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 6)]
        max_n1: usize,
        #[arg(long, default_value_t = 4)]
        max_n2: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Derived)]
        variant: VariantArg,
        /// Perturb one closed form, as `product:kind:coefficient`.
        #[arg(long)]
        inject_fault: Option<String>,
        /// Write failing instances as JSON here.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

/// Two factor graphs plus how to mark and orient them.
#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, short)]
    pub product: ProductKind,
    /// First factor: edge-list file or C<n>, K<n>, P<n>.
    pub g1: String,
    /// Second factor: edge-list file or C<n>, K<n>, P<n>.
    pub g2: String,
    #[arg(long, value_enum, default_value_t = MarkingArg::Canonical)]
    pub marking: MarkingArg,
    #[arg(long, value_enum, default_value_t = OrientationArg::Default)]
    pub orientation: OrientationArg,
    /// Seed of a random orientation.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MarkingArg {
    Canonical,
    Plurality,
    /// The `marking` line of the second factor's file.
    File,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrientationArg {
    Default,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Derived,
    Stated,
}

impl From<VariantArg> for FormVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Derived => FormVariant::Derived,
            VariantArg::Stated => FormVariant::Stated,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableArg {
    Printed,
    Corrected,
}

impl From<TableArg> for TableVariant {
    fn from(v: TableArg) -> Self {
        match v {
            TableArg::Printed => TableVariant::Printed,
            TableArg::Corrected => TableVariant::Corrected,
        }
    }
}

/// Loaded, marked and oriented inputs of a two-factor command.
pub struct RunConfig {
    pub product: ProductKind,
    pub og1: OrientedGraph,
    pub g2: SignedGraph,
    pub mu2: Vec<i8>,
}

impl RunConfig {
    pub fn from_pair(args: &PairArgs) -> Result<Self, CliError> {
        let g1 = load_graph(&args.g1)?;
        let g2 = load_graph(&args.g2)?;
        let mu2 = marking(&g2, args.marking)?;
        let orientation = match (args.orientation, args.seed) {
            (OrientationArg::Default, None) => signed_corona::default_orientation(&g1),
            (OrientationArg::Random, Some(seed)) => random_orientation(&g1, seed),
            (OrientationArg::Default, Some(_)) => {
                return Err(CliError::Precondition("--seed only applies to --orientation random".into()))
            }
            (OrientationArg::Random, None) => {
                return Err(CliError::Precondition("--orientation random needs --seed".into()))
            }
        };
        Ok(RunConfig {
            product: args.product,
            og1: OrientedGraph::new(g1, orientation)?,
            g2,
            mu2,
        })
    }
}

pub fn marking(g: &SignedGraph, arg: MarkingArg) -> Result<Vec<i8>, CliError> {
    match arg {
        MarkingArg::Canonical => Ok(MarkingChoice::Canonical.apply(g)),
        MarkingArg::Plurality => Ok(MarkingChoice::Plurality.apply(g)),
        MarkingArg::File => g
            .marking()
            .map(<[i8]>::to_vec)
            .ok_or_else(|| CliError::Precondition("--marking file but the graph has no marking line".into())),
    }
}

/// An edge-list file, or one of the all-positive families `C<n>`, `K<n>`,
/// `P<n>` when no such file exists.
pub fn load_graph(arg: &str) -> Result<SignedGraph, CliError> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{arg}: {e}")))?;
        return SignedGraph::parse_edge_list(&text).map_err(|e| CliError::Parse(format!("{arg}: {e}")));
    }
    let named = arg
        .get(1..)
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .and_then(|n| match arg.as_bytes()[0].to_ascii_uppercase() {
            b'C' if n >= 3 => Some(families::cycle(n)),
            b'K' => Some(families::complete(n)),
            b'P' => Some(families::path(n)),
            _ => None,
        });
    named.ok_or_else(|| CliError::Parse(format!("{arg}: no such file or named graph")))
}

/// `product:kind:coefficient`, e.g. `senc:L:0`.
pub fn parse_fault(s: &str) -> Result<Fault, CliError> {
    let bad = || CliError::Parse(format!("fault `{s}` is not product:kind:coefficient"));
    let mut it = s.split(':');
    let (Some(p), Some(k), Some(c), None) = (it.next(), it.next(), it.next(), it.next()) else {
        return Err(bad());
    };
    Ok(Fault {
        product: p.parse().map_err(|_| bad())?,
        kind: k.parse().map_err(|_| bad())?,
        coefficient: c.parse().map_err(|_| bad())?,
    })
}
