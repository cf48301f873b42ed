//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::conj::{
    action_conjugacy_classes, irreducible_rep_count_from_lattice, munn_classes, munn_count_rook,
    semigroup_conjugacy_classes, sim_conjugacy_classes, ConjKind, DEFAULT_ORACLE_CAP,
};
use crate::crosslat::DominantWeightSpec;
use crate::error::{Error, Result};
use crate::export::{ClassificationDocument, CountsDocument, LatticeDocument, MonoidDocument};
use crate::parse::{parse_j0, parse_type, parse_weight};
use crate::renner::{build_lattice, build_renner, MonoidCaps, RennerMonoid, DEFAULT_MONOID_CAP};
use crate::rootsys::{CartanMatrix, WeightVector, DEFAULT_GROUP_CAP};

#[derive(Debug, Parser)]
#[command(name = "renner", version, about = "Renner monoids of J-irreducible monoids and their conjugacy classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the cross-section lattice with λ*, λ_*, |W(e)| and |W_*(e)|.
    Lattice(MonoidArgs),
    /// Build the monoid and print its strata, or the full element list as JSON.
    Build(MonoidArgs),
    /// Print a conjugacy classification.
    Classes {
        #[command(flatten)]
        monoid: MonoidArgs,
        /// sim | munn | semigroup | action
        #[arg(long)]
        kind: ConjKind,
    },
    /// Print the number of ~-classes in each stratum and their total.
    Counts(MonoidArgs),
    /// Print the number of irreducible representations.
    Reps(MonoidArgs),
    /// Print the number of Munn classes of the rook monoid R_m.
    RookCount {
        m: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
}

/// Only the zero pattern of the weight matters, so `--weight 1,0` and
/// `--j0 2` describe the same monoid.
#[derive(Debug, Args)]
#[command(group(ArgGroup::new("highest_weight").required(true).args(["weight", "j0"])))]
pub struct MonoidArgs {
    /// Root system type and rank, e.g. A2, B3, G2
    #[arg(long = "type", value_name = "TYPE")]
    pub type_label: String,
    /// Dominant weight in fundamental-weight coordinates, e.g. 1,0
    #[arg(long)]
    pub weight: Option<String>,
    /// 1-based simple roots orthogonal to the weight, e.g. 2,3
    #[arg(long)]
    pub j0: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    pub max_group_order: usize,
    #[arg(long, default_value_t = DEFAULT_MONOID_CAP)]
    pub max_monoid_order: usize,
    /// Monoid size limit for the pairwise semigroup and action classifications
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub max_oracle_order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// A validated monoid description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidInput {
    pub cartan: CartanMatrix,
    pub weight: WeightVector,
    pub caps: MonoidCaps,
    pub max_oracle_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Job {
    Lattice(MonoidInput),
    Build(MonoidInput),
    Classes(MonoidInput, ConjKind),
    Counts(MonoidInput),
    Reps(MonoidInput),
    RookCount(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub job: Job,
    pub format: OutputFormat,
}

impl MonoidArgs {
    fn validate(&self) -> Result<MonoidInput> {
        let cartan = parse_type(&self.type_label)?;
        let rank = cartan.rank();
        let weight = match (&self.weight, &self.j0) {
            (Some(w), None) => DominantWeightSpec::new(parse_weight(w, rank)?, rank)?,
            (None, Some(j)) => DominantWeightSpec::from_j0(parse_j0(j, rank)?, rank)?,
            _ => return Err(Error::InvalidWeight("give exactly one of --weight and --j0".into())),
        }
        .mu()
        .clone();
        Ok(MonoidInput {
            cartan,
            weight,
            caps: MonoidCaps {
                max_group_order: self.max_group_order,
                max_monoid_order: self.max_monoid_order,
            },
            max_oracle_order: self.max_oracle_order,
        })
    }
}

impl JobSpec {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let (job, format) = match &cli.command {
            Command::Lattice(a) => (Job::Lattice(a.validate()?), a.format),
            Command::Build(a) => (Job::Build(a.validate()?), a.format),
            Command::Classes { monoid, kind } => (Job::Classes(monoid.validate()?, *kind), monoid.format),
            Command::Counts(a) => (Job::Counts(a.validate()?), a.format),
            Command::Reps(a) => (Job::Reps(a.validate()?), a.format),
            Command::RookCount { m, format } => (Job::RookCount(*m), *format),
        };
        Ok(JobSpec { job, format })
    }
}

/// Parses an argument vector, program name first.
pub fn parse_args<I, T>(args: I) -> std::result::Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args)
}

/// 2 for invalid input, 3 for an exceeded size cap, 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidType { .. }
        | Error::InvalidWeight(_)
        | Error::InvalidPartialInjection(_)
        | Error::Parse(_) => 2,
        Error::SizeCapExceeded { .. } | Error::Overflow => 3,
        _ => 1,
    }
}

fn build(input: &MonoidInput) -> Result<RennerMonoid> {
    build_renner(&input.cartan, &input.weight, input.caps)
}

fn heading(input: &MonoidInput) -> String {
    let w: Vec<String> = input.weight.coords().iter().map(|c| c.to_string()).collect();
    format!("{} weight ({})", input.cartan, w.join(","))
}

fn join(v: &[usize]) -> String {
    let ids: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

/// Runs a job and returns the document to print.
pub fn run(spec: &JobSpec) -> Result<String> {
    let fmt = spec.format;
    match &spec.job {
        Job::Lattice(input) => {
            let (group, lattice) = build_lattice(&input.cartan, &input.weight, input.caps.max_group_order)?;
            let doc = LatticeDocument::new(&group, &lattice);
            Ok(match fmt {
                OutputFormat::Json => doc.to_json(),
                OutputFormat::Csv => doc.to_csv(),
                OutputFormat::Table => {
                    let mut out = format!(
                        "{}: |W| = {}, |W·μ| = {}\n",
                        heading(input),
                        doc.group_order,
                        doc.vertex_count
                    );
                    writeln!(out, "{:<12} {:<12} {:<12} {:>8} {:>8}", "e", "λ*", "λ_*", "|W(e)|", "|W_*(e)|").unwrap();
                    for r in &doc.idempotents {
                        let (star, sub) = if r.e == "0" {
                            ("-".to_string(), "-".to_string())
                        } else {
                            (join(&r.lambda_star), join(&r.lambda_sub))
                        };
                        writeln!(
                            out,
                            "{:<12} {:<12} {:<12} {:>8} {:>8}",
                            r.e, star, sub, r.centralizer_order, r.stabilizer_order
                        )
                        .unwrap();
                    }
                    out
                }
            })
        }
        Job::Build(input) => {
            let monoid = build(input)?;
            Ok(match fmt {
                OutputFormat::Json => MonoidDocument::from_monoid(&monoid).to_json(),
                OutputFormat::Csv => {
                    let mut out = String::from("e,elements\n");
                    for k in 0..monoid.lattice().len() {
                        writeln!(out, "{},{}", monoid.lattice().label(k), monoid.stratum_members(k).len()).unwrap();
                    }
                    out
                }
                OutputFormat::Table => {
                    let mut out = format!(
                        "{}: {} elements on {} vertices\n",
                        heading(input),
                        monoid.len(),
                        monoid.group().vertex_count()
                    );
                    for k in 0..monoid.lattice().len() {
                        writeln!(out, "{:<12} {:>8}", monoid.lattice().label(k), monoid.stratum_members(k).len()).unwrap();
                    }
                    writeln!(out, "total: {}", monoid.len()).unwrap();
                    out
                }
            })
        }
        Job::Classes(input, kind) => {
            let monoid = build(input)?;
            let classification = match kind {
                ConjKind::Sim => sim_conjugacy_classes(&monoid),
                ConjKind::Munn => munn_classes(&monoid),
                ConjKind::Semigroup => semigroup_conjugacy_classes(&monoid, input.max_oracle_order)?,
                ConjKind::Action => action_conjugacy_classes(&monoid, input.max_oracle_order)?,
            };
            let doc = ClassificationDocument::new(&monoid, &classification);
            Ok(match fmt {
                OutputFormat::Json => doc.to_json(),
                OutputFormat::Csv => doc.to_csv(),
                OutputFormat::Table => {
                    let mut out = format!("{}: {} classes\n", heading(input), kind);
                    for k in 0..monoid.lattice().len() {
                        let label = monoid.lattice().label(k);
                        let block: Vec<_> = doc.classes.iter().filter(|c| c.stratum == label).collect();
                        writeln!(out, "{label}: {}", block.len()).unwrap();
                        for c in block {
                            writeln!(out, "  {:<24} size {}", c.representative, c.size).unwrap();
                        }
                    }
                    writeln!(out, "total: {}", doc.class_count).unwrap();
                    out
                }
            })
        }
        Job::Counts(input) => {
            let doc = CountsDocument::new(&build(input)?);
            Ok(match fmt {
                OutputFormat::Json => doc.to_json(),
                OutputFormat::Csv => doc.to_csv(),
                OutputFormat::Table => {
                    let mut out = format!("{}\n", heading(input));
                    writeln!(out, "{:<12} {:>8} {:>8} {:>8} {:>6}", "e", "|W(e)|", "|W_*(e)|", "cosets", "n_e").unwrap();
                    for s in &doc.strata {
                        writeln!(
                            out,
                            "{:<12} {:>8} {:>8} {:>8} {:>6}  {}",
                            s.e,
                            s.centralizer_order,
                            s.stabilizer_order,
                            s.coset_count,
                            s.n_e,
                            s.orbit_reps.join(" ")
                        )
                        .unwrap();
                    }
                    writeln!(out, "total: {}", doc.total).unwrap();
                    out
                }
            })
        }
        Job::Reps(input) => {
            let (group, lattice) = build_lattice(&input.cartan, &input.weight, input.caps.max_group_order)?;
            Ok(scalar(fmt, "irreducible_representations", irreducible_rep_count_from_lattice(&group, &lattice) as u128))
        }
        Job::RookCount(m) => Ok(scalar(fmt, "munn_classes", munn_count_rook(*m)?)),
    }
}

fn scalar(fmt: OutputFormat, name: &str, value: u128) -> String {
    match fmt {
        OutputFormat::Table => format!("{value}\n"),
        OutputFormat::Csv => format!("{name}\n{value}\n"),
        OutputFormat::Json => format!("{{\n  \"{name}\": {value}\n}}"),
    }
}
