use clap::{Args, Parser, Subcommand, ValueEnum};
use wlpoly::identities::Identity;
use wlpoly::partitions::Partition;
use wlpoly::polyalg::BigRational;

#[derive(Debug, Parser)]
#[command(name = "wlpoly", version, about = "Wronskian Laguerre and Hermite polynomials indexed by partitions")]
pub struct Cli {
    /// Worker threads for sweeps; 0 lets the runtime choose.
    #[arg(long, global = true, env = "WLPOLY_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one polynomial.
    Compute(ComputeArgs),
    /// Run an identity check over a range and stream JSON-lines reports.
    Verify(VerifyArgs),
    /// Tabulate every partition up to a size.
    Table(TableArgs),
    /// Time recurrence against determinant evaluation per size.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Laguerre,
    Hermite,
    ClassicalLaguerre,
    Jacobi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recurrence,
    RecurrenceAlt,
    Wronskian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
    Latex,
}

/// Which polynomial to evaluate.
#[derive(Debug, Clone, Args)]
pub struct PolySelect {
    #[arg(long, value_enum, default_value = "laguerre")]
    pub family: FamilyArg,

    /// Defaults to `recurrence` for laguerre and hermite, `wronskian` otherwise.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,

    /// Rational value for α, e.g. `3/2`; symbolic when omitted.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub alpha: Option<BigRational>,

    /// Rational value for β (jacobi only).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub beta: Option<BigRational>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Comma-separated parts, e.g. `3,1`; the empty string is ∅.
    #[arg(long, value_parser = parse_partition)]
    pub partition: Partition,

    #[command(flatten)]
    pub select: PolySelect,

    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_identity)]
    pub identity: Identity,

    /// Largest size swept; each identity has its own default.
    #[arg(long)]
    pub max_size: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 4)]
    pub max_size: usize,

    #[command(flatten)]
    pub select: PolySelect,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 8)]
    pub max_size: usize,

    #[arg(long, value_enum, default_value = "laguerre")]
    pub family: FamilyArg,

    /// Time only this method; both recurrence and wronskian when omitted.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.trim().parse().map_err(|_| format!("{s:?} is not a rational number like 3 or -2/5"))
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|e| {
        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}
