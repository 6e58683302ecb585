use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

mod commands;

pub const EXIT_BELOW_THRESHOLD: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Build, verify and profile cross Z-complementary pairs.
#[derive(Debug, Parser)]
#[command(name = "czcp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a pair, verify it, and write the pair with its report.
    Construct(ConstructArgs),
    /// Verify a pair file and print its JSON report.
    Verify {
        pair: PathBuf,
        /// Exit with status 1 when the measured zone width is below this.
        #[arg(long, default_value_t = 1)]
        min_z: usize,
        /// Write the report here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the correlation-sum profile of a pair as CSV.
    Profile {
        pair: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the catalog of constructible parameters.
    Catalog {
        /// Only rows yielding this length, evaluated at it.
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Least-squares MSE of a training matrix against its lower bound.
    Mse(MseArgs),
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
    /// Pair output file; the report goes to `<output>.json` unless --report is set.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Quadratic Boolean-function pairs of length 2^(m-1)+2.
    Gbf {
        #[arg(long)]
        m: usize,
        /// Alphabet size; a comma list when sweeping.
        #[arg(long, default_value = "2", value_delimiter = ',')]
        q: Vec<u32>,
        /// Images of the permutation of {0..m-3}; identity when omitted.
        #[arg(long, conflicts_with = "sweep")]
        pi: Option<String>,
        #[arg(long, default_value_t = 0)]
        c: u32,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Insertion pairs of length 2N+2 from a Turyn-built GCP of length N.
    Insertion(InsertionArgs),
    /// Concatenation of two Barker sequences of lengths m <= n.
    Barker {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Which printed variant to use for lengths with two (0 or 1).
        #[arg(long, default_value_t = 0)]
        m_variant: usize,
        #[arg(long, default_value_t = 0)]
        n_variant: usize,
    },
    /// Turyn product of a GCP (recipe or pair file) with a binary CZCP file.
    TurynExtend {
        #[arg(long)]
        gcp: String,
        #[arg(long)]
        czcp: PathBuf,
    },
    /// Iterated Turyn GCP from a comma list of kernel lengths.
    Gcp {
        #[arg(long)]
        recipe: String,
    },
}

#[derive(Debug, Args)]
struct InsertionArgs {
    #[arg(long, default_value_t = 0)]
    alpha: u32,
    #[arg(long, default_value_t = 0)]
    beta: u32,
    #[arg(long, default_value_t = 0)]
    gamma: u32,
    /// Use the 10^b, 26^g or 10^b 26^g family instead of the 2^a one.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Alphabet of the inserted symbols.
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Inserted symbols as exponents, or '+' / '-' for ±1.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    x0: String,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    x1: String,
    #[arg(long, default_value = "-", allow_hyphen_values = true)]
    y0: String,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    y1: String,
    #[command(flatten)]
    sweep: SweepArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    #[value(name = "10b")]
    Tens,
    #[value(name = "26g")]
    TwentySixes,
    #[value(name = "10b26g")]
    Mixed,
}

#[derive(Debug, Clone, Copy, Args)]
struct SweepArgs {
    /// Sweep every parameter point up to the given ones and print one JSON
    /// summary line per point instead of writing a pair.
    #[arg(long)]
    sweep: bool,
    /// Worker threads for --sweep; defaults to the available cores.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct MseArgs {
    /// CSV of `re+imj` cells.
    #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
    matrix: Option<PathBuf>,
    /// Build the cyclic demonstration layout from this pair file.
    #[arg(long)]
    pair: Option<PathBuf>,
    #[arg(long)]
    sigma2: f64,
    #[arg(long)]
    nt: usize,
    #[arg(long)]
    lambda: usize,
    /// Nonzero entries per column; inferred from the first column when omitted.
    #[arg(long = "nonzero")]
    q_nonzero: Option<usize>,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("czcp: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
