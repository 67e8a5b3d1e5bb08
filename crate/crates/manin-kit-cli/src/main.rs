use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use manin_kit::exactlin::{Field, DEFAULT_BUDGET};
use manin_kit::fincat::TieBreak;
use manin_kit::suites::{DEFAULT_DEGREE, MAX_DEGREE};
use manin_kit::translate::Functor;

mod commands;
mod output;

use output::{CliError, Output};

#[derive(Parser, Debug)]
#[command(name = "manin-kit", version, about = "Exact checks for internal cohom, coend comonoids and corepresentations of quadratic algebras")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Truncation degree for graded computations.
    #[arg(long, global = true, env = "MANINKIT_DEGREE", default_value_t = DEFAULT_DEGREE)]
    pub degree: usize,
    /// Seed for sampled cases.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest brute-force enumeration allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Append elapsed times to report lines.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Directory searched for fixture files not found as given.
    #[arg(long, global = true, env = "MANINKIT_FIXTURES", default_value_os_t = default_fixtures())]
    pub fixtures: PathBuf,
}

fn default_fixtures() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FunctorArg {
    Tstar,
    Sstar,
}

impl From<FunctorArg> for Functor {
    fn from(f: FunctorArg) -> Functor {
        match f {
            FunctorArg::Tstar => Functor::TStar,
            FunctorArg::Sstar => Functor::SStar,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum TieArg {
    Ascending,
    Descending,
}

impl From<TieArg> for TieBreak {
    fn from(t: TieArg) -> TieBreak {
        match t {
            TieArg::Ascending => TieBreak::Ascending,
            TieArg::Descending => TieBreak::Descending,
        }
    }
}

/// `Q` or a prime such as `3`, `F3` or `F_3`.
fn parse_field(s: &str) -> Result<Field, String> {
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let digits = s.trim_start_matches("F_").trim_start_matches('F');
    let p: u16 = digits.parse().map_err(|_| format!("`{s}` is not Q or a prime"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the quadratic dual A^! as a fixture.
    Dual { algebra: String },
    /// Print the white product A∘B as a fixture.
    White { a: String, b: String },
    /// Print the black product A•B as a fixture.
    Black { a: String, b: String },
    /// Degree dimensions of cohom(A,B) = A^!•B.
    Cohom { a: String, b: String },
    /// Degree dimensions of coend(B) with its comonoid laws.
    Coend { b: String },
    /// Graded pieces of an algebra up to the truncation degree.
    Truncate { algebra: String },
    /// Coassociativity and counit laws of coend(B).
    VerifyComonoid { b: String },
    /// Hom(cohom(A,B), Z) against Hom(B, Z∘A) by enumeration over a finite field.
    VerifyAdjunction { a: String, b: String, z: String },
    /// Lift a representation and check the corepresentation laws.
    VerifyCorep {
        file: String,
        rep: String,
        #[arg(long, value_enum, default_value = "tstar")]
        functor: FunctorArg,
    },
    /// Tensor two lifted corepresentations of a bimonoid and check the laws.
    TensorCorep { file: String, rep1: String, rep2: String },
    /// The π laws as matrix identities.
    VerifyPiLaws {
        #[arg(long, value_parser = parse_field, default_value = "Q")]
        field: Field,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Check a representation of a monoid or bimonoid.
    VerifyRep { file: String, rep: String },
    /// The tensor product of two representations of a bimonoid.
    TensorRep { file: String, rep1: String, rep2: String },
    /// Lift a representation along T* or S*.
    LiftRep {
        file: String,
        rep: String,
        #[arg(long, value_enum, default_value = "tstar")]
        functor: FunctorArg,
    },
    /// Lifting of a tensor product against the tensor of lifts.
    VerifyLiftMonoidality {
        file: String,
        rep1: String,
        rep2: String,
        #[arg(long, value_enum, default_value = "tstar")]
        functor: FunctorArg,
    },
    /// Cohom tables of ({0..n}, max) and of the subsets of {1..n}.
    PosetTable {
        #[arg(long, default_value_t = manin_kit::posetcat::DEFAULT_N)]
        n: usize,
    },
    /// Search universal arrows in a fixture category.
    FincatSearch {
        file: String,
        category: String,
        #[arg(long, value_enum, default_value = "ascending")]
        tie: TieArg,
    },
    /// Run registered law suites.
    Suite {
        /// Suite names or prefixes such as `cohom`.
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        /// List suites with their invariants.
        #[arg(long)]
        list: bool,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let o = &cli.opts;
    if o.degree > MAX_DEGREE {
        return Err(CliError::Input(format!("--degree {} is above the maximum {MAX_DEGREE}", o.degree)));
    }
    use commands as c;
    match cli.command {
        Command::Dual { algebra } => c::dual(o, &algebra),
        Command::White { a, b } => c::product(o, &a, &b, c::Product::White),
        Command::Black { a, b } => c::product(o, &a, &b, c::Product::Black),
        Command::Cohom { a, b } => c::cohom(o, &a, &b),
        Command::Coend { b } => c::coend(o, &b),
        Command::Truncate { algebra } => c::truncate(o, &algebra),
        Command::VerifyComonoid { b } => c::verify_comonoid(o, &b),
        Command::VerifyAdjunction { a, b, z } => c::verify_adjunction(o, &a, &b, &z),
        Command::VerifyCorep { file, rep, functor } => c::verify_corep(o, &file, &rep, functor.into()),
        Command::TensorCorep { file, rep1, rep2 } => c::tensor_corep(o, &file, &rep1, &rep2),
        Command::VerifyPiLaws { field, max_dim } => c::verify_pi_laws(o, field, max_dim),
        Command::VerifyRep { file, rep } => c::verify_rep(o, &file, &rep),
        Command::TensorRep { file, rep1, rep2 } => c::tensor_rep(o, &file, &rep1, &rep2),
        Command::LiftRep { file, rep, functor } => c::lift_rep(o, &file, &rep, functor.into()),
        Command::VerifyLiftMonoidality { file, rep1, rep2, functor } => c::verify_lift_monoidality(o, &file, &rep1, &rep2, functor.into()),
        Command::PosetTable { n } => c::poset_table(o, n),
        Command::FincatSearch { file, category, tie } => c::fincat_search(o, &file, &category, tie.into()),
        Command::Suite { names, all, list } => c::suite(o, &names, all, list),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
