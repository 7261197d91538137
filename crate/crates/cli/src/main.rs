mod cmd;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use m4cyclic::metrics::DEFAULT_SEED;
use m4cyclic::rring::ConjMode;

use report::Format;

/// Cyclic codes over M4(F2[u]/u^k): factor, build, dualize, certify.
#[derive(Parser, Debug)]
#[command(name = "m4cyclic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputArgs {
    /// Emit a JSON report.
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated rows.
    #[arg(long, global = true)]
    tsv: bool,
}

impl OutputArgs {
    fn format(self) -> Format {
        match (self.json, self.tsv) {
            (true, _) => Format::Json,
            (_, true) => Format::Tsv,
            _ => Format::Human,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct CodeInput {
    /// Length n (odd).
    #[arg(long)]
    pub n: Option<usize>,
    /// Nilpotency index k of u.
    #[arg(long)]
    pub k: Option<usize>,
    /// Generator expression; repeat for several generators.
    #[arg(long = "gen")]
    pub gens: Vec<String>,
    /// Construction profile (JSON) instead of expressions.
    #[arg(long, conflicts_with = "gens")]
    pub profile: Option<PathBuf>,
    /// Seed for the randomized distance probes.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConjArg {
    Power,
    Coeff,
}

impl From<ConjArg> for ConjMode {
    fn from(c: ConjArg) -> ConjMode {
        match c {
            ConjArg::Power => ConjMode::RingPower,
            ConjArg::Coeff => ConjMode::Coefficient,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible factors of x^n - 1 over GF(16), in index order.
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Build a code and certify its parameters.
    Build {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Dual generators with an orthogonality and size check.
    Dual {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        hermitian: bool,
        #[arg(long, value_enum, default_value_t = ConjArg::Coeff)]
        conj_mode: ConjArg,
    },
    /// Minimum distance only.
    Mindist {
        #[command(flatten)]
        input: CodeInput,
        /// Enumerate every codeword instead of the certified search.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Rebuild the bundled example tables and diff them.
    Reproduce {
        /// 1..4 or all.
        #[arg(long, default_value = "all")]
        example: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run fixed-seed invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Profiles checked by the core suite; repeatable.
        #[arg(long)]
        profile: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Die quietly on a closed pipe (`m4cyclic ... | head`) instead of panicking in `println!`.
fn default_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() -> ExitCode {
    default_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let fmt = cli.out.format();
    let result = match cli.command {
        Command::Factor { n } => cmd::factor(n, fmt),
        Command::Build { input } => cmd::build(&input, fmt),
        Command::Dual { input, hermitian, conj_mode } => cmd::dual(&input, hermitian, conj_mode.into(), fmt),
        Command::Mindist { input, exhaustive } => cmd::mindist(&input, exhaustive, fmt),
        Command::Reproduce { example, seed } => cmd::reproduce(&example, seed, fmt),
        Command::Verify { suite, profile, seed } => cmd::verify(&suite, &profile, seed, fmt),
    };
    match result {
        Ok(cmd::Outcome::Ok) => ExitCode::SUCCESS,
        Ok(cmd::Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
