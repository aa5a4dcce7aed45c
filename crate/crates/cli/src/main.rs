use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use confalg::cohom::Repr;
use confalg_cli::{execute, CliError, Command, Format, Options};

/// Verify λ-bracket structures declared in `.cfa` files.
#[derive(Parser)]
#[command(name = "confalg", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Seed for sampled checks; required by `dsq`, `phi` and module checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Abort (exit 3) once an intermediate polynomial exceeds this many terms.
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Fmt::Text)]
    format: Fmt,
    /// Report wall-clock time; reports are no longer byte-stable.
    #[arg(long, global = true)]
    timing: bool,
    /// Restrict cochain checks to one representation.
    #[arg(long, global = true, value_enum)]
    repr: Option<ReprArg>,
    /// Number of random samples per family.
    #[arg(long, global = true)]
    samples: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReprArg {
    Quotient,
    Basic,
    Reduced,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the axioms of a declared object.
    Check {
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Evaluate a bracket of two expressions.
    Bracket {
        name: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Kähler LCAd of a PVA, or Kähler Lie algebroid of a Poisson algebra.
    Kahler {
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Current LCAd of a Lie algebroid.
    Current {
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Lie algebroid quotient of an LCAd.
    Quotient {
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Symmetric algebra PVA of an LCAd.
    Sae {
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Semidirect product of an LCAd with a free module.
    Semidirect {
        name: String,
        module: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Differential of a declared cochain.
    D {
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// d∘d = 0 on degree-k basis and sampled cochains.
    Dsq {
        name: String,
        module: String,
        k: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// The chain isomorphism between PVA and Kähler LCAd cochains.
    Phi {
        name: String,
        module: String,
        k: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Cocycle identities and the abelian extension they define.
    Extension {
        name: String,
        module: String,
        cocycle: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Lie algebroid → current LCAd → quotient, or the jet/Kähler square.
    Roundtrip {
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

impl Cmd {
    fn split(self) -> (Command, Vec<PathBuf>) {
        match self {
            Cmd::Check { name, files } => (Command::Check(name), files),
            Cmd::Bracket { name, f, g, files } => (Command::Bracket(name, f, g), files),
            Cmd::Kahler { name, files } => (Command::Kahler(name), files),
            Cmd::Current { name, files } => (Command::Current(name), files),
            Cmd::Quotient { name, files } => (Command::Quotient(name), files),
            Cmd::Sae { name, files } => (Command::Sae(name), files),
            Cmd::Semidirect { name, module, files } => (Command::Semidirect(name, module), files),
            Cmd::D { name, files } => (Command::D(name), files),
            Cmd::Dsq { name, module, k, files } => (Command::Dsq(name, module, k), files),
            Cmd::Phi { name, module, k, files } => (Command::Phi(name, module, k), files),
            Cmd::Extension { name, module, cocycle, files } => (Command::Extension(name, module, cocycle), files),
            Cmd::Roundtrip { name, files } => (Command::Roundtrip(name), files),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.max_terms {
        confalg::diffalg::set_max_terms(n);
    }
    let opts = Options {
        seed: cli.seed,
        repr: cli.repr.map(|r| match r {
            ReprArg::Quotient => Repr::Quotient,
            ReprArg::Basic => Repr::Basic,
            ReprArg::Reduced => Repr::Reduced,
        }),
        samples: cli.samples,
    };
    let format = match cli.format {
        Fmt::Text => Format::Text,
        Fmt::Json => Format::Json,
    };
    let (cmd, paths) = cli.cmd.split();
    let mut files = Vec::new();
    for p in paths {
        match std::fs::read_to_string(&p) {
            Ok(src) => files.push((p.display().to_string(), src)),
            Err(e) => {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
    }
    match execute(&files, &cmd, &opts, format, cli.timing) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::exit_code(&e) as u8)
        }
    }
}
