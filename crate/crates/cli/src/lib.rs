//! Front end for `floer-core`: argument parsing, report rendering and the
//! verification suite.

mod checks;
mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use checks::{check_names, run_suite, CheckResult, SuiteReport};

/// Largest genus accepted on the command line.
pub const MAX_GENUS: u32 = 10;

/// Exit status for success, a failed check, and a usage or I/O error.
pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "floer", version, about = "Exact computations in the invariant Floer ring of Σ_g × S¹")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Relations R_g, reduced Gröbner basis and standard monomials of J_g.
    Present(GenusArg),
    /// Certified joint spectrum of α, β, γ on ℂ[α,β,γ]/J_g.
    Spectrum(GenusArg),
    /// Local decomposition into joint generalized eigenspaces.
    Decompose(GenusArg),
    /// Sp-decomposition dimension table of the full Floer group.
    Table(GenusArg),
    /// Eigenspace dimensions against symmetric-product Betti numbers.
    Conjecture(GenusArg),
    /// Run every check for genera 1..=max-genus.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct GenusArg {
    #[arg(value_name = "GENUS", conflicts_with = "genus")]
    positional: Option<u32>,
    #[arg(long)]
    genus: Option<u32>,
}

impl GenusArg {
    pub fn new(genus: u32) -> Self {
        GenusArg { positional: Some(genus), genus: None }
    }

    fn value(&self) -> Option<u32> {
        self.positional.or(self.genus)
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    pub max_genus: u32,
    /// Report per-check wall-clock times (makes output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Rendered report, or an error message for standard error, plus exit
/// status.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub error: Option<String>,
    pub status: u8,
}

impl Outcome {
    fn report(output: String, status: u8) -> Self {
        Outcome { output, error: None, status }
    }

    fn error(message: String, status: u8) -> Self {
        Outcome { output: String::new(), error: Some(message), status }
    }
}

fn checked_genus(arg: &GenusArg) -> Result<u32, String> {
    let g = arg.value().ok_or("a genus is required, positionally or via --genus")?;
    if g == 0 || g > MAX_GENUS {
        return Err(format!("genus {g} out of range 1..={MAX_GENUS}"));
    }
    Ok(g)
}

/// Runs one command. Usage errors come back as status 2 with the message
/// as output; internal errors as status 1.
pub fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    let result = match &cli.command {
        Command::Verify(v) => {
            if v.max_genus == 0 || v.max_genus > MAX_GENUS {
                return Outcome::error(format!("max genus {} out of range 1..={MAX_GENUS}", v.max_genus), EXIT_USAGE);
            }
            let report = run_suite(v.max_genus);
            let status = if report.all_passed() { EXIT_OK } else { EXIT_FAILED };
            return Outcome::report(render::suite(&report, format, v.timings), status);
        }
        Command::Present(a) => checked_genus(a).map(|g| render::present(g, format)),
        Command::Spectrum(a) => checked_genus(a).map(|g| render::spectrum(g, format)),
        Command::Decompose(a) => checked_genus(a).map(|g| render::decompose(g, format)),
        Command::Table(a) => checked_genus(a).map(|g| render::table(g, format)),
        Command::Conjecture(a) => checked_genus(a).map(|g| render::conjecture(g, format)),
    };
    match result {
        Err(usage) => Outcome::error(usage, EXIT_USAGE),
        Ok(Ok(output)) => Outcome::report(output, EXIT_OK),
        Ok(Err(e)) => Outcome::error(e.to_string(), EXIT_FAILED),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("floer").chain(args.iter().copied()))
    }

    #[test]
    fn genus_forms() {
        for args in [&["table", "3"][..], &["table", "--genus", "3"]] {
            let cli = parse(args).unwrap();
            let Command::Table(g) = &cli.command else { panic!("wrong command") };
            assert_eq!(checked_genus(g), Ok(3));
        }
        assert!(parse(&["table", "3", "--genus", "4"]).is_err());
        assert!(checked_genus(&GenusArg::new(MAX_GENUS + 1)).is_err());
    }

    #[test]
    fn verify_defaults() {
        let cli = parse(&["verify"]).unwrap();
        let Command::Verify(v) = &cli.command else { panic!("wrong command") };
        assert_eq!((v.max_genus, v.timings), (5, false));
        assert_eq!(cli.format, Format::Text);
        assert!(parse(&["verify", "--format", "json", "--out", "x.json"]).is_ok());
    }

    #[test]
    fn check_names_are_unique() {
        let mut names = check_names();
        let n = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn usage_status() {
        let cli = parse(&["present", "0"]).unwrap();
        let out = run(&cli);
        assert_eq!(out.status, EXIT_USAGE);
        assert!(out.output.is_empty() && out.error.is_some());
    }
}
