use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rqr::genus::explore;
use rqr::laws::{sweep, verify, Law, SweepConfig, VerifyOptions};
use rqr::{
    alpha_triple, fundamental_negative_unit, jacobi, quartic_symbol_composite, quartic_symbol_two,
    two_squares_composite, Error, FourOneModulus, OddPrime,
};

/// Rational quartic residue symbols and reciprocity-law checks.
#[derive(Debug, Parser)]
#[command(name = "rqr", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a residue symbol.
    Symbol {
        #[command(subcommand)]
        kind: SymbolKind,
    },
    /// Write m = a² + b² with a odd, b even.
    Decompose { m: u64 },
    /// Print the triple A B C with A² = m(B² + C²).
    Alpha { m: u64 },
    /// Print t u with t² − m·u² = −1 minimal.
    Unit { m: u64 },
    /// Check one instance of a law.
    Verify {
        law: Law,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, conflicts_with = "p")]
        n: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Append brute-force recomputations of every side.
        #[arg(long)]
        oracle: bool,
        /// burde: check every representation and sign choice.
        #[arg(long)]
        all_reps: bool,
        /// furuta: also check every two-factor split m = rs.
        #[arg(long)]
        splits: bool,
    },
    /// Check every instance of a law in a range.
    Sweep {
        law: Law,
        #[arg(long)]
        m_max: Option<u64>,
        #[arg(long, alias = "p-max")]
        n_max: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write every report as JSON lines.
        #[arg(long)]
        out: Option<PathBuf>,
        /// ec: use moduli 8·m' instead of odd m.
        #[arg(long)]
        even: bool,
        #[arg(long)]
        all_reps: bool,
        #[arg(long)]
        primes_only: bool,
    },
    /// Splittings of a discriminant and the C4 / totally-real criteria.
    Genus {
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
enum SymbolKind {
    /// (a/n) for odd n > 0.
    Jacobi {
        #[arg(allow_negative_numbers = true)]
        a: i128,
        n: i128,
    },
    /// (a/m)_4 for m a product of primes ≡ 1 mod 4, optionally times 8.
    Quartic {
        #[arg(allow_negative_numbers = true)]
        a: i128,
        m: u64,
    },
    /// (p/2)_4 for p ≡ 1 mod 8.
    Quartic2 { p: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

enum Failure {
    Input(String),
    Internal(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

const MISMATCH: u8 = 2;

fn required(v: Option<u64>, flag: &str) -> Result<u64, Failure> {
    v.ok_or_else(|| Failure::Input(format!("missing required option --{flag}")))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Symbol { kind } => {
            let value = match kind {
                SymbolKind::Jacobi { a, n } => jacobi(a, n)?,
                SymbolKind::Quartic { a, m } => quartic_symbol_composite(a, &FourOneModulus::new(m)?)?.to_i8(),
                SymbolKind::Quartic2 { p } => quartic_symbol_two(OddPrime::new(p)?)?.to_i8(),
            };
            writeln!(out, "{value}")?;
        }
        Command::Decompose { m } => {
            let rep = two_squares_composite(&FourOneModulus::new(m)?)?;
            writeln!(out, "{} {}", rep.a, rep.b)?;
        }
        Command::Alpha { m } => writeln!(out, "{}", alpha_triple(&FourOneModulus::new(m)?)?)?,
        Command::Unit { m } => writeln!(out, "{}", fundamental_negative_unit(&FourOneModulus::new(m)?)?)?,
        Command::Verify {
            law,
            m,
            n,
            p,
            format,
            oracle,
            all_reps,
            splits,
        } => {
            let second = match law {
                Law::Ec | Law::Gauss2 => required(p.or(n), "p")?,
                _ => required(n, "n")?,
            };
            let first = if law == Law::Gauss2 {
                m.unwrap_or(0)
            } else {
                required(m, "m")?
            };
            let report = verify(
                law,
                first,
                second,
                VerifyOptions {
                    oracle,
                    all_reps,
                    splits,
                },
            )?;
            match format {
                Format::Json => writeln!(out, "{}", report.to_json_line())?,
                Format::Table => writeln!(out, "{}", report.to_table_row())?,
            }
            if report.is_mismatch() {
                return Ok(MISMATCH);
            }
        }
        Command::Sweep {
            law,
            m_max,
            n_max,
            jobs,
            out: path,
            even,
            all_reps,
            primes_only,
        } => {
            let (m_max, n_max) = match law {
                Law::Gauss2 => (m_max.unwrap_or(0), required(n_max, "p-max")?),
                Law::Ec => (required(m_max, "m-max")?, required(n_max, "p-max")?),
                _ => {
                    let m_max = required(m_max, "m-max")?;
                    (m_max, n_max.unwrap_or(m_max))
                }
            };
            let cfg = SweepConfig {
                jobs,
                even,
                all_reps,
                primes_only,
                ..SweepConfig::new(law, m_max, n_max)
            };
            let outcome = sweep(&cfg)?;
            if let Some(path) = path {
                let file = File::create(&path)
                    .map_err(|e| Failure::Input(format!("cannot create {}: {e}", path.display())))?;
                let mut file = BufWriter::new(file);
                outcome.write_json_lines(&mut file)?;
                file.flush()?;
            }
            let summary = &outcome.summary;
            writeln!(out, "{}", summary.to_json_line())?;
            for r in &summary.counterexamples {
                writeln!(out, "{}", r.to_json_line())?;
            }
            if summary.mismatched > 0 {
                return Ok(MISMATCH);
            }
            if summary.errors > 0 {
                return Err(Failure::Internal(format!("{} instances failed", summary.errors)));
            }
        }
        Command::Genus { d, format } => {
            let report = explore(d)?;
            match format {
                Format::Json => writeln!(out, "{}", report.to_json_line())?,
                Format::Table => {
                    writeln!(
                        out,
                        "d = {}  prime discriminants {:?}",
                        report.d, report.prime_discriminants
                    )?;
                    for s in &report.splits {
                        let real = match s.scholz_equal {
                            Some(true) => "equal",
                            Some(false) => "differ",
                            None => "-",
                        };
                        writeln!(out, "{:>10} x {:<10} c4={:<5} quartic={real}", s.d1, s.d2, s.is_c4)?;
                    }
                    writeln!(
                        out,
                        "c4_count = {}  real_count = {}",
                        report.c4_count, report.real_count
                    )?;
                }
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Ok(code), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(code),
        (Ok(_), Err(e)) | (Err(Failure::Io(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        (Err(Failure::Input(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Internal(msg)), _) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
