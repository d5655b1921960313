//! Command-line front end for the exact multilinear matrix calculus.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use multilin_cli::{from_core, json, verify, CliError};

/// Exact products, powers, compositions and norms for graded matrix
/// families, exchanged as JSON files.
#[derive(Parser)]
#[command(name = "multilin", version, about)]
struct Cli {
    /// Cap on stratum weights accepted or produced (defaults to the
    /// MULTILIN_MAX_WEIGHT environment variable, then 6).
    #[arg(long, global = true)]
    max_weight: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Sym,
    Alt,
}

#[derive(Subcommand)]
enum Command {
    /// Graded product of two symmetric stratum matrices.
    Odot {
        a: PathBuf,
        b: PathBuf,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signed product of two antisymmetric stratum matrices.
    Wedge {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normalized graded power A^(k)/k! of a symmetric stratum matrix.
    SymPower {
        a: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k-th compound (normalized wedge power) of a weight-(1,1) matrix.
    WedgePower {
        a: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Composition of two polynomial maps (first applied last).
    Compose {
        phi: PathBuf,
        psi: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite a polynomial map under output and (inverse) input
    /// coordinate changes.
    ChangeVars {
        map: PathBuf,
        s: PathBuf,
        t_inv: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairing product of two multilinear maps.
    Mlprod {
        #[arg(long, value_enum)]
        kind: MapKind,
        a: PathBuf,
        b: PathBuf,
        c: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hölder norm of an antisymmetric stratum matrix.
    Norm {
        a: PathBuf,
        #[arg(long)]
        rho: f64,
    },
    /// Run every property suite with a fixed seed and print the report.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cap = weight_cap(cli.max_weight)?;
    match cli.command {
        Command::Odot { a, b, out } => {
            let a = read_sym(&a, cap)?;
            let b = read_sym(&b, cap)?;
            let result = a.odot(&b).map_err(from_core)?;
            check_weights("result", result.p(), result.p_prime(), cap)?;
            emit(out.as_deref(), &json::sym_matrix_to_json(&result))?;
        }
        Command::Wedge { a, b, out } => {
            let a = read_alt(&a, cap)?;
            let b = read_alt(&b, cap)?;
            let result = a.wedge(&b).map_err(from_core)?;
            check_weights("result", result.p(), result.p_prime(), cap)?;
            emit(out.as_deref(), &json::alt_matrix_to_json(&result))?;
        }
        Command::SymPower { a, k, out } => {
            let a = read_sym(&a, cap)?;
            check_weights("--k", k * a.p(), k * a.p_prime(), cap)?;
            let result = a.sym_power(k).map_err(from_core)?;
            emit(out.as_deref(), &json::sym_matrix_to_json(&result))?;
        }
        Command::WedgePower { a, k, out } => {
            let a = read_alt(&a, cap)?;
            check_weights("--k", k, k, cap)?;
            let result = a.compound(k).map_err(from_core)?;
            emit(out.as_deref(), &json::alt_matrix_to_json(&result))?;
        }
        Command::Compose { phi, psi, out } => {
            let phi = read_polymap(&phi, cap)?;
            let psi = read_polymap(&psi, cap)?;
            check_weights("composite degree", 1, phi.degree() * psi.degree(), cap)?;
            let result = phi.compose(&psi).map_err(from_core)?;
            emit(out.as_deref(), &json::polymap_to_json(&result))?;
        }
        Command::ChangeVars { map, s, t_inv, out } => {
            let map = read_polymap(&map, cap)?;
            let s = read_polymap(&s, cap)?;
            let t_inv = read_polymap(&t_inv, cap)?;
            let bound = s.degree() * map.degree() * t_inv.degree().max(1);
            check_weights("composite degree", 1, bound, cap)?;
            let result = map.change_of_variables(&s, &t_inv).map_err(from_core)?;
            emit(out.as_deref(), &json::polymap_to_json(&result))?;
        }
        Command::Mlprod { kind, a, b, c, out } => {
            let c = json::parse_bilinear(&read_file(&c)?)?;
            match kind {
                MapKind::Sym => {
                    let a = json::parse_sym_multimap(&read_file(&a)?)?;
                    let b = json::parse_sym_multimap(&read_file(&b)?)?;
                    check_weights("result arity", 1, a.arity() + b.arity(), cap)?;
                    let result =
                        multilin::multilinear::product_sym(&a, &b, &c).map_err(from_core)?;
                    emit(out.as_deref(), &json::sym_multimap_to_json(&result))?;
                }
                MapKind::Alt => {
                    let a = json::parse_alt_multimap(&read_file(&a)?)?;
                    let b = json::parse_alt_multimap(&read_file(&b)?)?;
                    check_weights("result arity", 1, a.arity() + b.arity(), cap)?;
                    let result =
                        multilin::multilinear::product_alt(&a, &b, &c).map_err(from_core)?;
                    emit(out.as_deref(), &json::alt_multimap_to_json(&result))?;
                }
            }
        }
        Command::Norm { a, rho } => {
            let a = read_alt(&a, cap)?;
            let params = multilin::NormParams::new(rho)
                .map_err(|_| CliError::Schema(format!("--rho: {rho} is not >= 1")))?;
            let value = multilin::norm::holder_norm(&a, params).map_err(from_core)?;
            println!("{value}");
        }
        Command::Verify { seed } => {
            let results = verify::run_all(seed);
            print!("{}", verify::render_report(seed, &results));
            if results.iter().any(|r| !r.ok()) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn weight_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("MULTILIN_MAX_WEIGHT") {
        Ok(text) => text.parse().map_err(|_| {
            CliError::Schema(format!(
                "MULTILIN_MAX_WEIGHT: cannot parse \"{text}\" as a weight"
            ))
        }),
        Err(_) => Ok(6),
    }
}

fn check_weights(what: &str, p: usize, p_prime: usize, cap: usize) -> Result<(), CliError> {
    if p > cap || p_prime > cap {
        return Err(CliError::Schema(format!(
            "{what}: stratum weight {} exceeds the cap {cap} (raise --max-weight or \
             MULTILIN_MAX_WEIGHT)",
            p.max(p_prime)
        )));
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(CliError::Io)
}

fn read_sym(path: &Path, cap: usize) -> Result<multilin::SymMatrix, CliError> {
    let m = json::parse_sym_matrix(&read_file(path)?)?;
    check_weights("p/p_prime", m.p(), m.p_prime(), cap)?;
    Ok(m)
}

fn read_alt(path: &Path, cap: usize) -> Result<multilin::AltMatrix, CliError> {
    let m = json::parse_alt_matrix(&read_file(path)?)?;
    check_weights("p/p_prime", m.p(), m.p_prime(), cap)?;
    Ok(m)
}

fn read_polymap(path: &Path, cap: usize) -> Result<multilin::PolyMap, CliError> {
    let m = json::parse_polymap(&read_file(path)?)?;
    check_weights("degree", 1, m.degree(), cap)?;
    Ok(m)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
