//! `cyclokit`: exact cyclotomic arithmetic from the command line.
//!
//! Exit status: 0 on success or an affirmative answer, 1 when the answer is
//! a certified negative, 2 for input or domain errors, 3 when an internal
//! consistency check fails.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cyclokit", version, about = "Exact arithmetic for cyclotomic polynomials and numerical semigroups")]
struct Cli {
    /// Print a JSON envelope `{command, result}` instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The cyclotomic polynomial Φ_N.
    Phi {
        n: u64,
        /// Print ascending coefficients instead of the polynomial.
        #[arg(long, conflicts_with = "poly")]
        coeffs: bool,
        /// Print the polynomial (default).
        #[arg(long)]
        poly: bool,
        /// Write `index,coefficient` CSV to this file.
        #[arg(long, value_name = "FILE")]
        dump_coeffs: Option<PathBuf>,
        /// Allow φ(N) above one million.
        #[arg(long)]
        force: bool,
    },
    /// The coefficient a_N(K) of x^K in Φ_N.
    Coeff {
        n: u64,
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// The Ramanujan sum r_K(N).
    Ramanujan { k: u64, n: u64 },
    /// The Jordan totient J_K(N).
    Jordan { k: u32, n: u64 },
    /// B_K^+, or B_K^- with --minus.
    Bernoulli {
        k: usize,
        #[arg(long)]
        minus: bool,
    },
    /// Stirling numbers s(K,J) (kind 1) or {K,J} (kind 2).
    Stirling {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        k: usize,
        j: usize,
    },
    /// Bell polynomials at rational arguments.
    Bellpoly {
        #[command(subcommand)]
        which: BellCommand,
    },
    /// Higher logarithmic derivatives (log f)^(K) at a point.
    Logderiv(LogderivArgs),
    /// The Schwarzian derivative of Φ_N at 1.
    Schwarzian { n: u64 },
    /// Cyclotomic factorization or a Kronecker certificate.
    Kronecker {
        #[command(subcommand)]
        action: KroneckerCommand,
    },
    /// Numerical semigroups given by generators.
    Semigroup {
        #[command(subcommand)]
        action: SemigroupCommand,
    },
    /// The family f_k = 1 − x + x^k − x^{2k−1} + x^{2k}.
    Fk {
        #[command(subcommand)]
        action: FkCommand,
    },
    /// A symmetric, non-cyclotomic semigroup with Frobenius number F.
    FrobeniusFamily { f: i64 },
    /// The coefficient table c_{k,j} or the f_k factorization table.
    Tables {
        #[command(subcommand)]
        which: TableCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Moller,
    Recurrence,
    Bell,
    Taylor1,
    All,
}

#[derive(Subcommand)]
enum BellCommand {
    /// ℬ_{K,J}(x_1, …).
    Partial {
        k: usize,
        j: usize,
        /// Comma-separated rationals x_1,x_2,…
        #[arg(long, allow_hyphen_values = true)]
        args: String,
    },
    /// ℬ_K(x_1, …, x_K).
    Complete {
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        args: String,
    },
}

#[derive(Args)]
struct LogderivArgs {
    #[command(subcommand)]
    target: LogderivTarget,
    /// `0`, `1`, `-1` or any rational.
    #[arg(long, global = true, allow_hyphen_values = true, default_value = "1")]
    at: String,
    #[arg(long, global = true, default_value_t = 1)]
    order: usize,
    /// Also compute by the quotient-rule oracle and fail on mismatch.
    #[arg(long, global = true)]
    check_oracle: bool,
}

#[derive(Subcommand)]
enum LogderivTarget {
    /// Φ_N.
    Phi { n: u64 },
    /// Ψ_N = (x^N − 1)/Φ_N.
    Invphi { n: u64 },
    /// Any integer polynomial, e.g. "x^2 - 3*x + 1" or "1,-3,1".
    Poly {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolySource {
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum KroneckerCommand {
    /// x^e0 · ∏ Φ_d^e_d · remainder.
    Factor(PolySource),
    /// Decide Kronecker or not, with a checkable certificate.
    Certify(PolySource),
}

#[derive(Args)]
struct Gens {
    /// Comma-separated generators, e.g. 5,6,7,8.
    #[arg(long)]
    gens: String,
}

#[derive(Subcommand)]
enum SemigroupCommand {
    /// Generators, gaps, Frobenius number and other invariants.
    Info(Gens),
    Symmetric(Gens),
    Cyclotomic(Gens),
    /// The semigroup polynomial P_S.
    Polynomial(Gens),
}

#[derive(Subcommand)]
enum FkCommand {
    /// Multiplicities of Φ_6, Φ_10, Φ_12 in f_K.
    Gcd { k: usize },
    Certify { k: usize },
    /// Checked rows for 1 ≤ k ≤ MAX.
    Sweep {
        #[arg(long)]
        max: usize,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// Rows 1..=MAX of c_{k,j}.
    C {
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Factorizations of f_k for 1 ≤ k ≤ MAX.
    Factorization {
        #[arg(long, default_value_t = 18)]
        max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).filter(|a| a != "--json").collect::<Vec<_>>().join(" ");
    let status = match commands::run(cli.command) {
        Ok(report) => {
            report.print(&echo, cli.json);
            report.status
        }
        Err(err) => report::print_error(&echo, cli.json, &err),
    };
    ExitCode::from(status as u8)
}
