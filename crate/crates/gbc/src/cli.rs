//! Command-line front end: every computation as a subcommand with
//! plain, CSV, or JSON output.
//!
//! Subcommands:
//!
//! - `triangle`: the coefficient table rows 0..max_n
//! - `closed`: the two-factor closed form of one entry (α′ = 0)
//! - `phi`: a row polynomial
//! - `roots`: the real-rootedness certificate of a row polynomial
//! - `rowsums`: exact ρ(0..max_n)
//! - `qk`: one Q_k form, or all four with a consistency check
//! - `rowsum-series`: the truncated row-sum series, the one decimal output
//!
//! Parameters are passed as a single comma-separated six-tuple in the
//! order (α, β, γ, α′, β′, γ′), each entry an integer or `p/q`.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 precondition
//! violation, 3 consistency-check failure. All output is deterministic,
//! and exact values are always printed as rationals.

use clap::{Parser, Subcommand, ValueEnum};

use crate::closed_form::{gbc_factored, row_sum_series};
use crate::error::Error;
use crate::numeric::Rat;
use crate::poly::Poly;
use crate::qk::{qk_form1, qk_form2, qk_form3, qk_recurrence, QkSpec};
use crate::rowpoly::{certify_all_real, phi};
use crate::triangle::{compute_table, Params};

#[derive(Parser)]
#[command(
    name = "gbc",
    version,
    about = "Generalized binomial coefficient triangles, row polynomials, and the Q_k family in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QkForm {
    /// Iterate the derivative recurrence.
    Rec,
    /// 1 - Σ C(n,j) (1-x)^j x^(n-j).
    #[value(name = "1")]
    One,
    /// The alternating x^r/r sum.
    #[value(name = "2")]
    Two,
    /// (1-x)^(k+1) Σ C(j+k,j) x^j.
    #[value(name = "3")]
    Three,
    /// All four, asserting they agree.
    All,
}

const PARAM_NAMES: [&str; 6] = ["alpha", "beta", "gamma", "alpha'", "beta'", "gamma'"];

fn parse_params(s: &str) -> Result<Params, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 6 {
        return Err(format!(
            "expected 6 comma-separated rationals (alpha,beta,gamma,alpha',beta',gamma'), got {}",
            parts.len()
        ));
    }
    let mut values = Vec::with_capacity(6);
    for (i, part) in parts.iter().enumerate() {
        let trimmed = part.trim();
        let value: Rat = trimmed.parse().map_err(|_| {
            format!(
                "parameter {} ({}): '{}' is not an integer or p/q rational",
                i + 1,
                PARAM_NAMES[i],
                trimmed
            )
        })?;
        values.push(value);
    }
    let mut it = values.into_iter();
    let mut next = || it.next().expect("six values parsed");
    Ok(Params::new(next(), next(), next(), next(), next(), next()))
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficient triangle rows 0..=max_n.
    Triangle {
        #[arg(long, value_parser = parse_params)]
        params: Params,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Evaluate {n||k} as first factor, second factor, product (alpha' = 0 only).
    Closed {
        #[arg(long, value_parser = parse_params)]
        params: Params,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the row polynomial phi_n.
    Phi {
        #[arg(long, value_parser = parse_params)]
        params: Params,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Certify whether phi_n has real zeros only (exact Sturm count).
    Roots {
        #[arg(long, value_parser = parse_params)]
        params: Params,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the exact row sums rho(0)..rho(max_n).
    Rowsums {
        #[arg(long, value_parser = parse_params)]
        params: Params,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print Q_k for Q_0 = 1 - x^n, by one closed form or all of them.
    Qk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = QkForm::All)]
        form: QkForm,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Approximate rho(n) by the truncated series (the one decimal output).
    RowsumSeries {
        #[arg(long, value_parser = parse_params)]
        params: Params,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 400)]
        truncation_j: usize,
        #[arg(long, default_value_t = 192)]
        precision_bits: u32,
        /// Decimal digits printed for the value.
        #[arg(long, default_value_t = 30)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
}

/// Parses arguments and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; only real usage errors
            // take the nonzero path.
            let is_error = e.use_stderr();
            let _ = e.print();
            return if is_error { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            println!("{output}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Consistency(_) => 3,
                _ => 2,
            }
        }
    }
}

fn render_poly(p: &Poly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => p.to_string(),
        OutputFormat::Csv => p.to_coeff_strings().join(","),
        OutputFormat::Json => {
            serde_json::to_string(&p.to_coeff_strings()).expect("strings serialize")
        }
    }
}

fn execute(command: Command) -> Result<String, Error> {
    match command {
        Command::Triangle {
            params,
            max_n,
            format,
        } => {
            let table = compute_table(&params, max_n);
            Ok(match format {
                OutputFormat::Plain => {
                    let lines: Vec<String> = (0..=max_n)
                        .map(|n| {
                            let row = table.row(n).expect("row within depth");
                            row.iter()
                                .map(Rat::to_string)
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect();
                    lines.join("\n")
                }
                OutputFormat::Csv => table.to_csv().trim_end().to_string(),
                OutputFormat::Json => table.to_json(),
            })
        }
        Command::Closed {
            params,
            n,
            k,
            format,
        } => {
            let value = gbc_factored(&params, n, k)?;
            Ok(match format {
                OutputFormat::Plain => format!(
                    "first: {}\nsecond: {}\nproduct: {}",
                    value.first_factor, value.second_factor, value.product
                ),
                OutputFormat::Csv => format!(
                    "{},{},{}",
                    value.first_factor, value.second_factor, value.product
                ),
                OutputFormat::Json => value.to_json(),
            })
        }
        Command::Phi { params, n, format } => Ok(render_poly(&phi(&params, n), format)),
        Command::Roots { params, n, format } => {
            let cert = certify_all_real(&phi(&params, n))?;
            Ok(match format {
                OutputFormat::Plain => format!(
                    "degree: {}\nsquarefree_degree: {}\ndistinct_real_roots: {}\nall_real: {}",
                    cert.degree, cert.squarefree_degree, cert.distinct_real_roots, cert.all_real
                ),
                OutputFormat::Csv => format!(
                    "{},{},{},{}",
                    cert.degree, cert.squarefree_degree, cert.distinct_real_roots, cert.all_real
                ),
                OutputFormat::Json => cert.to_json(),
            })
        }
        Command::Rowsums {
            params,
            max_n,
            format,
        } => {
            let table = compute_table(&params, max_n);
            let sums: Vec<String> = (0..=max_n)
                .map(|n| table.row_sum(n).expect("row within depth").to_string())
                .collect();
            Ok(match format {
                OutputFormat::Plain => sums.join("\n"),
                OutputFormat::Csv => sums.join(","),
                OutputFormat::Json => serde_json::to_string(&sums).expect("strings serialize"),
            })
        }
        Command::Qk { n, k, form, format } => {
            let spec = QkSpec { n, k };
            let poly = match form {
                QkForm::Rec => qk_recurrence(spec),
                QkForm::One => qk_form1(spec),
                QkForm::Two => qk_form2(spec),
                QkForm::Three => qk_form3(spec),
                QkForm::All => {
                    let by_recurrence = qk_recurrence(spec);
                    for (name, candidate) in [
                        ("form 1", qk_form1(spec)),
                        ("form 2", qk_form2(spec)),
                        ("form 3", qk_form3(spec)),
                    ] {
                        if candidate != by_recurrence {
                            return Err(Error::Consistency(format!(
                                "{name} disagrees with the recurrence at n = {n}, k = {k}: {candidate} vs {by_recurrence}"
                            )));
                        }
                    }
                    by_recurrence
                }
            };
            Ok(render_poly(&poly, format))
        }
        Command::RowsumSeries {
            params,
            n,
            truncation_j,
            precision_bits,
            digits,
            format,
        } => {
            let series = row_sum_series(&params, n, truncation_j, precision_bits)?;
            Ok(match format {
                OutputFormat::Plain => format!(
                    "value: {}\ntruncation_j: {}\nprecision_bits: {}\nlast_term: {}",
                    series.value.decimal_string(digits),
                    series.truncation_j,
                    series.precision_bits,
                    series.last_term
                ),
                OutputFormat::Csv => format!(
                    "{},{},{},{}",
                    series.value.decimal_string(digits),
                    series.truncation_j,
                    series.precision_bits,
                    series.last_term
                ),
                OutputFormat::Json => series.to_json(digits),
            })
        }
    }
}
