mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use muinv::mu_involutions::Hasse;
use muinv::schubert_mu::{
    count_reduced_mu_words, mu_grothendieck, mu_schubert, refinement_expand, span_membership,
    transition_multiplicity_free, transition_sets,
};
use muinv::verify::{run_suite, Suite, SweepOptions};
use muinv::{Composition, MuInvolution, MultiPolynomial, Permutation};
use serde_json::json;

#[derive(Parser)]
#[command(name = "muinv", version, about = "Atoms, orders and Schubert polynomials of μ-involutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Weak,
    Strong,
}

#[derive(clap::Args)]
struct Target {
    /// Blocked one-line notation such as 651|3|742 (commas between values when n ≥ 10).
    pi: String,
    /// Composition such as 3,1,3; overrides the blocks written in PI.
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// μ-atoms and inverse μ-atoms.
    Atoms {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hasse diagram of the μ-Bruhat order; weak covers in black, the rest in red.
    Poset {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The μ-involution Schubert polynomial.
    Schubert {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The μ-involution Grothendieck polynomial.
    Grothendieck {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Transition equation for (x_i + x_j)·𝔖^μ, or x_i·𝔖^μ when J is omitted.
    Transition {
        #[command(flatten)]
        target: Target,
        i: usize,
        j: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expansion of 𝔖^μ_π over a refinement ν.
    Expand {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        nu: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Oracle sweeps; exits with 1 when any check fails.
    Verify {
        /// atoms, transition, exchange, refinement, endpoints, grothendieck, roundtrip or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Random transition instances at max-n + 1.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Number of reduced μ-words.
    CountWords {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// ℤ-span membership of x_var·𝔖^μ_π (or 𝔖^μ_π) among all 𝔖^μ_σ.
    SpanCheck {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        var: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_composition(text: &str) -> Result<Composition, Failure> {
    text.parse().map_err(|e| usage(format!("--mu {text:?}: {e}")))
}

/// Parses blocked one-line notation. With `mu`, unbarred one-line text is
/// cut into blocks by `mu`; barred text must already match it.
fn parse_mu_involution(text: &str, mu: Option<&str>) -> Result<MuInvolution, Failure> {
    let bad = |e: muinv::Error| usage(format!("{text:?}: {e}"));
    let Some(mu) = mu else { return text.parse().map_err(bad) };
    let mu = parse_composition(mu)?;
    if text.contains('|') {
        let pi: MuInvolution = text.parse().map_err(bad)?;
        if pi.mu() != &mu {
            return Err(usage(format!("{text:?} has blocks {} but --mu is {mu}", pi.mu())));
        }
        return Ok(pi);
    }
    let perm: Permutation = text.parse().map_err(bad)?;
    MuInvolution::new(perm, mu).map_err(bad)
}

fn target(t: &Target) -> Result<MuInvolution, Failure> {
    parse_mu_involution(&t.pi, t.mu.as_deref())
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(usage("--format dot is only available for poset"))
    } else {
        Ok(())
    }
}

fn to_json(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).unwrap()
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Atoms { target: t, format } => {
            no_dot(format)?;
            let pi = target(&t)?;
            Ok(match format {
                Format::Json => to_json(json!({
                    "pi": pi.to_string(),
                    "mu": pi.mu().parts(),
                    "cycles": pi.cycle_string(),
                    "ell_mu": pi.ell_mu().total,
                    "inverse_atoms": pi.inverse_atoms().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    "atoms": pi.atoms().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                })),
                _ => render::atoms_text(&pi),
            })
        }
        Command::Poset { mu, n, mode, format } => {
            let mu = parse_composition(&mu)?;
            if let Some(n) = n {
                if n != mu.n() {
                    return Err(usage(format!("--n {n} does not match --mu {mu}")));
                }
            }
            let hasse = Hasse::build(&mu);
            let weak_only = mode == Mode::Weak;
            Ok(match format {
                Format::Dot => render::poset_dot(&hasse, weak_only),
                Format::Json => render::poset_json(&hasse, weak_only),
                Format::Text => render::poset_text(&hasse, weak_only),
            })
        }
        Command::Schubert { target: t, format } => {
            no_dot(format)?;
            let pi = target(&t)?;
            Ok(render::polynomial(&pi, "schubert", &mu_schubert(&pi), format == Format::Json))
        }
        Command::Grothendieck { target: t, format } => {
            no_dot(format)?;
            let pi = target(&t)?;
            Ok(render::polynomial(&pi, "grothendieck", &mu_grothendieck(&pi), format == Format::Json))
        }
        Command::Transition { target: t, i, j, format } => {
            no_dot(format)?;
            let tau = target(&t)?;
            let j = j.unwrap_or(i);
            let sets = transition_sets(&tau, i, j).map_err(usage)?;
            let lhs = sets.lhs();
            let rhs = sets.rhs();
            let multiplicity_free = transition_multiplicity_free(&tau, i, j).map_err(usage)?;
            let out = if format == Format::Json {
                to_json(render::transition_json(&sets, &lhs, &rhs, multiplicity_free))
            } else {
                render::transition_text(&sets, lhs == rhs)
            };
            if lhs == rhs && multiplicity_free {
                Ok(out)
            } else {
                Err(Failure::Check(out))
            }
        }
        Command::Expand { target: t, nu, format } => {
            no_dot(format)?;
            let pi = target(&t)?;
            let nu = parse_composition(&nu)?;
            let parts = refinement_expand(&pi, &nu).map_err(usage)?;
            let sum = parts.iter().fold(MultiPolynomial::zero(pi.n().max(1)), |acc, s| &acc + &mu_schubert(s));
            let holds = sum == mu_schubert(&pi);
            let out = if format == Format::Json {
                to_json(json!({
                    "pi": pi.to_string(),
                    "nu": nu.parts(),
                    "terms": parts.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "identity_holds": holds,
                }))
            } else {
                let terms: Vec<String> = parts.iter().map(|s| format!("S[{s}]")).collect();
                format!("S[{pi}] = {}\nidentity: {}", terms.join(" + "), if holds { "holds" } else { "FAILS" })
            };
            if holds {
                Ok(out)
            } else {
                Err(Failure::Check(out))
            }
        }
        Command::Verify { suite, max_n, samples, seed, format } => {
            no_dot(format)?;
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                suite.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>().map_err(usage)?
            };
            if max_n == 0 || max_n > 7 {
                return Err(usage("--max-n must be between 1 and 7"));
            }
            let opts = SweepOptions { max_n, samples, seed };
            let reports: Vec<_> = suites.iter().map(|&s| run_suite(s, &opts)).collect();
            let out = if format == Format::Json {
                serde_json::to_string_pretty(&reports).unwrap()
            } else {
                render::verify_text(&reports)
            };
            if reports.iter().all(|r| r.passed) {
                Ok(out)
            } else {
                Err(Failure::Check(out))
            }
        }
        Command::CountWords { target: t, format } => {
            no_dot(format)?;
            let pi = target(&t)?;
            let count = count_reduced_mu_words(&pi);
            Ok(if format == Format::Json {
                to_json(json!({ "pi": pi.to_string(), "reduced_words": count.to_string() }))
            } else {
                count.to_string()
            })
        }
        Command::SpanCheck { target: t, var, format } => {
            no_dot(format)?;
            let pi = target(&t)?;
            let n = pi.n().max(1);
            let s = mu_schubert(&pi);
            let f = match var {
                Some(i) if i == 0 || i > n => return Err(usage(format!("--var {i} outside 1..={n}"))),
                Some(i) => &MultiPolynomial::var(n, i) * &s,
                None => s,
            };
            let member = span_membership(&f, pi.mu()).map_err(usage)?;
            let what = match var {
                Some(i) => format!("x{i}*S[{pi}]"),
                None => format!("S[{pi}]"),
            };
            Ok(if format == Format::Json {
                to_json(json!({ "polynomial": what, "mu": pi.mu().parts(), "in_span": member }))
            } else {
                format!("{what} in Z-span over {}: {member}", pi.mu())
            })
        }
    }
}

/// A closed pipe (as with `| head`) is not an error.
fn emit(out: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            emit(&out);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
