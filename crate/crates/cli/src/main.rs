mod failure;
mod report;
mod verify;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pferrer::ideal::{alexander_dual_with, ferrer_ideal};
use pferrer::invariants::{cm_dual_pure_type, num_variables, pure_codim2_betti, scaled_resolution_type, PureCodim2};
use pferrer::macaulay::realize_mvector;
use pferrer::series::{dual_betti_relation_holds, dual_series, hilbert_series_linear, hilbert_series_monomial_with};
use pferrer::{Limits, MVector, PFerrerPartition};
use serde_json::{json, Value};

use failure::Failure;

#[derive(Parser)]
#[command(name = "pferrer", version, about = "Invariants of p-Ferrer diagrams and their monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report: profile, Betti numbers, series, primes.
    Report {
        /// Diagram JSON file, or - for stdin.
        path: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        /// Include the arithmetical-rank certificate.
        #[arg(long)]
        certificate: bool,
    },
    /// Checks the closed formulas against brute-force oracles.
    Verify {
        path: String,
        /// Degree up to which standard monomials are counted.
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        /// Shuffles the oracle's reduction order.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Hilbert series of S/I.
    Series {
        path: String,
        /// Also print this many Taylor coefficients past degree 0.
        #[arg(long)]
        taylor: Option<usize>,
    },
    /// Alexander dual and its Hilbert series.
    Dual { path: String },
    /// Realizes an M-vector by a diagram whose dual has that h-vector.
    Macaulay {
        /// Comma-separated, starting with 1.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        h: Vec<u64>,
    },
    /// Pure resolutions in codimension 2, or scaled duals of full diagrams.
    Pure(PureArgs),
}

#[derive(Args)]
struct PureArgs {
    #[arg(long, requires = "a2", conflicts_with_all = ["c", "p", "alpha"])]
    a1: Option<u64>,
    #[arg(long, requires = "a1")]
    a2: Option<u64>,
    #[arg(long, requires = "a1")]
    beta0: Option<u64>,
    #[arg(long, requires = "p", required_unless_present = "a1")]
    c: Option<u64>,
    #[arg(long, requires = "c")]
    p: Option<u64>,
    #[arg(long, requires = "c")]
    alpha: Option<u64>,
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn load(path: &str, limits: &Limits) -> Result<PFerrerPartition, Failure> {
    Ok(PFerrerPartition::parse_with(&read_input(path)?, limits)?)
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn run(cli: Cli, limits: &Limits) -> Result<String, Failure> {
    match cli.command {
        Command::Report { path, text, certificate, .. } => {
            let phi = load(&path, limits)?;
            let doc = report::build(&phi, limits, certificate)?;
            Ok(if text { report::render_text(&doc) } else { pretty(&doc) })
        }
        Command::Verify { path, max_degree, seed } => {
            let phi = load(&path, limits)?;
            verify::run(&phi, limits, max_degree, seed)
        }
        Command::Series { path, taylor } => {
            let phi = load(&path, limits)?;
            series(&phi, limits, taylor).map(|v| pretty(&v))
        }
        Command::Dual { path } => {
            let phi = load(&path, limits)?;
            dual(&phi, limits).map(|v| pretty(&v))
        }
        Command::Macaulay { h } => {
            let realization = realize_mvector(&MVector::new(h)?)?;
            if !realization.verified {
                return Err(Failure::Mismatch(format!(
                    "the dual h-vector {:?} differs from the input",
                    realization.dual_h_vector
                )));
            }
            Ok(pretty(&serde_json::to_value(&realization).expect("serializable")))
        }
        Command::Pure(args) => pure(args).map(|v| pretty(&v)),
    }
}

fn series(phi: &PFerrerPartition, limits: &Limits, taylor: Option<usize>) -> Result<Value, Failure> {
    let profile = phi.diagonal_profile();
    let ideal = ferrer_ideal(phi);
    let n = ideal.ambient().len();
    let d = n - profile.df;
    let linear = hilbert_series_linear(profile.df as u64, profile.p as u64, &profile.tail(), d);
    let monomial = hilbert_series_monomial_with(&ideal, limits)?;
    if monomial != linear {
        return Err(Failure::Mismatch(format!("formula gives {linear}, the ideal gives {monomial}")));
    }
    let mut doc = json!({
        "input": phi.to_json(),
        "n": n,
        "c": profile.df,
        "p": profile.p,
        "d": d,
        "s_vector": profile.tail(),
        "series": linear.to_string(),
        "linear_form": linear.format_at(d),
        "h_vector": linear.numerator(),
        "denom_exponent": linear.denom_exponent(),
    });
    if let Some(k) = taylor {
        // same encoding as the numerator: numbers, strings beyond i64
        let coeffs: Vec<Value> = linear
            .taylor(k)
            .iter()
            .map(|c| i64::try_from(c).map_or_else(|_| json!(c.to_string()), |v| json!(v)))
            .collect();
        doc["taylor"] = Value::Array(coeffs);
    }
    Ok(doc)
}

fn dual(phi: &PFerrerPartition, limits: &Limits) -> Result<Value, Failure> {
    let profile = phi.diagonal_profile();
    let ideal = ferrer_ideal(phi);
    let n = ideal.ambient().len();
    let dual = alexander_dual_with(&ideal, limits)?;
    let (primal_series, dual_formula) = dual_series(profile.df as u64, profile.p as u64, &profile.tail(), n);
    let dual_computed = hilbert_series_monomial_with(&dual, limits)?;
    if dual_computed != dual_formula {
        return Err(Failure::Mismatch(format!(
            "dual series formula gives {dual_formula}, the dual ideal gives {dual_computed}"
        )));
    }
    if !dual_betti_relation_holds(&primal_series, &dual_formula, n) {
        return Err(Failure::Mismatch("B_J(t) ≠ 1 − B_I(1 − t)".into()));
    }
    Ok(json!({
        "input": phi.to_json(),
        "n": n,
        "variables_used": num_variables(phi),
        "dual_generators": dual.generator_strings(),
        "series": primal_series.to_string(),
        "dual_series": dual_formula.to_string(),
        "dual_h_vector": dual_formula.numerator(),
        "betti_relation": true,
    }))
}

fn pure(args: PureArgs) -> Result<Value, Failure> {
    if let (Some(a1), Some(a2)) = (args.a1, args.a2) {
        let beta0 = args.beta0.unwrap_or(1);
        if a1 == 0 || a1 >= a2 || beta0 == 0 {
            return Err(Failure::Input(format!("need 0 < a1 < a2 and β0 ≥ 1, got ({a1}, {a2}, {beta0})")));
        }
        return match pure_codim2_betti(a1, a2, beta0) {
            PureCodim2::Feasible { beta1, beta2, factorization } => Ok(json!({
                "type": [0, a1, a2],
                "betti": [beta0, beta1, beta2],
                "factorization": factorization.map(|(c, alpha)| json!({"c": c, "alpha": alpha})),
            })),
            PureCodim2::Infeasible => Err(Failure::Infeasible(format!(
                "no pure resolution of type (0,{a1},{a2}) with β0 = {beta0}: β1 = {}/{} is not an integer",
                a2 * beta0,
                a2 - a1
            ))),
        };
    }
    let (c, p) = (args.c.unwrap_or(0), args.p.unwrap_or(0));
    let alpha = args.alpha.unwrap_or(1);
    if c == 0 || p == 0 || alpha == 0 {
        return Err(Failure::Input(format!("need c, p, α ≥ 1, got ({c}, {p}, {alpha})")));
    }
    let (degrees, betti) = cm_dual_pure_type(c, p);
    let (scaled, betti) = scaled_resolution_type(&degrees, &betti, alpha);
    Ok(json!({ "c": c, "p": p, "alpha": alpha, "type": scaled, "betti": betti }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = Limits::from_env()
        .map_err(|e| Failure::Input(format!("{}: {e}", pferrer::limits::LIMITS_ENV)))
        .and_then(|limits| run(cli, &limits));
    match outcome {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(stdout) = failure.stdout() {
                emit(stdout);
            }
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

/// Writes to stdout, ignoring a reader that went away (`| head`).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}
