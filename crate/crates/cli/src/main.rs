//! Command-line interface: exact minimal log discrepancies, witness
//! divisors, bounds, the lattice oracle, family generators and a
//! verification driver.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use newton_mld::io::{
    coefficient_set_from_json, expected_from_json, expected_to_json, instance_from_json,
    instance_to_json, oracle_to_json, witness_to_dto, witness_to_json, Expected, Instance,
};
use newton_mld::sample::{random_rideal, SplitMix64};
use newton_mld::{
    bound_minus_inf, bound_nonneg, brute_force_oracle, full_solve_with, gamma_of, log_discrepancy,
    minimal_computing_logdisc, rat, rat_int, CoefficientSet, Divisor, MldValue, NewtonPolygon,
    RIdeal, WitnessResult,
};

#[derive(Parser)]
#[command(
    name = "newton-mld",
    version,
    about = "Exact minimal log discrepancies of monomial R-ideals on the affine plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact minimal log discrepancy ("-inf" or a rational)
    Mld {
        /// Instance file (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Emit {"mld": ...} instead of the bare value
        #[arg(long)]
        json: bool,
    },
    /// Print the witness divisor with its log discrepancy and bound
    Witness {
        #[arg(long)]
        input: PathBuf,
        /// Plain-text lines instead of JSON
        #[arg(long)]
        text: bool,
    },
    /// Print e, gamma and both bound values for a coefficient set or instance
    Bound {
        /// Coefficient file {"I": [...]} or instance file
        #[arg(long)]
        input: PathBuf,
    },
    /// Print e, gamma and a witnessing combination for a coefficient set
    Gamma {
        /// Coefficient file {"I": [...]}
        #[arg(long)]
        input: PathBuf,
    },
    /// Enumerate all divisors within a taxicab radius
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        radius: u64,
        /// Plain-text summary instead of JSON
        #[arg(long)]
        text: bool,
    },
    /// Generate a named family instance together with its expected values
    Family {
        /// Family kind: ex15 (needs n >= 2) or ex16 (needs n >= 1)
        kind: String,
        n: u64,
        /// Write <kind>_n<N>.instance.json and .expected.json here instead
        /// of printing to stdout
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Re-derive witnesses and check them against the oracle
    Verify {
        /// Instance file; may be repeated
        #[arg(long)]
        input: Vec<PathBuf>,
        /// Expected-values file (only with a single --input)
        #[arg(long)]
        expected: Option<PathBuf>,
        /// Verify this many random instances instead of files
        #[arg(long)]
        random: Option<u64>,
        /// Seed for --random (default 0)
        #[arg(long)]
        seed: Option<u64>,
        /// One JSON object per line instead of text
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_instance(path: &Path) -> Result<Instance, String> {
    instance_from_json(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn solve(instance: &Instance) -> Result<WitnessResult, String> {
    let set = instance.coefficient_set().map_err(|e| e.to_string())?;
    full_solve_with(&instance.rideal, &set).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Mld { input, json } => {
            let instance = load_instance(&input)?;
            let result = solve(&instance)?;
            if json {
                println!("{{\"mld\":\"{}\"}}", result.mld);
            } else {
                println!("{}", result.mld);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { input, text } => {
            let instance = load_instance(&input)?;
            let result = solve(&instance)?;
            if text {
                let dto = witness_to_dto(&result);
                println!("mld = {}", dto.mld);
                println!("divisor = ({}, {})", dto.divisor[0], dto.divisor[1]);
                println!("logdisc = {}", dto.logdisc);
                println!("bound = {}", dto.bound);
                println!("case = {}", dto.case);
            } else {
                println!("{}", witness_to_json(&result));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { input } => {
            let text = read_file(&input)?;
            let set = coefficient_set_for_bounds(&input, &text)?;
            let g = gamma_of(&set);
            let nonneg = bound_nonneg(&g.e, &g.gamma).map_err(|e| e.to_string())?;
            let minus_inf = bound_minus_inf(&g.e, &g.gamma).map_err(|e| e.to_string())?;
            println!(
                "{{\"e\":\"{}\",\"gamma\":\"{}\",\"nonneg\":{},\"minus_inf\":{}}}",
                g.e, g.gamma, nonneg, minus_inf
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma { input } => {
            let set = coefficient_set_from_json(&read_file(&input)?)
                .map_err(|e| format!("{}: {e}", input.display()))?;
            println!("{}", newton_mld::io::gamma_to_json(&gamma_of(&set)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            input,
            radius,
            text,
        } => {
            let instance = load_instance(&input)?;
            let poly = NewtonPolygon::of_rideal(&instance.rideal).map_err(|e| e.to_string())?;
            let report = brute_force_oracle(&poly, radius).map_err(|e| e.to_string())?;
            if text {
                println!(
                    "radius {}: min {} at {} divisor(s), negative: {}",
                    report.radius,
                    report.min_value,
                    report.argmins.len(),
                    report.any_negative
                );
            } else {
                println!("{}", oracle_to_json(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { kind, n, out_dir } => {
            let (instance, expected) = build_family(&kind, n)?;
            let instance_json = instance_to_json(&instance);
            let expected_json = expected_to_json(&expected);
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                    let stem = format!("{kind}_n{n}");
                    let inst_path = dir.join(format!("{stem}.instance.json"));
                    let exp_path = dir.join(format!("{stem}.expected.json"));
                    fs::write(&inst_path, instance_json)
                        .map_err(|e| format!("{}: {e}", inst_path.display()))?;
                    fs::write(&exp_path, expected_json)
                        .map_err(|e| format!("{}: {e}", exp_path.display()))?;
                    println!("{}", inst_path.display());
                    println!("{}", exp_path.display());
                }
                None => {
                    println!(
                        "{{\"instance\":{},\"expected\":{}}}",
                        serde_json::to_string(
                            &serde_json::from_str::<serde_json::Value>(&instance_json).unwrap()
                        )
                        .unwrap(),
                        serde_json::to_string(
                            &serde_json::from_str::<serde_json::Value>(&expected_json).unwrap()
                        )
                        .unwrap()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            expected,
            random,
            seed,
            json,
        } => verify(input, expected, random, seed.unwrap_or(0), json),
    }
}

/// `bound` accepts either a coefficient file or an instance file; instances
/// contribute their declared set or their exponents.
fn coefficient_set_for_bounds(path: &Path, text: &str) -> Result<CoefficientSet, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("{}: {e}", path.display()))?;
    if value.get("I").is_some() {
        coefficient_set_from_json(text).map_err(|e| format!("{}: {e}", path.display()))
    } else {
        let instance = instance_from_json(text).map_err(|e| format!("{}: {e}", path.display()))?;
        instance.coefficient_set().map_err(|e| e.to_string())
    }
}

fn build_family(kind: &str, n: u64) -> Result<(Instance, Expected), String> {
    match kind {
        "ex15" => {
            if n < 2 {
                return Err("family ex15 needs n >= 2".into());
            }
            let e = rat(1, (n - 1) as i64) + rat(1, (n * n) as i64);
            let rideal =
                RIdeal::single(vec![(n * n, 0), (0, n - 1)], e).map_err(|e| e.to_string())?;
            let bound = n * n + n - 1;
            let expected = Expected {
                mld: MldValue::Finite(rat(0, 1)),
                witness: Divisor::new(n - 1, n * n).map_err(|e| e.to_string())?,
                minimal_logdisc: bound,
                bound,
            };
            Ok((Instance::new(rideal), expected))
        }
        "ex16" => {
            if n < 1 {
                return Err("family ex16 needs n >= 1".into());
            }
            let rideal = RIdeal::single(vec![(n * n + n + 1, 0), (0, n + 1)], rat(1, n as i64))
                .map_err(|e| e.to_string())?;
            let bound = (n + 1) * (n + 1) + 1;
            let expected = Expected {
                mld: MldValue::MinusInfinity,
                witness: Divisor::new(n + 1, n * n + n + 1).map_err(|e| e.to_string())?,
                minimal_logdisc: bound,
                bound,
            };
            Ok((Instance::new(rideal), expected))
        }
        other => Err(format!(
            "unknown family kind {other:?}, expected ex15 or ex16"
        )),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct VerifyReport {
    id: String,
    status: String,
    mld: String,
    divisor: [u64; 2],
    logdisc: u64,
    bound: u64,
    oracle_min_logdisc: u64,
}

const STATUS_OK: &str = "OK";
const STATUS_BOUND: &str = "BOUND_VIOLATION";
const STATUS_MISMATCH: &str = "MLD_MISMATCH";

/// Re-derives the witness, runs the oracle at the bound radius, and compares
/// against the optional expected values.
fn check_instance(
    id: &str,
    instance: &Instance,
    expected: Option<&Expected>,
) -> Result<VerifyReport, String> {
    let result = solve(instance)?;
    let poly = NewtonPolygon::of_rideal(&instance.rideal).map_err(|e| e.to_string())?;
    let (oracle_min_logdisc, _) =
        minimal_computing_logdisc(&poly, result.bound).map_err(|e| e.to_string())?;

    let mut status = STATUS_OK;
    if result.logdisc > result.bound {
        status = STATUS_BOUND;
    } else {
        let witness_value = log_discrepancy(&poly, &result.divisor);
        let consistent = match &result.mld {
            MldValue::Finite(value) => {
                let report = brute_force_oracle(&poly, result.bound).map_err(|e| e.to_string())?;
                &witness_value == value && &report.min_value == value
            }
            MldValue::MinusInfinity => witness_value < rat_int(0),
        };
        if !consistent {
            status = STATUS_MISMATCH;
        } else if let Some(exp) = expected {
            let matches = exp.mld == result.mld
                && exp.witness == result.divisor
                && exp.minimal_logdisc == oracle_min_logdisc
                && exp.bound == result.bound;
            if !matches {
                status = STATUS_MISMATCH;
            }
        }
    }
    Ok(VerifyReport {
        id: id.to_string(),
        status: status.to_string(),
        mld: result.mld.to_string(),
        divisor: [result.divisor.x(), result.divisor.y()],
        logdisc: result.logdisc,
        bound: result.bound,
        oracle_min_logdisc,
    })
}

fn verify(
    inputs: Vec<PathBuf>,
    expected: Option<PathBuf>,
    random: Option<u64>,
    seed: u64,
    json: bool,
) -> Result<ExitCode, String> {
    let mut work: Vec<(String, Instance, Option<Expected>)> = Vec::new();
    match random {
        Some(count) => {
            if !inputs.is_empty() || expected.is_some() {
                return Err("--random cannot be combined with --input/--expected".into());
            }
            let width = count.to_string().len().max(4);
            let mut rng = SplitMix64::new(seed);
            for k in 0..count {
                let rideal = random_rideal(&mut rng);
                work.push((
                    format!("random-{seed}-{k:0width$}"),
                    Instance::new(rideal),
                    None,
                ));
            }
        }
        None => {
            if inputs.is_empty() {
                return Err("verify needs --input FILE or --random N".into());
            }
            if expected.is_some() && inputs.len() != 1 {
                return Err("--expected requires exactly one --input".into());
            }
            let expected = match expected {
                Some(path) => Some(
                    expected_from_json(&read_file(&path)?)
                        .map_err(|e| format!("{}: {e}", path.display()))?,
                ),
                None => None,
            };
            for (k, path) in inputs.iter().enumerate() {
                let instance = load_instance(path)?;
                let exp = if k == 0 { expected.clone() } else { None };
                work.push((path.display().to_string(), instance, exp));
            }
        }
    }

    let pool = thread_pool()?;
    let results: Vec<Result<VerifyReport, String>> = pool.install(|| {
        use rayon::prelude::*;
        work.par_iter()
            .map(|(id, instance, expected)| check_instance(id, instance, expected.as_ref()))
            .collect()
    });

    let mut all_ok = true;
    for result in results {
        let report = result?;
        if report.status != STATUS_OK {
            all_ok = false;
        }
        if json {
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
        } else {
            println!(
                "{}: {} mld={} divisor=({},{}) logdisc={} bound={} oracle_min={}",
                report.id,
                report.status,
                report.mld,
                report.divisor[0],
                report.divisor[1],
                report.logdisc,
                report.bound,
                report.oracle_min_logdisc
            );
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Builds the worker pool, capped by MLD_NEWTON_THREADS when set.
fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var("MLD_NEWTON_THREADS") {
        let threads: usize = raw
            .parse()
            .map_err(|_| format!("MLD_NEWTON_THREADS must be a positive integer, got {raw:?}"))?;
        if threads == 0 {
            return Err("MLD_NEWTON_THREADS must be a positive integer".into());
        }
        builder = builder.num_threads(threads);
    }
    builder.build().map_err(|e| e.to_string())
}

#[test]
fn family_values_match_the_solver() {
    for n in 2..=6 {
        let (instance, expected) = build_family("ex15", n).unwrap();
        let result = solve(&instance).unwrap();
        assert_eq!(result.mld, expected.mld);
        assert_eq!(result.divisor, expected.witness);
        assert_eq!(result.bound, expected.bound);
    }
    for n in 1..=6 {
        let (instance, expected) = build_family("ex16", n).unwrap();
        let result = solve(&instance).unwrap();
        assert_eq!(result.mld, expected.mld);
        assert_eq!(result.divisor, expected.witness);
        assert_eq!(result.bound, expected.bound);
    }
    assert!(build_family("ex15", 1).is_err());
    assert!(build_family("ex99", 3).is_err());
}
