//! `whp` command line: argument parsing, JSON/CSV output and exit codes.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a check or verification
//! that ran and failed (including root-finder non-convergence).

pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use whp_core::algebra::numbers::{parse_rational, parse_rational_list};
use whp_core::appell::{factor_p, wronskian_appell, AppellSpec, Method};
use whp_core::asymptotics::{coeff_in_k, psi, zeros_p, ZeroDataset};
use whp_core::characters::{character_mn_oracle, character_path_sum, CharacterQuery};
use whp_core::hermite::{subleading_by_content, subleading_by_quotient, wronskian_hermite};
use whp_core::identity::identity_check;
use whp_core::laguerre::{
    hermite_laguerre_sides, hermite_omega_sides, omega_polynomial, wronskian_laguerre,
    LaguerreWronskianQuery,
};
use whp_core::maya::to_maya;
use whp_core::quotient::{core_and_quotient_2, core_and_quotient_p};
use whp_core::{Partition, WhpError};

use output::{envelope, int, int_poly, partition, poly, rat, rat_poly};

#[derive(Parser, Debug)]
#[command(
    name = "whp",
    version,
    about = "Wronskian Hermite polynomials, cores and quotients"
)]
struct Cli {
    /// JSON is always emitted; the flag is accepted for scripts that pass it.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size, hooks, contents, degree vector and path count of a partition.
    PartitionInfo {
        partition: String,
        #[arg(long)]
        show_maya: bool,
    },
    /// p-core and p-quotient; p = 2 also reports (μ, ν, k).
    CoreQuotient {
        partition: String,
        #[arg(long, default_value_t = 2)]
        p: usize,
    },
    /// The Wronskian Hermite polynomial He_λ.
    Hermite {
        partition: String,
        #[arg(long, default_value = "recurrence")]
        method: String,
    },
    /// R_λ with He_λ(x) = x^{k(k+1)/2} R_λ(x²).
    Remainder { partition: String },
    /// Wronskian of an Appell sequence: the p-family or a generic z-sequence.
    Appell {
        partition: String,
        #[arg(long, conflicts_with = "z")]
        p: Option<usize>,
        /// z_1,z_2,... as comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long)]
        method: Option<String>,
    },
    /// Character of λ at cycle type (p^j, 1^{n-pj}) by two routes.
    Character {
        partition: String,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
    },
    /// R_λ against its Laguerre Wronskian forms.
    LaguerreCheck { partition: String },
    /// L̂_{μ,ν}^{(α)}, or Ω̂_{μ,ν}^{(α)} with --omega.
    Laguerre {
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        omega: bool,
    },
    /// Ψ_{μ,ν} as a polynomial in the core length k.
    Psi {
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
    },
    /// Coefficient r_j of R_{Φ(μ,ν,k)} as a polynomial in k.
    CoeffPoly {
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, default_value = "")]
        nu: String,
        #[arg(long)]
        j: usize,
    },
    /// Numerical zeros of He_λ (or q_λ for --p).
    Zeros {
        partition: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Both sides of the rational identity at the given points.
    Identity {
        #[arg(long, allow_hyphen_values = true)]
        xs: String,
    },
    /// Runs every invariant suite within the given bounds.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        p: Vec<usize>,
        /// Include wall-clock times in the report.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<WhpError> for Failure {
    fn from(e: WhpError) -> Self {
        match e {
            WhpError::NonConvergence { .. } => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// A command's JSON and whether the checks it performed held.
struct Outcome {
    value: Value,
    ok: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Partition::parse(text).map_err(Failure::from)
}

fn parse_method(text: &str) -> Result<Method, Failure> {
    text.parse().map_err(Failure::from)
}

/// Parses `argv` (program name first), runs the command, writes JSON to
/// stdout and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let name = command_name(&cli.command);
    match execute(cli.command) {
        Ok(outcome) => {
            let body = envelope(name, outcome.value);
            let text = serde_json::to_string_pretty(&body).expect("JSON values serialize");
            let _ = writeln!(out, "{text}");
            if outcome.ok {
                0
            } else {
                let _ = writeln!(err, "whp {name}: check failed");
                2
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "whp {name}: {msg}");
            1
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "whp {name}: {msg}");
            2
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::PartitionInfo { .. } => "partition-info",
        Command::CoreQuotient { .. } => "core-quotient",
        Command::Hermite { .. } => "hermite",
        Command::Remainder { .. } => "remainder",
        Command::Appell { .. } => "appell",
        Command::Character { .. } => "character",
        Command::LaguerreCheck { .. } => "laguerre-check",
        Command::Laguerre { .. } => "laguerre",
        Command::Psi { .. } => "psi",
        Command::CoeffPoly { .. } => "coeff-poly",
        Command::Zeros { .. } => "zeros",
        Command::Identity { .. } => "identity",
        Command::Verify { .. } => "verify",
    }
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::PartitionInfo {
            partition: text,
            show_maya,
        } => {
            let lam = parse_partition(&text)?;
            let hooks = lam.hook_table();
            let mut v = json!({
                "partition": partition(&lam),
                "size": lam.size(),
                "length": lam.length(),
                "conjugate": partition(&lam.conjugate()),
                "self_conjugate": lam.is_self_conjugate(),
                "degree_vector": lam.degree_vector(),
                "hooks": hooks.hooks,
                "contents": hooks.contents,
                "hook_product": int(&lam.hook_product()),
                "content_sum": lam.content_sum(),
                "path_count": int(&lam.path_count()),
            });
            if show_maya {
                let m = to_maya(&lam, 0);
                v["maya"] = json!({ "filled": m.filled(), "diagram": m.render() });
            }
            Ok(Outcome::ok(v))
        }
        Command::CoreQuotient { partition: text, p } => {
            let lam = parse_partition(&text)?;
            if p < 2 {
                return Err(Failure::Usage("--p must be at least 2".into()));
            }
            if p == 2 {
                let q = core_and_quotient_2(&lam);
                Ok(Outcome::ok(json!({
                    "partition": partition(&lam),
                    "p": 2,
                    "core": partition(&q.core()),
                    "core_size": q.core_size(),
                    "k": q.k,
                    "mu": partition(&q.mu),
                    "nu": partition(&q.nu),
                    "weight": q.weight(),
                })))
            } else {
                let q = core_and_quotient_p(&lam, p);
                Ok(Outcome::ok(json!({
                    "partition": partition(&lam),
                    "p": p,
                    "core": partition(&q.core),
                    "core_size": q.core.size(),
                    "components": q.components.iter().map(partition).collect::<Vec<_>>(),
                    "beads": q.beads,
                    "weight": q.weight(),
                })))
            }
        }
        Command::Hermite {
            partition: text,
            method,
        } => {
            let lam = parse_partition(&text)?;
            let m = parse_method(&method)?;
            let he = wronskian_hermite(&lam, m);
            Ok(Outcome::ok(json!({
                "partition": partition(&lam),
                "method": m.name(),
                "polynomial": int_poly(&he),
            })))
        }
        Command::Remainder { partition: text } => {
            let lam = parse_partition(&text)?;
            let f = factor_p(2, &lam);
            let q = core_and_quotient_2(&lam);
            let sub = |r: whp_core::Result<BigInt>| r.ok().map(|v| int(&v)).unwrap_or(Value::Null);
            Ok(Outcome::ok(json!({
                "partition": partition(&lam),
                "k": q.k,
                "mu": partition(&q.mu),
                "nu": partition(&q.nu),
                "origin_multiplicity": f.core_size,
                "remainder": int_poly(&f.remainder),
                "constant": int(&f.constant()),
                "h_parity": f.h_parity(),
                "subleading_by_content": sub(subleading_by_content(&lam)),
                "subleading_by_quotient": sub(subleading_by_quotient(&lam)),
            })))
        }
        Command::Appell {
            partition: text,
            p,
            z,
            method,
        } => {
            let lam = parse_partition(&text)?;
            let (spec, default_method) = match (p, z) {
                (_, Some(z)) => (
                    AppellSpec::Generic(parse_rational_list(&z)?),
                    Method::Determinant,
                ),
                (Some(p), None) => (AppellSpec::PFamily(p), Method::Recurrence),
                (None, None) => return Err(Failure::Usage("give --p P or --z z1,z2,...".into())),
            };
            let m = match method {
                Some(text) => parse_method(&text)?,
                None => default_method,
            };
            let poly_value = wronskian_appell(&spec, &lam, m)?;
            let mut v = json!({
                "partition": partition(&lam),
                "method": m.name(),
                "polynomial": rat_poly(&poly_value),
            });
            match spec {
                AppellSpec::PFamily(p) => {
                    let f = factor_p(p, &lam);
                    v["p"] = json!(p);
                    v["core"] = partition(&f.core);
                    v["origin_multiplicity"] = json!(f.core_size);
                    v["remainder"] = int_poly(&f.remainder);
                }
                AppellSpec::Generic(z) => {
                    v["z"] = json!(z.iter().map(|q| q.to_string()).collect::<Vec<_>>());
                }
            }
            Ok(Outcome::ok(v))
        }
        Command::Character {
            partition: text,
            j,
            p,
        } => {
            let lam = parse_partition(&text)?;
            let q = CharacterQuery::new(lam.clone(), p, j)?;
            let a = character_path_sum(&q);
            let b = character_mn_oracle(&q);
            Ok(Outcome {
                ok: a == b,
                value: json!({
                    "partition": partition(&lam),
                    "p": p,
                    "j": j,
                    "cycle_type": q.cycle_type(),
                    "value": int(&a),
                    "border_strip_value": int(&b),
                    "equal": a == b,
                }),
            })
        }
        Command::LaguerreCheck { partition: text } => {
            let lam = parse_partition(&text)?;
            let l = hermite_laguerre_sides(&lam);
            let o = hermite_omega_sides(&lam);
            let ok = l.holds() && o.holds();
            Ok(Outcome {
                ok,
                value: json!({
                    "partition": partition(&lam),
                    "alpha_k": rat(&l.alpha),
                    "equal": l.holds(),
                    "lhs": rat_poly(&l.lhs),
                    "rhs": rat_poly(&l.rhs),
                    "omega": {
                        "alpha": rat(&o.alpha),
                        "equal": o.holds(),
                        "rhs": rat_poly(&o.rhs),
                    },
                }),
            })
        }
        Command::Laguerre {
            mu,
            nu,
            alpha,
            omega,
        } => {
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let a = parse_rational(&alpha)?;
            let (kind, poly_value) = if omega {
                ("omega", omega_polynomial(&mu, &nu, &a))
            } else {
                let q = LaguerreWronskianQuery::new(mu.clone(), nu.clone(), a.clone())?;
                ("laguerre", wronskian_laguerre(&q))
            };
            Ok(Outcome::ok(json!({
                "kind": kind,
                "mu": partition(&mu),
                "nu": partition(&nu),
                "alpha": rat(&a),
                "polynomial": rat_poly(&poly_value),
            })))
        }
        Command::Psi { mu, nu } => {
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let ps = psi(&mu, &nu);
            Ok(Outcome::ok(json!({
                "mu": partition(&mu),
                "nu": partition(&nu),
                "polynomial": poly(&ps.poly, "k"),
            })))
        }
        Command::CoeffPoly { mu, nu, j } => {
            let mu = parse_partition(&mu)?;
            let nu = parse_partition(&nu)?;
            let c = coeff_in_k(&mu, &nu, j)?;
            Ok(Outcome::ok(json!({
                "mu": partition(&mu),
                "nu": partition(&nu),
                "j": j,
                "polynomial": poly(&c, "k"),
            })))
        }
        Command::Zeros {
            partition: text,
            tol,
            p,
            csv,
        } => {
            let lam = parse_partition(&text)?;
            let data = zeros_p(&lam, p, tol)?;
            if let Some(path) = csv {
                write_csv(&path, &data)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(Outcome::ok(zeros_json(&data)))
        }
        Command::Identity { xs } => {
            let values = parse_rational_list(&xs)?;
            let (l, r) = identity_check(&values)?;
            Ok(Outcome {
                ok: l == r,
                value: json!({
                    "xs": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "lhs": rat(&l),
                    "rhs": rat(&r),
                    "equal": l == r,
                }),
            })
        }
        Command::Verify {
            max_size,
            seed,
            p,
            timings,
        } => {
            let report = verify::verify(max_size, &p, seed).map_err(Failure::Usage)?;
            Ok(Outcome {
                ok: report.total_failures() == 0,
                value: report.to_json(timings),
            })
        }
    }
}

fn zeros_json(d: &ZeroDataset) -> Value {
    let mut v = json!({
        "partition": partition(&d.lambda),
        "p": d.p,
        "origin_multiplicity": d.origin_multiplicity,
        "total": d.total(),
        "zeros": d.zeros.iter().map(|z| json!({"re": z.re, "im": z.im, "multiplicity": z.multiplicity})).collect::<Vec<_>>(),
    });
    if let Some(s) = &d.strings {
        v["strings"] = json!({
            "mu": partition(&s.mu),
            "nu": partition(&s.nu),
            "k": s.k,
            "threshold": s.threshold,
            "above_threshold": s.above_threshold,
        });
    }
    v
}

/// Columns `re,im,multiplicity`; the origin, when present, is the first row.
fn write_csv(path: &PathBuf, d: &ZeroDataset) -> std::io::Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(f, "re,im,multiplicity")?;
    if d.origin_multiplicity > 0 {
        writeln!(f, "0,0,{}", d.origin_multiplicity)?;
    }
    for z in &d.zeros {
        writeln!(f, "{:e},{:e},{}", z.re, z.im, z.multiplicity)?;
    }
    f.flush()
}
