//! `pnmaps`: command-line access to the pnmaps engines. Results are JSON on
//! standard output; a one-line summary goes to standard error.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pnmaps::algebra::Field;
use pnmaps::parse::{parse_element, parse_field, parse_form, parse_map};
use pnmaps::poly::RationalMap;
use pnmaps::{fixmap, git, resultant, stab, Error, Result};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "pnmaps", version, about = "Exact computations on rational self-maps of projective space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Q, F<p>, or F<p>^<k>[,modulus=<c_0>,...,<c_k>]
    #[arg(long, default_value = "Q")]
    field: String,
    /// Seed for randomized subroutines
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for exhaustive searches
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Copy, Clone, ValueEnum)]
enum MorphismMethod {
    Macaulay,
    BruteForce,
}

#[derive(Copy, Clone, ValueEnum)]
enum StabilizerMethod {
    BruteForce,
    Monomial,
    ModP,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a map has no base points
    IsMorphism {
        map: String,
        #[arg(long, value_enum, default_value = "macaulay")]
        method: MorphismMethod,
        #[command(flatten)]
        common: Common,
    },
    /// Exact Macaulay resultant
    Resultant {
        map: String,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert-Mumford classification by diagonal one-parameter subgroups
    Classify {
        map: String,
        #[command(flatten)]
        common: Common,
    },
    /// Support profiles of the weight chambers
    Chambers {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// A semistable map that is not stable
    WitnessSs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Stabilizer group under conjugation
    Stabilizer {
        map: String,
        #[arg(long, value_enum, default_value = "brute-force")]
        method: StabilizerMethod,
        /// Search over the degree-k extension
        #[arg(long, default_value_t = 1)]
        ext: usize,
        /// Comma-separated primes for the mod-p bound
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Diagonal stabilizer via Smith normal form
    DiagStab {
        map: String,
        #[command(flatten)]
        common: Common,
    },
    /// Fixed-point divisor p*y - q*x of a map of P^1
    Fix {
        map: String,
        #[command(flatten)]
        common: Common,
    },
    /// Basis of the fiber over a fixed divisor
    Fiber {
        divisor: String,
        #[command(flatten)]
        common: Common,
    },
    /// A morphism with the given fixed divisor
    Section {
        divisor: String,
        #[command(flatten)]
        common: Common,
    },
    /// Symmetries of a point configuration given as a binary form
    ConfigStab {
        divisor: String,
        #[arg(long, default_value_t = 1)]
        ext: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Check the coordinate actions on the fibers for d = 2 and d = 3
    VerifyNoether {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        lambda: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn field_and_map(common: &Common, text: &str) -> Result<(Field, RationalMap)> {
    let field = parse_field(&common.field)?;
    Ok((field, parse_map(text, field)?))
}

fn divisor(common: &Common, text: &str) -> Result<fixmap::FixedDivisor> {
    let field = parse_field(&common.field)?;
    fixmap::FixedDivisor::new(parse_form(text, field, 2)?)
}

fn with_map(mut base: Value, phi: &RationalMap) -> Value {
    if let (Value::Object(out), Value::Object(extra)) = (&mut base, render::map(phi)) {
        out.extend(extra);
    }
    base
}

/// Runs a command; returns the JSON result and a human summary.
fn run(command: Command) -> Result<(Value, String)> {
    match command {
        Command::IsMorphism { map, method, common } => {
            let (_, phi) = field_and_map(&common, &map)?;
            let out = match method {
                MorphismMethod::Macaulay => {
                    let verdict = resultant::is_morphism(&phi);
                    json!({ "is_morphism": verdict, "method": "macaulay" })
                }
                MorphismMethod::BruteForce => {
                    let max_ext = (phi.degree() as usize).pow(phi.n() as u32);
                    let root = resultant::brute_force_common_root(&phi, max_ext)?;
                    json!({
                        "is_morphism": root.is_none(),
                        "method": "brute-force",
                        "common_root": root.map(|p| p.to_string()),
                    })
                }
            };
            let summary = format!("is_morphism = {}", out["is_morphism"]);
            Ok((with_map(out, &phi), summary))
        }
        Command::Resultant { map, common } => {
            let (_, phi) = field_and_map(&common, &map)?;
            let value = resultant::resultant_value_seeded(&phi, common.seed)?;
            let summary = format!("Res = {value}");
            Ok((with_map(json!({ "resultant": value.to_string() }), &phi), summary))
        }
        Command::Classify { map, common } => {
            let (_, phi) = field_and_map(&common, &map)?;
            let verdict = git::classify(&phi)?;
            let summary = format!("{}", verdict.status);
            Ok((with_map(render::verdict(&verdict), &phi), summary))
        }
        Command::Chambers { n, d } => {
            let chambers = git::enumerate_chambers(n, d)?;
            let summary = format!("{} chambers for n = {n}, d = {d}", chambers.len());
            let list: Vec<Value> = chambers.iter().map(render::chamber).collect();
            Ok((json!({ "n": n, "d": d, "count": chambers.len(), "chambers": list }), summary))
        }
        Command::WitnessSs { n, d, common } => {
            let field = parse_field(&common.field)?;
            let phi = git::witness_semistable_not_stable(field, n, d)?;
            let nonstrict = git::diagonal_destabilizer(&phi, false)?;
            let strict = git::diagonal_destabilizer(&phi, true)?;
            let out = json!({
                "nonstable_witness": nonstrict.as_ref().map(|w| w.as_slice().to_vec()),
                "unstable_witness": strict.as_ref().map(|w| w.as_slice().to_vec()),
                "semistable_not_stable": nonstrict.is_some() && strict.is_none(),
            });
            Ok((with_map(out, &phi), format!("witness {phi}")))
        }
        Command::Stabilizer { map, method, ext, primes, common } => {
            let (_, phi) = field_and_map(&common, &map)?;
            let out = match method {
                StabilizerMethod::BruteForce => {
                    let mut g = render::group(&stab::brute_force_stabilizer(&phi, ext, common.jobs)?);
                    g["method"] = json!("brute-force");
                    g["ext"] = json!(ext);
                    g
                }
                StabilizerMethod::Monomial => {
                    let mut g = render::group(&stab::monomial_stabilizer(&phi)?);
                    g["method"] = json!("monomial");
                    g
                }
                StabilizerMethod::ModP => {
                    let bound = stab::stabilizer_order_bound_mod_p(&phi, &primes, common.jobs)?;
                    json!({ "method": "mod-p", "primes": primes, "order_bound": bound })
                }
            };
            let summary = match out.get("order") {
                Some(order) => format!("stabilizer order {order}"),
                None => format!("stabilizer order divides {}", out["order_bound"]),
            };
            Ok((with_map(out, &phi), summary))
        }
        Command::DiagStab { map, common } => {
            let (_, phi) = field_and_map(&common, &map)?;
            let s = stab::diagonal_stabilizer(&phi)?;
            let summary = match &s.order_over_closure {
                Some(order) => format!("diagonal stabilizer of order {order}"),
                None => "infinite diagonal stabilizer".to_string(),
            };
            Ok((with_map(render::diagonal(&s), &phi), summary))
        }
        Command::Fix { map, common } => {
            let (_, phi) = field_and_map(&common, &map)?;
            let r = fixmap::fixed_divisor(&phi)?;
            let summary = format!("fixed divisor {}", r.form());
            Ok((with_map(json!({ "divisor": render::form(r.form()) }), &phi), summary))
        }
        Command::Fiber { divisor: text, common } => {
            let basis = fixmap::fiber_basis(&divisor(&common, &text)?)?;
            let summary = format!("fiber of dimension {}", basis.dimension());
            Ok((render::fiber(&basis), summary))
        }
        Command::Section { divisor: text, common } => {
            let r = divisor(&common, &text)?;
            let phi = fixmap::section_from_divisor(&r)?;
            let summary = format!("section {phi}");
            Ok((with_map(json!({ "divisor": render::form(r.form()) }), &phi), summary))
        }
        Command::ConfigStab { divisor: text, ext, common } => {
            let r = divisor(&common, &text)?;
            let g = fixmap::configuration_stabilizer(&r, ext, common.jobs)?;
            let mut out = render::group(&g);
            out["divisor"] = render::form(r.form());
            out["ext"] = json!(ext);
            Ok((out, format!("configuration stabilizer of order {}", g.order())))
        }
        Command::VerifyNoether { d, lambda, common } => {
            let field = parse_field(&common.field)?;
            let lambda = lambda.map(|text| parse_element(&text, field)).transpose()?;
            let report = fixmap::verify_noether_orbits(field, d, lambda.as_ref())?;
            let summary = format!("orbit checks {}", if report.passed() { "PASS" } else { "FAIL" });
            Ok((render::noether(&report), summary))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_guard() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((value, summary)) => {
            println!("{value}");
            eprintln!("{summary}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", render::error(&e));
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
