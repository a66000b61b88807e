use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hurwitz_core::polycore::parse_rational;
use hurwitz_core::sequences::generate;
use hurwitz_core::stability::is_weakly_hurwitz;
use hurwitz_core::turan::{build, ExprKind, ExprRequest};
use hurwitz_core::ExactPoly;
use hurwitz_harness::campaign::{emit_reports, run_campaign, CampaignConfig, Tier};
use hurwitz_harness::family::parse_family;
use hurwitz_harness::suites::{run_suite, DEFAULT_SEED, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Exact Turán-expression and weak Hurwitz stability toolkit")]
struct Cli {
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// bell, hermite, chebyshev-t, chebyshev-u, laguerre, legendre, bessel, jensen, type-a, type-h
    #[arg(long)]
    family: String,
    /// Jensen weights γ_0, γ_1, … as comma-separated rationals
    #[arg(long)]
    gamma: Option<String>,
    /// type-a: a,b,c0,c1,…   type-h: a,b,c
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Constant P_0 for type-a / type-h (default 1)
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print P_0, …, P_k of a family
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a Turán expression (extended when --n is given)
    Turan {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        reflect: bool,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide weak Hurwitz stability of a polynomial given as ascending coefficients
    Stability {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Print the full JSON certificate
        #[arg(long)]
        certificate: bool,
    },
    /// Stability campaign over extended Turán expressions
    Campaign {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        reflect: bool,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
        #[arg(long, default_value = "desk")]
        tier: Tier,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Record per-cell wall time (reports are then no longer reproducible)
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification suites
    Verify {
        /// fisk, cheby, thm12, legendre, wronskian, jensen or all
        #[arg(long)]
        suite: String,
    },
}

fn family_spec(f: &FamilyArgs) -> Result<hurwitz_core::SequenceSpec> {
    parse_family(&f.family, f.gamma.as_deref(), f.params.as_deref(), f.p0.as_deref())
}

fn shift_of(s: &Option<String>) -> Result<hurwitz_core::Rational> {
    match s {
        Some(s) => parse_rational(s).with_context(|| format!("bad --shift {s:?}")),
        None => Ok(num_traits::Zero::zero()),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { family, k, format } => {
            let spec = family_spec(&family)?;
            let seq = generate(&spec, k)?;
            match format {
                Format::Text => seq.iter().for_each(|p| println!("{p}")),
                Format::Json => {
                    let polys: Vec<String> = seq.iter().map(ToString::to_string).collect();
                    println!("{}", json!({"family": spec.label(), "k": k, "sequence": polys}));
                }
            }
        }
        Command::Turan { family, k, n, reflect, shift, format } => {
            let spec = family_spec(&family)?;
            let kind = n.map_or(ExprKind::Turan, ExprKind::ExtendedTuran);
            let req = ExprRequest::new(kind, k).reflected(reflect).shifted(shift_of(&shift)?);
            let seq = generate(&spec, req.max_index())?;
            let expr = build(&seq, &req)?;
            match format {
                Format::Text => println!("{expr}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "family": spec.label(),
                        "k": k,
                        "n": n.unwrap_or(1),
                        "reflect": reflect,
                        "shift": req.shift.to_string(),
                        "degree": expr.degree(),
                        "poly": expr.to_string(),
                    })
                ),
            }
        }
        Command::Stability { poly, certificate } => {
            let f: ExactPoly = poly.parse().with_context(|| format!("bad --poly {poly:?}"))?;
            let cert = is_weakly_hurwitz(&f)?;
            if certificate {
                println!(
                    "{}",
                    json!({
                        "verdict": cert.verdict,
                        "degree": cert.degree,
                        "gcd_degree": cert.gcd_degree,
                        "gcd_all_real": cert.gcd_all_real,
                        "p_upper": cert.p_upper,
                        "v_plus": cert.v_plus,
                        "v_minus": cert.v_minus,
                    })
                );
            } else {
                println!("{}", if cert.verdict { "stable" } else { "unstable" });
            }
        }
        Command::Campaign { family, k_max, n_max, reflect, shift, tier, jobs, timing, out } => {
            let mut cfg = CampaignConfig::new(family_spec(&family)?, k_max, n_max);
            cfg.reflect = reflect;
            cfg.shift = shift_of(&shift)?;
            cfg.tier = tier;
            cfg.jobs = jobs;
            cfg.timing = timing;
            let records = run_campaign(&cfg)?;
            emit_reports(&records, &out)?;
            let stable = records.iter().filter(|r| r.verdict).count();
            println!("{} cells, {} stable, written to {}", records.len(), stable, out.display());
            let flagged: Vec<_> = records.iter().filter(|r| r.flagged).collect();
            for r in &flagged {
                println!("COUNTEREXAMPLE CANDIDATE: family={} k={} n={}", r.family, r.k, r.n);
            }
            return Ok(flagged.is_empty());
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITE_NAMES.to_vec() } else { vec![suite.as_str()] };
            let mut all_ok = true;
            for name in names {
                let outcome = run_suite(name, cli.seed)?;
                for note in &outcome.notes {
                    println!("  {note}");
                }
                println!("{}: {}", outcome.name, if outcome.passed { "PASS" } else { "FAIL" });
                all_ok &= outcome.passed;
            }
            return Ok(all_ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
