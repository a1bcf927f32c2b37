//! `shilov` — inspect bounded symmetric domains, distinguish their Shilov
//! boundaries, and verify the classification over a bounded sweep.
//!
//! Exit status: 0 on success/verified, 1 on usage or parse errors, 2 when a
//! verification sweep fails, 3 when a distinguish call is inconclusive.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shilov::{
    distinguish, explain, find_coincidences, invariant_vector, lie_sphere_bundle_trivial,
    shilov_model, verify_theorem, Certificate, DomainSpec, Irreducible,
};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "shilov",
    version,
    about = "Homotopy invariants of Shilov boundaries of bounded symmetric domains",
    after_help = "Domain specs use the grammar FAMILY[(params)] with `x` between product \
                  factors, e.g. \"I(3,2)\", \"IV(6)\", \"I(1,1) x I(4,1)\". Families: I(p,q) \
                  with p >= q >= 1, II(n) with n >= 5, III(n) with n >= 2, IV(n) with n >= 5, \
                  V, VI."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show dimensions, rank, boundary model and the invariant vector of a domain
    Info {
        /// Domain spec, e.g. "I(3,2)" or "I(1,1) x I(4,1)"
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Omit the citation anchors from the output
        #[arg(long)]
        no_cite: bool,
    },
    /// Certify which invariant separates two domains' Shilov boundaries
    Distinguish {
        spec1: String,
        spec2: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        no_cite: bool,
    },
    /// Pairwise-separate all canonical irreducible domains up to a dimension bound
    Verify {
        /// Largest ambient (real) dimension to enumerate
        #[arg(long, default_value_t = 400)]
        max_dim: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Hunt for products whose recorded invariants collide with another domain
    Coincidences {
        #[arg(long, default_value_t = 20)]
        max_dim: u64,
        /// Maximum number of irreducible factors per product
        #[arg(long, default_value_t = 2)]
        factors: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_spec(text: &str) -> Result<DomainSpec, u8> {
    DomainSpec::parse(text).map_err(|e| {
        eprintln!("error: cannot parse '{text}': {e}");
        EXIT_USAGE
    })
}

fn cmd_info(spec: &str, format: Format, cite: bool) -> Result<u8, u8> {
    let domain = parse_spec(spec)?;
    let model = shilov_model(&domain);
    let vector = invariant_vector(&domain);
    let sphere_bundle_trivial = match domain.as_irreducible() {
        Some(&Irreducible::IV { n }) => Some(lie_sphere_bundle_trivial(n)),
        _ => None,
    };
    match format {
        Format::Json => {
            let doc = json!({
                "domain": domain.to_string(),
                "ambient_dim": domain.ambient_dim(),
                "rank": domain.rank(),
                "tube_class": domain.tube_class().ok().map(|c| c.to_string()),
                "factors": domain.factors().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "shilov_model": model.to_string(),
                "shilov_dim": model.dim(),
                "lie_sphere_bundle_trivial": sphere_bundle_trivial,
                "invariants": vector.to_json(cite),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
        Format::Text => {
            println!("domain:       {domain}");
            println!("ambient dim:  {}", domain.ambient_dim());
            println!("rank:         {}", domain.rank());
            match domain.tube_class() {
                Ok(class) => println!("class:        {class} type"),
                Err(_) => println!(
                    "class:        product of {} irreducible factors",
                    domain.factors().len()
                ),
            }
            println!("boundary:     {model}");
            println!("boundary dim: {}", model.dim());
            println!("invariants:");
            println!("  pi1:            {}", vector.pi1);
            println!("  pi2 nonzero:    {}", vector.pi2_nonzero);
            println!("  pi9 nonzero:    {}", vector.pi9_nonzero);
            println!("  torsion-free:   {}", vector.h_torsion_free);
            println!("  orientable:     {}", vector.orientable);
            if let Some(trivial) = sphere_bundle_trivial {
                println!(
                    "  sphere bundle:  {} over S^1",
                    if trivial { "trivial" } else { "non-trivial" }
                );
            }
            match &vector.cover_poincare {
                Some(p) => println!("  cover ({}): {p}", vector.cover_kind),
                None => println!("  cover:          unavailable"),
            }
            if cite {
                println!("citations:");
                for c in &vector.citations {
                    println!("  [{}] {}", c.subject, c.anchor);
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_distinguish(spec1: &str, spec2: &str, format: Format, cite: bool) -> Result<u8, u8> {
    let a = parse_spec(spec1)?;
    let b = parse_spec(spec2)?;
    let certificate = distinguish(&a, &b);
    match format {
        Format::Json => {
            let doc = json!({
                "lhs_domain": a.to_string(),
                "rhs_domain": b.to_string(),
                "certificate": certificate.to_json(cite),
                "explanation": explain(&certificate),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
        Format::Text => {
            println!("{a}  vs  {b}");
            match &certificate {
                Certificate::Isomorphic { .. } => println!("result: isomorphic"),
                Certificate::SeparatedBy {
                    step,
                    lhs,
                    rhs,
                    anchor,
                } => {
                    println!("result: separated");
                    println!("step:   {} ({})", step.number(), step.invariant_name());
                    println!("lhs:    {lhs}");
                    println!("rhs:    {rhs}");
                    if cite {
                        println!("basis:  {anchor}");
                    }
                }
                Certificate::Inconclusive { reason, anchor } => {
                    println!("result: inconclusive");
                    println!("reason: {reason}");
                    if cite {
                        if let Some(anchor) = anchor {
                            println!("note:   {anchor}");
                        }
                    }
                }
            }
            // the narrative restates the anchors, so it follows the citation flag
            if cite {
                println!("{}", explain(&certificate));
            }
        }
    }
    Ok(if certificate.is_inconclusive() {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    })
}

fn cmd_verify(max_dim: u64, format: Format) -> Result<u8, u8> {
    if max_dim < 2 {
        eprintln!("error: --max-dim must be at least 2 (the smallest domain is 2-dimensional)");
        return Err(EXIT_USAGE);
    }
    let report = verify_theorem(max_dim);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("serializable")
        ),
        Format::Text => print!("{}", report.render_text()),
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_coincidences(max_dim: u64, factors: u32, format: Format) -> Result<u8, u8> {
    if max_dim < 2 {
        eprintln!("error: --max-dim must be at least 2");
        return Err(EXIT_USAGE);
    }
    if factors < 1 {
        eprintln!("error: --factors must be at least 1");
        return Err(EXIT_USAGE);
    }
    let hits = find_coincidences(max_dim, factors);
    match format {
        Format::Json => {
            let doc = json!({
                "max_ambient_dim": max_dim,
                "max_factors": factors,
                "coincidences": hits.iter().map(|c| json!({
                    "lhs": c.lhs.to_string(),
                    "rhs": c.rhs.to_string(),
                    "shared": c.shared.to_json(false),
                })).collect::<Vec<_>>(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
        Format::Text => {
            if hits.is_empty() {
                println!("no invariant-vector coincidences up to ambient dimension {max_dim} with <= {factors} factors");
            } else {
                println!("{} coincidence(s):", hits.len());
                for c in &hits {
                    println!(
                        "  {} ~ {}  (shilov_dim {}, pi1 rank {}, cover {})",
                        c.lhs,
                        c.rhs,
                        c.shared.shilov_dim,
                        c.shared.pi1.free_rank,
                        c.shared
                            .cover_poincare
                            .as_ref()
                            .map(|p| p.to_string())
                            .unwrap_or_else(|| "unavailable".into()),
                    );
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn run() -> Result<u8, u8> {
    let cli = Cli::try_parse().map_err(|e| {
        match e.kind() {
            // --help and --version are successful outcomes
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                EXIT_OK
            }
            _ => {
                eprint!("{e}");
                EXIT_USAGE
            }
        }
    })?;
    match cli.command {
        Command::Info {
            spec,
            format,
            no_cite,
        } => cmd_info(&spec, format, !no_cite),
        Command::Distinguish {
            spec1,
            spec2,
            format,
            no_cite,
        } => cmd_distinguish(&spec1, &spec2, format, !no_cite),
        Command::Verify { max_dim, format } => cmd_verify(max_dim, format),
        Command::Coincidences {
            max_dim,
            factors,
            format,
        } => cmd_coincidences(max_dim, factors, format),
    }
}

/// Restore default SIGPIPE handling so `shilov ... | head` terminates
/// quietly instead of panicking on a closed pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    match run() {
        Ok(code) | Err(code) => ExitCode::from(code),
    }
}
