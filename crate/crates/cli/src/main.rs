//! srlab: a finite commutative ring laboratory for S-variant properties.
//!
//! Exit codes: 0 all checks pass, 1 counterexample or golden mismatch,
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use srlab_core::krull::ChainReading;
use srlab_core::multset::{mult_closure, MultSet};
use srlab_core::sweep::{CheckId, ExecMode};
use srlab_core::{Elem, FiniteRing};

use srlab_cli::battery::{self, BatteryOptions};
use srlab_cli::report::Report;
use srlab_cli::{commands, ringspec};

#[derive(Parser)]
#[command(
    name = "srlab",
    version,
    about = "Finite commutative ring laboratory: S-variant properties, localization, and exhaustive verification"
)]
struct Cli {
    /// Write the JSON report to this path ('-' for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Order cap for constructed rings (hard ceiling 128).
    #[arg(long, global = true, default_value_t = 32)]
    max_order: usize,

    /// Reading of the S-chain strictness condition.
    #[arg(long, global = true, value_enum, default_value_t = ChainReadingArg::Corrected)]
    chain_reading: ChainReadingArg,

    /// Omit timestamps and elapsed times for byte-identical reports.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Reject multiplicative sets whose closure contains 0.
    #[arg(long, global = true)]
    strict_mult_set: bool,

    /// Run the fan-out sequentially instead of in parallel.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChainReadingArg {
    Corrected,
    Literal,
}

impl From<ChainReadingArg> for ChainReading {
    fn from(a: ChainReadingArg) -> Self {
        match a {
            ChainReadingArg::Corrected => ChainReading::Corrected,
            ChainReadingArg::Literal => ChainReading::Literal,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a ring against a multiplicative set: ideal lattice,
    /// element classes, S-properties, localization summary.
    Explore {
        /// Ring spec, e.g. "Z12", "Z2xZ3", "Z12/(6)", "Z2(+)self".
        #[arg(long)]
        ring: String,
        /// Comma-separated generator indices; the set is auto-closed.
        #[arg(long, default_value = "")]
        mult_set: String,
    },
    /// Run the built-in battery of worked examples against goldens.
    VerifyPaper {
        /// Corrupt one multiplication-table entry of Z12 first (the
        /// battery must then fail; guards against vacuous passes).
        #[arg(long)]
        inject_fault: bool,
    },
    /// Exhaustively check the named invariants over a ring inventory.
    Survey {
        /// Inventory order bound.
        #[arg(long, default_value_t = 12)]
        order_bound: usize,
        /// Comma-separated check names (default: all). See --list-checks.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Print the available check names and exit.
        #[arg(long)]
        list_checks: bool,
    },
    /// Build S⁻¹R from first principles and compare with the quotient oracle.
    Localize {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "")]
        mult_set: String,
    },
    /// Power chains, containment/annihilator witnesses, S-primary
    /// decomposition, S-dimension.
    Krull {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "")]
        mult_set: String,
        /// Comma-separated ideal generator indices.
        #[arg(long, default_value = "")]
        ideal: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Parse and evaluate a ring spec, returning the ring and its normalized
/// rendering.
fn parse_ring(spec: &str, max_order: usize) -> Result<(FiniteRing, String), String> {
    let ast = ringspec::parse_ring_spec(spec).map_err(|e| format!("ring spec {spec:?}: {e}"))?;
    let ring = ringspec::eval(&ast, max_order.min(srlab_core::ring::MAX_ORDER))
        .map_err(|e| format!("ring spec {spec:?}: {e}"))?;
    Ok((ring, ringspec::render(&ast)))
}

fn parse_mult_set(r: &FiniteRing, spec: &str, strict: bool) -> Result<MultSet, String> {
    let gens = ringspec::parse_generators(spec).map_err(|e| format!("--mult-set: {e}"))?;
    let mut elems = Vec::new();
    for g in gens {
        if g as usize >= r.order() {
            return Err(format!(
                "--mult-set: element index {g} out of range for order {}",
                r.order()
            ));
        }
        elems.push(Elem(g as u16));
    }
    let s = mult_closure(r, &elems);
    if strict && s.contains_zero() {
        return Err("--strict-mult-set: the closure contains 0".to_string());
    }
    Ok(s)
}

fn parse_ideal_gens(r: &FiniteRing, spec: &str) -> Result<Vec<Elem>, String> {
    let gens = ringspec::parse_generators(spec).map_err(|e| format!("--ideal: {e}"))?;
    gens.into_iter()
        .map(|g| {
            if g as usize >= r.order() {
                Err(format!(
                    "--ideal: element index {g} out of range for order {}",
                    r.order()
                ))
            } else {
                Ok(Elem(g as u16))
            }
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool, String> {
    let start = Instant::now();
    let mode = if cli.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };
    let timestamp = !cli.no_timestamp;

    let (command_name, inputs, records) = match &cli.command {
        Command::Explore { ring, mult_set } => {
            let (r, normalized) = parse_ring(ring, cli.max_order)?;
            let s = parse_mult_set(&r, mult_set, cli.strict_mult_set)?;
            let records = commands::cmd_explore(&r, &s);
            (
                "explore",
                serde_json::json!({ "ring": normalized, "mult_set": mult_set }),
                records,
            )
        }
        Command::VerifyPaper { inject_fault } => {
            let records = battery::run_battery(&BatteryOptions {
                inject_fault: *inject_fault,
            });
            (
                "verify-paper",
                serde_json::json!({ "inject_fault": inject_fault }),
                records,
            )
        }
        Command::Survey {
            order_bound,
            checks,
            list_checks,
        } => {
            if *list_checks {
                for c in CheckId::ALL {
                    println!("{}", c.name());
                }
                return Ok(true);
            }
            if *order_bound < 2 {
                return Err("--order-bound must be at least 2".to_string());
            }
            if *order_bound > cli.max_order {
                return Err(format!(
                    "--order-bound {order_bound} exceeds --max-order {}",
                    cli.max_order
                ));
            }
            let selected: Vec<CheckId> = if checks.is_empty() {
                CheckId::ALL.to_vec()
            } else {
                checks
                    .iter()
                    .map(|name| {
                        CheckId::parse(name).ok_or_else(|| {
                            format!(
                                "unknown check {name:?}; available: {}",
                                CheckId::ALL
                                    .iter()
                                    .map(|c| c.name())
                                    .collect::<Vec<_>>()
                                    .join(", ")
                            )
                        })
                    })
                    .collect::<Result<_, _>>()?
            };
            let records = commands::cmd_survey(*order_bound, &selected, mode);
            (
                "survey",
                serde_json::json!({
                    "order_bound": order_bound,
                    "checks": selected.iter().map(|c| c.name()).collect::<Vec<_>>(),
                }),
                records,
            )
        }
        Command::Localize { ring, mult_set } => {
            let (r, normalized) = parse_ring(ring, cli.max_order)?;
            let s = parse_mult_set(&r, mult_set, cli.strict_mult_set)?;
            let records = commands::cmd_localize(&r, &s);
            (
                "localize",
                serde_json::json!({ "ring": normalized, "mult_set": mult_set }),
                records,
            )
        }
        Command::Krull {
            ring,
            mult_set,
            ideal,
        } => {
            let (r, normalized) = parse_ring(ring, cli.max_order)?;
            let s = parse_mult_set(&r, mult_set, cli.strict_mult_set)?;
            let gens = parse_ideal_gens(&r, ideal)?;
            let records = commands::cmd_krull(&r, &s, &gens, cli.chain_reading.into());
            (
                "krull",
                serde_json::json!({ "ring": normalized, "mult_set": mult_set, "ideal": ideal }),
                records,
            )
        }
    };

    let mut report = Report::new(command_name, inputs, records, timestamp);
    report.set_elapsed(start.elapsed(), timestamp);

    let json_to_stdout = cli.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if !json_to_stdout {
        report.print_summary();
    }
    if let Some(path) = &cli.json {
        let text = report.to_json_string();
        if json_to_stdout {
            println!("{text}");
        } else {
            std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?;
        }
    }
    Ok(report.all_pass())
}
