//! Command-line frontend for the `omlkit` library.
//!
//! # Usage
//!
//! ```bash
//! # Emit a built-in lattice as JSON and validate it from a file
//! omlkit catalog MO 2 > mo2.json
//! omlkit validate mo2.json
//!
//! # Same checks without the intermediate file
//! omlkit validate --seed-catalog mo2
//! omlkit center --seed-catalog g12 --format json
//!
//! # Test a stored endomap ({"image":[...]}) against the closure laws
//! omlkit check-bvb j.json --seed-catalog mo2
//!
//! # The headline check: enumerate both sides and match them up
//! omlkit verify-correspondence --seed-catalog g12 --format json
//! ```
//!
//! # Exit codes
//!
//! - 0: the requested check passed, or the query/listing succeeded
//! - 1: the check ran and failed; witnesses are in the report on stdout
//! - 2: bad input — unreadable file, malformed JSON, unknown catalog name,
//!   out-of-range index, or a lattice failing the structural axioms a
//!   command needs before it can run
//!
//! Scan ceilings come from `--max-n` and the environment variables
//! `OMLKIT_MOORE_SCAN_MAX_N` / `OMLKIT_CENTER_SCAN_MAX_SUBSETS`
//! (flag over environment over default).

mod output;
mod seed;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use omlkit::{
    build_lattice, center, central_cover, check_bvb, enumerate_bvb_endos_with,
    enumerate_central_boolean_subalgebras_with, lattice_to_json, parse_endomap_json,
    parse_lattice_json, validate_oml, validate_spec, verify_correspondence_with, LatticeSpec,
    OmlTable, ScanLimits,
};

use output::{braced_labels, render, CoverResult, EndoList, Format, SubalgebraList};
use seed::CatalogChoice;

/// One invocation: the subcommand plus the flags shared by all of them.
#[derive(Parser)]
#[command(
    name = "omlkit",
    version,
    about = "Validate finite orthomodular lattices and explore the closure-operator side of their centers"
)]
struct CliConfig {
    #[command(subcommand)]
    command: Command,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Built-in lattice to use instead of a file: MO<n>, B<k>, G12
    #[arg(long, global = true, value_name = "NAME")]
    seed_catalog: Option<String>,

    /// Largest lattice the endomap-side scan will accept
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom and report first witnesses for the failures
    Validate {
        /// Lattice JSON file (`-` for stdin); or use --seed-catalog
        lattice: Option<PathBuf>,
    },
    /// List the elements compatible both ways with everything
    Center { lattice: Option<PathBuf> },
    /// Find the smallest central element above ELEM
    Cover {
        elem: usize,
        lattice: Option<PathBuf>,
    },
    /// Test a stored endomap against the closure and join laws
    CheckBvb {
        /// Endomap JSON file: {"image":[...]}
        endo: PathBuf,
        lattice: Option<PathBuf>,
    },
    /// List every complete boolean subalgebra of the center
    EnumerateSubalgebras { lattice: Option<PathBuf> },
    /// List every endomap satisfying the closure and join laws
    EnumerateBvb { lattice: Option<PathBuf> },
    /// Enumerate both sides and verify they are in bijection
    VerifyCorrespondence { lattice: Option<PathBuf> },
    /// Print a built-in lattice as JSON: `catalog MO 2`, `catalog B 3`, `catalog G12`
    Catalog { name: String, params: Vec<u64> },
}

fn main() {
    let cfg = CliConfig::parse();
    std::process::exit(run_command(cfg));
}

/// Execute one command, print its report, and map the outcome to an exit
/// code: 0 passed, 1 failed with witnesses on stdout, 2 input error on
/// stderr.
fn run_command(cfg: CliConfig) -> i32 {
    match execute(&cfg) {
        Ok(Outcome { passed, report }) => {
            print!("{report}");
            if passed {
                0
            } else {
                1
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

struct Outcome {
    passed: bool,
    report: String,
}

impl Outcome {
    fn passing(report: String) -> Self {
        Outcome {
            passed: true,
            report,
        }
    }
}

fn execute(cfg: &CliConfig) -> Result<Outcome, String> {
    let limits = resolve_limits(cfg)?;

    match &cfg.command {
        Command::Validate { lattice } => {
            let (name, report, notes) = match lattice_input(cfg, lattice)? {
                Input::Seed(choice) => {
                    let t = seed::build(choice)?;
                    (
                        seed::display_name(choice),
                        validate_oml(&t),
                        seed::notes(choice),
                    )
                }
                Input::File(name, spec) => (
                    name,
                    validate_spec(&spec).map_err(|e| e.to_string())?,
                    Vec::new(),
                ),
            };
            Ok(Outcome {
                passed: report.passed(),
                report: render(
                    cfg.format,
                    "validate",
                    &name,
                    &notes,
                    &report,
                    &report.to_string(),
                ),
            })
        }

        Command::Center { lattice } => {
            let (name, t, notes) = lattice_table(cfg, lattice)?;
            let z = center(&t);
            let body = format!(
                "center: {} ({} of {} elements)",
                braced_labels(&t, &z.members()),
                z.len(),
                t.n()
            );
            Ok(Outcome::passing(render(
                cfg.format, "center", &name, &notes, &z, &body,
            )))
        }

        Command::Cover { elem, lattice } => {
            let (name, t, notes) = lattice_table(cfg, lattice)?;
            if *elem >= t.n() {
                return Err(format!(
                    "element {elem} is out of range for the {}-element lattice {name}",
                    t.n()
                ));
            }
            let c = central_cover(&t, *elem);
            let result = CoverResult {
                element: *elem,
                cover: c,
            };
            let body = format!(
                "central cover of {} ({}) is {} ({})",
                elem,
                t.label(*elem),
                c,
                t.label(c)
            );
            Ok(Outcome::passing(render(
                cfg.format, "cover", &name, &notes, &result, &body,
            )))
        }

        Command::CheckBvb { endo, lattice } => {
            let (name, t, notes) = lattice_table(cfg, lattice)?;
            let text = read_input(endo)?;
            let j = parse_endomap_json(&t, &text).map_err(|e| e.to_string())?;
            let report = check_bvb(&t, &j);
            Ok(Outcome {
                passed: report.passed(),
                report: render(
                    cfg.format,
                    "check-bvb",
                    &name,
                    &notes,
                    &report,
                    &report.to_string(),
                ),
            })
        }

        Command::EnumerateSubalgebras { lattice } => {
            let (name, t, notes) = lattice_table(cfg, lattice)?;
            let subalgebras = enumerate_central_boolean_subalgebras_with(&t, limits)
                .map_err(|e| e.to_string())?;
            let mut body = format!("{} central boolean subalgebra(s)", subalgebras.len());
            for s in &subalgebras {
                body.push_str("\n  ");
                body.push_str(&braced_labels(&t, &s.members()));
            }
            let result = SubalgebraList {
                count: subalgebras.len(),
                subalgebras,
            };
            Ok(Outcome::passing(render(
                cfg.format,
                "enumerate-subalgebras",
                &name,
                &notes,
                &result,
                &body,
            )))
        }

        Command::EnumerateBvb { lattice } => {
            let (name, t, notes) = lattice_table(cfg, lattice)?;
            let endos = enumerate_bvb_endos_with(&t, limits).map_err(|e| e.to_string())?;
            let mut body = format!("{} closure operator(s) satisfy the join laws", endos.len());
            for j in &endos {
                body.push_str(&format!("\n  image {:?}", j.image()));
            }
            let result = EndoList {
                count: endos.len(),
                endos,
            };
            Ok(Outcome::passing(render(
                cfg.format,
                "enumerate-bvb",
                &name,
                &notes,
                &result,
                &body,
            )))
        }

        Command::VerifyCorrespondence { lattice } => {
            let (name, t, notes) = lattice_table(cfg, lattice)?;
            let report = verify_correspondence_with(&t, limits).map_err(|e| e.to_string())?;
            let ok = |flags: &[bool]| flags.iter().filter(|&&b| b).count();
            let body = format!(
                "subalgebras: {}, closure operators: {}\n\
                 forward round trips: {}/{}, backward round trips: {}/{}\n\
                 {}",
                report.subalgebras.len(),
                report.endos.len(),
                ok(&report.forward_roundtrips),
                report.forward_roundtrips.len(),
                ok(&report.backward_roundtrips),
                report.backward_roundtrips.len(),
                if report.passed() {
                    "bijection verified"
                } else {
                    "MISMATCH"
                }
            );
            Ok(Outcome {
                passed: report.passed(),
                report: render(
                    cfg.format,
                    "verify-correspondence",
                    &name,
                    &notes,
                    &report,
                    &body,
                ),
            })
        }

        Command::Catalog { name, params } => {
            if cfg.seed_catalog.is_some() {
                return Err(
                    "catalog names its lattice directly; --seed-catalog does not apply".into(),
                );
            }
            let choice = seed::parse(name, params)?;
            let t = seed::build(choice)?;
            let mut json = lattice_to_json(&seed::display_name(choice), &t);
            json.push('\n');
            Ok(Outcome::passing(json))
        }
    }
}

/// Where a command's lattice comes from.
enum Input {
    Seed(CatalogChoice),
    File(String, LatticeSpec),
}

/// Resolve the lattice source: exactly one of a file path or the
/// `--seed-catalog` flag.
fn lattice_input(cfg: &CliConfig, file: &Option<PathBuf>) -> Result<Input, String> {
    match (file, &cfg.seed_catalog) {
        (Some(_), Some(_)) => Err("pass a lattice file or --seed-catalog, not both".into()),
        (None, None) => Err("no lattice given; pass a file path or --seed-catalog <name>".into()),
        (Some(path), None) => {
            let text = read_input(path)?;
            let (name, spec) = parse_lattice_json(&text).map_err(|e| e.to_string())?;
            Ok(Input::File(name, spec))
        }
        (None, Some(token)) => Ok(Input::Seed(seed::parse(token, &[])?)),
    }
}

/// Load and fully build the lattice for commands that need a valid one.
fn lattice_table(
    cfg: &CliConfig,
    file: &Option<PathBuf>,
) -> Result<(String, OmlTable, Vec<String>), String> {
    match lattice_input(cfg, file)? {
        Input::Seed(choice) => Ok((
            seed::display_name(choice),
            seed::build(choice)?,
            seed::notes(choice),
        )),
        Input::File(name, spec) => {
            let t = build_lattice(&spec).map_err(|e| format!("lattice {name}: {e}"))?;
            Ok((name, t, Vec::new()))
        }
    }
}

/// Read a file, or standard input when the path is `-`.
fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// Scan ceilings with flag > environment > default precedence.
fn resolve_limits(cfg: &CliConfig) -> Result<ScanLimits, String> {
    let mut limits = ScanLimits::default();
    if let Some(n) = env_limit("OMLKIT_MOORE_SCAN_MAX_N")? {
        limits.moore_scan_max_n = n;
    }
    if let Some(k) = env_limit("OMLKIT_CENTER_SCAN_MAX_SUBSETS")? {
        limits.center_scan_max_subsets = k;
    }
    if let Some(n) = cfg.max_n {
        limits.moore_scan_max_n = n;
    }
    if limits.moore_scan_max_n == 0 || limits.center_scan_max_subsets == 0 {
        return Err("size limits must be positive".into());
    }
    Ok(limits)
}

fn env_limit<T: std::str::FromStr>(var: &str) -> Result<Option<T>, String> {
    match std::env::var(var) {
        Ok(text) => text
            .parse()
            .map(Some)
            .map_err(|_| format!("{var} must be a positive integer, got `{text}`")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("{var}: {e}")),
    }
}
