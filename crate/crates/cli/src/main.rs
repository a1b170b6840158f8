//! `pact`: check partial monoid actions, build their globalizations and run
//! the exhaustive theorem checks from the command line.
//!
//! Every command prints a plain-text report ending in one `RESULT:` line.
//! Exit status: 0 when the verdict is positive, 1 when it is negative or a
//! check finds a violation, 2 when the input cannot be read, parsed or
//! checked within the enumeration bounds.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pact_core::diagram::{
    check_reflection_coequalizer_theorem_with, compare_routes, RouteResult, TheoremConfig,
};
use pact_core::finset::FinMap;
use pact_core::fintop::{counterexample_report, FinTopSpace};
use pact_core::globalize::{build_globalization, decide_globalizable, verify_globalization};
use pact_core::monoid::FiniteMonoid;
use pact_core::paction::{check_partial, Axiom, GlobalAction, PartialActionDatum};
use pact_core::testkit::{gen_partial_maybe_nonstrong, gen_strong_partial, GenConfig};
use pact_core::Error;

#[derive(Parser)]
#[command(name = "pact", version, about = "Partial actions of finite monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the partial action axioms.
    Validate { file: PathBuf },
    /// Decide strongness, with a witness when it fails.
    Strong { file: PathBuf },
    /// Print the quotient globalization (classes, β and ι).
    Globalize { file: PathBuf },
    /// Decide whether a global action and an embedding globalize a datum.
    Verify {
        file: PathBuf,
        gaction: PathBuf,
        /// Images of the embedding as a comma list, or `-` for an empty carrier.
        iota: String,
    },
    /// Compare the quotient, coequalizer and colimit constructions.
    Routes { file: PathBuf },
    /// Check that reflections and coequalizers of p, q correspond.
    TheoremCheck {
        file: PathBuf,
        /// Largest target carrier enumerated.
        #[arg(long, default_value_t = 2)]
        max_target: usize,
    },
    /// Run the two-point strong datum that has no globalization in spaces.
    TopDemo {
        /// Topology of the carrier (default: indiscrete on two points).
        #[arg(long, requires = "tau_prime")]
        tau: Option<PathBuf>,
        /// Topology of the non-identity domain (default: discrete).
        #[arg(long, requires = "tau")]
        tau_prime: Option<PathBuf>,
    },
    /// Sweep seeded random data and cross-check the constructions.
    Search(SearchArgs),
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 3)]
    max_monoid: usize,
    #[arg(long, default_value_t = 3)]
    max_carrier: usize,
}

/// An input that could not be used; reported with exit status 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<(String, bool), InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: pact_core::Result<T>) -> Result<T, InputError> {
    r.map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Loads a monoid named relative to the file that mentions it.
fn monoid_loader(owner: &Path) -> impl FnOnce(&str) -> pact_core::Result<FiniteMonoid> + '_ {
    move |name| {
        let path = owner.parent().unwrap_or(Path::new(".")).join(name);
        let text = fs::read_to_string(&path).map_err(|e| Error::Parse {
            line: 1,
            msg: format!("cannot read monoid file {}: {e}", path.display()),
        })?;
        FiniteMonoid::parse(&text)
    }
}

fn load_datum(path: &Path) -> Result<PartialActionDatum, InputError> {
    let text = read(path)?;
    with_path(path, PartialActionDatum::parse(&text, monoid_loader(path)))
}

fn load_action(path: &Path) -> Result<GlobalAction, InputError> {
    let text = read(path)?;
    with_path(path, GlobalAction::parse(&text, monoid_loader(path)))
}

fn load_space(path: &Path) -> Result<FinTopSpace, InputError> {
    let text = read(path)?;
    with_path(path, FinTopSpace::parse(&text))
}

fn parse_iota(arg: &str, target_size: usize) -> Result<FinMap, InputError> {
    let images = if arg.trim() == "-" {
        Vec::new()
    } else {
        arg.split(',')
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| InputError(format!("bad embedding image `{w}`")))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(FinMap::new(images, target_size)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(file: &Path) -> Outcome {
    let d = load_datum(file)?;
    let report = check_partial(&d);
    let mut out = String::new();
    for axiom in [Axiom::Pa1, Axiom::Pa2, Axiom::Pa3] {
        match report.first(axiom) {
            Some(v) => writeln!(out, "{axiom} fails: {v}").unwrap(),
            None => writeln!(out, "{axiom} holds").unwrap(),
        }
    }
    let verdict = if report.is_partial {
        "partial"
    } else {
        "not-partial"
    };
    writeln!(out, "RESULT: {verdict}").unwrap();
    Ok((out, report.is_partial))
}

fn strong(file: &Path) -> Outcome {
    let d = load_datum(file)?;
    let report = check_partial(&d);
    let mut out = String::new();
    if !report.is_partial {
        writeln!(out, "not a partial action").unwrap();
        writeln!(out, "RESULT: not-partial").unwrap();
        return Ok((out, false));
    }
    match report.first(Axiom::Pa2Strong) {
        Some(v) => writeln!(out, "witness: {v}").unwrap(),
        None => writeln!(out, "PA2' holds").unwrap(),
    }
    let verdict = if report.is_strong {
        "strong"
    } else {
        "not-strong"
    };
    writeln!(out, "RESULT: {verdict}").unwrap();
    Ok((out, report.is_strong))
}

fn globalize(file: &Path) -> Outcome {
    let d = load_datum(file)?;
    let g = build_globalization(&d);
    let mut out = g.dump();
    writeln!(out, "RESULT: classes {}", g.quotient_size()).unwrap();
    Ok((out, true))
}

fn verify(file: &Path, gaction: &Path, iota: &str) -> Outcome {
    let d = load_datum(file)?;
    let g = load_action(gaction)?;
    let iota = parse_iota(iota, g.carrier_size())?;
    let v = verify_globalization(&d, &g, &iota)?;
    let mut out = String::new();
    writeln!(out, "iota injective: {}", yes_no(v.iota_injective)).unwrap();
    if let (Some(m), Some(mismatch)) = (v.failing_m, &v.pullback_mismatch) {
        let pairs: Vec<String> = mismatch.iter().map(|(x, y)| format!("({x},{y})")).collect();
        writeln!(out, "pullback fails at m={m}").unwrap();
        writeln!(out, "mismatch: {}", pairs.join(" ")).unwrap();
    }
    let verdict = if v.is_globalization {
        "globalization"
    } else {
        "not-globalization"
    };
    writeln!(out, "RESULT: {verdict}").unwrap();
    Ok((out, v.is_globalization))
}

fn route_lines(out: &mut String, name: &str, r: &RouteResult) {
    writeln!(out, "{name}: size {}", r.action.carrier_size()).unwrap();
    out.push_str(&r.action.table_lines());
    writeln!(out, "iota {}", join(r.embed.images())).unwrap();
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn routes(file: &Path) -> Outcome {
    let d = load_datum(file)?;
    let cmp = compare_routes(&d)?;
    let mut out = String::new();
    route_lines(&mut out, "quotient", &cmp.quotient);
    route_lines(&mut out, "coequalizer", &cmp.coequalizer);
    route_lines(&mut out, "colimit", &cmp.colimit);
    let equal = cmp.all_equal();
    writeln!(out, "RESULT: {}", if equal { "equal" } else { "differ" }).unwrap();
    Ok((out, equal))
}

fn theorem_check(file: &Path, max_target: usize) -> Outcome {
    let d = load_datum(file)?;
    let cfg = TheoremConfig {
        max_target_size: max_target,
        ..TheoremConfig::default()
    };
    let report = check_reflection_coequalizer_theorem_with(&d, cfg)?;
    let mut out = String::new();
    writeln!(out, "targets checked: {}", report.targets_checked).unwrap();
    writeln!(
        out,
        "reflection gives coequalizer: {}",
        yes_no(report.reflection_gives_coequalizer)
    )
    .unwrap();
    writeln!(
        out,
        "coequalizer gives reflection: {}",
        yes_no(report.coequalizer_gives_reflection)
    )
    .unwrap();
    if !report.holds() {
        out.push_str(&build_globalization(&d).dump());
    }
    let verdict = if report.holds() { "pass" } else { "fail" };
    writeln!(out, "RESULT: {verdict}").unwrap();
    Ok((out, report.holds()))
}

fn describe_space(space: &FinTopSpace) -> String {
    let opens: Vec<String> = space
        .opens()
        .iter()
        .map(|o| format!("{{{}}}", join(o.members())))
        .collect();
    opens.join(" ")
}

fn top_demo(tau: Option<&Path>, tau_prime: Option<&Path>) -> Outcome {
    let (tau, tau_prime) = match (tau, tau_prime) {
        (Some(a), Some(b)) => (load_space(a)?, load_space(b)?),
        _ => (FinTopSpace::indiscrete(2)?, FinTopSpace::discrete(2)?),
    };
    let r = counterexample_report(&tau, &tau_prime)?;
    let mut out = String::new();
    writeln!(out, "tau: {}", describe_space(&tau)).unwrap();
    writeln!(out, "tau': {}", describe_space(&tau_prime)).unwrap();
    writeln!(out, "strong in spaces: {}", yes_no(r.top.is_strong)).unwrap();
    writeln!(out, "globalizable as sets: {}", yes_no(r.set_globalizable)).unwrap();
    writeln!(
        out,
        "reflection: {} points, opens {}",
        r.reflection.space.size(),
        describe_space(&r.reflection.space)
    )
    .unwrap();
    if let Some(m) = r.verdict.failing_m {
        writeln!(out, "pullback of spaces fails at m={m}").unwrap();
    }
    if let (Some(f), Some(c)) = (&r.verdict.mediating, r.verdict.mediating_continuous) {
        writeln!(
            out,
            "mediating map (X,tau) -> (X,tau'): {} ({})",
            join(f.images()),
            if c { "continuous" } else { "not continuous" }
        )
        .unwrap();
    }
    let confirmed = r.confirmed();
    if confirmed {
        writeln!(out, "counterexample confirmed").unwrap();
    }
    let verdict = if confirmed {
        "confirmed"
    } else {
        "not-confirmed"
    };
    writeln!(out, "RESULT: {verdict}").unwrap();
    Ok((out, confirmed))
}

fn search(args: &SearchArgs) -> Outcome {
    let cfg = GenConfig {
        seed: args.seed,
        samples: args.samples,
        max_monoid: args.max_monoid,
        max_carrier: args.max_carrier,
        ..GenConfig::default()
    };
    cfg.validate()?;
    let theorem_cfg = TheoremConfig::default();
    let (mut partial, mut strong, mut globalizable) = (0, 0, 0);
    let (mut checked, mut skipped) = (0, 0);
    let mut violations = String::new();
    let mut n_violations = 0;
    for i in 0..cfg.samples as u64 {
        // even samples come from restrictions, odd ones from rejection sampling
        let d = if i % 2 == 0 {
            gen_strong_partial(&cfg, i)
        } else {
            gen_partial_maybe_nonstrong(&cfg, i)?
        };
        let report = check_partial(&d);
        if !report.is_partial {
            continue;
        }
        partial += 1;
        strong += usize::from(report.is_strong);
        let glob = decide_globalizable(&d)?;
        globalizable += usize::from(glob);
        let mut problems = Vec::new();
        if glob != report.is_strong {
            problems.push("strong and globalizable disagree");
        }
        if !compare_routes(&d)?.all_equal() {
            problems.push("construction routes differ");
        }
        match check_reflection_coequalizer_theorem_with(&d, theorem_cfg) {
            Ok(r) => {
                checked += 1;
                if !r.holds() {
                    problems.push("reflection and coequalizer disagree");
                }
            }
            Err(Error::EnumerationTooLarge { .. }) => skipped += 1,
            Err(e) => return Err(e.into()),
        }
        for problem in problems {
            n_violations += 1;
            writeln!(violations, "sample {i}: {problem}").unwrap();
            violations.push_str(&d.monoid().to_string());
            violations.push_str(&d.to_text("<inline>"));
        }
    }
    let mut out = String::new();
    writeln!(out, "samples: {}", cfg.samples).unwrap();
    writeln!(out, "partial: {partial}").unwrap();
    writeln!(out, "strong: {strong}").unwrap();
    writeln!(out, "globalizable: {globalizable}").unwrap();
    writeln!(out, "theorem checked: {checked}, skipped: {skipped}").unwrap();
    writeln!(out, "violations: {n_violations}").unwrap();
    out.push_str(&violations);
    let verdict = if n_violations == 0 {
        "ok"
    } else {
        "violations"
    };
    writeln!(out, "RESULT: {verdict}").unwrap();
    Ok((out, n_violations == 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Strong { file } => strong(file),
        Command::Globalize { file } => globalize(file),
        Command::Verify {
            file,
            gaction,
            iota,
        } => verify(file, gaction, iota),
        Command::Routes { file } => routes(file),
        Command::TheoremCheck { file, max_target } => theorem_check(file, *max_target),
        Command::TopDemo { tau, tau_prime } => top_demo(tau.as_deref(), tau_prime.as_deref()),
        Command::Search(args) => search(args),
    };
    match outcome {
        Ok((report, positive)) => {
            print!("{report}");
            ExitCode::from(if positive { 0 } else { 1 })
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            println!("RESULT: error");
            ExitCode::from(2)
        }
    }
}
