//! Batch front end: load ring presentations, dispatch the F-singularity
//! and Matlis commands, emit canonical deterministic reports.
//!
//! Exit codes: 0 success, 1 input error, 2 precondition or verification
//! failure (for example a ring that is not F-pure), 3 capability failure
//! (minimal-prime decomposition or a resource cap).

mod input;
mod report;

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use frobsplit::decomp;
use frobsplit::frobenius::bracket_power;
use frobsplit::fsing::{
    self, CompatibleLattice, FsingConfig, Presentation,
};
use frobsplit::matlis::{self, ETruncation};
use frobsplit::{Error as CoreError, Ideal, Monomial, Polynomial, RingCtx, TermOrder};

use input::{load_presentation, parse_ideal_arg, LoadError, LoadedPresentation};
use report::{ideal_json, ideal_list_json, ideal_list_text, ideal_text, Format, Report};

#[derive(Parser)]
#[command(
    name = "frobsplit",
    version,
    about = "F-purity, compatibly split ideals, splitting primes and test ideals over F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Level bound: every "for all n" condition is checked for n <= emax
    #[arg(long, global = true, default_value_t = 2)]
    emax: u32,

    /// Cap on star-closure iterations
    #[arg(long, global = true, default_value_t = 64)]
    max_iter: u32,

    /// Matlis window depth: "auto" or a positive integer
    #[arg(long, global = true, default_value = "auto")]
    trunc: String,

    /// Seed for the randomized candidate searches
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide F-purity of S/A by Fedder's criterion
    CheckFpure {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Test one ideal for compatibility by both routes
    CompatTest {
        #[arg(short, long)]
        input: PathBuf,
        /// Generators of B, comma separated
        #[arg(short = 'B', long = "ideal")]
        b: String,
    },
    /// Enumerate the full compatible-ideal lattice
    CompatList {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// The unique largest proper compatible ideal
    SplittingPrime {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// The big test ideal
    BigTestIdeal {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// The S-test ideal for S = R minus the union of avoided primes
    STestIdeal {
        #[arg(short, long)]
        input: PathBuf,
        /// An avoided prime (generators comma separated); repeatable
        #[arg(long = "avoid")]
        avoid: Vec<String>,
    },
    /// The big-test-ideal chain
    Chain {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Compatible primes surviving localization at a lattice prime
    Localize {
        #[arg(short, long)]
        input: PathBuf,
        /// The localizing prime (generators comma separated)
        #[arg(long)]
        at: String,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Window checks on the injective hull: delta_n images and the
    /// fully-special socle condition against the colon criterion
    MatlisCheck {
        #[arg(short, long)]
        input: PathBuf,
        /// Generators of B, comma separated
        #[arg(short = 'B', long = "ideal")]
        b: String,
        /// Highest level checked (defaults to emax)
        #[arg(long)]
        nmax: Option<u32>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Bracket-power identity suite on seeded random ideals
    Pa4 {
        #[arg(long, default_value_t = 100)]
        cases: u32,
    },
    /// delta_n image identities for one ideal at one level
    Pa1 {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short = 'B', long = "ideal")]
        b: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Recompute the lattice and all of its closure invariants
    Lattice {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Compare the colon and Cartier routes over a candidate pool
    Routes {
        #[arg(short, long)]
        input: PathBuf,
    },
}

// ---------------------------------------------------------------------------
// error handling and exit codes
// ---------------------------------------------------------------------------

enum CliError {
    Load(LoadError),
    Core(CoreError),
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        CliError::Load(e)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Load(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Load(_) => 1,
        CliError::Core(c) => match c {
            CoreError::NotFPure
            | CoreError::Precondition(_)
            | CoreError::InvalidPresentation(_)
            | CoreError::TruncationOverflow { .. }
            | CoreError::IterationCap(_)
            | CoreError::RouteDisagreement { .. }
            | CoreError::InvariantBreach(_)
            | CoreError::UnitIdeal => 2,
            CoreError::CapabilityFailure { .. }
            | CoreError::ResourceExhausted { .. }
            | CoreError::NoTestElement => 3,
            _ => 1,
        },
    }
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(report) => {
            let format = match cli.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            };
            print!("{}", report.emit(format, started.elapsed().as_millis()));
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn config_json(cli: &Cli) -> Value {
    json!({
        "emax": cli.emax,
        "max_iter": cli.max_iter,
        "seed": cli.seed,
        "trunc": cli.trunc,
    })
}

fn fsing_config(cli: &Cli) -> FsingConfig {
    FsingConfig {
        e_max: cli.emax,
        max_iter: cli.max_iter,
        seed: cli.seed,
        random_candidates: 8,
    }
}

fn input_json(loaded: &LoadedPresentation) -> Value {
    json!({
        "p": loaded.file.p,
        "vars": loaded.file.vars,
        "order": loaded.file.order,
        "A": loaded.file.a,
    })
}

fn resolve_trunc(
    cli: &Cli,
    pres: &Presentation,
    b: &Ideal,
    n_max: u32,
) -> Result<u32, CliError> {
    if cli.trunc == "auto" {
        Ok(matlis::default_truncation_bound(pres, b, n_max)?)
    } else {
        cli.trunc
            .parse::<u32>()
            .map_err(|_| {
                CliError::Load(LoadError::Validation(format!(
                    "--trunc must be `auto` or a positive integer, got `{}`",
                    cli.trunc
                )))
            })
            .and_then(|v| {
                if v == 0 {
                    Err(CliError::Load(LoadError::Validation(
                        "--trunc must be positive".to_string(),
                    )))
                } else {
                    Ok(v)
                }
            })
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::CheckFpure { input } => {
            let loaded = load_presentation(input)?;
            let f_pure = fsing::fedder_is_f_pure(&loaded.presentation)?;
            let witness = fsing::fedder_witness(&loaded.presentation)?;
            Ok(Report {
                command: "check-fpure".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "f_pure": f_pure,
                    "witness": witness.as_ref().map(|w| w.to_string()),
                }),
                text_lines: vec![
                    format!("F-pure: {f_pure}"),
                    match witness {
                        Some(w) => format!("witness: {w} lies in C_1 outside M^[p]"),
                        None => "witness: none (C_1 inside M^[p])".to_string(),
                    },
                ],
            })
        }

        Command::CompatTest { input, b } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let b_ideal = parse_ideal_arg(b, &loaded.ring)?;
            let colon = fsing::is_compatible(pres, &b_ideal, cli.emax)?;
            let cartier = fsing::is_compatible_cartier(pres, &b_ideal, cli.emax)?;
            let compatible = fsing::check_compatible(pres, &b_ideal, cli.emax)?;
            let bfull = pres.full_ideal(&b_ideal)?;
            Ok(Report {
                command: "compat-test".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "B": ideal_json(&bfull)?,
                    "colon_route": colon,
                    "cartier_route": cartier,
                    "routes_agree": colon == cartier,
                    "compatible": compatible,
                    "levels_checked": cli.emax,
                }),
                text_lines: vec![
                    format!("B + A = {}", ideal_text(&bfull)?),
                    format!("colon route: {colon}"),
                    format!("Cartier route: {cartier}"),
                    format!("compatible (levels 1..{}): {compatible}", cli.emax),
                ],
            })
        }

        Command::CompatList { input } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let cfg = fsing_config(cli);
            let lat = fsing::compatible_ideals(pres, &cfg)?;
            let sp = fsing::splitting_prime(pres, &lat, &cfg)?;
            let tau = lat.big_test_ideal(&loaded.ring)?;
            let proper: Vec<Ideal> = lat
                .proper_members()?
                .into_iter()
                .cloned()
                .collect();
            let chain_ideals: Vec<Ideal> =
                lat.chain.stages.iter().map(|s| s.ideal.clone()).collect();
            let mut text_lines = vec![format!(
                "F-pure: true (levels checked: 1..{})",
                lat.e_max
            )];
            if lat.primes.is_empty() {
                text_lines.push("no compatible primes found".to_string());
            } else {
                text_lines.push(format!(
                    "compatible primes ({}): {}",
                    lat.primes.len(),
                    ideal_list_text(&lat.primes)?
                ));
            }
            text_lines.push(format!(
                "proper members ({}): {}",
                proper.len(),
                ideal_list_text(&proper)?
            ));
            text_lines.push(format!("splitting prime: {}", ideal_text(&sp)?));
            text_lines.push(format!("big test ideal: {}", ideal_text(&tau)?));
            text_lines.push(format!(
                "chain: {} < S",
                chain_ideals
                    .iter()
                    .map(|i| ideal_text(i))
                    .collect::<frobsplit::Result<Vec<_>>>()?
                    .join(" < ")
            ));
            Ok(Report {
                command: "compat-list".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "primes": ideal_list_json(&lat.primes)?,
                    "provenance_stage": lat.provenance,
                    "proper_members": ideal_list_json(&proper)?,
                    "member_count_with_unit": lat.members.len(),
                    "splitting_prime": ideal_json(&sp)?,
                    "big_test_ideal": ideal_json(&tau)?,
                    "chain": ideal_list_json(&chain_ideals)?,
                    "levels_checked": lat.e_max,
                }),
                text_lines,
            })
        }

        Command::SplittingPrime { input } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let cfg = fsing_config(cli);
            let lat = fsing::compatible_ideals(pres, &cfg)?;
            let sp = fsing::splitting_prime(pres, &lat, &cfg)?;
            Ok(Report {
                command: "splitting-prime".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "splitting_prime": ideal_json(&sp)?,
                    "levels_checked": cli.emax,
                }),
                text_lines: vec![format!("splitting prime: {}", ideal_text(&sp)?)],
            })
        }

        Command::BigTestIdeal { input } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let cfg = fsing_config(cli);
            let tau = fsing::big_test_ideal(pres, &cfg)?;
            Ok(Report {
                command: "big-test-ideal".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "big_test_ideal": ideal_json(&tau)?,
                    "levels_checked": cli.emax,
                }),
                text_lines: vec![format!("big test ideal: {}", ideal_text(&tau)?)],
            })
        }

        Command::STestIdeal { input, avoid } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let cfg = fsing_config(cli);
            let lat = fsing::compatible_ideals(pres, &cfg)?;
            let avoided: Vec<Ideal> = avoid
                .iter()
                .map(|a| {
                    let i = parse_ideal_arg(a, &loaded.ring)?;
                    pres.full_ideal(&i).map_err(CliError::from)
                })
                .collect::<Result<_, CliError>>()?;
            let tau = fsing::s_test_ideal(pres, &lat, &avoided)?;
            Ok(Report {
                command: "s-test-ideal".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "avoided": ideal_list_json(&avoided)?,
                    "s_test_ideal": ideal_json(&tau)?,
                }),
                text_lines: vec![
                    format!("avoided primes: {}", ideal_list_text(&avoided)?),
                    format!("S-test ideal: {}", ideal_text(&tau)?),
                ],
            })
        }

        Command::Chain { input } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let cfg = fsing_config(cli);
            let chain = fsing::big_test_chain(pres, &cfg)?;
            let stages: Vec<Value> = chain
                .stages
                .iter()
                .map(|s| {
                    Ok(json!({
                        "ideal": ideal_json(&s.ideal)?,
                        "f_pure": s.f_pure,
                        "fedder_witness": s.fedder_witness.as_ref().map(|w| w.to_string()),
                    }))
                })
                .collect::<frobsplit::Result<_>>()?;
            let text = chain
                .stages
                .iter()
                .map(|s| ideal_text(&s.ideal))
                .collect::<frobsplit::Result<Vec<_>>>()?
                .join(" < ");
            Ok(Report {
                command: "chain".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "stages": stages,
                    "width": chain.stages.len() - 1,
                }),
                text_lines: vec![
                    format!("chain: {text} < S"),
                    format!("width: {}", chain.stages.len() - 1),
                ],
            })
        }

        Command::Localize { input, at } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let cfg = fsing_config(cli);
            let lat = fsing::compatible_ideals(pres, &cfg)?;
            let at_ideal = pres.full_ideal(&parse_ideal_arg(at, &loaded.ring)?)?;
            let rep = fsing::localize_compatible(pres, &lat, &at_ideal)?;
            Ok(Report {
                command: "localize".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "at": ideal_json(&at_ideal)?,
                    "primes": ideal_list_json(&rep.primes)?,
                    "local_big_test_ideal": ideal_json(&rep.local_big_test)?,
                    "extension_consistent": rep.extension_consistent,
                }),
                text_lines: vec![
                    format!("localizing at: {}", ideal_text(&at_ideal)?),
                    format!(
                        "surviving primes ({}): {}",
                        rep.primes.len(),
                        ideal_list_text(&rep.primes)?
                    ),
                    format!(
                        "localized big test ideal: {}",
                        ideal_text(&rep.local_big_test)?
                    ),
                    format!("extension consistent: {}", rep.extension_consistent),
                ],
            })
        }

        Command::Verify { what } => run_verify(cli, what),

        Command::MatlisCheck { input, b, nmax } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let n_max = nmax.unwrap_or(cli.emax).max(1);
            let b_ideal = parse_ideal_arg(b, &loaded.ring)?;
            let bound = resolve_trunc(cli, pres, &b_ideal, n_max)?;
            let trunc = ETruncation::new(&loaded.ring, bound)?;
            let mut pa1 = Vec::new();
            let mut pa1_lines = Vec::new();
            let mut all_pa1 = true;
            for n in 1..=n_max {
                let rep = matlis::verify_lemma_pa1(&b_ideal, n, &trunc)?;
                all_pa1 &= rep.all_ok();
                pa1_lines.push(format!(
                    "delta_{n}: part_i {} (window {}, image dim {}, annihilator dim {}), part_ii {} (window {})",
                    rep.part_i, rep.window_i, rep.image_dim_i, rep.annihilator_dim_i,
                    rep.part_ii, rep.window_ii
                ));
                pa1.push(json!({
                    "n": rep.n,
                    "part_i": rep.part_i,
                    "window_i": rep.window_i,
                    "image_dim_i": rep.image_dim_i,
                    "annihilator_dim_i": rep.annihilator_dim_i,
                    "part_ii": rep.part_ii,
                    "window_ii": rep.window_ii,
                    "image_dim_ii": rep.image_dim_ii,
                    "annihilator_dim_ii": rep.annihilator_dim_ii,
                }));
            }
            let socle = matlis::verify_fully_special_socle(pres, &b_ideal, n_max, &trunc)?;
            let compatible = fsing::check_compatible(pres, &b_ideal, n_max)?;
            Ok(Report {
                command: "matlis-check".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "B": ideal_json(&pres.full_ideal(&b_ideal)?)?,
                    "trunc": bound,
                    "pa1": pa1,
                    "pa1_all_ok": all_pa1,
                    "socle_fully_special": socle,
                    "colon_compatible": compatible,
                    "socle_agrees_with_colon": socle == compatible,
                    "levels_checked": n_max,
                }),
                text_lines: {
                    let mut lines = vec![format!("window depth D = {bound}")];
                    lines.extend(pa1_lines);
                    lines.push(format!("fully-special socle condition: {socle}"));
                    lines.push(format!("colon criterion: {compatible}"));
                    lines.push(format!("agreement: {}", socle == compatible));
                    lines
                },
            })
        }
    }
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

fn run_verify(cli: &Cli, what: &VerifyCmd) -> Result<Report, CliError> {
    match what {
        VerifyCmd::Pa4 { cases } => run_pa4(cli, *cases),

        VerifyCmd::Pa1 { input, b, n } => {
            let loaded = load_presentation(input)?;
            let b_ideal = parse_ideal_arg(b, &loaded.ring)?;
            let bound = resolve_trunc(cli, &loaded.presentation, &b_ideal, *n)?;
            let trunc = ETruncation::new(&loaded.ring, bound)?;
            let rep = matlis::verify_lemma_pa1(&b_ideal, *n, &trunc)?;
            Ok(Report {
                command: "verify pa1".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "B": ideal_json(&b_ideal)?,
                    "trunc": bound,
                    "n": rep.n,
                    "part_i": rep.part_i,
                    "window_i": rep.window_i,
                    "image_dim_i": rep.image_dim_i,
                    "annihilator_dim_i": rep.annihilator_dim_i,
                    "part_ii": rep.part_ii,
                    "window_ii": rep.window_ii,
                    "image_dim_ii": rep.image_dim_ii,
                    "annihilator_dim_ii": rep.annihilator_dim_ii,
                    "verified": rep.all_ok(),
                }),
                text_lines: vec![
                    format!("B = {}", ideal_text(&b_ideal)?),
                    format!("window depth D = {bound}, level n = {}", rep.n),
                    format!(
                        "part (i): {} (image dim {}, annihilator dim {} at window {})",
                        rep.part_i, rep.image_dim_i, rep.annihilator_dim_i, rep.window_i
                    ),
                    format!(
                        "part (ii): {} (image dim {}, annihilator dim {} at window {})",
                        rep.part_ii, rep.image_dim_ii, rep.annihilator_dim_ii, rep.window_ii
                    ),
                ],
            })
        }

        VerifyCmd::Lattice { input } => {
            let loaded = load_presentation(input)?;
            let cfg = fsing_config(cli);
            // construction hard-fails unless every closure invariant holds
            let lat = fsing::compatible_ideals(&loaded.presentation, &cfg)?;
            Ok(Report {
                command: "verify lattice".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "primes": lat.primes.len(),
                    "members_with_unit": lat.members.len(),
                    "levels_checked": lat.e_max,
                    "verified": true,
                }),
                text_lines: vec![format!(
                    "lattice verified: {} primes, {} members (unit included), levels 1..{}",
                    lat.primes.len(),
                    lat.members.len(),
                    lat.e_max
                )],
            })
        }

        VerifyCmd::Routes { input } => {
            let loaded = load_presentation(input)?;
            let pres = &loaded.presentation;
            let cfg = fsing_config(cli);
            let lat = fsing::compatible_ideals(pres, &cfg)?;
            let (checked, disagreements) = route_comparison_pool(pres, &lat, &cfg)?;
            if disagreements > 0 {
                return Err(CliError::Core(CoreError::InvariantBreach(format!(
                    "{disagreements} route disagreements over {checked} candidates"
                ))));
            }
            Ok(Report {
                command: "verify routes".into(),
                config: config_json(cli),
                input: input_json(&loaded),
                result: json!({
                    "candidates_checked": checked,
                    "disagreements": disagreements,
                    "levels_checked": cfg.e_max,
                    "verified": true,
                }),
                text_lines: vec![format!(
                    "routes agree on {checked} candidates at levels 1..{} (0 disagreements)",
                    cfg.e_max
                )],
            })
        }
    }
}

/// Candidate pool for the route comparison: all lattice members, their
/// pairwise sums and products, the minimal primes, and seeded random
/// low-degree ideals.
fn route_comparison_pool(
    pres: &Presentation,
    lat: &CompatibleLattice,
    cfg: &FsingConfig,
) -> Result<(usize, usize), CliError> {
    let ring = pres.ring().clone();
    let mut pool: Vec<Ideal> = lat.members.clone();
    for i in 0..lat.members.len() {
        for j in (i + 1)..lat.members.len() {
            pool.push(lat.members[i].sum(&lat.members[j])?);
            pool.push(lat.members[i].product(&lat.members[j])?);
        }
    }
    // deterministic low-degree perturbations
    let vars: Vec<Polynomial> = (0..ring.num_vars())
        .map(|v| Polynomial::var(&ring, v))
        .collect();
    for v in &vars {
        pool.push(Ideal::new(&ring, vec![v.clone()])?);
    }
    if ring.num_vars() >= 2 {
        let mut sum = Polynomial::zero(&ring);
        for v in &vars {
            sum = sum.add(v)?;
        }
        pool.push(Ideal::new(&ring, vec![sum])?);
    }
    let mut checked = 0usize;
    let mut disagreements = 0usize;
    for b in &pool {
        let colon = fsing::is_compatible(pres, b, cfg.e_max)?;
        let cartier = fsing::is_compatible_cartier(pres, b, cfg.e_max)?;
        checked += 1;
        if colon != cartier {
            disagreements += 1;
        }
    }
    Ok((checked, disagreements))
}

/// The bracket-power identity suite on seeded random ideals: identities
/// (i) and (iv), and the colon and minimal-prime containments on
/// decomposition-exact cases, at levels 1..emax.
fn run_pa4(cli: &Cli, cases: u32) -> Result<Report, CliError> {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut run = 0u32;
    let mut exact_decomp_cases = 0u32;
    for case in 0..cases {
        let p = if case % 2 == 0 { 2u64 } else { 3 };
        let d = 1 + (case as usize) % 3;
        let names: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
        let ring = RingCtx::new(p, names, TermOrder::GrevLex)
            .map_err(CliError::from)?;
        let a = random_proper_ideal(&ring, &mut rng)?;
        let c = random_proper_ideal(&ring, &mut rng)?;
        let (Some(a), Some(c)) = (a, c) else { continue };

        for e in 1..=cli.emax {
            // (i) brackets commute with intersections
            let lhs = bracket_power(&a.intersect(&c)?, e)?;
            let rhs = bracket_power(&a, e)?.intersect(&bracket_power(&c, e)?)?;
            if !lhs.equals(&rhs)? {
                return Err(CliError::Core(CoreError::InvariantBreach(format!(
                    "bracket/intersection identity failed at case {case}, level {e}"
                ))));
            }
            // (iv) brackets commute with colons
            let lhs = bracket_power(&a.colon(&c)?, e)?;
            let rhs = bracket_power(&a, e)?.colon(&bracket_power(&c, e)?)?;
            if !lhs.equals(&rhs)? {
                return Err(CliError::Core(CoreError::InvariantBreach(format!(
                    "bracket/colon identity failed at case {case}, level {e}"
                ))));
            }
            // (iv) second claim: (A^[q]:A) lands in ((A:C)^[q] : (A:C)).
            // Colon membership is multiplication plus division, so the
            // target colon is never materialized.
            let ca = bracket_power(&a, e)?.colon(&a)?;
            let ac = a.colon(&c)?;
            let ac_bracket = bracket_power(&ac, e)?;
            for s in ca.canonical_gens()? {
                for x in ac.gens() {
                    if !ac_bracket.contains_poly(&s.mul(x)?)? {
                        return Err(CliError::Core(CoreError::InvariantBreach(format!(
                            "colon containment failed at case {case}, level {e}"
                        ))));
                    }
                }
            }
            // (v) on decomposition-exact cases: containment at minimal primes
            let mp = decomp::minimal_primes_exact_only(&a)?;
            if mp.capability == decomp::Capability::Exact {
                if e == 1 {
                    exact_decomp_cases += 1;
                }
                for prime in &mp.primes {
                    if prime.is_zero_ideal()? {
                        continue;
                    }
                    let pq = bracket_power(prime, e)?;
                    for s in ca.canonical_gens()? {
                        for g in prime.canonical_gens()? {
                            if !pq.contains_poly(&s.mul(g)?)? {
                                return Err(CliError::Core(CoreError::InvariantBreach(
                                    format!(
                                        "minimal-prime containment failed at case {case}, level {e}"
                                    ),
                                )));
                            }
                        }
                    }
                }
            }
        }
        run += 1;
    }
    Ok(Report {
        command: "verify pa4".into(),
        config: config_json(cli),
        input: json!({ "cases": cases }),
        result: json!({
            "cases_run": run,
            "decomposition_exact_cases": exact_decomp_cases,
            "identity_intersection": true,
            "identity_colon": true,
            "containment_colon": true,
            "containment_minimal_primes": true,
            "levels_checked": cli.emax,
            "verified": true,
        }),
        text_lines: vec![
            format!(
                "bracket identities verified on {run} random cases at levels 1..{}",
                cli.emax
            ),
            format!("minimal-prime containments on {exact_decomp_cases} decomposition-exact cases"),
        ],
    })
}

/// Random nonzero proper ideal: up to 3 generators of degree <= 3. Returns
/// None when the sample degenerates.
fn random_proper_ideal(
    ring: &Arc<RingCtx>,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Result<Option<Ideal>, CliError> {
    use rand::Rng as _;

    let d = ring.num_vars();
    let mut monos: Vec<Monomial> = Vec::new();
    let mut cur = vec![0u32; d];
    'walk: loop {
        if cur.iter().map(|&e| e as u64).sum::<u64>() <= 3 {
            monos.push(Monomial::new(cur.clone()));
        }
        for v in 0..d {
            cur[v] += 1;
            if cur[v] <= 3 {
                continue 'walk;
            }
            cur[v] = 0;
        }
        break;
    }
    monos.sort();
    let n_gens = rng.gen_range(1..=3usize);
    let mut gens = Vec::with_capacity(n_gens);
    for _ in 0..n_gens {
        let mut terms = Vec::new();
        for m in &monos {
            if rng.gen_bool(0.35) {
                terms.push((m.clone(), rng.gen_range(0..ring.p())));
            }
        }
        let f = Polynomial::from_terms(ring, terms);
        if !f.is_zero() {
            gens.push(f);
        }
    }
    if gens.is_empty() {
        return Ok(None);
    }
    // keep the raw short generator list: the colon and product routes work
    // generator by generator, and the sample sizes are part of the contract
    let ideal = Ideal::new(ring, gens)?;
    if ideal.is_zero_ideal()? || ideal.is_unit_ideal()? {
        return Ok(None);
    }
    Ok(Some(ideal))
}
