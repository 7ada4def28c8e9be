//! `qring`: validate finite rings, classify their right ideals, compute the
//! Jacobson radical five ways, run the full theorem battery, and walk
//! through the localized-rational examples with exact arithmetic.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check finds
//! a counterexample, 2 for usage, IO, parse, and validation problems.
//! Output is deterministic for fixed inputs and `--seed`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use qring::catalog::{self, load_ring_path};
use qring::ideal::IdealLattice;
use qring::local::{LocalIdeal, LocalizedRational};
use qring::radical::{verify_ring, RadicalReport};
use qring::ring::FiniteRing;
use qring::rng::SplitMix64;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "qring",
    version,
    about = "Jacobson radical verifier for finite rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text where applicable
    #[arg(long, global = true)]
    json: bool,

    /// Directory for per-ring JSON reports (verify)
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Ring order cap for right-ideal lattice enumeration
    #[arg(long, global = true, default_value_t = qring::DEFAULT_LATTICE_CAP, value_name = "N")]
    max_order: usize,

    /// Seed for reproducible sampling
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    seed: u64,

    /// Corrupt one computed result to self-test failure detection
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Load a ring file and check the ring laws
    Validate {
        path: PathBuf,
        /// Also enumerate the right ideals and print their sizes
        #[arg(long)]
        ideals: bool,
    },
    /// Classify every right ideal of a ring
    Ideals { path: PathBuf },
    /// Compute the Jacobson radical five ways and compare
    Radical { path: PathBuf },
    /// Run the full theorem battery over ring files or the built-in catalog
    Verify {
        paths: Vec<PathBuf>,
        /// Use the built-in ring catalog instead of files
        #[arg(long)]
        catalog: bool,
    },
    /// Exact-arithmetic walkthrough of the localized-rational examples
    Qdemo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Validate { path, ideals } => cmd_validate(cli, path, *ideals),
        Command::Ideals { path } => cmd_ideals(cli, path),
        Command::Radical { path } => cmd_radical(cli, path),
        Command::Verify { paths, catalog } => cmd_verify(cli, paths, *catalog),
        Command::Qdemo => Ok(cmd_qdemo(cli)),
    }
}

fn load(path: &Path) -> Result<Arc<FiniteRing>, String> {
    load_ring_path(path)
        .map(Arc::new)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn lattice(ring: &Arc<FiniteRing>, cap: usize) -> Result<IdealLattice, String> {
    IdealLattice::enumerate(ring, cap).map_err(|e| e.to_string())
}

fn cmd_validate(cli: &Cli, path: &Path, ideals: bool) -> Result<ExitCode, String> {
    let ring = load(path)?;
    println!("{ring}: valid");
    if ideals {
        let lattice = lattice(&ring, cli.max_order)?;
        println!("right ideals: {}", lattice.len());
        for ideal in lattice.ideals() {
            println!("  size {:>3}  {}", ideal.size(), ideal);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ideals(cli: &Cli, path: &Path) -> Result<ExitCode, String> {
    let ring = load(path)?;
    let lattice = lattice(&ring, cli.max_order)?;
    if cli.json {
        let rows: Vec<serde_json::Value> = lattice
            .ideals()
            .iter()
            .enumerate()
            .map(|(k, ideal)| {
                serde_json::json!({
                    "members": ideal.member_set().to_vec(),
                    "regulator": lattice.regulator_at(k),
                    "maximal": lattice.maximal_at(k),
                    "superfluous": lattice.superfluous_at(k),
                    "quite_superfluous": lattice.quite_superfluous_at(k),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("rows serialise")
        );
    } else {
        println!("right ideals of {} ({}):", ring.name(), lattice.len());
        for (k, ideal) in lattice.ideals().iter().enumerate() {
            let regulator = match lattice.regulator_at(k) {
                Some(e) => format!("regulator={e}"),
                None => "not-regular".to_string(),
            };
            println!(
                "  {}  {}  maximal={}  superfluous={}  quite-superfluous={}",
                ideal,
                regulator,
                yes_no(lattice.maximal_at(k)),
                yes_no(lattice.superfluous_at(k)),
                yes_no(lattice.quite_superfluous_at(k)),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn cmd_radical(cli: &Cli, path: &Path) -> Result<ExitCode, String> {
    let ring = load(path)?;
    let lattice = lattice(&ring, cli.max_order)?;

    let definition = qring::radical::radical_by_definition(&ring);
    let maximal = qring::radical::radical_by_maximal_ideals(&lattice);
    let quite_superfluous =
        qring::radical::radical_by_quite_superfluous(&lattice).map_err(|e| e.to_string())?;
    let eq1 = qring::radical::radical_by_quite_superfluous_principals(&lattice);
    let mut eq2 = qring::radical::radical_by_superfluous_left_multiples(&lattice);

    if cli.inject_fault {
        // corrupted-on-purpose result so the harness can see exit code 1
        let last = ring.order() - 1;
        if eq2.contains(last) {
            eq2.remove(last);
        } else {
            eq2.insert(last);
        }
    }

    let sets = qring::radical::RadicalSets {
        definition: definition.to_vec(),
        maximal: maximal.to_vec(),
        quite_superfluous: quite_superfluous.to_vec(),
        eq1: eq1.to_vec(),
        eq2: eq2.to_vec(),
    };
    let agreement = sets.all_equal();

    if cli.json {
        let report = RadicalReport {
            name: ring.name().to_string(),
            radical: sets,
            checks: vec![qring::radical::CheckRecord {
                id: "five_route_agreement".to_string(),
                pass: agreement,
                counterexample: None,
            }],
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialises")
        );
    } else {
        println!("radical of {}:", ring.name());
        println!("  by definition:               {definition}");
        println!("  by regular maximal ideals:   {maximal}");
        println!("  by quite superfluous sum:    {quite_superfluous}");
        println!("  by principal ideals:         {eq1}");
        println!("  by superfluous multiples:    {eq2}");
        println!("agreement: {}", yes_no(agreement));
    }
    Ok(if agreement {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}

fn cmd_verify(cli: &Cli, paths: &[PathBuf], use_catalog: bool) -> Result<ExitCode, String> {
    let rings: Vec<Arc<FiniteRing>> = if use_catalog {
        catalog::catalog()
    } else if paths.is_empty() {
        return Err("verify needs ring files or --catalog".to_string());
    } else {
        paths.iter().map(|p| load(p)).collect::<Result<_, _>>()?
    };

    let mut reports = Vec::with_capacity(rings.len());
    for ring in &rings {
        reports.push(verify_ring(ring, cli.max_order).map_err(|e| e.to_string())?);
    }

    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        for report in &reports {
            let file = dir.join(format!("{}.json", sanitize(&report.name)));
            let mut text = serde_json::to_string_pretty(report).expect("report serialises");
            text.push('\n');
            std::fs::write(&file, text).map_err(|e| format!("{}: {e}", file.display()))?;
        }
    }

    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialise")
        );
    } else {
        for report in &reports {
            let radical = format!("{:?}", report.radical.definition);
            let verdict = if report.agreement() && report.all_pass() {
                format!("{} checks pass", report.checks.len())
            } else {
                let failed: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
                format!("FAILED: {}", failed.join(", "))
            };
            println!("{:<12} radical {:<18} {}", report.name, radical, verdict);
        }
    }

    let all_pass = reports.iter().all(|r| r.agreement() && r.all_pass());
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '.' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

struct Demo {
    out: String,
    all_ok: bool,
    faults_left: u32,
}

impl Demo {
    fn claim(&mut self, text: &str, ok: bool) {
        let ok = if self.faults_left > 0 {
            self.faults_left -= 1;
            false
        } else {
            ok
        };
        self.all_ok &= ok;
        let verdict = if ok { "ok" } else { "FAILED" };
        let _ = writeln!(self.out, "  {text}: {verdict}");
    }
}

fn cmd_qdemo(cli: &Cli) -> ExitCode {
    let mut rng = SplitMix64::new(cli.seed);
    let mut demo = Demo {
        out: String::new(),
        all_ok: true,
        faults_left: u32::from(cli.inject_fault),
    };
    let _ = writeln!(
        demo.out,
        "exact arithmetic in the ring of rationals s/t with t coprime to 6"
    );

    let _ = writeln!(
        demo.out,
        "\n(i) sampled members of the radical (6): every product is right quasi-regular"
    );
    for _ in 0..20 {
        let a = LocalIdeal::SIX.sample_member(&mut rng, 999);
        let all_rqr = (0..20).all(|_| {
            let b = LocalizedRational::sample(&mut rng, 999);
            a.mul(&b).is_right_quasi_regular()
        });
        demo.claim(
            &format!("a = {a}: a*b quasi-regular for 20 sampled b"),
            all_rqr,
        );
    }

    let _ = writeln!(
        demo.out,
        "\n(ii) elements outside (6): a multiplier b makes a*b non-quasi-regular"
    );
    for (num, den) in [(2, 1), (3, 1), (2, 7), (3, 5)] {
        let a = LocalizedRational::new(num, den).expect("admissible denominator");
        match a.non_quasi_regular_multiplier() {
            Ok(b) => {
                let product = a.mul(&LocalizedRational::from(i64::from(b)));
                demo.claim(
                    &format!("a = {a}: b = {b}, a*b = {product} not quasi-regular"),
                    !product.is_right_quasi_regular(),
                );
            }
            Err(err) => demo.claim(&format!("a = {a}: {err}"), false),
        }
    }

    let _ = writeln!(
        demo.out,
        "\n(iii) even fractions a split as 3a - 2a across the ideals (6) and (4)"
    );
    for _ in 0..10 {
        let a = LocalIdeal::TWO.sample_member(&mut rng, 999);
        match a.decompose_witness() {
            Ok((u, v)) => {
                let ok =
                    u.sub(&v) == a && u.in_ideal(LocalIdeal::SIX) && v.in_ideal(LocalIdeal::FOUR);
                let mut text = format!("a = {a}: 3a = {u} in (6), 2a = {v} in (4), a = 3a - 2a");
                if !a.in_ideal(LocalIdeal::FOUR) {
                    text.push_str(", a not in (4)");
                }
                demo.claim(&text, ok);
            }
            Err(err) => demo.claim(&format!("a = {a}: {err}"), false),
        }
    }

    let verdict = if demo.all_ok {
        "all checks pass"
    } else {
        "CHECKS FAILED"
    };
    let _ = writeln!(demo.out, "\n{verdict}");
    print!("{}", demo.out);
    if demo.all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}
