//! `cbck`: load and check finite cBCK-algebras, materialize finite-support
//! algebras and report their ideals, congruences and spectra.
//!
//! Exit codes: 0 on success, 1 when a checked property fails, 2 on bad input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbck::congruence::{congruence_lattice, enumerate_congruences, verify_con_iso_id};
use cbck::ideal::{ideal_lattice, is_prime};
use cbck::spectrum::SpectrumSpace;
use cbck::support::{fs_as_finite_algebra, Universe};
use cbck::theorems::{verify_theorems, SuiteConfig, DEFAULT_SEED};
use cbck::{verify_axioms, Caps, CayleyTable, ChainSpec, Error, FiniteCbck};

#[derive(Parser, Debug)]
#[command(
    name = "cbck",
    version,
    about = "Finite commutative BCK-algebra workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an algebra file against the cBCK axioms.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Materialize T_h^X as an algebra file plus an element sidecar.
    FsBuild {
        #[command(flatten)]
        points: PointArgs,
        /// Finite chain `Th`.
        #[arg(long)]
        chain: String,
        #[command(flatten)]
        caps: CapArgs,
        /// Algebra file to write; the sidecar goes to `<output>.elements.json`.
        #[arg(long)]
        output: PathBuf,
    },
    /// List the ideals of an algebra and analyse their lattice.
    Ideals {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List the congruences of an algebra and match them with its ideals.
    Congruences {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute the prime spectrum and its topology.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the structural checks on T_h^X.
    VerifyTheorems {
        #[arg(long)]
        x_size: usize,
        #[arg(long)]
        height: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random function pairs per chain kind.
        #[arg(long, default_value_t = 10_000)]
        random_pairs: usize,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct PointArgs {
    /// Comma-separated point identifiers, or `@file` with one per line.
    #[arg(long, conflicts_with = "x_size")]
    points: Option<String>,
    /// Anonymous universe of this size.
    #[arg(long)]
    x_size: Option<usize>,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Largest materialized algebra.
    #[arg(long, default_value_t = Caps::default().materialization, value_parser = positive)]
    cap: usize,
    #[arg(long, default_value_t = Caps::default().downsets, value_parser = positive)]
    downset_cap: usize,
    #[arg(long, default_value_t = Caps::default().partition_carrier, value_parser = positive)]
    partition_cap: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            materialization: self.cap,
            downsets: self.downset_cap,
            partition_carrier: self.partition_cap,
            ..Caps::default()
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    /// A checked property does not hold (exit 1); carries the report.
    Property(String),
    /// Unusable input (exit 2).
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { input, out } => cmd_check(&input, &out),
        Command::FsBuild {
            points,
            chain,
            caps,
            output,
        } => cmd_fs_build(&points, &chain, &caps.caps(), &output),
        Command::Ideals { input, caps, out } => {
            cmd_ideals(&load_algebra(&input)?, &caps.caps(), &out)
        }
        Command::Congruences { input, caps, out } => {
            cmd_congruences(&load_algebra(&input)?, &caps.caps(), &out)
        }
        Command::Spectrum { input, caps, out } => {
            cmd_spectrum(&load_algebra(&input)?, &caps.caps(), &out)
        }
        Command::VerifyTheorems {
            x_size,
            height,
            seed,
            random_pairs,
            caps,
            out,
        } => {
            if height == 0 {
                return Err(Failure::Input("--height must be positive".into()));
            }
            let config = SuiteConfig {
                x_size,
                height,
                seed,
                random_pairs,
                caps: caps.caps(),
            };
            cmd_verify_theorems(&config, &out)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, body: &str) -> Outcome {
    fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &OutputArgs, body: &str) -> Outcome {
    match &out.output {
        Some(path) => write_file(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn load_algebra(path: &Path) -> Result<FiniteCbck, Failure> {
    Ok(FiniteCbck::from_json(&read(path)?)?)
}

fn cmd_check(input: &Path, out: &OutputArgs) -> Outcome {
    let table = CayleyTable::from_json(&read(input)?)?;
    let report = verify_axioms(&table);
    let body = match out.format {
        Format::Json => serde_json::to_string(&report).expect("report serializes") + "\n",
        _ => report.to_string(),
    };
    if report.valid {
        emit(out, &body)
    } else if out.output.is_some() {
        emit(out, &body)?;
        Err(Failure::Property(String::new()))
    } else {
        Err(Failure::Property(body))
    }
}

fn universe_from(points: &PointArgs) -> Result<Arc<Universe>, Failure> {
    match (&points.points, points.x_size) {
        (Some(list), _) => {
            let names: Vec<String> = match list.strip_prefix('@') {
                Some(path) => read(Path::new(path))?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(String::from)
                    .collect(),
                None => list.split(',').map(|p| p.trim().to_string()).collect(),
            };
            Ok(Universe::new(names)?)
        }
        (None, Some(n)) => Ok(Universe::abstract_of_size(n)),
        (None, None) => Err(Failure::Input(
            "one of --points or --x-size is required".into(),
        )),
    }
}

fn cmd_fs_build(points: &PointArgs, chain: &str, caps: &Caps, output: &Path) -> Outcome {
    let universe = universe_from(points)?;
    let height = match chain.parse::<ChainSpec>()? {
        ChainSpec::Finite(h) => h,
        other => {
            return Err(Failure::Input(format!(
                "chain {other} cannot be materialized; use Th"
            )))
        }
    };
    let fs = fs_as_finite_algebra(&universe, height, caps.materialization)?;
    write_file(output, &fs.algebra().to_json())?;

    let names: Vec<String> = universe
        .points()
        .iter()
        .map(|p| serde_json::to_string(p).unwrap())
        .collect();
    let elements: Vec<String> = (0..fs.size()).map(|i| fs.decode(i).to_literal()).collect();
    let sidecar = format!(
        "{{\"points\":[{}],\"chain\":\"{}\",\"elements\":[{}]}}",
        names.join(","),
        fs.spec(),
        elements.join(",")
    );
    let mut sidecar_path = output.as_os_str().to_owned();
    sidecar_path.push(".elements.json");
    write_file(Path::new(&sidecar_path), &sidecar)
}

fn cmd_ideals(algebra: &FiniteCbck, caps: &Caps, out: &OutputArgs) -> Outcome {
    let lattice = ideal_lattice(algebra, caps)?;
    let primes: Vec<bool> = lattice
        .ideals
        .iter()
        .map(|i| is_prime(algebra, i))
        .collect::<Result<_, _>>()?;
    let flags = &lattice.diagram.flags;
    let body = match out.format {
        Format::Dot => lattice.diagram.to_dot("ideals"),
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Ideal {
                mask: String,
                members: Vec<usize>,
                prime: bool,
            }
            #[derive(serde::Serialize)]
            struct Report<'a> {
                size: usize,
                ideals: Vec<Ideal>,
                lattice: &'a cbck::LatticeDiagram,
            }
            let ideals = lattice
                .ideals
                .iter()
                .zip(&primes)
                .map(|(i, &prime)| Ideal {
                    mask: i.to_hex(),
                    members: i.iter().collect(),
                    prime,
                })
                .collect();
            let report = Report {
                size: algebra.size(),
                ideals,
                lattice: &lattice.diagram,
            };
            serde_json::to_string(&report).expect("report serializes") + "\n"
        }
        Format::Text => {
            let mut s = format!("ideals: {}\n", lattice.ideals.len());
            for (k, (ideal, prime)) in lattice.ideals.iter().zip(&primes).enumerate() {
                let tag = if *prime { " prime" } else { "" };
                writeln!(s, "  I{k} {} {}{tag}", ideal.to_hex(), ideal).unwrap();
            }
            writeln!(
                s,
                "lattice: nodes={} edges={} distributive={} boolean={} atoms={}",
                lattice.diagram.len(),
                lattice.diagram.edges.len(),
                flags.is_distributive,
                flags.is_boolean,
                flags.atom_count
            )
            .unwrap();
            s
        }
    };
    emit(out, &body)
}

fn cmd_congruences(algebra: &FiniteCbck, caps: &Caps, out: &OutputArgs) -> Outcome {
    let congruences = enumerate_congruences(algebra, caps)?;
    let lattice = congruence_lattice(&congruences)?;
    let correspondence = verify_con_iso_id(algebra, caps)?;
    let body = match out.format {
        Format::Dot => lattice.to_dot("congruences"),
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Report<'a> {
                size: usize,
                congruences: Vec<String>,
                lattice: &'a cbck::LatticeDiagram,
                correspondence: &'a cbck::congruence::ConIsoReport,
            }
            let report = Report {
                size: algebra.size(),
                congruences: congruences.iter().map(ToString::to_string).collect(),
                lattice: &lattice,
                correspondence: &correspondence,
            };
            serde_json::to_string(&report).expect("report serializes") + "\n"
        }
        Format::Text => {
            let mut s = format!("congruences: {}\n", congruences.len());
            for (k, c) in congruences.iter().enumerate() {
                writeln!(s, "  C{k} {c}").unwrap();
            }
            writeln!(
                s,
                "lattice: nodes={} distributive={} boolean={} atoms={}",
                lattice.len(),
                lattice.flags.is_distributive,
                lattice.flags.is_boolean,
                lattice.flags.atom_count
            )
            .unwrap();
            writeln!(
                s,
                "ideal correspondence: holds={} bijective={} order_preserving={}",
                correspondence.holds, correspondence.bijective, correspondence.order_preserving
            )
            .unwrap();
            s
        }
    };
    emit(out, &body)
}

fn cmd_spectrum(algebra: &FiniteCbck, caps: &Caps, out: &OutputArgs) -> Outcome {
    let space = SpectrumSpace::of(algebra, caps)?;
    let body = match out.format {
        Format::Dot => space.to_dot(),
        Format::Json => space.to_json() + "\n",
        Format::Text => {
            let mut s = format!("points: {}\n", space.points.len());
            for (k, p) in space.points.iter().enumerate() {
                writeln!(s, "  P{k} {p}").unwrap();
            }
            writeln!(s, "opens: {}", space.opens.len()).unwrap();
            for open in &space.opens {
                let names: Vec<String> = open.points.iter().map(|p| format!("P{p}")).collect();
                let generators: Vec<String> = open
                    .generators
                    .iter()
                    .map(|&k| space.ideals[k].to_string())
                    .collect();
                writeln!(s, "  {{{}}} <- {}", names.join(","), generators.join(" ")).unwrap();
            }
            writeln!(
                s,
                "t0={} discrete={} sigma_injective={}",
                space.is_t0,
                space.is_discrete,
                space.sigma_is_injective()
            )
            .unwrap();
            s
        }
    };
    emit(out, &body)
}

fn cmd_verify_theorems(config: &SuiteConfig, out: &OutputArgs) -> Outcome {
    let report = verify_theorems(config)?;
    let body = match out.format {
        Format::Json => {
            let checks: Vec<serde_json::Value> = report
                .checks
                .iter()
                .map(|c| serde_json::json!({"name": c.name, "status": c.status.to_string(), "detail": c.detail}))
                .collect();
            let all_pass = report.all_pass();
            serde_json::json!({"x_size": config.x_size, "height": config.height, "seed": config.seed,
                "ideals": report.ideal_count, "all_pass": all_pass, "checks": checks})
            .to_string()
                + "\n"
        }
        _ => {
            let mut s = String::new();
            for c in &report.checks {
                writeln!(s, "{c}").unwrap();
            }
            writeln!(
                s,
                "summary: ideals={} all_pass={}",
                report.ideal_count,
                report.all_pass()
            )
            .unwrap();
            s
        }
    };
    if report.all_pass() {
        emit(out, &body)
    } else if out.output.is_some() {
        emit(out, &body)?;
        Err(Failure::Property(String::new()))
    } else {
        Err(Failure::Property(body))
    }
}
