use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use confspace::braid::{
    conjugate, conjugation_image, hub_property, is_pure, linking_matrix, permutation_of, BraidWord,
};
use confspace::config_space::{Surface, Tolerances};
use confspace::harness::{ConfigFile, PlannerRun, SurfaceConfiguration};
use confspace::HarnessError;

const EXIT_INPUT: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_NOT_PURE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "confspace",
    version,
    about = "Motion planning for point configurations and braid invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plan a collision-free motion between two configuration files.
    Plan {
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        #[arg(long)]
        start: PathBuf,
        #[arg(long)]
        goal: PathBuf,
        /// Number of uniformly spaced samples in the exported path.
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        /// Write a trajectory plot here.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the sampled path here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Inspect a braid word such as "s1 s2^-1 s1".
    Braid {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Print the linking matrix (the word must be pure).
        #[arg(long)]
        linking: bool,
        /// Test whether one strand links with at least K others.
        #[arg(long, value_name = "K")]
        hub: Option<usize>,
        /// Conjugate by this word and compare with the relabeled matrix.
        #[arg(long, value_name = "GWORD", allow_hyphen_values = true)]
        conjugate: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SurfaceArg {
    Annulus,
    Disc3,
}

impl SurfaceArg {
    fn surface(self) -> Surface {
        match self {
            SurfaceArg::Annulus => Surface::Annulus,
            SurfaceArg::Disc3 => Surface::Disc,
        }
    }
}

struct Failure(u8, String);

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

fn load(path: &Path, surface: Surface) -> Result<SurfaceConfiguration, Failure> {
    let c = ConfigFile::read(path)
        .and_then(|f| f.configuration())
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    if c.surface() != surface {
        return Err(Failure::input(format!(
            "{}: expected a {} configuration, found {}",
            path.display(),
            surface.as_str(),
            c.surface().as_str()
        )));
    }
    if surface == Surface::Disc && c.len() != 3 {
        return Err(Failure::input(format!(
            "{}: the disc planner needs exactly 3 points",
            path.display()
        )));
    }
    let checked = match &c {
        SurfaceConfiguration::Annulus(c) => c.check_planner_input(),
        SurfaceConfiguration::Disc(c) => c.check_planner_input(),
    };
    checked.map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(c)
}

fn plan(
    surface: SurfaceArg,
    start: PathBuf,
    goal: PathBuf,
    samples: u64,
    svg: Option<PathBuf>,
    json: Option<PathBuf>,
) -> Result<(), Failure> {
    let surface = surface.surface();
    let x = load(&start, surface)?;
    let y = load(&goal, surface)?;
    if x.len() != y.len() {
        return Err(Failure::input(format!(
            "start has {} points, goal has {}",
            x.len(),
            y.len()
        )));
    }
    let tol = Tolerances::default();
    let run = PlannerRun::plan(&x, &y, samples as usize, &tol).map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
    let r = &run.report;
    eprintln!("stratum: {}", run.stratum);
    eprintln!("segments: {}", run.segment_count);
    eprintln!(
        "validation: endpoints {}, min separation {:.6e} over {} samples, max step {:.3e}",
        if r.endpoints_ok { "exact" } else { "MISMATCH" },
        r.min_separation_over_samples,
        r.samples,
        r.max_step_displacement
    );
    if !r.is_valid() {
        return Err(Failure(EXIT_INVALID, "path failed validation".into()));
    }
    let io = |e: HarnessError| Failure(EXIT_INVALID, e.to_string());
    if let Some(path) = svg {
        run.write_svg(&path).map_err(io)?;
    }
    match json {
        Some(path) => run.write_json(&path).map_err(io)?,
        None => {
            let doc = run.export().map_err(io)?;
            let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != ErrorKind::BrokenPipe => return Err(io(e.into())),
                _ => {}
            }
        }
    }
    Ok(())
}

fn braid(n: usize, word: String, linking: bool, hub: Option<usize>, conj: Option<String>) -> Result<(), Failure> {
    let b = BraidWord::parse(n, &word).map_err(Failure::input)?;
    let g = conj
        .map(|w| BraidWord::parse(n, &w))
        .transpose()
        .map_err(Failure::input)?;
    let pure = is_pure(&b);
    println!("word: {b}");
    println!("permutation: {}", permutation_of(&b));
    println!("pure: {pure}");
    let not_pure = || Failure(EXIT_NOT_PURE, format!("{b} is not a pure braid"));
    if linking {
        let m = linking_matrix(&b).map_err(|_| not_pure())?;
        println!("linking: {m}");
        println!("commutator subgroup: {}", m.is_zero());
    }
    if let Some(k) = hub {
        if !pure {
            return Err(not_pure());
        }
        let verdict = hub_property(&b, k).map_err(Failure::input)?;
        println!("hub({k}): {verdict}");
    }
    if let Some(g) = g {
        let c = conjugate(&b, &g).map_err(Failure::input)?;
        println!("conjugate: {c}");
        if pure {
            match conjugation_image(&b, &g) {
                Ok(m) => println!("conjugation check: ok, linking {m}"),
                Err(e) => return Err(Failure(EXIT_INVALID, e.to_string())),
            }
        } else {
            println!("conjugate permutation: {}", permutation_of(&c));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Plan {
            surface,
            start,
            goal,
            samples,
            svg,
            json,
        } => plan(surface, start, goal, samples, svg, json),
        Command::Braid {
            n,
            word,
            linking,
            hub,
            conjugate,
        } => braid(n, word, linking, hub, conjugate),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
