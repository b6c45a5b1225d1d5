//! The `similitude` command line: argument handling, file formats and JSON
//! reports. [`run`] is the whole program; `main` only wires it to the
//! process.

pub mod files;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use similitude::jordan::{self, SegreMode, Verdict};
use similitude::rigidity::{self, Relation, Variety};
use similitude::{similarity, smith, sylvester, GaussianRational, PolyMatrix};

pub const SCHEMA: u32 = 1;

/// Environment variable overriding the witness-search seed.
pub const SEED_VAR: &str = "SIMILITUDE_SEED";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, String),
    #[error("{0}: malformed file: {1}")]
    Format(String, String),
    #[error(transparent)]
    Core(#[from] similitude::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(name = "similitude", version, about = "Local similarity of polynomial matrix families")]
struct Cli {
    /// Record wall-clock timings in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Local Smith factorization of a univariate matrix at a point.
    Smith {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_parser = scalar)]
        point: GaussianRational,
    },
    /// Basis of the commutant of A at a point (comma-separated coordinates).
    Commutant {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Point,
    },
    /// Whether the intertwiner dimension is constant near a point.
    Wasow {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        point: GaussianRational,
    },
    /// Holomorphic H with AH = HB near a point and H(point) = Phi.
    LocalSimilarity {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        point: GaussianRational,
        #[arg(long)]
        phi: PathBuf,
    },
    /// Similarity of two constant matrices.
    Pointwise {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Also produce an invertible Gamma with A Gamma = Gamma B.
        #[arg(long)]
        witness: bool,
    },
    /// Jordan structure of a univariate family.
    Jordan {
        #[command(subcommand)]
        command: JordanCommand,
    },
    /// Jet rigidity for the counterexample family.
    Rigidity {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = relation)]
        relation: Relation,
        /// full, cusp:P,Q or lines:t1,t2,...
        #[arg(long, value_parser = variety, allow_hyphen_values = true)]
        variety: Variety,
        #[arg(long)]
        order: Option<u32>,
    },
    /// All exact checks on the counterexample family.
    VerifyPaper {
        #[arg(long)]
        ell: u32,
    },
    /// Winding number of a sampled closed curve around 0.
    Winding {
        #[arg(long)]
        curve: PathBuf,
    },
    /// Grid evaluation of the clutching determinant.
    Clutching {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        grid: usize,
    },
}

#[derive(Subcommand, Debug)]
enum JordanCommand {
    /// Finite set of points where Jordan stability may fail.
    Candidates {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Decide Jordan stability at a point.
    Check {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        point: GaussianRational,
        #[arg(long, default_value_t = jordan::DEFAULT_PROBES)]
        probes: usize,
        /// Clustering radius for eigenvalues that are not Gaussian rationals.
        #[arg(long, default_value_t = jordan::DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
}

fn scalar(s: &str) -> Result<GaussianRational, String> {
    s.trim().parse().map_err(|e: similitude::Error| e.to_string())
}

#[derive(Clone, Debug)]
struct Point(Vec<GaussianRational>);

fn point(s: &str) -> Result<Point, String> {
    if s.trim().is_empty() {
        return Ok(Point(vec![]));
    }
    s.split(',').map(scalar).collect::<Result<_, _>>().map(Point)
}

fn relation(s: &str) -> Result<Relation, String> {
    s.parse().map_err(|e: similitude::Error| e.to_string())
}

fn variety(s: &str) -> Result<Variety, String> {
    s.parse().map_err(|e: similitude::Error| e.to_string())
}

#[derive(Serialize)]
struct Report {
    schema: u32,
    command: Vec<String>,
    result: Value,
    verdict: String,
    timings: Option<Timings>,
}

#[derive(Serialize)]
struct Timings {
    elapsed_ms: f64,
}

/// What a subcommand produced: structured result, verdict, and whether the
/// verdict is affirmative.
struct Outcome {
    result: Value,
    verdict: &'static str,
    affirmative: bool,
}

impl Outcome {
    fn new(result: impl Serialize, verdict: &'static str, affirmative: bool) -> Result<Self, CliError> {
        let result = serde_json::to_value(result).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Outcome { result, verdict, affirmative })
    }
}

fn seed() -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("{SEED_VAR} must be an unsigned integer, got `{s}`"))),
        Err(_) => Ok(0),
    }
}

fn univariate(m: PolyMatrix) -> Result<PolyMatrix, CliError> {
    if m.is_univariate() {
        Ok(m)
    } else {
        Err(similitude::Error::NotUnivariate(m.vars().to_vec()).into())
    }
}

fn execute(cmd: Command) -> Result<Outcome, CliError> {
    use files::*;
    match cmd {
        Command::Smith { matrix, point } => {
            let m = univariate(read_matrix(&matrix)?)?;
            let s = smith::local_smith(&m, &point)?;
            Outcome::new(s, "factored", true)
        }
        Command::Commutant { matrix, point } => {
            let a = read_matrix(&matrix)?;
            let c = sylvester::commutant_basis_at(&a, &point.0)?;
            let result = json!({ "point": c.point, "dimension": c.basis.len(), "basis": c.basis });
            Outcome::new(result, "computed", true)
        }
        Command::Wasow { a, b, point } => {
            let w = similarity::wasow_check(&read_matrix(&a)?, &read_matrix(&b)?, &point)?;
            let ok = w.constant_near_point;
            Outcome::new(w, if ok { "constant" } else { "jump" }, ok)
        }
        Command::LocalSimilarity { a, b, point, phi } => {
            let phi = read_scalar_matrix(&phi)?;
            let s = similarity::local_similarity(&read_matrix(&a)?, &read_matrix(&b)?, &point, &phi)?;
            let ok = s.invertible_at_point;
            Outcome::new(s, if ok { "similar" } else { "intertwining_only" }, ok)
        }
        Command::Pointwise { a, b, witness } => {
            let v = similarity::pointwise_similar(&read_scalar_matrix(&a)?, &read_scalar_matrix(&b)?, witness, seed()?)?;
            let ok = v.similar;
            Outcome::new(v, if ok { "similar" } else { "not_similar" }, ok)
        }
        Command::Jordan { command: JordanCommand::Candidates { matrix } } => {
            let c = jordan::jordan_instability_candidates(&univariate(read_matrix(&matrix)?)?)?;
            Outcome::new(c, "computed", true)
        }
        Command::Jordan { command: JordanCommand::Check { matrix, point, probes, tolerance } } => {
            if !(tolerance > 0.0 && tolerance.is_finite()) {
                return Err(CliError::Usage("--tolerance must be positive".into()));
            }
            let a = univariate(read_matrix(&matrix)?)?;
            let r = jordan::is_jordan_stable_with(&a, &point, probes, SegreMode::Numeric { tolerance })?;
            let (verdict, ok) = match r.verdict {
                Verdict::Stable => ("stable", true),
                Verdict::Unstable => ("unstable", false),
                Verdict::Undetermined => ("undetermined", true),
            };
            Outcome::new(r, verdict, ok)
        }
        Command::Rigidity { ell, relation, variety, order } => {
            let f = rigidity::build_family(ell);
            let order = order.unwrap_or_else(|| variety.default_order(ell));
            let r = rigidity::jet_rigidity(&f.a, &f.b, relation, &variety, order)?;
            let (verdict, ok) = match relation {
                Relation::AHeqHA if r.scalar_line => ("scalar_line", true),
                _ if r.forces_zero => ("forces_zero", relation != Relation::AHeqHA),
                _ => ("not_rigid", false),
            };
            Outcome::new(r, verdict, ok)
        }
        Command::VerifyPaper { ell } => {
            let c = rigidity::verify_paper(ell)?;
            let ok = c.all_passed;
            Outcome::new(c, if ok { "all_passed" } else { "failed" }, ok)
        }
        Command::Winding { curve } => {
            let pts = read_curve(&curve)?.points();
            let w = rigidity::winding_number(&pts)?;
            Outcome::new(json!({ "samples": pts.len(), "winding_number": w }), "computed", true)
        }
        Command::Clutching { epsilon, grid } => {
            if !(epsilon > 0.0 && epsilon < 0.5) || grid < 2 {
                return Err(CliError::Usage("need 0 < epsilon < 1/2 and grid >= 2".into()));
            }
            let r = rigidity::clutching_invertibility(epsilon, grid);
            let ok = r.bound_holds;
            Outcome::new(r, if ok { "bound_holds" } else { "bound_fails" }, ok)
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name. Returns the exit
/// code: 0 affirmative, 1 negative, 2 usage or input error.
pub fn run<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let text = e.render().to_string();
            return if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                2
            };
        }
    };
    let start = Instant::now();
    let outcome = match execute(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let report = Report {
        schema: SCHEMA,
        command: argv.into_iter().skip(1).collect(),
        result: outcome.result,
        verdict: outcome.verdict.to_string(),
        timings: cli.timings.then(|| Timings { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 }),
    };
    match serde_json::to_string_pretty(&report) {
        Ok(s) => {
            let _ = writeln!(out, "{s}");
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    }
    if outcome.affirmative {
        0
    } else {
        1
    }
}
