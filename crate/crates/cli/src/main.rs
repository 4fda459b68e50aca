//! `convcode`: JSON reports for convolutional code bounds, distances,
//! skew-cyclic constructions and the built-in catalog.
//!
//! Exit status: 0 success, 1 mismatch, 2 input error or exhausted budget.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use convcode::analysis::{analyze, AnalyzeError, AnalyzeOptions};
use convcode::bounds::bounds_report;
use convcode::budget::Budget;
use convcode::catalog::{self, CatalogError, LowDegreePolicy, VerifyOptions};
use convcode::gf::Field;
use convcode::metrics::MetricsError;
use convcode::polymat::PolyMatrix;
use convcode::skew::{
    automorphism_list, ideal_generator_matrix, is_sigma_cyclic, Algebra, Automorphism, SkewError, SkewPoly,
};
use convcode::text::{format_matrix_file, parse_field_header, parse_matrix_file};

#[derive(Parser)]
#[command(name = "convcode", version, about = "Convolutional code workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper bounds on the free distance of (n,k,δ;m)_q codes.
    Bounds(BoundsArgs),
    /// Profile and distances of a generator matrix file.
    Analyze(AnalyzeArgs),
    /// Skew-cyclic codes over F[x]/(x^n - 1).
    Cyclic {
        #[command(subcommand)]
        command: CyclicCommand,
    },
    /// The built-in code tables.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    delta: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    q: u64,
}

#[derive(Args, Clone, Copy)]
struct BudgetArg {
    /// Wall-clock limit for exhaustive searches.
    #[arg(long, env = "CONVCODE_BUDGET_SECONDS")]
    budget_seconds: Option<f64>,
}

impl BudgetArg {
    fn budget(self) -> Budget {
        self.budget_seconds
            .map_or_else(Budget::unlimited, Budget::seconds)
    }
}

#[derive(Args)]
struct DistanceArgs {
    /// Report column distances up to at least this index.
    #[arg(long)]
    coldist: Option<usize>,
    /// Count atomic paths up to this weight.
    #[arg(long)]
    spectrum: Option<u32>,
    #[command(flatten)]
    budget: BudgetArg,
}

impl DistanceArgs {
    fn options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            coldist: self.coldist,
            spectrum: self.spectrum,
            budget: self.budget.budget(),
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    #[command(flatten)]
    dist: DistanceArgs,
    /// Exit 1 unless the free distance equals this value.
    #[arg(long)]
    expect_dfree: Option<u32>,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u64,
    /// Defining polynomial of GF(q) in `a`, e.g. `a^4+a+1`.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Subcommand)]
enum CyclicCommand {
    /// List all automorphisms of F[x]/(x^n - 1).
    Autos(FieldArgs),
    /// Generator matrix of the left ideal generated by g, then analyze it.
    Build {
        #[command(flatten)]
        field: FieldArgs,
        /// Image of x, e.g. `x^5`.
        #[arg(long)]
        sigma: String,
        /// Skew polynomial, e.g. `1+x^2 + z*(x+x^3)`.
        #[arg(long)]
        g: String,
        #[command(flatten)]
        dist: DistanceArgs,
    },
    /// Whether a matrix file generates a σ-cyclic code.
    Check {
        file: PathBuf,
        #[arg(long)]
        sigma: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LowDegree {
    Never,
    Question,
    All,
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    /// Recompute and compare every listed property.
    Verify {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Which binary entries get the exhaustive deg u <= 6 parity check.
        #[arg(long, value_enum, default_value = "question")]
        low_degree: LowDegree,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Print an entry as a matrix file.
    Export {
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum Status {
    Ok,
    Mismatch,
    InputError,
    BudgetExceeded,
}

impl Status {
    fn exit(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::InputError | Status::BudgetExceeded => 2,
        }
    }
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs: Value,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    results: Value,
}

impl Report {
    fn new(command: &'static str, inputs: Value) -> Report {
        Report {
            command,
            inputs,
            status: Status::Ok,
            error: None,
            results: Value::Null,
        }
    }

    fn fail(mut self, status: Status, error: impl ToString) -> Report {
        self.status = status;
        self.error = Some(error.to_string());
        self
    }

    fn with(mut self, results: impl Serialize) -> Report {
        self.results = serde_json::to_value(results).expect("serializable");
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::Bounds(a) => cmd_bounds(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Cyclic { command } => cmd_cyclic(command),
        Command::Catalog { command } => match cmd_catalog(command) {
            Ok(r) => r,
            Err(text) => {
                print!("{text}");
                return ExitCode::SUCCESS;
            }
        },
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    eprintln!("{}: {}", report.command, summary(&report));
    ExitCode::from(report.status.exit())
}

fn summary(r: &Report) -> String {
    match (&r.error, r.status) {
        (Some(e), _) => e.clone(),
        (None, Status::Ok) => "ok".into(),
        (None, _) => "failed".into(),
    }
}

fn cmd_bounds(a: BoundsArgs) -> Report {
    let r = Report::new(
        "bounds",
        json!({"n": a.n, "k": a.k, "delta": a.delta, "m": a.m, "q": a.q}),
    );
    match bounds_report(a.n, a.k, a.delta, a.m, a.q) {
        Ok(b) => {
            let mut v = serde_json::to_value(&b).expect("serializable");
            v["mds_min_q"] = json!(b.mds_min_field.q_min);
            r.with(v)
        }
        Err(e) => r.fail(Status::InputError, e),
    }
}

fn read(path: &PathBuf) -> Result<PolyMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_matrix_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs the shared analysis and folds its outcome into `r`.
fn analysis_report(mut r: Report, g: &PolyMatrix, opts: &AnalyzeOptions, extra: Value) -> Report {
    let mut results = extra;
    match analyze(g, opts) {
        Ok(a) => {
            let partial = a.partial;
            merge(&mut results, serde_json::to_value(&a).expect("serializable"));
            r = r.with(results);
            if partial {
                r = r.fail(Status::BudgetExceeded, "budget exhausted; partial results");
            }
            r
        }
        Err(AnalyzeError::Unsupported { profile, error }) => {
            merge(&mut results, json!({ "profile": profile }));
            r.with(results).fail(Status::InputError, error)
        }
        Err(e) => r.fail(Status::InputError, e),
    }
}

fn merge(into: &mut Value, from: Value) {
    match (into, from) {
        (Value::Object(a), Value::Object(b)) => a.extend(b),
        (slot, from) => *slot = from,
    }
}

fn cmd_analyze(a: AnalyzeArgs) -> Report {
    let r = Report::new(
        "analyze",
        json!({
            "file": a.file.display().to_string(),
            "coldist": a.dist.coldist,
            "spectrum": a.dist.spectrum,
            "expect_dfree": a.expect_dfree,
        }),
    );
    let g = match read(&a.file) {
        Ok(g) => g,
        Err(e) => return r.fail(Status::InputError, e),
    };
    let mut r = analysis_report(r, &g, &a.dist.options(), json!({}));
    if let (Status::Ok, Some(want)) = (r.status, a.expect_dfree) {
        let got = r.results["distances"]["d_free"].as_u64();
        if got != Some(want as u64) {
            let got = got.map_or("nothing".to_string(), |d| d.to_string());
            r = r.fail(
                Status::Mismatch,
                format!("expected d_free {want}, computed {got}"),
            );
        }
    }
    r
}

fn field_of(f: &FieldArgs) -> Result<Field, String> {
    let header = match &f.modulus {
        Some(m) => format!("field GF({}) modulus {m}", f.q),
        None => format!("field GF({})", f.q),
    };
    parse_field_header(&header).map_err(|e| e.to_string())
}

fn algebra_of(f: &FieldArgs) -> Result<Algebra, String> {
    Algebra::new(f.n, &field_of(f)?).map_err(|e| e.to_string())
}

fn cmd_cyclic(c: CyclicCommand) -> Report {
    match c {
        CyclicCommand::Autos(f) => {
            let r = Report::new("cyclic autos", json!({"n": f.n, "q": f.q, "modulus": f.modulus}));
            match algebra_of(&f).and_then(|alg| automorphism_list(&alg).map_err(|e| e.to_string())) {
                Ok(list) => r.with(list),
                Err(e) => r.fail(Status::InputError, e),
            }
        }
        CyclicCommand::Build {
            field,
            sigma,
            g,
            dist,
        } => {
            let r = Report::new(
                "cyclic build",
                json!({"n": field.n, "q": field.q, "modulus": field.modulus, "sigma": sigma, "g": g,
                       "coldist": dist.coldist, "spectrum": dist.spectrum}),
            );
            let built = algebra_of(&field).and_then(|alg| {
                let s = Automorphism::parse(&alg, &sigma).map_err(|e| e.to_string())?;
                let gp = SkewPoly::parse(&s, &g).map_err(|e| e.to_string())?;
                Ok(ideal_generator_matrix(&gp))
            });
            match built {
                Err(e) => r.fail(Status::InputError, e),
                Ok(Err(SkewError::NotDirectSummand)) => r.fail(Status::Mismatch, SkewError::NotDirectSummand),
                Ok(Err(e)) => r.fail(Status::InputError, e),
                Ok(Ok(m)) => {
                    let extra = json!({ "matrix": m.to_text_rows(), "matrix_file": format_matrix_file(&m) });
                    analysis_report(r, &m, &dist.options(), extra)
                }
            }
        }
        CyclicCommand::Check { file, sigma } => {
            let r = Report::new(
                "cyclic check",
                json!({"file": file.display().to_string(), "sigma": sigma}),
            );
            let out = read(&file).and_then(|g| {
                let alg = Algebra::new(g.cols(), g.field()).map_err(|e| e.to_string())?;
                let s = Automorphism::parse(&alg, &sigma).map_err(|e| e.to_string())?;
                is_sigma_cyclic(&g, &s).map_err(|e| e.to_string())
            });
            match out {
                Ok(c) => r.with(json!({ "sigma_cyclic": c })),
                Err(e) => r.fail(Status::InputError, e),
            }
        }
    }
}

/// `Err` carries raw text for `export` without `--out`.
fn cmd_catalog(c: CatalogCommand) -> Result<Report, String> {
    Ok(match c {
        CatalogCommand::List => {
            let entries: Vec<Value> = catalog::list()
                .iter()
                .map(|e| {
                    let mut v = serde_json::to_value(e).expect("serializable");
                    v["q"] = json!(e.q());
                    if let Some((base, cols)) = e.punctured_from() {
                        v["punctured_from"] = json!({ "base": base, "columns": cols });
                    }
                    v
                })
                .collect();
            Report::new("catalog list", json!({})).with(json!({ "count": entries.len(), "entries": entries }))
        }
        CatalogCommand::Verify {
            id,
            all,
            low_degree,
            budget,
        } => {
            let r = Report::new("catalog verify", json!({ "id": id, "all": all }));
            let entries = match (&id, all) {
                (Some(id), _) => match catalog::get(id) {
                    Ok(e) => vec![e],
                    Err(e) => return Ok(r.fail(Status::InputError, e)),
                },
                (None, true) => catalog::list().iter().collect(),
                (None, false) => return Ok(r.fail(Status::InputError, "give an id or --all")),
            };
            let opts = VerifyOptions {
                low_degree: match low_degree {
                    LowDegree::Never => LowDegreePolicy::Never,
                    LowDegree::Question => LowDegreePolicy::QuestionRows,
                    LowDegree::All => LowDegreePolicy::AllBinary,
                },
                budget: budget.budget(),
                ..Default::default()
            };
            let mut reports = Vec::new();
            for e in entries {
                match catalog::verify(e, &opts) {
                    Ok(rep) => reports.push(rep),
                    Err(CatalogError::Metrics(MetricsError::Budget(b))) => {
                        let failed = reports.iter().filter(|x| !x.passed).count();
                        return Ok(r
                            .with(json!({ "entries": reports, "failed": failed, "partial": true }))
                            .fail(Status::BudgetExceeded, format!("{b} at {}", e.id)));
                    }
                    Err(err) => return Ok(r.fail(Status::InputError, format!("{}: {err}", e.id))),
                }
            }
            let failed: Vec<&str> = reports.iter().filter(|x| !x.passed).map(|x| x.id).collect();
            let total = reports.len();
            let r = r.with(json!({
                "total": total,
                "passed": total - failed.len(),
                "failed": failed,
                "entries": reports,
            }));
            if failed.is_empty() {
                r
            } else {
                let msg = format!(
                    "{} of {total} entries failed: {}",
                    failed.len(),
                    failed.join(", ")
                );
                r.fail(Status::Mismatch, msg)
            }
        }
        CatalogCommand::Export { id, out } => {
            let r = Report::new("catalog export", json!({ "id": id }));
            let text = match catalog::get(&id).and_then(|e| e.export()) {
                Ok(t) => t,
                Err(e) => return Ok(r.fail(Status::InputError, e)),
            };
            match out {
                None => return Err(text),
                Some(path) => match std::fs::write(&path, &text) {
                    Ok(()) => r.with(json!({ "written": path.display().to_string() })),
                    Err(e) => r.fail(Status::InputError, e),
                },
            }
        }
    })
}
