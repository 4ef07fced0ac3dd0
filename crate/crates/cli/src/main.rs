//! `rmdeg` — analyze a rational map between projective varieties: its
//! degree, the syzygy-derived bounds on that degree, Betti numbers, and
//! the defining equations of its Rees algebra and image.
//!
//! Exit codes: 0 success; 1 a bound was violated or a pipeline stage
//! failed; 2 input could not be parsed; 3 a computation budget was
//! exhausted; 4 point sampling failed (e.g. the map is not generically
//! finite).

mod input;
mod render;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use input::{InputDocument, Job, Overrides};
use render::Document;
use rmdeg_core::{
    degree_via_general_fiber, ideal_sum, minimal_free_resolution, BettiSummary, DegreeSummary,
    Error, FiberData, FiberSummary, IdealHandle, ReesData, ReesSummary, Result,
};

/// Bundled example corpus: (name, JSON document).
const CORPUS: &[(&str, &str)] = &[
    ("mon-a", include_str!("../corpus/mon-a.json")),
    ("mon-b", include_str!("../corpus/mon-b.json")),
    ("cremona", include_str!("../corpus/cremona.json")),
    ("veronese", include_str!("../corpus/veronese.json")),
    ("ci-d2", include_str!("../corpus/ci-d2.json")),
    ("ci-d3", include_str!("../corpus/ci-d3.json")),
    ("koszul-p1", include_str!("../corpus/koszul-p1.json")),
];

#[derive(Parser)]
#[command(
    name = "rmdeg",
    version,
    about = "Degrees of rational maps via syzygies, Rees algebras and general fibers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: invariants, degree, bounds, Betti numbers, Rees data.
    Analyze(RunArgs),
    /// Degree of the map from sampled general fibers.
    Degree(RunArgs),
    /// The bound battery and its verdicts against the computed degree.
    Bounds(RunArgs),
    /// Rees-algebra presentation, linear part and image equations.
    Rees(RunArgs),
    /// Betti table of the base ideal.
    Betti(RunArgs),
    /// The rank of the linear part of the defining equations.
    Jdrank(RunArgs),
    /// The bundled example corpus.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// Print the names of the bundled examples.
    List,
    /// Print the JSON input document of one bundled example.
    Show { name: String },
}

#[derive(Args)]
struct RunArgs {
    /// Input JSON document.
    file: Option<PathBuf>,

    /// Run a bundled example instead of a file (see `examples list`).
    #[arg(long, conflicts_with = "file")]
    example: Option<String>,

    /// Comma-separated forms, e.g. "x^2,y*z,z^2" (requires --vars).
    #[arg(long, conflicts_with_all = ["file", "example"], requires = "vars")]
    forms: Option<String>,

    /// Comma-separated variable names for --forms.
    #[arg(long)]
    vars: Option<String>,

    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,

    /// Coefficient characteristic: 0 for exact rationals, or a prime.
    #[arg(long = "char", value_name = "P")]
    characteristic: Option<u64>,

    /// Seed for the fiber-sampling generator.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,

    /// Number of independent fiber trials.
    #[arg(long, value_name = "N")]
    trials: Option<u64>,

    /// Cap on S-pairs per basis computation.
    #[arg(long = "budget-pairs", value_name = "N")]
    budget_pairs: Option<u64>,

    /// Cap on the degree reached by a basis computation.
    #[arg(long = "budget-deg", value_name = "N")]
    budget_deg: Option<u64>,
}

/// Which blocks of the report a subcommand fills in.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Stage {
    Analyze,
    Degree,
    Bounds,
    Rees,
    Betti,
    Jdrank,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Examples { action } => run_examples(action),
        Command::Analyze(args) => run_stage(Stage::Analyze, &args),
        Command::Degree(args) => run_stage(Stage::Degree, &args),
        Command::Bounds(args) => run_stage(Stage::Bounds, &args),
        Command::Rees(args) => run_stage(Stage::Rees, &args),
        Command::Betti(args) => run_stage(Stage::Betti, &args),
        Command::Jdrank(args) => run_stage(Stage::Jdrank, &args),
    };
    ExitCode::from(code)
}

fn run_examples(action: ExamplesAction) -> u8 {
    match action {
        ExamplesAction::List => {
            for (name, _) in CORPUS {
                println!("{name}");
            }
            0
        }
        ExamplesAction::Show { name } => match CORPUS.iter().find(|(n, _)| *n == name) {
            Some((_, text)) => {
                print!("{text}");
                0
            }
            None => {
                eprintln!(
                    "error: no bundled example named '{name}' (try `rmdeg examples list`)"
                );
                2
            }
        },
    }
}

fn run_stage(stage: Stage, args: &RunArgs) -> u8 {
    let started = Instant::now();
    match execute(stage, args) {
        Ok(mut doc) => {
            doc.timing_ms = started.elapsed().as_millis() as u64;
            if args.json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            if doc.any_violation() {
                eprintln!("error: a verified bound is violated by the computed degree");
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e.root() {
        Error::Parse { .. } => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::Sampling(_) => 4,
        _ => 1,
    }
}

fn load_document(args: &RunArgs) -> Result<InputDocument> {
    if let Some(forms) = &args.forms {
        let vars = args.vars.as_deref().unwrap_or_default();
        return Ok(InputDocument::from_shortcut(forms, vars));
    }
    if let Some(name) = &args.example {
        let text = CORPUS
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| *t)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("no bundled example named '{name}'"),
            })?;
        return InputDocument::from_json(text);
    }
    let path = args.file.as_ref().ok_or_else(|| Error::Parse {
        position: 0,
        message: "no input: pass a file, --example NAME, or --forms/--vars".into(),
    })?;
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        position: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    InputDocument::from_json(&text)
}

fn overrides(args: &RunArgs) -> Overrides {
    Overrides {
        characteristic: args.characteristic,
        seed: args.seed,
        trials: args.trials,
        budget_pairs: args.budget_pairs,
        budget_degree: args.budget_deg,
    }
}

fn execute(stage: Stage, args: &RunArgs) -> Result<Document> {
    let job = load_document(args)?.realize(&overrides(args))?;
    match stage {
        Stage::Analyze | Stage::Bounds => full_pipeline(stage, &job),
        Stage::Degree => degree_only(&job),
        Stage::Betti => betti_only(&job),
        Stage::Rees | Stage::Jdrank => rees_only(&job),
    }
}

/// The full pipeline; `bounds` keeps only the blocks it reports on.
fn full_pipeline(stage: Stage, job: &Job) -> Result<Document> {
    let report = rmdeg_core::assemble_report(&job.spec, &job.options)?;
    let mut doc = Document::from_report(report);
    if let Some(names) = &job.bound_set {
        doc.restrict_bounds(names);
    }
    if stage == Stage::Bounds {
        doc.betti = None;
        doc.rees = None;
        doc.fibers = None;
    }
    Ok(doc)
}

/// Runs only the fiber-sampling stage.
fn degree_only(job: &Job) -> Result<Document> {
    let (value, trials) = degree_via_general_fiber(
        &job.spec,
        job.options.trials,
        job.options.seed,
        job.options.mode,
        &job.options.budget,
    )
    .map_err(|e| Error::staged("degree stage", e))?;
    let valid: Vec<&FiberData> = trials.iter().filter(|t| t.is_valid()).collect();
    let mut distribution: BTreeMap<u64, usize> = BTreeMap::new();
    for t in &valid {
        *distribution.entry(t.fiber_multiplicity).or_insert(0) += 1;
    }
    let mut doc = Document::empty();
    doc.degree = Some(DegreeSummary {
        value,
        trials: job.options.trials,
        valid_trials: valid.len(),
        distribution,
        note: format!(
            "the degree is the modal multiplicity of the sampled general fibers \
             ({} valid trial(s))",
            valid.len()
        ),
    });
    doc.fibers = Some(trials.iter().map(fiber_summary).collect());
    let characteristic = job.spec.ring().field().characteristic();
    if characteristic != 0 {
        doc.warnings.push(format!(
            "computed over a field of characteristic {characteristic}; an inseparable field \
             extension would make the fiber count differ from the separable degree"
        ));
    }
    if valid.len() < trials.len() {
        doc.warnings.push(format!(
            "{} of {} trials produced fibers of the wrong dimension and were discarded",
            trials.len() - valid.len(),
            trials.len()
        ));
    }
    Ok(doc)
}

fn fiber_summary(f: &FiberData) -> FiberSummary {
    FiberSummary {
        point: f.sample_point.iter().map(|c| c.to_string()).collect(),
        image: f.image_point.iter().map(|c| c.to_string()).collect(),
        dimension: f.fiber_dim,
        multiplicity: f.fiber_multiplicity,
        regularity: f.reg_fiber,
        valid: f.is_valid(),
    }
}

/// Resolves the base ideal (plus the variety ideal, when present) over
/// the ambient ring and reports the Betti table.
fn betti_only(job: &Job) -> Result<Document> {
    let spec = &job.spec;
    let budget = &job.options.budget;
    let base = IdealHandle::new(spec.ring(), spec.forms().to_vec())
        .map_err(|e| Error::staged("resolution stage", e))?;
    let resolved = if spec.variety().is_zero() {
        base
    } else {
        ideal_sum(&base, spec.variety()).map_err(|e| Error::staged("resolution stage", e))?
    };
    let table = minimal_free_resolution(&resolved, budget)
        .map_err(|e| Error::staged("resolution stage", e))?;
    let mut doc = Document::empty();
    doc.betti = Some(BettiSummary {
        entries: table.to_string_map(),
        regularity: table
            .regularity()
            .map_err(|e| Error::staged("resolution stage", e))?,
        length: table.length(),
        table: table.to_string(),
    });
    Ok(doc)
}

/// Builds the Rees-algebra data and reports its summary; invariants that
/// need other stages are left out.
fn rees_only(job: &Job) -> Result<Document> {
    let spec = &job.spec;
    let budget = &job.options.budget;
    let rees = ReesData::build(spec, job.options.y_degree_cap, budget)
        .map_err(|e| Error::staged("Rees stage", e))?;
    let linear_type = rees
        .symmetric()
        .equals(rees.rees(), budget)
        .map_err(|e| Error::staged("Rees stage", e))?;
    let mut doc = Document::empty();
    doc.rees = Some(ReesSummary {
        jdrank: rees.jdrank(),
        analytic_spread: rees.analytic_spread(),
        x_linear_forms: rees
            .x_linear()
            .forms
            .iter()
            .map(|g| g.to_string())
            .collect(),
        x_linear_complete: rees.x_linear().complete,
        x_linear_cap: rees.x_linear().y_degree_cap,
        linear_type,
        symmetric_generator_count: rees.symmetric().generators().len(),
        rees_generator_count: rees.rees().generators().len(),
        rees_generators: rees
            .rees()
            .generators()
            .iter()
            .take(12)
            .map(|g| g.to_string())
            .collect(),
        image_equations: rees
            .fiber()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect(),
    });
    if !rees.x_linear().complete {
        doc.warnings.push(format!(
            "the scan for linear relations was truncated at y-degree {}",
            rees.x_linear().y_degree_cap
        ));
    }
    // The rank criterion: s = n means the map is birational onto its
    // image.
    if rees.jdrank() == spec.n() {
        doc.warnings
            .push("jdrank attains the source dimension: the map is birational onto its image".into());
    }
    Ok(doc)
}
