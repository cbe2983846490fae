//! `todim`: evaluate decision problems, compare methods, sweep lambda and
//! run the HTTP service.

mod range;

use std::fmt::Write as _;
use std::io::Write as _;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use todim_core::engine::sweep_lambda;
use todim_core::io::{
    canonical_json, emit_report, evaluate_document, parse_document, ranking_value, ProblemDocument,
    ReportFormat,
};
use todim_core::{DecisionProblem, EngineError, Method, RankingResult};
use todim_service::ServiceConfig;

use range::LambdaRange;

#[derive(Debug, thiserror::Error)]
enum CliError {
    /// Bad input, flags or problem content: exit 2.
    #[error("{0}")]
    User(String),
    /// Anything else: exit 1.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            Self::User(_) => 2,
            Self::Internal(_) => 1,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(err: EngineError) -> Self {
        Self::User(err.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "todim",
    version,
    about = "TODIM ranking under probabilistic hesitant, hesitant and crisp assessments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one problem file and print its report.
    Evaluate(EvaluateArgs),
    /// Rank problems side by side, one column per method.
    Compare(CompareArgs),
    /// Re-rank a problem over a range of lambda values.
    Sweep(SweepArgs),
    /// Run the HTTP decision service.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[arg(long)]
    input: PathBuf,
    /// phf, hf or classical; defaults to the file's cell mode.
    #[arg(long)]
    method: Option<Method>,
    /// Overrides the file's lambda.
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long, default_value = "table")]
    output: ReportFormat,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Problem files; give one with --strip-probabilities to compare it
    /// against its hesitant twin.
    #[arg(long, required = true)]
    input: Vec<PathBuf>,
    /// Add the hesitant twin of every probabilistic input.
    #[arg(long)]
    strip_probabilities: bool,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long, default_value = "table")]
    output: ReportFormat,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    method: Option<Method>,
    /// start:stop:step, all positive.
    #[arg(long, allow_hyphen_values = true)]
    lambda_range: String,
    #[arg(long, default_value = "table")]
    output: ReportFormat,
}

#[derive(Debug, Args)]
struct ServeArgs {
    #[arg(long, env = "TODIM_PORT", default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: IpAddr,
    /// Built console assets to serve next to the API.
    #[arg(long)]
    static_dir: Option<PathBuf>,
}

fn load(path: &Path) -> Result<ProblemDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::User(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| CliError::User(format!("{}: {e}", path.display())))
}

fn method_for(doc: &ProblemDocument, method: Option<Method>) -> Method {
    method.unwrap_or_else(|| Method::for_mode(doc.problem.mode()))
}

fn evaluate(args: &EvaluateArgs) -> Result<String> {
    let doc = load(&args.input)?;
    let method = method_for(&doc, args.method);
    let (eval, notes) = evaluate_document(&doc, method, args.lambda)?;
    Ok(emit_report(&doc.problem, &eval, args.output, &notes))
}

struct Column {
    label: String,
    problem: DecisionProblem,
    ranking: RankingResult,
}

fn label(path: &Path) -> String {
    let name = path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    );
    name.strip_suffix(".todim.json")
        .or_else(|| name.strip_suffix(".json"))
        .unwrap_or(&name)
        .to_owned()
}

fn rank_column(label: String, problem: DecisionProblem, lambda: Option<f64>) -> Result<Column> {
    let problem = match lambda {
        Some(l) => problem.with_lambda(l),
        None => problem,
    };
    let eval = todim_core::evaluate(&problem)?;
    Ok(Column {
        label,
        problem,
        ranking: eval.ranking,
    })
}

fn compare(args: &CompareArgs) -> Result<String> {
    let mut columns = Vec::new();
    for path in &args.input {
        let doc = load(path)?;
        let name = label(path);
        let twin = (args.strip_probabilities && doc.problem.mode() == todim_core::Mode::Phf)
            .then(|| doc.problem.strip_probabilities());
        columns.push(rank_column(name.clone(), doc.problem, args.lambda)?);
        if let Some(twin) = twin {
            columns.push(rank_column(
                format!("{name} (stripped)"),
                twin,
                args.lambda,
            )?);
        }
    }
    let names = &columns[0].problem.alternatives;
    if let Some(c) = columns.iter().find(|c| &c.problem.alternatives != names) {
        return Err(CliError::User(format!(
            "{} lists different alternatives than {}",
            c.label, columns[0].label
        )));
    }
    Ok(match args.output {
        ReportFormat::Json => canonical_json(&json!({
            "alternatives": names,
            "columns": columns
                .iter()
                .map(|c| {
                    let mut v = ranking_value(&c.problem, &c.ranking);
                    v["label"] = c.label.clone().into();
                    v
                })
                .collect::<Vec<Value>>(),
        })),
        ReportFormat::Table => compare_table(names, &columns),
    })
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::from(" ");
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                let _ = write!(line, " {cell:<w$}", w = widths[c]);
            } else {
                let _ = write!(line, "  {cell:>w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn compare_table(names: &[String], columns: &[Column]) -> String {
    let mut out = String::from("Ranks by method\n");
    let mut header = vec!["".to_owned()];
    let mut methods = vec!["method".to_owned()];
    for c in columns {
        header.push(c.label.clone());
        methods.push(format!("{} (O)", c.ranking.method));
    }
    let mut rows = vec![header, methods];
    for (i, name) in names.iter().enumerate() {
        let mut row = vec![name.clone()];
        for c in columns {
            row.push(format!(
                "{} ({:.2})",
                c.ranking.ranks()[i],
                c.ranking.overall[i]
            ));
        }
        rows.push(row);
    }
    out.push_str(&pad_table(&rows));
    out.push('\n');
    for c in columns {
        let _ = writeln!(
            out,
            "{}: {}",
            c.label,
            c.ranking.ordered_names(&c.problem.alternatives).join(" > ")
        );
    }
    out
}

fn sweep(args: &SweepArgs) -> Result<String> {
    let range: LambdaRange = args.lambda_range.parse().map_err(CliError::User)?;
    let doc = load(&args.input)?;
    let method = method_for(&doc, args.method);
    if method.mode() != doc.problem.mode() {
        return Err(EngineError::ModeMismatch {
            method: method.to_string(),
            mode: doc.problem.mode().to_string(),
        }
        .into());
    }
    let lambdas = range.values();
    let runs = sweep_lambda(&doc.problem, &lambdas)?;
    let problem = &doc.problem;
    Ok(match args.output {
        ReportFormat::Json => canonical_json(&Value::Array(
            runs.iter().map(|r| ranking_value(problem, r)).collect(),
        )),
        ReportFormat::Table => sweep_table(problem, &runs),
    })
}

fn sweep_table(problem: &DecisionProblem, runs: &[RankingResult]) -> String {
    let mut out = format!("Lambda sweep (method: {})\n", runs[0].method);
    let mut header = vec!["lambda".to_owned()];
    header.extend(problem.alternatives.iter().map(|a| format!("O({a})")));
    header.push("order".to_owned());
    let mut rows = vec![header];
    for r in runs {
        let mut row = vec![format!("{}", r.lambda)];
        row.extend(r.overall.iter().map(|o| format!("{o:.4}")));
        row.push(r.ordered_names(&problem.alternatives).join(" > "));
        rows.push(row);
    }
    out.push_str(&pad_table(&rows));
    out.push('\n');
    let changes: Vec<String> = runs
        .windows(2)
        .filter(|w| w[0].order != w[1].order)
        .map(|w| {
            format!(
                "  between {} and {}: {} -> {}",
                w[0].lambda,
                w[1].lambda,
                w[0].ordered_names(&problem.alternatives).join(" > "),
                w[1].ordered_names(&problem.alternatives).join(" > ")
            )
        })
        .collect();
    if changes.is_empty() {
        let _ = writeln!(
            out,
            "Order unchanged across the range: {}",
            runs[0].ordered_names(&problem.alternatives).join(" > ")
        );
    } else {
        out.push_str("Order changes\n");
        for c in changes {
            out.push_str(&c);
            out.push('\n');
        }
    }
    out
}

fn serve(args: &ServeArgs) -> Result<String> {
    let addr = SocketAddr::new(args.host, args.port);
    let config = ServiceConfig {
        static_dir: args.static_dir.clone(),
    };
    todim_service::run(addr, config, |local| {
        println!("todim service listening on http://{local}");
        let _ = std::io::stdout().flush();
    })
    .map_err(|e| CliError::Internal(format!("cannot serve on {addr}: {e}")))?;
    Ok(String::new())
}

fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Evaluate(a) => evaluate(a),
        Command::Compare(a) => compare(a),
        Command::Sweep(a) => sweep(a),
        Command::Serve(a) => serve(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
            {
                eprintln!("todim: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("todim: {e}");
            ExitCode::from(e.code())
        }
    }
}
