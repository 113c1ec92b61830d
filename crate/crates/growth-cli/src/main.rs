use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use schubert_growth::cylgrowth::cgd_enumerate;
use schubert_growth::decgd::decgd_enumerate;
use schubert_growth::moduli_cover::{build_cover_graph, CoverDiagram, ExportFormat, Wall};
use schubert_growth::verify::{run_checks, Suite};
use schubert_growth::{BoxFrame, Partition};

#[derive(Parser)]
#[command(name = "growth", version, about = "Cylindrical growth diagrams and wall-crossing monodromy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every diagram of a frame, or every decgd of a shape.
    Enumerate(FrameArgs),
    /// Cross a wall of the facet carrying a diagram read from JSON.
    Wallcross(WallArgs),
    /// Build the monodromy graph of the cover over the facets.
    Cover(FrameArgs),
    /// Run the built-in checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FrameArgs {
    /// Number of rows of the rectangle.
    #[arg(long)]
    d: usize,
    /// The rectangle is d × (n − d).
    #[arg(long)]
    n: usize,
    /// Conditions separated by `;`, parts by `,`, e.g. "3,1;2;1;1".
    /// Defaults to d(n − d) single boxes.
    #[arg(long)]
    shape: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct WallArgs {
    /// JSON file holding a diagram or a decgd.
    #[arg(long)]
    input: PathBuf,
    /// Wall `p,q`: reverses the positions `q, …, p + r − 1`.
    #[arg(long)]
    wall: String,
    /// Cross twice and fail unless the input comes back.
    #[arg(long)]
    twice: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// json, dot or text.
    #[arg(long, default_value = "json")]
    format: String,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// conic or growth.
    #[arg(long)]
    only: Option<String>,
}

enum Failure {
    Usage(String),
    Check(String),
}

type CmdResult = Result<(), Failure>;

fn usage<E: ToString>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Enumerate(a) => enumerate(&a),
        Command::Wallcross(a) => wallcross(&a),
        Command::Cover(a) => cover(&a),
        Command::Verify(a) => verify(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("GROWTH_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().map_err(|_| format!("GROWTH_THREADS must be a positive integer, got `{v}`"))?;
    if n == 0 {
        return Err("GROWTH_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn parse_shape(frame: BoxFrame, s: &str) -> Result<Vec<Partition>, String> {
    let shape = s
        .split(';')
        .map(|cond| {
            let parts = cond
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad part `{x}` in `{cond}`")))
                .collect::<Result<Vec<_>, _>>()?;
            let p = frame.partition(&parts).map_err(|e| format!("condition `{cond}`: {e}"))?;
            if p.is_empty() {
                return Err(format!("condition `{cond}` is empty"));
            }
            Ok(p)
        })
        .collect::<Result<Vec<_>, String>>()?;
    let got: usize = shape.iter().map(Partition::size).sum();
    if got != frame.area() {
        return Err(format!(
            "shape sizes sum to {got}, but Σ|λᵢ| = d(n−d) = {}·{} = {} is required",
            frame.d,
            frame.cols(),
            frame.area()
        ));
    }
    if shape.len() < 3 {
        return Err(format!("need at least 3 conditions, got {}", shape.len()));
    }
    Ok(shape)
}

fn frame_and_shape(a: &FrameArgs) -> Result<(BoxFrame, Option<Vec<Partition>>), Failure> {
    let frame = BoxFrame::new(a.d, a.n).map_err(usage)?;
    let shape = a.shape.as_deref().map(|s| parse_shape(frame, s)).transpose().map_err(Failure::Usage)?;
    Ok((frame, shape))
}

fn format_of(o: &OutputArgs) -> Result<ExportFormat, Failure> {
    o.format.parse().map_err(usage)
}

fn emit(o: &OutputArgs, body: &str) -> CmdResult {
    match &o.out {
        Some(path) => fs::write(path, body).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(body.as_bytes()).map_err(usage),
    }
}

fn render_diagrams(ds: &[CoverDiagram], format: ExportFormat) -> Result<String, Failure> {
    match format {
        ExportFormat::Json => Ok(serde_json::to_string_pretty(ds).map_err(usage)? + "\n"),
        ExportFormat::Text => Ok(ds.iter().map(CoverDiagram::to_text).collect::<Vec<_>>().join("\n")),
        ExportFormat::Dot => Err(Failure::Usage("dot output is only available for `cover`".into())),
    }
}

fn enumerate(a: &FrameArgs) -> CmdResult {
    let (frame, shape) = frame_and_shape(a)?;
    let format = format_of(&a.output)?;
    let diagrams: Vec<CoverDiagram> = match shape {
        None => cgd_enumerate(frame).into_iter().map(CoverDiagram::Cgd).collect(),
        Some(shape) => decgd_enumerate(frame, &shape).map_err(usage)?.into_iter().map(CoverDiagram::Decgd).collect(),
    };
    emit(&a.output, &render_diagrams(&diagrams, format)?)?;
    eprintln!("{} diagrams", diagrams.len());
    Ok(())
}

fn parse_wall(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("wall must be `p,q` with integers p < q, got `{s}`");
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    let p = p.trim().parse().map_err(|_| bad())?;
    let q = q.trim().parse().map_err(|_| bad())?;
    Ok((p, q))
}

fn wallcross(a: &WallArgs) -> CmdResult {
    let format = format_of(&a.output)?;
    let text = fs::read_to_string(&a.input).map_err(|e| usage(format!("{}: {e}", a.input.display())))?;
    let input: CoverDiagram =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: not a diagram: {e}", a.input.display())))?;
    let r = match &input {
        CoverDiagram::Cgd(g) => g.r(),
        CoverDiagram::Decgd(d) => d.r(),
    };
    let (p, q) = parse_wall(&a.wall).map_err(Failure::Usage)?;
    let wall = Wall::new(r, p, q).map_err(usage)?;
    let mut out = input.cross(wall).map_err(usage)?;
    if a.twice {
        out = out.cross(wall).map_err(usage)?;
        if out != input {
            return Err(Failure::Check(format!("crossing ({p},{q}) twice does not restore the input")));
        }
    }
    let body = match format {
        ExportFormat::Json => serde_json::to_string_pretty(&out).map_err(usage)? + "\n",
        ExportFormat::Text => out.to_text(),
        ExportFormat::Dot => return Err(Failure::Usage("dot output is only available for `cover`".into())),
    };
    emit(&a.output, &body)
}

fn cover(a: &FrameArgs) -> CmdResult {
    let (frame, shape) = frame_and_shape(a)?;
    let format = format_of(&a.output)?;
    let shape = shape.unwrap_or_else(|| vec![frame.single_box(); frame.area()]);
    let g = build_cover_graph(frame, &shape).map_err(usage)?;
    emit(&a.output, &g.export(format))?;
    let k = g.components().len();
    eprintln!("{} nodes, {} edges, {k} component{}", g.nodes.len(), g.edges.len(), if k == 1 { "" } else { "s" });
    Ok(())
}

fn verify(a: &VerifyArgs) -> CmdResult {
    let suite = match a.only.as_deref() {
        None => Suite::All,
        Some(s @ ("conic" | "growth")) => s.parse().map_err(Failure::Usage)?,
        Some(s) => return Err(Failure::Usage(format!("unknown suite `{s}` (expected conic or growth)"))),
    };
    let results = run_checks(suite);
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<String> = results.iter().filter(|r| !r.passed).map(|r| format!("[{}] {}", r.id, r.name)).collect();
    if failed.is_empty() {
        println!("{} checks passed", results.len());
        Ok(())
    } else {
        Err(Failure::Check(format!("failed: {}", failed.join(", "))))
    }
}
