use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "fourvertex", version, about = "Exact extremal-vertex analysis of polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Predicates, extremal labels and counts as JSON.
    Analyze(AnalyzeArgs),
    /// Evolute centres, winding numbers and cusps as JSON.
    Evolute(EvoluteArgs),
    /// Split inequalities for one diagonal or all of them.
    Decompose(DecomposeArgs),
    /// Runs the property suite over random polygons.
    Fuzz(FuzzArgs),
    /// Samples an ellipse or flower curve into a polygon file.
    Sample(SampleArgs),
    /// Draws a polygon and its evolute as SVG.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// CSV (two rows, x then y) or JSON list of [x, y] pairs.
    pub input: PathBuf,
    /// Fail with exit code 3 unless every field can be computed.
    #[arg(long)]
    pub strict: bool,
    /// Treat a run of equal neighbouring radii as a single extremum.
    #[arg(long)]
    pub lenient_radius: bool,
    /// Largest polygon for which the genericity scan and circle census run.
    #[arg(long, default_value_t = 64)]
    pub census_limit: usize,
}

#[derive(Args, Debug)]
pub struct EvoluteArgs {
    pub input: PathBuf,
    /// Also write an SVG drawing.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Require both winding numbers; exit 3 if the evolute is degenerate.
    #[arg(long)]
    pub winding: bool,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    pub input: PathBuf,
    /// Cut along the diagonal between vertices A and B (0-based).
    #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with = "audit", required_unless_present = "audit")]
    pub diagonal: Option<Vec<usize>>,
    /// Report every diagonal.
    #[arg(long)]
    pub audit: bool,
    /// Skip the convexity and genericity checks and report raw counts only.
    #[arg(long, requires = "diagonal")]
    pub raw: bool,
}

#[derive(Args, Debug)]
pub struct FuzzArgs {
    /// Vertex counts, as `N` or `LO..HI` (inclusive).
    #[arg(long, default_value = "4..12", value_parser = commands::parse_range)]
    pub n: (usize, usize),
    /// Draws per generator kind.
    #[arg(long, default_value_t = 500)]
    pub count: usize,
    #[arg(long, env = "FOURVERTEX_SEED")]
    pub seed: Option<u64>,
    /// Comma-separated tags to run; all when omitted.
    #[arg(long, value_delimiter = ',')]
    pub tags: Vec<String>,
    /// Generator kinds: convex, coherent, nonconvex.
    #[arg(long, value_delimiter = ',')]
    pub kind: Vec<String>,
    /// Leave out the built-in corpus polygons.
    #[arg(long)]
    pub no_corpus: bool,
    /// Inverts the K-th in-circle answer of every circle census.
    #[arg(long, value_name = "K")]
    pub mutate_in_circle: Option<usize>,
    /// Lists the available tags and exits.
    #[arg(long)]
    pub list_tags: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CurveKind {
    Ellipse,
    Flower,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub kind: CurveKind,
    /// Ellipse semi-axis along x.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Ellipse semi-axis along y.
    #[arg(long, default_value_t = 0.63)]
    pub b: f64,
    /// Number of flower petals.
    #[arg(long, default_value_t = 6)]
    pub k: u32,
    #[arg(long, default_value_t = 0.01)]
    pub amplitude: f64,
    /// Number of samples.
    #[arg(short, default_value_t = 64)]
    pub m: usize,
    /// Output file (`.csv` or `.json`); CSV on stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MarkerKind {
    None,
    Global,
    Local,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub no_evolute: bool,
    /// Draw every neighbouring circle.
    #[arg(long)]
    pub circles: bool,
    /// Number the vertices.
    #[arg(long)]
    pub labels: bool,
    #[arg(long, value_enum, default_value_t = MarkerKind::None)]
    pub markers: MarkerKind,
    #[arg(long, default_value_t = 600.0)]
    pub width: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => commands::analyze(&a),
        Command::Evolute(a) => commands::evolute(&a),
        Command::Decompose(a) => commands::decompose(&a),
        Command::Fuzz(a) => commands::fuzz(&a),
        Command::Sample(a) => commands::sample(&a),
        Command::Render(a) => commands::render(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
