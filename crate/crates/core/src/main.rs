use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use choosable::format::{parse_instance, serialize_instance};
use choosable::harness::experiment::{run_batch, RunOptions, SolverChoice};
use choosable::harness::gen::{gen_instance, Family, GenSpec, ListProfile};
use choosable::harness::svg::render_svg_seeded;
use choosable::instance::Instance;
use choosable::lists::{verify_coloring, Color, Coloring};
use choosable::oracle::{solve_exact_with_limit, SearchOutcome, DEFAULT_NODE_LIMIT};
use choosable::solver::{color_basic, color_one_crossing, color_thomassen, SolveError};
use choosable::validity::{check_theorem, AssumeColorable, TheoremId};

const OK: u8 = 0;
const FAIL: u8 = 1;
const VIOLATION: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "choosable", version, about = "List coloring of plane and near-planar graphs")]
struct Cli {
    /// Seed for generation and layout.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Node budget for the exact search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_LIMIT)]
    limit_nodes: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Report the hypotheses of a theorem on an instance file.
    Check {
        file: PathBuf,
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
    },
    /// Color an instance with a constructive solver.
    Solve {
        file: PathBuf,
        /// Solver: thomassen, basic or one-crossing. Picked from the
        /// instance when omitted.
        #[arg(long, value_enum)]
        solver: Option<SolverName>,
    },
    /// Decide colorability by exact search.
    Oracle { file: PathBuf },
    /// Run a batch: instance files, or `--count` generated instances.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        files: Vec<PathBuf>,
        /// Number of generated instances (seeds `seed..seed+count`).
        #[arg(long, default_value_t = 0)]
        count: u64,
        #[arg(long)]
        oracle_only: bool,
        /// Directory for falsification reproducers.
        #[arg(long)]
        reproducers: Option<PathBuf>,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Generate an instance.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Draw an instance as SVG, optionally with a coloring.
    Render {
        file: PathBuf,
        /// Coloring file: one color per vertex, in vertex order.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Color the instance first (constructive, else exact).
        #[arg(long)]
        solve: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverName {
    Thomassen,
    Basic,
    OneCrossing,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Triangulation,
    Grid,
    WheelStack,
    NearPlanar,
    FarFours,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileName {
    Uniform,
    Thomassen,
    Path,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value_t = FamilyName::Triangulation)]
    family: FamilyName,
    /// Vertices (triangulation).
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 5)]
    rows: usize,
    #[arg(long, default_value_t = 5)]
    cols: usize,
    #[arg(long, default_value_t = 6)]
    rim: usize,
    #[arg(long, default_value_t = 2)]
    rings: usize,
    #[arg(long, default_value_t = 0)]
    crossings: usize,
    /// N-vertices to plant.
    #[arg(long, default_value_t = 0)]
    n_vertices: usize,
    #[arg(long, default_value_t = 24)]
    spine: usize,
    #[arg(long, default_value_t = 4)]
    ears: usize,
    /// Pairwise distance of planted N-vertices.
    #[arg(long, default_value_t = 11)]
    spacing: usize,
    #[arg(long, value_enum, default_value_t = ProfileName::Uniform)]
    lists: ProfileName,
    /// List size for the uniform profile.
    #[arg(long, default_value_t = 5)]
    list_size: usize,
    /// Precolored path length for the path profile.
    #[arg(long, default_value_t = 2)]
    path_length: usize,
    #[arg(long, default_value_t = 7)]
    palette: u32,
}

impl GenArgs {
    fn spec(&self, seed: u64) -> GenSpec {
        let family = match self.family {
            FamilyName::Triangulation => Family::Triangulation { n: self.n, crossings: self.crossings },
            FamilyName::Grid => Family::Grid { rows: self.rows, cols: self.cols },
            FamilyName::WheelStack => Family::WheelStack { rim: self.rim, rings: self.rings },
            FamilyName::NearPlanar => Family::NearPlanar {
                rows: self.rows,
                cols: self.cols,
                crossings: self.crossings,
                n_vertices: self.n_vertices,
            },
            FamilyName::FarFours => Family::FarFours {
                spine: self.spine,
                ears: self.ears,
                n_vertices: self.n_vertices,
                spacing: self.spacing,
            },
        };
        let lists = match self.lists {
            ProfileName::Uniform => ListProfile::Uniform { size: self.list_size },
            ProfileName::Thomassen => ListProfile::Thomassen,
            ProfileName::Path => ListProfile::PrecoloredPath { length: self.path_length },
        };
        GenSpec { family, lists, palette: self.palette, seed }
    }
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
        format!("unknown theorem `{s}`; expected one of {}", names.join(", "))
    })
}

/// An error that ends the run with an exit code.
struct Exit(u8, String);

type Run = Result<u8, Exit>;

fn usage(msg: impl std::fmt::Display) -> Exit {
    Exit(USAGE, msg.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Check { file, theorem } => check(cli, &load(file)?, *theorem),
        Command::Solve { file, solver } => solve(cli, &load(file)?, *solver),
        Command::Oracle { file } => oracle(cli, &load(file)?),
        Command::Verify { theorem, files, count, oracle_only, reproducers, gen } => {
            let mut items = Vec::new();
            for f in files {
                items.push((f.display().to_string(), load(f).map_err(|e| e.1)));
            }
            for seed in cli.seed..cli.seed + count {
                let spec = gen.spec(seed);
                items.push((format!("{:?} seed={seed}", spec.family), gen_instance(&spec).map_err(|e| e.to_string())));
            }
            if items.is_empty() {
                return Err(usage("nothing to verify: give instance files or --count"));
            }
            let solver = if *oracle_only { SolverChoice::Oracle } else { SolverChoice::Constructive };
            let report = run_batch(items, *theorem, RunOptions { solver, node_limit: cli.limit_nodes });
            if let Some(dir) = reproducers {
                report.write_reproducers(dir).map_err(|e| Exit(FAIL, format!("{}: {e}", dir.display())))?;
            }
            let s = &report.summary;
            match cli.format {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
                OutputFormat::Text => {
                    for r in &report.instances {
                        println!("{:>5} {:<12} {}", r.index, format!("{:?}", r.outcome).to_uppercase(), r.label);
                    }
                    println!(
                        "total {} solved {} uncolorable {} skipped {} limit {} falsifications {}",
                        s.total,
                        s.solved,
                        s.uncolorable,
                        s.skipped,
                        s.limit,
                        s.falsifications.len()
                    );
                    for f in &s.falsifications {
                        println!("falsification {} ({:?}): {}", f.index, f.kind, f.detail);
                    }
                }
            }
            Ok(if s.falsifications.is_empty() { OK } else { FAIL })
        }
        Command::Gen { gen, out } => {
            let inst = gen_instance(&gen.spec(cli.seed)).map_err(usage)?;
            write_out(out.as_deref(), &serialize_instance(&inst))?;
            Ok(OK)
        }
        Command::Render { file, coloring, solve, out } => {
            let inst = load(file)?;
            let c = match (coloring, solve) {
                (Some(path), _) => Some(read_coloring(path, inst.n())?),
                (None, true) => Some(any_coloring(cli, &inst)?),
                (None, false) => None,
            };
            write_out(out.as_deref(), &render_svg_seeded(&inst, c.as_ref(), cli.seed))?;
            Ok(OK)
        }
    }
}

fn load(path: &Path) -> Result<Instance, Exit> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Exit> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Exit(FAIL, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_coloring(path: &Path, n: usize) -> Result<Coloring, Exit> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let colors: Vec<Color> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .filter(|t| *t != "COLORING")
        .map(|t| t.parse().map_err(|_| usage(format!("{}: bad color `{t}`", path.display()))))
        .collect::<Result<_, _>>()?;
    if colors.len() != n {
        return Err(usage(format!("{}: {} colors for {n} vertices", path.display(), colors.len())));
    }
    Ok(Coloring(colors))
}

fn print_coloring(cli: &Cli, status: &str, method: &str, c: Option<&Coloring>, extra: serde_json::Value) {
    match cli.format {
        OutputFormat::Json => {
            let mut v = json!({ "status": status, "method": method, "coloring": c.map(|c| &c.0) });
            if let (Some(o), Some(e)) = (v.as_object_mut(), extra.as_object()) {
                o.extend(e.clone());
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        OutputFormat::Text => {
            println!("{status} ({method})");
            if let Some(c) = c {
                let cs: Vec<String> = c.0.iter().map(|x| x.to_string()).collect();
                println!("COLORING {}", cs.join(" "));
            }
        }
    }
}

fn check(cli: &Cli, inst: &Instance, theorem: TheoremId) -> Run {
    let report = check_theorem(inst, theorem, &AssumeColorable).map_err(|e| Exit(VIOLATION, e.to_string()))?;
    match cli.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).expect("json")),
        OutputFormat::Text => {
            print!("{report}");
            println!("{}", if report.passed() { "PASS" } else { "FAIL" });
        }
    }
    Ok(if report.passed() { OK } else { VIOLATION })
}

fn pick_solver(inst: &Instance) -> SolverName {
    if inst.drawing.crossing_count() > 0 {
        SolverName::OneCrossing
    } else if inst.p.length() == 1 && (0..inst.n()).all(|v| inst.lists.size(v) != 4) {
        SolverName::Thomassen
    } else {
        SolverName::Basic
    }
}

fn constructive(inst: &Instance, solver: SolverName) -> Result<Coloring, SolveError> {
    let g = inst.drawing.base();
    match solver {
        SolverName::OneCrossing => color_one_crossing(&inst.drawing, &inst.lists),
        _ if inst.drawing.crossing_count() > 0 => {
            Err(SolveError::OutOfScope("this solver needs a plane graph; use one-crossing or the oracle".into()))
        }
        SolverName::Thomassen if inst.p.length() == 1 => {
            color_thomassen(g, &inst.lists, (inst.p.vertices[0], inst.p.vertices[1]))
        }
        SolverName::Thomassen => Err(SolveError::OutOfScope("thomassen needs a precolored edge".into())),
        SolverName::Basic => color_basic(g, &inst.p, &inst.lists),
    }
}

fn solve(cli: &Cli, inst: &Instance, solver: Option<SolverName>) -> Run {
    let solver = solver.unwrap_or_else(|| pick_solver(inst));
    let name = solver.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    match constructive(inst, solver) {
        Ok(c) => {
            print_coloring(cli, "SOLVED", &name, Some(&c), json!({}));
            Ok(OK)
        }
        Err(SolveError::HypothesisViolation(r)) => {
            match cli.format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "status": "HYPOTHESIS_VIOLATION", "report": r })).expect("json")
                ),
                OutputFormat::Text => print!("HYPOTHESIS_VIOLATION\n{r}"),
            }
            Ok(VIOLATION)
        }
        Err(e @ (SolveError::OutOfScope(_) | SolveError::Structure(_))) => Err(usage(e)),
        Err(SolveError::Internal { detail, reproducer }) => {
            eprintln!("{reproducer}");
            Err(Exit(FAIL, format!("internal error: {detail}")))
        }
    }
}

fn oracle(cli: &Cli, inst: &Instance) -> Run {
    let r = solve_exact_with_limit(&inst.drawing.original_adjacency(), &inst.lists, cli.limit_nodes);
    let (status, code) = match r.outcome() {
        SearchOutcome::Colorable => ("COLORABLE", OK),
        SearchOutcome::Uncolorable => ("UNCOLORABLE", FAIL),
        SearchOutcome::Limit => ("LIMIT", FAIL),
    };
    print_coloring(cli, status, "oracle", r.coloring.as_ref(), json!({ "nodes": r.stats.nodes }));
    Ok(code)
}

fn any_coloring(cli: &Cli, inst: &Instance) -> Result<Coloring, Exit> {
    if let Ok(c) = constructive(inst, pick_solver(inst)) {
        return Ok(c);
    }
    let adj = inst.drawing.original_adjacency();
    let r = solve_exact_with_limit(&adj, &inst.lists, cli.limit_nodes);
    let c = r.coloring.ok_or_else(|| Exit(FAIL, format!("no coloring ({:?})", r.stats.outcome)))?;
    verify_coloring(&adj, &inst.lists, &c).map_err(|d| Exit(FAIL, d.to_string()))?;
    Ok(c)
}
