mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mesp_core::generators::{
    gen_fig1, gen_fig3, gen_gk, gen_hk, gen_jk, gen_random_connected, gen_random_gnm, NamedInstance,
};
use mesp_core::graph::{distance, path_eccentricity};
use mesp_core::io::{parse_document, write_dot_labeled, write_edge_list, EdgeListDocument};
use mesp_core::laminarity::{
    bounds_report, graph_diameter, BoundsCaps, CheckStatus, DEFAULT_DIAMETER_CAP,
};
use mesp_core::mesp::{adversarial_algorithm3k, algorithm3k, exact_mesp, ExactLimits, STEP_CALLS};
use mesp_core::search::{enumerate_spread_outcomes, spread_path, DEFAULT_SPREAD_CAP};
use mesp_core::{Error, Graph, Path};

use report::{join, Report};

#[derive(Parser)]
#[command(name = "mesp", version, about = "Minimum eccentricity shortest paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Limits {
    /// Largest vertex count accepted by the exact oracles
    #[arg(long, default_value_t = ExactLimits::default().max_n)]
    max_n: usize,
    /// Most shortest paths enumerated per vertex pair
    #[arg(long, default_value_t = ExactLimits::default().path_cap)]
    path_cap: usize,
    /// Most diameters enumerated
    #[arg(long, default_value_t = DEFAULT_DIAMETER_CAP)]
    diameter_cap: usize,
}

impl Limits {
    fn exact(&self) -> ExactLimits {
        ExactLimits {
            max_n: self.max_n,
            path_cap: self.path_cap,
        }
    }

    fn bounds(&self) -> BoundsCaps {
        BoundsCaps {
            exact: self.exact(),
            diameter_cap: self.diameter_cap,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Eccentricity of a path given as comma-separated ids or labels
    Ecc { file: PathBuf, path: String },
    /// Double BFS from a root
    Spread {
        #[arg(default_value = "-")]
        file: PathBuf,
        /// Root vertex id or label
        #[arg(long, default_value = "0")]
        root: String,
        /// Enumerate every outcome allowed by ties
        #[arg(long)]
        adversarial: bool,
        /// Most shortest paths per outcome pair
        #[arg(long, default_value_t = DEFAULT_SPREAD_CAP)]
        cap: usize,
    },
    /// Recursive 3-approximation
    Approx3k {
        #[arg(default_value = "-")]
        file: PathBuf,
        /// Also compute the worst result over all tie resolutions
        #[arg(long)]
        adversarial: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Exact minimum eccentricity shortest path
    Exact {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
    /// k, l, s and the inequalities between them
    Laminarity {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
    /// Generate an instance as an edge list
    Gen {
        family: Family,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count for random graphs
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Edge probability for random graphs
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Exact edge count for random graphs (replaces --p)
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check every approximation and laminarity bound on a graph
    Verify {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
    /// Graphviz export
    Dot {
        #[arg(default_value = "-")]
        file: PathBuf,
        /// COLOR=PATH, e.g. red=0,1,2; repeatable
        #[arg(long = "highlight")]
        highlights: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Fig1,
    Fig3,
    Gk,
    Hk,
    Jk,
    Random,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(m) | Failure::Violation(m) => f.write_str(m),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn read_input(file: &PathBuf) -> Res<EdgeListDocument> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(file).map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?
    };
    Ok(parse_document(&text)?)
}

fn write_output(output: &Option<PathBuf>, text: &str) -> Res<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn vertex(doc: &EdgeListDocument, spec: &str) -> Res<usize> {
    let v = match doc.labels.get(spec) {
        Some(&v) => v,
        None => spec.parse().map_err(|_| {
            Error::InvalidParameter(format!("'{spec}' is neither a vertex id nor a label"))
        })?,
    };
    if v >= doc.graph.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: doc.graph.n(),
        }
        .into());
    }
    Ok(v)
}

fn path(doc: &EdgeListDocument, spec: &str) -> Res<Path> {
    let vs = spec
        .split(',')
        .map(|s| vertex(doc, s.trim()))
        .collect::<Res<Vec<_>>>()?;
    Ok(Path::new(&doc.graph, vs)?)
}

fn cmd_ecc(doc: &EdgeListDocument, spec: &str) -> Res<Report> {
    let p = path(doc, spec)?;
    let e = path_eccentricity(&doc.graph, &p);
    let mut r = Report::default();
    r.line(format!(
        "path {} (length {}, shortest: {})",
        join(p.vertices()),
        p.len(),
        p.is_flagged_shortest()
    ))
    .line(format!(
        "eccentricity {} attained at vertex {}",
        e.value, e.witness
    ))
    .value("ecc", e.value)
    .value("witness", e.witness)
    .value("length", p.len())
    .value("shortest", p.is_flagged_shortest());
    Ok(r)
}

fn cmd_spread(doc: &EdgeListDocument, root: &str, adversarial: bool, cap: usize) -> Res<Report> {
    let g = &doc.graph;
    let root = vertex(doc, root)?;
    let s = spread_path(g, root);
    let mut r = Report::default();
    r.line(format!(
        "double BFS from {root}: x = {}, y = {}, d(x, y) = {}",
        s.x,
        s.y,
        s.path.len()
    ))
    .line(format!("path {}", join(s.path.vertices())))
    .line(format!(
        "eccentricity {} attained at vertex {}",
        s.ecc.value, s.ecc.witness
    ));
    r.value("root", root)
        .value("x", s.x)
        .value("y", s.y)
        .value("path", join(s.path.vertices()))
        .value("spread_ecc", s.ecc.value);
    if adversarial {
        let outcomes = enumerate_spread_outcomes(g, root, cap)?;
        r.line(format!(
            "{} possible outcomes under arbitrary ties:",
            outcomes.len()
        ));
        for o in &outcomes {
            r.line(format!(
                "  x = {}, y = {}: {} shortest paths, ecc {}..{}",
                o.x, o.y, o.paths, o.min_ecc, o.max_ecc
            ));
        }
        let worst = outcomes.iter().map(|o| o.max_ecc).max().unwrap_or(0);
        r.value("outcomes", outcomes.len())
            .value("spread_ecc_max", worst);
    }
    Ok(r)
}

fn cmd_approx3k(g: &Graph, adversarial: bool, limits: Limits) -> Res<Report> {
    let a = algorithm3k(g);
    let mut r = Report::default();
    r.line(format!(
        "spread pair from 0: ({}, {}); {} recursive calls",
        a.x, a.y, a.calls
    ))
    .line(format!("best path {}", join(a.path.vertices())))
    .line(format!("eccentricity {}", a.ecc))
    .value("approx3k_ecc", a.ecc)
    .value("path", join(a.path.vertices()))
    .value("calls", a.calls);
    if adversarial {
        let worst = adversarial_algorithm3k(g, limits.exact())?;
        r.line(format!(
            "worst eccentricity over all tie resolutions: {worst}"
        ))
        .value("approx3k_ecc_max", worst);
    }
    Ok(r)
}

fn cmd_exact(g: &Graph, limits: Limits) -> Res<Report> {
    let m = exact_mesp(g, limits.exact())?;
    let mut r = Report::default();
    r.line(format!(
        "minimum eccentricity {} on path {}",
        m.k,
        join(m.path.vertices())
    ))
    .line(format!(
        "{} vertex pairs, {} shortest paths examined",
        m.pairs_scanned, m.paths_enumerated
    ))
    .value("k", m.k)
    .value("ecc", m.k)
    .value("path", join(m.path.vertices()))
    .value("paths_enumerated", m.paths_enumerated);
    Ok(r)
}

fn bounds_lines(r: &mut Report, g: &Graph, limits: Limits) -> Res<bool> {
    let b = bounds_report(g, limits.bounds())?;
    r.line(format!(
        "k = {}, l = {}, s = {}, diam = {} ({} diameters)",
        b.k, b.l, b.s, b.diam, b.diameters
    ));
    for c in &b.checks {
        r.line(format!("  {:<12} {}", c.name, c.status));
    }
    r.value("k", b.k)
        .value("l", b.l)
        .value("s", b.s)
        .value("diam", b.diam)
        .value("diameters", b.diameters);
    let failed = b
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Fail)
        .count();
    r.value("bounds_failed", failed);
    Ok(failed == 0)
}

fn cmd_laminarity(g: &Graph, limits: Limits) -> Res<Report> {
    let mut r = Report::default();
    bounds_lines(&mut r, g, limits)?;
    Ok(r)
}

fn cmd_verify(g: &Graph, limits: Limits) -> Res<Report> {
    let mut r = Report::default();
    let mut violations = Vec::new();
    let k = exact_mesp(g, limits.exact())?.k;
    let diam = graph_diameter(g).0;
    let mut spread_max = 0;
    for root in 0..g.n() {
        let s = spread_path(g, root);
        spread_max = spread_max.max(s.ecc.value);
        if s.ecc.value > 5 * k {
            violations.push(format!(
                "spread from {root}: ecc {} > 5k = {}",
                s.ecc.value,
                5 * k
            ));
        }
        if 2 * distance(g, s.x, s.y) < diam {
            violations.push(format!("spread from {root}: 2 d(x, y) < diam"));
        }
    }
    r.line(format!(
        "double BFS over {} roots: max ecc {spread_max} (bound {})",
        g.n(),
        5 * k
    ));
    let a = algorithm3k(g);
    if a.ecc > 3 * k {
        violations.push(format!("approx3k ecc {} > 3k = {}", a.ecc, 3 * k));
    }
    if a.calls != STEP_CALLS {
        violations.push(format!("approx3k made {} calls", a.calls));
    }
    r.line(format!("approx3k: ecc {} (bound {})", a.ecc, 3 * k));
    if !bounds_lines(&mut r, g, limits)? {
        violations.push("laminarity bounds".into());
    }
    r.value("spread_ecc", spread_max)
        .value("approx3k_ecc", a.ecc)
        .value("violations", violations.len());
    if violations.is_empty() {
        r.line("all bounds hold");
        Ok(r)
    } else {
        print!("{}", r.render());
        Err(Failure::Violation(violations.join("; ")))
    }
}

fn instance(family: Family, k: u32) -> Res<NamedInstance> {
    Ok(match family {
        Family::Fig1 => gen_fig1(),
        Family::Fig3 => gen_fig3(),
        Family::Gk => gen_gk(k)?,
        Family::Hk => gen_hk(k)?,
        Family::Jk => gen_jk(k)?,
        Family::Random => unreachable!(),
    })
}

fn cmd_gen(family: Family, k: u32, seed: u64, n: usize, p: f64, m: Option<usize>) -> Res<String> {
    if let Family::Random = family {
        let g = match m {
            Some(m) => gen_random_gnm(n, m, seed)?,
            None => gen_random_connected(n, p, seed)?,
        };
        return Ok(write_edge_list(&g, &BTreeMap::new()));
    }
    let inst = instance(family, k)?;
    Ok(write_edge_list(&inst.graph, &inst.labels))
}

fn cmd_dot(doc: &EdgeListDocument, highlights: &[String]) -> Res<String> {
    let mut hl = Vec::new();
    for h in highlights {
        let (color, spec) = h
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("highlight '{h}' is not COLOR=PATH")))?;
        hl.push((path(doc, spec)?, color));
    }
    Ok(write_dot_labeled(&doc.graph, &doc.labels, &hl)?)
}

fn run(cli: Cli) -> Res<()> {
    let report = match cli.command {
        Command::Ecc { file, path } => cmd_ecc(&read_input(&file)?, &path)?,
        Command::Spread {
            file,
            root,
            adversarial,
            cap,
        } => cmd_spread(&read_input(&file)?, &root, adversarial, cap)?,
        Command::Approx3k {
            file,
            adversarial,
            limits,
        } => cmd_approx3k(&read_input(&file)?.graph, adversarial, limits)?,
        Command::Exact { file, limits } => cmd_exact(&read_input(&file)?.graph, limits)?,
        Command::Laminarity { file, limits } => cmd_laminarity(&read_input(&file)?.graph, limits)?,
        Command::Verify { file, limits } => cmd_verify(&read_input(&file)?.graph, limits)?,
        Command::Gen {
            family,
            k,
            seed,
            n,
            p,
            m,
            output,
        } => {
            return write_output(&output, &cmd_gen(family, k, seed, n, p, m)?);
        }
        Command::Dot {
            file,
            highlights,
            output,
        } => {
            return write_output(&output, &cmd_dot(&read_input(&file)?, &highlights)?);
        }
    };
    write_output(&None, &report.render())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mesp: {e}");
            ExitCode::from(1)
        }
    }
}
