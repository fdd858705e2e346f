//! Command-line front end: generators, verification reports, bounds,
//! exhaustive search, densest-color traces and circuits.
//!
//! Exit codes: 0 success, 1 a checked inequality failed, 2 usage, I/O or
//! parse error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use monocomp::bounds::{
    brute_force_m_with, densest_color_trace, density_bound, lower_bound, random_coloring, rational_string,
    DensestColorTrace, SearchConfig,
};
use monocomp::coloring::{mono_components, pairs, Color, ColoredCompleteGraph};
use monocomp::constructions::{affine_coloring, density_split, k3_coloring};
use monocomp::euler::{best_mono_circuit, class_circuits, Circuit};
use monocomp::inequality::guaranteed_component;
use monocomp::{Error, MultipartiteHost};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "monocomp", version, about = "Monochromatic components in edge-colorings of complete graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a coloring file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file; stdout when omitted.
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
    /// Recompute components and check the guaranteed bounds.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Include the densest-color trace.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the lower bound on the largest monochromatic component.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compute M(n,k) exhaustively.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write a coloring attaining M(n,k) to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Densest-color trace of a full coloring.
    Trace {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Longest monochromatic circuit after making each class Eulerian.
    Circuit {
        #[command(flatten)]
        input: InputArgs,
        /// Restrict to one color.
        #[arg(long)]
        color: Option<Color>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Coloring file, or `-` for stdin.
    #[arg(long, short)]
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Four-part 3-coloring with every component at most ceil(C(n,2)/6).
    K3 {
        #[arg(long)]
        n: usize,
    },
    /// (q+1)-coloring from the affine plane over Z_q, q prime.
    Affine {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
    /// Uniform random k-coloring.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Density split of a multipartite host: color 1 is the split, color 2
    /// the remaining host edges, same-part pairs stay uncolored.
    DensitySplit {
        /// Comma-separated part sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::CheckFailed(_)) => EXIT_CHECK_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Gen { kind, output } => {
            let text = generate(kind)?.to_text();
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input, trace, json } => {
            let coloring = read_coloring(&input.input)?;
            let report = VerificationReport::new(&coloring, trace)?;
            out.write_all(render_report(&report, format(json)).as_bytes())?;
            Ok(if report.passes() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Bound { n, k, json } => {
            let lower = rational_string(&lower_bound(n, k)?);
            if json {
                let density = rational_string(&density_bound(n, k)?);
                writeln!(out, "{}", to_json(&json!({"n": n, "k": k, "lower_bound": lower, "density_bound": density})))?;
            } else {
                writeln!(out, "{lower}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Search { n, k, jobs, witness, json } => {
            let config = SearchConfig {
                jobs: jobs.max(1),
                ..SearchConfig::default()
            };
            let result = brute_force_m_with(n, k, &config)?;
            if let Some(path) = witness {
                fs::write(&path, result.witness.to_text()).with_context(|| format!("writing {}", path.display()))?;
            }
            if json {
                let v = json!({"n": n, "k": k, "m": result.m, "witness": result.witness.to_text()});
                writeln!(out, "{}", to_json(&v))?;
            } else {
                writeln!(out, "M({n},{k}) = {}", result.m)?;
            }
            Ok(EXIT_OK)
        }
        Command::Trace { input, json } => {
            let trace = densest_color_trace(&read_coloring(&input.input)?)?;
            if json {
                writeln!(out, "{}", to_json(&trace))?;
            } else {
                out.write_all(render_trace(&trace).as_bytes())?;
            }
            Ok(if trace.passes() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Circuit { input, color, json } => {
            let coloring = read_coloring(&input.input)?;
            let (color, circuit) = match color {
                Some(c) => (c, longest_in_class(&coloring, c)?),
                None => best_mono_circuit(&coloring)?,
            };
            if json {
                let v = json!({"color": color, "length": circuit.len(), "vertices": circuit.vertices});
                writeln!(out, "{}", to_json(&v))?;
            } else {
                writeln!(out, "color: {color}")?;
                writeln!(out, "length: {}", circuit.len())?;
                let seq: Vec<String> = circuit.vertices.iter().map(|v| v.to_string()).collect();
                writeln!(out, "vertices: {}", seq.join(" "))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn generate(kind: GenKind) -> anyhow::Result<ColoredCompleteGraph> {
    Ok(match kind {
        GenKind::K3 { n } => k3_coloring(n)?,
        GenKind::Affine { q, n } => affine_coloring(q, n)?,
        GenKind::Random { n, k, seed } => random_coloring(n, k, seed)?,
        GenKind::DensitySplit { parts, k } => {
            let host = MultipartiteHost::new(parts)?;
            let split = density_split(&host, k)?;
            let mut g = ColoredCompleteGraph::uncolored(host.n(), 2)?;
            for u in 1..=host.n() {
                for v in u + 1..=host.n() {
                    if host.adjacent(u, v)? {
                        g.set(u, v, if split.contains_edge(u, v) { 1 } else { 2 })?;
                    }
                }
            }
            g
        }
    })
}

fn read_coloring(path: &Path) -> anyhow::Result<ColoredCompleteGraph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    ColoredCompleteGraph::parse(&text).map_err(|e| anyhow!(e).context(format!("parsing {}", path.display())))
}

fn longest_in_class(coloring: &ColoredCompleteGraph, color: Color) -> anyhow::Result<Circuit> {
    let circuits = class_circuits(coloring, color)?.circuits;
    let mut best: Option<Circuit> = None;
    for c in circuits {
        if best.as_ref().is_none_or(|b| c.len() > b.len()) {
            best = Some(c);
        }
    }
    Ok(best.unwrap_or(Circuit { vertices: vec![1] }))
}

/// JSON text with every number rendered as a decimal string.
fn to_json<T: Serialize>(value: &T) -> String {
    fn stringify(v: Value) -> Value {
        match v {
            Value::Number(n) => Value::String(n.to_string()),
            Value::Array(xs) => Value::Array(xs.into_iter().map(stringify).collect()),
            Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, stringify(v))).collect()),
            other => other,
        }
    }
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&stringify(v)).expect("values serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentRow {
    pub color: Color,
    pub min_vertex: usize,
    pub vertices: usize,
    pub edges: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxComponent {
    pub color: Color,
    pub edges: u64,
}

/// `lhs >= rhs` on integers; rationals are cleared of denominators first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

impl BoundCheck {
    fn new(name: &str, lhs: u128, rhs: u128) -> Self {
        Self {
            name: name.into(),
            lhs,
            rhs,
            holds: lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub pairs: u64,
    pub uncolored: u64,
    /// Components with at least one edge, by color then smallest vertex.
    pub components: Vec<ComponentRow>,
    pub max_component: Option<MaxComponent>,
    /// `C(n,2)/k^2`.
    pub density_bound: String,
    /// Guaranteed size for `k >= 2`.
    pub lower_bound: Option<String>,
    /// Only evaluated on full colorings.
    pub checks: Vec<BoundCheck>,
    pub trace: Option<DensestColorTrace>,
}

impl VerificationReport {
    pub fn new(coloring: &ColoredCompleteGraph, with_trace: bool) -> anyhow::Result<Self> {
        let (n, k) = (coloring.n(), coloring.k());
        let total = pairs(n);
        let mut components = Vec::new();
        for (i, comps) in mono_components(coloring).into_iter().enumerate() {
            for c in comps.into_iter().filter(|c| c.edge_count > 0) {
                components.push(ComponentRow {
                    color: (i + 1) as Color,
                    min_vertex: c.min_vertex(),
                    vertices: c.vertices.len(),
                    edges: c.edge_count,
                });
            }
        }
        let max_component = components
            .iter()
            .fold(None::<&ComponentRow>, |best, c| match best {
                Some(b) if b.edges >= c.edges => Some(b),
                _ => Some(c),
            })
            .map(|c| MaxComponent {
                color: c.color,
                edges: c.edges,
            });

        let density = if n >= 2 { rational_string(&density_bound(n, k)?) } else { "0".into() };
        let lower = if n >= 2 && k >= 2 {
            Some(rational_string(&lower_bound(n, k)?))
        } else {
            None
        };

        let mut checks = Vec::new();
        let mut trace = None;
        if coloring.is_full() && n >= 2 {
            let max = max_component.as_ref().map_or(0, |m| m.edges) as u128;
            let (c, kk) = (total as u128, k as u128);
            checks.push(BoundCheck::new("max component >= C(n,2)/k^2", max * kk * kk, c));
            if k == 3 {
                checks.push(BoundCheck::new("max component >= ceil(C(n,2)/6)", max, c.div_ceil(6)));
            } else if k >= 2 {
                // max >= C(n,2) / (k^2 - k + 5/4)
                checks.push(BoundCheck::new("max component >= C(n,2)/(k^2-k+5/4)", max * (4 * kk * kk - 4 * kk + 5), 4 * c));
            }
            let name = "heavy component of densest class >= C(n,2)/k^2";
            match guaranteed_component(coloring) {
                Ok((_, comp)) => checks.push(BoundCheck::new(name, comp.edge_count as u128 * kk * kk, c)),
                Err(Error::CheckFailed(_)) => checks.push(BoundCheck::new(name, 0, c)),
                Err(e) => return Err(e.into()),
            }
            if with_trace && k >= 2 {
                trace = Some(densest_color_trace(coloring)?);
            }
        }
        Ok(Self {
            n,
            k,
            pairs: total,
            uncolored: coloring.uncolored_count() as u64,
            components,
            max_component,
            density_bound: density,
            lower_bound: lower,
            checks,
            trace,
        })
    }

    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.holds) && self.trace.as_ref().is_none_or(|t| t.passes())
    }
}

pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = to_json(report);
            s.push('\n');
            s
        }
        Format::Text => render_report_text(report),
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn render_report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    s += &format!("n: {}\nk: {}\npairs: {}\nuncolored: {}\n", r.n, r.k, r.pairs, r.uncolored);
    s += &format!("components with edges: {}\n", r.components.len());
    if !r.components.is_empty() {
        s += &format!("{:>6} {:>10} {:>9} {:>8}\n", "color", "min_vertex", "vertices", "edges");
        for c in &r.components {
            s += &format!("{:>6} {:>10} {:>9} {:>8}\n", c.color, c.min_vertex, c.vertices, c.edges);
        }
    }
    match &r.max_component {
        Some(m) => s += &format!("max component: color {} with {} edges\n", m.color, m.edges),
        None => s += "max component: none\n",
    }
    s += &format!("density bound C(n,2)/k^2: {}\n", r.density_bound);
    if let Some(l) = &r.lower_bound {
        s += &format!("lower bound: {l}\n");
    }
    for c in &r.checks {
        s += &format!("check {}: {} >= {} {}\n", c.name, c.lhs, c.rhs, pass(c.holds));
    }
    if let Some(t) = &r.trace {
        s += &render_trace(t);
    }
    s += &format!("result: {}\n", pass(r.passes()));
    s
}

fn render_trace(t: &DensestColorTrace) -> String {
    let mut s = String::new();
    s += &format!(
        "trace: red color {} with {} edges, largest component {} edges\n",
        t.red, t.red_edges, t.max_component_edges
    );
    s += &format!("trace x: {}\ntrace z: {}\ntrace delta: {:.6}\n", rational_string(&t.x), rational_string(&t.z), t.delta);
    let sizes: Vec<String> = t.red_component_sizes.iter().map(|v| v.to_string()).collect();
    s += &format!("trace red component sizes: {}\n", sizes.join(" "));
    for p in &t.prefix_checks {
        s += &format!("trace prefix j={}: {} <= {:.4} {}\n", p.j, p.prefix, p.bound, pass(p.holds));
    }
    s += &format!(
        "trace pair sum: {} <= {:.4} {}\n",
        t.square_sum.pair_sum,
        t.square_sum.bound,
        pass(t.square_sum.holds)
    );
    s += &format!("trace x >= 1/k: {}\n", pass(t.density_at_least_inverse_k));
    s += &format!("trace z >= x^2: {}\n", pass(t.component_at_least_density_squared));
    s
}
