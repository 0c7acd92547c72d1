//! Command-line front end.
//!
//! Exit codes: 0 for YES or success, 1 for a verified NO or a failed
//! verification, 2 for usage, parse and I/O errors.

use crate::error::{Error, Result};
use crate::graph::{self, parse_vertex_list, random, twin_classes, Graph};
use crate::kernel::cluster::{kernelize_clique, kernelize_cluster};
use crate::kernel::maxleaf::{host_decomposition, kernelize_maxleaf, max_leaf_via_host};
use crate::kernel::{lift_solution, KernelTrace, SizeReport};
use crate::lds::{is_locating_dominating, solve_exact, CodeSet, Instance, Verdict};
use crate::modulators::{clique_modulator_2approx, cluster_modulator_3approx, Modulator, ModulatorKind};
use crate::reductions::{
    audit_observations, build_clique_reduction, build_or_composition, canonical_solution_from_clique,
    extract_bicoloring, extract_clique_from_solution, solution_from_bicoloring, solve_bicoloring_exact,
    solve_clique_exact, CliqueInstance, Construction, GadgetLayout, HypergraphInstance, Variant,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest pattern graph handed to the clique oracle when writing witnesses.
const WITNESS_SEARCH_N: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "locdom", version, about = "Locating-dominating sets: exact solving, kernels and hardness generators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find a minimum locating-dominating set, or decide whether one of size at most --budget exists.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
        /// Write the solution here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a vertex set is locating-dominating.
    Verify {
        graph: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Kernelize an instance and write the kernel, budget, trace and size report.
    Kernelize(KernelizeArgs),
    /// Map a kernel solution back to the original graph using a trace.
    Lift {
        trace: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate instances.
    #[command(subcommand)]
    Generate(Generate),
    /// Print graph statistics.
    Stats {
        graph: PathBuf,
        /// Host vertex list for the subdivision path census.
        #[arg(long)]
        host: Option<PathBuf>,
    },
    /// Check a solution of a generated instance against the gadget structure.
    Audit { layout: PathBuf, solution: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Param {
    Cluster,
    Clique,
    Maxleaf,
}

#[derive(Args, Debug)]
pub struct KernelizeArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub budget: usize,
    #[arg(long, value_enum)]
    pub param: Param,
    /// Modulator vertex list (cluster and clique); approximated when absent.
    #[arg(long)]
    pub modulator: Option<PathBuf>,
    /// Host vertex list (maxleaf); vertices of degree other than 2 when absent.
    #[arg(long)]
    pub host: Option<PathBuf>,
    /// Output prefix for `.graph`, `.budget`, `.trace.json` and `.report.json`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Vc,
    Clique,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Vc => Variant::Vc,
            VariantArg::Clique => Variant::Clique,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gnp,
    Cluster,
    NearClique,
    Path,
    Cycle,
}

#[derive(Subcommand, Debug)]
pub enum Generate {
    /// Reduce a Clique instance; writes a canonical solution when a k-clique exists.
    CliqueReduction {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compose hypergraph bicoloring instances; writes a solution when one instance is bicolorable.
    OrComposition {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Seeded random or structured graph.
    Random {
        #[arg(long, value_enum, default_value = "gnp")]
        family: Family,
        #[arg(short, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Clique sizes for the cluster family.
        #[arg(long, value_delimiter = ',', default_value = "3,3,2")]
        cliques: Vec<usize>,
        /// Modulator vertices (cluster) or extra vertices (near-clique).
        #[arg(long, default_value_t = 2)]
        extra: usize,
        #[arg(long, default_value_t = random::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run_from_env() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

/// Exit code for an error: failed verifications and extractions are 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InternalBug(_) | Error::Extraction { .. } => EXIT_NO,
        _ => EXIT_USAGE,
    }
}

pub fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve { graph, budget, out: file } => cmd_solve(graph, *budget, file.as_deref(), out),
        Command::Verify { graph, solution, budget } => cmd_verify(graph, solution, *budget, out),
        Command::Kernelize(args) => cmd_kernelize(args, out),
        Command::Lift { trace, solution, out: file } => cmd_lift(trace, solution, file.as_deref(), out),
        Command::Generate(g) => cmd_generate(g, out),
        Command::Stats { graph, host } => cmd_stats(graph, host.as_deref(), out),
        Command::Audit { layout, solution } => cmd_audit(layout, solution, out),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn read_graph(path: &Path) -> Result<Graph> {
    graph::parse_graph(&read(path)?)
}

fn read_set(path: &Path) -> Result<CodeSet> {
    CodeSet::parse(&read(path)?)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn emit_solution(d: &CodeSet, file: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match file {
        Some(path) => write_file(path, &d.to_file_string()),
        None => {
            let ids: Vec<String> = d.iter().map(|v| v.to_string()).collect();
            writeln!(out, "solution: {}", ids.join(" "))?;
            Ok(())
        }
    }
}

pub fn cmd_solve(graph: &Path, budget: Option<usize>, file: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(graph)?;
    match solve_exact(&g, budget)? {
        Some(d) => {
            writeln!(out, "size: {}", d.len())?;
            if budget.is_some() {
                writeln!(out, "YES")?;
            }
            emit_solution(&d, file, out)?;
            Ok(EXIT_YES)
        }
        None => {
            writeln!(out, "NO")?;
            Ok(EXIT_NO)
        }
    }
}

pub fn cmd_verify(graph: &Path, solution: &Path, budget: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(graph)?;
    let d = read_set(solution)?;
    match is_locating_dominating(&g, &d)? {
        Verdict::Invalid(v) => {
            writeln!(out, "invalid: {v:?}")?;
            Ok(EXIT_NO)
        }
        Verdict::Valid => match budget {
            Some(b) if d.len() > b => {
                writeln!(out, "valid but size {} exceeds budget {b}", d.len())?;
                Ok(EXIT_NO)
            }
            _ => {
                writeln!(out, "valid, size {}", d.len())?;
                Ok(EXIT_YES)
            }
        },
    }
}

fn print_report(report: &SizeReport, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "vertices: {} -> {}", report.vertices_before, report.vertices_after)?;
    writeln!(out, "budget: {} -> {}", report.budget_before, report.budget_after)?;
    if report.no_instance {
        writeln!(out, "budget went negative: NO instance")?;
    }
    for c in &report.checks {
        let status = match (c.holds, c.enforced) {
            (true, _) => "ok",
            (false, true) => "FAIL",
            (false, false) => "info",
        };
        writeln!(out, "[{status}] {}: {} <= {}", c.name, c.value, c.bound)?;
    }
    Ok(())
}

pub fn cmd_kernelize(args: &KernelizeArgs, out: &mut dyn Write) -> Result<i32> {
    match args.param {
        Param::Maxleaf if args.modulator.is_some() => {
            return Err(Error::Precondition("--modulator applies to cluster and clique only".into()))
        }
        Param::Cluster | Param::Clique if args.host.is_some() => {
            return Err(Error::Precondition("--host applies to maxleaf only".into()))
        }
        _ => {}
    }
    let inst = Instance::new(read_graph(&args.graph)?, args.budget);
    let (kernel, trace, report) = match args.param {
        Param::Cluster | Param::Clique => {
            let kind = if args.param == Param::Cluster { ModulatorKind::Cluster } else { ModulatorKind::Clique };
            let modulator = match &args.modulator {
                Some(p) => Some(Modulator::parse(&inst.graph, kind, &read(p)?)?),
                None => None,
            };
            if kind == ModulatorKind::Cluster {
                kernelize_cluster(&inst, modulator.as_ref())?
            } else {
                kernelize_clique(&inst, modulator.as_ref())?
            }
        }
        Param::Maxleaf => {
            let host = match &args.host {
                Some(p) => Some(parse_vertex_list(&read(p)?)?),
                None => None,
            };
            kernelize_maxleaf(&inst, host.as_deref())?
        }
    };
    write_file(&with_suffix(&args.out, ".graph"), &kernel.graph.to_string())?;
    write_file(&with_suffix(&args.out, ".budget"), &format!("{}\n", kernel.budget))?;
    write_file(&with_suffix(&args.out, ".trace.json"), &trace.to_json()?)?;
    write_file(&with_suffix(&args.out, ".report.json"), &serde_json::to_string_pretty(&report)?)?;
    print_report(&report, out)?;
    Ok(EXIT_YES)
}

pub fn cmd_lift(trace: &Path, solution: &Path, file: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let trace = KernelTrace::from_json(&read(trace)?)?;
    let d = read_set(solution)?;
    let lifted = lift_solution(&trace, &d)?;
    writeln!(out, "lifted size: {} (budget {})", lifted.len(), trace.original_budget)?;
    emit_solution(&lifted, file, out)?;
    Ok(if lifted.len() <= trace.original_budget { EXIT_YES } else { EXIT_NO })
}

fn write_generated(prefix: &Path, g: &Graph, layout: &GadgetLayout, out: &mut dyn Write) -> Result<()> {
    write_file(&with_suffix(prefix, ".graph"), &g.to_string())?;
    write_file(&with_suffix(prefix, ".budget"), &format!("{}\n", layout.budget))?;
    write_file(&with_suffix(prefix, ".layout.json"), &layout.to_json()?)?;
    writeln!(out, "vertices: {}", g.n())?;
    writeln!(out, "edges: {}", g.m())?;
    writeln!(out, "budget: {}", layout.budget)?;
    Ok(())
}

pub fn cmd_generate(cmd: &Generate, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Generate::CliqueReduction { graph, k, out: prefix } => {
            let h = read_graph(graph)?;
            let (g, _, layout) = build_clique_reduction(&CliqueInstance::new(h.clone(), *k)?)?;
            write_generated(prefix, &g, &layout, out)?;
            if h.n() <= WITNESS_SEARCH_N {
                if let Some(clique) = solve_clique_exact(&h, *k) {
                    let d = canonical_solution_from_clique(&layout, &clique)?;
                    write_file(&with_suffix(prefix, ".solution"), &d.to_file_string())?;
                    writeln!(out, "witness: clique {clique:?}")?;
                }
            }
            Ok(EXIT_YES)
        }
        Generate::OrComposition { files, variant, out: prefix } => {
            let instances = files
                .iter()
                .map(|f| read(f)?.parse::<HypergraphInstance>())
                .collect::<Result<Vec<_>>>()?;
            let (g, _, layout) = build_or_composition(&instances, (*variant).into())?;
            write_generated(prefix, &g, &layout, out)?;
            for (i, h) in instances.iter().enumerate() {
                if let Ok(Some(coloring)) = solve_bicoloring_exact(h) {
                    let d = solution_from_bicoloring(&layout, i, &coloring)?;
                    write_file(&with_suffix(prefix, ".solution"), &d.to_file_string())?;
                    writeln!(out, "witness: instance {i}")?;
                    break;
                }
            }
            Ok(EXIT_YES)
        }
        Generate::Random { family, n, p, cliques, extra, seed, out: file } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::Precondition(format!("--p must lie in [0, 1], got {p}")));
            }
            let mut rng = random::rng(*seed);
            let g = match family {
                Family::Gnp => random::gnp(&mut rng, *n, *p),
                Family::Cluster => random::planted_cluster(&mut rng, cliques, *extra, *p),
                Family::NearClique if extra > n => {
                    return Err(Error::Precondition(format!("--extra {extra} exceeds -n {n}")))
                }
                Family::NearClique => random::near_clique(&mut rng, *n, *extra, *p),
                Family::Path => graph::path(*n),
                Family::Cycle => graph::cycle(*n),
            };
            match file {
                Some(path) => write_file(path, &g.to_string())?,
                None => write!(out, "{g}")?,
            }
            Ok(EXIT_YES)
        }
    }
}

pub fn cmd_stats(graph: &Path, host: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(graph)?;
    writeln!(out, "vertices: {}", g.n())?;
    writeln!(out, "edges: {}", g.m())?;
    let hist = twin_classes(&g, None).histogram();
    let parts: Vec<String> = hist.iter().enumerate().filter(|(_, &c)| c > 0).map(|(s, c)| format!("{s}:{c}")).collect();
    writeln!(out, "twin classes by size: {}", parts.join(" "))?;
    writeln!(out, "cluster modulator (3-approx): {}", cluster_modulator_3approx(&g).len())?;
    writeln!(out, "clique modulator (2-approx): {}", clique_modulator_2approx(&g).len())?;
    let host = match host {
        Some(p) => Some(parse_vertex_list(&read(p)?)?),
        None => None,
    };
    if g.n() == 0 || !g.is_connected() {
        writeln!(out, "subdivision paths: graph is not connected")?;
        return Ok(EXIT_YES);
    }
    let decomp = host_decomposition(&g, host.as_deref())?;
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    for p in &decomp.paths {
        *census.entry(p.len()).or_default() += 1;
    }
    let parts: Vec<String> = census.iter().map(|(len, c)| format!("{c}x{len}")).collect();
    writeln!(out, "subdivision paths: {} ({})", decomp.paths.len(), parts.join(" "))?;
    writeln!(out, "longest subdivision path: {}", decomp.longest_path())?;
    let k = if g.n() <= graph::DEFAULT_MAX_LEAF_CAP { graph::max_leaf_number_exact(&g).ok() } else { None };
    if let Some(k) = k.or_else(|| max_leaf_via_host(&g, &decomp).ok()) {
        let bound = (5 * k + k / 2).saturating_sub(1);
        writeln!(out, "max leaf number: {k}")?;
        let verdict = if decomp.paths.len() <= bound { "holds" } else { "FAILS" };
        writeln!(out, "paths <= 5k - 1 + floor(k/2) = {bound}: {verdict}")?;
    }
    Ok(EXIT_YES)
}

pub fn cmd_audit(layout: &Path, solution: &Path, out: &mut dyn Write) -> Result<i32> {
    let layout = GadgetLayout::from_json(&read(layout)?)?;
    let d = read_set(solution)?;
    match &layout.construction {
        Construction::OrComposition { .. } => {
            let report = audit_observations(&layout, &d)?;
            for e in &report.entries {
                writeln!(out, "[{}] {}: {}", if e.holds { "ok" } else { "FAIL" }, e.gadget, e.predicate)?;
            }
            writeln!(out, "selector: {} solution vertices, bound {}", report.selector_count, report.selector_bound)?;
            let extracted = match extract_bicoloring(&layout, &d) {
                Ok((i, coloring)) => {
                    writeln!(out, "extracted: instance {i}, coloring {coloring:?}")?;
                    true
                }
                Err(e) => {
                    writeln!(out, "extraction failed: {e}")?;
                    false
                }
            };
            Ok(if report.all_pass() && extracted { EXIT_YES } else { EXIT_NO })
        }
        Construction::CliqueReduction { .. } => match extract_clique_from_solution(&layout, &d) {
            Ok(clique) => {
                writeln!(out, "extracted: clique {clique:?}")?;
                Ok(EXIT_YES)
            }
            Err(e) => {
                writeln!(out, "extraction failed: {e}")?;
                Ok(EXIT_NO)
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("locdom").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["solve"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["kernelize", "g", "--budget", "1", "--param", "tree", "--out", "x"]).0, EXIT_USAGE);
        let (code, _, err) = run_args(&["solve", "/nonexistent/graph"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("/nonexistent/graph"));
        assert_eq!(run_args(&["--help"]).0, EXIT_YES);
    }

    #[test]
    fn flags_are_validated_before_reading() {
        let (code, _, err) = run_args(&["kernelize", "/nonexistent", "--budget", "1", "--param", "maxleaf", "--modulator", "m", "--out", "x"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--modulator"));
    }

    #[test]
    fn suffixes_append() {
        assert_eq!(with_suffix(Path::new("out/k"), ".trace.json"), PathBuf::from("out/k.trace.json"));
    }
}
