//! Command-line front end.
//!
//! Exit codes: 0 success, 1 violation or mismatch found, 2 parse, flag or
//! I/O error, 3 edgeless input where invariants were requested.

use std::path::{Path, PathBuf};

use chromstab_core::constructions::{ConstructionSpec, ExpectedInvariants, Family};
use chromstab_core::{chromatic_number, parse_graph6, stability, to_graph6, Graph, StabilityKind, Witness};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::corpus::{enumeration_limit, Corpus};
use crate::edgelist::{parse_edge_list, write_edge_list};
use crate::error::{Error, Result};
use crate::oracle_diff::{oracle_diff, DEFAULT_GUARD_N};
use crate::verify::{
    csv_summary, parse_checks, run_corpus, search_problem1, write_reports, RunOptions, VerificationReport,
};

#[derive(Debug, Parser)]
#[command(name = "chromstab", version, about = "Chromatic vertex and edge stability of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute chi, vs, ivs and es of one graph (or each graph of a file).
    Invariants(InvariantsArgs),
    /// Print a member of a named family.
    Generate(GenerateArgs),
    /// Run checks over a corpus and write one JSON report per check.
    Verify(VerifyArgs),
    /// Search a corpus for graphs with 2*chi >= Delta + offset and vs != ivs.
    Search(SearchArgs),
    /// Compare the solvers with brute-force oracles.
    OracleDiff(OracleDiffArgs),
}

#[derive(Debug, Args)]
#[group(id = "input", required = true, multiple = false)]
pub struct InputArgs {
    /// Inline graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    pub g6_file: Option<PathBuf>,
    /// Edge-list file ("n m" then one "u v" per edge).
    #[arg(long)]
    pub edgelist: Option<PathBuf>,
    /// Family name followed by its parameters, e.g. `--family gnk 2 3`.
    #[arg(long, num_args = 1.., value_name = "NAME [PARAMS]")]
    pub family: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub chi: bool,
    #[arg(long)]
    pub vs: bool,
    #[arg(long)]
    pub ivs: bool,
    #[arg(long)]
    pub es: bool,
    /// All of the above (the default when none is given).
    #[arg(long)]
    pub all: bool,
    /// Human-readable output instead of JSON.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Family name; one of petersen, complete, cycle, path, gnk, hk, gk,
    /// hprimek, gprimek, thm4sharp.
    pub family: String,
    pub params: Vec<String>,
    #[arg(long, value_enum, default_value = "g6")]
    pub format: Format,
    /// Write the claimed invariants of the construction here as JSON.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "corpus", required = true, multiple = false)]
pub struct CorpusArgs {
    /// All labeled graphs on N vertices (or on --from..=N).
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
    #[arg(long)]
    pub g6_file: Option<PathBuf>,
    #[arg(long)]
    pub g6: Option<String>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Smallest order when enumerating.
    #[arg(long, value_name = "M", requires = "enumerate")]
    pub from: Option<usize>,
    #[arg(long, default_value_t = default_workers())]
    pub workers: usize,
    /// Report wall_time_ms as 0.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Check id (repeatable): theorem-main, theorem-es, nordhaus-gaddum,
    /// lemma-delta, bounds, problem1, or all.
    #[arg(long = "check", default_value = "all")]
    pub checks: Vec<String>,
    /// Threshold offset for problem1.
    #[arg(long, default_value_t = 2)]
    pub offset: usize,
    #[arg(long, default_value = "chromstab-reports")]
    pub out_dir: PathBuf,
    /// Also write a CSV summary, one row per check.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Hypothesis is 2*chi >= Delta + offset.
    #[arg(long, default_value_t = 2)]
    pub offset: usize,
    /// Write the full report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct OracleDiffArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[arg(long, value_name = "M", requires = "enumerate")]
    pub from: Option<usize>,
    /// Allow graphs with more than 5 vertices.
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub pretty: bool,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main() -> i32 {
    run(std::env::args_os())
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout().lock();
    match dispatch(cli.command, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("chromstab: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Graph(chromstab_core::Error::Edgeless) => 3,
        _ => 2,
    }
}

fn dispatch(command: Command, out: &mut dyn std::io::Write) -> Result<i32> {
    match command {
        Command::Invariants(a) => cmd_invariants(&a, out),
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Search(a) => cmd_search(&a, out),
        Command::OracleDiff(a) => cmd_oracle_diff(&a, out),
    }
}

fn emit(out: &mut dyn std::io::Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::io(Path::new("<stdout>"), e))
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> Result<String> {
    Ok(if pretty { serde_json::to_string_pretty(value)? } else { serde_json::to_string(value)? })
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn parse_family(name: &str, params: &[String]) -> Result<ConstructionSpec> {
    let family = Family::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        Error::Usage(format!("unknown family {name:?}; expected one of {}", known.join(", ")))
    })?;
    let params = params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::Usage(format!("{name}: parameter {p:?} is not a non-negative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConstructionSpec::new(family, &params))
}

// ---------------------------------------------------------------- invariants

#[derive(Debug, Serialize)]
struct InvariantsOutput {
    graph: String,
    n: usize,
    edges: usize,
    delta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vs_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ivs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ivs_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    es: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    es_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<ExpectedInvariants>,
}

#[derive(Clone, Copy)]
struct Selection {
    chi: bool,
    vs: bool,
    ivs: bool,
    es: bool,
}

fn invariants(g: &Graph, sel: Selection, expected: Option<ExpectedInvariants>) -> Result<InvariantsOutput> {
    if !g.has_any_edge() {
        return Err(chromstab_core::Error::Edgeless.into());
    }
    let mut out = InvariantsOutput {
        graph: to_graph6(g)?,
        n: g.n(),
        edges: g.edge_count(),
        delta: g.max_degree(),
        chi: None,
        coloring: None,
        vs: None,
        vs_witness: None,
        ivs: None,
        ivs_witness: None,
        es: None,
        es_witness: None,
        expected,
    };
    if sel.chi {
        let (chi, coloring) = chromatic_number(g);
        out.chi = Some(chi);
        out.coloring = Some(coloring.colors().to_vec());
    }
    for (wanted, kind) in [
        (sel.vs, StabilityKind::Vertex),
        (sel.ivs, StabilityKind::IndependentVertex),
        (sel.es, StabilityKind::Edge),
    ] {
        if !wanted {
            continue;
        }
        let r = stability(g, kind)?;
        let (value, witness) = match kind {
            StabilityKind::Vertex => (&mut out.vs, &mut out.vs_witness),
            StabilityKind::IndependentVertex => (&mut out.ivs, &mut out.ivs_witness),
            StabilityKind::Edge => (&mut out.es, &mut out.es_witness),
        };
        *value = Some(r.value);
        *witness = Some(r.witness);
    }
    Ok(out)
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        Some(Witness::Vertices(v)) => format!("{v:?}"),
        Some(Witness::Edges(e)) => {
            let pairs: Vec<String> = e.iter().map(|e| format!("{}-{}", e.u(), e.v())).collect();
            format!("[{}]", pairs.join(", "))
        }
        None => String::new(),
    }
}

fn invariants_table(o: &InvariantsOutput) -> String {
    let mut lines = vec![
        format!("graph   {}", o.graph),
        format!("n       {}", o.n),
        format!("edges   {}", o.edges),
        format!("delta   {}", o.delta),
    ];
    if let Some(chi) = o.chi {
        lines.push(format!("chi     {chi}"));
    }
    for (name, value, witness) in
        [("vs", o.vs, &o.vs_witness), ("ivs", o.ivs, &o.ivs_witness), ("es", o.es, &o.es_witness)]
    {
        if let Some(v) = value {
            lines.push(format!("{name:<8}{v}  {}", witness_text(witness)));
        }
    }
    lines.join("\n")
}

fn cmd_invariants(a: &InvariantsArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    let none = !(a.chi || a.vs || a.ivs || a.es);
    let sel = Selection {
        chi: a.all || none || a.chi,
        vs: a.all || none || a.vs,
        ivs: a.all || none || a.ivs,
        es: a.all || none || a.es,
    };

    let mut graphs: Vec<(Graph, Option<ExpectedInvariants>)> = Vec::new();
    let input = &a.input;
    if let Some(s) = &input.g6 {
        graphs.push((parse_graph6(s)?, None));
    } else if let Some(path) = &input.g6_file {
        let corpus = Corpus::graph6_text(&read_file(path)?, path.display().to_string());
        for i in 0..corpus.len() {
            let g = corpus.get(i).map_err(|f| Error::Parse { line: f.line, message: f.message })?;
            graphs.push((g, None));
        }
    } else if let Some(path) = &input.edgelist {
        graphs.push((parse_edge_list(&read_file(path)?)?, None));
    } else if let Some(words) = &input.family {
        let spec = parse_family(&words[0], &words[1..])?;
        let c = spec.build()?;
        graphs.push((c.graph, Some(c.expected)));
    }

    // validate everything before printing anything
    if graphs.iter().any(|(g, _)| !g.has_any_edge()) {
        return Err(chromstab_core::Error::Edgeless.into());
    }
    for (g, expected) in graphs {
        let o = invariants(&g, sel, expected)?;
        let text = if a.pretty { invariants_table(&o) } else { to_json(&o, false)? };
        emit(out, &text)?;
    }
    Ok(0)
}

// ------------------------------------------------------------------ generate

#[derive(Serialize)]
struct Sidecar<'a> {
    family: &'a str,
    params: &'a [usize],
    graph6: String,
    n: usize,
    edges: usize,
    expected: &'a ExpectedInvariants,
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    let spec = parse_family(&a.family, &a.params)?;
    let c = spec.build()?;
    let graph6 = to_graph6(&c.graph)?;
    if let Some(path) = &a.sidecar {
        let sidecar = Sidecar {
            family: spec.family.name(),
            params: &spec.params,
            graph6: graph6.clone(),
            n: c.graph.n(),
            edges: c.graph.edge_count(),
            expected: &c.expected,
        };
        let mut text = to_json(&sidecar, true)?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::io(path, e))?;
    }
    match a.format {
        Format::G6 => emit(out, &graph6)?,
        Format::Edgelist => emit(out, write_edge_list(&c.graph).trim_end())?,
    }
    Ok(0)
}

// ------------------------------------------------------------ verify / search

fn build_corpus(c: &CorpusArgs, from: Option<usize>) -> Result<Corpus> {
    if let Some(n) = c.enumerate {
        let limit = enumeration_limit();
        if n > limit {
            return Err(Error::Usage(format!(
                "--enumerate {n} exceeds the limit {limit}; set {}=<n> to raise it",
                crate::corpus::MAX_N_ENV
            )));
        }
        Corpus::enumerate(from.unwrap_or(n), n, limit)
    } else if let Some(path) = &c.g6_file {
        Corpus::graph6_file(path)
    } else if let Some(s) = &c.g6 {
        Ok(Corpus::graph6_text(s, format!("graph6 {s}")))
    } else {
        Err(Error::Usage("no corpus given".into()))
    }
}

fn run_options(r: &RunArgs) -> RunOptions {
    RunOptions { workers: r.workers, timing: !r.no_timing }
}

/// Timing-free digest of a report for stdout.
#[derive(Serialize)]
struct Summary<'a> {
    check_id: &'a str,
    statement: &'a str,
    corpus: &'a str,
    graphs_scanned: u64,
    hypothesis_hits: u64,
    violation_count: usize,
    parse_failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<String>,
}

fn summary<'a>(r: &'a VerificationReport, path: Option<&Path>) -> Summary<'a> {
    Summary {
        check_id: r.check_id,
        statement: &r.statement,
        corpus: &r.corpus,
        graphs_scanned: r.graphs_scanned,
        hypothesis_hits: r.hypothesis_hits,
        violation_count: r.violations.len(),
        parse_failures: r.parse_failures,
        note: r.note.as_deref(),
        report: path.map(|p| p.display().to_string()),
    }
}

fn summary_table(rows: &[Summary<'_>]) -> String {
    let mut lines =
        vec![format!("{:<16} {:>10} {:>8} {:>10} {:>7}", "check", "scanned", "hits", "violations", "parse")];
    for s in rows {
        lines.push(format!(
            "{:<16} {:>10} {:>8} {:>10} {:>7}",
            s.check_id, s.graphs_scanned, s.hypothesis_hits, s.violation_count, s.parse_failures
        ));
        if let Some(note) = s.note {
            lines.push(format!("  {note}"));
        }
    }
    lines.join("\n")
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    let checks = parse_checks(&a.checks, a.offset)?;
    let corpus = build_corpus(&a.corpus, a.run.from)?;
    let reports = run_corpus(&corpus, &checks, run_options(&a.run))?;
    let paths = write_reports(&a.out_dir, &reports, false)?;
    if let Some(csv) = &a.csv {
        std::fs::write(csv, csv_summary(&reports)).map_err(|e| Error::io(csv, e))?;
    }

    let rows: Vec<Summary<'_>> = reports.iter().zip(&paths).map(|(r, p)| summary(r, Some(p))).collect();
    let text = if a.pretty { summary_table(&rows) } else { to_json(&rows, false)? };
    emit(out, &text)?;

    let mut code = 0;
    for (r, p) in reports.iter().zip(&paths) {
        if !r.violations.is_empty() {
            eprintln!("{}: {} violation(s), see {}", r.check_id, r.violations.len(), p.display());
            code = 1;
        }
    }
    Ok(code)
}

fn cmd_search(a: &SearchArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    let corpus = build_corpus(&a.corpus, a.run.from)?;
    let report = search_problem1(&corpus, a.offset, run_options(&a.run))?;
    if let Some(path) = &a.out {
        let mut text = report.to_json(a.pretty);
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::io(path, e))?;
    }

    #[derive(Serialize)]
    struct SearchOutput<'a> {
        #[serde(flatten)]
        summary: Summary<'a>,
        counterexamples: &'a [chromstab_core::checks::CheckOutcome],
    }
    let s = summary(&report, a.out.as_deref());
    let text = if a.pretty {
        summary_table(std::slice::from_ref(&s))
    } else {
        to_json(&SearchOutput { summary: s, counterexamples: &report.violations }, false)?
    };
    emit(out, &text)?;
    Ok(if report.violations.is_empty() { 0 } else { 1 })
}

// --------------------------------------------------------------- oracle-diff

fn cmd_oracle_diff(a: &OracleDiffArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    if let (Some(n), false) = (a.corpus.enumerate, a.force) {
        if n > DEFAULT_GUARD_N {
            return Err(Error::Usage(format!(
                "--enumerate {n} exceeds the oracle guard n <= {DEFAULT_GUARD_N}; pass --force to run anyway"
            )));
        }
    }
    let corpus = build_corpus(&a.corpus, a.from)?;
    if !a.force && corpus.max_order() > DEFAULT_GUARD_N {
        return Err(Error::Usage(format!(
            "corpus has graphs with {} vertices, above the oracle guard n <= {DEFAULT_GUARD_N}; pass --force to run anyway",
            corpus.max_order()
        )));
    }
    let report = oracle_diff(&corpus);
    emit(out, &to_json(&report, a.pretty)?)?;
    for m in &report.mismatches {
        eprintln!("mismatch on {}: {} solver {} oracle {}", m.graph, m.quantity, m.solver, m.oracle);
    }
    Ok(if report.mismatches.is_empty() { 0 } else { 1 })
}
