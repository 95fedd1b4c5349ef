//! Command-line front end: graph generation and export, certified dimension
//! search, landmark-set verification, formula auditing, and code tables.
//!
//! Exit codes: 0 success (or verdict true), 1 verdict false / audit found
//! mismatches, 2 usage error, 3 search budget exceeded.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hexdim::audit::{
    audit_hc, audit_sp, default_hc_landmarks, default_sp_hypothesis, fixture_check_hc444,
    AuditError, AuditReport,
};
use hexdim::generators::{
    build_hc, build_sp, validate_structure, GeneratorError, HcParams, SpParams,
};
use hexdim::graph::{all_pairs_distances, GraphError, LabeledGraph, VertexLabel};
use hexdim::resolve::{
    code, is_independent, is_resolving, min_dimension, Element, SearchError, SearchOptions, Variant,
};

#[derive(Parser)]
#[command(name = "hexdim", version, about = "Resolvability parameters of hollow coronoid and starphene graphs", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as an edge list, DOT, or JSON (with its
    /// structure profile and validation report).
    Generate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute a minimum dimension by certified exhaustive search.
    Dims {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Record the exhaustive refutation of smaller sizes in the result.
        #[arg(long)]
        certify: bool,
        /// Accept only independent witness sets.
        #[arg(long)]
        independent: bool,
        /// Largest landmark-set size to try.
        #[arg(long)]
        cap: Option<usize>,
        /// Subset-test budget before the search aborts.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check whether a landmark set resolves (and optionally is independent).
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Comma-separated landmarks, e.g. `p1:1,r1:1,p2:1` (ids allowed).
        #[arg(long)]
        set: String,
        /// Also require the set to be independent.
        #[arg(long)]
        independent: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Audit the claimed closed-form codes (or the shipped reference tables
    /// with --fixtures) against the BFS oracle.
    Audit {
        #[command(flatten)]
        source: SourceArgs,
        /// Landmark set override, e.g. `p1:1,r1:1,p2:1`.
        #[arg(long)]
        set: Option<String>,
        /// Check the shipped HC(4,4,4) reference tables instead of formulas.
        #[arg(long)]
        fixtures: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Export the full code table for a landmark set as CSV.
    Codes {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated landmarks, e.g. `p1:1,r1:1,p2:1` (ids allowed).
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Mixed)]
        variant: VariantArg,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Hc,
    Sp,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Vertex,
    Edge,
    Mixed,
    Multiset,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Vertex => Variant::VertexMetric,
            VariantArg::Edge => Variant::EdgeMetric,
            VariantArg::Mixed => Variant::MixedMetric,
            VariantArg::Multiset => Variant::Multiset,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct SourceArgs {
    /// Graph family to build, or `file` to read an edge-list file.
    #[arg(value_enum)]
    family: FamilyArg,
    /// Ring count of the first segment.
    #[arg(long)]
    a: Option<u32>,
    /// Ring count of the second segment.
    #[arg(long)]
    b: Option<u32>,
    /// Ring count of the third segment.
    #[arg(long)]
    c: Option<u32>,
    /// Edge-list file (with `file`).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write to this path instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Budget(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<AuditError> for CliError {
    fn from(e: AuditError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl SourceArgs {
    fn params(&self) -> Result<(u32, u32, u32), CliError> {
        match (self.a, self.b, self.c) {
            (Some(a), Some(b), Some(c)) => Ok((a, b, c)),
            _ => Err(CliError::Usage(
                "this family needs --a, --b and --c".to_string(),
            )),
        }
    }

    fn load(&self) -> Result<LabeledGraph, CliError> {
        match self.family {
            FamilyArg::Hc => {
                let (a, b, c) = self.params()?;
                Ok(build_hc(HcParams { a, b, c })?)
            }
            FamilyArg::Sp => {
                let (a, b, c) = self.params()?;
                Ok(build_sp(SpParams { a, b, c })?)
            }
            FamilyArg::File => {
                let path = self
                    .input
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("`file` needs --input".to_string()))?;
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                let g = LabeledGraph::from_edge_list(&text)?;
                g.require_connected()?;
                Ok(g)
            }
        }
    }

    fn describe(&self) -> String {
        match self.family {
            FamilyArg::Hc => match self.params() {
                Ok((a, b, c)) => format!("hc({a},{b},{c})"),
                Err(_) => "hc".to_string(),
            },
            FamilyArg::Sp => match self.params() {
                Ok((a, b, c)) => format!("sp({a},{b},{c})"),
                Err(_) => "sp".to_string(),
            },
            FamilyArg::File => match &self.input {
                Some(p) => format!("file({})", p.display()),
                None => "file".to_string(),
            },
        }
    }
}

impl OutputArgs {
    fn write(&self, content: &str) -> Result<(), CliError> {
        match &self.output {
            Some(path) => fs::write(path, content)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}

/// Parses `p1:1,r1:1,p2:1` (or raw ids) into distinct vertex ids.
fn parse_set(g: &LabeledGraph, input: &str) -> Result<Vec<usize>, CliError> {
    let mut ids = Vec::new();
    for token in input.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let v = if let Ok(id) = token.parse::<usize>() {
            if id >= g.vertex_count() {
                return Err(CliError::Usage(format!(
                    "vertex id {id} out of range (graph has {} vertices)",
                    g.vertex_count()
                )));
            }
            id
        } else {
            let label: VertexLabel = token.parse()?;
            g.require_vertex(label)?
        };
        if ids.contains(&v) {
            return Err(CliError::Usage(format!("duplicate landmark {token}")));
        }
        ids.push(v);
    }
    if ids.is_empty() {
        return Err(CliError::Usage("landmark set is empty".to_string()));
    }
    Ok(ids)
}

fn parse_labels(input: &str) -> Result<Vec<VertexLabel>, CliError> {
    input.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<VertexLabel>().map_err(CliError::from))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(status) => status,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Generate {
            source,
            format,
            out,
        } => generate(source, format, out),
        Command::Dims {
            source,
            variant,
            certify,
            independent,
            cap,
            budget,
            threads,
            format,
            out,
        } => dims(
            source,
            variant.into(),
            SearchOptions {
                cap: cap.unwrap_or(usize::MAX),
                certify,
                require_independent: independent,
                budget,
                threads,
            },
            format,
            out,
        ),
        Command::Verify {
            source,
            variant,
            set,
            independent,
            format,
            out,
        } => verify(source, variant.into(), &set, independent, format, out),
        Command::Audit {
            source,
            set,
            fixtures,
            threads,
            format,
            out,
        } => audit(source, set, fixtures, threads, format, out),
        Command::Codes {
            source,
            set,
            variant,
            out,
        } => codes_table(source, &set, variant.into(), out),
    }
}

fn generate(
    source: SourceArgs,
    format: GraphFormat,
    out: OutputArgs,
) -> Result<ExitCode, CliError> {
    let g = source.load()?;
    let content = match format {
        GraphFormat::Edgelist => g.to_edge_list(),
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Json => {
            let profile_and_validation = match source.family {
                FamilyArg::Hc => {
                    let (a, b, c) = source.params()?;
                    let profile = HcParams { a, b, c }.profile();
                    Some((profile, validate_structure(&g, &profile)))
                }
                FamilyArg::Sp => {
                    let (a, b, c) = source.params()?;
                    let profile = SpParams { a, b, c }.profile();
                    Some((profile, validate_structure(&g, &profile)))
                }
                FamilyArg::File => None,
            };
            let labels: Vec<String> = (0..g.vertex_count())
                .map(|v| g.describe_vertex(v))
                .collect();
            let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
            let mut doc = json!({
                "instance": source.describe(),
                "graph": {
                    "n": g.vertex_count(),
                    "m": g.edge_count(),
                    "edges": edges,
                    "labels": labels,
                },
            });
            if let Some((profile, validation)) = profile_and_validation {
                doc["profile"] = serde_json::to_value(profile).unwrap();
                doc["validation"] = serde_json::to_value(&validation).unwrap();
                if !validation.passed() {
                    return Err(CliError::Usage(
                        "generated graph failed structural validation".to_string(),
                    ));
                }
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    };
    out.write(&content)?;
    Ok(ExitCode::SUCCESS)
}

fn dims(
    source: SourceArgs,
    variant: Variant,
    opts: SearchOptions,
    format: ReportFormat,
    out: OutputArgs,
) -> Result<ExitCode, CliError> {
    let g = source.load()?;
    let started = Instant::now();
    let result = min_dimension(&g, variant, &opts)?;
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let witness_labels: Option<Vec<String>> = result
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&v| g.describe_vertex(v)).collect());
    let content = match format {
        ReportFormat::Json => {
            let doc = json!({
                "result": {
                    "instance": source.describe(),
                    "variant": variant.as_str(),
                    "value": result.value,
                    "witness": result.witness,
                    "witness_labels": witness_labels,
                    "certified": result.certified,
                    "cap": result.cap,
                    "sizes_refuted": result.stats.sizes_refuted,
                    "subsets_examined": result.stats.subsets_examined,
                },
                "meta": { "elapsed_ms": elapsed_ms },
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        ReportFormat::Text => {
            let mut s = format!(
                "{} {} dimension: {}\n",
                source.describe(),
                variant.as_str(),
                result
                    .value
                    .map_or("not found up to cap".to_string(), |v| v.to_string())
            );
            if let Some(labels) = &witness_labels {
                s.push_str(&format!("witness: {{{}}}\n", labels.join(", ")));
            }
            s.push_str(&format!(
                "certified: {}  sizes refuted: {:?}  subsets examined: {}  elapsed: {} ms\n",
                result.certified,
                result.stats.sizes_refuted,
                result.stats.subsets_examined,
                elapsed_ms
            ));
            s
        }
    };
    out.write(&content)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(
    source: SourceArgs,
    variant: Variant,
    set: &str,
    independent: bool,
    format: ReportFormat,
    out: OutputArgs,
) -> Result<ExitCode, CliError> {
    let g = source.load()?;
    let dm = all_pairs_distances(&g)?;
    let ids = parse_set(&g, set)?;
    let check = is_resolving(&g, &dm, &ids, variant);
    let indep = independent.then(|| is_independent(&g, &ids));
    let violation = check
        .violation
        .map(|(x, y)| (x.describe(&g), y.describe(&g)));
    let verdict = check.resolving && indep.unwrap_or(true);

    let content = match format {
        ReportFormat::Json => {
            let doc = json!({
                "instance": source.describe(),
                "variant": variant.as_str(),
                "set": ids.iter().map(|&v| g.describe_vertex(v)).collect::<Vec<_>>(),
                "resolving": check.resolving,
                "independent": indep,
                "violation": violation,
                "verdict": verdict,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
        ReportFormat::Text => {
            let mut s = format!("resolving: {}\n", check.resolving);
            if let Some(i) = indep {
                s.push_str(&format!("independent: {i}\n"));
            }
            if let Some((x, y)) = &violation {
                s.push_str(&format!("violating pair: {x} ~ {y}\n"));
            }
            s
        }
    };
    out.write(&content)?;
    Ok(if verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn audit(
    source: SourceArgs,
    set: Option<String>,
    fixtures: bool,
    threads: usize,
    format: ReportFormat,
    out: OutputArgs,
) -> Result<ExitCode, CliError> {
    let report: AuditReport = match source.family {
        FamilyArg::Hc => {
            let (a, b, c) = source.params()?;
            if fixtures {
                if (a, b, c) != (4, 4, 4) {
                    return Err(CliError::Usage(
                        "reference tables exist only for hc --a 4 --b 4 --c 4".to_string(),
                    ));
                }
                fixture_check_hc444()?
            } else {
                let landmarks = match &set {
                    Some(s) => Some(parse_labels(s)?),
                    None => Some(default_hc_landmarks()),
                };
                audit_hc(HcParams { a, b, c }, landmarks, threads)?
            }
        }
        FamilyArg::Sp => {
            if fixtures {
                return Err(CliError::Usage(
                    "--fixtures applies to the hc family only".to_string(),
                ));
            }
            let (a, b, c) = source.params()?;
            let params = SpParams { a, b, c };
            let hypothesis = match &set {
                Some(s) => Some(parse_labels(s)?),
                None => Some(default_sp_hypothesis(params)),
            };
            audit_sp(params, hypothesis, threads)?
        }
        FamilyArg::File => {
            return Err(CliError::Usage(
                "audit applies to the generated families (hc, sp)".to_string(),
            ));
        }
    };

    let content = match format {
        ReportFormat::Json => format!("{}\n", report.to_json()),
        ReportFormat::Text => report.to_text(),
    };
    out.write(&content)?;
    Ok(if report.mismatch_count() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn codes_table(
    source: SourceArgs,
    set: &str,
    variant: Variant,
    out: OutputArgs,
) -> Result<ExitCode, CliError> {
    let g = source.load()?;
    let dm = all_pairs_distances(&g)?;
    let ids = parse_set(&g, set)?;

    let mut elements: Vec<Element> = Vec::new();
    if variant != Variant::EdgeMetric {
        elements.extend((0..g.vertex_count()).map(Element::Vertex));
    }
    if matches!(variant, Variant::EdgeMetric | Variant::MixedMetric) {
        elements.extend(g.edges().into_iter().map(Element::Edge));
    }

    let mut csv = String::from("kind,element");
    for i in 1..=ids.len() {
        csv.push_str(&format!(",c{i}"));
    }
    csv.push('\n');
    for element in elements {
        let mut row_code = code(&dm, element, &ids);
        if variant == Variant::Multiset {
            row_code.sort_unstable();
        }
        let kind = match element {
            Element::Vertex(_) => "vertex",
            Element::Edge(_) => "edge",
        };
        csv.push_str(&format!("{kind},{}", element.describe(&g)));
        for d in row_code {
            csv.push_str(&format!(",{d}"));
        }
        csv.push('\n');
    }
    out.write(&csv)?;
    Ok(ExitCode::SUCCESS)
}
