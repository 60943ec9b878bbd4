//! Command-line front end: parse ring constructions, analyze their
//! structure and graphs, export graphs, and run the statement checks on
//! one ring or a whole corpus.
//!
//! Exit status: 0 on success with no violated checks, 1 when any check
//! comes back violated, 2 on usage or construction errors.

mod export;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use starring_core::analysis::RingAnalysis;
use starring_core::annihilators::AnnihilatorTable;
use starring_core::corpus::{run_corpus, CorpusSpec};
use starring_core::graph::{Graph, GraphKind};
use starring_core::graph_analysis::metrics;
use starring_core::parse::parse_ring_spec;
use starring_core::report::{build_report, graph_json};
use starring_core::ring::DEFAULT_MAX_ORDER;
use starring_core::theorems::{check, run_all, CheckResult, CheckStatus, TheoremId};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const MAX_ORDER_ENV: &str = "STARRING_MAX_ORDER";

#[derive(Parser)]
#[command(
    name = "starring",
    about = "Finite *-rings: strong zero-divisor graphs, classification, and statement checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Strong,
    Star,
    Undirected,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, involution, classification, central projections, and
    /// graph structure for one ring.
    Analyze {
        /// Ring construction, e.g. "Z6", "Z2 x Z4", "M2(Z6)@id"
        spec: String,
        /// Emit the machine-readable report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Export a zero-divisor graph.
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value = "strong")]
        kind: KindArg,
        /// Export the complement instead of the graph itself.
        #[arg(long)]
        complement: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run statement checks against one ring; nonzero exit iff violated.
    Verify {
        spec: String,
        /// Check only these ids (repeatable); default is all of them.
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate a ring corpus and aggregate the checks over it.
    Corpus {
        #[arg(long, default_value_t = 100)]
        zmod_max: u32,
        #[arg(long, default_value_t = 256)]
        product_order_max: u64,
        /// Product factor pool, comma-separated (default 2,3,4,5,6,8,9).
        #[arg(long, value_delimiter = ',')]
        factors: Option<Vec<u32>>,
        /// Moduli n for the 2x2 matrix rings (default 2,3,4,6).
        #[arg(long, value_delimiter = ',')]
        matrix: Option<Vec<u32>>,
        /// Worker threads (default: all available).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn max_order() -> Result<u32> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(text) => text
            .parse()
            .map_err(|_| anyhow!("{MAX_ORDER_ENV} must be a positive integer, got '{text}'")),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn analyze_ring(spec_text: &str) -> Result<RingAnalysis> {
    let spec = parse_ring_spec(spec_text)?;
    let ring = spec.build(max_order()?)?;
    Ok(RingAnalysis::new(ring))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_graph_line(heading: &str, g: &Graph) {
    let m = metrics(g);
    let j = graph_json(g);
    let connectivity = if m.connected {
        "connected".to_string()
    } else {
        format!("disconnected ({} components)", m.component_count)
    };
    println!(
        "{heading}: {} vertices, {} edges, {connectivity}, diameter {}, girth {}",
        m.vertex_count,
        m.edge_count,
        j.diameter.render(),
        j.girth.render()
    );
    if let Some((x, y)) = j.complete_bipartite {
        println!("  complete bipartite: K_{{{x},{y}}}");
    }
    if !j.cut_vertices.is_empty() {
        println!("  cut vertices: {}", j.cut_vertices.join(", "));
    }
    if !j.pendants.is_empty() {
        println!("  pendant vertices: {}", j.pendants.join(", "));
    }
}

fn cmd_analyze(spec_text: &str, json: bool) -> Result<ExitCode> {
    let an = analyze_ring(spec_text)?;
    let checks = run_all(&an);
    if json {
        let report = build_report(&an, spec_text, &checks);
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        let c = &an.classification;
        println!("spec: {spec_text}");
        println!("order: {}", an.ring.order());
        println!(
            "involution: {}",
            if an.ring.involution_proper() {
                "proper".to_string()
            } else {
                let detail = an
                    .ring
                    .improper_witness()
                    .map(|(x, y)| {
                        format!(
                            " ((xy)* != y*x* at x = {}, y = {})",
                            an.label(x),
                            an.label(y)
                        )
                    })
                    .unwrap_or_default();
                format!("pseudo-involution{detail}")
            }
        );
        println!(
            "classification: rickart={} baer={} quasi-baer={} p.q.-baer={} semiproper={}",
            yes_no(c.is_rickart),
            yes_no(c.is_baer),
            yes_no(c.is_quasi_baer),
            yes_no(c.is_pq_baer),
            yes_no(c.is_semiproper)
        );
        let atoms: Vec<String> = an.cp.atoms().iter().map(|&e| an.label(e)).collect();
        println!(
            "central projections: {} (atoms: {})",
            an.cp.len(),
            if atoms.is_empty() {
                "none".to_string()
            } else {
                atoms.join(", ")
            }
        );
        print_graph_line("strong graph", &an.strong);
        print_graph_line("complement", &an.complement);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_graph(
    spec_text: &str,
    kind: KindArg,
    complement: bool,
    format: FormatArg,
    output: Option<PathBuf>,
) -> Result<ExitCode> {
    let spec = parse_ring_spec(spec_text)?;
    let ring = spec.build(max_order()?)?;
    let table = AnnihilatorTable::build(&ring);
    let kind = match kind {
        KindArg::Strong => GraphKind::Strong,
        KindArg::Star => GraphKind::Star,
        KindArg::Undirected => GraphKind::Undirected,
    };
    let mut graph = Graph::build(&ring, &table, kind);
    if complement {
        graph = graph.complement();
    }
    let name = format!("{} {}", spec_text, graph.kind());
    let text = match format {
        FormatArg::Dot => export::dot(&graph, &name),
        FormatArg::Json => export::json(&graph, spec_text),
        FormatArg::Edgelist => export::edgelist(&graph),
    };
    match output {
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            file.write_all(text.as_bytes())?;
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn status_line(r: &CheckResult) -> String {
    match &r.status {
        CheckStatus::Holds { vacuous: false } => "holds".to_string(),
        CheckStatus::Holds { vacuous: true } => "holds (vacuous)".to_string(),
        CheckStatus::Violated(w) => format!("VIOLATED: {}", w.detail),
        CheckStatus::HypothesisNotMet { hypothesis, .. } => {
            format!("hypothesis not met: {hypothesis}")
        }
    }
}

fn cmd_verify(spec_text: &str, theorem_args: &[String], json: bool) -> Result<ExitCode> {
    let ids: Vec<TheoremId> = if theorem_args.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        theorem_args
            .iter()
            .map(|t| t.parse().map_err(|e: String| anyhow!(e)))
            .collect::<Result<_>>()?
    };
    let an = analyze_ring(spec_text)?;
    let results: Vec<CheckResult> = ids.iter().map(|&id| check(id, &an)).collect();
    let any_violated = results.iter().any(|r| r.status.is_violated());
    if json {
        let report = build_report(&an, spec_text, &results);
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("spec: {spec_text}");
        for r in &results {
            println!("{:<22} {}", r.id.code(), status_line(r));
        }
    }
    Ok(if any_violated {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_corpus(
    zmod_max: u32,
    product_order_max: u64,
    factors: Option<Vec<u32>>,
    matrix: Option<Vec<u32>>,
    jobs: Option<usize>,
) -> Result<ExitCode> {
    let defaults = CorpusSpec::default();
    let spec = CorpusSpec {
        zmod_max,
        product_order_max,
        factors: factors.unwrap_or(defaults.factors),
        matrix_moduli: matrix.unwrap_or(defaults.matrix_moduli),
        max_order: max_order()?,
    };
    let summary = run_corpus(&spec, jobs)?;
    print!("{summary}");
    Ok(if summary.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    // die silently on a closed pipe (e.g. `starring analyze ... | head`)
    // instead of panicking mid-print
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze { spec, json } => cmd_analyze(&spec, json),
        Command::Graph {
            spec,
            kind,
            complement,
            format,
            output,
        } => cmd_graph(&spec, kind, complement, format, output),
        Command::Verify {
            spec,
            theorems,
            json,
        } => cmd_verify(&spec, &theorems, json),
        Command::Corpus {
            zmod_max,
            product_order_max,
            factors,
            matrix,
            jobs,
        } => cmd_corpus(zmod_max, product_order_max, factors, matrix, jobs),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
