use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use corona_sym::constructive::{
    corona_edge_labeling, corona_vertex_labeling, friendship_splitting_labeling,
    splitting_edge_labeling, splitting_vertex_labeling,
};
use corona_sym::formats::{encode_graph6, parse_graph, InputFormat};
use corona_sym::harness::{run_theorem_harness, Corpus, Verdict};
use corona_sym::{
    distinguishing_index, distinguishing_number, enumerate_automorphisms, families,
    is_distinguishing_edge, is_distinguishing_vertex, neighbourhood_corona, splitting_graph,
    EdgeLabeling, Graph, OutputFormat, RunConfig, SearchLimits, VertexLabeling,
};

const CLI_SCHEMA: &str = "corona-sym/cli/v1";

#[derive(Parser)]
#[command(
    name = "corona-sym",
    version,
    about = "Neighbourhood coronas, automorphisms and distinguishing labelings"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, global = true, env = "CORONA_SYM_SEED")]
    seed: Option<u64>,
    #[arg(long, global = true, env = "CORONA_SYM_WORKERS")]
    workers: Option<usize>,
    #[arg(long, global = true, env = "CORONA_SYM_VERTEX_CAP")]
    vertex_cap: Option<usize>,
    #[arg(long, global = true, env = "CORONA_SYM_GROUP_CAP")]
    group_cap: Option<usize>,
    #[arg(long, global = true, env = "CORONA_SYM_LABELING_CAP")]
    labeling_cap: Option<u64>,
    /// Random labelings tried per label count before the exhaustive search.
    #[arg(long, global = true, env = "CORONA_SYM_RANDOM_PREPASS")]
    random_prepass: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "auto")]
    input_format: InputKind,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputKind {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named family member (path, cycle, complete, star, friendship).
    Family { name: String, n: usize },
    /// Build the neighbourhood corona G1 * G2.
    Corona { g1: String, g2: String },
    /// Enumerate the automorphism group.
    Aut {
        g: String,
        /// List every element in cycle notation.
        #[arg(long)]
        elements: bool,
    },
    /// Exact distinguishing number with a lexicographically least witness.
    Dnum { g: String },
    /// Exact distinguishing index with a lexicographically least witness.
    Dindex { g: String },
    /// Build a constructive distinguishing labeling.
    Label {
        #[command(subcommand)]
        scheme: Scheme,
    },
    /// Check whether a labeling is distinguishing.
    Verify {
        g: String,
        /// Comma-separated labels, by vertex id or by canonical edge order.
        labels: String,
        #[arg(long)]
        edges: bool,
    },
    /// Run every structural and labeling claim over a corpus.
    CheckTheorems {
        /// One graph6 token (single graph) or two (pair) per line.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Scheme {
    /// Vertex labeling of G * K1 from a distinguishing labeling of G.
    SplittingVertex {
        g: String,
        #[arg(long)]
        base: Option<String>,
    },
    /// Edge labeling of G * K1 from a distinguishing edge labeling of G.
    SplittingEdge {
        g: String,
        #[arg(long)]
        base: Option<String>,
    },
    /// Blade labeling of F_n * K1.
    Friendship { n: usize },
    /// Vertex labeling of G1 * G2.
    CoronaVertex {
        g1: String,
        g2: String,
        #[arg(long)]
        base1: Option<String>,
        #[arg(long)]
        base2: Option<String>,
    },
    /// Edge labeling of G1 * G2.
    CoronaEdge {
        g1: String,
        g2: String,
        #[arg(long)]
        base1: Option<String>,
        #[arg(long)]
        base2: Option<String>,
    },
}

struct Ctx {
    config: RunConfig,
    limits: SearchLimits,
    input: InputFormat,
    json: bool,
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self> {
        let defaults = RunConfig::default();
        let config = RunConfig {
            vertex_cap: cli.vertex_cap.unwrap_or(defaults.vertex_cap),
            group_cap: cli.group_cap.unwrap_or(defaults.group_cap),
            labeling_cap: cli.labeling_cap.unwrap_or(defaults.labeling_cap),
            seed: cli.seed.unwrap_or(defaults.seed),
            worker_count: cli.workers.unwrap_or(defaults.worker_count),
            random_prepass: cli.random_prepass.unwrap_or(defaults.random_prepass),
            output_format: match cli.format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            },
        };
        config.validate()?;
        Ok(Ctx {
            limits: config.limits(),
            input: match cli.input_format {
                InputKind::Auto => InputFormat::Auto,
                InputKind::Graph6 => InputFormat::Graph6,
                InputKind::EdgeList => InputFormat::EdgeList,
            },
            json: config.output_format == OutputFormat::Json,
            config,
        })
    }

    /// `-` reads stdin, an existing path reads the file, anything else is
    /// parsed as inline graph text.
    fn graph(&self, arg: &str) -> Result<Graph> {
        let text = if arg == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        } else if Path::new(arg).is_file() {
            std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
        } else {
            arg.replace("\\n", "\n")
        };
        parse_graph(&text, self.input).with_context(|| format!("parsing graph {arg:?}"))
    }

    fn emit(&self, command: &str, body: Value, text: String) {
        if self.json {
            let mut doc =
                json!({ "schema": CLI_SCHEMA, "command": command, "config": self.config });
            if let (Value::Object(doc), Value::Object(body)) = (&mut doc, body) {
                doc.extend(body);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        } else {
            println!("{text}");
        }
    }
}

fn parse_labels(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .with_context(|| format!("bad label {t:?}"))
        })
        .collect()
}

fn join(labels: &[u32]) -> String {
    labels
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn vertex_base(ctx: &Ctx, g: &Graph, arg: &Option<String>) -> Result<VertexLabeling> {
    match arg {
        Some(s) => Ok(VertexLabeling::new(parse_labels(s)?)?),
        None => Ok(distinguishing_number(g, &ctx.limits)?.witness),
    }
}

fn edge_base(ctx: &Ctx, g: &Graph, arg: &Option<String>) -> Result<EdgeLabeling> {
    match arg {
        Some(s) => Ok(EdgeLabeling::new(g, parse_labels(s)?)?),
        None if g.size() == 0 => Ok(EdgeLabeling::new(g, Vec::new())?),
        None => Ok(distinguishing_index(g, &ctx.limits)?.witness),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Ctx::new(&cli)?;
    match cli.command {
        Command::Family { name, n } => {
            let g = families::by_name(&name, n)?;
            let g6 = encode_graph6(&g)?;
            ctx.emit(
                "family",
                json!({ "family": name, "n": n, "graph6": g6, "order": g.order(), "size": g.size(), "edges": g.edges() }),
                g6,
            );
        }
        Command::Corona { g1, g2 } => {
            let c = neighbourhood_corona(&ctx.graph(&g1)?, &ctx.graph(&g2)?)?;
            let g6 = encode_graph6(&c.graph)?;
            let roles = (0..c.index.total())
                .map(|id| c.index.role_of(id))
                .collect::<corona_sym::Result<Vec<_>>>()?;
            ctx.emit(
                "corona",
                json!({ "graph6": g6, "order": c.graph.order(), "size": c.graph.size(), "roles": roles }),
                format!("{g6}\norder {} size {}", c.graph.order(), c.graph.size()),
            );
        }
        Command::Aut { g, elements } => {
            let g = ctx.graph(&g)?;
            let group = enumerate_automorphisms(&g, &ctx.limits)?;
            let cycles: Vec<String> = group.elements().iter().map(ToString::to_string).collect();
            let mut text = format!("order {}", group.order());
            if elements {
                for c in &cycles {
                    text.push('\n');
                    text.push_str(c);
                }
            }
            let mut body = json!({ "order": group.order() });
            if elements {
                body["elements"] = json!(group.elements());
                body["cycles"] = json!(cycles);
            }
            ctx.emit("aut", body, text);
        }
        Command::Dnum { g } => {
            let r = distinguishing_number(&ctx.graph(&g)?, &ctx.limits)?;
            let text = format!("D = {}\nwitness {}", r.value, join(r.witness.labels()));
            ctx.emit("dnum", json!({ "report": r }), text);
        }
        Command::Dindex { g } => {
            let r = distinguishing_index(&ctx.graph(&g)?, &ctx.limits)?;
            let text = format!("D' = {}\nwitness {}", r.value, join(r.witness.labels()));
            ctx.emit("dindex", json!({ "report": r }), text);
        }
        Command::Label { scheme } => return label(&ctx, scheme),
        Command::Verify { g, labels, edges } => {
            let g = ctx.graph(&g)?;
            let group = enumerate_automorphisms(&g, &ctx.limits)?;
            let labels = parse_labels(&labels)?;
            let ok = if edges {
                is_distinguishing_edge(&g, &group, &EdgeLabeling::new(&g, labels)?)?
            } else {
                is_distinguishing_vertex(&g, &group, &VertexLabeling::new(labels)?)?
            };
            ctx.emit(
                "verify",
                json!({ "distinguishing": ok, "group_order": group.order(), "edges": edges }),
                format!("distinguishing: {ok}"),
            );
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::CheckTheorems { corpus } => {
            let corpus = match corpus {
                Some(path) => Corpus::parse(
                    &std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?,
                )?,
                None => Corpus::default_corpus(ctx.config.seed)?,
            };
            let report = run_theorem_harness(&ctx.config, &corpus)?;
            if ctx.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for r in &report.reports {
                    println!(
                        "{:<15} {} pass={} fail={} skipped={}",
                        r.theorem,
                        if r.passed() { "ok  " } else { "FAIL" },
                        r.count(Verdict::Pass),
                        r.count(Verdict::Fail),
                        r.count(Verdict::Skipped)
                    );
                    for c in &r.counterexamples {
                        println!("    {c}");
                    }
                }
            }
            if !report.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn label(ctx: &Ctx, scheme: Scheme) -> Result<ExitCode> {
    let (name, target, result) = match scheme {
        Scheme::SplittingVertex { g, base } => {
            let g = ctx.graph(&g)?;
            let base = vertex_base(ctx, &g, &base)?;
            let l = splitting_vertex_labeling(&g, &base, &ctx.limits)?;
            (
                "splitting-vertex",
                splitting_graph(&g)?.graph,
                Labeling::Vertex(l),
            )
        }
        Scheme::SplittingEdge { g, base } => {
            let g = ctx.graph(&g)?;
            let base = edge_base(ctx, &g, &base)?;
            let l = splitting_edge_labeling(&g, &base, &ctx.limits)?;
            (
                "splitting-edge",
                splitting_graph(&g)?.graph,
                Labeling::Edge(l),
            )
        }
        Scheme::Friendship { n } => {
            let l = friendship_splitting_labeling(n)?;
            (
                "friendship",
                splitting_graph(&families::friendship(n)?)?.graph,
                Labeling::Vertex(l),
            )
        }
        Scheme::CoronaVertex {
            g1,
            g2,
            base1,
            base2,
        } => {
            let (g1, g2) = (ctx.graph(&g1)?, ctx.graph(&g2)?);
            let b1 = vertex_base(ctx, &g1, &base1)?;
            let b2 = vertex_base(ctx, &g2, &base2)?;
            let l = corona_vertex_labeling(&g1, &g2, &b1, &b2, &ctx.limits)?;
            (
                "corona-vertex",
                neighbourhood_corona(&g1, &g2)?.graph,
                Labeling::Vertex(l),
            )
        }
        Scheme::CoronaEdge {
            g1,
            g2,
            base1,
            base2,
        } => {
            let (g1, g2) = (ctx.graph(&g1)?, ctx.graph(&g2)?);
            let b1 = edge_base(ctx, &g1, &base1)?;
            let b2 = edge_base(ctx, &g2, &base2)?;
            let l = corona_edge_labeling(&g1, &g2, &b1, &b2, &ctx.limits)?;
            (
                "corona-edge",
                neighbourhood_corona(&g1, &g2)?.graph,
                Labeling::Edge(l),
            )
        }
    };
    let group = enumerate_automorphisms(&target, &ctx.limits)?;
    let (ok, count, labels, body) = match &result {
        Labeling::Vertex(l) => (
            is_distinguishing_vertex(&target, &group, l)?,
            l.label_count(),
            l.labels().to_vec(),
            json!(l),
        ),
        Labeling::Edge(l) => (
            is_distinguishing_edge(&target, &group, l)?,
            l.label_count(),
            l.labels().to_vec(),
            json!(l),
        ),
    };
    ctx.emit(
        "label",
        json!({
            "scheme": name,
            "graph6": encode_graph6(&target)?,
            "labeling": body,
            "label_count": count,
            "distinguishing": ok,
        }),
        format!("{}\nlabels {count}\ndistinguishing: {ok}", join(&labels)),
    );
    if !ok {
        bail!("constructed labeling is not distinguishing");
    }
    Ok(ExitCode::SUCCESS)
}

enum Labeling {
    Vertex(VertexLabeling),
    Edge(EdgeLabeling),
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
