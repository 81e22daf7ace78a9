//! `psi`: local maximum stable sets, greedoid checks, graph operations and
//! theorem checks from the command line.
//!
//! Exit codes: 0 on success (greedoid / all checks hold), 1 when the answer
//! is negative, 2 on any input error.

mod input;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use psi_core::io::to_graph6;
use psi_core::verify::{expected_shape, fixture_instances, sweep, Instance, SweepConfig};
use psi_core::{
    accessibility_chain, alpha, composition, corona, disjoint_union, is_greedoid,
    lexicographic_product, psi, zykov_sum, CompositeGraph, Graph, GreedoidStatus, Origin,
    SetFamily, TheoremId, TheoremReport, VertexSet,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "psi", version, about = "Local maximum stable sets of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Seed for generator expressions and random sweeps.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct Source {
    /// Named example graph (W_FIG1, G2_FIG3, CORONA_FIG5, ... or W, G1..G4).
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long)]
    graph6: Option<String>,
    /// Edge list (`n <count>` then `u v` lines) or graph6.
    #[arg(long)]
    file: Option<String>,
    /// Generator expression, e.g. `path:5`, `tree:9:2`, `random:20:0.2`.
    #[arg(long = "gen")]
    generator: Option<String>,
}

impl Source {
    /// The selected graph; stdin when no source flag is given.
    fn load(&self, seed: u64) -> Result<Graph> {
        let graphs = if let Some(name) = &self.fixture {
            vec![psi_core::named_fixture(name.parse()?)]
        } else if let Some(g6) = &self.graph6 {
            vec![psi_core::io::parse_graph6_str(g6).context("--graph6")?]
        } else if let Some(path) = &self.file {
            input::read_file(path)?
        } else if let Some(expr) = &self.generator {
            input::generate(expr, seed)?
        } else {
            input::read_stdin()?
        };
        input::single(graphs, "input")
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    /// Disjoint union of two or more operands.
    Union,
    /// Zykov sum (join) of two or more operands.
    Zykov,
    /// Corona: host first, then one operand per host vertex.
    Corona,
    /// Composition H0[H1..Hn]: H0 first, then one operand per vertex of H0.
    Compose,
    /// Lexicographic product H0[H]: exactly two operands.
    Lex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print Ψ(G) in canonical order with its size, α(G) and the smallest nonempty member size.
    Psi {
        #[command(flatten)]
        source: Source,
    },
    /// Check whether Ψ(G) is a greedoid (exit 0 if so, 1 if not).
    Check {
        #[command(flatten)]
        source: Source,
    },
    /// Print an accessibility chain ∅ ⊂ S₁ ⊂ … ⊂ S for a member S of Ψ(G).
    Chain {
        #[command(flatten)]
        source: Source,
        /// Vertex set such as `{0,2,5}` or `{a,b,c}`.
        set: String,
    },
    /// Build a composite graph and print it with its vertex map.
    Compose {
        #[arg(value_enum)]
        op: Op,
        /// Operands: `fixture:NAME`, `graph6:STR`, `file:PATH` or a generator expression.
        #[arg(required = true)]
        operands: Vec<String>,
    },
    /// Check a theorem on given operands, the worked examples, or a sweep (exit 0 iff all hold).
    Verify {
        theorem: TheoremId,
        /// Operands as for `compose`. Without operands or `--sweep` the worked examples are used.
        operands: Vec<String>,
        /// Run a sweep with instances of at most this many vertices.
        #[arg(long, value_name = "N")]
        sweep: Option<usize>,
        /// Number of random instances in a sweep.
        #[arg(long, default_value_t = 100, value_name = "K")]
        count: usize,
        /// Enumerate every input up to the sweep order (T1_NT and T2_TREE only).
        #[arg(long, requires = "sweep")]
        exhaustive: bool,
    },
    /// Print generated graphs or fixtures as graph6, one per line.
    Gen {
        /// Generator expression, e.g. `cycle:6`, `trees:5`, `graphs:4`, `fixture:W`.
        expr: String,
    },
}

fn set_json(s: &VertexSet) -> serde_json::Value {
    json!(s.to_vec())
}

fn family_json(f: &SetFamily) -> serde_json::Value {
    f.iter().map(set_json).collect()
}

fn cmd_psi(g: &Graph, format: Format) -> Result<ExitCode> {
    let fam = psi(g);
    let a = alpha(g);
    let min = fam.min_nonempty_size();
    match format {
        Format::Json => {
            let out = json!({
                "graph6": to_graph6(g),
                "order": g.order(),
                "labels": g.labels(),
                "alpha": a,
                "psi_size": fam.len(),
                "min_nonempty_size": min,
                "family": family_json(&fam),
            });
            println!("{out}");
        }
        Format::Plain => {
            let min = min.map_or("-".to_string(), |m| m.to_string());
            println!(
                "order {}  alpha {a}  |psi| {}  min nonempty {min}",
                g.order(),
                fam.len()
            );
            for s in &fam {
                println!("{}", g.format_set(s));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(g: &Graph, format: Format) -> Result<ExitCode> {
    let fam = psi(g);
    let verdict = is_greedoid(&fam)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&verdict.report(&fam))?),
        Format::Plain => {
            let status = serde_json::to_value(verdict.status)?;
            let mut line = status.as_str().unwrap_or_default().to_string();
            if let Some(x) = &verdict.witness_x {
                line += &format!("  X = {}", g.format_set(x));
            }
            if let Some(y) = &verdict.witness_y {
                line += &format!("  Y = {}", g.format_set(y));
            }
            println!("{line}");
        }
    }
    Ok(if verdict.status == GreedoidStatus::Greedoid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_chain(g: &Graph, text: &str, format: Format) -> Result<ExitCode> {
    let s = g.parse_set(text)?;
    let fam = psi(g);
    let chain = accessibility_chain(&fam, &s);
    match (&chain, format) {
        (Ok(c), Format::Json) => {
            println!(
                "{}",
                json!({ "set": set_json(&s), "chain": c.iter().map(set_json).collect::<Vec<_>>() })
            )
        }
        (Err(e), Format::Json) => {
            println!("{}", json!({ "set": set_json(&s), "error": e.to_string() }))
        }
        (Ok(c), Format::Plain) => {
            let shown: Vec<String> = c.iter().map(|x| g.format_set(x)).collect();
            println!("{}", shown.join(" < "));
        }
        (Err(e), Format::Plain) => println!("no chain: {e}"),
    }
    Ok(if chain.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn build(op: Op, graphs: &[Graph]) -> Result<CompositeGraph> {
    let (first, rest) = graphs.split_first().expect("clap requires an operand");
    Ok(match op {
        Op::Union => disjoint_union(graphs)?,
        Op::Zykov => zykov_sum(graphs)?,
        Op::Corona => corona(first, rest)?,
        Op::Compose => composition(first, rest)?,
        Op::Lex => match rest {
            [h] => lexicographic_product(first, h)?,
            _ => bail!("lex takes exactly two operands, got {}", graphs.len()),
        },
    })
}

fn origin_text(o: Origin) -> String {
    match o {
        Origin::Host(i) => format!("host {i}"),
        Origin::Operand { part, vertex } => format!("operand {part} vertex {vertex}"),
    }
}

fn cmd_compose(op: Op, graphs: &[Graph], format: Format) -> Result<ExitCode> {
    let c = build(op, graphs)?;
    let g = c.graph();
    match format {
        Format::Json => {
            let out = json!({
                "op": format!("{op:?}").to_lowercase(),
                "graph6": to_graph6(g),
                "order": g.order(),
                "edges": g.edge_count(),
                "origins": c.origins(),
            });
            println!("{out}");
        }
        Format::Plain => {
            println!("{}", to_graph6(g));
            for (v, &o) in c.origins().iter().enumerate() {
                println!("{v}\t{}", origin_text(o));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn instance_from(theorem: TheoremId, mut graphs: Vec<Graph>) -> Result<Instance> {
    use TheoremId::*;
    Ok(match theorem {
        T1Nt | T2Tree if graphs.len() == 1 => Instance::Graph(graphs.remove(0)),
        T1Nt | T2Tree => bail!("{theorem} takes {}", expected_shape(theorem)),
        P1Union | L4ZykovBound | P2Zykov | C4CompositionSpecialize => Instance::Parts(graphs),
        _ => {
            let host = graphs.remove(0);
            Instance::Corona {
                host,
                parts: graphs,
            }
        }
    })
}

fn report_line(r: &TheoremReport) -> Result<String> {
    let mark = if r.holds { "PASS" } else { "FAIL" };
    let mut line = format!(
        "{mark} {} {} sets={}",
        r.theorem, r.input, r.stats.sets_checked
    );
    if let Some(seed) = r.seed {
        line += &format!(" seed={seed}");
    }
    if let Some(w) = &r.witness {
        line += &format!("\n  witness {}", serde_json::to_string(w)?);
    }
    for n in &r.notes {
        line += &format!("\n  note: {n}");
    }
    Ok(line)
}

fn cmd_verify(
    theorem: TheoremId,
    reports: &[TheoremReport],
    quiet: bool,
    format: Format,
) -> Result<ExitCode> {
    let violations = reports.iter().filter(|r| !r.holds).count();
    // Any part of the corona lemma runs all four parts.
    let label = match theorem {
        TheoremId::L3CoronaI
        | TheoremId::L3CoronaII
        | TheoremId::L3CoronaIII
        | TheoremId::L3CoronaIV => "L3_CORONA",
        t => t.name(),
    };
    match format {
        Format::Json => {
            let out = json!({
                "theorem": label,
                "total": reports.len(),
                "violations": violations,
                "reports": reports,
            });
            println!("{out}");
        }
        Format::Plain => {
            for r in reports.iter().filter(|r| !quiet || !r.holds) {
                println!("{}", report_line(r)?);
            }
            println!(
                "{label}: {} of {} hold",
                reports.len() - violations,
                reports.len()
            );
        }
    }
    Ok(if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn configure_threads() -> Result<()> {
    let Ok(text) = std::env::var("PSI_THREADS") else {
        return Ok(());
    };
    let threads: usize = text
        .trim()
        .parse()
        .with_context(|| format!("PSI_THREADS must be a number, got `{text}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("cannot configure the thread pool")
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_threads()?;
    let (format, seed) = (cli.format, cli.seed);
    match cli.command {
        Command::Psi { source } => cmd_psi(&source.load(seed)?, format),
        Command::Check { source } => cmd_check(&source.load(seed)?, format),
        Command::Chain { source, set } => cmd_chain(&source.load(seed)?, &set, format),
        Command::Compose { op, operands } => {
            let graphs = operands
                .iter()
                .map(|s| input::operand(s, seed))
                .collect::<Result<Vec<_>>>()?;
            cmd_compose(op, &graphs, format)
        }
        Command::Verify {
            theorem,
            operands,
            sweep: order,
            count,
            exhaustive,
        } => {
            let (reports, quiet) = if let Some(max_order) = order {
                if !operands.is_empty() {
                    bail!("--sweep generates its own inputs; drop the operands");
                }
                let cfg = SweepConfig {
                    max_order,
                    count,
                    seed,
                    exhaustive,
                };
                (sweep(theorem, &cfg)?, true)
            } else {
                let instances = if operands.is_empty() {
                    fixture_instances(theorem)
                } else {
                    let graphs = operands
                        .iter()
                        .map(|s| input::operand(s, seed))
                        .collect::<Result<Vec<_>>>()?;
                    vec![instance_from(theorem, graphs)?]
                };
                let mut reports = Vec::new();
                for inst in &instances {
                    reports.extend(inst.run(theorem)?);
                }
                (reports, false)
            };
            cmd_verify(theorem, &reports, quiet, format)
        }
        Command::Gen { expr } => {
            let graphs = input::generate(&expr, seed)?;
            let codes: Vec<String> = graphs.iter().map(to_graph6).collect();
            match format {
                Format::Json => println!("{}", json!(codes)),
                Format::Plain => {
                    for c in codes {
                        println!("{c}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
