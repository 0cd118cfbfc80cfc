mod input;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use w2_core::complex::independence_complex;
use w2_core::enumerate::MAX_ENUMERATION_ORDER;
use w2_core::homology::{cm_complex_within, gorenstein_complex_within, link_reports};
use w2_core::verify::DEFAULT_HOMOLOGY_MAX_N;
use w2_core::{
    classify, enumerate_graphs, reduced_betti_numbers, to_graph6, verify_theorems, Budget, Check, ClassificationReport,
    ClassifyError, ClassifyOptions, EnumerateOptions, Family, PrimeField, VerifyOptions,
};

use crate::input::{graph_argument, read_source, records, refuse, render, Format, Refused};

/// `println!` that returns write errors (such as a closed pipe) instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {
        std::io::Write::write_fmt(&mut std::io::stdout().lock(), format_args!("{}\n", format_args!($($arg)*)))?
    };
}

const EXIT_INTERNAL: u8 = 1;
const EXIT_REFUSED: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Decide Cohen-Macaulay, generalized Cohen-Macaulay, Buchsbaum and Gorenstein
/// properties of I(G)^2 combinatorially, with a simplicial-homology cross-check.
#[derive(Parser)]
#[command(name = "w2", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Characteristic of the coefficient field for homology.
    #[arg(long = "char", default_value_t = 2)]
    characteristic: u64,
    /// Worker threads (1 gives a single-threaded run).
    #[arg(long)]
    jobs: Option<usize>,
    /// Per-graph time limit in milliseconds.
    #[arg(long, default_value_t = 10_000)]
    timeout_ms: u64,
    /// Human-readable output instead of JSON lines.
    #[arg(long)]
    pretty: bool,
}

impl Common {
    fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.characteristic).map_err(refuse)
    }

    fn budget(&self) -> Budget {
        Budget::new(Duration::from_millis(self.timeout_ms))
    }

    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            Some(k) => Ok(rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build()?.install(f)),
            None => Ok(f()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify every graph of a file (or stdin), one JSON report per graph.
    Classify {
        /// Input file; stdin when absent or "-".
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Also run the homological oracle.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print gallery graphs: `gallery q12`, `gallery cycle-complement 7`, `gallery --all`.
    Gallery {
        name: Option<String>,
        n: Option<usize>,
        /// Every family; parametric ones for each order up to --max-n.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        pretty: bool,
    },
    /// Independence complex summary: facets, f-vector, Euler characteristic.
    Complex {
        /// graph6 string or gallery name such as `q12` or `cycle:7`.
        graph: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Reduced homology of the independence complex and of every face link.
    Homology {
        /// graph6 string or gallery name such as `q12` or `cycle:7`.
        graph: String,
        #[command(flatten)]
        common: Common,
    },
    /// All graphs on n vertices up to isomorphism.
    Enumerate {
        n: usize,
        #[arg(long)]
        no_isolated: bool,
        #[arg(long)]
        connected: bool,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Exhaustive sweeps of the theorems and lemmas over all small graphs.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        which: Vec<String>,
        /// Largest order for checks that compute homology.
        #[arg(long, default_value_t = DEFAULT_HOMOLOGY_MAX_N)]
        homology_max_n: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) if e.is::<Refused>() => {
            eprintln!("refused: {e}");
            ExitCode::from(EXIT_REFUSED)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Classify {
            input,
            format,
            oracle,
            common,
        } => classify_command(input.as_deref(), format, oracle, &common),
        Command::Gallery {
            name,
            n,
            all,
            max_n,
            format,
            pretty,
        } => gallery_command(name.as_deref(), n, all, max_n, format, pretty),
        Command::Complex { graph, pretty } => complex_command(&graph, pretty),
        Command::Homology { graph, common } => homology_command(&graph, &common),
        Command::Enumerate {
            n,
            no_isolated,
            connected,
            count,
            format,
        } => {
            let graphs = match enumerate_graphs(n, EnumerateOptions { no_isolated, connected }) {
                Ok(gs) => gs,
                Err(e) => {
                    eprintln!("refused: {e}");
                    return Ok(EXIT_REFUSED);
                }
            };
            if count {
                out!("{}", graphs.len());
            } else {
                for g in &graphs {
                    out!("{}", render(g, format));
                }
            }
            Ok(0)
        }
        Command::Verify {
            max_n,
            which,
            homology_max_n,
            common,
        } => verify_command(max_n, &which, homology_max_n, &common),
    }
}

fn emit<T: Serialize>(value: &T, pretty: bool) -> Result<()> {
    if pretty {
        out!("{}", serde_json::to_string_pretty(value)?);
    } else {
        out!("{}", serde_json::to_string(value)?);
    }
    Ok(())
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify_command(input: Option<&str>, format: Format, oracle: bool, common: &Common) -> Result<u8> {
    let text = read_source(input)?;
    let field = common.field()?;
    let recs = records(&text, format);
    let outcomes: Vec<Result<ClassificationReport, String>> = common.install(|| {
        recs.par_iter()
            .map(|rec| {
                let g = rec.graph.as_ref().map_err(|e| e.clone())?;
                let opts = ClassifyOptions {
                    oracle: oracle.then_some(field),
                    budget: common.budget(),
                };
                classify(g, &opts).map_err(|e| match e {
                    ClassifyError::Timeout(t) => format!("refused: {t}"),
                    other => other.to_string(),
                })
            })
            .collect()
    })?;
    let mut refused = false;
    if common.pretty {
        out!(
            "{:<16} {:>3} {:>3} {:>3}  {:<4} {:<4} {:<4} {:<4} {:<4} {:<4} {:<20} {:<4} {:<6}",
            "graph6", "n", "m", "a", "wc", "W2", "tf", "ltf", "CM2", "gCM2", "Buchsbaum2", "Gor", "oracle"
        );
    }
    for (rec, outcome) in recs.iter().zip(outcomes) {
        match outcome {
            Ok(r) if common.pretty => {
                let clause = r
                    .buchsbaum_square
                    .clause
                    .and_then(|c| serde_json::to_value(c).ok().and_then(|v| v.as_str().map(String::from)))
                    .unwrap_or_else(|| "no".into());
                let gor = r.gorenstein_locally_tf.as_ref().map_or("-", |v| flag(v.value));
                let agree = r.oracle.as_ref().map_or("-", |o| {
                    flag(o.buchsbaum_agrees && o.gorenstein_agrees != Some(false))
                });
                out!(
                    "{:<16} {:>3} {:>3} {:>3}  {:<4} {:<4} {:<4} {:<4} {:<4} {:<4} {:<20} {:<4} {:<6}",
                    r.graph6,
                    r.n,
                    r.edges,
                    r.alpha,
                    flag(r.well_covered),
                    flag(r.w2),
                    flag(r.triangle_free),
                    flag(r.locally_triangle_free),
                    flag(r.cm_square.value),
                    flag(r.gcm_square.value),
                    clause,
                    gor,
                    agree
                );
            }
            Ok(r) => emit(&r, false)?,
            Err(message) => {
                refused = true;
                if common.pretty {
                    out!("line {}: {message}", rec.line);
                } else {
                    emit(&json!({ "line": rec.line, "error": message }), false)?;
                }
            }
        }
    }
    Ok(if refused { EXIT_REFUSED } else { 0 })
}

fn gallery_command(
    name: Option<&str>,
    n: Option<usize>,
    all: bool,
    max_n: usize,
    format: Format,
    pretty: bool,
) -> Result<u8> {
    let mut entries = Vec::new();
    if all {
        for family in Family::ALL {
            if family.is_parametric() {
                for k in family.min_order()..=max_n {
                    entries.push((format!("{family}({k})"), family.build(Some(k)).map_err(refuse)?));
                }
            } else {
                entries.push((family.to_string(), family.build(None).map_err(refuse)?));
            }
        }
    } else {
        let Some(name) = name else {
            return Err(refuse("give a family name or --all"));
        };
        let family: Family = name.parse().map_err(refuse)?;
        let g = match family.build(n) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("refused: {e}");
                return Ok(EXIT_REFUSED);
            }
        };
        let label = match n {
            Some(k) if family.is_parametric() => format!("{family}({k})"),
            _ => family.to_string(),
        };
        entries.push((label, g));
    }
    for (label, g) in entries {
        if pretty {
            out!("{label:<24} n={:<3} m={:<4} {}", g.n(), g.edge_count(), to_graph6(&g));
        } else if format == Format::Graph6 {
            out!("{}", to_graph6(&g));
        } else {
            out!("# {label}\n{}", render(&g, format));
        }
    }
    Ok(0)
}

fn complex_command(arg: &str, pretty: bool) -> Result<u8> {
    let g = graph_argument(arg)?;
    let k = independence_complex(&g);
    let value = json!({
        "graph6": to_graph6(&g),
        "n": g.n(),
        "dimension": k.dimension(),
        "pure": k.is_pure(),
        "connected": k.is_connected(),
        "f_vector": k.f_vector(),
        "reduced_euler_characteristic": k.reduced_euler_characteristic(),
        "facet_count": k.facets().len(),
        "facets": k.facets(),
    });
    emit(&value, pretty)?;
    Ok(0)
}

fn homology_command(arg: &str, common: &Common) -> Result<u8> {
    let g = graph_argument(arg)?;
    let field = common.field()?;
    let budget = common.budget();
    let start = Instant::now();
    let k = independence_complex(&g);
    let profile = reduced_betti_numbers(&k, field);
    let computed = (|| {
        let links = link_reports(&k, field, &budget)?;
        let cm = cm_complex_within(&k, field, &budget)?;
        let gorenstein = gorenstein_complex_within(&k, field, &budget)?;
        Ok::<_, w2_core::Timeout>((links, cm, gorenstein))
    })();
    let (links, cm, gorenstein) = match computed {
        Ok(v) => v,
        Err(t) => {
            emit(&json!({ "graph6": to_graph6(&g), "error": format!("refused: {t}") }), common.pretty)?;
            return Ok(EXIT_REFUSED);
        }
    };
    let links: Vec<Value> = links
        .into_iter()
        .map(|l| {
            json!({
                "face": l.face,
                "dimension": l.profile.dimension,
                "betti": l.profile.betti,
                "cohen_macaulay": l.cohen_macaulay,
                "sphere": l.sphere,
            })
        })
        .collect();
    let value = json!({
        "graph6": to_graph6(&g),
        "characteristic": field.characteristic(),
        "dimension": profile.dimension,
        "reduced_betti": profile.betti,
        "reduced_betti_from_zero": profile.from_dimension_zero(),
        "euler_characteristic": profile.euler_characteristic(),
        "cohen_macaulay": cm,
        "gorenstein": gorenstein,
        "links": links,
        "elapsed_ms": start.elapsed().as_millis(),
    });
    emit(&value, common.pretty)?;
    Ok(0)
}

fn verify_command(max_n: usize, which: &[String], homology_max_n: usize, common: &Common) -> Result<u8> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_n) {
        eprintln!("refused: --max-n must lie in 1..={MAX_ENUMERATION_ORDER}");
        return Ok(EXIT_REFUSED);
    }
    let checks = if which.iter().any(|w| w == "all") {
        Check::ALL.to_vec()
    } else {
        which
            .iter()
            .map(|w| w.parse::<Check>().map_err(refuse))
            .collect::<Result<Vec<_>>>()?
    };
    let opts = VerifyOptions {
        field: common.field()?,
        checks,
        jobs: common.jobs,
        timeout: Some(Duration::from_millis(common.timeout_ms)),
        homology_max_n,
    };
    let report = verify_theorems(max_n, &opts).map_err(refuse)?;
    if common.pretty {
        out!(
            "graphs: {} (orders 1..={}), refused: {}, GF({}), {} ms",
            report.graphs_processed, report.max_n, report.graphs_refused, report.characteristic, report.elapsed_ms
        );
        out!(
            "{:<24} {:>5} {:>10} {:>10} {:>8} {:>8} {:>10}",
            "check", "max n", "applicable", "agreed", "refused", "counter", "ms"
        );
        for t in &report.checks {
            out!(
                "{:<24} {:>5} {:>10} {:>10} {:>8} {:>8} {:>10}",
                t.check.name(),
                t.max_n,
                t.applicable,
                t.agreed,
                t.refused,
                t.counterexamples.len(),
                t.elapsed_ms
            );
            for c in &t.counterexamples {
                out!("    counterexample {c}");
            }
            for e in &t.exceptional {
                out!("    exceptional {} {}", e.graph6, e.family.as_deref().unwrap_or("?"));
            }
        }
    } else {
        emit(&report, false)?;
    }
    Ok(if report.counterexample_count() > 0 {
        EXIT_COUNTEREXAMPLE
    } else if report.graphs_refused > 0 {
        EXIT_REFUSED
    } else {
        0
    })
}
