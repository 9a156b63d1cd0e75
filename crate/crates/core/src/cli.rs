//! The `bettilab` command line.
//!
//! Exit status: 0 success, 1 usage or input error, 2 a checked bound was
//! violated, 3 an engine cap or search budget was exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::atlas::{
    self, conjecture_scan, diameter_survey, generate, reproduce_section4,
    triple_union_survey_with_progress, FamilySpec, SearchProgress, DEFAULT_BUDGET,
};
use crate::betti::{betti_table, taylor_table, EngineConfig};
use crate::bounds::{turan_number, verify_bound, witness_subset, TheoremId};
use crate::document::{format_betti_table, format_ideal, parse_ideal, IdealDocument, IdealFormat, TableStyle};
use crate::error::Error;
use crate::homology::FieldSpec;
use crate::hypercomb::{Hypergraph, VertexSet};
use crate::report::{Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "bettilab", version, about = "Betti numbers of squarefree monomial ideals")]
struct Cli {
    /// Worker threads (default: BETTILAB_THREADS, else all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Ideal file, or `-` for standard input
    file: String,
    /// Input format
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Auto,
    Monomials,
    Indices,
    Json,
}

impl From<FormatArg> for IdealFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Auto => IdealFormat::Auto,
            FormatArg::Monomials => IdealFormat::Monomials,
            FormatArg::Indices => IdealFormat::Indices,
            FormatArg::Json => IdealFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchKind {
    Section4,
    TripleUnion,
    Conjecture,
    Diameter,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti table of an ideal
    Betti {
        #[command(flatten)]
        input: Input,
        /// q (rationals) or gf:P
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Taylor Betti numbers instead of minimal ones
        #[arg(long)]
        taylor: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify a bound on an ideal
    Check {
        #[arg(value_parser = parse_theorem)]
        theorem: TheoremId,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
    },
    /// Proper coloring with D colors (default: the degree)
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        d: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write a member of a named family
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(short)]
        o: Option<String>,
        /// Output format
        #[arg(long, value_enum, default_value = "monomials")]
        format: FormatArg,
    },
    /// Witness subset for a blue color class of a hypertree
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        blue: usize,
        /// Comma-separated vertices of B′
        #[arg(long, value_delimiter = ',', required = true)]
        bprime: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive searches
    Search {
        #[arg(value_enum)]
        kind: SearchKind,
        /// Edge count (triple-union, conjecture) or vertex count (diameter)
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
    },
    /// Turán number T(n, k, l)
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Engine(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let threads = cli.threads.or_else(|| {
        std::env::var("BETTILAB_THREADS").ok().and_then(|s| s.trim().parse().ok())
    });
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let err = Mutex::new(err);
    let result = pool.install(|| dispatch(cli.command, out, &err));
    let err = err.into_inner().unwrap_or_else(|p| p.into_inner());
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Engine(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource_limit() {
                EXIT_LIMIT
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn read_input(input: &Input) -> Result<IdealDocument, Failure> {
    let text = if input.file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.file)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.file)))?
    };
    let doc = parse_ideal(&text, input.format.into())?;
    Ok(doc.with_provenance(input.file.clone()))
}

fn load(input: &Input) -> Result<Hypergraph, Failure> {
    Ok(read_input(input)?.hypergraph()?)
}

fn emit_report(report: &Report, json: bool, out: &mut dyn Write) -> Outcome {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(report).expect("report serializes"))?;
    } else {
        out.write_all(report.to_text().as_bytes())?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATED })
}

fn dispatch(cmd: Command, out: &mut (dyn Write + Send), err: &Mutex<&mut (dyn Write + Send)>) -> Outcome {
    let cfg = EngineConfig::default();
    let progress = |p: &SearchProgress| {
        if let Ok(mut e) = err.lock() {
            let _ = writeln!(e, "[search] edges={} classes={} nodes={}", p.edges, p.classes, p.nodes);
        }
    };
    match cmd {
        Command::Betti { input, field, taylor, json } => {
            let g = load(&input)?;
            let table = if taylor { taylor_table(&g, &cfg)? } else { betti_table(&g, field, &cfg)? };
            let style = if json { TableStyle::Json } else { TableStyle::Diagram };
            out.write_all(format_betti_table(&table, style).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Check { theorem, input, field, json } => {
            let g = load(&input)?;
            emit_report(&verify_bound(theorem, &g, field, &cfg)?, json, out)
        }
        Command::Color { input, d, json } => {
            let g = load(&input)?;
            let d = d.unwrap_or(g.degree());
            let coloring = g.proper_coloring(d)?;
            match (coloring, json) {
                (Some(c), true) => {
                    let v = json!({ "schema": SCHEMA_VERSION, "colors": d, "assignment": c.pairs() });
                    writeln!(out, "{v}")?;
                }
                (Some(c), false) => {
                    for (v, col) in c.pairs() {
                        writeln!(out, "{v}: {col}")?;
                    }
                }
                (None, true) => writeln!(out, "{}", json!({ "schema": SCHEMA_VERSION, "colors": d, "assignment": null }))?,
                (None, false) => writeln!(out, "not colorable")?,
            }
            Ok(EXIT_OK)
        }
        Command::Gen { family, params, o, format } => {
            let spec = FamilySpec::from_args(&family, &params)?;
            let g = generate(&spec)?;
            let doc = IdealDocument::from_hypergraph(&g).with_provenance(format!("gen {spec}"));
            let text = format_ideal(&doc, format.into());
            match o {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {path}: {e}")))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Witness { input, blue, bprime, json } => {
            let g = load(&input)?;
            if let Some(&v) = bprime.iter().find(|&&v| v == 0 || v > g.max_label()) {
                return Err(Failure::Usage(format!("vertex {v} is not in the hypergraph")));
            }
            let coloring = g
                .proper_coloring(g.degree())?
                .ok_or_else(|| Failure::Usage("hypergraph has no proper coloring".into()))?;
            let bp: VertexSet = bprime.iter().copied().collect();
            let ws = witness_subset(&g, &coloring, blue, bp)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&ws).expect("witness serializes"))?;
            } else {
                writeln!(out, "U' = {:?}", ws.u_prime)?;
                writeln!(out, "B' = {:?}", ws.b_prime)?;
                writeln!(out, "W = {:?}", ws.w)?;
                writeln!(out, "reduced betti in degree {} = {}", ws.homology_degree, ws.reduced_betti)?;
            }
            Ok(EXIT_OK)
        }
        Command::Search { kind, t, budget, field, json } => match kind {
            SearchKind::Section4 => emit_report(&reproduce_section4(field, &cfg, budget, Some(&progress))?, json, out),
            SearchKind::Conjecture => {
                let r = conjecture_scan(t.unwrap_or(4), field, &cfg, budget, Some(&progress))?;
                emit_report(&r, json, out)
            }
            SearchKind::Diameter => emit_report(&diameter_survey(t.unwrap_or(9), field, &cfg, budget)?, json, out),
            SearchKind::TripleUnion => {
                let t = t.unwrap_or(6);
                let classes = triple_union_survey_with_progress(t, budget, Some(&progress))?;
                if json {
                    let list: Vec<_> = classes
                        .iter()
                        .map(|g| json!({ "edges": g.edge_lists(), "canonical": atlas::CanonicalForm::of(g).to_hex() }))
                        .collect();
                    writeln!(out, "{}", json!({ "schema": SCHEMA_VERSION, "t": t, "classes": list }))?;
                } else {
                    writeln!(out, "t={t}: {} classes", classes.len())?;
                    for g in &classes {
                        writeln!(out, "  {:?}", g.edge_lists())?;
                    }
                }
                Ok(EXIT_OK)
            }
        },
        Command::Turan { n, k, l } => {
            writeln!(out, "{}", turan_number(n, k, l)?)?;
            Ok(EXIT_OK)
        }
    }
}
