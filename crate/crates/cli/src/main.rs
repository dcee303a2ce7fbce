//! Command-line entry point wiring the library: family generation, metric
//! induction, axiom checks, isomorphism, hypergraph extraction,
//! metrization, enumeration, extremal counts and the verification ledger.
//!
//! Subcommands compose through text formats: `.wg` weighted graphs, `.bws`
//! betweenness structures, `.th` triangle hypergraphs and `.metric`
//! distance certificates all pass through stdin/stdout by default.
//!
//! Exit codes: 0 on success or an all-PASS ledger, 1 when any verification
//! FAILs, 2 on usage errors.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bwl::enumerate::claims::{claim_ids, derive_exceptional_graphs, verify, LedgerEntry, Verdict};
use bwl::enumerate::{
    enumerate_structures, probe_gamma_sigma, tau, CosizeSpec, EnumLimits, PropertyFilter,
};
use bwl::families::FamilySpec;
use bwl::graphs::{adjacency_graph, induce_graph, WeightedGraph};
use bwl::hyper::{triangle_hypergraph, TriangleHypergraph};
use bwl::iso::is_isomorphic;
use bwl::metrize::{metrize_hypergraph, metrize_structure, MetrizationVerdict};
use bwl::structure::BetweennessStructure;

const LEDGER_VERSION: &str = "bwl-ledger v1";

#[derive(Parser)]
#[command(name = "bwl", version, about = "Exact toolkit for finite betweenness structures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Ledger,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a parametric family graph as `.wg`
    Family {
        /// Family kind: P, C, Kab, Q, R, S or T
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        /// Index parameter for R and T
        #[arg(long)]
        i: Option<usize>,
        /// Co-size parameter for Q, R and S
        #[arg(long)]
        c: Option<usize>,
        /// First part size for Kab
        #[arg(long)]
        a: Option<usize>,
        /// Second part size for Kab
        #[arg(long)]
        b: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Induce the betweenness structure of a `.wg` graph (to `.bws`)
    Induce {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report axioms and basic properties of a `.bws` structure
    Check {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide isomorphism of two `.bws` structures
    Iso { first: PathBuf, second: PathBuf },
    /// Extract the triangle hypergraph of a `.bws` structure (to `.th`)
    Hyper {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide metrizability of a structure or a triangle hypergraph
    Metrize {
        /// `.bws` input: decide the structure itself
        #[arg(long, conflicts_with = "hypergraph")]
        structure: Option<PathBuf>,
        /// `.th` input: search middle assignments of the non-edges
        #[arg(long)]
        hypergraph: Option<PathBuf>,
        /// Collect every realizing class, not just the verdict
        #[arg(long)]
        all: bool,
        /// Where certificate files are written
        #[arg(long, default_value = "bwl-out")]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustively classify structures by order and co-size
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cosize: usize,
        /// Treat --cosize as an upper bound instead of an exact value
        #[arg(long)]
        at_most: bool,
        #[arg(long, default_value = "trivial")]
        filter: String,
        /// Permit the order-8 long runs
        #[arg(long)]
        long_run: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Smallest co-size above k with a nonempty class set
    Tau {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value = "trivial")]
        filter: String,
        #[arg(long)]
        long_run: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Probe nonemptiness of co-size k*n - c over a range of orders
    Probe {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: i64,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long)]
        long_run: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run one registered claim verifier
    Verify {
        claim: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        data_dir: Option<PathBuf>,
        /// Where witness files are written
        #[arg(long, default_value = "bwl-out")]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run every registered claim and emit the full ledger
    VerifyAll {
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        data_dir: Option<PathBuf>,
        /// Where witness files and the ledger are written
        #[arg(long, default_value = "bwl-out")]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Regenerate the derived exceptional catalog files
    RegenExceptional {
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, String>;

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.cmd {
        Cmd::Family {
            kind,
            n,
            i,
            c,
            a,
            b,
            output,
        } => {
            let spec = parse_family(&kind, n, i, c, a, b)?;
            let graph = spec.build().map_err(|e| e.to_string())?;
            emit(output.as_deref(), &graph.to_wg())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Induce { input, output } => {
            let graph = WeightedGraph::from_wg(&slurp(input.as_deref())?)
                .map_err(|e| e.to_string())?;
            emit(output.as_deref(), &induce_graph(&graph).to_bws())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { input, format } => {
            let b = BetweennessStructure::from_bws(&slurp(input.as_deref())?)
                .map_err(|e| e.to_string())?;
            let frp = b.check_frp();
            let regular = b.is_regular();
            let orderable = match b.is_orderable() {
                Ok(o) => Some(o.is_some()),
                Err(_) => None,
            };
            let ordered = b.is_ordered().is_some();
            let connected = adjacency_graph(&b).is_connected();
            match format {
                Format::Text => {
                    println!("order: {}", b.order());
                    println!("frp: {frp}");
                    println!("cosize: {}", b.cosize());
                    println!("linear: {}", b.is_linear());
                    println!("ordered: {ordered}");
                    println!("regular: {regular}");
                    match orderable {
                        Some(v) => println!("orderable: {v}"),
                        None => println!("orderable: skipped (order above scan guard)"),
                    }
                    println!("adjacency_connected: {connected}");
                }
                Format::Ledger => {
                    let orderable = orderable
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "skipped".into());
                    println!(
                        "op=check n={} frp={frp} cosize={} linear={} ordered={ordered} regular={regular} orderable={orderable}",
                        b.order(),
                        b.cosize(),
                        b.is_linear(),
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Iso { first, second } => {
            let a = BetweennessStructure::from_bws(&read_file(&first)?)
                .map_err(|e| e.to_string())?;
            let b = BetweennessStructure::from_bws(&read_file(&second)?)
                .map_err(|e| e.to_string())?;
            let same = is_isomorphic(&a, &b).map_err(|e| e.to_string())?;
            println!("isomorphic={same}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hyper { input, output } => {
            let b = BetweennessStructure::from_bws(&slurp(input.as_deref())?)
                .map_err(|e| e.to_string())?;
            emit(output.as_deref(), &triangle_hypergraph(&b).to_th())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Metrize {
            structure,
            hypergraph,
            all,
            out_dir,
            format,
        } => run_metrize(structure, hypergraph, all, &out_dir, format),
        Cmd::Enumerate {
            n,
            cosize,
            at_most,
            filter,
            long_run,
            format,
        } => {
            let filter = parse_filter(&filter)?;
            let limits = limits_with(long_run, None);
            let spec = if at_most {
                CosizeSpec::AtMost(cosize)
            } else {
                CosizeSpec::Exact(cosize)
            };
            let r = enumerate_structures(n, spec, filter, &limits).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    println!(
                        "n={} cosize={:?} filter={} classes={} labeled={} wall={:?}",
                        r.n,
                        r.cosize,
                        r.filter.name(),
                        r.classes.len(),
                        r.labeled_total,
                        r.wall
                    );
                    for (idx, class) in r.classes.iter().enumerate() {
                        println!(
                            "class {idx}: labeled={} form={}",
                            class.labeled_count,
                            class.form.hex()
                        );
                        for line in class.representative.to_bws().lines() {
                            println!("  {line}");
                        }
                    }
                }
                Format::Ledger => {
                    println!(
                        "op=enumerate n={} cosize={} at_most={} filter={} classes={} labeled={} wall_ms={}",
                        r.n,
                        cosize,
                        at_most,
                        r.filter.name(),
                        r.classes.len(),
                        r.labeled_total,
                        r.wall.as_millis()
                    );
                    for (idx, class) in r.classes.iter().enumerate() {
                        println!(
                            "class={idx} labeled={} form={}",
                            class.labeled_count,
                            class.form.hex()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tau {
            n,
            k,
            filter,
            long_run,
            format,
        } => {
            let filter = parse_filter(&filter)?;
            let limits = limits_with(long_run, None);
            let value = tau(n, k, filter, &limits).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("tau({n}, {k}) = {value} under filter {}", filter.name()),
                Format::Ledger => {
                    println!("op=tau n={n} k={k} filter={} value={value}", filter.name())
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Probe {
            k,
            c,
            n_from,
            n_to,
            long_run,
            format,
        } => {
            let limits = limits_with(long_run, None);
            let rows = probe_gamma_sigma(k, c, n_from, n_to, &limits).map_err(|e| e.to_string())?;
            for (n, nonempty) in rows {
                match format {
                    Format::Text => println!(
                        "n={n} cosize={} nonempty={nonempty}",
                        k as i64 * n as i64 - c
                    ),
                    Format::Ledger => println!(
                        "op=probe k={k} c={c} n={n} cosize={} nonempty={nonempty}",
                        k as i64 * n as i64 - c
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            claim,
            max_n,
            data_dir,
            out_dir,
            format,
        } => {
            let limits = limits_with(false, max_n);
            let dir = resolve_data_dir(data_dir);
            let entries = verify(&claim, &limits, &dir).map_err(|e| e.to_string())?;
            report_entries(&entries, &out_dir, format)?;
            Ok(exit_for(&entries))
        }
        Cmd::VerifyAll {
            max_n,
            data_dir,
            out_dir,
            format,
        } => {
            let limits = limits_with(false, max_n);
            let dir = resolve_data_dir(data_dir);
            let mut entries = Vec::new();
            for id in claim_ids() {
                entries.extend(verify(id, &limits, &dir).map_err(|e| e.to_string())?);
            }
            report_entries(&entries, &out_dir, format)?;
            let ledger_path = out_dir.join("ledger.txt");
            std::fs::create_dir_all(&out_dir).map_err(|e| e.to_string())?;
            std::fs::write(&ledger_path, ledger_text(&entries)).map_err(|e| e.to_string())?;
            eprintln!("ledger written to {}", ledger_path.display());
            Ok(exit_for(&entries))
        }
        Cmd::RegenExceptional { data_dir } => {
            let dir = resolve_data_dir(data_dir);
            std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
            let limits = EnumLimits::from_env();
            let derived = derive_exceptional_graphs(&limits).map_err(|e| e.to_string())?;
            for (label, graph) in derived {
                let path = dir.join(format!("{label}.wg"));
                std::fs::write(&path, graph.to_wg()).map_err(|e| e.to_string())?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_metrize(
    structure: Option<PathBuf>,
    hypergraph: Option<PathBuf>,
    all: bool,
    out_dir: &Path,
    format: Format,
) -> CliResult<ExitCode> {
    match (structure, hypergraph) {
        (Some(path), None) => {
            let b = BetweennessStructure::from_bws(&read_file(&path)?)
                .map_err(|e| e.to_string())?;
            match metrize_structure(&b) {
                Some(metric) => {
                    let cert = write_witness(out_dir, "structure.metric", &metric.to_metric_text())?;
                    match format {
                        Format::Text => {
                            println!("metrizable: certificate {}", cert.display())
                        }
                        Format::Ledger => println!(
                            "op=metrize kind=structure verdict=metrizable certificate={}",
                            cert.display()
                        ),
                    }
                }
                None => match format {
                    Format::Text => println!("not metrizable"),
                    Format::Ledger => {
                        println!("op=metrize kind=structure verdict=not-metrizable")
                    }
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        (None, Some(path)) => {
            let h = TriangleHypergraph::from_th(&read_file(&path)?)
                .map_err(|e| e.to_string())?;
            let result = metrize_hypergraph(&h, all).map_err(|e| e.to_string())?;
            match &result.verdict {
                MetrizationVerdict::Metrizable { metric, structure } => {
                    let cert = write_witness(out_dir, "hypergraph.metric", &metric.to_metric_text())?;
                    let real = write_witness(out_dir, "hypergraph.bws", &structure.to_bws())?;
                    match format {
                        Format::Text => println!(
                            "metrizable: certificate {} realizing {}",
                            cert.display(),
                            real.display()
                        ),
                        Format::Ledger => println!(
                            "op=metrize kind=hypergraph verdict=metrizable certificate={} realizing={}",
                            cert.display(),
                            real.display()
                        ),
                    }
                }
                MetrizationVerdict::NotMetrizable { reason } => match format {
                    Format::Text => println!("not metrizable: {reason:?}"),
                    Format::Ledger => println!(
                        "op=metrize kind=hypergraph verdict=not-metrizable reason={reason:?}"
                    ),
                },
            }
            if let Some(classes) = &result.classes {
                println!("realizing classes: {}", classes.len());
                for (idx, class) in classes.iter().enumerate() {
                    let path = write_witness(
                        out_dir,
                        &format!("class_{idx}.bws"),
                        &class.structure.to_bws(),
                    )?;
                    println!(
                        "class {idx}: labeled={} metrizable={} file={}",
                        class.labeled_count,
                        class.metric.is_some(),
                        path.display()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        _ => Err("pass exactly one of --structure or --hypergraph".into()),
    }
}

fn parse_family(
    kind: &str,
    n: Option<usize>,
    i: Option<usize>,
    c: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
) -> CliResult<FamilySpec> {
    let need_n = || n.ok_or_else(|| format!("family {kind} requires --n"));
    match kind {
        "P" | "p" => Ok(FamilySpec::Path { n: need_n()? }),
        "C" | "c" => Ok(FamilySpec::Cycle { n: need_n()? }),
        "Kab" | "kab" | "K" | "k" => Ok(FamilySpec::CompleteBipartite {
            a: a.ok_or("family Kab requires --a")?,
            b: b.ok_or("family Kab requires --b")?,
        }),
        "Q" | "q" => Ok(FamilySpec::Q {
            n: need_n()?,
            c: c.ok_or("family Q requires --c")?,
        }),
        "R" | "r" => Ok(FamilySpec::R {
            n: need_n()?,
            i: i.ok_or("family R requires --i")?,
            c: c.ok_or("family R requires --c")?,
        }),
        "S" | "s" => Ok(FamilySpec::S {
            n: need_n()?,
            c: c.ok_or("family S requires --c")?,
        }),
        "T" | "t" => Ok(FamilySpec::T {
            n: need_n()?,
            i: i.ok_or("family T requires --i")?,
        }),
        other => Err(format!("unknown family kind {other}; expected P, C, Kab, Q, R, S or T")),
    }
}

fn parse_filter(name: &str) -> CliResult<PropertyFilter> {
    PropertyFilter::parse(name)
        .ok_or_else(|| format!("unknown filter {name}; expected trivial, regular or orderable"))
}

fn limits_with(long_run: bool, max_n: Option<usize>) -> EnumLimits {
    let mut limits = EnumLimits::from_env();
    if long_run {
        limits.max_n = limits.max_n.max(EnumLimits::long_run().max_n);
    }
    if let Some(m) = max_n {
        limits.max_n = m.min(10);
    }
    limits
}

fn resolve_data_dir(given: Option<PathBuf>) -> PathBuf {
    if let Some(dir) = given {
        return dir;
    }
    let local = PathBuf::from("data/exceptional");
    if local.exists() {
        local
    } else {
        bwl::families::default_data_dir()
    }
}

fn slurp(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p != Path::new("-") => read_file(p),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn write_witness(dir: &Path, name: &str, content: &str) -> CliResult<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let path = dir.join(name);
    std::fs::write(&path, content).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(path)
}

fn report_entries(entries: &[LedgerEntry], out_dir: &Path, format: Format) -> CliResult<()> {
    for entry in entries {
        let mut witness_paths = Vec::new();
        for (idx, w) in entry.witnesses.iter().enumerate() {
            let dir = out_dir.join(&entry.claim);
            let name = format!("{idx}_{}", w.name);
            let path = write_witness(&dir, &name, &w.content)?;
            witness_paths.push(path.display().to_string());
        }
        match format {
            Format::Text => {
                println!(
                    "{:<12} {:<42} {:<12} {:>9.2?}  {}",
                    entry.claim,
                    entry.params,
                    entry.verdict.as_str(),
                    entry.runtime,
                    entry.detail
                );
                for p in &witness_paths {
                    println!("    witness: {p}");
                }
            }
            Format::Ledger => {
                println!("{}", ledger_line(entry, &witness_paths));
            }
        }
    }
    Ok(())
}

fn ledger_line(entry: &LedgerEntry, witness_paths: &[String]) -> String {
    let mut line = format!(
        "claim={} params=\"{}\" verdict={} runtime_ms={} detail=\"{}\"",
        entry.claim,
        entry.params,
        entry.verdict.as_str(),
        entry.runtime.as_millis(),
        entry.detail
    );
    if !witness_paths.is_empty() {
        line.push_str(&format!(" witness={}", witness_paths.join(",")));
    }
    line
}

fn ledger_text(entries: &[LedgerEntry]) -> String {
    let mut out = format!("{LEDGER_VERSION}\n");
    for entry in entries {
        out.push_str(&ledger_line(entry, &[]));
        out.push('\n');
    }
    out
}

fn exit_for(entries: &[LedgerEntry]) -> ExitCode {
    if entries.iter().any(|e| e.verdict == Verdict::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
