use std::fs;
use std::io::{self, Read};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use birgraph::birational::{apply_trace, TransformationTrace};
use birgraph::equivalence::transformation_between;
use birgraph::invariants::{adjacency_matrix, discriminant, inertia, is_contractible};
use birgraph::sample::{random_blowups, random_walk};
use birgraph::standardize::{canonical_form, to_standard};
use birgraph::tables::{all_rows, check_tables};
use birgraph::{format_graph, parse_graph, Error, WeightedGraph};

/// Blowups, blowdowns and standard forms of weighted graphs.
///
/// Graphs are given as `L[w,..]`, `C(w,..)`, or in the line format
/// (`V id weight` / `E id id`). An argument of the form `@path` is read from
/// a file and `-` reads standard input.
#[derive(Parser)]
#[command(name = "birgraph", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a graph and print it in canonical text form.
    Parse { graph: String },
    /// Reduce a graph to standard form.
    Standardize {
        graph: String,
        /// Write the blowup/blowdown trace to FILE.
        #[arg(long, value_name = "FILE")]
        trace: Option<String>,
        /// Also print the canonical key of the standard form.
        #[arg(long)]
        canonical: bool,
    },
    /// Discriminant, inertia, Betti number and contractibility.
    Invariants {
        graph: String,
        /// Dump the intersection matrix row by row.
        #[arg(long)]
        matrix: bool,
    },
    /// Decide birational equivalence. Exit status 0 if equivalent, 1 if not.
    Equiv {
        a: String,
        b: String,
        /// Write a trace from the standard form of A to one isomorphic to
        /// the standard form of B.
        #[arg(long, value_name = "FILE")]
        trace: Option<String>,
    },
    /// Replay a trace file from a graph and print the result.
    Replay { graph: String, trace: String },
    /// Emit a random trace starting at a graph.
    Randwalk {
        graph: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Mix in blowdowns instead of only blowing up.
        #[arg(long)]
        mixed: bool,
    },
    /// Recompute the inertia tables of standard chains and circles.
    Tables {
        /// Parameter ranges, e.g. `k=0..4,n=1..6`. `k` (or `l`) is the zero
        /// block parameter and `n` the tail length.
        #[arg(long, default_value = "k=0..4,n=1..6")]
        range: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Lib(Error),
    Io(String, io::Error),
    Usage(String),
    NotEquivalent,
    TableMismatch(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::NotEquivalent | Failure::Lib(Error::NotEquivalent) => 1,
            Failure::Usage(_) => 2,
            Failure::Lib(Error::Parse { .. } | Error::EmptyGraph | Error::DanglingEdge(..)) => 2,
            Failure::Lib(
                Error::InvalidWitness(_) | Error::InvalidTrace(_) | Error::FingerprintMismatch { .. },
            ) => 3,
            Failure::TableMismatch(_) => 4,
            Failure::Io(..) => 12,
            Failure::Lib(_) => 11,
        }
    }

    fn message(&self) -> Option<String> {
        match self {
            Failure::Lib(e) => Some(e.to_string()),
            Failure::Io(path, e) => Some(format!("{path}: {e}")),
            Failure::Usage(m) => Some(m.clone()),
            Failure::NotEquivalent => None,
            Failure::TableMismatch(n) => Some(format!("{n} table cells disagree")),
        }
    }
}

type Out = Result<(), Failure>;

fn read_source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io("<stdin>".into(), e))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| Failure::Io(path.into(), e))
    } else {
        Ok(arg.to_string())
    }
}

fn load(arg: &str) -> Result<WeightedGraph, Failure> {
    Ok(parse_graph(&read_source(arg)?)?)
}

fn write_file(path: &str, body: &str) -> Out {
    fs::write(path, body).map_err(|e| Failure::Io(path.into(), e))
}

fn summary(t: &TransformationTrace) -> String {
    format!(
        "trace: {} steps ({} blowups, {} blowdowns) inner={} admissible={}",
        t.len(),
        t.blowups(),
        t.blowdowns(),
        t.inner,
        t.admissible
    )
}

fn standardize(graph: &str, trace: Option<String>, canonical: bool) -> Out {
    let g = load(graph)?;
    let (s, t) = to_standard(&g)?;
    println!("{}", format_graph(&s));
    println!("{}", summary(&t));
    if canonical {
        println!("key: {}", canonical_form(&s)?);
    }
    if let Some(path) = trace {
        write_file(&path, &t.to_text())?;
    }
    Ok(())
}

fn invariants(graph: &str, matrix: bool) -> Out {
    let g = load(graph)?;
    let c = is_contractible(&g)?;
    println!(
        "delta={} inertia={} betti={} contractible={}",
        discriminant(&g),
        inertia(&g),
        g.betti(),
        c.contractible
    );
    if matrix {
        let m = adjacency_matrix(&g);
        for row in &m.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            println!("{}", cells.join(" "));
        }
    }
    Ok(())
}

fn equiv(a: &str, b: &str, trace: Option<String>) -> Out {
    let (ga, gb) = (load(a)?, load(b)?);
    let (sa, _) = to_standard(&ga)?;
    let (sb, _) = to_standard(&gb)?;
    match transformation_between(&sa, &sb) {
        Ok((t, iso)) => {
            println!("equivalent");
            println!("{} ~ {}", format_graph(&sa), format_graph(&sb));
            println!("{}", summary(&t));
            if !iso.is_identity() {
                let pairs: Vec<String> = iso.map.iter().map(|(u, v)| format!("{u}->{v}")).collect();
                println!("isomorphism: {}", pairs.join(" "));
            }
            if let Some(path) = trace {
                write_file(&path, &t.to_text())?;
            }
            Ok(())
        }
        Err(Error::NotEquivalent) => {
            println!("not equivalent");
            println!("{} vs {}", canonical_form(&sa)?, canonical_form(&sb)?);
            Err(Failure::NotEquivalent)
        }
        Err(e) => Err(e.into()),
    }
}

fn replay(graph: &str, trace: &str) -> Out {
    let g = load(graph)?;
    let text = read_source(&format!("@{trace}"))?;
    let t = TransformationTrace::parse(&text, &g)?;
    let h = apply_trace(&g, &t)?;
    println!("{}", format_graph(&h));
    println!("{}", summary(&t));
    Ok(())
}

fn randwalk(graph: &str, seed: u64, steps: usize, mixed: bool) -> Out {
    let g = load(graph)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (_, t) = if mixed { random_walk(&mut rng, &g, steps)? } else { random_blowups(&mut rng, &g, steps)? };
    print!("{}", t.to_text());
    Ok(())
}

fn parse_range(text: &str) -> Result<(RangeInclusive<usize>, RangeInclusive<usize>), Failure> {
    let bad = || Failure::Usage(format!("bad range {text:?}, expected e.g. k=0..4,n=1..6"));
    let mut p = 0..=4;
    let mut n = 1..=6;
    for part in text.split(',') {
        let (name, r) = part.split_once('=').ok_or_else(bad)?;
        let (lo, hi) = r.split_once("..").ok_or_else(bad)?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        match name.trim() {
            "k" | "l" => p = lo..=hi,
            "n" => n = lo..=hi,
            _ => return Err(bad()),
        }
    }
    Ok((p, n))
}

fn tables(range: &str, samples: usize, seed: u64) -> Out {
    let (ps, ns) = parse_range(range)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells = check_tables(&mut rng, &all_rows(), ps, ns, samples);
    for c in &cells {
        println!("{c}");
    }
    let bad = cells.iter().filter(|c| !c.ok()).count();
    if bad > 0 {
        return Err(Failure::TableMismatch(bad));
    }
    Ok(())
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`birgraph tables | head`) instead of panicking in println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Parse { graph } => load(&graph).map(|g| println!("{}", format_graph(&g))),
        Cmd::Standardize { graph, trace, canonical } => standardize(&graph, trace, canonical),
        Cmd::Invariants { graph, matrix } => invariants(&graph, matrix),
        Cmd::Equiv { a, b, trace } => equiv(&a, &b, trace),
        Cmd::Replay { graph, trace } => replay(&graph, &trace),
        Cmd::Randwalk { graph, seed, steps, mixed } => randwalk(&graph, seed, steps, mixed),
        Cmd::Tables { range, samples, seed } => tables(&range, samples, seed),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(m) = f.message() {
                eprintln!("birgraph: {m}");
            }
            ExitCode::from(f.code())
        }
    }
}
