//! Command-line front end. [`run`] never exits the process; the binary
//! prints the payload and exits with the code.
//!
//! Exit codes: 0 success, 1 counterexample or failed check, 2 usage or
//! input error.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::cycles::find_hamiltonian_cycle;
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph, GraphBuilder};
use crate::harness::{verify_order, Source, VerifyOptions};
use crate::invariants::{chromatic_number, clique_number, independence_number, vertex_connectivity};
use crate::theorem::{build_extremal, certify, trace_proof, Certificate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub payload: String,
}

impl CommandOutcome {
    fn ok(payload: String) -> Self {
        CommandOutcome { exit_code: EXIT_OK, payload }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandOutcome { exit_code: EXIT_USAGE, payload: format!("error: {message}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hamcert",
    version,
    about = "Hamiltonicity certificates for k-connected graphs with large chromatic number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n, kappa, chi, alpha, omega, delta and Hamiltonicity.
    Invariants {
        /// graph6 strings; read from stdin, one per line, when absent.
        graphs: Vec<String>,
    },
    /// Print a certificate record for each graph.
    Certify {
        graphs: Vec<String>,
        #[arg(long)]
        k: usize,
    },
    /// Print the proof trace, one step per line.
    Trace {
        graph: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Print the graph6 string of K_k join (K_k^c union K_{n-2k}).
    Extremal {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Sweep every graph of order n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k_min: usize,
        /// Defaults to n - 1.
        #[arg(long)]
        k_max: Option<usize>,
        /// graph6 file instead of the built-in enumeration; `-` is stdin.
        #[arg(long)]
        stream: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
        /// Print a classify record for every graph and k before the summary.
        #[arg(long)]
        records: bool,
    },
    /// graph6 codec.
    G6 {
        #[command(subcommand)]
        op: G6Op,
    },
}

#[derive(Subcommand, Debug)]
enum G6Op {
    /// Edge lists like `4 0-1 1-2 2-3` to graph6.
    Encode { lists: Vec<String> },
    /// graph6 to edge lists.
    Decode { graphs: Vec<String> },
}

/// Runs with the process's standard input.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_input(argv, &mut std::io::stdin().lock())
}

/// Like [`run`], reading from `input` wherever stdin would be read.
pub fn run_with_input<I, T>(argv: I, input: &mut dyn BufRead) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return CommandOutcome { exit_code: code, payload: e.render().to_string() };
        }
    };
    match cli.command {
        Command::Invariants { graphs } => per_graph(graphs, input, invariants_line),
        Command::Certify { graphs, k } => per_graph(graphs, input, |g| certify_line(g, k)),
        Command::Trace { graph, k } => trace(graph, input, k),
        Command::Extremal { k, n } => match build_extremal(k, n) {
            Ok(g) => CommandOutcome::ok(format!("{}\n", g.to_graph6_string())),
            Err(e) => CommandOutcome::usage(e),
        },
        Command::Verify { n, k_min, k_max, stream, threads, records } => {
            verify(n, k_min, k_max.unwrap_or(n.saturating_sub(1)), stream, threads, records, input)
        }
        Command::G6 { op: G6Op::Encode { lists } } => per_line(lists, input, encode_line),
        Command::G6 { op: G6Op::Decode { graphs } } => per_graph(graphs, input, |g| Ok((EXIT_OK, edge_list(g)))),
    }
}

/// Arguments, or else the non-blank lines of `input`.
fn items(args: Vec<String>, input: &mut dyn BufRead) -> std::result::Result<Vec<String>, String> {
    if !args.is_empty() {
        return Ok(args);
    }
    let mut out = Vec::new();
    for line in input.lines() {
        let line = line.map_err(|e| format!("reading stdin: {e}"))?;
        if !line.trim().is_empty() {
            out.push(line.trim().to_string());
        }
    }
    Ok(out)
}

/// Applies `f` to each item; the exit code is the worst seen, and a line
/// that fails is reported in place as `error: ...`.
fn per_line<F>(args: Vec<String>, input: &mut dyn BufRead, mut f: F) -> CommandOutcome
where
    F: FnMut(&str) -> Result<(i32, String)>,
{
    let list = match items(args, input) {
        Ok(l) => l,
        Err(e) => return CommandOutcome::usage(e),
    };
    let mut payload = String::new();
    let mut code = EXIT_OK;
    for item in &list {
        match f(item) {
            Ok((c, text)) => {
                code = code.max(c);
                payload.push_str(&text);
                payload.push('\n');
            }
            Err(e) => {
                code = EXIT_USAGE;
                let _ = writeln!(payload, "error: {item}: {e}");
            }
        }
    }
    CommandOutcome { exit_code: code, payload }
}

fn per_graph<F>(args: Vec<String>, input: &mut dyn BufRead, mut f: F) -> CommandOutcome
where
    F: FnMut(&Graph) -> Result<(i32, String)>,
{
    per_line(args, input, |s| f(&parse_graph6(s.as_bytes())?))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn invariants_line(g: &Graph) -> Result<(i32, String)> {
    let line = format!(
        "{}\tn={}\tkappa={}\tchi={}\talpha={}\tomega={}\tdelta={}\thamiltonian={}",
        g.to_graph6_string(),
        g.order(),
        vertex_connectivity(g)?,
        chromatic_number(g)?.0,
        independence_number(g)?.0,
        clique_number(g)?,
        g.min_degree()?,
        yes_no(g.order() >= 3 && find_hamiltonian_cycle(g)?.is_some()),
    );
    Ok((EXIT_OK, line))
}

fn certify_line(g: &Graph, k: usize) -> Result<(i32, String)> {
    let cert = certify(g, k)?;
    let code = match cert {
        Certificate::Counterexample { .. } => EXIT_FOUND,
        _ => EXIT_OK,
    };
    Ok((code, cert.to_record(g)))
}

fn trace(graph: Option<String>, input: &mut dyn BufRead, k: usize) -> CommandOutcome {
    let list = match items(graph.into_iter().collect(), input) {
        Ok(l) => l,
        Err(e) => return CommandOutcome::usage(e),
    };
    let [g6] = list.as_slice() else {
        return CommandOutcome::usage(format!("trace takes exactly one graph, got {}", list.len()));
    };
    let result = parse_graph6(g6.as_bytes()).and_then(|g| trace_proof(&g, k));
    match result {
        Ok(t) => {
            CommandOutcome { exit_code: if t.all_passed() { EXIT_OK } else { EXIT_FOUND }, payload: t.to_string() }
        }
        Err(e) => CommandOutcome::usage(e),
    }
}

fn verify(
    n: usize,
    k_min: usize,
    k_max: usize,
    stream: Option<String>,
    threads: Option<usize>,
    records: bool,
    input: &mut dyn BufRead,
) -> CommandOutcome {
    let source = match stream.as_deref() {
        None => Ok(Source::Internal),
        Some("-") => Source::from_reader(input),
        Some(path) => File::open(path).and_then(|f| Source::from_reader(BufReader::new(f))),
    };
    let source = match source {
        Ok(s) => s,
        Err(e) => return CommandOutcome::usage(format!("reading stream: {e}")),
    };
    if k_min > k_max {
        return CommandOutcome::usage(format!("--k-min {k_min} exceeds --k-max {k_max}"));
    }
    let report = match verify_order(n, k_min..=k_max, &source, &VerifyOptions { threads, records }) {
        Ok(r) => r,
        Err(e) => return CommandOutcome::usage(e),
    };
    let mut payload = String::new();
    for r in &report.records {
        payload.push_str(r);
        payload.push('\n');
    }
    let _ = writeln!(payload, "{report}");
    let exit_code = if !report.is_clean() {
        EXIT_FOUND
    } else if !report.input_errors.is_empty() {
        EXIT_USAGE
    } else {
        EXIT_OK
    };
    CommandOutcome { exit_code, payload }
}

/// `n u-v u-v ...`.
fn edge_list(g: &Graph) -> String {
    let mut s = g.order().to_string();
    for (u, v) in g.edges() {
        let _ = write!(s, " {u}-{v}");
    }
    s
}

fn encode_line(line: &str) -> Result<(i32, String)> {
    let bad = |t: &str| Error::InvalidParameters(format!("bad edge-list token {t:?}"));
    let mut tokens = line.split_whitespace();
    let n: usize = tokens.next().ok_or_else(|| bad(""))?.parse().map_err(|_| bad(line))?;
    let mut b = GraphBuilder::new(n)?;
    for t in tokens {
        let (u, v) = t.split_once('-').ok_or_else(|| bad(t))?;
        b.add_edge(u.parse().map_err(|_| bad(t))?, v.parse().map_err(|_| bad(t))?)?;
    }
    Ok((EXIT_OK, b.build().to_graph6_string()))
}
