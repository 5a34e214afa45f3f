//! Population sweeps: every graph of a given order, for every `k` in a
//! range, is checked against the theorem and against `chi + chi^c <= n + 1`.
//!
//! Work is cut into shards (edge-mask ranges for the internal enumeration,
//! line ranges for a stream). Each shard builds its own report and the
//! reports are merged in shard order, so totals and lists do not depend on
//! the number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hasher;
use std::io::BufRead;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use fnv::FnvHasher;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{
    edge_count_for_order, parse_graph6_line, Graph, LabeledGraphs, MAX_ENUMERATION_ORDER, MAX_GRAPH6_ORDER,
};
use crate::invariants::{chromatic_number, independence_number, vertex_connectivity};
use crate::theorem::{certify_unchecked, Certificate, CertificateKind, HypothesisFlag};

const MASKS_PER_SHARD: u64 = 1 << 13;
const LINES_PER_SHARD: usize = 64;

/// Where the graphs come from.
#[derive(Clone, Debug)]
pub enum Source {
    /// All labelled graphs of the order, `n <= 7`.
    Internal,
    /// graph6 lines; blank lines and the `>>graph6<<` header are skipped.
    Lines(Vec<String>),
}

impl Source {
    pub fn from_reader<R: BufRead>(reader: R) -> std::io::Result<Source> {
        reader.lines().collect::<std::io::Result<Vec<_>>>().map(Source::Lines)
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Keep one classify record per graph and `k`.
    pub records: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KTally {
    pub hits: u64,
    pub hamiltonian: u64,
    pub extremal: u64,
    pub counterexamples: u64,
}

impl KTally {
    fn add(&mut self, other: &KTally) {
        self.hits += other.hits;
        self.hamiltonian += other.hamiltonian;
        self.extremal += other.extremal;
        self.counterexamples += other.counterexamples;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    /// 1-based.
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub order: usize,
    pub k_range: RangeInclusive<usize>,
    pub total_graphs: u64,
    pub per_k: BTreeMap<usize, KTally>,
    /// `(graph6, k)` for every hypothesis hit that is neither Hamiltonian
    /// nor extremal.
    pub counterexamples: Vec<(String, usize)>,
    /// `(graph6, k)` for every non-Hamiltonian hypothesis hit.
    pub non_hamiltonian: Vec<(String, usize)>,
    pub nordhaus_gaddum_violations: u64,
    pub input_errors: Vec<InputError>,
    pub records: Vec<String>,
    pub elapsed: Duration,
}

/// Compares everything except `elapsed`.
impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.k_range == other.k_range
            && self.total_graphs == other.total_graphs
            && self.per_k == other.per_k
            && self.counterexamples == other.counterexamples
            && self.non_hamiltonian == other.non_hamiltonian
            && self.nordhaus_gaddum_violations == other.nordhaus_gaddum_violations
            && self.input_errors == other.input_errors
            && self.records == other.records
    }
}

impl Eq for VerificationReport {}

impl VerificationReport {
    pub fn empty(order: usize, k_range: RangeInclusive<usize>) -> VerificationReport {
        VerificationReport {
            order,
            per_k: k_range.clone().map(|k| (k, KTally::default())).collect(),
            k_range,
            total_graphs: 0,
            counterexamples: Vec::new(),
            non_hamiltonian: Vec::new(),
            nordhaus_gaddum_violations: 0,
            input_errors: Vec::new(),
            records: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Appends `other`; associative, and the identity is [`Self::empty`].
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.total_graphs += other.total_graphs;
        for (k, t) in &other.per_k {
            self.per_k.entry(*k).or_default().add(t);
        }
        self.counterexamples.extend(other.counterexamples);
        self.non_hamiltonian.extend(other.non_hamiltonian);
        self.nordhaus_gaddum_violations += other.nordhaus_gaddum_violations;
        self.input_errors.extend(other.input_errors);
        self.records.extend(other.records);
        self.elapsed += other.elapsed;
        self
    }

    pub fn totals(&self) -> KTally {
        let mut sum = KTally::default();
        for t in self.per_k.values() {
            sum.add(t);
        }
        sum
    }

    pub fn hypothesis_hits(&self) -> u64 {
        self.totals().hits
    }

    /// `hamiltonian + extremal + counterexamples = hits` for every `k`.
    pub fn is_consistent(&self) -> bool {
        self.per_k.values().all(|t| t.hamiltonian + t.extremal + t.counterexamples == t.hits)
            && self.counterexamples.len() as u64 == self.totals().counterexamples
    }

    /// No counterexample and no Nordhaus-Gaddum violation.
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.nordhaus_gaddum_violations == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order\t{}", self.order)?;
        writeln!(f, "k range\t{}..={}", self.k_range.start(), self.k_range.end())?;
        writeln!(f, "graphs\t{}", self.total_graphs)?;
        writeln!(f, "k\thits\thamiltonian\textremal\tcounterexamples")?;
        for (k, t) in &self.per_k {
            writeln!(f, "{k}\t{}\t{}\t{}\t{}", t.hits, t.hamiltonian, t.extremal, t.counterexamples)?;
        }
        let s = self.totals();
        writeln!(f, "total\t{}\t{}\t{}\t{}", s.hits, s.hamiltonian, s.extremal, s.counterexamples)?;
        writeln!(f, "nordhaus-gaddum violations\t{}", self.nordhaus_gaddum_violations)?;
        for (g6, k) in &self.counterexamples {
            writeln!(f, "counterexample\t{g6}\tk={k}")?;
        }
        for e in &self.input_errors {
            writeln!(f, "input error\tline {}\t{}", e.line, e.message)?;
        }
        write!(f, "elapsed\t{:.3}s", self.elapsed.as_secs_f64())
    }
}

/// One line per graph and `k`; see [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyRecord {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub kappa: usize,
    pub chi: usize,
    pub alpha: usize,
    /// First failing hypothesis condition, if any.
    pub failure: Option<HypothesisFlag>,
    /// Certificate kind when the hypothesis holds.
    pub kind: Option<CertificateKind>,
    /// FNV-1a of the certificate payload.
    pub digest: Option<u64>,
}

impl fmt::Display for ClassifyRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\tn={}\tk={}\tkappa={}\tchi={}\talpha={}\t",
            self.graph6, self.n, self.k, self.kappa, self.chi, self.alpha
        )?;
        match self.failure {
            None => f.write_str("hypothesis=holds\t")?,
            Some(flag) => write!(f, "hypothesis=fails: {flag}\t")?,
        }
        match self.kind {
            Some(kind) => write!(f, "kind={kind}\t")?,
            None => f.write_str("kind=-\t")?,
        }
        match self.digest {
            Some(d) => write!(f, "digest={d:016x}"),
            None => f.write_str("digest=-"),
        }
    }
}

fn digest(payload: &str) -> u64 {
    let mut h = FnvHasher::default();
    h.write(payload.as_bytes());
    h.finish()
}

/// Invariants, hypothesis verdict and certificate summary of `(g, k)`. The
/// order-0 graph gets zero invariants.
pub fn classify(g: &Graph, k: usize) -> ClassifyRecord {
    let n = g.order();
    let kappa = vertex_connectivity(g).unwrap_or(0);
    let chi = chromatic_number(g).map_or(0, |(c, _)| c);
    let alpha = independence_number(g).map_or(0, |(a, _)| a);
    let failure = if k < 2 {
        Some(HypothesisFlag::KAtLeastTwo)
    } else if kappa < k {
        Some(HypothesisFlag::KConnected)
    } else if chi + k < n {
        Some(HypothesisFlag::ChromaticBound)
    } else {
        None
    };
    let cert = match failure {
        None => certify_unchecked(g, k).ok(),
        Some(_) => None,
    };
    ClassifyRecord {
        graph6: g.to_graph6_string(),
        n,
        k,
        kappa,
        chi,
        alpha,
        failure,
        kind: cert.as_ref().map(Certificate::kind),
        digest: cert.as_ref().map(|c| digest(&c.payload())),
    }
}

/// Clips `k_range` to `[2, n - 1]`.
fn clip(n: usize, k_range: &RangeInclusive<usize>) -> Result<RangeInclusive<usize>> {
    if k_range.start() > k_range.end() {
        return Err(Error::InvalidParameters(format!("empty k range {}..={}", k_range.start(), k_range.end())));
    }
    let lo = (*k_range.start()).max(2);
    let hi = (*k_range.end()).min(n.saturating_sub(1));
    // An empty clipped range is represented as `lo..=lo-1`.
    Ok(if lo <= hi { lo..=hi } else { lo..=lo - 1 })
}

fn examine(g: &Graph, report: &mut VerificationReport, records: bool) -> Result<()> {
    let n = report.order;
    report.total_graphs += 1;
    let (chi, _) = chromatic_number(g)?;
    let (chi_c, _) = chromatic_number(&g.complement())?;
    if chi + chi_c > n + 1 {
        report.nordhaus_gaddum_violations += 1;
    }
    let delta = g.min_degree()?;
    let mut kappa = None;
    for k in report.k_range.clone() {
        if records {
            report.records.push(classify(g, k).to_string());
        }
        if delta < k {
            continue;
        }
        let kappa = match kappa {
            Some(v) => v,
            None => *kappa.insert(vertex_connectivity(g)?),
        };
        if kappa < k || chi + k < n {
            continue;
        }
        let tally = report.per_k.entry(k).or_default();
        tally.hits += 1;
        match certify_unchecked(g, k)? {
            Certificate::Hamiltonian(_) => tally.hamiltonian += 1,
            Certificate::Extremal { .. } => {
                tally.extremal += 1;
                report.non_hamiltonian.push((g.to_graph6_string(), k));
            }
            Certificate::Counterexample { .. } => {
                tally.counterexamples += 1;
                let g6 = g.to_graph6_string();
                report.counterexamples.push((g6.clone(), k));
                report.non_hamiltonian.push((g6, k));
            }
        }
    }
    Ok(())
}

fn internal_shard(n: usize, k_range: &RangeInclusive<usize>, start: u64, records: bool) -> Result<VerificationReport> {
    let mut report = VerificationReport::empty(n, k_range.clone());
    for g in LabeledGraphs::mask_range(n, start..start + MASKS_PER_SHARD)? {
        examine(&g, &mut report, records)?;
    }
    Ok(report)
}

fn stream_shard(
    n: usize,
    k_range: &RangeInclusive<usize>,
    first_line: usize,
    lines: &[String],
    records: bool,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::empty(n, k_range.clone());
    for (i, line) in lines.iter().enumerate() {
        let line_no = first_line + i + 1;
        match parse_graph6_line(line) {
            None => {}
            Some(Err(e)) => report.input_errors.push(InputError { line: line_no, message: e.to_string() }),
            Some(Ok(g)) if g.order() != n => report
                .input_errors
                .push(InputError { line: line_no, message: format!("graph has order {}, expected {n}", g.order()) }),
            Some(Ok(g)) => examine(&g, &mut report, records)?,
        }
    }
    Ok(report)
}

/// Sweeps every graph of order `n` from `source` over `k_range` (clipped
/// to `[2, n - 1]`). Malformed stream lines are reported, not fatal.
pub fn verify_order(
    n: usize,
    k_range: RangeInclusive<usize>,
    source: &Source,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    let max = match source {
        Source::Internal => MAX_ENUMERATION_ORDER,
        Source::Lines(_) => MAX_GRAPH6_ORDER,
    };
    if n > max {
        return Err(Error::OrderTooLarge { n, max });
    }
    let ks = clip(n, &k_range)?;
    let started = Instant::now();
    let records = options.records;
    let work = || -> Result<Vec<VerificationReport>> {
        match source {
            Source::Internal => {
                let masks = 1u64 << edge_count_for_order(n);
                let starts: Vec<u64> = (0..masks).step_by(MASKS_PER_SHARD as usize).collect();
                starts.into_par_iter().map(|s| internal_shard(n, &ks, s, records)).collect()
            }
            Source::Lines(lines) => lines
                .par_chunks(LINES_PER_SHARD)
                .enumerate()
                .map(|(i, chunk)| stream_shard(n, &ks, i * LINES_PER_SHARD, chunk, records))
                .collect(),
        }
    };
    let parts = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let mut report = parts.into_iter().fold(VerificationReport::empty(n, ks), VerificationReport::merge);
    report.elapsed = started.elapsed();
    Ok(report)
}
