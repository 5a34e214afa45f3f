//! Certificates and their one-line text records.
//!
//! ```text
//! hamiltonian     g6=<graph6>  cycle=<v,v,..>
//! extremal        g6=<graph6>  k=<k>  a=<v,..>  b=<v,..>  c=<v,..>
//! counterexample  g6=<graph6>  k=<k>  reason=<text>
//! ```
//!
//! Fields are tab-separated; the graph travels with the certificate so a
//! record can be re-validated on its own.

use std::fmt;

use super::{recognize_extremal, ExtremalPartition};
use crate::cycles::{find_hamiltonian_cycle, Cycle};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Hamiltonian(Cycle),
    Extremal { k: usize, partition: ExtremalPartition },
    Counterexample { k: usize, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertificateKind {
    Hamiltonian,
    Extremal,
    Counterexample,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::Hamiltonian => "hamiltonian",
            CertificateKind::Extremal => "extremal",
            CertificateKind::Counterexample => "counterexample",
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::Hamiltonian(_) => CertificateKind::Hamiltonian,
            Certificate::Extremal { .. } => CertificateKind::Extremal,
            Certificate::Counterexample { .. } => CertificateKind::Counterexample,
        }
    }

    /// Re-checks the certificate against `g` without trusting how it was
    /// produced.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        match self {
            Certificate::Hamiltonian(c) => {
                c.validate(g).map_err(|e| e.to_string())?;
                if c.len() != g.order() {
                    return Err(format!("cycle covers {} of {} vertices", c.len(), g.order()));
                }
                Ok(())
            }
            Certificate::Extremal { k, partition } => {
                if partition.k() != *k {
                    return Err(format!("partition has k = {}, certificate says {k}", partition.k()));
                }
                partition.check(g)
            }
            Certificate::Counterexample { .. } => {
                if find_hamiltonian_cycle(g).map_err(|e| e.to_string())?.is_some() {
                    return Err("graph is Hamiltonian".into());
                }
                if recognize_extremal(g).is_some() {
                    return Err("graph is extremal".into());
                }
                Ok(())
            }
        }
    }

    /// The payload part of the record (everything after the graph).
    pub fn payload(&self) -> String {
        match self {
            Certificate::Hamiltonian(c) => format!("cycle={c}"),
            Certificate::Extremal { k, partition } => format!("k={k}\t{partition}"),
            Certificate::Counterexample { k, reason } => {
                format!("k={k}\treason={}", reason.replace(['\t', '\n'], " "))
            }
        }
    }

    pub fn to_record(&self, g: &Graph) -> String {
        format!("{}\tg6={}\t{}", self.kind(), g.to_graph6_string(), self.payload())
    }

    /// Parses a record produced by [`Certificate::to_record`]. The
    /// certificate is not validated.
    pub fn parse_record(line: &str) -> Result<(Graph, Certificate)> {
        let bad = |what: &str| Error::InvalidParameters(format!("certificate record: {what}"));
        let mut fields = line.trim_end_matches(['\r', '\n']).split('\t');
        let kind = fields.next().ok_or_else(|| bad("empty"))?;
        let mut g6 = None;
        let mut kv = std::collections::HashMap::new();
        for f in fields {
            let (key, value) = f.split_once('=').ok_or_else(|| bad("field without '='"))?;
            if key == "g6" {
                g6 = Some(value);
            } else {
                kv.insert(key, value);
            }
        }
        let g = parse_graph6(g6.ok_or_else(|| bad("missing g6"))?.as_bytes())?;
        let get = |key: &str| kv.get(key).copied().ok_or_else(|| bad(&format!("missing {key}")));
        let num = |key: &str| -> Result<usize> { get(key)?.parse().map_err(|_| bad(key)) };
        let cert = match kind {
            "hamiltonian" => Certificate::Hamiltonian(Cycle::from_sequence(parse_list(get("cycle")?)?)?),
            "extremal" => {
                let set = |key: &str| -> Result<VertexSet> { Ok(parse_list(get(key)?)?.into_iter().collect()) };
                Certificate::Extremal {
                    k: num("k")?,
                    partition: ExtremalPartition { a: set("a")?, b: set("b")?, c_part: set("c")? },
                }
            }
            "counterexample" => Certificate::Counterexample { k: num("k")?, reason: get("reason")?.to_string() },
            other => return Err(bad(&format!("unknown kind {other:?}"))),
        };
        Ok((g, cert))
    }
}

/// Parses `0,2,5`; `-` is the empty list.
pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| Error::InvalidParameters(format!("bad vertex {t:?}")))).collect()
}
