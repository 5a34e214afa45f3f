//! Certificates for k-connected graphs with `chi(G) >= n - k`: such a graph
//! is Hamiltonian or equal to `K_k ∨ (K_k^c ∪ K_{n-2k})`.

mod certificate;
mod trace;

pub use certificate::{Certificate, CertificateKind};
pub use trace::{trace_proof, Conclusion, ProofTrace, Step};

use std::fmt;

use crate::cycles::find_hamiltonian_cycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::invariants::{chromatic_number, vertex_connectivity};

/// `K_k ∨ (K_k^c ∪ K_{n-2k})` with `a = 0..k`, `b = k..2k`, `c = 2k..n`.
pub fn build_extremal(k: usize, n: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("k = {k} < 2")));
    }
    if n < 2 * k + 1 {
        return Err(Error::InvalidParameters(format!("n = {n} < 2k + 1 = {}", 2 * k + 1)));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let rest = Graph::empty(k).disjoint_union(&Graph::complete(n - 2 * k))?;
    Graph::complete(k).join(&rest)
}

/// The three parts of an extremal graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalPartition {
    /// Join part, `K_k`.
    pub a: VertexSet,
    /// Independent part, `K_k^c`.
    pub b: VertexSet,
    /// Clique part, `K_{n-2k}`.
    pub c_part: VertexSet,
}

impl ExtremalPartition {
    pub fn k(&self) -> usize {
        self.a.len()
    }

    /// Checks that `g` is exactly the extremal graph on this partition.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let (a, b, c) = (self.a, self.b, self.c_part);
        let k = a.len();
        if k < 2 || b.len() != k || c.is_empty() {
            return Err(format!("part sizes |a|={} |b|={} |c|={}", k, b.len(), c.len()));
        }
        if !a.intersection(b).is_empty()
            || !a.intersection(c).is_empty()
            || !b.intersection(c).is_empty()
            || a.union(b).union(c) != g.vertices()
        {
            return Err("parts do not partition the vertex set".into());
        }
        let all = g.vertices();
        if let Some(v) = a.iter().find(|&v| g.neighbors(v) != all.without(v)) {
            return Err(format!("join vertex {v} is not universal"));
        }
        if let Some(v) = b.iter().find(|&v| g.neighbors(v) != a) {
            return Err(format!("independent-part vertex {v} has neighbourhood other than a"));
        }
        if let Some(v) = c.iter().find(|&v| g.neighbors(v) != a.union(c).without(v)) {
            return Err(format!("clique-part vertex {v} has neighbourhood other than a ∪ c"));
        }
        Ok(())
    }
}

impl fmt::Display for ExtremalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}\tb={}\tc={}", self.a, self.b, self.c_part)
    }
}

/// Recognizes `g` as an extremal graph from degrees alone: the join part is
/// the set of universal vertices, and what remains must be `k` isolated
/// vertices plus a clique on `n - 2k >= 1` vertices. When `n = 2k + 1` the
/// remainder is `k + 1` isolated vertices and the highest-index one is put
/// in the clique part.
pub fn recognize_extremal(g: &Graph) -> Option<(usize, ExtremalPartition)> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    let all = g.vertices();
    let a: VertexSet = all.iter().filter(|&v| g.degree(v) == n - 1).collect();
    let k = a.len();
    if k < 2 || n < 2 * k + 1 {
        return None;
    }
    let rest = all.difference(a);
    let isolated: VertexSet = rest.iter().filter(|&v| g.neighbors(v).intersection(rest).is_empty()).collect();
    let (b, c_part) = if n == 2 * k + 1 {
        if isolated != rest {
            return None;
        }
        let last = rest.iter().last().expect("k + 1 >= 3 vertices");
        (rest.without(last), VertexSet::singleton(last))
    } else {
        (isolated, rest.difference(isolated))
    };
    let p = ExtremalPartition { a, b, c_part };
    p.check(g).ok().map(|()| (k, p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisFlag {
    KAtLeastTwo,
    KConnected,
    ChromaticBound,
}

impl fmt::Display for HypothesisFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisFlag::KAtLeastTwo => "k >= 2",
            HypothesisFlag::KConnected => "kappa >= k",
            HypothesisFlag::ChromaticBound => "chi >= n - k",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub n: usize,
    pub k: usize,
    pub kappa: usize,
    pub chi: usize,
    pub k_ge_2: bool,
    pub k_connected_ok: bool,
    pub chi_ok: bool,
}

impl HypothesisReport {
    pub fn holds(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<HypothesisFlag> {
        if !self.k_ge_2 {
            Some(HypothesisFlag::KAtLeastTwo)
        } else if !self.k_connected_ok {
            Some(HypothesisFlag::KConnected)
        } else if !self.chi_ok {
            Some(HypothesisFlag::ChromaticBound)
        } else {
            None
        }
    }
}

pub fn check_hypothesis(g: &Graph, k: usize) -> Result<HypothesisReport> {
    let n = g.order();
    let kappa = vertex_connectivity(g)?;
    let (chi, _) = chromatic_number(g)?;
    Ok(HypothesisReport { n, k, kappa, chi, k_ge_2: k >= 2, k_connected_ok: kappa >= k, chi_ok: chi + k >= n })
}

/// Certifies a hypothesis-satisfying graph: a Hamiltonian cycle when one
/// exists, otherwise the extremal partition, otherwise a counterexample.
pub fn certify(g: &Graph, k: usize) -> Result<Certificate> {
    let report = check_hypothesis(g, k)?;
    if let Some(flag) = report.first_failure() {
        return Err(Error::Hypothesis(flag));
    }
    certify_unchecked(g, k)
}

/// [`certify`] without recomputing the hypothesis.
pub fn certify_unchecked(g: &Graph, k: usize) -> Result<Certificate> {
    if let Some(cycle) = find_hamiltonian_cycle(g)? {
        return Ok(Certificate::Hamiltonian(cycle));
    }
    match recognize_extremal(g) {
        Some((found, partition)) if found == k => Ok(Certificate::Extremal { k, partition }),
        Some((found, _)) => Ok(Certificate::Counterexample {
            k,
            reason: format!("non-Hamiltonian and extremal for k = {found}, not k = {k}"),
        }),
        None => Ok(Certificate::Counterexample {
            k,
            reason: "non-Hamiltonian and not of the form K_k join (K_k^c union K_{n-2k})".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{independence_number, nordhaus_gaddum};

    #[test]
    fn build_examples() {
        let g = build_extremal(2, 5).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g, Graph::complete(2).join(&Graph::empty(3)).unwrap());
        assert_eq!(build_extremal(2, 6).unwrap().edge_count(), 10);
        let g = build_extremal(3, 7).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(chromatic_number(&g).unwrap().0, 4);
        assert_eq!(independence_number(&g).unwrap().0, 4);
        assert_eq!(vertex_connectivity(&g).unwrap(), 3);
        assert!(build_extremal(1, 5).is_err());
        assert!(build_extremal(2, 4).is_err());
        assert!(matches!(build_extremal(2, 65), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn graph_level_examples_on_extremal() {
        let g = build_extremal(2, 5).unwrap();
        assert_eq!(g.min_degree(), Ok(2));
        assert!(g.is_independent([2, 3, 4].iter().collect()));
        let (h, _) = g.induced([2, 3, 4].iter().collect()).unwrap();
        assert_eq!((h.order(), h.edge_count()), (3, 0));
        assert_eq!(independence_number(&g).unwrap().0, 3);
        assert_eq!(chromatic_number(&build_extremal(3, 7).unwrap()).unwrap().0, 4);
    }

    #[test]
    fn recognize_examples() {
        let (k, p) = recognize_extremal(&build_extremal(2, 5).unwrap()).unwrap();
        assert_eq!(k, 2);
        assert_eq!(p.a.to_vec(), vec![0, 1]);
        assert_eq!(p.b.to_vec(), vec![2, 3]);
        assert_eq!(p.c_part.to_vec(), vec![4]);
        assert!(recognize_extremal(&Graph::complete(6)).is_none());
        assert!(recognize_extremal(&Graph::cycle(5)).is_none());
        assert!(recognize_extremal(&Graph::complete(2).join(&Graph::empty(2)).unwrap()).is_none());

        let g = build_extremal(3, 8).unwrap();
        let perm = [5, 2, 7, 0, 6, 1, 3, 4];
        let h = g.relabel(&perm).unwrap();
        let (k, p) = recognize_extremal(&h).unwrap();
        assert_eq!(k, 3);
        assert_eq!(p.a, [0, 1, 2].iter().map(|&v| perm[v]).collect());
        assert_eq!(p.b, [3, 4, 5].iter().map(|&v| perm[v]).collect());
        assert_eq!(p.c_part, [6, 7].iter().map(|&v| perm[v]).collect());
    }

    #[test]
    fn recognize_rejects_near_misses() {
        // Drop one edge inside the clique part.
        let g = build_extremal(2, 7).unwrap();
        let edges: Vec<_> = g.edges().filter(|&e| e != (5, 6)).collect();
        assert!(recognize_extremal(&Graph::with_edges(7, &edges).unwrap()).is_none());
        // Add an edge inside the independent part.
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((2, 3));
        assert!(recognize_extremal(&Graph::with_edges(7, &edges).unwrap()).is_none());
    }

    #[test]
    fn recognize_round_trips_on_grid() {
        for k in 2..=5 {
            for n in 2 * k + 1..=2 * k + 8 {
                let g = build_extremal(k, n).unwrap();
                let (found, p) = recognize_extremal(&g).unwrap();
                assert_eq!(found, k);
                assert_eq!(p.a, VertexSet::full(k));
                assert!(p.check(&g).is_ok());
            }
        }
    }

    #[test]
    fn hypothesis_examples() {
        let r = check_hypothesis(&Graph::complete(5), 2).unwrap();
        assert!(r.holds());
        assert_eq!((r.kappa, r.chi), (4, 5));
        let r = check_hypothesis(&Graph::cycle(6), 2).unwrap();
        assert!(!r.chi_ok);
        assert_eq!(r.first_failure(), Some(HypothesisFlag::ChromaticBound));
        let r = check_hypothesis(&build_extremal(2, 5).unwrap(), 2).unwrap();
        assert!(r.holds());
        assert_eq!((r.kappa, r.chi), (2, 3));
        let r = check_hypothesis(&Graph::path(4), 2).unwrap();
        assert_eq!(r.first_failure(), Some(HypothesisFlag::KConnected));
        let r = check_hypothesis(&Graph::complete(4), 1).unwrap();
        assert_eq!(r.first_failure(), Some(HypothesisFlag::KAtLeastTwo));
        assert_eq!(check_hypothesis(&Graph::empty(0), 2), Err(Error::EmptyGraph));
    }

    #[test]
    fn certify_examples() {
        match certify(&Graph::complete(5), 2).unwrap() {
            Certificate::Hamiltonian(c) => assert_eq!(c.len(), 5),
            other => panic!("{other:?}"),
        }
        for (k, n) in [(2, 5), (3, 9)] {
            let g = build_extremal(k, n).unwrap();
            match certify(&g, k).unwrap() {
                Certificate::Extremal { k: found, partition } => {
                    assert_eq!(found, k);
                    assert!(partition.check(&g).is_ok());
                }
                other => panic!("{other:?}"),
            }
        }
        assert_eq!(certify(&Graph::cycle(6), 2), Err(Error::Hypothesis(HypothesisFlag::ChromaticBound)));
    }

    #[test]
    fn extremal_grid_invariants() {
        for k in 2..=3 {
            for n in 2 * k + 1..=2 * k + 4 {
                let g = build_extremal(k, n).unwrap();
                assert_eq!(chromatic_number(&g).unwrap().0, n - k);
                assert_eq!(independence_number(&g).unwrap().0, k + 1);
                assert_eq!(vertex_connectivity(&g).unwrap(), k);
                assert!(find_hamiltonian_cycle(&g).unwrap().is_none());
                assert!(nordhaus_gaddum(&g).unwrap().slack >= 0);
            }
        }
    }
}
