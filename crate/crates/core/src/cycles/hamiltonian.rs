use super::Cycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Orders up to this use the subset dynamic program (2^(n-1) words).
pub const HAMILTONIAN_DP_MAX_ORDER: usize = 24;

/// A Hamiltonian cycle, or `None` when the graph has none. Exact at every
/// order: subset DP up to [`HAMILTONIAN_DP_MAX_ORDER`], pruned backtracking
/// beyond.
pub fn find_hamiltonian_cycle(g: &Graph) -> Result<Option<Cycle>> {
    let n = g.order();
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    if g.min_degree()? < 2 || !g.is_connected() {
        return Ok(None);
    }
    let seq = if n <= HAMILTONIAN_DP_MAX_ORDER {
        subset_dp(g)
    } else if !crate::invariants::is_k_connected(g, 2) {
        // A cut vertex rules out a spanning cycle.
        None
    } else {
        backtrack(g)
    };
    Ok(seq.map(|s| Cycle::new(g, s).expect("search yields a valid cycle").normalized()))
}

/// Paths start at vertex 0. `ends[mask]` holds, as bit `i`, every vertex
/// `i + 1` at which a path from 0 through exactly the vertices `mask`
/// (shifted down by one) can end.
fn subset_dp(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let m = n - 1;
    let rows: Vec<u32> = (1..n).map(|v| (g.neighbors(v).bits() >> 1) as u32).collect();
    let start = (g.neighbors(0).bits() >> 1) as u32;
    let full = (1u32 << m) - 1;
    let mut ends = vec![0u32; 1 << m];
    for i in 0..m {
        if (start >> i) & 1 == 1 {
            ends[1 << i] = 1 << i;
        }
    }
    for mask in 1..=full {
        let mut e = ends[mask as usize];
        while e != 0 {
            let i = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = rows[i] & !mask;
            while ext != 0 {
                let j = ext.trailing_zeros();
                ext &= ext - 1;
                ends[(mask | 1 << j) as usize] |= 1 << j;
            }
        }
    }
    let closing = ends[full as usize] & start;
    if closing == 0 {
        return None;
    }
    let mut last = closing.trailing_zeros() as usize;
    let mut mask = full;
    let mut rev = vec![last + 1];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << last);
        let cand = ends[prev_mask as usize] & rows[last];
        let prev = cand.trailing_zeros() as usize;
        rev.push(prev + 1);
        mask = prev_mask;
        last = prev;
    }
    rev.push(0);
    rev.reverse();
    Some(rev)
}

fn backtrack(g: &Graph) -> Option<Vec<usize>> {
    let mut path = vec![0];
    let rest = g.vertices().without(0);
    extend(g, &mut path, rest).then_some(path)
}

fn extend(g: &Graph, path: &mut Vec<usize>, rest: VertexSet) -> bool {
    let end = *path.last().unwrap();
    if rest.is_empty() {
        return g.has_edge(end, 0);
    }
    // Every unvisited vertex needs two usable neighbours among the unvisited
    // vertices and the two path ends, and the unvisited part together with
    // the current end must stay connected.
    let open = rest.with(end).with(0);
    if rest.iter().any(|v| g.neighbors(v).intersection(open).len() < 2) {
        return false;
    }
    if !g.is_connected_within(rest.with(end)) {
        return false;
    }
    for v in g.neighbors(end).intersection(rest) {
        path.push(v);
        if extend(g, path, rest.without(v)) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tries every permutation fixing vertex 0 first.
    fn brute_hamiltonian(g: &Graph) -> bool {
        fn rec(g: &Graph, path: &mut Vec<usize>, used: VertexSet) -> bool {
            if path.len() == g.order() {
                return g.has_edge(*path.last().unwrap(), path[0]);
            }
            for v in 0..g.order() {
                if !used.contains(v) && g.has_edge(*path.last().unwrap(), v) {
                    path.push(v);
                    if rec(g, path, used.with(v)) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        rec(g, &mut vec![0], VertexSet::singleton(0))
    }

    #[test]
    fn examples() {
        let c6 = find_hamiltonian_cycle(&Graph::cycle(6)).unwrap().unwrap();
        assert_eq!(c6.as_slice(), &[0, 1, 2, 3, 4, 5]);
        assert!(find_hamiltonian_cycle(&Graph::petersen()).unwrap().is_none());
        assert!(!brute_hamiltonian(&Graph::petersen()));
        let k2e3 = Graph::complete(2).join(&Graph::empty(3)).unwrap();
        assert!(find_hamiltonian_cycle(&k2e3).unwrap().is_none());
        assert!(!brute_hamiltonian(&k2e3));
        assert_eq!(find_hamiltonian_cycle(&Graph::complete(2)), Err(Error::OrderTooSmall { n: 2, min: 3 }));
        assert!(find_hamiltonian_cycle(&Graph::complete(3)).unwrap().is_some());
    }

    #[test]
    fn dp_agrees_with_brute_force_through_order_six() {
        for n in 3..=6 {
            for g in crate::graph::enumerate_labeled(n).unwrap() {
                let found = find_hamiltonian_cycle(&g).unwrap();
                if let Some(c) = &found {
                    assert_eq!(c.len(), n);
                    assert!(c.is_valid_in(&g));
                }
                assert_eq!(found.is_some(), brute_hamiltonian(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn backtracking_agrees_with_dp() {
        for g in crate::graph::enumerate_labeled(6).unwrap().step_by(7) {
            if g.min_degree().unwrap() >= 2 && g.is_connected() {
                assert_eq!(backtrack(&g).is_some(), subset_dp(&g).is_some(), "{g:?}");
            }
        }
        assert!(backtrack(&Graph::petersen()).is_none());
    }

    #[test]
    fn large_orders_use_backtracking() {
        let g = Graph::cycle(30);
        let c = find_hamiltonian_cycle(&g).unwrap().unwrap();
        assert_eq!(c.len(), 30);
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for u in 0..13 {
            for v in u + 1..13 {
                edges.push((u, v));
                edges.push((u + 12, v + 12));
            }
        }
        let blocks = Graph::with_edges(25, &edges).unwrap();
        assert!(find_hamiltonian_cycle(&blocks).unwrap().is_none());
        let wheel = Graph::complete(1).join(&Graph::cycle(27)).unwrap();
        assert_eq!(find_hamiltonian_cycle(&wheel).unwrap().unwrap().len(), 28);
    }
}
