use std::collections::HashSet;

use super::Cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`longest_cycle`].
pub const LONGEST_CYCLE_MAX_ORDER: usize = 16;

/// A maximum-length cycle. Among all longest cycles, returns the one whose
/// normalized sequence (smallest vertex first, smaller neighbour second) is
/// lexicographically least.
pub fn longest_cycle(g: &Graph) -> Result<Cycle> {
    let n = g.order();
    if n > LONGEST_CYCLE_MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: LONGEST_CYCLE_MAX_ORDER });
    }
    let len = longest_length(g).ok_or(Error::Acyclic)?;
    for s in 0..n {
        if n - s < len {
            break;
        }
        if let Some(seq) = least_cycle_from(g, s, len) {
            return Ok(Cycle::new(g, seq).expect("search yields a valid cycle"));
        }
    }
    unreachable!("a cycle of length {len} was counted but not rebuilt")
}

/// Circumference via a subset DP per smallest vertex `s`: paths start at
/// `s` and use only vertices above it.
fn longest_length(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = 0;
    for s in 0..n {
        let m = n - s - 1;
        if m < best || m < 2 {
            break;
        }
        let shift = s + 1;
        let rows: Vec<u32> = (shift..n).map(|v| (g.neighbors(v).bits() >> shift) as u32).collect();
        let start = (g.neighbors(s).bits() >> shift) as u32;
        let mut ends = vec![0u32; 1 << m];
        for i in 0..m {
            if (start >> i) & 1 == 1 {
                ends[1 << i] = 1 << i;
            }
        }
        for mask in 1u32..1 << m {
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            if size >= 2 && e & start != 0 {
                best = best.max(size + 1);
            }
            let mut it = e;
            while it != 0 {
                let i = it.trailing_zeros() as usize;
                it &= it - 1;
                let mut ext = rows[i] & !mask;
                while ext != 0 {
                    let j = ext.trailing_zeros();
                    ext &= ext - 1;
                    ends[(mask | 1 << j) as usize] |= 1 << j;
                }
            }
        }
    }
    (best >= 3).then_some(best)
}

/// Lexicographically least cycle of exactly `len` vertices whose smallest
/// vertex is `s` and whose second vertex is below its last.
fn least_cycle_from(g: &Graph, s: usize, len: usize) -> Option<Vec<usize>> {
    let allowed = g.vertices().bits() & !((2u64 << s) - 1);
    let mut path = vec![s];
    let mut dead = HashSet::new();
    for first in crate::graph::VertexSet::from_bits(g.neighbors(s).bits() & allowed) {
        dead.clear();
        path.push(first);
        if search(g, s, len, allowed, &mut path, &mut dead) {
            return Some(path);
        }
        path.pop();
    }
    None
}

/// Depth-first in increasing vertex order. `dead` memoizes `(visited, end)`
/// states with no completion under the current second vertex.
fn search(
    g: &Graph,
    s: usize,
    len: usize,
    allowed: u64,
    path: &mut Vec<usize>,
    dead: &mut HashSet<(u64, usize)>,
) -> bool {
    let end = *path.last().unwrap();
    if path.len() == len {
        return g.has_edge(end, s) && path[1] < end;
    }
    let visited: u64 = path.iter().fold(0, |acc, &v| acc | 1 << v);
    if dead.contains(&(visited, end)) {
        return false;
    }
    let next = g.neighbors(end).bits() & allowed & !visited;
    for v in crate::graph::VertexSet::from_bits(next) {
        path.push(v);
        if search(g, s, len, allowed, path, dead) {
            return true;
        }
        path.pop();
    }
    dead.insert((visited, end));
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Enumerates every vertex sequence starting at its smallest vertex.
    fn brute_circumference(g: &Graph) -> Option<usize> {
        fn rec(g: &Graph, path: &mut Vec<usize>, best: &mut usize) {
            let end = *path.last().unwrap();
            if path.len() >= 3 && g.has_edge(end, path[0]) {
                *best = (*best).max(path.len());
            }
            for v in path[0] + 1..g.order() {
                if !path.contains(&v) && g.has_edge(end, v) {
                    path.push(v);
                    rec(g, path, best);
                    path.pop();
                }
            }
        }
        let mut best = 0;
        for s in 0..g.order() {
            rec(g, &mut vec![s], &mut best);
        }
        (best >= 3).then_some(best)
    }

    fn extremal(k: usize, n: usize) -> Graph {
        Graph::complete(k).join(&Graph::empty(k).disjoint_union(&Graph::complete(n - 2 * k)).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 3));
        let c7 = Graph::with_edges(7, &edges).unwrap();
        assert_eq!(longest_cycle(&c7).unwrap().len(), 7);
        assert_eq!(longest_cycle(&extremal(2, 5)).unwrap().len(), 4);
        assert_eq!(brute_circumference(&extremal(2, 5)), Some(4));
        assert_eq!(longest_cycle(&extremal(2, 6)).unwrap().len(), 5);
        assert_eq!(brute_circumference(&extremal(2, 6)), Some(5));
        assert_eq!(longest_cycle(&Graph::path(5)), Err(Error::Acyclic));
        assert!(matches!(longest_cycle(&Graph::cycle(17)), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn tie_break_is_lexicographically_least() {
        let c = longest_cycle(&Graph::complete(4)).unwrap();
        assert_eq!(c.as_slice(), &[0, 1, 2, 3]);
        // Longest cycles of K_2 join 3K_1 use both join vertices and two of
        // the three independent ones.
        let c = longest_cycle(&extremal(2, 5)).unwrap();
        assert_eq!(c.as_slice(), &[0, 2, 1, 3]);
        let g = Graph::petersen();
        let c = longest_cycle(&g).unwrap();
        assert_eq!(c.len(), 9);
        assert_eq!(c, c.normalized());
    }

    #[test]
    fn matches_brute_force_through_order_six() {
        for n in 3..=6 {
            for g in crate::graph::enumerate_labeled(n).unwrap() {
                match longest_cycle(&g) {
                    Ok(c) => {
                        assert!(c.is_valid_in(&g));
                        assert_eq!(c, c.normalized());
                        assert_eq!(Some(c.len()), brute_circumference(&g), "{g:?}");
                    }
                    Err(e) => {
                        assert_eq!(e, Error::Acyclic);
                        assert_eq!(brute_circumference(&g), None);
                    }
                }
            }
        }
    }
}
