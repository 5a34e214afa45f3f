use std::fmt;

use super::clique::max_clique;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A vertex colouring with colours `0..colors_used`, every index in use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    colors_used: usize,
}

impl Coloring {
    /// Wraps an assignment, renumbering colours densely by first appearance.
    pub fn from_assignment(assignment: &[usize]) -> Coloring {
        let mut renumber = std::collections::HashMap::new();
        let assignment: Vec<usize> = assignment
            .iter()
            .map(|c| {
                let next = renumber.len();
                *renumber.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { colors_used: renumber.len(), assignment }
    }

    pub fn colors_used(&self) -> usize {
        self.colors_used
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Vertices of each colour class.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::EMPTY; self.colors_used];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].insert(v);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.order() && g.edges().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::graph::set::write_vertex_list(f, self.assignment.iter().copied())
    }
}

/// A proper colouring with at most `t` colours, or `None` when none exists.
///
/// Exact backtracking. The next vertex is the most saturated uncoloured one
/// (ties: most uncoloured neighbours, then lowest index), and a vertex may
/// open colour `c` only when colours `0..c` are already open.
pub fn is_k_colorable(g: &Graph, t: usize) -> Option<Coloring> {
    let n = g.order();
    let mut search = Search { g, t, color: vec![usize::MAX; n], classes: Vec::with_capacity(t) };
    search.solve(g.vertices()).then(|| Coloring::from_assignment(&search.color))
}

/// `(chi, witness)`. The clique number bounds from below, a greedy
/// saturation colouring from above, and exact colourability checks walk
/// down from the greedy bound.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let lower = max_clique(g)?.len();
    let mut best = greedy_coloring(g);
    while best.colors_used > lower {
        match is_k_colorable(g, best.colors_used - 1) {
            Some(c) => best = c,
            None => break,
        }
    }
    Ok((best.colors_used, best))
}

/// DSATUR without backtracking.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<u64> = Vec::new();
    let mut uncoloured = g.vertices();
    while !uncoloured.is_empty() {
        let v = pick(g, &classes, uncoloured);
        let row = g.neighbors(v).bits();
        let c = classes.iter().position(|&cl| cl & row == 0).unwrap_or(classes.len());
        if c == classes.len() {
            classes.push(0);
        }
        classes[c] |= 1 << v;
        color[v] = c;
        uncoloured.remove(v);
    }
    Coloring::from_assignment(&color)
}

fn saturation(classes: &[u64], row: u64) -> usize {
    classes.iter().filter(|&&cl| cl & row != 0).count()
}

fn pick(g: &Graph, classes: &[u64], uncoloured: VertexSet) -> usize {
    uncoloured
        .iter()
        .max_by_key(|&v| {
            let row = g.neighbors(v).bits();
            (saturation(classes, row), (row & uncoloured.bits()).count_ones(), std::cmp::Reverse(v))
        })
        .expect("nonempty")
}

struct Search<'a> {
    g: &'a Graph,
    t: usize,
    color: Vec<usize>,
    classes: Vec<u64>,
}

impl Search<'_> {
    fn solve(&mut self, uncoloured: VertexSet) -> bool {
        if uncoloured.is_empty() {
            return true;
        }
        let v = pick(self.g, &self.classes, uncoloured);
        let row = self.g.neighbors(v).bits();
        let rest = uncoloured.without(v);
        for c in 0..self.classes.len() {
            if self.classes[c] & row == 0 {
                self.classes[c] |= 1 << v;
                self.color[v] = c;
                if self.solve(rest) {
                    return true;
                }
                self.classes[c] &= !(1 << v);
            }
        }
        if self.classes.len() < self.t {
            self.classes.push(1 << v);
            self.color[v] = self.classes.len() - 1;
            if self.solve(rest) {
                return true;
            }
            self.classes.pop();
        }
        self.color[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tries every assignment of `t` colours.
    fn brute_colorable(g: &Graph, t: usize) -> bool {
        let n = g.order();
        if n == 0 {
            return true;
        }
        if t == 0 {
            return false;
        }
        let total = (t as u64).pow(n as u32);
        (0..total).any(|mut code| {
            let mut col = vec![0; n];
            for c in col.iter_mut() {
                *c = (code % t as u64) as usize;
                code /= t as u64;
            }
            g.edges().all(|(u, v)| col[u] != col[v])
        })
    }

    fn brute_chi(g: &Graph) -> usize {
        (1..=g.order()).find(|&t| brute_colorable(g, t)).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(6)).unwrap().0, 6);
        assert_eq!(brute_chi(&Graph::cycle(5)), 3);
        let (chi, w) = chromatic_number(&Graph::cycle(5)).unwrap();
        assert_eq!(chi, 3);
        assert!(w.is_proper(&Graph::cycle(5)));
        assert_eq!(w.colors_used(), 3);
        assert_eq!(chromatic_number(&Graph::petersen()).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap().0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn colorable_examples() {
        assert!(is_k_colorable(&Graph::cycle(4), 2).is_some());
        assert!(is_k_colorable(&Graph::cycle(5), 2).is_none());
        let w = is_k_colorable(&Graph::petersen(), 3).unwrap();
        assert!(w.is_proper(&Graph::petersen()));
        assert!(w.colors_used() <= 3);
        assert!(is_k_colorable(&Graph::empty(0), 0).is_some());
        assert!(is_k_colorable(&Graph::empty(1), 0).is_none());
    }

    #[test]
    fn from_assignment_renumbers() {
        let c = Coloring::from_assignment(&[5, 2, 5, 9]);
        assert_eq!(c.assignment(), &[0, 1, 0, 2]);
        assert_eq!(c.colors_used(), 3);
        assert_eq!(c.classes()[0].to_vec(), vec![0, 2]);
    }

    #[test]
    fn matches_brute_force_on_order_five() {
        for g in crate::graph::enumerate_labeled(5).unwrap() {
            let (chi, w) = chromatic_number(&g).unwrap();
            assert!(w.is_proper(&g));
            assert_eq!(w.colors_used(), chi);
            assert_eq!(chi, brute_chi(&g), "{g:?}");
        }
    }
}
