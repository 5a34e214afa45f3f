use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A maximum clique, found by branch and bound with a greedy colouring bound
/// on the candidate set.
pub fn max_clique(g: &Graph) -> Result<VertexSet> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = VertexSet::singleton(0);
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    Ok(best)
}

/// `(alpha, witness)`: a maximum clique of the complement.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let s = max_clique(&g.complement())?;
    Ok((s.len(), s))
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    max_clique(g).map(VertexSet::len)
}

fn expand(g: &Graph, current: VertexSet, mut candidates: VertexSet, best: &mut VertexSet) {
    let (order, bounds) = colour_sort(g, candidates);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        let grown = current.with(v);
        let next = candidates.intersection(g.neighbors(v));
        if next.is_empty() {
            if grown.len() > best.len() {
                *best = grown;
            }
        } else {
            expand(g, grown, next, best);
        }
        candidates.remove(v);
    }
}

/// Greedy sequential colouring of `p`. Vertices come out grouped by colour
/// class; `bounds[i]` is the class number (1-based) of `order[i]`, an upper
/// bound on the clique size within `order[..=i]`.
fn colour_sort(g: &Graph, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncoloured = p;
    let mut class = 0;
    while !uncoloured.is_empty() {
        class += 1;
        let mut available = uncoloured;
        while let Some(v) = available.first() {
            available = available.difference(g.neighbors(v)).without(v);
            uncoloured.remove(v);
            order.push(v);
            bounds.push(class);
        }
    }
    (order, bounds)
}
