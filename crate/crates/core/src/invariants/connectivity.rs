//! Vertex connectivity and Menger fans via unit-capacity flow on the
//! vertex-split network: vertex `v` becomes `in(v) = 2v -> out(v) = 2v+1`
//! with capacity one, and each edge `uv` becomes `out(u) -> in(v)` and
//! `out(v) -> in(u)`.

use std::collections::VecDeque;
use std::fmt;

use crate::cycles::Cycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Dense residual network. Small orders only; `cap` is `nodes * nodes`.
struct Network {
    nodes: usize,
    cap: Vec<u32>,
    flow: Vec<i32>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { nodes, cap: vec![0; nodes * nodes], flow: vec![0; nodes * nodes] }
    }

    fn add(&mut self, u: usize, v: usize, c: u32) {
        self.cap[u * self.nodes + v] += c;
    }

    fn residual(&self, u: usize, v: usize) -> i64 {
        self.cap[u * self.nodes + v] as i64 - self.flow[u * self.nodes + v] as i64
    }

    fn flow_on(&self, u: usize, v: usize) -> i32 {
        self.flow[u * self.nodes + v]
    }

    /// Breadth-first augmenting paths of one unit each, scanning neighbours
    /// in increasing node order. Stops once `limit` units are routed.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut total = 0;
        let mut parent = vec![usize::MAX; self.nodes];
        while total < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for (v, p) in parent.iter_mut().enumerate() {
                    if *p == usize::MAX && self.residual(u, v) > 0 {
                        *p = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.flow[u * self.nodes + v] += 1;
                self.flow[v * self.nodes + u] -= 1;
                v = u;
            }
            total += 1;
        }
        total
    }
}

const fn vin(v: usize) -> usize {
    2 * v
}

const fn vout(v: usize) -> usize {
    2 * v + 1
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s != t`, capped at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    let mut net = Network::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { n as u32 } else { 1 };
        net.add(vin(v), vout(v), c);
    }
    for (u, v) in g.edges() {
        net.add(vout(u), vin(v), 1);
        net.add(vout(v), vin(u), 1);
    }
    net.max_flow(vout(s), vin(t), limit)
}

/// `kappa(g)`; complete graphs have connectivity `n - 1`.
///
/// Any minimum separator misses one of the first `kappa + 1` vertices; the
/// lowest such vertex `v_i` has every vertex of another component above it,
/// so pairs `(v_i, v_j)` with `i <= kappa < j`, non-adjacent, suffice.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        let non_adjacent = g.vertices().difference(g.neighbors(i)).without(i);
        for j in non_adjacent.iter().filter(|&j| j > i) {
            best = best.min(local_connectivity(g, i, j, best));
            if best == 0 {
                return Ok(0);
            }
        }
        i += 1;
    }
    Ok(best)
}

/// Whether `kappa(g) >= k`, exiting early.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return k == 0;
    }
    if k == 0 {
        return true;
    }
    if k > n - 1 || g.min_degree().unwrap_or(0) < k || !g.is_connected() {
        return false;
    }
    vertex_connectivity(g).map(|c| c >= k).unwrap_or(false)
}

/// A hub with paths to distinct attachment vertices on a cycle, pairwise
/// sharing only the hub. `paths[i]` runs from the hub to `attachments[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    hub: usize,
    paths: Vec<Vec<usize>>,
}

impl PathSystem {
    /// Wraps raw paths without checking them; see [`PathSystem::validate`].
    pub fn from_paths(hub: usize, paths: Vec<Vec<usize>>) -> PathSystem {
        PathSystem { hub, paths }
    }

    pub fn hub(&self) -> usize {
        self.hub
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn path(&self, i: usize) -> &[usize] {
        &self.paths[i]
    }

    /// Interior of path `i`, hub side first.
    pub fn interior(&self, i: usize) -> &[usize] {
        let p = &self.paths[i];
        if p.len() < 2 {
            &[]
        } else {
            &p[1..p.len() - 1]
        }
    }

    pub fn attachment(&self, i: usize) -> usize {
        *self.paths[i].last().expect("paths are nonempty")
    }

    pub fn attachments(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.attachment(i)).collect()
    }

    /// The first `k` paths.
    pub fn truncated(&self, k: usize) -> PathSystem {
        PathSystem { hub: self.hub, paths: self.paths.iter().take(k).cloned().collect() }
    }

    /// Cyclic rotation: path `i` becomes path `i - shift`.
    pub fn rotated(&self, shift: usize) -> PathSystem {
        let mut paths = self.paths.clone();
        if !paths.is_empty() {
            let len = paths.len();
            paths.rotate_left(shift % len);
        }
        PathSystem { hub: self.hub, paths }
    }

    /// Checks the fan contract against `g` and `c`.
    pub fn validate(&self, g: &Graph, c: &Cycle) -> std::result::Result<(), String> {
        let mut used = VertexSet::EMPTY;
        let mut ends = VertexSet::EMPTY;
        if c.contains(self.hub) {
            return Err(format!("hub {} lies on the cycle", self.hub));
        }
        for (i, p) in self.paths.iter().enumerate() {
            if p.len() < 2 || p[0] != self.hub {
                return Err(format!("path {i} does not start at the hub"));
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(format!("path {i} uses a non-edge"));
            }
            let (&end, body) = p[1..].split_last().expect("length checked");
            if !c.contains(end) {
                return Err(format!("path {i} ends off the cycle"));
            }
            if body.iter().any(|&v| c.contains(v)) {
                return Err(format!("path {i} meets the cycle before its end"));
            }
            for &v in &p[1..] {
                if used.contains(v) || v == self.hub {
                    return Err(format!("path {i} reuses vertex {v}"));
                }
                used.insert(v);
            }
            ends.insert(end);
        }
        let pos: Vec<usize> = self.attachments().iter().map(|&u| c.position(u).unwrap()).collect();
        if let Some(&first) = pos.first() {
            let rel: Vec<usize> = pos.iter().map(|&p| (p + c.len() - first) % c.len()).collect();
            if rel.windows(2).any(|w| w[0] >= w[1]) {
                return Err("attachments are not in cycle order".into());
            }
        }
        Ok(())
    }
}

impl fmt::Display for PathSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            crate::graph::set::write_vertex_list(f, p.iter().copied())?;
        }
        Ok(())
    }
}

/// All the internally disjoint paths a maximum flow routes from `hub` to
/// `V(c)`, each touching the cycle only at its final vertex. Attachments
/// are listed in the cycle's orientation starting from the lowest-index
/// attachment. Fails when fewer than `k` paths exist.
pub fn menger_fan(g: &Graph, hub: usize, c: &Cycle, k: usize) -> Result<PathSystem> {
    g.check_vertex(hub)?;
    if let Some(v) = c.iter().find(|&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
    }
    if c.contains(hub) {
        return Err(Error::OnCycle(hub));
    }
    let n = g.order();
    let sink = 2 * n;
    let mut net = Network::new(2 * n + 1);
    for v in 0..n {
        if c.contains(v) {
            net.add(vin(v), sink, 1);
        } else {
            let cap = if v == hub { n as u32 } else { 1 };
            net.add(vin(v), vout(v), cap);
        }
    }
    for (u, v) in g.edges() {
        if !c.contains(u) {
            net.add(vout(u), vin(v), 1);
        }
        if !c.contains(v) {
            net.add(vout(v), vin(u), 1);
        }
    }
    let found = net.max_flow(vout(hub), sink, usize::MAX);
    if found < k {
        return Err(Error::InsufficientPaths { found, required: k });
    }

    let mut paths = Vec::with_capacity(found);
    for first in 0..n {
        if net.flow_on(vout(hub), vin(first)) <= 0 {
            continue;
        }
        let mut path = vec![hub, first];
        let mut v = first;
        while !c.contains(v) {
            v = (0..n).find(|&w| net.flow_on(vout(v), vin(w)) > 0).expect("flow is conserved at interior vertices");
            path.push(v);
        }
        paths.push(path);
    }
    debug_assert_eq!(paths.len(), found);

    let lowest = paths.iter().map(|p| *p.last().unwrap()).min().expect("found >= 1");
    let base = c.position(lowest).expect("attachment on cycle");
    paths.sort_by_key(|p| (c.position(*p.last().unwrap()).unwrap() + c.len() - base) % c.len());
    Ok(PathSystem { hub, paths })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_labeled;

    /// Smallest vertex set whose removal disconnects `g` or leaves one vertex.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.order();
        let mut best = n - 1;
        for bits in 0u64..1 << n {
            let cut = VertexSet::from_bits(bits);
            let rest = g.vertices().difference(cut);
            if rest.len() >= 2 && !g.is_connected_within(rest) {
                best = best.min(cut.len());
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)), Ok(4));
        assert_eq!(vertex_connectivity(&Graph::path(3)), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(3, 3)), Ok(3));
        assert_eq!(brute_connectivity(&Graph::complete_bipartite(3, 3)), 3);
        assert_eq!(vertex_connectivity(&Graph::petersen()), Ok(3));
        assert_eq!(vertex_connectivity(&Graph::empty(1)), Ok(0));
        assert_eq!(vertex_connectivity(&Graph::empty(3)), Ok(0));
        assert_eq!(vertex_connectivity(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn matches_brute_force_on_order_five() {
        for g in enumerate_labeled(5).unwrap() {
            let kappa = vertex_connectivity(&g).unwrap();
            assert_eq!(kappa, brute_connectivity(&g), "{g:?}");
            for k in 0..=5 {
                assert_eq!(is_k_connected(&g, k), kappa >= k);
            }
        }
    }

    #[test]
    fn fan_on_complete_graph() {
        let g = Graph::complete(4);
        let c = Cycle::new(&g, vec![0, 1, 2]).unwrap();
        let fan = menger_fan(&g, 3, &c, 2).unwrap();
        assert_eq!(fan.paths(), &[vec![3, 0], vec![3, 1], vec![3, 2]]);
        assert!(fan.validate(&g, &c).is_ok());
    }

    #[test]
    fn fan_orders_attachments_along_orientation() {
        let g = Graph::complete(5);
        let c = Cycle::new(&g, vec![3, 2, 1, 0]).unwrap();
        let fan = menger_fan(&g, 4, &c, 2).unwrap();
        assert_eq!(fan.attachments(), vec![0, 3, 2, 1]);
        assert!(fan.validate(&g, &c).is_ok());
    }

    #[test]
    fn fan_errors() {
        let g = Graph::complete(4);
        let c = Cycle::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(menger_fan(&g, 1, &c, 2), Err(Error::OnCycle(1)));
        let p = Graph::with_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let c = Cycle::new(&p, vec![0, 1, 2]).unwrap();
        assert_eq!(menger_fan(&p, 3, &c, 2), Err(Error::InsufficientPaths { found: 1, required: 2 }));
    }

    #[test]
    fn fan_paths_stop_at_first_cycle_vertex() {
        // Hub 5 reaches the cycle 0-1-2-3 through 4, which also touches 0 and 1.
        let g = Graph::with_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 4), (5, 2)]).unwrap();
        let c = Cycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        let fan = menger_fan(&g, 5, &c, 2).unwrap();
        assert_eq!(fan.len(), 2);
        assert!(fan.validate(&g, &c).is_ok());
        assert_eq!(fan.paths(), &[vec![5, 4, 0], vec![5, 2]]);
    }
}
