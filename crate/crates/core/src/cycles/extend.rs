//! Rewirings that turn a cycle `C` plus a fan from an off-cycle hub `x0`
//! into a strictly longer cycle. Each rule assembles its candidate from arcs
//! of `C` and fan paths and returns it only if it is a valid cycle of the
//! host graph and longer than `C`; otherwise the rule reports `None`.

use super::{segments, Cycle, Direction};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::PathSystem;

fn accept(g: &Graph, c: &Cycle, seq: Vec<usize>) -> Option<Cycle> {
    Cycle::new(g, seq).ok().filter(|out| out.len() > c.len())
}

fn check_attachments(c: &Cycle, fan: &PathSystem) -> Result<Vec<usize>> {
    let ends = fan.attachments();
    match ends.iter().find(|&&u| !c.contains(u)) {
        Some(&u) => Err(Error::NotOnCycle(u)),
        None => Ok(ends),
    }
}

/// Path `i` traversed from its attachment back to the hub, hub excluded.
fn back_along(fan: &PathSystem, i: usize) -> impl Iterator<Item = usize> + '_ {
    fan.interior(i).iter().rev().copied()
}

/// Off-cycle neighbour `z` of the hub: if `z` sees attachment `u_j`, the
/// cycle `x0 z C→[u_j, u_{j-1}] P_{j-1} x0` (or its mirror through
/// `C←[u_j, u_{j+1}]` and `P_{j+1}`) absorbs `x0` and `z` while dropping
/// only the arc strictly between the two attachments.
pub fn extend_offcycle(g: &Graph, c: &Cycle, fan: &PathSystem, z: usize) -> Result<Option<Cycle>> {
    if c.contains(z) {
        return Err(Error::OnCycle(z));
    }
    let ends = check_attachments(c, fan)?;
    let s = ends.len();
    if s < 2 || z == fan.hub() || !g.has_edge(z, fan.hub()) {
        return Ok(None);
    }
    // u_2 first, matching the order the argument considers them in.
    for j in (1..s).chain(std::iter::once(0)) {
        if !g.has_edge(z, ends[j]) {
            continue;
        }
        for (other, dir) in [((j + s - 1) % s, Direction::Forward), ((j + 1) % s, Direction::Backward)] {
            let mut seq = vec![fan.hub(), z];
            seq.extend(c.arc(ends[j], ends[other], dir)?);
            seq.extend(back_along(fan, other));
            if let Some(out) = accept(g, c, seq) {
                return Ok(Some(out));
            }
        }
    }
    Ok(None)
}

/// Two attachments `u_a`, `u_b` whose predecessors are adjacent and lie in
/// the interior of their segments (neither an attachment nor a successor
/// of one): `x0 P_a C→[u_a, u_b^-] C←[u_a^-, u_b] P_b x0` covers all of
/// `C` plus `x0`.
pub fn extend_predecessor_chord(g: &Graph, c: &Cycle, fan: &PathSystem) -> Result<Option<Cycle>> {
    let ends = check_attachments(c, fan)?;
    let mut reserved = crate::graph::VertexSet::EMPTY;
    for &u in &ends {
        reserved.insert(u);
        reserved.insert(c.succ(u)?);
    }
    let preds = ends.iter().map(|&u| c.pred(u)).collect::<Result<Vec<_>>>()?;
    for a in 0..ends.len() {
        for b in a + 1..ends.len() {
            let (pa, pb) = (preds[a], preds[b]);
            if reserved.contains(pa) || reserved.contains(pb) || pa == pb || !g.has_edge(pa, pb) {
                continue;
            }
            let mut seq = vec![fan.hub()];
            seq.extend_from_slice(fan.interior(a));
            seq.extend(c.arc(ends[a], pb, Direction::Forward)?);
            seq.extend(c.arc(pa, ends[b], Direction::Backward)?);
            seq.extend(back_along(fan, b));
            if let Some(out) = accept(g, c, seq) {
                return Ok(Some(out));
            }
        }
    }
    Ok(None)
}

/// The single-long-segment rotations. With the long segment renumbered to
/// `T_1 = y_1 .. y_r u_2` and `j = y_index` in `2..=r`, given the edge
/// `y_j u_1^+`:
///
/// - `x0 y_{j-1}` gives `x0 C←[y_{j-1}, u_1^+] C→[y_j, u_1] P_1 x0`;
/// - `u_l^+ y_{j-1}` for some `l >= 2` gives
///   `x0 P_l C←[u_l, y_j] C→[u_1^+, y_{j-1}] C→[u_l^+, u_1] P_1 x0`.
///
/// All attachments of the fan are used. `y_index` is one-based.
pub fn extend_case1_rotation(g: &Graph, c: &Cycle, fan: &PathSystem, y_index: usize) -> Result<Option<Cycle>> {
    check_attachments(c, fan)?;
    let k = fan.len();
    let dec = segments(c, fan, k)?;
    let big = dec.big_segment_indices();
    if big.len() != 1 {
        return Err(Error::CasePrecondition(format!("exactly one segment of size >= 2 required, found {}", big.len())));
    }
    let shift = big[0];
    let dec = dec.rotated(shift);
    let fan = fan.rotated(shift);
    let ys = &dec.segments[0][..dec.segments[0].len() - 1];
    let r = ys.len();
    if !(2..=r).contains(&y_index) {
        return Err(Error::InvalidParameters(format!("y_index {y_index} outside 2..={r}")));
    }
    let (y_prev, y_cur) = (ys[y_index - 2], ys[y_index - 1]);
    let hub = fan.hub();
    let u1 = dec.attachments[0];
    let u1_plus = dec.successors[0];

    if g.has_edge(hub, y_prev) {
        let mut seq = vec![hub];
        seq.extend(c.arc(y_prev, u1_plus, Direction::Backward)?);
        seq.extend(c.arc(y_cur, u1, Direction::Forward)?);
        seq.extend(back_along(&fan, 0));
        if let Some(out) = accept(g, c, seq) {
            return Ok(Some(out));
        }
    }
    for l in 1..k {
        let ul_plus = dec.successors[l];
        if !g.has_edge(ul_plus, y_prev) {
            continue;
        }
        let mut seq = vec![hub];
        seq.extend_from_slice(fan.interior(l));
        seq.extend(c.arc(dec.attachments[l], y_cur, Direction::Backward)?);
        seq.extend(c.arc(u1_plus, y_prev, Direction::Forward)?);
        seq.extend(c.arc(ul_plus, u1, Direction::Forward)?);
        seq.extend(back_along(&fan, 0));
        if let Some(out) = accept(g, c, seq) {
            return Ok(Some(out));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::longest_cycle;
    use crate::invariants::menger_fan;

    fn extremal(k: usize, n: usize) -> Graph {
        Graph::complete(k).join(&Graph::empty(k).disjoint_union(&Graph::complete(n - 2 * k)).unwrap()).unwrap()
    }

    fn star_fan(hub: usize, ends: &[usize]) -> PathSystem {
        PathSystem::from_paths(hub, ends.iter().map(|&u| vec![hub, u]).collect())
    }

    /// Brute-force check that `out` is a cycle of `g` longer than `c`.
    fn assert_longer(g: &Graph, c: &Cycle, out: &Cycle) {
        let seq = out.as_slice();
        let mut seen = std::collections::HashSet::new();
        assert!(seq.iter().all(|v| seen.insert(*v)), "repeat in {seq:?}");
        for i in 0..seq.len() {
            assert!(g.has_edge(seq[i], seq[(i + 1) % seq.len()]), "{seq:?}");
        }
        assert!(seq.len() > c.len());
    }

    #[test]
    fn offcycle_fires_on_witness_graph() {
        // C = 0..5, hub 5 attached to 0 and 2, z = 6 adjacent to 5 and 2.
        let g =
            Graph::with_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2), (6, 5), (6, 2)]).unwrap();
        let c = Cycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let fan = menger_fan(&g, 5, &c, 2).unwrap();
        assert_eq!(fan.attachments(), vec![0, 2]);
        let out = extend_offcycle(&g, &c, &fan, 6).unwrap().unwrap();
        assert_eq!(out.as_slice(), &[5, 6, 2, 3, 4, 0]);
        assert_longer(&g, &c, &out);
        // Hub on consecutive cycle vertices: nothing is dropped.
        let g7 =
            Graph::with_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (6, 5), (6, 1)]).unwrap();
        let fan = menger_fan(&g7, 5, &c, 2).unwrap();
        let out = extend_offcycle(&g7, &c, &fan, 6).unwrap().unwrap();
        assert_eq!(out.as_slice(), &[5, 6, 1, 2, 3, 4, 0]);
        assert_longer(&g7, &c, &out);
    }

    #[test]
    fn offcycle_absent_on_extremal() {
        // K_2 join (2K_1 ∪ K_2): the longest cycle misses one independent vertex.
        let g = extremal(2, 6);
        let c = longest_cycle(&g).unwrap();
        assert_eq!(c.len(), 5);
        let x0 = g.vertices().difference(c.vertices()).first().unwrap();
        assert!((2..4).contains(&x0));
        let fan = menger_fan(&g, x0, &c, 2).unwrap();
        let off = g.vertices().difference(c.vertices()).without(x0);
        assert!(off.is_empty());
        for z in off {
            assert_eq!(extend_offcycle(&g, &c, &fan, z).unwrap(), None);
        }
        assert_eq!(extend_offcycle(&g, &c, &fan, 0), Err(Error::OnCycle(0)));
    }

    #[test]
    fn predecessor_chord_fires_on_witness_graph() {
        // C = 0..7, hub 7 attached to 0 and 3; T_1 = (2,3), T_2 = (5,6,0);
        // u_1^- = 6 and u_2^- = 2 are joined by a chord.
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend([(7, 0), (7, 3), (6, 2)]);
        let g = Graph::with_edges(8, &edges).unwrap();
        let c = Cycle::new(&g, (0..7).collect()).unwrap();
        let fan = star_fan(7, &[0, 3]);
        let out = extend_predecessor_chord(&g, &c, &fan).unwrap().unwrap();
        assert_eq!(out.len(), 8);
        assert_longer(&g, &c, &out);
    }

    #[test]
    fn predecessor_chord_absent_in_case0_shape() {
        // C = u1 u1+ u2 u2+ with predecessors equal to successors.
        let g = extremal(2, 5);
        let c = Cycle::new(&g, vec![0, 2, 1, 3]).unwrap();
        let fan = menger_fan(&g, 4, &c, 2).unwrap();
        assert_eq!(extend_predecessor_chord(&g, &c, &fan).unwrap(), None);
    }

    #[test]
    fn case1_rotation_absent_on_extremal() {
        let g = extremal(2, 7);
        let c = longest_cycle(&g).unwrap();
        let x0 = g.vertices().difference(c.vertices()).first().unwrap();
        let fan = menger_fan(&g, x0, &c, 2).unwrap();
        let dec = segments(&c, &fan, 2).unwrap();
        assert_eq!(dec.big_segment_indices().len(), 1);
        let r = dec.segments[dec.big_segment_indices()[0]].len() - 1;
        assert_eq!(r, 2);
        for j in 2..=r {
            assert_eq!(extend_case1_rotation(&g, &c, &fan, j).unwrap(), None);
        }
        assert!(extend_case1_rotation(&g, &c, &fan, 1).is_err());
    }

    #[test]
    fn case1_rotation_fires_when_hub_sees_earlier_y() {
        // C = 0 1 2 3 4 5 with u_1 = 0, u_1^+ = 1, y = (2, 3), u_2 = 4, u_2^+ = 5.
        // Hub 6 sees 0 and 4; chord 1-3 is y_2 u_1^+, and the inserted edge 6-2
        // is x0 y_1.
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 4), (1, 3), (6, 2)]);
        let g = Graph::with_edges(7, &edges).unwrap();
        let c = Cycle::new(&g, (0..6).collect()).unwrap();
        let fan = star_fan(6, &[0, 4]);
        let out = extend_case1_rotation(&g, &c, &fan, 2).unwrap().unwrap();
        assert_eq!(out.as_slice(), &[6, 2, 1, 3, 4, 5, 0]);
        assert_longer(&g, &c, &out);
    }

    #[test]
    fn case1_rotation_fires_through_other_successor() {
        // Same frame, hub without the 6-2 edge; instead u_2^+ = 5 sees y_1 = 2.
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 4), (1, 3), (5, 2)]);
        let g = Graph::with_edges(7, &edges).unwrap();
        let c = Cycle::new(&g, (0..6).collect()).unwrap();
        let fan = star_fan(6, &[0, 4]);
        let out = extend_case1_rotation(&g, &c, &fan, 2).unwrap().unwrap();
        assert_eq!(out.as_slice(), &[6, 4, 3, 1, 2, 5, 0]);
        assert_longer(&g, &c, &out);
    }

    #[test]
    fn case1_rotation_requires_single_long_segment() {
        let c = Cycle::from_sequence((0..6).collect()).unwrap();
        let g = Graph::complete(7);
        let fan = star_fan(6, &[0, 3]);
        assert!(matches!(extend_case1_rotation(&g, &c, &fan, 2), Err(Error::CasePrecondition(_))));
    }
}
