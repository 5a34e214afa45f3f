use std::fmt;

use super::{Cycle, Direction};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::invariants::PathSystem;

/// `{hub} ∪ {u_i^+}` over every attachment of the fan.
pub fn successors_set(c: &Cycle, fan: &PathSystem) -> Result<VertexSet> {
    let mut s = VertexSet::singleton(fan.hub());
    for u in fan.attachments() {
        s.insert(c.succ(u)?);
    }
    Ok(s)
}

/// The cycle cut at the first `k` attachments `u_1..u_k`: segment `i` is
/// the forward arc from `u_i^{++}` to `u_{i+1}` (indices mod `k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentDecomposition {
    pub attachments: Vec<usize>,
    pub successors: Vec<usize>,
    pub segments: Vec<Vec<usize>>,
}

impl SegmentDecomposition {
    pub fn k(&self) -> usize {
        self.attachments.len()
    }

    /// Zero-based indices `i` with `|T_i| >= 2`; its size drives the case
    /// split.
    pub fn big_segment_indices(&self) -> Vec<usize> {
        (0..self.segments.len()).filter(|&i| self.segments[i].len() >= 2).collect()
    }

    /// Renumbers so that segment `i` becomes segment 0.
    pub fn rotated(&self, i: usize) -> SegmentDecomposition {
        let mut r = self.clone();
        r.attachments.rotate_left(i);
        r.successors.rotate_left(i);
        r.segments.rotate_left(i);
        r
    }
}

impl fmt::Display for SegmentDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, seg) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            crate::graph::set::write_vertex_list(f, seg.iter().copied())?;
        }
        Ok(())
    }
}

pub fn segments(c: &Cycle, fan: &PathSystem, k: usize) -> Result<SegmentDecomposition> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("segments need k >= 2, got {k}")));
    }
    if fan.len() < k {
        return Err(Error::InsufficientPaths { found: fan.len(), required: k });
    }
    let attachments: Vec<usize> = fan.attachments().into_iter().take(k).collect();
    let pos = attachments.iter().map(|&u| c.position(u).ok_or(Error::NotOnCycle(u))).collect::<Result<Vec<_>>>()?;
    let rel: Vec<usize> = pos.iter().map(|&p| (p + c.len() - pos[0]) % c.len()).collect();
    if rel.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::AttachmentsOutOfOrder);
    }
    let successors = attachments.iter().map(|&u| c.succ(u)).collect::<Result<Vec<_>>>()?;
    let mut segs = Vec::with_capacity(k);
    for i in 0..k {
        let next = attachments[(i + 1) % k];
        if successors[i] == next {
            return Err(Error::CasePrecondition(format!(
                "attachment {} is followed directly by attachment {next}",
                attachments[i]
            )));
        }
        let start = c.succ(successors[i])?;
        segs.push(c.arc(start, next, Direction::Forward)?);
    }
    Ok(SegmentDecomposition { attachments, successors, segments: segs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::invariants::menger_fan;

    fn fan_to(hub: usize, ends: &[usize]) -> PathSystem {
        PathSystem::from_paths(hub, ends.iter().map(|&u| vec![hub, u]).collect())
    }

    #[test]
    fn successors_examples() {
        let c = Cycle::from_sequence((0..6).collect()).unwrap();
        let s = successors_set(&c, &fan_to(6, &[0, 2, 4])).unwrap();
        assert_eq!(s.to_vec(), vec![1, 3, 5, 6]);
        assert_eq!(s.len(), 4);
        assert_eq!(successors_set(&c, &fan_to(6, &[9])), Err(Error::NotOnCycle(9)));
    }

    #[test]
    fn extremal_successors_are_independent() {
        let g = Graph::complete(2).join(&Graph::empty(3)).unwrap();
        let c = Cycle::new(&g, vec![0, 2, 1, 3]).unwrap();
        let fan = menger_fan(&g, 4, &c, 2).unwrap();
        assert_eq!(fan.attachments(), vec![0, 1]);
        let s = successors_set(&c, &fan).unwrap();
        assert_eq!(s.to_vec(), vec![2, 3, 4]);
        assert!(g.is_independent(s));
    }

    #[test]
    fn segment_examples() {
        let c = Cycle::from_sequence((0..6).collect()).unwrap();
        let d = segments(&c, &fan_to(6, &[0, 3]), 2).unwrap();
        assert_eq!(d.segments, vec![vec![2, 3], vec![5, 0]]);
        assert_eq!(d.big_segment_indices(), vec![0, 1]);

        let sq = Cycle::from_sequence(vec![0, 1, 2, 3]).unwrap();
        let d = segments(&sq, &fan_to(4, &[0, 2]), 2).unwrap();
        assert_eq!(d.segments, vec![vec![2], vec![0]]);
        assert!(d.big_segment_indices().is_empty());
    }

    #[test]
    fn segment_errors() {
        let c = Cycle::from_sequence((0..6).collect()).unwrap();
        assert_eq!(segments(&c, &fan_to(6, &[3, 1, 5]), 3), Err(Error::AttachmentsOutOfOrder));
        assert!(matches!(segments(&c, &fan_to(6, &[0, 1]), 2), Err(Error::CasePrecondition(_))));
        assert!(matches!(segments(&c, &fan_to(6, &[0]), 2), Err(Error::InsufficientPaths { .. })));
        assert!(matches!(segments(&c, &fan_to(6, &[0, 3]), 1), Err(Error::InvalidParameters(_))));
    }

    proptest::proptest! {
        #[test]
        fn segment_sizes_sum_to_cycle_minus_k(len in 4usize..20, picks in proptest::collection::btree_set(0usize..20, 2..8)) {
            let ends: Vec<usize> = picks.into_iter().filter(|&p| p < len).collect();
            let spaced = ends.windows(2).all(|w| w[1] - w[0] >= 2)
                && ends.len() >= 2
                && (ends[0] + len - ends[ends.len() - 1]) >= 2;
            proptest::prop_assume!(spaced);
            let c = Cycle::from_sequence((0..len).collect()).unwrap();
            let k = ends.len();
            let d = segments(&c, &fan_to(len, &ends), k).unwrap();
            proptest::prop_assert_eq!(d.segments.iter().map(Vec::len).sum::<usize>(), len - k);
            proptest::prop_assert!(d.segments.iter().all(|s| !s.is_empty()));
        }
    }
}
