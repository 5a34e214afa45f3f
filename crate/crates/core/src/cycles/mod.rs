//! Oriented cycles, exact Hamiltonian and longest-cycle search, the segment
//! decomposition around a fan's attachments, and the cycle-lengthening
//! rewirings.

mod extend;
mod hamiltonian;
mod longest;
mod segments;

pub use extend::{extend_case1_rotation, extend_offcycle, extend_predecessor_chord};
pub use hamiltonian::{find_hamiltonian_cycle, HAMILTONIAN_DP_MAX_ORDER};
pub use longest::{longest_cycle, LONGEST_CYCLE_MAX_ORDER};
pub use segments::{segments, successors_set, SegmentDecomposition};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// A cycle with a fixed orientation: `seq[i]` is followed by `seq[i + 1]`
/// and the last vertex by the first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    seq: Vec<usize>,
    members: VertexSet,
}

impl Cycle {
    /// Validates `seq` as a cycle of `g`: at least three distinct in-range
    /// vertices, consecutive ones adjacent, including last to first.
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Cycle> {
        let c = Cycle::from_sequence(seq)?;
        c.validate(g)?;
        Ok(c)
    }

    /// Structural checks only (length and distinctness), no host graph.
    pub fn from_sequence(seq: Vec<usize>) -> Result<Cycle> {
        if seq.len() < 3 {
            return Err(Error::InvalidCycle(format!("length {} < 3", seq.len())));
        }
        let mut members = VertexSet::EMPTY;
        for &v in &seq {
            if v >= crate::graph::MAX_ORDER {
                return Err(Error::InvalidCycle(format!("vertex {v} out of range")));
            }
            if members.contains(v) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
            }
            members.insert(v);
        }
        Ok(Cycle { seq, members })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(v) = self.members.difference(g.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
        }
        let len = self.seq.len();
        for i in 0..len {
            let (u, v) = (self.seq[i], self.seq[(i + 1) % len]);
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("{u} and {v} are not adjacent")));
            }
        }
        Ok(())
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> VertexSet {
        self.members
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        self.seq.iter().position(|&w| w == v)
    }

    fn pos(&self, v: usize) -> Result<usize> {
        self.position(v).ok_or(Error::NotOnCycle(v))
    }

    /// `x^+`.
    pub fn succ(&self, x: usize) -> Result<usize> {
        let i = self.pos(x)?;
        Ok(self.seq[(i + 1) % self.len()])
    }

    /// `x^-`.
    pub fn pred(&self, x: usize) -> Result<usize> {
        let i = self.pos(x)?;
        Ok(self.seq[(i + self.len() - 1) % self.len()])
    }

    /// `(x^+, x^-)`.
    pub fn nav(&self, x: usize) -> Result<(usize, usize)> {
        Ok((self.succ(x)?, self.pred(x)?))
    }

    /// Vertices from `x` to `y` inclusive, walking in `direction`. When
    /// `x == y` the arc is the single vertex.
    pub fn arc(&self, x: usize, y: usize, direction: Direction) -> Result<Vec<usize>> {
        let (i, j) = (self.pos(x)?, self.pos(y)?);
        let len = self.len();
        let steps = match direction {
            Direction::Forward => (j + len - i) % len,
            Direction::Backward => (i + len - j) % len,
        };
        Ok((0..=steps)
            .map(|s| match direction {
                Direction::Forward => self.seq[(i + s) % len],
                Direction::Backward => self.seq[(i + len - s) % len],
            })
            .collect())
    }

    /// Same vertex sequence read in the opposite direction, starting at the
    /// same vertex.
    pub fn reversed(&self) -> Cycle {
        let mut seq = Vec::with_capacity(self.len());
        seq.push(self.seq[0]);
        seq.extend(self.seq[1..].iter().rev());
        Cycle { seq, members: self.members }
    }

    /// Same orientation, listed from `x`.
    pub fn rotated_to(&self, x: usize) -> Result<Cycle> {
        let i = self.pos(x)?;
        let mut seq = self.seq.clone();
        seq.rotate_left(i);
        Ok(Cycle { seq, members: self.members })
    }

    /// Starts at the smallest vertex and picks the direction whose second
    /// vertex is the smaller neighbour.
    pub fn normalized(&self) -> Cycle {
        let start = self.members.first().expect("cycles are nonempty");
        self.oriented_from(start)
    }

    /// Rotated to start at `x` and oriented so that `x^+` is the lower-index
    /// of the two cycle neighbours of `x`.
    pub fn oriented_from(&self, x: usize) -> Cycle {
        let c = self.rotated_to(x).expect("x on cycle");
        if c.seq[1] > c.seq[c.len() - 1] {
            c.reversed()
        } else {
            c
        }
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.seq)
    }
}

/// Comma-separated vertices in orientation order.
impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::graph::set::write_vertex_list(f, self.iter())
    }
}
