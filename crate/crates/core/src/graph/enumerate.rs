use std::ops::Range;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order enumerated exhaustively (2^21 labelled graphs at n = 7).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// `n(n-1)/2`.
pub const fn edge_count_for_order(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labelled graph on `n` vertices, in edge-mask order.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ENUMERATION_ORDER });
    }
    Ok(LabeledGraphs { n, masks: 0..1u64 << edge_count_for_order(n) })
}

/// Iterator over labelled graphs for a contiguous range of edge masks.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    masks: Range<u64>,
}

impl LabeledGraphs {
    /// Graphs whose edge masks fall in `masks`, clipped to the valid range.
    pub fn mask_range(n: usize, masks: Range<u64>) -> Result<LabeledGraphs> {
        let all = enumerate_labeled(n)?;
        let end = masks.end.min(all.masks.end);
        Ok(LabeledGraphs { n, masks: masks.start.min(end)..end })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> Range<u64> {
        self.masks.clone()
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.masks.next().map(|m| Graph::from_edge_mask(self.n, m))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}

impl ExactSizeIterator for LabeledGraphs {}
