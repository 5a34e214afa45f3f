//! Exact solvers for clique, independence and chromatic numbers, vertex
//! connectivity, Menger fans, and the Nordhaus–Gaddum bound.

mod clique;
mod coloring;
mod connectivity;

pub use clique::{clique_number, independence_number, max_clique};
pub use coloring::{chromatic_number, greedy_coloring, is_k_colorable, Coloring};
pub use connectivity::{is_k_connected, local_connectivity, menger_fan, vertex_connectivity, PathSystem};

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NordhausGaddum {
    pub chi: usize,
    pub chi_complement: usize,
    /// `n + 1 - chi - chi_complement`, never negative.
    pub slack: i64,
}

/// `chi(g) + chi(g^c) <= n + 1`, reported with its slack.
pub fn nordhaus_gaddum(g: &Graph) -> Result<NordhausGaddum> {
    let (chi, _) = chromatic_number(g)?;
    let (chi_complement, _) = chromatic_number(&g.complement())?;
    Ok(NordhausGaddum { chi, chi_complement, slack: g.order() as i64 + 1 - chi as i64 - chi_complement as i64 })
}
