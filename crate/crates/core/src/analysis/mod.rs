//! Structural predicates and exact brute-force oracles.

mod cliques;
mod hamiltonian;
mod toughness;
mod two_k2;
mod walk_search;

pub use cliques::{clique_number, maximum_cliques};
pub use hamiltonian::{hamiltonian_cycle_exact, DEFAULT_HAMILTONIAN_LIMIT};
pub use toughness::{
    count_components_mask, toughness_at_least, toughness_exact, toughness_witness, ToughnessValue,
    ToughnessWitness, DEFAULT_TOUGHNESS_LIMIT,
};
pub use two_k2::{find_2k2, is_2k2_free, TwoK2Witness};
pub use walk_search::{two_walk_exact, DEFAULT_FALLBACK_LIMIT};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("graph on {n} vertices exceeds the exhaustive-search limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("no maximum clique is weakly dominating")]
    NoWeaklyDominatingMaximumClique,
}

pub(crate) fn check_size(n: usize, limit: usize) -> Result<(), AnalysisError> {
    // bitmask searches are capped at one machine word
    let limit = limit.min(64);
    if n > limit {
        Err(AnalysisError::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

/// `a` together with every neighbor of a member of `a`.
pub fn dominated_set(g: &Graph, a: &[VertexId]) -> FixedBitSet {
    let mut dom = FixedBitSet::with_capacity(g.n());
    for &v in a {
        dom.insert(v);
        dom.union_with(g.row(v));
    }
    dom
}

pub fn is_dominating(g: &Graph, a: &[VertexId]) -> bool {
    dominated_set(g, a).count_ones(..) == g.n()
}

/// Every edge has at least one endpoint in `Dom(a)`.
pub fn is_weakly_dominating(g: &Graph, a: &[VertexId]) -> bool {
    let dom = dominated_set(g, a);
    // the undominated vertices must be pairwise non-adjacent
    dom.zeroes().all(|v| g.row(v).is_subset(&dom))
}

/// True iff at most one component of `g - a` contains an edge.
pub fn one_edge_component(g: &Graph, a: &[VertexId]) -> bool {
    let removed = match g.vertex_set(a) {
        Ok(s) => s,
        Err(_) => return false,
    };
    g.components_avoiding(&removed)
        .iter()
        .filter(|c| c.len() > 1)
        .count()
        <= 1
}

/// First maximum clique, in lexicographic order, that weakly dominates `g`.
pub fn find_weakly_dominating_maximum_clique(g: &Graph) -> Result<Vec<VertexId>, AnalysisError> {
    if g.m() == 0 {
        return Err(AnalysisError::NoEdges);
    }
    let candidates = maximum_cliques(g);
    for (tried, q) in candidates.iter().enumerate() {
        if is_weakly_dominating(g, q) {
            if tried > 0 {
                log::debug!(
                    "weakly dominating clique found after {} rejected candidates",
                    tried
                );
            }
            return Ok(q.clone());
        }
    }
    Err(AnalysisError::NoWeaklyDominatingMaximumClique)
}
