use std::fmt;

use num_rational::Ratio;

use super::{check_size, AnalysisError};
use crate::graph::{Graph, VertexId};

pub const DEFAULT_TOUGHNESS_LIMIT: usize = 18;

/// Exact toughness: a rational, or infinite for complete graphs.
///
/// Variant order gives the total order, with `Infinite` above every ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ToughnessValue {
    Finite(Ratio<u64>),
    Infinite,
}

impl ToughnessValue {
    pub fn at_least(&self, beta: Ratio<u64>) -> bool {
        match self {
            ToughnessValue::Finite(r) => *r >= beta,
            ToughnessValue::Infinite => true,
        }
    }
}

impl fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToughnessValue::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ToughnessValue::Infinite => write!(f, "infinite"),
        }
    }
}

/// A disconnecting set attaining the minimum ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToughnessWitness {
    pub cut: Vec<VertexId>,
    pub components: usize,
    pub ratio: Ratio<u64>,
}

/// Number of components of the subgraph induced on `remaining`, with the
/// graph given as one neighbor mask per vertex.
pub fn count_components_mask(adj: &[u64], mut remaining: u64) -> usize {
    let mut count = 0;
    while remaining != 0 {
        let seed = remaining & remaining.wrapping_neg();
        remaining &= !seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= remaining;
            remaining &= !next;
            frontier = next;
        }
        count += 1;
    }
    count
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn mask_to_vec(mask: u64) -> Vec<VertexId> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Next larger integer with the same popcount.
fn next_same_popcount(x: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Sweeps cut sets by increasing size. Returns the first cut with the
/// smallest ratio, or stops at the first cut whose ratio is below `stop_below`.
fn sweep(g: &Graph, stop_below: Option<Ratio<u64>>) -> Option<ToughnessWitness> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let adj = masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<(Ratio<u64>, u64, usize)> = None;

    for size in 0..=n - 2 {
        // at most n - size components remain, so this is the best this size can do
        let floor = Ratio::new(size as u64, (n - size) as u64);
        if best.is_some_and(|(r, _, _)| floor >= r) || stop_below.is_some_and(|t| floor >= t) {
            break;
        }
        let mut mask = if size == 0 { 0 } else { (1u64 << size) - 1 };
        loop {
            if mask & !full != 0 {
                break;
            }
            let omega = count_components_mask(&adj, full & !mask);
            if omega > 1 {
                let ratio = Ratio::new(size as u64, omega as u64);
                if best.is_none_or(|(r, _, _)| ratio < r) {
                    best = Some((ratio, mask, omega));
                    if stop_below.is_some_and(|t| ratio < t) {
                        break;
                    }
                }
            }
            if size == 0 {
                break;
            }
            match next_same_popcount(mask) {
                Some(m) => mask = m,
                None => break,
            }
        }
        if let (Some((r, _, _)), Some(t)) = (best, stop_below) {
            if r < t {
                break;
            }
        }
    }
    best.map(|(ratio, mask, components)| ToughnessWitness {
        cut: mask_to_vec(mask),
        components,
        ratio,
    })
}

/// Minimum of `|S| / c(G - S)` over all `S` leaving more than one component.
///
/// `S = {}` is included, so disconnected graphs have toughness 0.
pub fn toughness_exact(g: &Graph, limit_n: usize) -> Result<ToughnessValue, AnalysisError> {
    Ok(match toughness_witness(g, limit_n)? {
        Some(w) => ToughnessValue::Finite(w.ratio),
        None => ToughnessValue::Infinite,
    })
}

/// The minimizing cut behind [`toughness_exact`]; `None` when no cut exists.
pub fn toughness_witness(
    g: &Graph,
    limit_n: usize,
) -> Result<Option<ToughnessWitness>, AnalysisError> {
    check_size(g.n(), limit_n)?;
    Ok(sweep(g, None))
}

/// Same answer as `toughness_exact(g) >= beta`, stopping at the first violating cut.
pub fn toughness_at_least(
    g: &Graph,
    beta: Ratio<u64>,
    limit_n: usize,
) -> Result<bool, AnalysisError> {
    check_size(g.n(), limit_n)?;
    Ok(sweep(g, Some(beta)).is_none_or(|w| w.ratio >= beta))
}
