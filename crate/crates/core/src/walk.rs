use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::VertexId;

/// A closed walk `v0, v1, ..., vL` with `v0 == vL`.
///
/// Visits are counted cyclically: the closing repeat of `v0` is not a new
/// visit, so `u, v, u` visits each endpoint once.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Walk {
    vertices: Vec<VertexId>,
}

impl Walk {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        Walk { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Positions that count as visits: all but the closing repeat.
    fn visit_positions(&self) -> &[VertexId] {
        match self.vertices.len() {
            0 | 1 => &self.vertices,
            l if self.is_closed() => &self.vertices[..l - 1],
            _ => &self.vertices,
        }
    }

    pub fn visit_counts(&self) -> BTreeMap<VertexId, usize> {
        let mut counts = BTreeMap::new();
        for &v in self.visit_positions() {
            *counts.entry(v).or_insert(0) += 1;
        }
        counts
    }

    pub fn max_visits(&self) -> usize {
        self.visit_counts().values().copied().max().unwrap_or(0)
    }
}
