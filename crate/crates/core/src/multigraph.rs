use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{GraphError, VertexId};

/// Edge labels. `Blue`/`Red` live in the auxiliary graph, the rest in the
/// walk subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    First,
    Second,
    Third,
    Blue,
    Red,
}

impl EdgeClass {
    pub fn name(self) -> &'static str {
        match self {
            EdgeClass::First => "first",
            EdgeClass::Second => "second",
            EdgeClass::Third => "third",
            EdgeClass::Blue => "blue",
            EdgeClass::Red => "red",
        }
    }
}

/// One edge occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub class: EdgeClass,
}

impl MultiEdge {
    /// Endpoints with the smaller id first.
    pub fn pair(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Loopless multigraph stored as an ordered list of edge occurrences.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<MultiEdge>,
    degrees: Vec<usize>,
    pairs: HashMap<(VertexId, VertexId), usize>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            n,
            edges: Vec::new(),
            degrees: vec![0; n],
            pairs: HashMap::new(),
        }
    }

    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        class: EdgeClass,
    ) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = MultiEdge { u, v, class };
        *self.pairs.entry(e.pair()).or_insert(0) += 1;
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.edges.push(e);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Incident edge occurrences, parallel edges counted with multiplicity.
    pub fn degree(&self, v: VertexId) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.pairs.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    pub fn edges_of_class(&self, class: EdgeClass) -> impl Iterator<Item = &MultiEdge> + '_ {
        self.edges.iter().filter(move |e| e.class == class)
    }

    /// Connected components over all `n` vertices, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_counts_parallel_edges() {
        let mut h = MultiGraph::new(3);
        assert_eq!(h.degree(2), 0);
        h.add_edge(0, 1, EdgeClass::Third).unwrap();
        h.add_edge(1, 0, EdgeClass::Third).unwrap();
        assert_eq!(h.degree(0), 2);
        assert_eq!(h.degree(1), 2);
        assert_eq!(h.multiplicity(1, 0), 2);
        assert_eq!(h.components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn rejects_loops() {
        let mut h = MultiGraph::new(2);
        assert_eq!(
            h.add_edge(1, 1, EdgeClass::Red),
            Err(GraphError::SelfLoop(1))
        );
        assert!(h.add_edge(0, 2, EdgeClass::Red).is_err());
        assert_eq!(h.edge_count(), 0);
    }
}
