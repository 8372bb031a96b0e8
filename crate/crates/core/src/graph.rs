//! Simple undirected graphs over dense vertex ids.

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
}

/// A simple undirected graph.
///
/// Adjacency is kept twice: as sorted neighbor lists for iteration and as
/// bitset rows for constant-time membership and set algebra. Both are
/// fixed at construction.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    rows: Vec<FixedBitSet>,
    m: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<FixedBitSet>) -> Self {
        let adj: Vec<Vec<VertexId>> = rows.iter().map(|r| r.ones().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, rows, m }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are in range")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Neighborhood of `v` as a bitset of width `n`.
    pub fn row(&self, v: VertexId) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m * 2 == n * n.saturating_sub(1)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].clone();
                r.toggle_range(..);
                r.set(v, false);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Bitset of width `n` holding `s`.
    pub fn vertex_set(&self, s: &[VertexId]) -> Result<FixedBitSet, GraphError> {
        let n = self.n();
        let mut set = FixedBitSet::with_capacity(n);
        for &v in s {
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_avoiding(&FixedBitSet::with_capacity(self.n()))
    }

    /// Components of `G - removed`.
    pub fn components_avoiding(&self, removed: &FixedBitSet) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut seen = removed.clone();
        seen.grow(n);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `s`, relabelled densely in ascending order of the
    /// original ids.
    pub fn induced(&self, s: &[VertexId]) -> Result<InducedSubgraph, GraphError> {
        let set = self.vertex_set(s)?;
        let original: Vec<VertexId> = set.ones().collect();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let k = original.len();
        let rows = original
            .iter()
            .map(|&v| {
                let mut r = FixedBitSet::with_capacity(k);
                for w in self.rows[v].intersection(&set) {
                    r.insert(local[w]);
                }
                r
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_rows(rows),
            original,
        })
    }

    /// True iff every pair of `s` is adjacent. Repeated ids are ignored.
    pub fn is_clique(&self, s: &[VertexId]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| u == v || self.has_edge(u, v)))
    }

    /// True iff no two members of `s` are adjacent.
    pub fn is_independent(&self, s: &[VertexId]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// An induced subgraph with the map back to the parent's vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[local]` is the parent id of local vertex `local`.
    pub original: Vec<VertexId>,
}

impl InducedSubgraph {
    pub fn to_original(&self, local: &[VertexId]) -> Vec<VertexId> {
        local.iter().map(|&v| self.original[v]).collect()
    }
}
