//! The auxiliary multigraph over the clique tower.
//!
//! Vertex `i < k` stands for clique `Q_{i+1}` (written `w_{i+1}`), vertex
//! `k + j` for the `j`-th independent vertex in ascending id order. Blue
//! edges are the images of first-class edges; red edges make every degree
//! even and join the blue components into one.

use thiserror::Error;

use crate::decomposition::CliqueTower;
use crate::first_class::FirstClassEdges;
use crate::graph::VertexId;
use crate::multigraph::{EdgeClass, MultiGraph};
use crate::verifier::VerdictReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error("first-class edge ({d}, {q}) does not join D to a clique")]
    UnknownEndpoint { d: VertexId, q: VertexId },
    #[error("independent vertex {0} has odd degree")]
    OddIndependent(VertexId),
    #[error("blue component without a clique vertex")]
    CliquelessComponent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GammaVertex {
    /// 0-based clique index.
    Clique(usize),
    /// Original id of an independent vertex.
    Independent(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGraph {
    cliques: usize,
    d_prime: Vec<VertexId>,
    graph: MultiGraph,
    /// Parallel to the edge list: the first-class edge `(d, q)` behind each blue edge.
    sources: Vec<Option<(VertexId, VertexId)>>,
}

impl GammaGraph {
    pub fn cliques(&self) -> usize {
        self.cliques
    }

    /// Independent vertices in index order.
    pub fn d_prime(&self) -> &[VertexId] {
        &self.d_prime
    }

    pub fn multigraph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn sources(&self) -> &[Option<(VertexId, VertexId)>] {
        &self.sources
    }

    pub fn vertex(&self, idx: usize) -> GammaVertex {
        if idx < self.cliques {
            GammaVertex::Clique(idx)
        } else {
            GammaVertex::Independent(self.d_prime[idx - self.cliques])
        }
    }

    /// Printable name: `w1`, `w2`, ... for cliques, `d<id>` otherwise.
    pub fn label(&self, idx: usize) -> String {
        match self.vertex(idx) {
            GammaVertex::Clique(i) => format!("w{}", i + 1),
            GammaVertex::Independent(v) => format!("d{v}"),
        }
    }

    /// Red edges as 0-based clique index pairs `(i, j)`, `i < j`, in edge order.
    pub fn red_pairs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges_of_class(EdgeClass::Red)
            .map(|e| e.pair())
            .collect()
    }
}

/// Places one blue edge `d'w_t` per first-class edge `(d, q)` with `q` in `Q_t`.
pub fn add_blue_edges(t: &CliqueTower, e: &FirstClassEdges) -> Result<GammaGraph, GammaError> {
    let k = t.k();
    let d_prime = t.first_class_vertices();
    let max_id = t
        .cliques
        .iter()
        .flatten()
        .chain(&d_prime)
        .copied()
        .max()
        .map_or(0, |m| m + 1);
    let in_q = t.clique_index(max_id);
    let mut graph = MultiGraph::new(k + d_prime.len());
    let mut sources = Vec::new();
    for &(d, q) in &e.edges {
        let unknown = GammaError::UnknownEndpoint { d, q };
        let ti = in_q.get(q).copied().flatten().ok_or(unknown.clone())?;
        let di = d_prime.binary_search(&d).map_err(|_| unknown)?;
        graph
            .add_edge(ti, k + di, EdgeClass::Blue)
            .expect("indices within the vertex count");
        sources.push(Some((d, q)));
    }
    Ok(GammaGraph {
        cliques: k,
        d_prime,
        graph,
        sources,
    })
}

/// Adds the red edges.
///
/// One blue component: odd vertices are paired in index order. Several:
/// components are ordered by smallest clique index; each offers `v-` and
/// `v+`, its two smallest odd vertices, or its smallest clique vertex twice
/// when all degrees are even; red edges `v+_i v-_{i+1}` close a cycle over
/// the components, and leftover odd vertices pair up inside their component.
pub fn add_red_edges(mut gamma: GammaGraph) -> Result<GammaGraph, GammaError> {
    let k = gamma.cliques;
    let degrees = gamma.graph.degrees().to_vec();
    if let Some(j) = (k..degrees.len()).find(|&v| degrees[v] % 2 == 1) {
        return Err(GammaError::OddIndependent(gamma.d_prime[j - k]));
    }
    let components = gamma.graph.components();
    let odd_in = |comp: &[usize]| -> Vec<usize> {
        comp.iter()
            .copied()
            .filter(|&v| degrees[v] % 2 == 1)
            .collect()
    };

    let mut red: Vec<(usize, usize)> = Vec::new();
    let pair_up = |odd: &[usize], red: &mut Vec<(usize, usize)>| {
        for p in odd.chunks(2) {
            red.push((p[0], p[1]));
        }
    };

    if components.len() == 1 {
        pair_up(&odd_in(&components[0]), &mut red);
    } else {
        // every component holds a clique vertex and lists members ascending,
        // so components are already ordered by smallest clique index
        let mut reps = Vec::with_capacity(components.len());
        let mut leftovers = Vec::new();
        for comp in &components {
            if comp[0] >= k {
                return Err(GammaError::CliquelessComponent);
            }
            let odd = odd_in(comp);
            if odd.is_empty() {
                reps.push((comp[0], comp[0]));
            } else {
                reps.push((odd[0], odd[1]));
                leftovers.push(odd[2..].to_vec());
            }
        }
        let c = reps.len();
        for i in 0..c {
            let (_, plus) = reps[i];
            let (minus, _) = reps[(i + 1) % c];
            red.push((plus, minus));
        }
        for odd in &leftovers {
            pair_up(odd, &mut red);
        }
    }

    for (a, b) in red {
        gamma
            .graph
            .add_edge(a.min(b), a.max(b), EdgeClass::Red)
            .expect("red edges join distinct clique vertices");
        gamma.sources.push(None);
    }
    Ok(gamma)
}

/// Re-checks the placement rules, parity and connectivity of a finished `gamma`.
pub fn validate_gamma(gamma: &GammaGraph) -> VerdictReport {
    let mut report = VerdictReport::new();
    let h = gamma.multigraph();
    let k = gamma.cliques();
    let n = h.n();
    let mut blue = vec![0usize; n];
    let mut red = vec![0usize; n];
    let mut degree = vec![0usize; n];
    for e in h.edges() {
        if e.u == e.v {
            report.fail("loop", format!("loop at {}", gamma.label(e.u)));
        }
        degree[e.u] += 1;
        degree[e.v] += 1;
        match e.class {
            EdgeClass::Blue => {
                if (e.u < k) == (e.v < k) {
                    report.fail(
                        "blue placement",
                        format!("{}-{}", gamma.label(e.u), gamma.label(e.v)),
                    );
                }
                blue[e.u] += 1;
                blue[e.v] += 1;
            }
            EdgeClass::Red => {
                if e.u >= k || e.v >= k {
                    report.fail(
                        "red placement",
                        format!("{}-{}", gamma.label(e.u), gamma.label(e.v)),
                    );
                }
                red[e.u] += 1;
                red[e.v] += 1;
            }
            other => report.fail(
                "edge class",
                format!("{} edge in the auxiliary graph", other.name()),
            ),
        }
    }
    for v in 0..n {
        if v >= k && (blue[v] != 2 || red[v] != 0) {
            report.fail(
                "independent incidences",
                format!(
                    "{} has {} blue and {} red edges",
                    gamma.label(v),
                    blue[v],
                    red[v]
                ),
            );
        }
        if v < k && red[v] > 2 {
            report.fail(
                "red incidences",
                format!("{} has {} red edges", gamma.label(v), red[v]),
            );
        }
        if degree[v] % 2 == 1 {
            report.fail(
                "even degree",
                format!("{} has degree {}", gamma.label(v), degree[v]),
            );
        }
    }
    // connectivity by flood fill over the edge list
    if n > 0 {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for e in h.edges() {
                if seen[e.u] != seen[e.v] {
                    seen[e.u] = true;
                    seen[e.v] = true;
                    grew = true;
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            report.fail(
                "connected",
                format!("{} not reachable from {}", gamma.label(v), gamma.label(0)),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::clique_tower;
    use crate::first_class::{select_first_class_edges, FirstClassOutcome};
    use crate::generators::fixed_graph;
    use crate::graph::Graph;

    fn build(g: &Graph) -> (GammaGraph, GammaGraph) {
        let t = clique_tower(g).unwrap();
        let FirstClassOutcome::Matched(e) = select_first_class_edges(g, &t) else {
            panic!("Hall holds")
        };
        let blue = add_blue_edges(&t, &e).unwrap();
        let full = add_red_edges(blue.clone()).unwrap();
        (blue, full)
    }

    fn edge_labels(gamma: &GammaGraph) -> Vec<(String, String, EdgeClass)> {
        gamma
            .multigraph()
            .edges()
            .iter()
            .map(|e| (gamma.label(e.u), gamma.label(e.v), e.class))
            .collect()
    }

    #[test]
    fn g1_needs_no_red() {
        let (blue, full) = build(&fixed_graph("G1").unwrap());
        let s = |a: &str, b: &str| (a.to_string(), b.to_string(), EdgeClass::Blue);
        assert_eq!(
            edge_labels(&blue),
            vec![s("w1", "d4"), s("w1", "d4"), s("w1", "d5"), s("w1", "d5")]
        );
        assert_eq!(full, blue);
        assert!(validate_gamma(&full).ok);
    }

    #[test]
    fn g2_gets_parallel_red_pair() {
        let (blue, full) = build(&fixed_graph("G2").unwrap());
        assert_eq!(blue.multigraph().edge_count(), 2);
        assert_eq!(full.red_pairs(), vec![(0, 1), (0, 1)]);
        assert_eq!(full.multigraph().degree(0), 4);
        assert_eq!(full.multigraph().degree(1), 2);
        assert!(validate_gamma(&full).ok);
    }

    #[test]
    fn empty_d_has_no_blue() {
        let t = clique_tower(&Graph::complete(4)).unwrap();
        let blue = add_blue_edges(&t, &FirstClassEdges::default()).unwrap();
        assert_eq!(blue.multigraph().edge_count(), 0);
        assert_eq!(add_red_edges(blue).unwrap().multigraph().edge_count(), 0);
    }

    #[test]
    fn single_component_pairs_by_index() {
        let mut h = MultiGraph::new(4 + 3);
        for (w, d) in [(0, 4), (1, 4), (2, 5), (1, 5), (1, 6), (3, 6)] {
            h.add_edge(w, d, EdgeClass::Blue).unwrap();
        }
        let gamma = GammaGraph {
            cliques: 4,
            d_prime: vec![10, 11, 12],
            graph: h,
            sources: vec![None; 6],
        };
        // degrees: w1 1, w2 3, w3 1, w4 1
        let full = add_red_edges(gamma).unwrap();
        assert_eq!(full.red_pairs(), vec![(0, 1), (2, 3)]);
        assert!(validate_gamma(&full).ok);
    }

    #[test]
    fn cycle_over_components() {
        // three cliques, no independents: red triangle w1 w2 w3
        let t = CliqueTower {
            cliques: vec![vec![0, 1], vec![2, 3], vec![4, 5]],
            levels: vec![vec![], vec![], vec![]],
        };
        let blue = add_blue_edges(&t, &FirstClassEdges::default()).unwrap();
        let full = add_red_edges(blue).unwrap();
        assert_eq!(full.red_pairs(), vec![(0, 1), (1, 2), (0, 2)]);
        assert!(validate_gamma(&full).ok);
    }

    #[test]
    fn mixed_components_use_representatives() {
        // component A: w1 - d10 - w2 and w1 - d11 - w3 (w1 even, w2 w3 odd)
        // component B: w4 alone
        let mut g = MultiGraph::new(4 + 2);
        g.add_edge(0, 4, EdgeClass::Blue).unwrap();
        g.add_edge(1, 4, EdgeClass::Blue).unwrap();
        g.add_edge(0, 5, EdgeClass::Blue).unwrap();
        g.add_edge(2, 5, EdgeClass::Blue).unwrap();
        let gamma = GammaGraph {
            cliques: 4,
            d_prime: vec![10, 11],
            graph: g,
            sources: vec![None; 4],
        };
        let full = add_red_edges(gamma).unwrap();
        // v- = w2, v+ = w3 for A; w4 twice for B
        assert_eq!(full.red_pairs(), vec![(2, 3), (1, 3)]);
        let report = validate_gamma(&full);
        assert!(report.ok, "{report:?}");
    }

    #[test]
    fn validation_failures() {
        let mut g = MultiGraph::new(3);
        g.add_edge(0, 2, EdgeClass::Red).unwrap();
        g.add_edge(0, 2, EdgeClass::Red).unwrap();
        let bad = GammaGraph {
            cliques: 2,
            d_prime: vec![7],
            graph: g,
            sources: vec![None; 2],
        };
        let report = validate_gamma(&bad);
        assert!(!report.ok);
        assert!(report.violations.iter().any(|v| v.check == "red placement"));
        assert!(report.violations.iter().any(|v| v.check == "connected"));
    }
}
