//! The spanning subgraph `H` of the doubled graph, assembled from
//! first-, second- and third-class edges, and its Euler circuit.

use thiserror::Error;

use crate::decomposition::CliqueTower;
use crate::first_class::FirstClassEdges;
use crate::gamma::GammaGraph;
use crate::graph::{Graph, VertexId};
use crate::multigraph::{EdgeClass, MultiGraph};
use crate::verifier::{verify_h, VerdictReport};
use crate::walk::Walk;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HError {
    #[error("no edge of G joins Q{i} and Q{j}")]
    NoCrossEdge { i: usize, j: usize },
    #[error("H is invalid: {}", .0.summary())]
    ConstructionFailed(VerdictReport),
    #[error("H is not Eulerian: {0}")]
    NotEulerian(String),
}

/// `H` holding exactly the first-class edges.
pub fn step1_first_class(n: usize, e: &FirstClassEdges) -> MultiGraph {
    let mut h = MultiGraph::new(n);
    for &(d, q) in &e.edges {
        h.add_edge(d, q, EdgeClass::First)
            .expect("first-class edges lie in G");
    }
    h
}

/// One `G`-edge between `Q_i` and `Q_j` per red edge `w_i w_j`.
///
/// Candidates keep multiplicity below 2. The pick maximizes the number of
/// endpoints whose current degree is even; ties go to the lexicographically
/// smallest `(min, max)` pair.
pub fn step2_second_class(
    g: &Graph,
    t: &CliqueTower,
    gamma: &GammaGraph,
    h: &mut MultiGraph,
) -> Result<(), HError> {
    for (i, j) in gamma.red_pairs() {
        let mut best: Option<(usize, (VertexId, VertexId))> = None;
        for &u in &t.cliques[i] {
            for &v in &t.cliques[j] {
                if !g.has_edge(u, v) || h.multiplicity(u, v) >= 2 {
                    continue;
                }
                let score = usize::from(h.degree(u).is_multiple_of(2))
                    + usize::from(h.degree(v).is_multiple_of(2));
                let pair = (u.min(v), u.max(v));
                let better = match best {
                    None => true,
                    Some((s, p)) => score > s || (score == s && pair < p),
                };
                if better {
                    best = Some((score, pair));
                }
            }
        }
        let (_, (u, v)) = best.ok_or(HError::NoCrossEdge { i: i + 1, j: j + 1 })?;
        h.add_edge(u, v, EdgeClass::Second)
            .expect("cross edge lies in G");
    }
    Ok(())
}

/// Completes `H` clique by clique, then validates it.
///
/// Odd vertices are matched (degree 3 before degree 1, ascending within
/// each group, adjacent pairs). The vertices left at degree 0 or 2 are then
/// joined by a cycle in ascending order when there are at least three, by a
/// parallel pair when there are two and the pair is unused, and a lone
/// degree-0 vertex is tied by a parallel pair to its smallest unused
/// clique-mate.
pub fn step3_third_class(g: &Graph, t: &CliqueTower, h: &mut MultiGraph) -> Result<(), HError> {
    for q in &t.cliques {
        let by_degree = |h: &MultiGraph, d: usize| -> Vec<VertexId> {
            q.iter().copied().filter(|&v| h.degree(v) == d).collect()
        };
        let mut odd = by_degree(h, 3);
        odd.extend(by_degree(h, 1));
        let stray: Vec<VertexId> = q
            .iter()
            .copied()
            .filter(|&v| h.degree(v) % 2 == 1 && h.degree(v) > 3)
            .collect();
        odd.extend(stray);
        for p in odd.chunks(2) {
            if let [a, b] = *p {
                h.add_edge(a.min(b), a.max(b), EdgeClass::Third)
                    .expect("clique pair lies in G");
            }
        }

        let l: Vec<VertexId> = q
            .iter()
            .copied()
            .filter(|&v| matches!(h.degree(v), 0 | 2))
            .collect();
        match l.len() {
            0 => {}
            1 => {
                let v = l[0];
                if h.degree(v) == 0 {
                    if let Some(&mate) = q.iter().find(|&&u| u != v && h.multiplicity(u, v) == 0) {
                        for _ in 0..2 {
                            h.add_edge(v.min(mate), v.max(mate), EdgeClass::Third)
                                .expect("clique pair lies in G");
                        }
                    }
                }
            }
            2 => {
                let (a, b) = (l[0], l[1]);
                if h.multiplicity(a, b) == 0 {
                    for _ in 0..2 {
                        h.add_edge(a, b, EdgeClass::Third)
                            .expect("clique pair lies in G");
                    }
                }
            }
            len => {
                for i in 0..len {
                    let (a, b) = (l[i], l[(i + 1) % len]);
                    h.add_edge(a.min(b), a.max(b), EdgeClass::Third)
                        .expect("clique pair lies in G");
                }
            }
        }
    }
    let report = verify_h(g, h);
    if report.ok {
        Ok(())
    } else {
        Err(HError::ConstructionFailed(report))
    }
}

/// Iterative Hierholzer from vertex 0. At each vertex the earliest unused
/// incident edge in insertion order is taken.
pub fn euler_circuit(h: &MultiGraph) -> Result<Walk, HError> {
    let n = h.n();
    if h.edge_count() == 0 {
        return Err(HError::NotEulerian("no edges".into()));
    }
    if let Some(v) = (0..n).find(|&v| h.degree(v) % 2 == 1) {
        return Err(HError::NotEulerian(format!(
            "vertex {v} has odd degree {}",
            h.degree(v)
        )));
    }
    if h.degree(0) == 0 {
        return Err(HError::NotEulerian("vertex 0 has no edges".into()));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, e) in h.edges().iter().enumerate() {
        incident[e.u].push(idx);
        incident[e.v].push(idx);
    }
    let mut used = vec![false; h.edge_count()];
    let mut next = vec![0usize; n];
    let mut stack = vec![0];
    let mut circuit = Vec::with_capacity(h.edge_count() + 1);
    while let Some(&v) = stack.last() {
        while next[v] < incident[v].len() && used[incident[v][next[v]]] {
            next[v] += 1;
        }
        match incident[v].get(next[v]) {
            Some(&idx) => {
                used[idx] = true;
                let e = &h.edges()[idx];
                stack.push(if e.u == v { e.v } else { e.u });
            }
            None => {
                circuit.push(v);
                stack.pop();
            }
        }
    }
    if circuit.len() != h.edge_count() + 1 {
        return Err(HError::NotEulerian(
            "edges unreachable from vertex 0".into(),
        ));
    }
    circuit.reverse();
    Ok(Walk::new(circuit))
}
