//! Clique tower: weakly dominating maximum cliques peeled off one level at
//! a time, with the isolated residue of each level collected as an
//! independent set.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{find_weakly_dominating_maximum_clique, AnalysisError};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("not 2K2-free: two components with edges remain after removing clique {level}")]
    NotTwoK2Free { level: usize },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// Cliques `Q1..Qk` and independent levels `D1..Dk` partitioning `V(G)`.
/// All ids refer to the input graph; every set is sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTower {
    pub cliques: Vec<Vec<VertexId>>,
    pub levels: Vec<Vec<VertexId>>,
}

impl CliqueTower {
    pub fn k(&self) -> usize {
        self.cliques.len()
    }

    /// Union of all levels, sorted.
    pub fn first_class_vertices(&self) -> Vec<VertexId> {
        let mut d: Vec<VertexId> = self.levels.iter().flatten().copied().collect();
        d.sort_unstable();
        d
    }

    /// Per vertex: index of the clique containing it, if any.
    pub fn clique_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, q) in self.cliques.iter().enumerate() {
            for &v in q {
                if v < n {
                    idx[v] = Some(i);
                }
            }
        }
        idx
    }

    /// `Q<i>: ids` then `D<i>: ids` per level, 1-based.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, (q, d)) in self.cliques.iter().zip(&self.levels).enumerate() {
            for (tag, set) in [("Q", q), ("D", d)] {
                write!(out, "{tag}{}:", i + 1).unwrap();
                for v in set {
                    write!(out, " {v}").unwrap();
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Builds the tower for a 2K2-free graph with at least one edge.
pub fn clique_tower(g: &Graph) -> Result<CliqueTower, TowerError> {
    let mut cliques = Vec::new();
    let mut levels = Vec::new();
    let mut current = g
        .induced(&(0..g.n()).collect::<Vec<_>>())
        .expect("all ids in range");

    loop {
        let local_q = find_weakly_dominating_maximum_clique(&current.graph)?;
        let q = current.to_original(&local_q);
        let removed = current.graph.vertex_set(&local_q).expect("local ids");
        let mut isolated = Vec::new();
        let mut nontrivial: Option<Vec<VertexId>> = None;
        for comp in current.graph.components_avoiding(&removed) {
            if comp.len() == 1 {
                isolated.push(current.original[comp[0]]);
            } else if nontrivial.is_some() {
                return Err(TowerError::NotTwoK2Free {
                    level: cliques.len() + 1,
                });
            } else {
                nontrivial = Some(current.to_original(&comp));
            }
        }
        isolated.sort_unstable();
        cliques.push(q);
        levels.push(isolated);
        match nontrivial {
            Some(rest) => current = g.induced(&rest).expect("ids from g"),
            None => break,
        }
    }
    Ok(CliqueTower { cliques, levels })
}

/// Re-checks every tower invariant against `g`; reports the first failure.
pub fn validate_tower(g: &Graph, t: &CliqueTower) -> Result<(), String> {
    let n = g.n();
    if t.cliques.len() != t.levels.len() {
        return Err(format!(
            "{} cliques but {} levels",
            t.cliques.len(),
            t.levels.len()
        ));
    }
    let mut owner = vec![0usize; n];
    for set in t.cliques.iter().chain(&t.levels) {
        for &v in set {
            if v >= n {
                return Err(format!("vertex {v} out of range"));
            }
            owner[v] += 1;
        }
    }
    if let Some(v) = owner.iter().position(|&c| c != 1) {
        return Err(format!(
            "not a partition: vertex {v} appears {} times",
            owner[v]
        ));
    }
    for (i, q) in t.cliques.iter().enumerate() {
        if q.len() < 2 {
            return Err(format!("Q{} has fewer than 2 vertices", i + 1));
        }
        if !g.is_clique(q) {
            return Err(format!("Q{} is not a clique", i + 1));
        }
        if i > 0 && q.len() > t.cliques[i - 1].len() {
            return Err(format!("sizes not non-increasing at Q{}", i + 1));
        }
    }
    let d = t.first_class_vertices();
    if !g.is_independent(&d) {
        return Err("D not independent".into());
    }
    let in_q = t.clique_index(n);
    for &v in &d {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| in_q[w].is_none()) {
            return Err(format!("D-vertex {v} has neighbor {w} outside the cliques"));
        }
    }
    for (i, qi) in t.cliques.iter().enumerate() {
        let mut reach = g.vertex_set(&[]).expect("empty");
        for &v in qi {
            reach.union_with(g.row(v));
        }
        for (j, qj) in t.cliques.iter().enumerate().skip(i + 1) {
            if !qj.iter().any(|&v| reach.contains(v)) {
                return Err(format!("no edge joins Q{} and Q{}", i + 1, j + 1));
            }
            let undominated: Vec<VertexId> =
                qj.iter().copied().filter(|&v| !reach.contains(v)).collect();
            if undominated.len() > 1 {
                return Err(format!("Q{} not weakly dominated by Q{}", j + 1, i + 1));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixed_graph;

    #[test]
    fn complete_graph_is_one_level() {
        let t = clique_tower(&Graph::complete(4)).unwrap();
        assert_eq!(t.cliques, vec![vec![0, 1, 2, 3]]);
        assert_eq!(t.levels, vec![Vec::<VertexId>::new()]);
        assert_eq!(t.serialize(), "Q1: 0 1 2 3\nD1:\n");
    }

    #[test]
    fn worked_graphs() {
        let g1 = fixed_graph("G1").unwrap();
        let t1 = clique_tower(&g1).unwrap();
        assert_eq!(t1.cliques, vec![vec![0, 1, 2, 3]]);
        assert_eq!(t1.levels, vec![vec![4, 5]]);
        assert_eq!(validate_tower(&g1, &t1), Ok(()));

        // a..g = 0..6
        let g2 = fixed_graph("G2").unwrap();
        let t2 = clique_tower(&g2).unwrap();
        assert_eq!(t2.cliques, vec![vec![0, 1, 2, 3], vec![4, 5]]);
        assert_eq!(t2.levels, vec![vec![6], vec![]]);
        assert_eq!(t2.serialize(), "Q1: 0 1 2 3\nD1: 6\nQ2: 4 5\nD2:\n");
        assert_eq!(validate_tower(&g2, &t2), Ok(()));
    }

    #[test]
    fn isolated_vertices_land_in_d1() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = clique_tower(&g).unwrap();
        assert_eq!(t.levels, vec![vec![3, 4]]);
    }

    #[test]
    fn rejects_two_edge_components() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)]).unwrap();
        assert!(matches!(
            clique_tower(&g),
            Err(TowerError::NotTwoK2Free { level: 1 }) | Err(TowerError::Analysis(_))
        ));
    }

    #[test]
    fn validation_catches_broken_towers() {
        let g1 = fixed_graph("G1").unwrap();
        // d1 and d2 made adjacent
        let mut edges: Vec<_> = g1.edges().collect();
        edges.push((4, 5));
        let g = Graph::from_edges(6, edges).unwrap();
        let t = CliqueTower {
            cliques: vec![vec![0, 1, 2, 3]],
            levels: vec![vec![4, 5]],
        };
        assert_eq!(validate_tower(&g, &t), Err("D not independent".to_string()));

        let g2 = fixed_graph("G2").unwrap();
        let swapped = CliqueTower {
            cliques: vec![vec![4, 5], vec![0, 1, 2, 3]],
            levels: vec![vec![], vec![6]],
        };
        assert!(validate_tower(&g2, &swapped)
            .unwrap_err()
            .starts_with("sizes not non-increasing"));
        let missing = CliqueTower {
            cliques: vec![vec![0, 1, 2, 3]],
            levels: vec![vec![6]],
        };
        assert!(validate_tower(&g2, &missing)
            .unwrap_err()
            .starts_with("not a partition"));
    }
}
