use std::collections::HashSet;

use super::{check_size, AnalysisError};
use crate::graph::Graph;
use crate::walk::Walk;

pub const DEFAULT_HAMILTONIAN_LIMIT: usize = 24;

/// Exact Hamiltonian cycle search by backtracking from vertex 0.
///
/// Returns `Ok(None)` when no Hamiltonian cycle exists (always for n < 3).
pub fn hamiltonian_cycle_exact(g: &Graph, limit_n: usize) -> Result<Option<Walk>, AnalysisError> {
    let n = g.n();
    check_size(n, limit_n)?;
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return Ok(None);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut search = Backtrack {
        adj: &adj,
        n,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        dead: HashSet::new(),
        path: vec![0],
    };
    if search.extend(1) {
        let mut cycle = search.path;
        cycle.push(0);
        Ok(Some(Walk::new(cycle)))
    } else {
        Ok(None)
    }
}

struct Backtrack<'a> {
    adj: &'a [u64],
    n: usize,
    full: u64,
    /// (visited, current) states already shown to be dead ends
    dead: HashSet<(u64, u8)>,
    path: Vec<usize>,
}

impl Backtrack<'_> {
    fn extend(&mut self, visited: u64) -> bool {
        let cur = *self.path.last().expect("path starts at 0");
        if self.path.len() == self.n {
            return self.adj[cur] & 1 == 1;
        }
        if self.dead.contains(&(visited, cur as u8)) {
            return false;
        }
        let unvisited = !visited & self.full;
        // each unvisited vertex still needs two path neighbors
        let open = unvisited | 1 << cur | 1;
        let mut u = unvisited;
        while u != 0 {
            let w = u.trailing_zeros() as usize;
            if (self.adj[w] & open).count_ones() < 2 {
                self.dead.insert((visited, cur as u8));
                return false;
            }
            u &= u - 1;
        }
        let mut cand = self.adj[cur] & unvisited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.path.push(w);
            if self.extend(visited | 1 << w) {
                return true;
            }
            self.path.pop();
        }
        self.dead.insert((visited, cur as u8));
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_ham_cycle(g: &Graph, w: &Walk) -> bool {
        let v = w.vertices();
        let mut inner = v[..v.len() - 1].to_vec();
        inner.sort();
        inner == (0..g.n()).collect::<Vec<_>>()
            && w.is_closed()
            && v.windows(2).all(|p| g.has_edge(p[0], p[1]))
    }

    #[test]
    fn examples() {
        let k4 = Graph::complete(4);
        let w = hamiltonian_cycle_exact(&k4, 24).unwrap().unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2, 3, 0]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(hamiltonian_cycle_exact(&star, 24).unwrap(), None);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(
            hamiltonian_cycle_exact(&c5, 24)
                .unwrap()
                .unwrap()
                .vertices(),
            &[0, 1, 2, 3, 4, 0]
        );
        assert!(hamiltonian_cycle_exact(&Graph::empty(25), 24).is_err());
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(hamiltonian_cycle_exact(&g, 24).unwrap(), None);
        // adding one chord makes it Hamiltonian
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((0, 2));
        let h = Graph::from_edges(10, edges).unwrap();
        let w = hamiltonian_cycle_exact(&h, 24).unwrap();
        assert!(w.is_some_and(|w| is_ham_cycle(&h, &w)));
    }
}
