use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexId};

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    maximum_cliques(g).first().map_or(0, Vec::len)
}

/// All cliques of maximum size, each sorted, in lexicographic order.
///
/// Pivoted Bron-Kerbosch over bitsets, pruning any branch whose candidate
/// pool cannot reach the best size seen so far.
pub fn maximum_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        best: 0,
        found: Vec::new(),
    };
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    search.expand(&mut Vec::new(), p, FixedBitSet::with_capacity(n));
    let mut found = search.found;
    for c in &mut found {
        c.sort_unstable();
    }
    found.sort();
    found.dedup();
    found
}

struct Search<'a> {
    g: &'a Graph,
    best: usize,
    found: Vec<Vec<VertexId>>,
}

impl Search<'_> {
    fn expand(&mut self, r: &mut Vec<VertexId>, mut p: FixedBitSet, mut x: FixedBitSet) {
        if p.is_clear() {
            if x.is_clear() {
                if r.len() > self.best {
                    self.best = r.len();
                    self.found.clear();
                }
                if r.len() == self.best {
                    self.found.push(r.clone());
                }
            }
            return;
        }
        if r.len() + p.count_ones(..) < self.best {
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| (p.intersection_count(self.g.row(u)), std::cmp::Reverse(u)))
            .expect("p is non-empty");
        let branch: Vec<VertexId> = p.difference(self.g.row(pivot)).collect();
        for v in branch {
            if r.len() + p.count_ones(..) < self.best {
                return;
            }
            let row = self.g.row(v);
            let mut np = p.clone();
            np.intersect_with(row);
            let mut nx = x.clone();
            nx.intersect_with(row);
            r.push(v);
            self.expand(r, np, nx);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn brute_force(g: &Graph) -> Vec<Vec<VertexId>> {
        let n = g.n();
        let mut best: Vec<Vec<VertexId>> = Vec::new();
        for mask in 0u32..(1 << n) {
            let s: Vec<_> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !g.is_clique(&s) {
                continue;
            }
            match best.first().map(Vec::len) {
                Some(b) if b > s.len() => {}
                Some(b) if b == s.len() => best.push(s),
                _ => best = vec![s],
            }
        }
        best.sort();
        best
    }

    #[test]
    fn examples() {
        assert_eq!(maximum_cliques(&Graph::complete(4)), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            maximum_cliques(&cycle(5)),
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        assert_eq!(maximum_cliques(&Graph::empty(2)), vec![vec![0], vec![1]]);
        assert!(maximum_cliques(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn matches_subset_scan() {
        // deterministic pseudo-random graphs up to 10 vertices
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for n in 1..=10usize {
            for _ in 0..40 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state % 100 < 55 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, edges).unwrap();
                assert_eq!(maximum_cliques(&g), brute_force(&g));
            }
        }
    }
}
