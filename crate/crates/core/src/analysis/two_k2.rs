use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};

/// Four vertices inducing exactly the edges `ab` and `cd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoK2Witness {
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
}

impl TwoK2Witness {
    pub fn vertices(&self) -> [VertexId; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

pub fn is_2k2_free(g: &Graph) -> bool {
    find_2k2(g).is_none()
}

/// Finds an induced 2K2, scanning edges `ab` in lexicographic order.
///
/// For an edge `ab` the second edge must live in `R = V - N[a] - N[b]`.
/// Any vertex of such an edge has a neighbor among the non-neighbors of
/// `a`, and likewise for `b`; precomputing those per-vertex sets lets most
/// edges be dismissed with a single bitset intersection.
pub fn find_2k2(g: &Graph) -> Option<TwoK2Witness> {
    let n = g.n();
    if g.m() < 2 {
        return None;
    }
    let far: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = g.row(v).clone();
            s.insert(v);
            s.toggle_range(..);
            s
        })
        .collect();
    // live[v]: non-neighbors of v that have a neighbor among v's non-neighbors
    let live: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            for x in far[v].ones() {
                if !g.row(x).is_disjoint(&far[v]) {
                    s.insert(x);
                }
            }
            s
        })
        .collect();

    let mut rest = FixedBitSet::with_capacity(n);
    for (a, b) in g.edges() {
        if live[a].is_disjoint(&live[b]) {
            continue;
        }
        rest.clone_from(&far[a]);
        rest.intersect_with(&far[b]);
        for c in live[a].intersection(&live[b]) {
            if let Some(d) = g.row(c).intersection(&rest).next() {
                return Some(TwoK2Witness { a, b, c, d });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Every 4-subset, every perfect matching of it.
    fn brute_force_2k2(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        for [(p, q), (r, s)] in
                            [[(a, b), (c, d)], [(a, c), (b, d)], [(a, d), (b, c)]]
                        {
                            let cross = [(p, r), (p, s), (q, r), (q, s)];
                            if g.has_edge(p, q)
                                && g.has_edge(r, s)
                                && cross.iter().all(|&(x, y)| !g.has_edge(x, y))
                            {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn assert_witness(g: &Graph, w: TwoK2Witness) {
        let induced = g.induced(&w.vertices()).unwrap();
        assert_eq!(induced.graph.m(), 2);
        assert!(g.has_edge(w.a, w.b) && g.has_edge(w.c, w.d));
    }

    #[test]
    fn examples() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let w = find_2k2(&two_k2).unwrap();
        assert_eq!(w.vertices(), [0, 1, 2, 3]);
        assert!(is_2k2_free(&cycle(5)));
        assert_eq!(find_2k2(&cycle(6)).unwrap().vertices(), [0, 1, 3, 4]);
        assert!(is_2k2_free(&Graph::complete(6)));
        assert!(is_2k2_free(&Graph::empty(5)));
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_up_to_6() {
        for n in 0..=6usize {
            let pairs: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                let found = find_2k2(&g);
                assert_eq!(found.is_some(), brute_force_2k2(&g), "mask {mask} n {n}");
                if let Some(w) = found {
                    assert_witness(&g, w);
                }
            }
        }
    }
}
