use std::collections::HashSet;

use super::{check_size, AnalysisError};
use crate::graph::Graph;
use crate::walk::Walk;

pub const DEFAULT_FALLBACK_LIMIT: usize = 14;

/// Exact search for a spanning closed walk visiting every vertex at most
/// twice.
///
/// Depth-first over walks starting at vertex 0. What remains of a walk
/// depends only on the current vertex and the visit-count vector, so failed
/// `(vertex, counts)` states are memoized. Counts are packed base 3.
pub fn two_walk_exact(g: &Graph, limit_n: usize) -> Result<Option<Walk>, AnalysisError> {
    let n = g.n();
    // 3^40 still fits in a u64
    check_size(n, limit_n.min(40))?;
    match n {
        0 => return Ok(Some(Walk::new(Vec::new()))),
        1 => return Ok(Some(Walk::new(vec![0]))),
        _ => {}
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut pow3 = vec![1u64; n];
    for i in 1..n {
        pow3[i] = pow3[i - 1] * 3;
    }
    let mut s = Search {
        g,
        pow3,
        counts: vec![0; n],
        code: 0,
        unseen: n,
        dead: HashSet::new(),
        path: vec![0],
    };
    s.bump(0);
    if s.extend() {
        let mut walk = s.path;
        walk.push(0);
        Ok(Some(Walk::new(walk)))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    g: &'a Graph,
    pow3: Vec<u64>,
    counts: Vec<u8>,
    code: u64,
    unseen: usize,
    dead: HashSet<(usize, u64)>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn bump(&mut self, v: usize) {
        if self.counts[v] == 0 {
            self.unseen -= 1;
        }
        self.counts[v] += 1;
        self.code += self.pow3[v];
    }

    fn unbump(&mut self, v: usize) {
        self.counts[v] -= 1;
        self.code -= self.pow3[v];
        if self.counts[v] == 0 {
            self.unseen += 1;
        }
    }

    fn extend(&mut self) -> bool {
        let cur = *self.path.last().expect("walk starts at 0");
        if self.unseen == 0 && cur != 0 && self.g.has_edge(cur, 0) {
            return true;
        }
        let key = (cur, self.code);
        if self.dead.contains(&key) {
            return false;
        }
        // prefer vertices not yet visited
        let mut next: Vec<usize> = self
            .g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| self.counts[w] < 2)
            .collect();
        next.sort_by_key(|&w| self.counts[w]);
        for w in next {
            self.bump(w);
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.unbump(w);
        }
        self.dead.insert(key);
        false
    }
}
