//! Independent checkers for everything the pipeline emits.
//!
//! Each check recomputes its facts from the input graph alone and reports
//! every violation it finds.

use std::collections::VecDeque;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::first_class::ToughnessCertificate;
use crate::graph::{Graph, VertexId};
use crate::multigraph::MultiGraph;
use crate::walk::Walk;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Default for VerdictReport {
    fn default() -> Self {
        VerdictReport::new()
    }
}

impl VerdictReport {
    pub fn new() -> Self {
        VerdictReport {
            ok: true,
            violations: Vec::new(),
        }
    }

    pub fn fail(&mut self, check: &str, detail: impl Into<String>) {
        self.ok = false;
        self.violations.push(Violation {
            check: check.to_string(),
            detail: detail.into(),
        });
    }

    /// Violations as `check: detail` lines.
    pub fn summary(&self) -> String {
        self.violations
            .iter()
            .map(|v| format!("{}: {}", v.check, v.detail))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Closed, adjacent steps, spanning, at most two visits per vertex. The
/// closing return to the start is not a visit.
pub fn verify_two_walk(g: &Graph, w: &Walk) -> VerdictReport {
    let mut report = VerdictReport::new();
    let n = g.n();
    let seq = w.vertices();
    if seq.is_empty() {
        if n > 0 {
            report.fail("spanning", format!("empty walk on {n} vertices"));
        }
        return report;
    }
    if seq.first() != seq.last() {
        report.fail(
            "closed",
            format!("starts at {} but ends at {}", seq[0], seq[seq.len() - 1]),
        );
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        report.fail(
            "range",
            format!("vertex {v} not in a graph on {n} vertices"),
        );
        return report;
    }
    for (i, p) in seq.windows(2).enumerate() {
        if !g.has_edge(p[0], p[1]) {
            report.fail(
                "adjacent",
                format!("step {i}: {} and {} are not adjacent", p[0], p[1]),
            );
        }
    }
    let visited = if seq.len() > 1 && seq.first() == seq.last() {
        &seq[..seq.len() - 1]
    } else {
        seq
    };
    let mut count = vec![0usize; n];
    for &v in visited {
        count[v] += 1;
    }
    for (v, &c) in count.iter().enumerate() {
        if c == 0 {
            report.fail("spanning", format!("vertex {v} never visited"));
        } else if c > 2 {
            report.fail("visits", format!("vertex {v} visited {c} times"));
        }
    }
    report
}

/// Spanning, connected, inside `2*G`, every degree 2 or 4.
pub fn verify_h(g: &Graph, h: &MultiGraph) -> VerdictReport {
    let mut report = VerdictReport::new();
    let n = g.n();
    if h.n() != n {
        report.fail("spanning", format!("H has {} vertices, G has {n}", h.n()));
        return report;
    }
    let mut degree = vec![0usize; n];
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::with_capacity(h.edge_count());
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in h.edges() {
        let (u, v) = (e.u.min(e.v), e.u.max(e.v));
        if !g.has_edge(u, v) {
            report.fail("subgraph", format!("{u}-{v} is not an edge of G"));
        }
        degree[u] += 1;
        degree[v] += 1;
        adj[u].push(v);
        adj[v].push(u);
        pairs.push((u, v));
    }
    pairs.sort_unstable();
    for run in pairs.chunk_by(|a, b| a == b) {
        if run.len() > 2 {
            report.fail(
                "multiplicity",
                format!("{}-{} used {} times", run[0].0, run[0].1, run.len()),
            );
        }
    }
    for (v, &d) in degree.iter().enumerate() {
        if d == 0 {
            report.fail("spanning", format!("vertex {v} has no edges"));
        } else if d != 2 && d != 4 {
            report.fail("degree", format!("vertex {v} has degree {d}"));
        }
    }
    if n > 0 {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let missing = seen.iter().filter(|&&s| !s).count();
        if missing > 0 {
            report.fail(
                "connected",
                format!("{missing} vertices unreachable from 0"),
            );
        }
    }
    report
}

/// Recomputes the components of `G - S` and checks the claimed ratio.
pub fn verify_certificate(g: &Graph, c: &ToughnessCertificate) -> VerdictReport {
    let mut report = VerdictReport::new();
    let n = g.n();
    let mut removed = vec![false; n];
    for &v in &c.cut {
        if v >= n {
            report.fail(
                "range",
                format!("cut vertex {v} not in a graph on {n} vertices"),
            );
        } else if removed[v] {
            report.fail("cut", format!("vertex {v} listed twice"));
        } else {
            removed[v] = true;
        }
    }
    let size = removed.iter().filter(|&&r| r).count() as u64;

    let mut seen = removed.clone();
    let mut components = 0u64;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    if components <= 1 {
        report.fail("disconnects", format!("G - S has {components} components"));
    }
    if components != c.component_count as u64 {
        report.fail(
            "component count",
            format!("claimed {} but G - S has {components}", c.component_count),
        );
    }
    let (p, q) = (*c.ratio.numer() as u128, *c.ratio.denom() as u128);
    if q == 0 {
        report.fail("ratio", "zero denominator");
    } else {
        if components > 0 && p * components as u128 != q * size as u128 {
            report.fail(
                "ratio",
                format!(
                    "claimed {p}/{q} but |S| / c(G - S) = {}",
                    Ratio::new(size, components)
                ),
            );
        }
        if p >= 2 * q {
            report.fail("below two", format!("ratio {p}/{q} is not below 2"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::EdgeClass;

    fn checks(r: &VerdictReport) -> Vec<&str> {
        r.violations.iter().map(|v| v.check.as_str()).collect()
    }

    #[test]
    fn walks() {
        let k3 = Graph::complete(3);
        assert!(verify_two_walk(&k3, &Walk::new(vec![0, 1, 2, 0])).ok);
        assert!(verify_two_walk(&Graph::empty(1), &Walk::new(vec![0])).ok);
        assert!(verify_two_walk(&Graph::empty(0), &Walk::new(vec![])).ok);
        assert!(verify_two_walk(&Graph::complete(2), &Walk::new(vec![0, 1, 0])).ok);

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = verify_two_walk(&star, &Walk::new(vec![0, 1, 0, 2, 0, 3, 0]));
        assert_eq!(checks(&r), vec!["visits"]);
        assert_eq!(r.violations[0].detail, "vertex 0 visited 3 times");

        let k4 = Graph::complete(4);
        assert_eq!(
            checks(&verify_two_walk(&k4, &Walk::new(vec![0, 1, 2, 0]))),
            vec!["spanning"]
        );

        let r = verify_two_walk(&star, &Walk::new(vec![1, 2, 0]));
        assert_eq!(checks(&r), vec!["closed", "adjacent", "spanning"]);
    }

    #[test]
    fn h_graphs() {
        let k3 = Graph::complete(3);
        let mut h = MultiGraph::new(3);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            h.add_edge(u, v, EdgeClass::Third).unwrap();
        }
        assert!(verify_h(&k3, &h).ok);

        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(checks(&verify_h(&p3, &h)), vec!["subgraph"]);

        let mut fat = MultiGraph::new(3);
        for _ in 0..3 {
            fat.add_edge(0, 1, EdgeClass::Third).unwrap();
        }
        fat.add_edge(0, 2, EdgeClass::Third).unwrap();
        fat.add_edge(0, 2, EdgeClass::Third).unwrap();
        fat.add_edge(0, 1, EdgeClass::Third).unwrap();
        let r = verify_h(&k3, &fat);
        assert_eq!(checks(&r), vec!["multiplicity", "degree"]);
        assert!(r.violations[1].detail.contains("degree 6"));

        let mut split = MultiGraph::new(4);
        split.add_edge(0, 1, EdgeClass::First).unwrap();
        split.add_edge(0, 1, EdgeClass::First).unwrap();
        split.add_edge(2, 3, EdgeClass::First).unwrap();
        split.add_edge(2, 3, EdgeClass::First).unwrap();
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(checks(&verify_h(&two_k2, &split)), vec!["connected"]);
    }

    #[test]
    fn certificates() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let good = ToughnessCertificate {
            cut: vec![0],
            component_count: 3,
            ratio: Ratio::new(1, 3),
        };
        assert!(verify_certificate(&star, &good).ok);

        let k3 = Graph::complete(3);
        let one = ToughnessCertificate {
            cut: vec![0],
            component_count: 1,
            ratio: Ratio::new(1, 1),
        };
        assert_eq!(checks(&verify_certificate(&k3, &one)), vec!["disconnects"]);

        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let two = ToughnessCertificate {
            cut: vec![0, 1, 2, 3],
            component_count: 2,
            ratio: Ratio::new(2, 1),
        };
        let r = verify_certificate(&c4, &two);
        assert!(checks(&r).contains(&"below two"));

        let wrong_ratio = ToughnessCertificate {
            cut: vec![0, 2],
            component_count: 2,
            ratio: Ratio::new_raw(1, 2),
        };
        assert_eq!(
            checks(&verify_certificate(&c4, &wrong_ratio)),
            vec!["ratio"]
        );
        let unreduced = ToughnessCertificate {
            ratio: Ratio::new_raw(2, 2),
            ..wrong_ratio
        };
        assert!(verify_certificate(&c4, &unreduced).ok);
    }

    #[test]
    fn report_json_shape() {
        let mut r = VerdictReport::new();
        r.fail("degree", "vertex 3 has degree 6");
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"ok":false,"violations":[{"check":"degree","detail":"vertex 3 has degree 6"}]}"#
        );
    }
}
