//! Two matching edges per independent vertex, or a cut showing the graph is
//! not 2-tough.

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::decomposition::CliqueTower;
use crate::graph::{Graph, VertexId};

/// Edges `(d, q)`: every `d` in `D` has two with distinct `q`, and every
/// saturated `q` has exactly one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstClassEdges {
    /// Sorted by `d`, then `q`.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl FirstClassEdges {
    /// The saturated clique vertices `Q'`, sorted.
    pub fn saturated(&self) -> Vec<VertexId> {
        let mut q: Vec<VertexId> = self.edges.iter().map(|&(_, q)| q).collect();
        q.sort_unstable();
        q
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FirstClassOutcome {
    Matched(FirstClassEdges),
    /// `D0` with `|N(D0)| < 2 |D0|`, sorted.
    HallViolator(Vec<VertexId>),
}

/// Solves the demand-2 matching between `D` and the clique vertices.
///
/// Each `d` is split into two unit copies and matched by augmenting paths,
/// copies in order of increasing `d`, neighbors in increasing id. A clique
/// vertex takes one unit, so the two copies always land on distinct
/// vertices. On failure the copies reachable by alternating paths from the
/// unmatched ones give the violator.
pub fn select_first_class_edges(g: &Graph, t: &CliqueTower) -> FirstClassOutcome {
    let d = t.first_class_vertices();
    let in_q = t.clique_index(g.n());
    let nbrs: Vec<Vec<VertexId>> = d
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| in_q[w].is_some())
                .collect()
        })
        .collect();

    let copies = 2 * d.len();
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    let mut matched: Vec<Option<VertexId>> = vec![None; copies];
    let mut stamp = vec![usize::MAX; g.n()];

    fn augment(
        c: usize,
        round: usize,
        nbrs: &[Vec<VertexId>],
        owner: &mut [Option<usize>],
        matched: &mut [Option<VertexId>],
        stamp: &mut [usize],
    ) -> bool {
        for &q in &nbrs[c / 2] {
            if stamp[q] == round {
                continue;
            }
            stamp[q] = round;
            let free = match owner[q] {
                None => true,
                Some(other) => augment(other, round, nbrs, owner, matched, stamp),
            };
            if free {
                owner[q] = Some(c);
                matched[c] = Some(q);
                return true;
            }
        }
        false
    }

    let mut unmatched = Vec::new();
    for c in 0..copies {
        if !augment(c, c, &nbrs, &mut owner, &mut matched, &mut stamp) {
            unmatched.push(c);
        }
    }

    if unmatched.is_empty() {
        let mut edges: Vec<(VertexId, VertexId)> = matched
            .iter()
            .enumerate()
            .map(|(c, q)| (d[c / 2], q.expect("all copies matched")))
            .collect();
        edges.sort_unstable();
        return FirstClassOutcome::Matched(FirstClassEdges { edges });
    }

    let mut reached = vec![false; copies];
    let mut seen_q = vec![false; g.n()];
    let mut queue = unmatched.clone();
    for &c in &unmatched {
        reached[c] = true;
    }
    while let Some(c) = queue.pop() {
        for &q in &nbrs[c / 2] {
            if seen_q[q] {
                continue;
            }
            seen_q[q] = true;
            if let Some(next) = owner[q] {
                if !reached[next] {
                    reached[next] = true;
                    queue.push(next);
                }
            }
        }
    }
    let mut d0: Vec<VertexId> = (0..copies)
        .filter(|&c| reached[c])
        .map(|c| d[c / 2])
        .collect();
    d0.dedup();
    FirstClassOutcome::HallViolator(d0)
}

/// A cut `S` with `c(G - S) > 1` and `|S| / c(G - S) < 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessCertificate {
    pub cut: Vec<VertexId>,
    #[serde(rename = "components")]
    pub component_count: usize,
    #[serde(serialize_with = "ratio_to_str", deserialize_with = "ratio_from_str")]
    pub ratio: Ratio<u64>,
}

fn ratio_to_str<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

fn ratio_from_str<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<u64>, D::Error> {
    use serde::de::Error;
    let text = String::deserialize(d)?;
    let (p, q) = text
        .split_once('/')
        .ok_or_else(|| D::Error::custom(format!("ratio `{text}` is not of the form p/q")))?;
    let p: u64 = p.trim().parse().map_err(D::Error::custom)?;
    let q: u64 = q.trim().parse().map_err(D::Error::custom)?;
    if q == 0 {
        return Err(D::Error::custom("zero denominator"));
    }
    // kept unreduced so a verifier can see exactly what was claimed
    Ok(Ratio::new_raw(p, q))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("removing N(D0) leaves a single component")]
    Degenerate,
    #[error("D0 is empty or satisfies |N(D0)| >= 2|D0|")]
    NotAViolator,
}

/// Turns a Hall violator into a certificate with `S = N(D0)`.
pub fn certificate_from_violator(
    g: &Graph,
    d0: &[VertexId],
) -> Result<ToughnessCertificate, CertificateError> {
    if d0.is_empty() || d0.iter().any(|&v| v >= g.n()) {
        return Err(CertificateError::NotAViolator);
    }
    let mut cut_set = g.vertex_set(&[]).expect("empty");
    for &v in d0 {
        cut_set.union_with(g.row(v));
    }
    let cut: Vec<VertexId> = cut_set.ones().collect();
    if cut.len() >= 2 * d0.len() {
        return Err(CertificateError::NotAViolator);
    }
    let components = g.components_avoiding(&cut_set).len();
    if components <= 1 {
        return Err(CertificateError::Degenerate);
    }
    let ratio = Ratio::new(cut.len() as u64, components as u64);
    debug_assert!(ratio < Ratio::from_integer(2));
    Ok(ToughnessCertificate {
        cut,
        component_count: components,
        ratio,
    })
}
