//! Seeded graph generators.
//!
//! Randomness comes from SplitMix64 with the state initialised to the seed
//! (the reference `splitmix64.c` stream). Derived draws:
//!
//! * `unit()`: `(x >> 11) * 2^-53`, uniform in `[0, 1)`
//! * `chance(p)`: `unit() < p`
//! * `below(b)`: `(x * b) >> 64` computed in 128 bits
//!
//! Draws are consumed in the order documented on each generator, so any
//! implementation of the same stream reproduces the same graphs.

use num_rational::Ratio;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{is_2k2_free, toughness_at_least, AnalysisError, DEFAULT_TOUGHNESS_LIMIT};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("unknown fixed graph `{0}`")]
    UnknownFixed(String),
    #[error("no 2-tough 2K2-free graph found in {0} attempts")]
    Exhausted(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// The documented pseudo-random stream.
pub struct StreamRng(SplitMix64);

impl StreamRng {
    pub fn new(seed: u64) -> Self {
        StreamRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}

/// A reproducible recipe for one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GenSpec {
    Split {
        clique_size: usize,
        indep_size: usize,
        attach_prob: f64,
        seed: u64,
    },
    CoChordal {
        n: usize,
        edge_prob: f64,
        seed: u64,
    },
    #[serde(rename = "filtered_2tough")]
    Filtered2Tough {
        n: usize,
        seed: u64,
        max_attempts: usize,
    },
    Fixed {
        name: String,
    },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph, GenError> {
        match self {
            GenSpec::Split {
                clique_size,
                indep_size,
                attach_prob,
                seed,
            } => gen_split(*clique_size, *indep_size, *attach_prob, *seed),
            GenSpec::CoChordal { n, edge_prob, seed } => gen_co_chordal(*n, *edge_prob, *seed),
            GenSpec::Filtered2Tough {
                n,
                seed,
                max_attempts,
            } => gen_filtered_2tough(*n, *seed, *max_attempts),
            GenSpec::Fixed { name } => fixed_graph(name),
        }
    }

    /// One-line comment for the head of an edge-list file.
    pub fn comment(&self) -> String {
        let body = match self {
            GenSpec::Split {
                clique_size,
                indep_size,
                attach_prob,
                seed,
            } => format!("family=split clique_size={clique_size} indep_size={indep_size} attach_prob={attach_prob} seed={seed}"),
            GenSpec::CoChordal { n, edge_prob, seed } => {
                format!("family=co_chordal n={n} edge_prob={edge_prob} seed={seed}")
            }
            GenSpec::Filtered2Tough { n, seed, max_attempts } => {
                format!("family=filtered_2tough n={n} seed={seed} max_attempts={max_attempts}")
            }
            GenSpec::Fixed { name } => format!("family=fixed name={name}"),
        };
        format!("# gen {body}")
    }
}

fn check_prob(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )))
    }
}

/// Clique on `0..clique_size`, independent set after it. Cross pairs are
/// drawn with `chance(attach_prob)`, independent vertex outer, clique
/// vertex inner, both ascending.
pub fn gen_split(
    clique_size: usize,
    indep_size: usize,
    attach_prob: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    if clique_size == 0 {
        return Err(GenError::InvalidParameter(
            "clique_size must be at least 1".into(),
        ));
    }
    check_prob(attach_prob)?;
    let mut rng = StreamRng::new(seed);
    Ok(split_with(clique_size, indep_size, attach_prob, &mut rng))
}

fn split_with(
    clique_size: usize,
    indep_size: usize,
    attach_prob: f64,
    rng: &mut StreamRng,
) -> Graph {
    let n = clique_size + indep_size;
    let mut edges: Vec<(VertexId, VertexId)> = (0..clique_size)
        .flat_map(|u| (u + 1..clique_size).map(move |v| (u, v)))
        .collect();
    for d in clique_size..n {
        for q in 0..clique_size {
            if rng.chance(attach_prob) {
                edges.push((q, d));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated ids in range")
}

/// Random chordal graph grown so that ascending vertex order reversed is a
/// perfect elimination ordering.
///
/// Vertex `i >= 1` draws an anchor `j = below(i)`, then scans the earlier
/// neighbors of `j` ascending, keeping each with `chance(edge_prob)` when it
/// is adjacent to everything kept so far. `i` joins the kept clique.
pub fn random_chordal(n: usize, edge_prob: f64, rng: &mut StreamRng) -> Graph {
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.below(i as u64) as usize;
        let mut kept = vec![j];
        let mut earlier = adj[j].clone();
        earlier.sort_unstable();
        for u in earlier {
            if rng.chance(edge_prob) && kept.iter().all(|&k| adj[k].contains(&u)) {
                kept.push(u);
            }
        }
        for &k in &kept {
            adj[k].push(i);
            adj[i].push(k);
            edges.push((k, i));
        }
    }
    Graph::from_edges(n, edges).expect("generated ids in range")
}

/// Complement of [`random_chordal`]; always 2K2-free.
pub fn gen_co_chordal(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::InvalidParameter("n must be at least 1".into()));
    }
    check_prob(edge_prob)?;
    let mut rng = StreamRng::new(seed);
    Ok(random_chordal(n, edge_prob, &mut rng).complement())
}

/// One split or co-chordal graph on `n` vertices with randomly drawn
/// parameters. `dense` biases toward graphs likely to be 2-tough.
///
/// Draw order: family `below(2)`; split: independent size
/// `range(1, max(1, n / 3))`, probability from `unit()`, then the graph;
/// co-chordal: probability from `unit()`, then the graph.
pub fn gen_candidate(n: usize, dense: bool, rng: &mut StreamRng) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    if rng.below(2) == 0 {
        let indep = (rng.range(1, (n as u64 / 3).max(1)) as usize).min(n - 1);
        let u = rng.unit();
        let p = if dense {
            0.55 + 0.45 * u
        } else {
            0.1 + 0.5 * u
        };
        split_with(n - indep, indep, p, rng)
    } else {
        let u = rng.unit();
        let p = if dense { 0.4 * u } else { 0.3 + 0.7 * u };
        random_chordal(n, p, rng).complement()
    }
}

/// First dense candidate that is 2K2-free and 2-tough.
pub fn gen_filtered_2tough(n: usize, seed: u64, max_attempts: usize) -> Result<Graph, GenError> {
    if n > DEFAULT_TOUGHNESS_LIMIT {
        return Err(AnalysisError::TooLarge {
            n,
            limit: DEFAULT_TOUGHNESS_LIMIT,
        }
        .into());
    }
    let mut rng = StreamRng::new(seed);
    for _ in 0..max_attempts {
        let g = gen_candidate(n, true, &mut rng);
        if is_2k2_free(&g)
            && toughness_at_least(&g, Ratio::from_integer(2), DEFAULT_TOUGHNESS_LIMIT)?
        {
            return Ok(g);
        }
    }
    Err(GenError::Exhausted(max_attempts))
}

/// The two worked examples.
///
/// `G1`: K4 on q1..q4 = 0..3, d1 = 4 on {q1, q2}, d2 = 5 on {q3, q4}.
///
/// `G2`: K4 on a..d = 0..3, e = 4, f = 5, g = 6 with ef, e on {a, b, d},
/// f on {a, c}, g on {c, d}. The edge `ed` keeps `ef`/`gd` from inducing a
/// 2K2.
pub fn fixed_graph(name: &str) -> Result<Graph, GenError> {
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let (n, extra): (usize, &[(VertexId, VertexId)]) = match name {
        "G1" => (6, &[(4, 0), (4, 1), (5, 2), (5, 3)]),
        "G2" => (
            7,
            &[
                (4, 5),
                (4, 0),
                (4, 1),
                (4, 3),
                (5, 0),
                (5, 2),
                (6, 2),
                (6, 3),
            ],
        ),
        _ => return Err(GenError::UnknownFixed(name.to_string())),
    };
    Ok(Graph::from_edges(n, k4.iter().chain(extra).copied()).expect("fixed edge lists are valid"))
}
