//! End-to-end 2-walk construction with certificate and fallback handling.

use log::debug;
use num_rational::Ratio;
use thiserror::Error;

use crate::analysis::{
    find_2k2, hamiltonian_cycle_exact, two_walk_exact, AnalysisError, TwoK2Witness,
    DEFAULT_FALLBACK_LIMIT,
};
use crate::decomposition::{clique_tower, CliqueTower};
use crate::first_class::{
    certificate_from_violator, select_first_class_edges, FirstClassEdges, FirstClassOutcome,
    ToughnessCertificate,
};
use crate::gamma::{add_blue_edges, add_red_edges, GammaGraph};
use crate::graph::Graph;
use crate::h_builder::{euler_circuit, step1_first_class, step2_second_class, step3_third_class};
use crate::multigraph::MultiGraph;
use crate::verifier::verify_two_walk;
use crate::walk::Walk;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkOptions {
    /// Largest `n` handed to the exponential fallback searches.
    pub fallback_limit: usize,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions {
            fallback_limit: DEFAULT_FALLBACK_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkPath {
    Constructive,
    Fallback,
}

impl WalkPath {
    pub fn name(self) -> &'static str {
        match self {
            WalkPath::Constructive => "constructive",
            WalkPath::Fallback => "fallback",
        }
    }
}

/// Intermediates of the construction, as far as it got.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub tower: Option<CliqueTower>,
    pub first_class: Option<FirstClassEdges>,
    pub gamma: Option<GammaGraph>,
    pub h: Option<MultiGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkReport {
    pub walk: Walk,
    pub path: WalkPath,
    pub trace: Trace,
    /// Why the constructive path was abandoned.
    pub fallback_reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoWalkOutcome {
    Walk(WalkReport),
    NotTwoTough {
        certificate: ToughnessCertificate,
        trace: Trace,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("graph contains an induced 2K2 on {:?}", .0.vertices())]
    NotTwoK2Free(TwoK2Witness),
    #[error("construction failed ({reason}) and the exact searches found no 2-walk")]
    NoWalkFound { reason: String },
    #[error("construction failed ({reason}); fallback needs n <= {limit}, got {n}")]
    TooLarge {
        n: usize,
        limit: usize,
        reason: String,
    },
}

enum Stop {
    Hall(Vec<usize>),
    Failed(String),
}

/// Runs the whole pipeline on `g`.
pub fn two_walk(g: &Graph, opts: &WalkOptions) -> Result<TwoWalkOutcome, PipelineError> {
    if let Some(w) = find_2k2(g) {
        return Err(PipelineError::NotTwoK2Free(w));
    }
    let n = g.n();
    let direct = |walk: Vec<usize>| {
        Ok(TwoWalkOutcome::Walk(WalkReport {
            walk: Walk::new(walk),
            path: WalkPath::Constructive,
            trace: Trace::default(),
            fallback_reason: None,
        }))
    };
    match n {
        0 => return direct(Vec::new()),
        1 => return direct(vec![0]),
        _ => {}
    }
    if g.m() == 0 {
        return Ok(TwoWalkOutcome::NotTwoTough {
            certificate: ToughnessCertificate {
                cut: Vec::new(),
                component_count: n,
                ratio: Ratio::new(0, n as u64),
            },
            trace: Trace::default(),
        });
    }
    if g.is_complete() {
        let mut cycle: Vec<usize> = (0..n).collect();
        cycle.push(0);
        return direct(cycle);
    }

    let mut trace = Trace::default();
    let reason = match construct(g, &mut trace) {
        Ok(walk) => {
            let verdict = verify_two_walk(g, &walk);
            if verdict.ok {
                return Ok(TwoWalkOutcome::Walk(WalkReport {
                    walk,
                    path: WalkPath::Constructive,
                    trace,
                    fallback_reason: None,
                }));
            }
            format!("walk rejected: {}", verdict.summary())
        }
        Err(Stop::Hall(d0)) => match certificate_from_violator(g, &d0) {
            Ok(certificate) => return Ok(TwoWalkOutcome::NotTwoTough { certificate, trace }),
            Err(e) => format!("Hall violator {d0:?}: {e}"),
        },
        Err(Stop::Failed(reason)) => reason,
    };
    debug!("falling back: {reason}");
    let walk = fallback(g, opts.fallback_limit, &reason)?;
    Ok(TwoWalkOutcome::Walk(WalkReport {
        walk,
        path: WalkPath::Fallback,
        trace,
        fallback_reason: Some(reason),
    }))
}

fn construct(g: &Graph, trace: &mut Trace) -> Result<Walk, Stop> {
    let failed = |e: &dyn std::fmt::Display| Stop::Failed(e.to_string());
    let tower = clique_tower(g).map_err(|e| failed(&e))?;
    trace.tower = Some(tower.clone());
    let e = match select_first_class_edges(g, &tower) {
        FirstClassOutcome::Matched(e) => e,
        FirstClassOutcome::HallViolator(d0) => return Err(Stop::Hall(d0)),
    };
    trace.first_class = Some(e.clone());
    let gamma = add_blue_edges(&tower, &e)
        .and_then(add_red_edges)
        .map_err(|e| failed(&e))?;
    trace.gamma = Some(gamma.clone());
    let mut h = step1_first_class(g.n(), &e);
    let built = step2_second_class(g, &tower, &gamma, &mut h)
        .and_then(|_| step3_third_class(g, &tower, &mut h));
    trace.h = Some(h.clone());
    built.map_err(|e| failed(&e))?;
    euler_circuit(&h).map_err(|e| failed(&e))
}

fn fallback(g: &Graph, limit: usize, reason: &str) -> Result<Walk, PipelineError> {
    let too_large = |e: AnalysisError| match e {
        AnalysisError::TooLarge { n, limit } => PipelineError::TooLarge {
            n,
            limit,
            reason: reason.to_string(),
        },
        other => PipelineError::NoWalkFound {
            reason: format!("{reason}; {other}"),
        },
    };
    if let Some(w) = hamiltonian_cycle_exact(g, limit).map_err(too_large)? {
        return Ok(w);
    }
    two_walk_exact(g, limit)
        .map_err(too_large)?
        .ok_or_else(|| PipelineError::NoWalkFound {
            reason: reason.to_string(),
        })
}
