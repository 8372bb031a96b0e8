//! JSON documents emitted by the command-line tool.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decomposition::CliqueTower;
use crate::first_class::ToughnessCertificate;
use crate::gamma::GammaGraph;
use crate::graph::VertexId;
use crate::multigraph::{EdgeClass, MultiGraph};
use crate::pipeline::{Trace, WalkReport};
use crate::walk::Walk;

#[derive(Clone, Debug, Serialize)]
pub struct ClassLists {
    pub first: Vec<[VertexId; 2]>,
    pub second: Vec<[VertexId; 2]>,
    pub third: Vec<[VertexId; 2]>,
}

impl ClassLists {
    pub fn of(h: Option<&MultiGraph>) -> Self {
        let list = |class| match h {
            Some(h) => h.edges_of_class(class).map(|e| [e.u, e.v]).collect(),
            None => Vec::new(),
        };
        ClassLists {
            first: list(EdgeClass::First),
            second: list(EdgeClass::Second),
            third: list(EdgeClass::Third),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaEdgeJson {
    pub u: String,
    pub v: String,
    pub color: EdgeClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaJson {
    pub vertices: Vec<String>,
    pub edges: Vec<GammaEdgeJson>,
}

impl GammaJson {
    pub fn of(gamma: &GammaGraph) -> Self {
        let h = gamma.multigraph();
        GammaJson {
            vertices: (0..h.n()).map(|v| gamma.label(v)).collect(),
            edges: h
                .edges()
                .iter()
                .map(|e| GammaEdgeJson {
                    u: gamma.label(e.u),
                    v: gamma.label(e.v),
                    color: e.class,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HJson {
    pub degrees: Vec<usize>,
    pub edges: Vec<(VertexId, VertexId, EdgeClass)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tower: Option<CliqueTower>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_class: Option<Vec<(VertexId, VertexId)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<HJson>,
}

impl TraceJson {
    pub fn of(t: &Trace) -> Self {
        TraceJson {
            tower: t.tower.clone(),
            first_class: t.first_class.as_ref().map(|e| e.edges.clone()),
            gamma: t.gamma.as_ref().map(GammaJson::of),
            h: t.h.as_ref().map(|h| HJson {
                degrees: h.degrees().to_vec(),
                edges: h.edges().iter().map(|e| (e.u, e.v, e.class)).collect(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkJson {
    pub walk: Walk,
    pub visits: BTreeMap<VertexId, usize>,
    pub path: &'static str,
    pub classes: ClassLists,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fallback_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceJson>,
}

impl WalkJson {
    pub fn of(r: &WalkReport, with_trace: bool) -> Self {
        let constructive_h = r
            .fallback_reason
            .is_none()
            .then_some(r.trace.h.as_ref())
            .flatten();
        WalkJson {
            walk: r.walk.clone(),
            visits: r.walk.visit_counts(),
            path: r.path.name(),
            classes: ClassLists::of(constructive_h),
            fallback_reason: r.fallback_reason.clone(),
            trace: with_trace.then(|| TraceJson::of(&r.trace)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    #[serde(flatten)]
    pub certificate: ToughnessCertificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceJson>,
}
