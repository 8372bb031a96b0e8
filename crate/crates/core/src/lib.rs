//! Constructive 2-walks for 2-tough 2K2-free graphs.
//!
//! The pipeline peels a clique tower off the input, picks two matching
//! edges per independent vertex, Eulerizes an auxiliary multigraph over the
//! tower, lifts it to a degree-2/4 spanning subgraph of the doubled graph and
//! reads the walk off an Euler circuit. Every stage has an independent
//! checker in [`verifier`] and the brute-force oracles in [`analysis`].

pub mod analysis;
pub mod cli;
pub mod decomposition;
pub mod first_class;
pub mod gamma;
pub mod generators;
pub mod graph;
pub mod h_builder;
pub mod io;
pub mod multigraph;
pub mod pipeline;
pub mod trace;
pub mod verifier;
pub mod walk;

pub use graph::{Graph, GraphError, InducedSubgraph, VertexId};
pub use multigraph::{EdgeClass, MultiEdge, MultiGraph};
pub use pipeline::{two_walk, PipelineError, TwoWalkOutcome, WalkOptions, WalkPath, WalkReport};
pub use verifier::{verify_certificate, verify_h, verify_two_walk, VerdictReport};
pub use walk::Walk;
