//! Covers of 2-colored (and r-colored) graphs by monochromatic subgraphs of
//! bounded diameter: constructive algorithms with checkable certificates,
//! exact brute-force oracles, instance generators, and an exhaustive search
//! harness over edge colorings.
//!
//! A graph here is a simple graph on at most 64 vertices whose edges each carry
//! one of `r` colors; non-edges are uncolored. Covers may reuse vertices.

pub mod cert;
pub mod classify;
pub mod covers;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod search;
pub mod text;
pub mod vertex_set;

pub use cert::{verify_cover, CoverCertificate, CoverComponent, CoverVerdict};
pub use classify::{
    check_house_membership, classify_complete, double_star_bases, spanning_mono_small_diameter, CaseWitness,
    ClassifierVerdict, HouseDecomposition, HouseVerdict, LemmaCase, SpanningColor,
};
pub use covers::{
    cover_alpha2, cover_general, cover_near_split, cover_stars, cover_via_cliques, detect_near_split,
    two_clique_cover, NearSplitStructure,
};
pub use error::{Error, Result};
pub use graph::{Color, ColoredGraph, Distance};
pub use vertex_set::VertexSet;
