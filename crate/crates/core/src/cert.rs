//! Cover certificates and their independent checker.

use std::fmt;

use crate::graph::{Color, ColoredGraph, Distance};
use crate::vertex_set::VertexSet;

/// One monochromatic piece of a cover: `G_color[vertices]` is claimed to have
/// diameter at most `bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverComponent {
    pub color: Color,
    pub vertices: VertexSet,
    pub bound: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverCertificate {
    pub components: Vec<CoverComponent>,
    /// Decisions taken while building the cover, one line each.
    pub build_log: Vec<String>,
}

impl CoverCertificate {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.components
            .iter()
            .fold(VertexSet::EMPTY, |acc, c| acc | c.vertices)
    }

    pub fn bounds(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.bound).collect()
    }

    pub fn max_bound(&self) -> u32 {
        self.components.iter().map(|c| c.bound).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverVerdict {
    Accept,
    /// Some vertices of `G` lie in no component.
    Uncovered(VertexSet),
    /// Component `index` refers to a color or vertex that does not exist, or
    /// has no vertices.
    Malformed { index: usize, reason: String },
    /// Component `index` has diameter `achieved` in its color, above its
    /// claimed bound.
    BoundExceeded {
        index: usize,
        achieved: Distance,
        bound: u32,
    },
}

impl CoverVerdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, CoverVerdict::Accept)
    }
}

impl fmt::Display for CoverVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverVerdict::Accept => write!(f, "accept"),
            CoverVerdict::Uncovered(s) => write!(f, "reject: uncovered vertices {s}"),
            CoverVerdict::Malformed { index, reason } => {
                write!(f, "reject: component {index} is malformed ({reason})")
            }
            CoverVerdict::BoundExceeded {
                index,
                achieved,
                bound,
            } => match achieved {
                Distance::Unreachable => {
                    write!(f, "reject: component {index} is disconnected in its color (bound {bound})")
                }
                Distance::Finite(d) => {
                    write!(f, "reject: component {index} has diameter {d} > bound {bound}")
                }
            },
        }
    }
}

/// Checks a certificate from scratch. Components are examined in order and the
/// first bad one is reported; coverage is checked after all components.
pub fn verify_cover(g: &ColoredGraph, cert: &CoverCertificate) -> CoverVerdict {
    let all = g.vertices();
    for (index, comp) in cert.components.iter().enumerate() {
        if comp.vertices.is_empty() {
            return CoverVerdict::Malformed {
                index,
                reason: "no vertices".into(),
            };
        }
        if !comp.vertices.is_subset(all) {
            return CoverVerdict::Malformed {
                index,
                reason: format!("vertices {} not in the graph", comp.vertices - all),
            };
        }
        if comp.color.get() > g.colors() {
            return CoverVerdict::Malformed {
                index,
                reason: format!("color {} out of range", comp.color),
            };
        }
        let achieved = g.diameter_unchecked(comp.color, comp.vertices);
        if !achieved.at_most(comp.bound) {
            return CoverVerdict::BoundExceeded {
                index,
                achieved,
                bound: comp.bound,
            };
        }
    }
    let uncovered = all - cert.covered();
    if uncovered.is_empty() {
        CoverVerdict::Accept
    } else {
        CoverVerdict::Uncovered(uncovered)
    }
}
