//! Four-way classification of 2-colored complete graphs by the diameters of
//! their two color classes, with structural witnesses, and the constructive
//! spanning subgraph of diameter at most 3 that follows from it.
//!
//! Roles: after an optional swap, the "large" color has the larger diameter
//! (ties keep color 1 as large). Then exactly one case holds:
//!
//! * I: large diameter > 3 (including disconnected). The small color has
//!   diameter at most 2 and the graph is a blow-up of the house skeleton with
//!   the small color as its dense color.
//! * II: both diameters are 3. Both colors have spanning double stars, and any
//!   two base edges of different colors span a `P_4^2`.
//! * III: large 3, small 2. The small color has a spanning double star.
//! * IV: both diameters at most 2.

use crate::error::{ensure_in_range, Error, Result};
use crate::graph::{Color, ColoredGraph, Distance};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaCase {
    I,
    II,
    III,
    IV,
}

/// Vertex partition `{x1} ∪ {x2} ∪ A3 ∪ A4 ∪ A5` placing a graph in a house
/// family. The dense color is the color of `x1 x2`: color 1 for the first
/// family, color 2 when `swapped_colors` is set.
///
/// Forced colors, with `D` dense and `O` the other color:
/// `x1 x2`, `[x1, A4]`, `[x2, A3]`, `[A3, A4]`, `[{x1, x2}, A5]` are `D`;
/// `[x1, A3]` and `[x2, A4]` are `O`. Pairs inside a part and in `[A3, A5]`,
/// `[A4, A5]` are free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HouseDecomposition {
    pub x1: usize,
    pub x2: usize,
    pub a3: VertexSet,
    pub a4: VertexSet,
    pub a5: VertexSet,
    pub swapped_colors: bool,
}

impl HouseDecomposition {
    pub fn dense_color(&self) -> Color {
        if self.swapped_colors {
            Color::BLUE
        } else {
            Color::RED
        }
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::singleton(self.x1).with(self.x2) | self.a3 | self.a4 | self.a5
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CaseWitness {
    House(HouseDecomposition),
    /// Base edges of spanning double stars in color 1 and color 2.
    Bases {
        red: (usize, usize),
        blue: (usize, usize),
    },
    /// Base edge of a spanning double star in the small color.
    DoubleStar { color: Color, base: (usize, usize) },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassifierVerdict {
    pub case: LemmaCase,
    /// Set when color 2 has the strictly larger diameter.
    pub role_swap: bool,
    /// Diameters of color 1 and color 2 on the classified set.
    pub diameters: [Distance; 2],
    pub witness: CaseWitness,
}

impl ClassifierVerdict {
    pub fn large_color(&self) -> Color {
        if self.role_swap {
            Color::BLUE
        } else {
            Color::RED
        }
    }

    pub fn small_color(&self) -> Color {
        self.large_color().other()
    }

    pub fn diameter(&self, c: Color) -> Distance {
        self.diameters[c.index()]
    }

    /// A color of diameter at most 2, if the case provides one (every case
    /// except II). Ties go to color 1.
    pub fn color_within_two(&self) -> Option<Color> {
        match self.case {
            LemmaCase::II => None,
            LemmaCase::IV => Some(Color::RED),
            LemmaCase::I | LemmaCase::III => Some(self.small_color()),
        }
    }
}

/// Classifies `G`, which must be a 2-colored complete graph on at least two
/// vertices.
pub fn classify_complete(g: &ColoredGraph) -> Result<ClassifierVerdict> {
    classify_complete_on(g, g.vertices())
}

/// Classifies the complete subgraph `G[s]`; witnesses use original labels.
pub fn classify_complete_on(g: &ColoredGraph, s: VertexSet) -> Result<ClassifierVerdict> {
    g.require_two_colors()?;
    ensure_in_range(s, g.n())?;
    if s.len() < 2 {
        return Err(Error::TooFewVertices { n: s.len(), min: 2 });
    }
    g.require_complete_on(s)?;

    let diameters = [
        g.diameter_unchecked(Color::RED, s),
        g.diameter_unchecked(Color::BLUE, s),
    ];
    let role_swap = diameters[0] < diameters[1];
    let (large, small) = if role_swap {
        (Color::BLUE, Color::RED)
    } else {
        (Color::RED, Color::BLUE)
    };
    let (dl, ds) = (diameters[large.index()], diameters[small.index()]);
    let verdict = |case, witness| ClassifierVerdict {
        case,
        role_swap,
        diameters,
        witness,
    };

    if !dl.at_most(3) {
        if !ds.at_most(2) {
            return Err(Error::invariant(
                "classify/I",
                format!("large diameter {dl} but small diameter {ds}"),
            ));
        }
        let (x1, x2) = far_pair(g, large, s).ok_or_else(|| {
            Error::invariant("classify/I", "no pair at distance > 3 in the large color")
        })?;
        let a3 = g.color_neighbors(x1, large) & s;
        let a4 = g.color_neighbors(x2, large) & s;
        let a5 = s - a3 - a4 - VertexSet::singleton(x1).with(x2);
        let house = HouseDecomposition {
            x1,
            x2,
            a3,
            a4,
            a5,
            swapped_colors: small == Color::BLUE,
        };
        return Ok(verdict(LemmaCase::I, CaseWitness::House(house)));
    }
    match (dl, ds) {
        (Distance::Finite(3), Distance::Finite(3)) => {
            let red = double_star_bases_on(g, s, Color::RED).first().copied();
            let blue = double_star_bases_on(g, s, Color::BLUE).first().copied();
            let (Some(red), Some(blue)) = (red, blue) else {
                return Err(Error::invariant("classify/II", "missing spanning double star"));
            };
            if !spans_p42(g, red, blue) {
                return Err(Error::invariant(
                    "classify/II",
                    format!("bases {red:?} and {blue:?} do not span P4^2"),
                ));
            }
            Ok(verdict(LemmaCase::II, CaseWitness::Bases { red, blue }))
        }
        (Distance::Finite(3), Distance::Finite(2)) => {
            let base = double_star_bases_on(g, s, small).first().copied().ok_or_else(|| {
                Error::invariant("classify/III", "small color has no spanning double star")
            })?;
            Ok(verdict(
                LemmaCase::III,
                CaseWitness::DoubleStar { color: small, base },
            ))
        }
        (dl, _) if dl.at_most(2) => Ok(verdict(LemmaCase::IV, CaseWitness::None)),
        (dl, ds) => Err(Error::invariant(
            "classify",
            format!("impossible diameter pair ({dl}, {ds})"),
        )),
    }
}

/// Lexicographically least pair at distance > 3 in `G_c[s]`.
fn far_pair(g: &ColoredGraph, c: Color, s: VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|u| {
        (s - VertexSet::full(u + 1))
            .iter()
            .find(|&v| !g.mono_distance(c, s, u, v).at_most(3))
            .map(|v| (u, v))
    })
}

/// Edges `(u, v)` of color `c`, `u < v`, such that every other vertex has a
/// color-`c` edge to `u` or `v`: the bases of spanning double stars. Defined
/// for any graph; on non-complete graphs it is simply often empty.
pub fn double_star_bases(g: &ColoredGraph, c: Color) -> Vec<(usize, usize)> {
    double_star_bases_on(g, g.vertices(), c)
}

pub fn double_star_bases_on(g: &ColoredGraph, s: VertexSet, c: Color) -> Vec<(usize, usize)> {
    let mut bases = Vec::new();
    for u in s {
        let nu = g.color_neighbors(u, c);
        for v in (nu & s) - VertexSet::full(u + 1) {
            let dominated = nu | g.color_neighbors(v, c) | VertexSet::singleton(u).with(v);
            if s.is_subset(dominated) {
                bases.push((u, v));
            }
        }
    }
    bases
}

/// Whether the endpoints of two disjoint edges induce a complete graph in
/// which both colors form a path with three edges.
pub fn spans_p42(g: &ColoredGraph, e: (usize, usize), f: (usize, usize)) -> bool {
    let quad: VertexSet = [e.0, e.1, f.0, f.1].into_iter().collect();
    quad.len() == 4
        && g.colors() == 2
        && g.is_complete_on(quad)
        && Color::all(2).all(|c| g.diameter_unchecked(c, quad) == Distance::Finite(3))
}

/// A color whose class spans the vertex set with diameter at most 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanningColor {
    pub color: Color,
    pub diameter: u32,
}

/// Every 2-colored complete graph has a color of diameter at most 3.
pub fn spanning_mono_small_diameter(g: &ColoredGraph) -> Result<SpanningColor> {
    spanning_mono_small_diameter_on(g, g.vertices())
}

/// Case I uses the small color, II uses color 1, III the small color (which
/// carries the double star), IV color 1.
pub fn spanning_mono_small_diameter_on(g: &ColoredGraph, s: VertexSet) -> Result<SpanningColor> {
    g.require_two_colors()?;
    match s.len() {
        0 => Err(Error::EmptyVertexSet),
        1 => {
            ensure_in_range(s, g.n())?;
            Ok(SpanningColor {
                color: Color::RED,
                diameter: 0,
            })
        }
        _ => {
            let verdict = classify_complete_on(g, s)?;
            let color = match verdict.case {
                LemmaCase::I | LemmaCase::III => verdict.small_color(),
                LemmaCase::II | LemmaCase::IV => Color::RED,
            };
            match verdict.diameter(color) {
                Distance::Finite(d) if d <= 3 => Ok(SpanningColor { color, diameter: d }),
                other => Err(Error::invariant(
                    "spanning_mono_small_diameter",
                    format!("chosen color {color:?} has diameter {other}"),
                )),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HouseVerdict {
    Member,
    Violation {
        u: usize,
        v: usize,
        expected: Color,
        found: Option<Color>,
    },
}

/// Checks every skeleton-forced color of a supplied decomposition of `V`.
pub fn check_house_membership(g: &ColoredGraph, dec: &HouseDecomposition) -> Result<HouseVerdict> {
    check_house_membership_on(g, g.vertices(), dec)
}

pub fn check_house_membership_on(
    g: &ColoredGraph,
    s: VertexSet,
    dec: &HouseDecomposition,
) -> Result<HouseVerdict> {
    g.require_two_colors()?;
    let parts = [
        VertexSet::singleton(dec.x1),
        VertexSet::singleton(dec.x2),
        dec.a3,
        dec.a4,
        dec.a5,
    ];
    if dec.x1 >= g.n() || dec.x2 >= g.n() || dec.x1 == dec.x2 {
        return Err(Error::InvalidDecomposition(format!(
            "x1 = {} and x2 = {} must be distinct vertices",
            dec.x1, dec.x2
        )));
    }
    let mut union = VertexSet::EMPTY;
    for p in parts {
        if p.intersects(union) {
            return Err(Error::InvalidDecomposition(format!(
                "parts overlap in {}",
                p & union
            )));
        }
        union |= p;
    }
    if union != s {
        return Err(Error::InvalidDecomposition(format!(
            "parts cover {union}, expected {s}"
        )));
    }
    g.require_complete_on(s)?;

    let dense = dec.dense_color();
    let other = dense.other();
    let x1 = VertexSet::singleton(dec.x1);
    let x2 = VertexSet::singleton(dec.x2);
    let forced = [
        (x1, x2, dense),
        (x1, dec.a4, dense),
        (x2, dec.a3, dense),
        (dec.a3, dec.a4, dense),
        (x1 | x2, dec.a5, dense),
        (x1, dec.a3, other),
        (x2, dec.a4, other),
    ];
    for (left, right, expected) in forced {
        for u in left {
            for v in right {
                let found = g.color(u, v);
                if found != Some(expected) {
                    return Ok(HouseVerdict::Violation {
                        u,
                        v,
                        expected,
                        found,
                    });
                }
            }
        }
    }
    Ok(HouseVerdict::Member)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_antihole, gen_p42, house_skeleton, AntiholeScheme};

    fn all_red(n: usize) -> ColoredGraph {
        ColoredGraph::from_fn(n, 2, |_, _| Some(Color::RED))
    }

    fn c5_split() -> ColoredGraph {
        ColoredGraph::from_fn(5, 2, |u, v| {
            let d = (v - u).min(5 - (v - u));
            Some(if d == 1 { Color::RED } else { Color::BLUE })
        })
    }

    #[test]
    fn monochromatic_is_case_one() {
        let g = all_red(4);
        let v = classify_complete(&g).unwrap();
        assert_eq!(v.case, LemmaCase::I);
        assert!(v.role_swap);
        assert_eq!(v.small_color(), Color::RED);
        let CaseWitness::House(house) = &v.witness else {
            panic!("expected a house witness")
        };
        assert_eq!((house.x1, house.x2), (0, 1));
        assert_eq!(house.a5, [2, 3].into_iter().collect());
        assert!(!house.swapped_colors);
        assert_eq!(check_house_membership(&g, house), Ok(HouseVerdict::Member));
    }

    #[test]
    fn p42_is_case_two() {
        let g = gen_p42(1).unwrap();
        let v = classify_complete(&g).unwrap();
        assert_eq!(v.case, LemmaCase::II);
        assert_eq!(
            v.witness,
            CaseWitness::Bases {
                red: (0, 1),
                blue: (2, 3)
            }
        );
        assert_eq!(double_star_bases(&g, Color::RED), vec![(0, 1)]);
    }

    #[test]
    fn two_five_cycles_are_case_four() {
        let g = c5_split();
        assert_eq!(classify_complete(&g).unwrap().case, LemmaCase::IV);
        assert_eq!(
            spanning_mono_small_diameter(&g),
            Ok(SpanningColor {
                color: Color::RED,
                diameter: 2
            })
        );
    }

    #[test]
    fn double_star_bases_examples() {
        assert_eq!(double_star_bases(&all_red(4), Color::RED).len(), 6);
        let c7 = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        assert!(double_star_bases(&c7, Color::RED).is_empty());
    }

    #[test]
    fn spanning_color_examples() {
        assert_eq!(
            spanning_mono_small_diameter(&all_red(6)),
            Ok(SpanningColor {
                color: Color::RED,
                diameter: 1
            })
        );
        assert_eq!(
            spanning_mono_small_diameter(&gen_p42(1).unwrap()),
            Ok(SpanningColor {
                color: Color::RED,
                diameter: 3
            })
        );
        let single = ColoredGraph::empty(1, 2);
        assert_eq!(spanning_mono_small_diameter(&single).unwrap().diameter, 0);
    }

    #[test]
    fn preconditions() {
        let c7 = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        assert!(matches!(classify_complete(&c7), Err(Error::NotComplete { .. })));
        assert!(matches!(
            classify_complete(&ColoredGraph::empty(1, 2)),
            Err(Error::TooFewVertices { .. })
        ));
        let three = ColoredGraph::from_fn(3, 3, |_, _| Some(Color::RED));
        assert!(matches!(classify_complete(&three), Err(Error::WrongColorCount { .. })));
    }

    #[test]
    fn skeleton_membership() {
        let g = house_skeleton(Color::RED, Color::BLUE);
        let dec = HouseDecomposition {
            x1: 0,
            x2: 1,
            a3: VertexSet::singleton(2),
            a4: VertexSet::singleton(3),
            a5: VertexSet::singleton(4),
            swapped_colors: false,
        };
        assert_eq!(check_house_membership(&g, &dec), Ok(HouseVerdict::Member));

        let recolored = ColoredGraph::from_fn(5, 2, |u, v| {
            if (u, v) == (0, 2) {
                Some(Color::RED)
            } else {
                g.color(u, v)
            }
        });
        assert_eq!(
            check_house_membership(&recolored, &dec),
            Ok(HouseVerdict::Violation {
                u: 0,
                v: 2,
                expected: Color::BLUE,
                found: Some(Color::RED)
            })
        );

        let overlapping = HouseDecomposition {
            a5: VertexSet::singleton(3),
            ..dec.clone()
        };
        assert!(matches!(
            check_house_membership(&g, &overlapping),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
