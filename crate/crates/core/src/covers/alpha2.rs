//! (4,4)-covers of 2-colored graphs with independence number 2.

use std::fmt;

use super::Builder;
use crate::cert::CoverCertificate;
use crate::error::{ensure_in_range, Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::vertex_set::VertexSet;

/// The other vertices classified by their colors towards a nonadjacent pair
/// `x, y`. `aij` is color `i` to `x` and color `j` to `y`; `axi` is color `i`
/// to `x` and nonadjacent to `y`, and symmetrically for `ayi`.
///
/// Colors here are relative: after [`PairPartition::swap_colors`] every "1"
/// reads as the other color.
#[derive(Clone, PartialEq, Eq)]
pub struct PairPartition {
    pub x: usize,
    pub y: usize,
    pub a11: VertexSet,
    pub a22: VertexSet,
    pub ax1: VertexSet,
    pub ax2: VertexSet,
    pub ay1: VertexSet,
    pub ay2: VertexSet,
    pub a12: VertexSet,
    pub a21: VertexSet,
}

impl PairPartition {
    pub fn kx(&self) -> VertexSet {
        self.ax1 | self.ax2 | VertexSet::singleton(self.x)
    }

    pub fn ky(&self) -> VertexSet {
        self.ay1 | self.ay2 | VertexSet::singleton(self.y)
    }

    /// Common neighborhood of `x` and `y`.
    pub fn a(&self) -> VertexSet {
        self.a11 | self.a22 | self.a12 | self.a21
    }

    pub fn swap_colors(&self) -> PairPartition {
        PairPartition {
            a11: self.a22,
            a22: self.a11,
            ax1: self.ax2,
            ax2: self.ax1,
            ay1: self.ay2,
            ay2: self.ay1,
            a12: self.a21,
            a21: self.a12,
            ..*self
        }
    }

    pub fn swap_roles(&self) -> PairPartition {
        PairPartition {
            x: self.y,
            y: self.x,
            ax1: self.ay1,
            ax2: self.ay2,
            ay1: self.ax1,
            ay2: self.ax2,
            a12: self.a21,
            a21: self.a12,
            ..*self
        }
    }
}

impl fmt::Debug for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={} y={} A11={} A22={} Ax1={} Ax2={} Ay1={} Ay2={} A12={} A21={}",
            self.x, self.y, self.a11, self.a22, self.ax1, self.ax2, self.ay1, self.ay2, self.a12, self.a21
        )
    }
}

pub fn pair_partition(g: &ColoredGraph, x: usize, y: usize) -> Result<PairPartition> {
    pair_partition_on(g, g.vertices(), x, y)
}

/// Partition of `s - {x, y}`. Fails if `x, y` are adjacent or if some
/// independent triple shows `alpha(G[s]) > 2`.
pub fn pair_partition_on(g: &ColoredGraph, s: VertexSet, x: usize, y: usize) -> Result<PairPartition> {
    g.require_two_colors()?;
    ensure_in_range(s, g.n())?;
    for w in [x, y] {
        if !s.contains(w) {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    if x == y {
        return Err(Error::SelfPair(x));
    }
    if g.adjacent(x, y) {
        return Err(Error::PairAdjacent { u: x, v: y });
    }
    let triple = |a: usize, b: usize, c: usize| {
        let mut t = [a, b, c];
        t.sort_unstable();
        Error::IndependentTriple(t)
    };
    let mut p = PairPartition {
        x,
        y,
        a11: VertexSet::EMPTY,
        a22: VertexSet::EMPTY,
        ax1: VertexSet::EMPTY,
        ax2: VertexSet::EMPTY,
        ay1: VertexSet::EMPTY,
        ay2: VertexSet::EMPTY,
        a12: VertexSet::EMPTY,
        a21: VertexSet::EMPTY,
    };
    for w in s.without(x).without(y) {
        let part = match (g.color(w, x).map(Color::get), g.color(w, y).map(Color::get)) {
            (None, None) => return Err(triple(x, y, w)),
            (Some(1), None) => &mut p.ax1,
            (Some(_), None) => &mut p.ax2,
            (None, Some(1)) => &mut p.ay1,
            (None, Some(_)) => &mut p.ay2,
            (Some(1), Some(1)) => &mut p.a11,
            (Some(1), Some(_)) => &mut p.a12,
            (Some(_), Some(1)) => &mut p.a21,
            (Some(_), Some(_)) => &mut p.a22,
        };
        part.insert(w);
    }
    // Kx and Ky are cliques unless alpha > 2.
    if let Some((u, v)) = g.missing_pair(p.kx()) {
        return Err(triple(u, v, y));
    }
    if let Some((u, v)) = g.missing_pair(p.ky()) {
        return Err(triple(u, v, x));
    }
    Ok(p)
}

/// Cover by at most two monochromatic components of diameter at most 4 for a
/// 2-colored graph with `alpha = 2`.
pub fn cover_alpha2(g: &ColoredGraph) -> Result<CoverCertificate> {
    g.require_two_colors()?;
    let mut b = Builder::new(g);
    cover_alpha2_into(&mut b, g, g.vertices())?;
    Ok(b.finish())
}

pub(crate) fn cover_alpha2_into(b: &mut Builder<'_>, g: &ColoredGraph, s: VertexSet) -> Result<()> {
    let alpha = g.max_independent_set(s).len();
    if alpha != 2 {
        return Err(Error::WrongIndependenceNumber {
            expected: 2,
            found: alpha,
        });
    }
    if let Some((left, right)) = g.complement_bipartition(s) {
        b.note(format!("complement bipartite: cliques {left} and {right}"));
        b.push_spanning(left, "alpha2/two-cliques")?;
        return b.push_spanning(right, "alpha2/two-cliques");
    }

    let hole = g
        .shortest_complement_odd_cycle(s)?
        .ok_or_else(|| Error::invariant("alpha2/antihole", "non-bipartite complement without odd cycle"))?;
    let (a, x, y) = same_colored_long_diagonals(g, &hole)?;
    b.note(format!(
        "odd antihole {hole:?}; long diagonals ({a},{x}) and ({a},{y}) share color {}",
        g.color(a, x).map_or(0, Color::get)
    ));
    let mut part = pair_partition_on(g, s, x, y)?;

    if !part.a11.is_empty() && !part.a22.is_empty() {
        b.note("both homogeneous parts nonempty: one component per color through x and y");
        let red_side = VertexSet::singleton(x).with(y) | part.ax1 | (part.a() - part.a22) | part.ay1;
        let blue_side = VertexSet::singleton(x).with(y) | part.ax2 | part.a22 | part.ay2;
        b.push(Color::RED, red_side, 4, "alpha2/both-homogeneous")?;
        return b.push(Color::BLUE, blue_side, 4, "alpha2/both-homogeneous");
    }

    let mut red = Color::RED;
    if part.a11.is_empty() {
        part = part.swap_colors();
        red = Color::BLUE;
        b.note("swap colors: the nonempty homogeneous part is blue");
    }
    let blue = red.other();

    let red_kx = g.diameter_unchecked(red, part.kx());
    let red_ky = g.diameter_unchecked(red, part.ky());
    if red_kx.at_most(3) && red_ky.at_most(3) {
        b.note(format!("Kx and Ky have {red:?} diameter at most 3"));
        b.push(red, part.kx() | part.a11 | part.a12, 4, "alpha2/red-cliques")?;
        return b.push(red, part.ky() | part.a21, 4, "alpha2/red-cliques");
    }
    if red_ky.at_most(3) {
        part = part.swap_roles();
        b.note(format!("swap roles of x and y: now x = {}, y = {}", part.x, part.y));
    }
    let (x, y) = (part.x, part.y);
    let (kx, ky) = (part.kx(), part.ky());
    let blue_ky = g.diameter_unchecked(blue, ky);
    if !blue_ky.at_most(2) {
        return Err(Error::invariant(
            "alpha2/roles",
            format!("Ky = {ky} has {red:?} diameter > 3 but {blue:?} diameter {blue_ky}"),
        ));
    }

    if g.diameter_unchecked(blue, kx).at_most(3) {
        // Case 1: Kx has blue diameter at most 3.
        let reach = part.ax2 | ky;
        let lonely = part
            .a11
            .iter()
            .find(|&z| !g.color_neighbors(z, blue).intersects(reach));
        match lonely {
            None => {
                let a11x: VertexSet = part
                    .a11
                    .iter()
                    .filter(|&z| g.color_neighbors(z, blue).intersects(part.ax2))
                    .collect();
                let a11y = part.a11 - a11x;
                b.note(format!(
                    "case 1: every A11 vertex has a {blue:?} edge into Ax2 or Ky; two {blue:?} components"
                ));
                b.push(blue, kx | a11x | part.a21, 4, "alpha2/case1-blue")?;
                b.push(blue, ky | a11y | part.a12, 4, "alpha2/case1-blue")
            }
            Some(z) => {
                let z_set = g.non_neighbors(z, reach);
                b.note(format!(
                    "case 1: A11 vertex {z} is {red:?} to all of its neighbors in Ax2 and Ky; {red:?} triple star at {x}, {z}, {y}"
                ));
                let triple = VertexSet::singleton(x).with(y)
                    | part.ax1
                    | part.a()
                    | (g.color_neighbors(z, red) & s);
                b.push(red, triple, 4, "alpha2/case1-triple-star")?;
                b.push_spanning(z_set, "alpha2/case1-nonneighbors")
            }
        }
    } else {
        // Case 2: Kx has red diameter at most 2.
        let red_kx = g.diameter_unchecked(red, kx);
        if !red_kx.at_most(2) {
            return Err(Error::invariant(
                "alpha2/case2",
                format!("Kx = {kx} has {blue:?} diameter > 3 but {red:?} diameter {red_kx}"),
            ));
        }
        let star_y = VertexSet::singleton(y) | part.ay1 | part.a11 | part.a21;
        let rest = kx | star_y;
        let mut to_kx = VertexSet::EMPTY;
        let mut to_star = VertexSet::EMPTY;
        let mut lonely = None;
        for w in part.ay2 {
            let reds = g.color_neighbors(w, red);
            if reds.intersects(kx) {
                to_kx.insert(w);
            } else if reds.intersects(star_y) {
                to_star.insert(w);
            } else if lonely.is_none() {
                lonely = Some(w);
            }
        }
        match lonely {
            None => {
                b.note(format!(
                    "case 2: every Ay2 vertex has a {red:?} edge into Kx or the {red:?} star of y"
                ));
                b.push(red, kx | part.a12 | to_kx, 4, "alpha2/case2-red")?;
                b.push(red, star_y | to_star, 4, "alpha2/case2-red")
            }
            Some(z) => {
                b.note(format!(
                    "case 2: Ay2 vertex {z} has only {blue:?} edges into the rest; {blue:?} star of y extended at {z}"
                ));
                let star = VertexSet::singleton(y) | part.ay2 | part.a12 | (g.color_neighbors(z, blue) & s);
                b.push(blue, star, 3, "alpha2/case2-blue-star")?;
                b.push_spanning(g.non_neighbors(z, rest), "alpha2/case2-nonneighbors")
            }
        }
    }
}

/// Walks the long diagonals of an odd antihole (hole order, step `k` on
/// `2k + 1` vertices) from position 0 and returns the first pair of
/// consecutive diagonals `(a, x), (a, y)` of equal color, as `(a, min, max)`.
/// `x` and `y` are consecutive on the hole, hence nonadjacent.
fn same_colored_long_diagonals(g: &ColoredGraph, hole: &[usize]) -> Result<(usize, usize, usize)> {
    let len = hole.len();
    let k = len / 2;
    let at = |j: usize| hole[(j * k) % len];
    for j in 0..len {
        let (x, a, y) = (at(j), at(j + 1), at(j + 2));
        let first = g.color(x, a);
        if first.is_some() && first == g.color(a, y) {
            return Ok((a, x.min(y), x.max(y)));
        }
    }
    Err(Error::invariant(
        "alpha2/long-diagonals",
        format!("no two consecutive long diagonals of {hole:?} share a color"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_cover;
    use crate::generators::{gen_antihole, gen_p42, gen_random_alpha2, AntiholeScheme};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn partition_of_c7() {
        let g = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        let p = pair_partition(&g, 0, 1).unwrap();
        assert_eq!(p.ax1, set(&[2]));
        assert_eq!(p.ay1, set(&[6]));
        assert_eq!(p.a12, set(&[5]));
        assert_eq!(p.a21, set(&[3]));
        assert_eq!(p.a22, set(&[4]));
        assert!(p.a11.is_empty() && p.ax2.is_empty() && p.ay2.is_empty());
    }

    #[test]
    fn partition_of_k4_minus_edge() {
        let g = ColoredGraph::from_fn(4, 2, |u, v| ((u, v) != (0, 1)).then_some(Color::RED));
        let p = pair_partition(&g, 0, 1).unwrap();
        assert_eq!(p.a11, set(&[2, 3]));
        assert_eq!(p.a(), set(&[2, 3]));
        assert_eq!(p.kx(), set(&[0]));
    }

    #[test]
    fn partition_errors() {
        let g = gen_p42(1).unwrap();
        assert_eq!(pair_partition(&g, 0, 1), Err(Error::PairAdjacent { u: 0, v: 1 }));
        let empty = ColoredGraph::empty(3, 2);
        assert_eq!(pair_partition(&empty, 0, 1), Err(Error::IndependentTriple([0, 1, 2])));
    }

    #[test]
    fn swaps_are_involutions() {
        let g = gen_random_alpha2(12, 0.3, 5).unwrap();
        let (x, y) = (0..12)
            .flat_map(|u| (u + 1..12).map(move |v| (u, v)))
            .find(|&(u, v)| !g.adjacent(u, v))
            .unwrap();
        let p = pair_partition(&g, x, y).unwrap();
        assert_eq!(p.swap_colors().swap_colors(), p);
        assert_eq!(p.swap_roles().swap_roles(), p);
        assert_eq!(pair_partition(&g, y, x).unwrap(), p.swap_roles());
        assert_eq!(pair_partition(&g.swap_colors(), x, y).unwrap(), p.swap_colors());
    }

    #[test]
    fn c7_star_is_covered() {
        let g = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        let cert = cover_alpha2(&g).unwrap();
        assert!(cert.len() <= 2);
        assert!(cert.max_bound() <= 4);
        assert!(verify_cover(&g, &cert).is_accept());
    }

    #[test]
    fn two_cliques_give_three_three() {
        let g = crate::generators::disjoint_union(&[gen_p42(1).unwrap(), gen_p42(1).unwrap()]).unwrap();
        let cert = cover_alpha2(&g).unwrap();
        assert_eq!(cert.len(), 2);
        assert!(cert.max_bound() <= 3);
        assert!(verify_cover(&g, &cert).is_accept());
    }

    #[test]
    fn monochromatic_c4() {
        let g = crate::generators::gen_matching_complement(4).unwrap();
        let cert = cover_alpha2(&g).unwrap();
        assert!(cert.len() <= 2 && cert.max_bound() <= 2);
        assert!(verify_cover(&g, &cert).is_accept());
    }

    #[test]
    fn rejects_wrong_alpha() {
        let g = gen_p42(1).unwrap();
        assert_eq!(
            cover_alpha2(&g),
            Err(Error::WrongIndependenceNumber {
                expected: 2,
                found: 1
            })
        );
    }
}
