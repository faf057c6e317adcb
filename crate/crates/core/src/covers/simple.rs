//! Star covers, the two-clique cover, and covers through an exact minimum
//! clique cover.

use super::Builder;
use crate::cert::CoverCertificate;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::vertex_set::VertexSet;

/// Default vertex limit for [`cover_via_cliques`].
pub const CLIQUE_COVER_LIMIT: usize = 24;

/// At most `r * alpha` stars centered on a maximum independent set. Works for
/// any number of colors.
pub fn cover_stars(g: &ColoredGraph) -> Result<CoverCertificate> {
    let (alpha, independent) = g.independence_number();
    let mut b = Builder::new(g);
    b.note(format!("stars around the independent set {independent} (alpha = {alpha})"));
    for u in independent {
        let mut any = false;
        for c in Color::all(g.colors()) {
            let leaves = g.color_neighbors(u, c);
            if !leaves.is_empty() {
                b.push(c, leaves.with(u), 2, "stars")?;
                any = true;
            }
        }
        if !any {
            b.push(Color::RED, VertexSet::singleton(u), 0, "stars/isolated")?;
        }
    }
    Ok(b.finish())
}

/// Spanning color on each side of a graph whose complement is bipartite.
pub fn two_clique_cover(g: &ColoredGraph) -> Result<CoverCertificate> {
    g.require_two_colors()?;
    let (x, y) = g
        .complement_bipartition(g.vertices())
        .ok_or(Error::ComplementNotBipartite)?;
    let mut b = Builder::new(g);
    b.note(format!("complement is bipartite: cliques {x} and {y}"));
    b.push_spanning(x, "two-clique")?;
    b.push_spanning(y, "two-clique")?;
    Ok(b.finish())
}

pub fn cover_via_cliques(g: &ColoredGraph) -> Result<CoverCertificate> {
    cover_via_cliques_with_limit(g, CLIQUE_COVER_LIMIT)
}

pub fn cover_via_cliques_with_limit(g: &ColoredGraph, limit: usize) -> Result<CoverCertificate> {
    g.require_two_colors()?;
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "clique cover",
            n: g.n(),
            limit,
        });
    }
    let cliques = min_clique_cover(g, g.vertices());
    let mut b = Builder::new(g);
    b.note(format!("minimum clique cover of size {}", cliques.len()));
    for k in cliques {
        b.push_spanning(k, "cliques")?;
    }
    Ok(b.finish())
}

/// Exact minimum partition of `s` into cliques, by backtracking over the
/// vertices in order of decreasing degree.
pub fn min_clique_cover(g: &ColoredGraph, s: VertexSet) -> Vec<VertexSet> {
    if s.is_empty() {
        return Vec::new();
    }
    let mut order = s.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse((g.neighbors(v) & s).len()), v));

    // Greedy first fit gives the starting upper bound.
    let mut best: Vec<VertexSet> = Vec::new();
    for &v in &order {
        match best.iter_mut().find(|k| k.is_subset(g.neighbors(v))) {
            Some(k) => k.insert(v),
            None => best.push(VertexSet::singleton(v)),
        }
    }
    let lower = g.max_independent_set(s).len();
    if best.len() > lower {
        let mut current = Vec::new();
        extend(g, &order, 0, &mut current, &mut best, lower);
    }
    best.sort();
    best
}

fn extend(
    g: &ColoredGraph,
    order: &[usize],
    i: usize,
    current: &mut Vec<VertexSet>,
    best: &mut Vec<VertexSet>,
    lower: usize,
) -> bool {
    if i == order.len() {
        *best = current.clone();
        return best.len() == lower;
    }
    let v = order[i];
    let nbrs = g.neighbors(v);
    for j in 0..current.len() {
        if current[j].is_subset(nbrs) {
            current[j].insert(v);
            let done = extend(g, order, i + 1, current, best, lower);
            current[j].remove(v);
            if done {
                return true;
            }
        }
    }
    if current.len() + 1 < best.len() {
        current.push(VertexSet::singleton(v));
        let done = extend(g, order, i + 1, current, best, lower);
        current.pop();
        if done {
            return true;
        }
    }
    false
}
