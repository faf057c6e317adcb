//! Covers by at most `floor(3 alpha / 2)` monochromatic components of
//! diameter at most 4, for any independence number.
//!
//! Induction on `alpha`: if two nonadjacent vertices have a common neighbor in
//! some color, three components cover them and their neighborhoods and the
//! rest has independence number at most `alpha - 2`. Otherwise every vertex
//! outside a maximum independent set `I` sees one or two vertices of `I`, and
//! the cover is built around `I` directly.

use super::alpha2::cover_alpha2_into;
use super::Builder;
use crate::cert::CoverCertificate;
use crate::classify::spanning_mono_small_diameter_on;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::vertex_set::VertexSet;

pub fn cover_general(g: &ColoredGraph) -> Result<CoverCertificate> {
    g.require_two_colors()?;
    let alpha = g.independence_number().0;
    let mut b = Builder::new(g);
    cover_general_into(&mut b, g, g.vertices())?;
    let limit = 3 * alpha / 2;
    if b.count() > limit.max(alpha) {
        return Err(Error::invariant(
            "general",
            format!("{} components for alpha = {alpha}", b.count()),
        ));
    }
    Ok(b.finish())
}

fn cover_general_into(b: &mut Builder<'_>, g: &ColoredGraph, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        return Ok(());
    }
    let independent = g.max_independent_set(s);
    let alpha = independent.len();
    match alpha {
        1 => {
            b.note(format!("alpha(G[{s}]) = 1: spanning color of the clique"));
            return b.push_spanning(s, "general/alpha1");
        }
        2 => {
            b.note(format!("alpha(G[{s}]) = 2: two-component cover"));
            return cover_alpha2_into(b, g, s);
        }
        _ => {}
    }

    if let Some((x, y, c, w)) = mono_two_path(g, s) {
        b.note(format!(
            "alpha = {alpha}: nonadjacent {x}, {y} joined through {w} in {c:?}; three components"
        ));
        let pair = VertexSet::singleton(x).with(y);
        let joined = pair | ((g.color_neighbors(x, c) | g.color_neighbors(y, c)) & s);
        b.push(c, joined, 4, "general/two-path")?;
        let other = c.other();
        for center in [x, y] {
            let leaves = g.color_neighbors(center, other) & s;
            if !leaves.is_empty() {
                b.push(other, leaves.with(center), 2, "general/two-path-star")?;
            }
        }
        let rest = s - pair - ((g.neighbors(x) | g.neighbors(y)) & s);
        let rest_alpha = g.max_independent_set(rest).len();
        if rest_alpha + 2 > alpha {
            return Err(Error::invariant(
                "general/two-path",
                format!("residual {rest} has alpha {rest_alpha}, expected at most {}", alpha - 2),
            ));
        }
        return cover_general_into(b, g, rest);
    }

    labeled_cover(b, g, s, independent)
}

/// Lexicographically least nonadjacent pair with a common neighbor in one
/// color, trying color 1 first. Returns `(x, y, color, middle)`.
fn mono_two_path(g: &ColoredGraph, s: VertexSet) -> Option<(usize, usize, Color, usize)> {
    for x in s {
        for y in g.non_neighbors(x, s) - VertexSet::full(x + 1) {
            for c in Color::all(2) {
                let common = g.color_neighbors(x, c) & g.color_neighbors(y, c) & s;
                if let Some(w) = common.first() {
                    return Some((x, y, c, w));
                }
            }
        }
    }
    None
}

/// The case where no nonadjacent pair has a monochromatic common neighbor.
fn labeled_cover(b: &mut Builder<'_>, g: &ColoredGraph, s: VertexSet, independent: VertexSet) -> Result<()> {
    let roots = independent.to_vec();
    let alpha = roots.len();
    b.note(format!(
        "alpha = {alpha}: no monochromatic 2-path between nonadjacent vertices; building around {independent}"
    ));

    // Vertices seeing exactly one root, grouped by that root.
    let mut private = vec![VertexSet::EMPTY; alpha];
    let mut shared = Vec::new();
    for v in s - independent {
        let seen = g.neighbors(v) & independent;
        match seen.len() {
            1 => {
                let i = roots.iter().position(|&u| u == seen.first().unwrap_or(usize::MAX)).unwrap();
                private[i].insert(v);
            }
            2 => {
                let (u, w) = (seen.first().unwrap(), seen.without(seen.first().unwrap()).first().unwrap());
                if g.color(v, u) == g.color(v, w) {
                    return Err(Error::invariant(
                        "general/claim1",
                        format!("{v} sees {u} and {w} in the same color"),
                    ));
                }
                shared.push(v);
            }
            k => {
                return Err(Error::invariant(
                    "general/claim1",
                    format!("{v} sends {k} edges to the independent set"),
                ))
            }
        }
    }

    // One component per root; its color is the root's label.
    let mut pieces = Vec::with_capacity(alpha);
    for (i, &u) in roots.iter().enumerate() {
        let piece = private[i].with(u);
        if let Some((p, q)) = g.missing_pair(piece) {
            return Err(Error::invariant(
                "general/claim2",
                format!("{piece} around root {u} is not complete: ({p}, {q})"),
            ));
        }
        let color = if private[i].is_empty() {
            Color::RED
        } else {
            spanning_mono_small_diameter_on(g, piece)?.color
        };
        pieces.push((color, piece));
    }
    let reds = pieces.iter().filter(|(c, _)| *c == Color::RED).count();
    let (major, minor) = if 2 * reds >= alpha {
        (Color::RED, Color::BLUE)
    } else {
        b.note("more roots labeled blue than red: leftovers get blue stars");
        (Color::BLUE, Color::RED)
    };

    let mut leftover_stars = vec![VertexSet::EMPTY; alpha];
    for v in shared {
        let home = roots
            .iter()
            .enumerate()
            .find(|&(i, &u)| g.color(v, u) == Some(pieces[i].0));
        match home {
            Some((i, _)) => pieces[i].1.insert(v),
            None => {
                let i = roots
                    .iter()
                    .position(|&u| g.color(v, u) == Some(major))
                    .filter(|&i| pieces[i].0 == minor)
                    .ok_or_else(|| {
                        Error::invariant("general/leftover", format!("{v} has no {major:?} edge to a {minor:?} root"))
                    })?;
                leftover_stars[i].insert(v);
            }
        }
    }

    for (color, piece) in &pieces {
        b.push(*color, *piece, 4, "general/root-component")?;
    }
    for (i, leaves) in leftover_stars.iter().enumerate() {
        if !leaves.is_empty() {
            b.push(major, leaves.with(roots[i]), 2, "general/leftover-star")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_cover;
    use crate::generators::{disjoint_union, gen_k7_triple, gen_matching_complement, gen_p42, random_recoloring};

    fn check(g: &ColoredGraph) -> CoverCertificate {
        let cert = cover_general(g).unwrap();
        let alpha = g.independence_number().0;
        assert!(cert.len() <= 3 * alpha / 2 || (alpha == 1 && cert.len() == 1));
        assert!(cert.max_bound() <= 4);
        assert_eq!(verify_cover(g, &cert), crate::cert::CoverVerdict::Accept);
        cert
    }

    #[test]
    fn complete_graph_one_component() {
        let g = ColoredGraph::from_fn(6, 2, |_, _| Some(Color::RED));
        let cert = check(&g);
        assert_eq!(cert.len(), 1);
        assert_eq!(cert.components[0].bound, 1);
    }

    #[test]
    fn two_p42_copies() {
        let g = gen_p42(2).unwrap();
        assert!(check(&g).len() <= 3);
    }

    #[test]
    fn matching_complement_random_colors() {
        let g = random_recoloring(&gen_matching_complement(10).unwrap(), 2, 3).unwrap();
        assert_eq!(check(&g).len(), 2);
    }

    #[test]
    fn many_disjoint_cliques() {
        // alpha = 5: every nonadjacent pair lies in different cliques, so the
        // labeled construction runs.
        let k7 = random_recoloring(&gen_k7_triple(1).unwrap(), 2, 9).unwrap();
        let g = disjoint_union(&[k7.clone(), k7.clone(), k7.clone(), gen_p42(1).unwrap(), k7]).unwrap();
        check(&g);
        let edgeless = ColoredGraph::empty(7, 2);
        assert_eq!(check(&edgeless).len(), 7);
    }
}
