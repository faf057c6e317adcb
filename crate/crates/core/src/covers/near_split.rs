//! (3,3)-covers when `V - {v}` splits into two cliques and `v` misses exactly
//! one vertex of each.

use super::Builder;
use crate::cert::CoverCertificate;
use crate::classify::{classify_complete_on, CaseWitness, LemmaCase};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::vertex_set::VertexSet;

/// `V = {v} ∪ K' ∪ K''` with `K'`, `K''` disjoint cliques; `v1 ∈ K'` and
/// `v2 ∈ K''` are the only vertices not adjacent to `v`, and `v1 v2` is an
/// edge (otherwise `{v, v1, v2}` would be independent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearSplitStructure {
    pub v: usize,
    pub k_prime: VertexSet,
    pub k_double_prime: VertexSet,
    pub v1: usize,
    pub v2: usize,
}

impl NearSplitStructure {
    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidNearSplit(msg));
        let all = g.vertices();
        if self.v >= g.n() {
            return bad(format!("v = {} is not a vertex", self.v));
        }
        if self.k_prime.intersects(self.k_double_prime) {
            return bad("the two cliques overlap".into());
        }
        if self.k_prime | self.k_double_prime != all.without(self.v)
            || self.k_prime.contains(self.v)
            || self.k_double_prime.contains(self.v)
        {
            return bad("the two cliques must partition V - {v}".into());
        }
        if !self.k_prime.contains(self.v1) || !self.k_double_prime.contains(self.v2) {
            return bad("v1 must lie in K' and v2 in K''".into());
        }
        for (name, k) in [("K'", self.k_prime), ("K''", self.k_double_prime)] {
            if let Some((u, w)) = g.missing_pair(k) {
                return bad(format!("{name} is not complete: ({u}, {w}) missing"));
            }
        }
        let missed = g.non_neighbors(self.v, all);
        if missed != VertexSet::singleton(self.v1).with(self.v2) {
            return bad(format!(
                "v = {} must miss exactly v1 = {} and v2 = {}, misses {missed}",
                self.v, self.v1, self.v2
            ));
        }
        if !g.adjacent(self.v1, self.v2) {
            return bad(format!(
                "v1 = {} and v2 = {} are not adjacent, so alpha > 2",
                self.v1, self.v2
            ));
        }
        Ok(())
    }
}

/// First structure found scanning `v` upward. `K'` is the side containing the
/// smaller non-neighbor of `v`; free complement components put their lowest
/// vertex in `K'`.
pub fn detect_near_split(g: &ColoredGraph) -> Option<NearSplitStructure> {
    let all = g.vertices();
    (0..g.n()).find_map(|v| {
        let missed = g.non_neighbors(v, all);
        if missed.len() != 2 {
            return None;
        }
        let v1 = missed.first()?;
        let v2 = missed.without(v1).first()?;
        if !g.adjacent(v1, v2) {
            return None;
        }
        let rest = all.without(v);
        // Two-color the complement of G - v one component at a time.
        let mut k1 = VertexSet::EMPTY;
        let mut k2 = VertexSet::EMPTY;
        let mut unvisited = rest;
        let roots = std::iter::once(v1).chain(std::iter::once(v2)).chain(rest.iter());
        for root in roots {
            if !unvisited.contains(root) {
                continue;
            }
            let root_in_k2 = root == v2;
            unvisited.remove(root);
            if root_in_k2 {
                k2.insert(root);
            } else {
                k1.insert(root);
            }
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let u_in_k1 = k1.contains(u);
                for w in g.non_neighbors(u, rest) {
                    if unvisited.contains(w) {
                        unvisited.remove(w);
                        if u_in_k1 {
                            k2.insert(w);
                        } else {
                            k1.insert(w);
                        }
                        stack.push(w);
                    } else if k1.contains(w) == u_in_k1 {
                        return None;
                    }
                }
            }
        }
        if !k1.contains(v1) || !k2.contains(v2) {
            return None;
        }
        Some(NearSplitStructure {
            v,
            k_prime: k1,
            k_double_prime: k2,
            v1,
            v2,
        })
    })
}

/// Color of diameter at most 2 on a clique, if one exists. A single vertex
/// counts as color 1 with diameter 0.
fn tight_color(g: &ColoredGraph, k: VertexSet) -> Result<Option<Color>> {
    if k.len() == 1 {
        return Ok(Some(Color::RED));
    }
    Ok(classify_complete_on(g, k)?.color_within_two())
}

pub fn cover_near_split(g: &ColoredGraph, s: &NearSplitStructure) -> Result<CoverCertificate> {
    g.require_two_colors()?;
    s.validate(g)?;
    let mut b = Builder::new(g);
    let v = s.v;
    let vs = VertexSet::singleton(v);

    let c1 = tight_color(g, s.k_prime)?;
    let c2 = tight_color(g, s.k_double_prime)?;
    if let (Some(c1), Some(c2)) = (c1, c2) {
        let (k1, k2, v1, v2) = (s.k_prime, s.k_double_prime, s.v1, s.v2);
        b.note(format!("case 1: K' has {c1:?} diameter <= 2, K'' has {c2:?} diameter <= 2"));
        let into = |k: VertexSet, c: Color| (g.color_neighbors(v, c) & k).first();
        if let Some(w) = into(k1, c1) {
            b.note(format!("edge ({v},{w}) is {c1:?}: attach v to K'"));
            b.push(c1, k1 | vs, 3, "near-split/case1")?;
            b.push(c2, k2, 2, "near-split/case1")?;
        } else if let Some(w) = into(k2, c2) {
            b.note(format!("edge ({v},{w}) is {c2:?}: attach v to K''"));
            b.push(c1, k1, 2, "near-split/case1")?;
            b.push(c2, k2 | vs, 3, "near-split/case1")?;
        } else if g.color_neighbors(v1, c1.other()).intersects(k1) {
            b.note(format!("v1 = {v1} has a {:?} edge into K': star of v extended at v1", c1.other()));
            b.push(c1.other(), k1 | vs, 3, "near-split/case1")?;
            b.push(c2, k2, 2, "near-split/case1")?;
        } else if g.color_neighbors(v2, c2.other()).intersects(k2) {
            b.note(format!("v2 = {v2} has a {:?} edge into K'': star of v extended at v2", c2.other()));
            b.push(c1, k1, 2, "near-split/case1")?;
            b.push(c2.other(), k2 | vs, 3, "near-split/case1")?;
        } else {
            let bridge = g
                .color(v1, v2)
                .ok_or_else(|| Error::invariant("near-split/case1", "v1 v2 is not an edge"))?;
            let pair = VertexSet::singleton(v1).with(v2);
            if c1 == c2 {
                b.note(format!("K' and K'' share color {c1:?}: star of v plus edge ({v1},{v2})"));
                b.push(c1.other(), (k1 | k2 | vs) - pair, 2, "near-split/case1-star")?;
                b.push(bridge, pair, 1, "near-split/case1-edge")?;
            } else if bridge == c1 {
                b.note(format!("edge ({v1},{v2}) is {c1:?}: star of v1 plus v2, and {c1:?} star of v"));
                b.push(c1, k1 | pair, 2, "near-split/case1-stars")?;
                b.push(c1, (k2 | vs).without(v2), 2, "near-split/case1-stars")?;
            } else {
                b.note(format!("edge ({v1},{v2}) is {c2:?}: star of v2 plus v1, and {c2:?} star of v"));
                b.push(c2, k2 | pair, 2, "near-split/case1-stars")?;
                b.push(c2, (k1 | vs).without(v1), 2, "near-split/case1-stars")?;
            }
        }
        return Ok(b.finish());
    }

    // Case 2: one clique has diameter 3 in both colors.
    let (k1, k2, v1) = if c1.is_none() {
        (s.k_prime, s.k_double_prime, s.v1)
    } else {
        b.note("exchange K' and K'': K'' has diameter 3 in both colors");
        (s.k_double_prime, s.k_prime, s.v2)
    };
    let verdict = classify_complete_on(g, k1)?;
    let CaseWitness::Bases { red, blue } = verdict.witness else {
        return Err(Error::invariant(
            "near-split/case2",
            format!("clique {k1} expected in case II, got {:?}", verdict.case),
        ));
    };
    debug_assert_eq!(verdict.case, LemmaCase::II);
    let (base, base_color) = if red.0 != v1 && red.1 != v1 {
        (red, Color::RED)
    } else {
        (blue, Color::BLUE)
    };
    let other = base_color.other();
    b.note(format!(
        "case 2: clique {k1} has diameter 3 in both colors; base ({},{}) of color {base_color:?} avoids v1 = {v1}",
        base.0, base.1
    ));
    if g.color(v, base.0) == Some(base_color) || g.color(v, base.1) == Some(base_color) {
        b.note("v joins the double star of the base color");
        b.push(base_color, k1 | vs, 3, "near-split/case2-double-star")?;
    } else {
        b.note(format!(
            "both edges from v to the base are {other:?}: v is at distance 2 from both ends of the {other:?} base"
        ));
        b.push(other, k1 | vs, 3, "near-split/case2-five-cycle")?;
    }
    b.push_spanning(k2, "near-split/case2-other-clique")?;
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_cover;
    use crate::generators::{gen_antihole, AntiholeScheme};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn detects_c7_structure() {
        let g = gen_antihole(3, AntiholeScheme::Uniform(Color::RED)).unwrap();
        let s = detect_near_split(&g).unwrap();
        assert_eq!(
            s,
            NearSplitStructure {
                v: 0,
                k_prime: set(&[1, 3, 5]),
                k_double_prime: set(&[2, 4, 6]),
                v1: 1,
                v2: 6
            }
        );
        assert!(s.validate(&g).is_ok());
    }

    #[test]
    fn detection_negatives() {
        assert_eq!(detect_near_split(&ColoredGraph::empty(3, 2)), None);
        let k5 = ColoredGraph::from_fn(5, 2, |_, _| Some(Color::RED));
        assert_eq!(detect_near_split(&k5), None);
    }

    #[test]
    fn c7_star_three_three() {
        let g = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        let s = NearSplitStructure {
            v: 0,
            k_prime: set(&[1, 3, 5]),
            k_double_prime: set(&[2, 4, 6]),
            v1: 1,
            v2: 6,
        };
        let cert = cover_near_split(&g, &s).unwrap();
        assert!(verify_cover(&g, &cert).is_accept());
        assert!(cert.len() <= 2 && cert.max_bound() <= 3);
        assert!(cert.bounds().contains(&3), "a (2,2) cover cannot exist");
    }

    #[test]
    fn monochromatic_gives_two_one() {
        let g = gen_antihole(3, AntiholeScheme::Uniform(Color::RED)).unwrap();
        let s = detect_near_split(&g).unwrap();
        let cert = cover_near_split(&g, &s).unwrap();
        assert!(verify_cover(&g, &cert).is_accept());
        let mut bounds = cert.bounds();
        bounds.sort_unstable();
        assert!(bounds[0] <= 1 && bounds[1] <= 2, "bounds {bounds:?}");
    }

    #[test]
    fn invalid_structure_rejected() {
        let g = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        let s = NearSplitStructure {
            v: 0,
            k_prime: set(&[1, 2, 3]),
            k_double_prime: set(&[4, 5, 6]),
            v1: 1,
            v2: 6,
        };
        assert!(matches!(cover_near_split(&g, &s), Err(Error::InvalidNearSplit(_))));
    }
}
