//! Exact answers by exhaustive search over vertex subsets: the minimum number
//! of monochromatic diameter-`d` pieces covering `V`, and whether a cover with
//! prescribed per-piece bounds exists.
//!
//! Any cover component extends to a maximal set of the same color and
//! diameter bound, so both searches only ever look at maximal candidates.

use rayon::prelude::*;

use crate::cert::{CoverCertificate, CoverComponent};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::vertex_set::VertexSet;

/// Default vertex limit for subset enumeration.
pub const ORACLE_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub limit: usize,
    /// Evaluate subsets on the current rayon pool. Results do not depend on it.
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            limit: ORACLE_LIMIT,
            parallel: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate {
    pub color: Color,
    pub vertices: VertexSet,
}

/// The inclusion-maximal vertex sets inducing diameter at most `d` in some
/// color, each tagged with the lowest such color. A set contained in another
/// candidate of a different color is dropped too, since it never helps a
/// cover. Sorted by color, then by vertex bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateFamily {
    pub d: u32,
    pub candidates: Vec<Candidate>,
}

impl CandidateFamily {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

pub fn maximal_candidates(g: &ColoredGraph, d: u32) -> Result<CandidateFamily> {
    maximal_candidates_with(g, d, &OracleConfig::default())
}

pub fn maximal_candidates_with(g: &ColoredGraph, d: u32, config: &OracleConfig) -> Result<CandidateFamily> {
    let n = g.n();
    if n > config.limit {
        return Err(Error::SizeLimit {
            what: "oracle",
            n,
            limit: config.limit,
        });
    }
    // valid[m]: lowest color in which m induces diameter at most d.
    let mut valid: Vec<Option<Color>> = vec![None; 1usize << n];
    for c in Color::all(g.colors()).collect::<Vec<_>>().into_iter().rev() {
        for (m, ok) in valid_masks(g, c, d, config.parallel).into_iter().enumerate() {
            if ok {
                valid[m] = Some(c);
            }
        }
    }
    // has_superset[m]: some superset of m, itself included, is valid.
    let size = valid.len();
    let mut has_superset: Vec<bool> = valid.iter().map(Option::is_some).collect();
    for m in (0..size).rev() {
        if !has_superset[m] {
            let missing = !m & (size - 1);
            has_superset[m] = bits(missing).any(|i| has_superset[m | 1 << i]);
        }
    }
    let mut candidates = Vec::new();
    for (m, color) in valid.iter().enumerate().skip(1) {
        let missing = !m & (size - 1);
        if let Some(color) = *color {
            if !bits(missing).any(|i| has_superset[m | 1 << i]) {
                candidates.push(Candidate {
                    color,
                    vertices: VertexSet::from_bits(m as u64),
                });
            }
        }
    }
    candidates.sort();
    Ok(CandidateFamily { d, candidates })
}

fn bits(mut m: usize) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

fn valid_masks(g: &ColoredGraph, c: Color, d: u32, parallel: bool) -> Vec<bool> {
    let size = 1usize << g.n();
    let check = |m: usize| m != 0 && g.diameter_at_most(c, VertexSet::from_bits(m as u64), d);
    if parallel && size >= 1 << 12 {
        (0..size).into_par_iter().map(check).collect()
    } else {
        (0..size).map(check).collect()
    }
}

fn component(g: &ColoredGraph, cand: Candidate) -> CoverComponent {
    let bound = g
        .diameter_unchecked(cand.color, cand.vertices)
        .finite()
        .expect("candidates are connected");
    CoverComponent {
        color: cand.color,
        vertices: cand.vertices,
        bound,
    }
}

/// Minimum number of monochromatic pieces of diameter at most `d` covering
/// every vertex, with a cover attaining it.
pub fn min_cover_exact(g: &ColoredGraph, d: u32) -> Result<(usize, CoverCertificate)> {
    min_cover_exact_with(g, d, &OracleConfig::default())
}

pub fn min_cover_exact_with(g: &ColoredGraph, d: u32, config: &OracleConfig) -> Result<(usize, CoverCertificate)> {
    let family = maximal_candidates_with(g, d, config)?;
    let sets: Vec<VertexSet> = family.candidates.iter().map(|c| c.vertices).collect();
    let chosen = SetCover::new(g.n(), &sets).solve();
    let components = chosen.iter().map(|&i| component(g, family.candidates[i])).collect();
    let cert = CoverCertificate {
        components,
        build_log: vec![format!(
            "exact minimum over {} maximal candidates of diameter <= {d}",
            family.len()
        )],
    };
    Ok((chosen.len(), cert))
}

struct SetCover<'a> {
    all: VertexSet,
    sets: &'a [VertexSet],
    /// Indices of the sets containing each vertex, largest first.
    containing: Vec<Vec<usize>>,
    /// Union of all sets containing each vertex.
    reach: Vec<VertexSet>,
    best: Vec<usize>,
}

impl<'a> SetCover<'a> {
    fn new(n: usize, sets: &'a [VertexSet]) -> Self {
        let mut containing = vec![Vec::new(); n];
        let mut reach = vec![VertexSet::EMPTY; n];
        for (i, &s) in sets.iter().enumerate() {
            for v in s {
                containing[v].push(i);
                reach[v] |= s;
            }
        }
        for list in &mut containing {
            list.sort_by_key(|&i| (std::cmp::Reverse(sets[i].len()), i));
        }
        SetCover {
            all: VertexSet::full(n),
            sets,
            containing,
            reach,
            best: Vec::new(),
        }
    }

    fn greedy(&self) -> Vec<usize> {
        let mut covered = VertexSet::EMPTY;
        let mut picked = Vec::new();
        while covered != self.all {
            let v = (self.all - covered).first().unwrap();
            let i = *self.containing[v]
                .iter()
                .max_by_key(|&&i| ((self.sets[i] - covered).len(), std::cmp::Reverse(i)))
                .unwrap();
            covered |= self.sets[i];
            picked.push(i);
        }
        picked
    }

    /// Vertices no two of which share a set each need their own piece.
    fn lower_bound(&self, uncovered: VertexSet) -> usize {
        let mut blocked = VertexSet::EMPTY;
        let mut count = 0;
        for v in uncovered {
            if !blocked.contains(v) {
                count += 1;
                blocked |= self.reach[v];
            }
        }
        count
    }

    fn solve(mut self) -> Vec<usize> {
        self.best = self.greedy();
        let mut current = Vec::new();
        self.branch(VertexSet::EMPTY, &mut current);
        self.best
    }

    fn branch(&mut self, covered: VertexSet, current: &mut Vec<usize>) {
        let uncovered = self.all - covered;
        let Some(v) = uncovered.first() else {
            if current.len() < self.best.len() {
                self.best = current.clone();
            }
            return;
        };
        if current.len() + self.lower_bound(uncovered) >= self.best.len() {
            return;
        }
        for j in 0..self.containing[v].len() {
            let i = self.containing[v][j];
            current.push(i);
            self.branch(covered | self.sets[i], current);
            current.pop();
        }
    }
}

/// A cover whose `i`-th component has diameter at most `bounds[i]`, if one
/// exists. Slots left over once every vertex is covered are filled with the
/// first candidate of their bound.
pub fn exists_bounds_cover(g: &ColoredGraph, bounds: &[u32]) -> Result<Option<CoverCertificate>> {
    exists_bounds_cover_with(g, bounds, &OracleConfig::default())
}

pub fn exists_bounds_cover_with(
    g: &ColoredGraph,
    bounds: &[u32],
    config: &OracleConfig,
) -> Result<Option<CoverCertificate>> {
    if bounds.is_empty() {
        return Err(Error::InvalidParameter("at least one bound is required".into()));
    }
    let mut distinct: Vec<u32> = bounds.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let families = distinct
        .iter()
        .map(|&d| maximal_candidates_with(g, d, config))
        .collect::<Result<Vec<_>>>()?;
    let slot_family: Vec<usize> = bounds
        .iter()
        .map(|d| distinct.binary_search(d).unwrap())
        .collect();

    let mut search = SlotSearch {
        all: g.vertices(),
        families: &families,
        slot_family: &slot_family,
        assigned: vec![None; bounds.len()],
    };
    if !search.run(VertexSet::EMPTY) {
        return Ok(None);
    }
    let mut components = Vec::with_capacity(bounds.len());
    for (slot, choice) in search.assigned.iter().enumerate() {
        let family = &families[slot_family[slot]].candidates;
        let cand = match choice {
            Some(i) => family[*i],
            None => match family.first() {
                Some(&c) => c,
                None => continue,
            },
        };
        components.push(component(g, cand));
    }
    Ok(Some(CoverCertificate {
        components,
        build_log: vec![format!("exact search over maximal candidates for bounds {bounds:?}")],
    }))
}

struct SlotSearch<'a> {
    all: VertexSet,
    families: &'a [CandidateFamily],
    slot_family: &'a [usize],
    assigned: Vec<Option<usize>>,
}

impl SlotSearch<'_> {
    fn run(&mut self, covered: VertexSet) -> bool {
        let Some(v) = (self.all - covered).first() else {
            return true;
        };
        let mut tried_families = Vec::new();
        for slot in 0..self.assigned.len() {
            if self.assigned[slot].is_some() {
                continue;
            }
            // Free slots with the same bound are interchangeable.
            let f = self.slot_family[slot];
            if tried_families.contains(&f) {
                continue;
            }
            tried_families.push(f);
            for (i, cand) in self.families[f].candidates.iter().enumerate() {
                if !cand.vertices.contains(v) {
                    continue;
                }
                self.assigned[slot] = Some(i);
                if self.run(covered | cand.vertices) {
                    return true;
                }
                self.assigned[slot] = None;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_cover;
    use crate::generators::{gen_antihole, gen_k7_triple, gen_p42, AntiholeScheme};

    #[test]
    fn p42_values() {
        let g = gen_p42(1).unwrap();
        let family = maximal_candidates(&g, 2).unwrap();
        assert!(family.candidates.iter().all(|c| c.vertices.len() == 3));
        assert_eq!(min_cover_exact(&g, 2).unwrap().0, 2);
        let (k, cert) = min_cover_exact(&g, 3).unwrap();
        assert_eq!(k, 1);
        assert_eq!(cert.components[0].bound, 3);
        assert!(verify_cover(&g, &cert).is_accept());
    }

    #[test]
    fn complete_red() {
        let g = ColoredGraph::from_fn(5, 2, |_, _| Some(Color::RED));
        let family = maximal_candidates(&g, 1).unwrap();
        assert_eq!(
            family.candidates,
            vec![Candidate {
                color: Color::RED,
                vertices: g.vertices()
            }]
        );
        let cert = exists_bounds_cover(&ColoredGraph::from_fn(4, 2, |_, _| Some(Color::RED)), &[1])
            .unwrap()
            .unwrap();
        assert_eq!(cert.len(), 1);
        assert_eq!(cert.components[0].color, Color::RED);
    }

    #[test]
    fn k7_triple_needs_three() {
        let g = gen_k7_triple(1).unwrap();
        assert_eq!(min_cover_exact(&g, 2).unwrap().0, 3);
    }

    #[test]
    fn c7_star_bounds() {
        let g = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        assert!(maximal_candidates(&g, 2).unwrap().candidates.iter().all(|c| c.vertices.len() <= 3));
        assert_eq!(exists_bounds_cover(&g, &[2, 2]).unwrap(), None);
        let cert = exists_bounds_cover(&g, &[3, 3]).unwrap().unwrap();
        assert!(verify_cover(&g, &cert).is_accept());
        assert!(cert.max_bound() <= 3);
        assert!(exists_bounds_cover(&g, &[2, 2, 2, 2]).unwrap().is_some());
    }

    #[test]
    fn limits_and_parameters() {
        let g = gen_p42(5).unwrap();
        assert!(matches!(min_cover_exact(&g, 2), Err(Error::SizeLimit { .. })));
        let small = gen_p42(1).unwrap();
        assert!(matches!(exists_bounds_cover(&small, &[]), Err(Error::InvalidParameter(_))));
        let empty = ColoredGraph::empty(0, 2);
        assert_eq!(min_cover_exact(&empty, 2).unwrap().0, 0);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let g = crate::generators::gen_random_graph(13, 0.7, 2, 4).unwrap();
        let seq = OracleConfig {
            parallel: false,
            ..OracleConfig::default()
        };
        assert_eq!(maximal_candidates(&g, 2).unwrap(), maximal_candidates_with(&g, 2, &seq).unwrap());
        assert_eq!(min_cover_exact(&g, 3).unwrap(), min_cover_exact_with(&g, 3, &seq).unwrap());
    }
}
