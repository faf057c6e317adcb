//! Edge-colored simple graphs and the exact primitives every other module
//! builds on: per-color distances and diameters inside induced subgraphs,
//! independence number, and complement structure (bipartiteness, shortest odd
//! cycles).
//!
//! Adjacency is stored twice: one bit row per vertex for the underlying graph,
//! and one bit row per vertex and color. All vertex sets are [`VertexSet`]s, so
//! induced-subgraph breadth-first search is a handful of word operations per
//! level.

use std::fmt;

use crate::error::{ensure_in_range, Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Edge color, 1-based. Colors 1 and 2 are called red and blue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(u8);

impl Color {
    pub const RED: Color = Color(1);
    pub const BLUE: Color = Color(2);

    /// Panics on 0; colors are 1-based.
    pub const fn new(c: u8) -> Self {
        assert!(c >= 1, "colors are 1-based");
        Color(c)
    }

    pub const fn get(self) -> u8 {
        self.0
    }

    #[inline]
    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }

    /// The other color of a 2-coloring.
    pub fn other(self) -> Color {
        debug_assert!(self.0 == 1 || self.0 == 2);
        Color(3 - self.0)
    }

    pub fn all(r: u8) -> impl Iterator<Item = Color> + Clone {
        (1..=r).map(Color)
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            1 => write!(f, "red"),
            2 => write!(f, "blue"),
            c => write!(f, "color{c}"),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shortest-path length, or `Unreachable` when no path exists. `Unreachable`
/// orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn at_most(self, bound: u32) -> bool {
        matches!(self, Distance::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => write!(f, "inf"),
        }
    }
}

/// A simple graph on vertices `0..n` whose edges each carry one of `r` colors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    n: usize,
    r: u8,
    /// `color_of[u * n + v]`, 0 for a non-edge.
    color_of: Vec<u8>,
    adj: Vec<VertexSet>,
    /// `color_adj[c - 1][v]`.
    color_adj: Vec<Vec<VertexSet>>,
}

impl ColoredGraph {
    /// Validating constructor. Identical duplicate entries are accepted once;
    /// a pair listed with two different colors is an error.
    pub fn new(n: usize, r: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        if r == 0 {
            return Err(Error::NoColors);
        }
        if r > u8::MAX as usize {
            return Err(Error::ColorOutOfRange { color: r, r: u8::MAX as usize });
        }
        let mut g = ColoredGraph::empty(n, r as u8);
        for &(u, v, c) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfPair(u));
            }
            if c == 0 || c > r {
                return Err(Error::ColorOutOfRange { color: c, r });
            }
            let color = Color(c as u8);
            match g.color(u, v) {
                Some(existing) if existing != color => {
                    let (u, v) = (u.min(v), u.max(v));
                    return Err(Error::ConflictingColor {
                        u,
                        v,
                        first: existing,
                        second: color,
                    });
                }
                Some(_) => {}
                None => g.set_edge(u, v, color),
            }
        }
        Ok(g)
    }

    /// Edgeless graph.
    pub fn empty(n: usize, r: u8) -> Self {
        assert!(n <= MAX_VERTICES && r >= 1);
        ColoredGraph {
            n,
            r,
            color_of: vec![0; n * n],
            adj: vec![VertexSet::EMPTY; n],
            color_adj: vec![vec![VertexSet::EMPTY; n]; r as usize],
        }
    }

    /// Builds a graph from a color function on unordered pairs `u < v`; `None`
    /// means non-edge. The function must return colors in `1..=r`.
    pub fn from_fn(n: usize, r: u8, mut color: impl FnMut(usize, usize) -> Option<Color>) -> Self {
        let mut g = ColoredGraph::empty(n, r);
        for u in 0..n {
            for v in u + 1..n {
                if let Some(c) = color(u, v) {
                    assert!(c.0 >= 1 && c.0 <= r, "color {c} out of range");
                    g.set_edge(u, v, c);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, c: Color) {
        debug_assert!(u != v && self.color(u, v).is_none());
        self.color_of[u * self.n + v] = c.0;
        self.color_of[v * self.n + u] = c.0;
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.color_adj[c.index()][u].insert(v);
        self.color_adj[c.index()][v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> u8 {
        self.r
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        match self.color_of[u * self.n + v] {
            0 => None,
            c => Some(Color(c)),
        }
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Underlying neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Neighborhood in color `c`, `N_c(v)`.
    #[inline]
    pub fn color_neighbors(&self, v: usize, c: Color) -> VertexSet {
        self.color_adj[c.index()][v]
    }

    /// Vertices of `within` other than `v` that are not adjacent to `v`.
    #[inline]
    pub fn non_neighbors(&self, v: usize, within: VertexSet) -> VertexSet {
        within - self.adj[v] - VertexSet::singleton(v)
    }

    /// All edges as `(u, v, color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v, Color(self.color_of[u * self.n + v])))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Same graph with colors 1 and 2 exchanged. Requires `r = 2`.
    pub fn swap_colors(&self) -> ColoredGraph {
        assert_eq!(self.r, 2);
        ColoredGraph::from_fn(self.n, 2, |u, v| self.color(u, v).map(Color::other))
    }

    /// Uncolored complement, every edge in color 1.
    pub fn complement(&self) -> ColoredGraph {
        ColoredGraph::from_fn(self.n, 1, |u, v| (!self.adjacent(u, v)).then_some(Color::RED))
    }

    /// Same underlying graph with every edge in color 1.
    pub fn underlying(&self) -> ColoredGraph {
        ColoredGraph::from_fn(self.n, 1, |u, v| self.adjacent(u, v).then_some(Color::RED))
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in increasing order.
    pub fn induced(&self, s: VertexSet) -> ColoredGraph {
        let map = s.to_vec();
        ColoredGraph::from_fn(map.len(), self.r, |i, j| self.color(map[i], map[j]))
    }

    pub fn check_color(&self, c: Color) -> Result<()> {
        if c.0 > self.r {
            Err(Error::ColorOutOfRange {
                color: c.0 as usize,
                r: self.r as usize,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_two_colors(&self) -> Result<()> {
        if self.r != 2 {
            Err(Error::WrongColorCount {
                expected: 2,
                found: self.r,
            })
        } else {
            Ok(())
        }
    }

    /// First missing pair of `G[s]`, if any.
    pub fn missing_pair(&self, s: VertexSet) -> Option<(usize, usize)> {
        s.iter().find_map(|u| {
            let missing = self.non_neighbors(u, s) - VertexSet::full(u + 1);
            missing.first().map(|v| (u, v))
        })
    }

    pub fn is_complete_on(&self, s: VertexSet) -> bool {
        self.missing_pair(s).is_none()
    }

    pub(crate) fn require_complete_on(&self, s: VertexSet) -> Result<()> {
        match self.missing_pair(s) {
            Some((u, v)) => Err(Error::NotComplete { u, v }),
            None => Ok(()),
        }
    }

    /// Largest distance from `u` inside `G_c[s]`.
    pub fn eccentricity(&self, c: Color, s: VertexSet, u: usize) -> Distance {
        let rows = &self.color_adj[c.index()];
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut depth = 0;
        while seen != s {
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next |= rows[w];
            }
            next = (next & s) - seen;
            if next.is_empty() {
                return Distance::Unreachable;
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
        Distance::Finite(depth)
    }

    /// `d(u, v)` inside `G_c[s]`; both endpoints must lie in `s`.
    pub fn mono_distance(&self, c: Color, s: VertexSet, u: usize, v: usize) -> Distance {
        let rows = &self.color_adj[c.index()];
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut depth = 0;
        while !seen.contains(v) {
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next |= rows[w];
            }
            next = (next & s) - seen;
            if next.is_empty() {
                return Distance::Unreachable;
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
        Distance::Finite(depth)
    }

    /// Diameter of `G_c[s]`: 0 for a single vertex, `Unreachable` when
    /// disconnected.
    pub fn mono_diameter(&self, c: Color, s: VertexSet) -> Result<Distance> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_color(c)?;
        ensure_in_range(s, self.n)?;
        Ok(self.diameter_unchecked(c, s))
    }

    pub(crate) fn diameter_unchecked(&self, c: Color, s: VertexSet) -> Distance {
        let mut diameter = 0;
        for u in s {
            match self.eccentricity(c, s, u) {
                Distance::Unreachable => return Distance::Unreachable,
                Distance::Finite(e) => diameter = diameter.max(e),
            }
        }
        Distance::Finite(diameter)
    }

    /// Whether `G_c[s]` has diameter at most `d`, stopping breadth-first search
    /// at depth `d`.
    pub(crate) fn diameter_at_most(&self, c: Color, s: VertexSet, d: u32) -> bool {
        let rows = &self.color_adj[c.index()];
        for u in s {
            let mut seen = VertexSet::singleton(u);
            let mut frontier = seen;
            let mut depth = 0;
            while seen != s {
                if depth == d {
                    return false;
                }
                let mut next = VertexSet::EMPTY;
                for w in frontier {
                    next |= rows[w];
                }
                next = (next & s) - seen;
                if next.is_empty() {
                    return false;
                }
                seen |= next;
                frontier = next;
                depth += 1;
            }
        }
        true
    }

    /// Exact independence number of the underlying graph with a maximum
    /// independent set as witness.
    pub fn independence_number(&self) -> (usize, VertexSet) {
        let set = self.max_independent_set(self.vertices());
        (set.len(), set)
    }

    /// Maximum independent set of `G[s]` by branch and bound, bounding with a
    /// greedy partition of the candidates into cliques of `G`.
    pub fn max_independent_set(&self, s: VertexSet) -> VertexSet {
        let mut best = VertexSet::EMPTY;
        for v in s {
            if !self.adj[v].intersects(best) {
                best.insert(v);
            }
        }
        self.expand_independent(s, VertexSet::EMPTY, &mut best);
        best
    }

    fn expand_independent(&self, candidates: VertexSet, current: VertexSet, best: &mut VertexSet) {
        let mut order = Vec::with_capacity(candidates.len());
        let mut uncolored = candidates;
        let mut class = 0;
        while !uncolored.is_empty() {
            class += 1;
            let mut open = uncolored;
            while let Some(v) = open.first() {
                open &= self.adj[v];
                uncolored.remove(v);
                order.push((v, class));
            }
        }
        let mut remaining = candidates;
        for &(v, bound) in order.iter().rev() {
            if current.len() + bound <= best.len() {
                return;
            }
            let next = remaining - self.adj[v] - VertexSet::singleton(v);
            let chosen = current.with(v);
            if next.is_empty() {
                if chosen.len() > best.len() {
                    *best = chosen;
                }
            } else {
                self.expand_independent(next, chosen, best);
            }
            remaining.remove(v);
        }
    }

    /// If the complement of `G[s]` is bipartite, parts `(X, Y)` with `G[X]`
    /// and `G[Y]` complete. The lowest vertex of every complement component
    /// goes to `X`.
    pub fn complement_bipartition(&self, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
        let mut x = VertexSet::EMPTY;
        let mut y = VertexSet::EMPTY;
        let mut unvisited = s;
        while let Some(root) = unvisited.first() {
            unvisited.remove(root);
            x.insert(root);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let u_in_x = x.contains(u);
                for w in self.non_neighbors(u, s) {
                    if unvisited.contains(w) {
                        unvisited.remove(w);
                        if u_in_x {
                            y.insert(w);
                        } else {
                            x.insert(w);
                        }
                        stack.push(w);
                    } else if x.contains(w) == u_in_x {
                        return None;
                    }
                }
            }
        }
        Some((x, y))
    }

    /// Shortest odd cycle of the complement of `G[s]`, normalized to start at
    /// its lowest vertex and continue towards the smaller neighbor. `None` when
    /// the complement is bipartite. A complement triangle is an error because
    /// callers rely on `alpha(G) <= 2`.
    pub fn shortest_complement_odd_cycle(&self, s: VertexSet) -> Result<Option<Vec<usize>>> {
        let n = self.n;
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in s {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = &best {
                    if 2 * dist[u] + 1 >= b.len() as u32 {
                        break;
                    }
                }
                for w in self.non_neighbors(u, s) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if dist[w] == dist[u] && w > u {
                        let len = 2 * dist[u] as usize + 1;
                        if best.as_ref().is_some_and(|b| b.len() <= len) {
                            continue;
                        }
                        let trace = |mut v: usize| {
                            let mut path = vec![v];
                            while v != root {
                                v = parent[v];
                                path.push(v);
                            }
                            path.reverse();
                            path
                        };
                        let mut cycle = trace(u);
                        let other = trace(w);
                        cycle.extend(other[1..].iter().rev());
                        let distinct: VertexSet = cycle.iter().copied().collect();
                        if distinct.len() == len {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        let Some(cycle) = best else {
            return Ok(None);
        };
        if cycle.len() == 3 {
            let mut t = [cycle[0], cycle[1], cycle[2]];
            t.sort_unstable();
            return Err(Error::ComplementTriangle(t));
        }
        Ok(Some(normalize_cycle(cycle)))
    }
}

/// Rotates a cycle to start at its minimum and orients it so the second entry
/// is smaller than the last.
pub(crate) fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredGraph(n={}, r={}, [", self.n, self.r)?;
        for (i, (u, v, c)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}:{c}")?;
        }
        write!(f, "])")
    }
}

/// Mono diameter of `G_c[S]`.
pub fn mono_diameter(g: &ColoredGraph, c: Color, s: VertexSet) -> Result<Distance> {
    g.mono_diameter(c, s)
}

/// Exact `alpha(G)` with a witness.
pub fn independence_number(g: &ColoredGraph) -> (usize, VertexSet) {
    g.independence_number()
}

/// Odd antihole of `G` obtained as a shortest odd cycle of length at least 5
/// in the complement, listed in hole order.
pub fn find_odd_antihole(g: &ColoredGraph) -> Result<Option<Vec<usize>>> {
    g.shortest_complement_odd_cycle(g.vertices())
}

/// Parts `(X, Y)` with `G[X]` and `G[Y]` complete, if the complement is
/// bipartite.
pub fn is_complement_bipartite(g: &ColoredGraph) -> Option<(VertexSet, VertexSet)> {
    g.complement_bipartition(g.vertices())
}
