//! Named instances and seeded random families.
//!
//! Every random generator draws from a `ChaCha8Rng` seeded with
//! `seed_from_u64(seed)`, consuming values in a fixed order documented on each
//! function, so a `(parameters, seed)` pair names the same graph on every
//! platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Coloring of an antihole's edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntiholeScheme {
    /// Pairs at hole distance `j` get color 1 for even `j`, color 2 for odd `j`.
    DistanceSplit,
    Uniform(Color),
}

/// A family tag plus its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSpec {
    P42 { copies: usize },
    Antihole { k: usize, scheme: AntiholeScheme },
    K7Triple { copies: usize },
    MatchingComplement { n: usize },
    RandomAlpha2 { n: usize, p: f64, seed: u64 },
    RandomGraph { n: usize, p: f64, r: u8, seed: u64 },
    /// House skeleton blown up by the given part sizes with random complete
    /// inner graphs and random colors on the two free skeleton edges.
    HouseSubstitution { sizes: [usize; 5], seed: u64 },
}

impl InstanceSpec {
    pub fn build(&self) -> Result<ColoredGraph> {
        match *self {
            InstanceSpec::P42 { copies } => gen_p42(copies),
            InstanceSpec::Antihole { k, scheme } => gen_antihole(k, scheme),
            InstanceSpec::K7Triple { copies } => gen_k7_triple(copies),
            InstanceSpec::MatchingComplement { n } => gen_matching_complement(n),
            InstanceSpec::RandomAlpha2 { n, p, seed } => gen_random_alpha2(n, p, seed),
            InstanceSpec::RandomGraph { n, p, r, seed } => gen_random_graph(n, p, r, seed),
            InstanceSpec::HouseSubstitution { sizes, seed } => gen_house_member(sizes, seed),
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Vertex-disjoint union; block `i` occupies the next `graphs[i].n()` labels.
pub fn disjoint_union(graphs: &[ColoredGraph]) -> Result<ColoredGraph> {
    let n: usize = graphs.iter().map(ColoredGraph::n).sum();
    check_order(n)?;
    let r = graphs.iter().map(ColoredGraph::colors).max().unwrap_or(1);
    let mut g = ColoredGraph::empty(n, r);
    let mut offset = 0;
    for h in graphs {
        for (u, v, c) in h.edges() {
            g.set_edge(u + offset, v + offset, c);
        }
        offset += h.n();
    }
    Ok(g)
}

/// Disjoint copies of the 2-colored `K_4` whose red and blue edges both form
/// a 3-edge path: red `0-1, 1-2, 3-0`, blue `2-3, 3-1, 0-2`.
pub fn gen_p42(copies: usize) -> Result<ColoredGraph> {
    if copies == 0 {
        return Err(Error::InvalidParameter("copies must be at least 1".into()));
    }
    let p42 = ColoredGraph::new(
        4,
        2,
        &[(0, 1, 1), (1, 2, 1), (3, 0, 1), (2, 3, 2), (3, 1, 2), (0, 2, 2)],
    )?;
    disjoint_union(&vec![p42; copies])
}

/// Complement of the cycle `0, 1, ..., 2k` with the chosen coloring.
pub fn gen_antihole(k: usize, scheme: AntiholeScheme) -> Result<ColoredGraph> {
    if k < 2 {
        return Err(Error::InvalidParameter("antihole needs k >= 2".into()));
    }
    let n = 2 * k + 1;
    check_order(n)?;
    if let AntiholeScheme::Uniform(c) = scheme {
        if c.get() > 2 {
            return Err(Error::ColorOutOfRange { color: c.get() as usize, r: 2 });
        }
    }
    Ok(ColoredGraph::from_fn(n, 2, |u, v| {
        let j = (v - u).min(n - (v - u));
        if j < 2 {
            return None;
        }
        Some(match scheme {
            AntiholeScheme::DistanceSplit if j % 2 == 0 => Color::RED,
            AntiholeScheme::DistanceSplit => Color::BLUE,
            AntiholeScheme::Uniform(c) => c,
        })
    }))
}

/// Disjoint copies of `K_7` colored by circular difference: `±1` color 1,
/// `±2` color 2, `±3` color 3. Each color class is a Hamiltonian cycle.
pub fn gen_k7_triple(copies: usize) -> Result<ColoredGraph> {
    if copies == 0 {
        return Err(Error::InvalidParameter("copies must be at least 1".into()));
    }
    let k7 = ColoredGraph::from_fn(7, 3, |u, v| {
        let d = (v - u).min(7 - (v - u));
        Some(Color::new(d as u8))
    });
    disjoint_union(&vec![k7; copies])
}

/// `K_n` minus the perfect matching `{(2i, 2i + 1)}`, every edge in color 1,
/// declared with two colors.
pub fn gen_matching_complement(n: usize) -> Result<ColoredGraph> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::InvalidParameter(format!(
            "matching complement needs an even n >= 4, got {n}"
        )));
    }
    check_order(n)?;
    Ok(ColoredGraph::from_fn(n, 2, |u, v| {
        (!(u % 2 == 0 && v == u + 1)).then_some(Color::RED)
    }))
}

/// The 2-colored `K_5` house skeleton on `x1..x5 = 0..4`: color 1 on the
/// 4-cycle `x1 x2 x3 x4` and the triangle `x1 x2 x5`, color 2 on `x1 x3` and
/// `x2 x4`. The two free edges `x3 x5`, `x4 x5` take the given colors.
pub fn house_skeleton(x3x5: Color, x4x5: Color) -> ColoredGraph {
    let (r, b) = (Color::RED, Color::BLUE);
    let table = [
        (0, 1, r),
        (1, 2, r),
        (2, 3, r),
        (0, 3, r),
        (0, 4, r),
        (1, 4, r),
        (0, 2, b),
        (1, 3, b),
        (2, 4, x3x5),
        (3, 4, x4x5),
    ];
    ColoredGraph::from_fn(5, 2, |u, v| {
        table
            .iter()
            .find(|&&(a, c, _)| (a, c) == (u, v))
            .map(|&(_, _, col)| col)
    })
}

/// Replaces base vertex `i` by `inner[i]` (of order `sizes[i]`, possibly 0)
/// and every base edge by a complete bipartite graph in the edge's color.
pub fn gen_substitution(
    base: &ColoredGraph,
    sizes: &[usize],
    inner: &[ColoredGraph],
) -> Result<ColoredGraph> {
    if sizes.len() != base.n() || inner.len() != base.n() {
        return Err(Error::InvalidParameter(format!(
            "base has {} vertices but {} sizes and {} inner graphs were given",
            base.n(),
            sizes.len(),
            inner.len()
        )));
    }
    if let Some(i) = (0..sizes.len()).find(|&i| inner[i].n() != sizes[i]) {
        return Err(Error::InvalidParameter(format!(
            "inner graph {i} has {} vertices, size says {}",
            inner[i].n(),
            sizes[i]
        )));
    }
    let n: usize = sizes.iter().sum();
    check_order(n)?;
    let r = inner.iter().map(ColoredGraph::colors).fold(base.colors(), u8::max);
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut block_of = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        offsets.push(block_of.len());
        block_of.extend(std::iter::repeat_n(i, s));
    }
    Ok(ColoredGraph::from_fn(n, r, |u, v| {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu == bv {
            inner[bu].color(u - offsets[bu], v - offsets[bu])
        } else {
            base.color(bu, bv)
        }
    }))
}

/// Uniformly random 2-coloring of `K_n`: one bool per pair in lexicographic
/// order.
pub fn random_complete(n: usize, rng: &mut impl Rng) -> ColoredGraph {
    ColoredGraph::from_fn(n, 2, |_, _| Some(if rng.random::<bool>() { Color::BLUE } else { Color::RED }))
}

/// A member of the house family: skeleton colors for `x3 x5` and `x4 x5` (two
/// bools), then one random complete graph per part in order.
pub fn gen_house_member(sizes: [usize; 5], seed: u64) -> Result<ColoredGraph> {
    if sizes[0] != 1 || sizes[1] != 1 {
        return Err(Error::InvalidParameter("house parts 1 and 2 must have size 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng| if rng.random::<bool>() { Color::BLUE } else { Color::RED };
    let x3x5 = pick(&mut rng);
    let x4x5 = pick(&mut rng);
    let base = house_skeleton(x3x5, x4x5);
    let inner: Vec<ColoredGraph> = sizes.iter().map(|&s| random_complete(s, &mut rng)).collect();
    gen_substitution(&base, &sizes, &inner)
}

/// Complement of a random triangle-free graph with a uniformly random
/// 2-coloring, so `alpha = 2`.
///
/// Stream: per attempt, one `f64` per pair in lexicographic order (pair kept
/// when the draw is below `p` and it closes no triangle); attempts repeat until
/// some pair is kept. Then one bool per edge of the result in lexicographic
/// order picks blue.
pub fn gen_random_alpha2(n: usize, p: f64, seed: u64) -> Result<ColoredGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} not in [0, 1]")));
    }
    if p == 0.0 {
        return Err(Error::InvalidParameter(
            "p = 0 never yields a complement edge, so alpha = 2 is impossible".into(),
        ));
    }
    if n < 2 {
        return Err(Error::InvalidParameter("alpha = 2 needs n >= 2".into()));
    }
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let complement = loop {
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut kept = 0;
        for u in 0..n {
            for v in u + 1..n {
                let draw: f64 = rng.random();
                if draw < p && !adj[u].intersects(adj[v]) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                    kept += 1;
                }
            }
        }
        if kept > 0 {
            break adj;
        }
    };
    Ok(ColoredGraph::from_fn(n, 2, |u, v| {
        if complement[u].contains(v) {
            None
        } else if rng.random::<bool>() {
            Some(Color::BLUE)
        } else {
            Some(Color::RED)
        }
    }))
}

/// `G(n, p)` with uniformly random colors from `1..=r`. Stream: one `f64` per
/// pair in lexicographic order, and for each kept pair immediately one color
/// draw.
pub fn gen_random_graph(n: usize, p: f64, r: u8, seed: u64) -> Result<ColoredGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} not in [0, 1]")));
    }
    if r == 0 {
        return Err(Error::NoColors);
    }
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(ColoredGraph::from_fn(n, r, |_, _| {
        let draw: f64 = rng.random();
        (draw < p).then(|| Color::new(rng.random_range(1..=r)))
    }))
}

/// Same underlying graph, every edge recolored uniformly from `1..=r` (one
/// draw per edge in lexicographic order).
pub fn random_recoloring(g: &ColoredGraph, r: u8, seed: u64) -> Result<ColoredGraph> {
    if r == 0 {
        return Err(Error::NoColors);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(ColoredGraph::from_fn(g.n(), r, |u, v| {
        g.adjacent(u, v).then(|| Color::new(rng.random_range(1..=r)))
    }))
}
