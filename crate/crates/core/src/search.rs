//! Enumeration of the `r`-colorings of a host graph, up to permutation of the
//! colors, against cover predicates.
//!
//! Edges are taken in lexicographic order and a coloring is a sequence of
//! colors over them. Canonical sequences are the restricted growth strings:
//! the first edge gets color 1 and each later edge gets at most one more than
//! the largest color used so far. They are indexed in lexicographic order, so
//! ranges of indices can be handed to workers independently and the report
//! does not depend on how the work was split.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::covers::cover_general;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::oracle::{exists_bounds_cover_with, min_cover_exact_with, OracleConfig, ORACLE_LIMIT};

pub const DEFAULT_BUDGET: u64 = 1 << 26;

const CHUNK: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// A cover whose `i`-th component has diameter at most the `i`-th bound.
    HasBoundsCover(Vec<u32>),
    /// At most `k` components of diameter at most `d` suffice.
    MinCoverAtMost { d: u32, k: usize },
    /// The constructive `floor(3 alpha / 2)` cover uses exactly as many
    /// components as the minimum diameter-4 cover, under both namings of the
    /// two colors (the construction breaks ties toward color 1). Two colors
    /// only.
    ConstructiveMatchesOracle,
    /// Always passes; records the minimum number of diameter-`d` components.
    MinCoverValue { d: u32 },
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::HasBoundsCover(bounds) => {
                let list: Vec<String> = bounds.iter().map(u32::to_string).collect();
                write!(f, "has-bounds-cover:{}", list.join(","))
            }
            Predicate::MinCoverAtMost { d, k } => write!(f, "min-cover-at-most:{d},{k}"),
            Predicate::ConstructiveMatchesOracle => f.write_str("constructive-matches-oracle"),
            Predicate::MinCoverValue { d } => write!(f, "min-cover-value:{d}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    /// `has-bounds-cover:3,3`, `min-cover-at-most:D,K`,
    /// `constructive-matches-oracle`, `min-cover-value:D`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown predicate {s:?}"));
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums = || -> Result<Vec<u64>> {
            args.split(',')
                .filter(|a| !a.trim().is_empty())
                .map(|a| a.trim().parse::<u64>().map_err(|_| bad()))
                .collect()
        };
        match (name, nums()?.as_slice()) {
            ("has-bounds-cover", bounds) if !bounds.is_empty() => Ok(Predicate::HasBoundsCover(
                bounds.iter().map(|&b| b as u32).collect(),
            )),
            ("min-cover-at-most", &[d, k]) => Ok(Predicate::MinCoverAtMost {
                d: d as u32,
                k: k as usize,
            }),
            ("constructive-matches-oracle", []) => Ok(Predicate::ConstructiveMatchesOracle),
            ("min-cover-value", &[d]) => Ok(Predicate::MinCoverValue { d: d as u32 }),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    /// Numeric value behind the verdict, where there is one.
    pub value: Option<u64>,
}

impl Predicate {
    pub fn evaluate(&self, g: &ColoredGraph, oracle: &OracleConfig) -> Result<Outcome> {
        Ok(match self {
            Predicate::HasBoundsCover(bounds) => Outcome {
                pass: exists_bounds_cover_with(g, bounds, oracle)?.is_some(),
                value: None,
            },
            Predicate::MinCoverAtMost { d, k } => {
                let (min, _) = min_cover_exact_with(g, *d, oracle)?;
                Outcome {
                    pass: min <= *k,
                    value: Some(min as u64),
                }
            }
            Predicate::ConstructiveMatchesOracle => {
                let built = cover_general(g)?.len().max(cover_general(&g.swap_colors())?.len());
                let (min, _) = min_cover_exact_with(g, 4, oracle)?;
                Outcome {
                    pass: built == min,
                    value: Some(built as u64),
                }
            }
            Predicate::MinCoverValue { d } => Outcome {
                pass: true,
                value: Some(min_cover_exact_with(g, *d, oracle)?.0 as u64),
            },
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// `count` canonical indices drawn uniformly with replacement.
    Sample { count: u64, seed: u64 },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sample { count, seed } => write!(f, "sample({count}, seed {seed})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of predicate evaluations.
    pub budget: u64,
    /// Worker threads; 0 uses one per core.
    pub jobs: usize,
    pub oracle_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            jobs: 0,
            oracle_limit: ORACLE_LIMIT,
        }
    }
}

/// A stored coloring: its canonical index, the colored graph, and the
/// predicate's verdict on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: u128,
    pub coloring: ColoredGraph,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub host: String,
    pub colors: u8,
    pub predicate: Predicate,
    pub mode: Mode,
    /// Number of canonical colorings, `None` if it does not fit in 128 bits.
    pub canonical_colorings: Option<u128>,
    /// Colorings represented by each canonical one when all colors are used.
    pub symmetry_factor: u64,
    pub evaluated: u64,
    pub passed: u64,
    pub failed: u64,
    /// Predicate values and how often each occurred.
    pub histogram: BTreeMap<u64, u64>,
    /// Failing coloring of lowest index.
    pub first_failure: Option<Witness>,
    /// Coloring with the largest value, lowest index among ties.
    pub extremal: Option<Witness>,
    /// The budget stopped the run before the mode was exhausted.
    pub partial: bool,
    pub elapsed: Duration,
}

/// Equality ignores `elapsed`.
impl PartialEq for SearchReport {
    fn eq(&self, other: &Self) -> bool {
        self.host == other.host
            && self.colors == other.colors
            && self.predicate == other.predicate
            && self.mode == other.mode
            && self.canonical_colorings == other.canonical_colorings
            && self.symmetry_factor == other.symmetry_factor
            && self.evaluated == other.evaluated
            && self.passed == other.passed
            && self.failed == other.failed
            && self.histogram == other.histogram
            && self.first_failure == other.first_failure
            && self.extremal == other.extremal
            && self.partial == other.partial
    }
}

impl SearchReport {
    pub fn max_value(&self) -> Option<u64> {
        self.histogram.keys().next_back().copied()
    }

    /// Machine-readable summary, one `key=value` pair per entry.
    pub fn key_values(&self) -> Vec<(String, String)> {
        let mut kv = vec![
            ("host".to_string(), self.host.clone()),
            ("colors".into(), self.colors.to_string()),
            ("predicate".into(), self.predicate.to_string()),
            ("mode".into(), self.mode.to_string()),
            (
                "canonical_colorings".into(),
                self.canonical_colorings
                    .map_or_else(|| "overflow".to_string(), |t| t.to_string()),
            ),
            ("symmetry_factor".into(), self.symmetry_factor.to_string()),
            ("evaluated".into(), self.evaluated.to_string()),
            ("passed".into(), self.passed.to_string()),
            ("failed".into(), self.failed.to_string()),
            ("partial".into(), self.partial.to_string()),
        ];
        let hist: Vec<String> = self.histogram.iter().map(|(v, c)| format!("{v}:{c}")).collect();
        kv.push(("histogram".into(), hist.join(",")));
        if let Some(w) = &self.first_failure {
            kv.push(("first_failure_index".into(), w.index.to_string()));
        }
        if let Some(w) = &self.extremal {
            kv.push(("extremal_index".into(), w.index.to_string()));
            if let Some(v) = w.outcome.value {
                kv.push(("extremal_value".into(), v.to_string()));
            }
        }
        kv.push(("elapsed_ms".into(), self.elapsed.as_millis().to_string()));
        kv
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "host: {}", self.host)?;
        writeln!(f, "predicate: {} over {}-colorings, {}", self.predicate, self.colors, self.mode)?;
        match self.canonical_colorings {
            Some(t) => writeln!(f, "canonical colorings: {t} (color permutations factored out, up to {}x)", self.symmetry_factor)?,
            None => writeln!(f, "canonical colorings: more than 2^128")?,
        }
        writeln!(
            f,
            "evaluated {}{}: {} passed, {} failed",
            self.evaluated,
            if self.partial { " (partial, budget exhausted)" } else { "" },
            self.passed,
            self.failed
        )?;
        if !self.histogram.is_empty() {
            let hist: Vec<String> = self.histogram.iter().map(|(v, c)| format!("{v}: {c}")).collect();
            writeln!(f, "values: {}", hist.join(", "))?;
        }
        if let Some(w) = &self.first_failure {
            writeln!(f, "first failure: coloring #{}", w.index)?;
            write_coloring(f, &w.coloring)?;
        }
        if let Some(w) = &self.extremal {
            writeln!(
                f,
                "extremal: coloring #{} with value {}",
                w.index,
                w.outcome.value.unwrap_or_default()
            )?;
            write_coloring(f, &w.coloring)?;
        }
        writeln!(f, "elapsed: {:.3}s", self.elapsed.as_secs_f64())?;
        writeln!(f)?;
        for (k, v) in self.key_values() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

fn write_coloring(f: &mut fmt::Formatter<'_>, g: &ColoredGraph) -> fmt::Result {
    let edges: Vec<String> = g.edges().map(|(u, v, c)| format!("{u}-{v}:{c}")).collect();
    writeln!(f, "  {}", edges.join(" "))
}

/// Canonical colorings of a fixed edge list.
pub struct ColoringSpace {
    n: usize,
    r: u8,
    edges: Vec<(usize, usize)>,
    /// `ways[i][k]`: completions of positions `i..` when `k` colors are in use,
    /// saturating at `u128::MAX`.
    ways: Vec<Vec<u128>>,
}

impl ColoringSpace {
    pub fn new(host: &ColoredGraph, r: u8) -> Result<Self> {
        if r == 0 {
            return Err(Error::NoColors);
        }
        let edges: Vec<(usize, usize)> = host.edges().map(|(u, v, _)| (u, v)).collect();
        let m = edges.len();
        let r_us = r as usize;
        let mut ways = vec![vec![0u128; r_us + 1]; m + 1];
        ways[m].iter_mut().for_each(|w| *w = 1);
        for i in (0..m).rev() {
            for k in 0..=r_us {
                let reuse = (k as u128).saturating_mul(ways[i + 1][k]);
                let fresh = if k < r_us { ways[i + 1][k + 1] } else { 0 };
                ways[i][k] = reuse.saturating_add(fresh);
            }
        }
        Ok(ColoringSpace {
            n: host.n(),
            r,
            edges,
            ways,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `None` when the count does not fit in 128 bits.
    pub fn total(&self) -> Option<u128> {
        let t = self.ways[0][0];
        (t != u128::MAX).then_some(t)
    }

    /// Color sequence of the canonical coloring with the given index.
    pub fn unrank(&self, mut index: u128) -> Vec<u8> {
        let mut colors = Vec::with_capacity(self.edges.len());
        let mut used = 0usize;
        for i in 0..self.edges.len() {
            let block = self.ways[i + 1][used];
            let reuse = (used as u128).saturating_mul(block);
            if index < reuse {
                colors.push((index / block) as u8 + 1);
                index %= block;
            } else {
                index -= reuse;
                used += 1;
                colors.push(used as u8);
            }
        }
        colors
    }

    pub fn coloring(&self, index: u128) -> ColoredGraph {
        let colors = self.unrank(index);
        let mut g = ColoredGraph::empty(self.n, self.r);
        for (&(u, v), &c) in self.edges.iter().zip(&colors) {
            g.set_edge(u, v, Color::new(c));
        }
        g
    }
}

#[derive(Default)]
struct Tally {
    evaluated: u64,
    passed: u64,
    failed: u64,
    histogram: BTreeMap<u64, u64>,
    /// `(ordinal, index, outcome)` of the earliest failure.
    first_failure: Option<(u64, u128, Outcome)>,
    /// `(value, ordinal, index, outcome)` of the largest value.
    extremal: Option<(u64, u64, u128, Outcome)>,
}

impl Tally {
    fn record(&mut self, ordinal: u64, index: u128, outcome: Outcome) {
        self.evaluated += 1;
        if outcome.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some((ordinal, index, outcome));
            }
        }
        if let Some(v) = outcome.value {
            *self.histogram.entry(v).or_default() += 1;
            if self.extremal.is_none_or(|(best, ..)| v > best) {
                self.extremal = Some((v, ordinal, index, outcome));
            }
        }
    }

    /// `later` covers ordinals after all of `self`'s.
    fn absorb(&mut self, later: Tally) {
        self.evaluated += later.evaluated;
        self.passed += later.passed;
        self.failed += later.failed;
        for (v, c) in later.histogram {
            *self.histogram.entry(v).or_default() += c;
        }
        if self.first_failure.is_none() {
            self.first_failure = later.first_failure;
        }
        if let Some(e) = later.extremal {
            if self.extremal.is_none_or(|(best, ..)| e.0 > best) {
                self.extremal = Some(e);
            }
        }
    }
}

/// Evaluates `predicate` on canonical `r`-colorings of the host's underlying
/// graph; the host's own colors are ignored.
pub fn enumerate_colorings(
    host: &ColoredGraph,
    r: u8,
    predicate: &Predicate,
    mode: Mode,
    config: &SearchConfig,
) -> Result<SearchReport> {
    if *predicate == Predicate::ConstructiveMatchesOracle && r != 2 {
        return Err(Error::WrongColorCount {
            expected: 2,
            found: r,
        });
    }
    let start = Instant::now();
    let space = ColoringSpace::new(host, r)?;
    let total = space.total();

    // Exhaustive runs use the ordinal itself as the index.
    let (count, sampled, partial): (u64, Option<Vec<u128>>, bool) = match mode {
        Mode::Exhaustive => {
            let t = total.unwrap_or(u128::MAX);
            let take = t.min(config.budget as u128) as u64;
            (take, None, (take as u128) < t)
        }
        Mode::Sample { count, seed } => {
            let t = total.ok_or_else(|| {
                Error::InvalidParameter("too many colorings to sample uniformly by index".into())
            })?;
            let take = count.min(config.budget);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (take, Some((0..take).map(|_| rng.random_range(0..t)).collect()), take < count)
        }
    };
    let index_of = |ordinal: u64| match &sampled {
        Some(list) => list[ordinal as usize],
        None => ordinal as u128,
    };

    let oracle = OracleConfig {
        limit: config.oracle_limit,
        parallel: false,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    let chunks: Vec<Result<Tally>> = pool.install(|| {
        (0..count.div_ceil(CHUNK))
            .into_par_iter()
            .map(|ci| {
                let mut tally = Tally::default();
                for ordinal in ci * CHUNK..((ci + 1) * CHUNK).min(count) {
                    let index = index_of(ordinal);
                    let outcome = predicate.evaluate(&space.coloring(index), &oracle)?;
                    tally.record(ordinal, index, outcome);
                }
                Ok(tally)
            })
            .collect()
    });
    let mut tally = Tally::default();
    for chunk in chunks {
        tally.absorb(chunk?);
    }

    let witness = |index: u128, outcome: Outcome| Witness {
        index,
        coloring: space.coloring(index),
        outcome,
    };
    Ok(SearchReport {
        host: format!("{} vertices, {} edges", host.n(), space.edge_count()),
        colors: r,
        predicate: predicate.clone(),
        mode,
        canonical_colorings: total,
        symmetry_factor: (1..=r as u64).product(),
        evaluated: tally.evaluated,
        passed: tally.passed,
        failed: tally.failed,
        histogram: tally.histogram,
        first_failure: tally.first_failure.map(|(_, i, o)| witness(i, o)),
        extremal: tally.extremal.map(|(_, _, i, o)| witness(i, o)),
        partial,
        elapsed: start.elapsed(),
    })
}

/// Minimum number of diameter-`d` components over every canonical coloring.
pub fn min_cover_distribution(
    host: &ColoredGraph,
    r: u8,
    d: u32,
    config: &SearchConfig,
) -> Result<(BTreeMap<u64, u64>, SearchReport)> {
    let report = enumerate_colorings(host, r, &Predicate::MinCoverValue { d }, Mode::Exhaustive, config)?;
    Ok((report.histogram.clone(), report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_p42;

    fn k(n: usize) -> ColoredGraph {
        ColoredGraph::from_fn(n, 1, |_, _| Some(Color::RED))
    }

    #[test]
    fn canonical_counts() {
        let space = ColoringSpace::new(&k(4), 2).unwrap();
        assert_eq!(space.total(), Some(32));
        let space = ColoringSpace::new(&k(4), 3).unwrap();
        // Set partitions of 6 edges into at most 3 blocks: 1 + 31 + 90.
        assert_eq!(space.total(), Some(122));
        assert_eq!(ColoringSpace::new(&k(1), 2).unwrap().total(), Some(1));
        let huge = ColoringSpace::new(&k(20), 2).unwrap();
        assert_eq!(huge.total(), None);
    }

    #[test]
    fn unrank_is_canonical_and_ordered() {
        let space = ColoringSpace::new(&k(4), 3).unwrap();
        let all: Vec<Vec<u8>> = (0..122).map(|i| space.unrank(i)).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for seq in &all {
            let mut max = 0;
            for &c in seq {
                assert!(c >= 1 && c <= max + 1);
                max = max.max(c);
            }
        }
        assert_eq!(all[0], vec![1; 6]);
    }

    #[test]
    fn k4_min_cover_two() {
        let (hist, report) = min_cover_distribution(&k(4), 2, 2, &SearchConfig::default()).unwrap();
        assert_eq!(hist.values().sum::<u64>(), 32);
        assert_eq!(report.max_value(), Some(2));
        let p42 = gen_p42(1).unwrap();
        let report = enumerate_colorings(
            &k(4),
            2,
            &Predicate::MinCoverAtMost { d: 2, k: 1 },
            Mode::Exhaustive,
            &SearchConfig::default(),
        )
        .unwrap();
        assert!(report.failed > 0);
        let fail = report.first_failure.unwrap();
        assert!(!Predicate::MinCoverAtMost { d: 2, k: 1 }.evaluate(&fail.coloring, &OracleConfig::default()).unwrap().pass);
        assert_eq!(min_cover_exact_with(&p42, 2, &OracleConfig::default()).unwrap().0, 2);
    }

    #[test]
    fn single_vertex() {
        let (hist, _) = min_cover_distribution(&k(1), 2, 0, &SearchConfig::default()).unwrap();
        assert_eq!(hist, BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn budget_and_sampling() {
        let config = SearchConfig {
            budget: 10,
            ..SearchConfig::default()
        };
        let p = Predicate::MinCoverValue { d: 2 };
        let report = enumerate_colorings(&k(5), 2, &p, Mode::Exhaustive, &config).unwrap();
        assert!(report.partial);
        assert_eq!(report.evaluated, 10);
        let mode = Mode::Sample { count: 40, seed: 7 };
        let a = enumerate_colorings(&k(5), 2, &p, mode, &SearchConfig::default()).unwrap();
        let b = enumerate_colorings(&k(5), 2, &p, mode, &SearchConfig { jobs: 3, ..SearchConfig::default() }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.evaluated, 40);
        assert!(!a.partial);
    }

    #[test]
    fn predicate_syntax() {
        for p in [
            Predicate::HasBoundsCover(vec![3, 3]),
            Predicate::MinCoverAtMost { d: 2, k: 1 },
            Predicate::ConstructiveMatchesOracle,
            Predicate::MinCoverValue { d: 4 },
        ] {
            assert_eq!(p.to_string().parse::<Predicate>().unwrap(), p);
        }
        assert!("has-bounds-cover".parse::<Predicate>().is_err());
        assert!("min-cover-at-most:2".parse::<Predicate>().is_err());
        assert!("nonsense".parse::<Predicate>().is_err());
    }

    #[test]
    fn constructive_needs_two_colors() {
        let r = enumerate_colorings(&k(3), 3, &Predicate::ConstructiveMatchesOracle, Mode::Exhaustive, &SearchConfig::default());
        assert!(matches!(r, Err(Error::WrongColorCount { .. })));
    }
}
