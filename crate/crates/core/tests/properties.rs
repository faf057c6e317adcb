use monocover::cert::{verify_cover, CoverVerdict};
use monocover::classify::{
    check_house_membership, classify_complete, double_star_bases, spans_p42, CaseWitness, HouseVerdict, LemmaCase,
};
use monocover::covers::{cover_alpha2, cover_general, cover_stars};
use monocover::generators::{gen_random_alpha2, gen_random_graph, gen_substitution, random_complete};
use monocover::graph::{find_odd_antihole, Color, ColoredGraph, Distance};
use monocover::oracle::{exists_bounds_cover, min_cover_exact, OracleConfig};
use monocover::search::Predicate;
use monocover::{Error, VertexSet};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complete(n: usize, seed: u64) -> ColoredGraph {
    random_complete(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Whether `s` induces a single cycle in the complement.
fn complement_cycle(g: &ColoredGraph, s: VertexSet) -> bool {
    let comp = |v: usize| s.without(v) - g.neighbors(v);
    if s.len() < 3 || s.iter().any(|v| comp(v).len() != 2) {
        return false;
    }
    let start = s.first().unwrap();
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | comp(v)) - seen;
        seen |= next;
        frontier = next;
    }
    seen == s
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        rng_seed: RngSeed::Fixed(20_241_018),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn distances_are_symmetric(n in 1usize..12, p in 0.2f64..1.0, seed in any::<u64>(), mask in any::<u64>()) {
        let g = gen_random_graph(n, p, 2, seed).unwrap();
        let s = VertexSet::from_bits(mask) & g.vertices();
        for c in Color::all(2) {
            for u in s {
                for v in s {
                    prop_assert_eq!(g.mono_distance(c, s, u, v), g.mono_distance(c, s, v, u));
                }
            }
        }
    }

    #[test]
    fn shortest_odd_antihole_is_minimal(n in 3usize..=10, p in 0.3f64..0.95, seed in any::<u64>()) {
        let g = gen_random_graph(n, p, 2, seed).unwrap();
        let shortest = (1u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|s| s.len() % 2 == 1 && complement_cycle(&g, *s))
            .map(|s| s.len())
            .min();
        match (find_odd_antihole(&g), shortest) {
            (Err(Error::ComplementTriangle(t)), Some(3)) => {
                let s: VertexSet = t.into_iter().collect();
                prop_assert!(complement_cycle(&g, s));
            }
            (Ok(None), None) => {}
            (Ok(Some(cycle)), Some(len)) => {
                prop_assert_eq!(cycle.len(), len);
                for i in 0..len {
                    prop_assert!(!g.adjacent(cycle[i], cycle[(i + 1) % len]));
                }
                prop_assert!(complement_cycle(&g, cycle.iter().copied().collect()));
            }
            (got, want) => prop_assert!(false, "got {:?}, brute force {:?}", got, want),
        }
    }

    #[test]
    fn classification_matches_diameters(n in 2usize..=11, seed in any::<u64>()) {
        let g = complete(n, seed);
        let v = classify_complete(&g).unwrap();
        let d = [g.mono_diameter(Color::RED, g.vertices()).unwrap(), g.mono_diameter(Color::BLUE, g.vertices()).unwrap()];
        prop_assert_eq!(v.diameters, d);
        let (large, small) = if d[0] >= d[1] { (d[0], d[1]) } else { (d[1], d[0]) };
        let expected = match (large, small) {
            (l, _) if l > Distance::Finite(3) => LemmaCase::I,
            (Distance::Finite(3), Distance::Finite(3)) => LemmaCase::II,
            (Distance::Finite(3), _) => LemmaCase::III,
            _ => LemmaCase::IV,
        };
        prop_assert_eq!(v.case, expected);
        if let CaseWitness::House(h) = &v.witness {
            prop_assert_eq!(check_house_membership(&g, h).unwrap(), HouseVerdict::Member);
        }
    }

    #[test]
    fn double_star_bases_are_separated(n in 2usize..=10, seed in any::<u64>()) {
        let g = complete(n, seed);
        let b1 = double_star_bases(&g, Color::RED);
        let b2 = double_star_bases(&g, Color::BLUE);
        if !b1.is_empty() && !b2.is_empty() {
            let ends = |bases: &[(usize, usize)]| -> VertexSet { bases.iter().flat_map(|&(u, v)| [u, v]).collect() };
            prop_assert!(!ends(&b1).intersects(ends(&b2)));
            for bases in [&b1, &b2] {
                let h = ColoredGraph::from_fn(n, 1, |u, v| bases.contains(&(u, v)).then_some(Color::RED));
                prop_assert!(bipartite(&h, ends(bases)));
            }
            for &e in &b1 {
                for &f in &b2 {
                    prop_assert!(spans_p42(&g, e, f), "{:?} {:?}", e, f);
                }
            }
        }
    }

    #[test]
    fn constructive_covers_verify(n in 3usize..=16, p in 0.1f64..0.7, seed in any::<u64>()) {
        let g = gen_random_alpha2(n, p, seed).unwrap();
        let cert = cover_alpha2(&g).unwrap();
        prop_assert!(cert.len() <= 2 && cert.max_bound() <= 4);
        prop_assert_eq!(verify_cover(&g, &cert), CoverVerdict::Accept);

        let h = gen_random_graph(n, p + 0.2, 2, seed).unwrap();
        let alpha = h.independence_number().0;
        let cert = cover_general(&h).unwrap();
        prop_assert!(cert.len() <= (3 * alpha / 2).max(alpha) && cert.max_bound() <= 4);
        prop_assert_eq!(verify_cover(&h, &cert), CoverVerdict::Accept);
        let cert = cover_stars(&h).unwrap();
        prop_assert!(cert.len() <= 2 * alpha && cert.max_bound() <= 2);
        prop_assert_eq!(verify_cover(&h, &cert), CoverVerdict::Accept);
    }

    #[test]
    fn oracle_is_monotone_in_diameter(n in 1usize..=12, p in 0.2f64..0.9, seed in any::<u64>()) {
        let g = gen_random_graph(n, p, 2, seed).unwrap();
        let ks: Vec<usize> = (0..=5).map(|d| min_cover_exact(&g, d).unwrap().0).collect();
        prop_assert!(ks.windows(2).all(|w| w[0] >= w[1]), "{:?}", ks);
        prop_assert_eq!(ks[0], n);
    }

    #[test]
    fn constructive_bounds_are_achievable(n in 3usize..=10, p in 0.1f64..0.7, seed in any::<u64>()) {
        let g = gen_random_alpha2(n, p, seed).unwrap();
        let cert = cover_alpha2(&g).unwrap();
        prop_assert!(exists_bounds_cover(&g, &cert.bounds()).unwrap().is_some());
    }

    #[test]
    fn substitution_keeps_large_diameters(
        n in 2usize..=6,
        seed in any::<u64>(),
        sizes in prop::collection::vec(1usize..=3, 6),
    ) {
        let base = gen_random_graph(n, 0.7, 2, seed).unwrap();
        let sizes = &sizes[..n];
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let inner: Vec<ColoredGraph> = sizes.iter().map(|&s| random_complete(s, &mut rng)).collect();
        let big = gen_substitution(&base, sizes, &inner).unwrap();
        for c in Color::all(2) {
            let d = base.mono_diameter(c, base.vertices()).unwrap();
            if d >= Distance::Finite(2) {
                prop_assert_eq!(big.mono_diameter(c, big.vertices()).unwrap(), d);
            }
        }
    }

    #[test]
    fn predicates_ignore_color_swap(n in 2usize..=7, p in 0.3f64..1.0, seed in any::<u64>()) {
        let g = gen_random_graph(n, p, 2, seed).unwrap();
        let swapped = g.swap_colors();
        let oracle = OracleConfig::default();
        for pred in [
            Predicate::HasBoundsCover(vec![2, 3]),
            Predicate::MinCoverAtMost { d: 2, k: 2 },
            Predicate::ConstructiveMatchesOracle,
            Predicate::MinCoverValue { d: 3 },
        ] {
            prop_assert_eq!(pred.evaluate(&g, &oracle).unwrap(), pred.evaluate(&swapped, &oracle).unwrap());
        }
    }
}

/// Two-colorability of the graph `h` restricted to `s`.
fn bipartite(h: &ColoredGraph, s: VertexSet) -> bool {
    let mut side = [VertexSet::EMPTY; 2];
    let mut left = s;
    while let Some(root) = left.first() {
        left.remove(root);
        side[0].insert(root);
        let mut stack = vec![(root, 0)];
        while let Some((u, k)) = stack.pop() {
            for w in h.neighbors(u) & s {
                if side[k].contains(w) {
                    return false;
                }
                if left.contains(w) {
                    left.remove(w);
                    side[1 - k].insert(w);
                    stack.push((w, 1 - k));
                }
            }
        }
    }
    true
}
