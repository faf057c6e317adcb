//! Plain-text graph and certificate formats.
//!
//! Graph: a header line `n r`, then one line `u v c` per edge (0-based
//! vertices, 1-based color). Certificate: a line `k`, then `k` lines
//! `c d: v1 v2 ... vm`. In both, `#` starts a comment and blank lines are
//! ignored. Comment lines after a certificate's header hold its build log.
//!
//! A bundle is a graph immediately followed by a certificate; the graph ends at
//! the first line holding a single token.

use std::fmt::Write as _;

use crate::cert::{CoverCertificate, CoverComponent};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    parse_graph_lines(content_lines(text))
}

fn parse_graph_lines<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<ColoredGraph> {
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(0, "missing header line `n r`"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let [n, r] = tokens[..] else {
        return Err(Error::parse(hl, "header must be `n r`"));
    };
    let n: usize = number(hl, n, "vertex count")?;
    let r: usize = number(hl, r, "color count")?;
    if n > MAX_VERTICES {
        return Err(Error::parse(hl, format!("{n} vertices exceeds the maximum of {MAX_VERTICES}")));
    }
    if r == 0 || r > u8::MAX as usize {
        return Err(Error::parse(hl, format!("color count {r} must lie in 1..=255")));
    }
    let mut g = ColoredGraph::empty(n, r as u8);
    for (ln, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v, c] = tokens[..] else {
            return Err(Error::parse(ln, "edge line must be `u v c`"));
        };
        let u: usize = number(ln, u, "vertex")?;
        let v: usize = number(ln, v, "vertex")?;
        let c: usize = number(ln, c, "color")?;
        if u >= n || v >= n {
            return Err(Error::parse(ln, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(Error::parse(ln, format!("self pair ({u}, {u})")));
        }
        if c == 0 || c > r {
            return Err(Error::parse(ln, format!("color {c} out of range 1..={r}")));
        }
        if g.adjacent(u, v) {
            return Err(Error::parse(ln, format!("pair ({u}, {v}) listed twice")));
        }
        g.set_edge(u, v, Color::new(c as u8));
    }
    Ok(g)
}

pub fn write_graph(g: &ColoredGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.colors());
    for (u, v, c) in g.edges() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<CoverCertificate> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    parse_certificate_lines(&lines)
}

fn parse_certificate_lines(lines: &[(usize, &str)]) -> Result<CoverCertificate> {
    let mut cert = CoverCertificate::default();
    let mut expected: Option<(usize, usize)> = None;
    for &(ln, raw) in lines {
        let (body, comment) = match raw.split_once('#') {
            Some((body, comment)) => (body.trim(), Some(comment)),
            None => (raw.trim(), None),
        };
        if body.is_empty() {
            if let (Some(_), Some(comment)) = (expected, comment) {
                cert.build_log.push(comment.strip_prefix(' ').unwrap_or(comment).to_string());
            }
            continue;
        }
        if expected.is_none() {
            expected = Some((ln, number(ln, body, "component count")?));
            continue;
        }
        let (head, list) = body
            .split_once(':')
            .ok_or_else(|| Error::parse(ln, "component line must be `c d: v1 ... vm`"))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        let [c, d] = head[..] else {
            return Err(Error::parse(ln, "component line must start with `c d:`"));
        };
        let c: u8 = number(ln, c, "color")?;
        if c == 0 {
            return Err(Error::parse(ln, "colors are numbered from 1"));
        }
        let bound: u32 = number(ln, d, "diameter bound")?;
        let mut vertices = VertexSet::EMPTY;
        for token in list.split_whitespace() {
            let v: usize = number(ln, token, "vertex")?;
            if v >= MAX_VERTICES {
                return Err(Error::parse(ln, format!("vertex {v} out of range")));
            }
            vertices.insert(v);
        }
        cert.components.push(CoverComponent {
            color: Color::new(c),
            vertices,
            bound,
        });
    }
    let (hl, k) = expected.ok_or_else(|| Error::parse(0, "missing component count line"))?;
    if cert.components.len() != k {
        return Err(Error::parse(
            hl,
            format!("header announces {k} components, found {}", cert.components.len()),
        ));
    }
    Ok(cert)
}

pub fn write_certificate(cert: &CoverCertificate) -> String {
    let mut out = format!("{}\n", cert.len());
    for comp in &cert.components {
        let _ = write!(out, "{} {}:", comp.color, comp.bound);
        for v in comp.vertices {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for entry in &cert.build_log {
        let _ = writeln!(out, "# {}", entry.replace('\n', " "));
    }
    out
}

pub fn parse_bundle(text: &str) -> Result<(ColoredGraph, CoverCertificate)> {
    let all: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let mut graph_lines = Vec::new();
    let mut split = all.len();
    for (idx, &(ln, raw)) in all.iter().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if !graph_lines.is_empty() && body.split_whitespace().count() == 1 {
            split = idx;
            break;
        }
        graph_lines.push((ln, body));
    }
    let g = parse_graph_lines(graph_lines.into_iter())?;
    let cert = parse_certificate_lines(&all[split..])?;
    Ok((g, cert))
}

pub fn write_bundle(g: &ColoredGraph, cert: &CoverCertificate) -> String {
    write_graph(g) + &write_certificate(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_antihole, gen_random_graph, AntiholeScheme};
    use proptest::prelude::*;
    use proptest::test_runner::RngSeed;

    #[test]
    fn parses_with_comments() {
        let text = "# a triangle\n3 2\n0 1 1  # red\n\n1 2 2\n0 2 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.color(1, 2), Some(Color::BLUE));
    }

    #[test]
    fn graph_errors() {
        let cases = [
            ("", 0),
            ("3\n", 1),
            ("3 2\n0 3 1\n", 2),
            ("3 2\n0 1 3\n", 2),
            ("3 2\n0 1 1\n1 0 1\n", 3),
            ("3 2\n0 0 1\n", 2),
            ("3 2\n0 1\n", 2),
            ("3 0\n", 1),
            ("65 2\n", 1),
            ("3 2\n0 x 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn certificate_errors() {
        assert!(parse_certificate("2\n1 2: 0 1\n").is_err());
        assert!(parse_certificate("1\n1 2 0 1\n").is_err());
        assert!(parse_certificate("1\n0 2: 0 1\n").is_err());
        assert!(parse_certificate("# only a comment\n").is_err());
        let cert = parse_certificate("# before\n1\n1 2: 0 1 5\n# log line\n").unwrap();
        assert_eq!(cert.build_log, vec!["log line".to_string()]);
        assert_eq!(cert.components[0].vertices.to_vec(), vec![0, 1, 5]);
    }

    #[test]
    fn bundle_round_trip() {
        let g = gen_antihole(3, AntiholeScheme::DistanceSplit).unwrap();
        let cert = crate::covers::cover_alpha2(&g).unwrap();
        let (g2, cert2) = parse_bundle(&write_bundle(&g, &cert)).unwrap();
        assert_eq!(g2, g);
        assert_eq!(cert2, cert);
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            rng_seed: RngSeed::Fixed(7),
            failure_persistence: None,
            ..ProptestConfig::default()
        })]

        #[test]
        fn graph_round_trip(n in 0usize..14, p in 0.0f64..=1.0, r in 1u8..4, seed in any::<u64>()) {
            let g = gen_random_graph(n, p, r, seed).unwrap();
            prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }

        #[test]
        fn certificate_round_trip(
            comps in prop::collection::vec((1u8..5, 0u32..6, any::<u64>()), 0..6),
            log in prop::collection::vec("[a-z0-9 =(),]{0,30}", 0..4),
        ) {
            let cert = CoverCertificate {
                components: comps
                    .into_iter()
                    .map(|(c, d, bits)| CoverComponent { color: Color::new(c), vertices: VertexSet::from_bits(bits), bound: d })
                    .collect(),
                build_log: log.into_iter().map(|s| s.trim_start().to_string()).collect(),
            };
            prop_assert_eq!(parse_certificate(&write_certificate(&cert)).unwrap(), cert);
        }
    }
}
