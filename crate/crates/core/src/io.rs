//! Text formats: HGR hypergraphs, colouring files and weight files.
//!
//! HGR: a header `<num_edges> <num_vertices>` followed by one edge per line
//! as space-separated 1-based vertex ids. Lines starting with `%` are
//! comments. Colouring files hold one colour per line with an optional
//! `# palette <C>` header. Weight files hold one rational per line, written
//! either as `p/q` or as a decimal.

use std::fmt::Write as _;
use std::io::Read;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{Colouring, Hypergraph, Weights};
use crate::Rational;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-comment lines with their 1-based line numbers, trailing whitespace
/// (including a CR) stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim_start().starts_with('%'))
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn read_hypergraph(mut reader: impl Read) -> Result<Hypergraph> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|e| {
        let line = 1 + e.as_bytes()[..e.utf8_error().valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count();
        parse_err(line, "invalid UTF-8")
    })?;
    parse_hypergraph(&text)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text).skip_while(|(_, l)| l.trim().is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(
            header_line,
            "header must be `<num_edges> <num_vertices>`",
        ));
    }
    let n_edges = parse_usize(header_line, fields[0], "edge count")?;
    let n_vertices = parse_usize(header_line, fields[1], "vertex count")?;

    let mut edges = Vec::with_capacity(n_edges);
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        if edges.len() == n_edges {
            if body.trim().is_empty() {
                continue;
            }
            return Err(parse_err(
                line,
                format!("more edge lines than the {n_edges} declared"),
            ));
        }
        let mut edge = Vec::new();
        for tok in body.split_whitespace() {
            let id = parse_usize(line, tok, "vertex id")?;
            if id == 0 || id > n_vertices {
                return Err(parse_err(
                    line,
                    format!("vertex id {id} out of range [1, {n_vertices}]"),
                ));
            }
            if edge.contains(&(id - 1)) {
                return Err(parse_err(line, format!("duplicate vertex {id} in edge")));
            }
            edge.push(id - 1);
        }
        if edge.is_empty() {
            return Err(parse_err(line, "empty edge"));
        }
        edges.push(edge);
    }
    if edges.len() != n_edges {
        return Err(parse_err(
            last_line,
            format!("expected {n_edges} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n_vertices, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n_edges(), h.n_vertices());
    for edge in h.edges() {
        let ids: Vec<String> = edge.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a colouring file. Without a `# palette` header the palette is the
/// largest colour present.
pub fn parse_colouring(text: &str) -> Result<Colouring> {
    let mut palette = None;
    let mut colours = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix('#') {
            let mut it = rest.split_whitespace();
            if it.next() == Some("palette") {
                let tok = it
                    .next()
                    .ok_or_else(|| parse_err(line, "palette header without a value"))?;
                palette = Some(parse_usize(line, tok, "palette size")?);
            }
            continue;
        }
        let c = parse_usize(line, body, "colour")?;
        if c == 0 {
            return Err(parse_err(line, "colours are 1-based"));
        }
        colours.push(c);
    }
    let palette = palette.unwrap_or_else(|| colours.iter().copied().max().unwrap_or(0));
    Colouring::new(colours, palette)
}

pub fn write_colouring(c: &Colouring) -> String {
    let mut out = format!("# palette {}\n", c.palette());
    for colour in c.colours() {
        let _ = writeln!(out, "{colour}");
    }
    out
}

/// Parses `p/q`, an integer, or a decimal such as `0.375`, exactly.
pub fn parse_rational(tok: &str) -> Option<Rational> {
    let tok = tok.trim();
    if let Some((p, q)) = tok.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (negative, digits) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mantissa: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let mut scale = BigInt::one();
    for _ in 0..frac_part.len() {
        scale *= 10;
    }
    let value = Rational::new(mantissa, scale);
    Some(if negative { -value } else { value })
}

pub fn parse_weights(text: &str) -> Result<Weights<Rational>> {
    let mut weights = Vec::new();
    for (line, body) in content_lines(text) {
        let body = body.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let w = parse_rational(body)
            .ok_or_else(|| parse_err(line, format!("invalid rational `{body}`")))?;
        if !(w >= Rational::zero() && w <= Rational::one()) {
            return Err(parse_err(line, format!("weight {w} outside [0, 1]")));
        }
        weights.push(w);
    }
    Weights::new(weights)
}

pub fn write_weights<T: std::fmt::Display>(weights: &[T]) -> String {
    let mut out = String::new();
    for w in weights {
        let _ = writeln!(out, "{w}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_small_file() {
        let h = parse_hypergraph("3 4\n1 2 3\n2 3 4\n1 4\n").unwrap();
        assert_eq!(h.n_vertices(), 4);
        assert_eq!(h.n_edges(), 3);
        assert_eq!(h.rank(), 3);
        assert_eq!(h.edge(2), &[0, 3]);
    }

    #[test]
    fn parses_single_edge() {
        let h = parse_hypergraph("1 2\n1 2\n").unwrap();
        assert_eq!((h.n_vertices(), h.n_edges(), h.rank()), (2, 1, 2));
    }

    #[test]
    fn duplicate_vertex_reports_line() {
        match parse_hypergraph("2 3\n1 1 2\n3 1\n") {
            Err(Error::Parse { line: 2, msg }) => assert!(msg.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn comments_crlf_and_trailing_space() {
        let h = parse_hypergraph("% hello\r\n2 3 \r\n1 2\r\n% mid\r\n2 3  \r\n\r\n").unwrap();
        assert_eq!(h.n_edges(), 2);
        assert_eq!(h.edge(1), &[1, 2]);
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            ("", 1),
            ("x 3\n", 1),
            ("1 2 3\n1\n", 1),
            ("1 2\n1 3\n", 2),
            ("2 2\n1 2\n\n1\n", 3),
            ("1 2\n1 2\n2\n", 3),
            ("2 2\n1 2\n", 2),
            ("1 2\n0 1\n", 2),
        ];
        for (text, want) in cases {
            match parse_hypergraph(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn colouring_round_trip() {
        let c = Colouring::new(vec![1, 3, 2, 3], 5).unwrap();
        let text = write_colouring(&c);
        assert_eq!(parse_colouring(&text).unwrap(), c);
        let bare = parse_colouring("2\n1\n").unwrap();
        assert_eq!(bare.palette(), 2);
        assert!(parse_colouring("# palette 2\n3\n").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("2/3"), Some(Rational::new(2.into(), 3.into())));
        assert_eq!(parse_rational("0.375"), Some(Rational::new(3.into(), 8.into())));
        assert_eq!(parse_rational(".5"), Some(Rational::new(1.into(), 2.into())));
        assert_eq!(parse_rational("1"), Some(Rational::one()));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn weights_file() {
        let w = parse_weights("1/2\n0.25\n% c\n1\n").unwrap();
        assert_eq!(w.len(), 3);
        assert!(matches!(parse_weights("3/2\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(write_weights(w.as_slice()), "1/2\n1/4\n1\n");
    }
}
