//! Line-oriented ASCII formats for instances, rankings and edge lists.
//!
//! ```text
//! unitsquares v1      ranking v1      edges v1
//! n 2                 n 3             n 3
//! 0 0                 2               0 1
//! 1/2 -3/4            0               1 2
//!                     1
//! ```
//!
//! `#` starts a comment running to the end of the line; blank lines are
//! skipped. Serialization is canonical: reduced fractions, `a` when the
//! denominator is 1, one trailing newline.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::geometry::{parse_rational, Point};
use crate::visibility::{Instance, Ranking, VisibilityGraph};

pub const INSTANCE_HEADER: &str = "unitsquares v1";
pub const RANKING_HEADER: &str = "ranking v1";
pub const GRAPH_HEADER: &str = "edges v1";

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let line = line.split_once('#').map_or(line, |(before, _)| before).trim();
        (!line.is_empty()).then_some((idx + 1, line))
    })
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

type NumberedLine<'a> = (usize, &'a str);

/// Reads the header and `n <count>` lines, returning the count and the
/// remaining data lines.
fn read_preamble<'a>(
    text: &'a str,
    header: &str,
) -> Result<(usize, Vec<NumberedLine<'a>>), ParseError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, line)) if line == header => {}
        Some((no, line)) => return Err(ParseError::new(no, format!("unknown header {line:?}, expected {header:?}"))),
        None => return Err(ParseError::new(last_line(text), format!("missing header {header:?}"))),
    }
    let n = match lines.next() {
        Some((no, line)) => {
            let mut fields = line.split_whitespace();
            match (fields.next(), fields.next(), fields.next()) {
                (Some("n"), Some(count), None) => count
                    .parse::<usize>()
                    .map_err(|_| ParseError::new(no, format!("bad count {count:?}")))?,
                _ => return Err(ParseError::new(no, format!("expected \"n <count>\", got {line:?}"))),
            }
        }
        None => return Err(ParseError::new(last_line(text), "missing \"n <count>\" line")),
    };
    let data: Vec<(usize, &str)> = lines.collect();
    if data.len() != n {
        let at = data.get(n).map_or(last_line(text), |(no, _)| *no);
        return Err(ParseError::new(at, format!("count mismatch: n = {n} but {} data lines", data.len())));
    }
    Ok((n, data))
}

fn fields<const K: usize>(no: usize, line: &str) -> Result<[&str; K], ParseError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    parts
        .try_into()
        .map_err(|_| ParseError::new(no, format!("expected {K} fields, got {line:?}")))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let (_, data) = read_preamble(text, INSTANCE_HEADER)?;
    let centers = data
        .into_iter()
        .map(|(no, line)| {
            let [x, y] = fields::<2>(no, line)?;
            let coord = |s: &str| parse_rational(s).map_err(|e| ParseError::new(no, e.to_string()));
            Ok(Point::new(coord(x)?, coord(y)?))
        })
        .collect::<Result<_, ParseError>>()?;
    Ok(Instance::new(centers))
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = format!("{INSTANCE_HEADER}\nn {}\n", inst.len());
    for c in inst.centers() {
        writeln!(out, "{} {}", c.x, c.y).unwrap();
    }
    out
}

fn parse_index(no: usize, s: &str) -> Result<usize, ParseError> {
    if !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(no, format!("bad index {s:?}")));
    }
    s.parse().map_err(|_| ParseError::new(no, format!("bad index {s:?}")))
}

pub fn parse_ranking(text: &str) -> Result<Ranking, ParseError> {
    let (n, data) = read_preamble(text, RANKING_HEADER)?;
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for (no, line) in data {
        let [field] = fields::<1>(no, line)?;
        let i = parse_index(no, field)?;
        if i >= n {
            return Err(ParseError::new(no, format!("index {i} out of range for n = {n}")));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(ParseError::new(no, format!("index {i} repeated")));
        }
        order.push(i);
    }
    Ok(Ranking::new(order).expect("validated above"))
}

pub fn serialize_ranking(rk: &Ranking) -> String {
    let mut out = format!("{RANKING_HEADER}\nn {}\n", rk.len());
    for i in rk.order() {
        writeln!(out, "{i}").unwrap();
    }
    out
}

/// Parses an edge list. Every line must be `i j` with `i < j < n`, and the
/// lines must be strictly increasing.
pub fn parse_graph(text: &str) -> Result<VisibilityGraph, ParseError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, line)) if line == GRAPH_HEADER => {}
        Some((no, line)) => return Err(ParseError::new(no, format!("unknown header {line:?}, expected {GRAPH_HEADER:?}"))),
        None => return Err(ParseError::new(last_line(text), format!("missing header {GRAPH_HEADER:?}"))),
    }
    let n = match lines.next() {
        Some((no, line)) => match fields::<2>(no, line)? {
            ["n", count] => parse_index(no, count)?,
            _ => return Err(ParseError::new(no, format!("expected \"n <count>\", got {line:?}"))),
        },
        None => return Err(ParseError::new(last_line(text), "missing \"n <count>\" line")),
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (no, line) in lines {
        let [a, b] = fields::<2>(no, line)?;
        let (a, b) = (parse_index(no, a)?, parse_index(no, b)?);
        if a >= b || b >= n {
            return Err(ParseError::new(no, format!("edge {a} {b} must satisfy i < j < {n}")));
        }
        if edges.last().is_some_and(|&last| last >= (a, b)) {
            return Err(ParseError::new(no, format!("edge {a} {b} out of order or repeated")));
        }
        edges.push((a, b));
    }
    Ok(VisibilityGraph::new(n, edges).expect("validated above"))
}

pub fn serialize_graph(g: &VisibilityGraph) -> String {
    let mut out = format!("{GRAPH_HEADER}\nn {}\n", g.n());
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    #[test]
    fn parses_instance() {
        let inst = parse_instance("unitsquares v1\nn 2\n0 0\n1/2 -3/4\n").unwrap();
        assert_eq!(
            inst.centers(),
            &[Point::new(rat(0, 1), rat(0, 1)), Point::new(rat(1, 2), rat(-3, 4))]
        );
    }

    #[test]
    fn decimal_reserializes_as_fraction() {
        let inst = parse_instance("unitsquares v1\nn 1\n0.25 1\n").unwrap();
        assert_eq!(serialize_instance(&inst), "unitsquares v1\nn 1\n1/4 1\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# made by hand\nunitsquares v1  # header\n\nn 1\n  3 4 # the only one\n";
        assert_eq!(parse_instance(text).unwrap().centers(), &[Point::new(rat(3, 1), rat(4, 1))]);
    }

    #[test]
    fn instance_errors() {
        let err = parse_instance("unitsquares v1\nn 3\n0 0\n1 1\n").unwrap_err();
        assert!(err.reason.contains("count mismatch"), "{err}");
        let err = parse_instance("unitsquares v1\nn 1\n0 0\n1 1\n").unwrap_err();
        assert_eq!(err.line, 4);
        let err = parse_instance("squares v2\nn 0\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.reason.contains("unknown header"));
        let err = parse_instance("unitsquares v1\nn 1\n0 x\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_instance("unitsquares v1\nn 1\n0 1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(parse_instance("").is_err());
        assert!(parse_instance("unitsquares v1\n").is_err());
        assert!(parse_instance("unitsquares v1\nn -1\n").is_err());
    }

    #[test]
    fn ranking_format() {
        let rk = parse_ranking("ranking v1\nn 3\n2\n0\n1\n").unwrap();
        assert_eq!(rk.order(), &[2, 0, 1]);
        assert_eq!(serialize_ranking(&rk), "ranking v1\nn 3\n2\n0\n1\n");
        assert!(parse_ranking("ranking v1\nn 2\n0\n0\n").is_err());
        assert!(parse_ranking("ranking v1\nn 2\n0\n2\n").is_err());
        assert!(parse_ranking("ranking v1\nn 2\n0\n-1\n").is_err());
    }

    #[test]
    fn graph_format() {
        let g = parse_graph("edges v1\nn 3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(serialize_graph(&g), "edges v1\nn 3\n0 1\n1 2\n");
        assert!(parse_graph("edges v1\nn 3\n1 0\n").is_err());
        assert!(parse_graph("edges v1\nn 3\n1 2\n0 1\n").is_err());
        assert!(parse_graph("edges v1\nn 3\n0 1\n0 1\n").is_err());
        assert!(parse_graph("edges v1\nn 3\n0 3\n").is_err());
        assert_eq!(parse_graph("edges v1\nn 0\n").unwrap().edge_count(), 0);
    }
}
