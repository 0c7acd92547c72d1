//! Edge-list text format: a header `n m`, then `m` lines `u v`.
//! Lines starting with `#` and blank lines are ignored.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Content lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_ints(line: usize, s: &str, count: usize) -> Result<Vec<usize>> {
    let vals: Vec<usize> = s
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| perr(line, format!("not a non-negative integer: {t:?}"))))
        .collect::<Result<_>>()?;
    if vals.len() != count {
        return Err(perr(line, format!("expected {count} integers, found {}", vals.len())));
    }
    Ok(vals)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        let mut lines = content_lines(text);
        let (hline, header) = lines.next().ok_or_else(|| perr(0, "missing header"))?;
        let h = parse_ints(hline, header, 2)?;
        let (n, m) = (h[0], h[1]);
        let mut g = Graph::new(n);
        let mut count = 0;
        for (ln, l) in lines {
            let e = parse_ints(ln, l, 2)?;
            let (u, v) = (e[0], e[1]);
            if u >= n || v >= n {
                return Err(perr(ln, format!("vertex id out of range 0..{n}")));
            }
            if u == v {
                return Err(perr(ln, format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
            count += 1;
        }
        if count != m {
            return Err(perr(hline, format!("header declares {m} edges, found {count}")));
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.m())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses a `k` header followed by `k` vertex ids (solution and modulator files).
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| perr(0, "missing header"))?;
    let k = parse_ints(hline, header, 1)?[0];
    let mut out = Vec::with_capacity(k);
    for (ln, l) in lines {
        out.extend(l.split_whitespace().map(|t| {
            t.parse::<usize>().map_err(|_| perr(ln, format!("not a vertex id: {t:?}")))
        }).collect::<Result<Vec<_>>>()?);
    }
    if out.len() != k {
        return Err(perr(hline, format!("header declares {k} ids, found {}", out.len())));
    }
    Ok(out)
}

pub fn format_vertex_list(vs: &[usize]) -> String {
    let mut s = format!("{}\n", vs.len());
    for v in vs {
        s.push_str(&format!("{v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn parses_examples() {
        assert_eq!("3 2\n0 1\n1 2".parse::<Graph>().unwrap(), path(3));
        assert_eq!("1 0".parse::<Graph>().unwrap(), Graph::new(1));
        assert_eq!("3 3\n0 1\n1 2\n0 2".parse::<Graph>().unwrap(), complete(3));
    }

    #[test]
    fn comments_and_duplicates() {
        let g: Graph = "# a path\n3 3\n1 0\n# dup\n0 1\n2 1\n".parse().unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn errors_name_the_line() {
        let err = "3 1\n0 5".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = "3 1\n1 1".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = "3 1\n0 x".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!("".parse::<Graph>().is_err());
    }

    #[test]
    fn vertex_lists_round_trip() {
        let s = format_vertex_list(&[4, 1, 7]);
        assert_eq!(parse_vertex_list(&s).unwrap(), vec![4, 1, 7]);
        assert!(parse_vertex_list("2\n1\n").is_err());
    }
}
