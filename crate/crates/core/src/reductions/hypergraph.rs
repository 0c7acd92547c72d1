use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_ints};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Largest vertex count accepted by [`solve_bicoloring_exact`].
pub const MAX_BICOLORING_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Alpha,
    Beta,
}

/// A 3-uniform hypergraph. Hyperedges are stored as sorted triples in
/// lexicographic order without repetition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HypergraphInstance {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl HypergraphInstance {
    pub fn new(n: usize, edges: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        let mut out = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::Precondition(format!("hyperedge {e:?} repeats a vertex")));
            }
            if e[2] >= n {
                return Err(Error::InvalidVertex { vertex: e[2], n });
            }
            out.push(e);
        }
        out.sort_unstable();
        out.dedup();
        Ok(HypergraphInstance { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn contains(&self, e: &[usize; 3]) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// The Fano plane, which has no proper bicoloring.
    pub fn fano() -> Self {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        HypergraphInstance::new(7, lines).expect("valid lines")
    }
}

impl FromStr for HypergraphInstance {
    type Err = Error;

    /// Header `n m`, then `m` lines of three vertex ids.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let h = parse_ints(hl, header, 2)?;
        let (n, m) = (h[0], h[1]);
        let mut edges = Vec::with_capacity(m);
        for (ln, line) in lines {
            let ids = parse_ints(ln, line, 3)?;
            let (a, b, c) = (ids[0], ids[1], ids[2]);
            if let Some(&v) = ids.iter().find(|&&v| v >= n) {
                return Err(Error::Parse { line: ln, msg: format!("vertex {v} out of range for n = {n}") });
            }
            if a == b || b == c || a == c {
                return Err(Error::Parse { line: ln, msg: "hyperedge repeats a vertex".into() });
            }
            edges.push([a, b, c]);
        }
        if edges.len() != m {
            return Err(Error::Parse { line: 1, msg: format!("header promises {m} hyperedges, found {}", edges.len()) });
        }
        HypergraphInstance::new(n, edges)
    }
}

impl fmt::Display for HypergraphInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for [a, b, c] in &self.edges {
            writeln!(f, "{a} {b} {c}")?;
        }
        Ok(())
    }
}

/// True iff `coloring` has one color per vertex and no hyperedge is
/// monochromatic.
pub fn is_proper_bicoloring(h: &HypergraphInstance, coloring: &[Color]) -> bool {
    coloring.len() == h.n && h.edges.iter().all(|&[a, b, c]| !(coloring[a] == coloring[b] && coloring[b] == coloring[c]))
}

/// Exhaustive search for a proper bicoloring; `None` when there is none.
pub fn solve_bicoloring_exact(h: &HypergraphInstance) -> Result<Option<Vec<Color>>> {
    if h.n > MAX_BICOLORING_N {
        return Err(Error::TooLarge { n: h.n, cap: MAX_BICOLORING_N });
    }
    let masks: Vec<u32> = h.edges.iter().map(|e| e.iter().fold(0, |m, &v| m | 1 << v)).collect();
    let found = (0u32..1 << h.n).find(|&beta| masks.iter().all(|&e| beta & e != 0 && beta & e != e));
    Ok(found.map(|beta| (0..h.n).map(|v| if beta >> v & 1 == 1 { Color::Beta } else { Color::Alpha }).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let h = HypergraphInstance::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        let c = solve_bicoloring_exact(&h).unwrap().unwrap();
        assert!(is_proper_bicoloring(&h, &c));

        let single = HypergraphInstance::new(3, [[0, 1, 2]]).unwrap();
        let c = solve_bicoloring_exact(&single).unwrap().unwrap();
        assert!(c.iter().any(|&x| x == Color::Alpha) && c.iter().any(|&x| x == Color::Beta));

        assert_eq!(solve_bicoloring_exact(&HypergraphInstance::fano()).unwrap(), None);
    }

    #[test]
    fn parse_round_trip() {
        let h: HypergraphInstance = "4 2\n2 1 0\n1 2 3\n".parse().unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2], [1, 2, 3]]);
        assert_eq!(h.to_string().parse::<HypergraphInstance>().unwrap(), h);
        assert!("3 1\n0 1 1\n".parse::<HypergraphInstance>().is_err());
        assert!("3 1\n0 1 3\n".parse::<HypergraphInstance>().is_err());
        assert!("3 2\n0 1 2\n".parse::<HypergraphInstance>().is_err());
        assert!("3 1\n0 1\n".parse::<HypergraphInstance>().is_err());
    }
}
