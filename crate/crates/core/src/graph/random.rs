//! Seeded random graph generators. Every generator takes an explicit RNG so
//! corpora are reproducible from a single seed.

use super::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x1d5_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A cluster graph with cliques of the given sizes plus `modulator` extra
/// vertices (the last ids) adjacent to clique vertices with probability `p`.
pub fn planted_cluster<R: Rng>(rng: &mut R, cliques: &[usize], modulator: usize, p: f64) -> Graph {
    let body: usize = cliques.iter().sum();
    let mut g = Graph::new(body + modulator);
    let mut start = 0;
    for &s in cliques {
        for u in start..start + s {
            for v in u + 1..start + s {
                g.add_edge(u, v);
            }
        }
        start += s;
    }
    for u in body..body + modulator {
        for v in 0..body {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
        for v in u + 1..body + modulator {
            if rng.random_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Copies of one clique pattern: `copies` cliques, each with one member per
/// entry of `signatures`, where a signature lists the modulator vertices
/// (`0..modulator`, stored after the clique vertices) adjacent to that member.
pub fn pattern_copies(modulator: usize, signatures: &[Vec<usize>], copies: usize) -> Graph {
    let s = signatures.len();
    let body = s * copies;
    let mut g = Graph::new(body + modulator);
    for c in 0..copies {
        let base = c * s;
        for i in 0..s {
            for j in i + 1..s {
                g.add_edge(base + i, base + j);
            }
            for &u in &signatures[i] {
                g.add_edge(base + i, body + u);
            }
        }
    }
    g
}

/// A clique on `n - extra` vertices plus `extra` vertices with random
/// neighbourhoods; dense graphs with a small clique modulator.
pub fn near_clique<R: Rng>(rng: &mut R, n: usize, extra: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    let core = n - extra;
    for u in 0..core {
        for v in u + 1..core {
            g.add_edge(u, v);
        }
    }
    for u in core..n {
        for v in 0..u {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random relabelling of `g`.
pub fn shuffle<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = gnp(&mut rng(7), 10, 0.4);
        let b = gnp(&mut rng(7), 10, 0.4);
        assert_eq!(a, b);
    }

    #[test]
    fn pattern_copies_layout() {
        let g = pattern_copies(1, &[vec![0], vec![]], 3);
        assert_eq!(g.n(), 7);
        assert_eq!(g.neighbors(6), &[0, 2, 4]);
        assert!(g.has_edge(0, 1) && !g.has_edge(1, 2));
    }
}
