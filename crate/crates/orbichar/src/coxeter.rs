//! Right-angled Coxeter groups from their defining graphs.
//!
//! The group of a finite graph has one involutive generator per vertex, with
//! commuting relations along edges. All invariants here are functions of the
//! clique profile of the graph: a subset of vertices generates a finite
//! subgroup exactly when it spans a complete subgraph.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            if a as usize >= vertex_count || b as usize >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn complete(vertices: usize) -> Graph {
        let edges =
            (0..vertices as u32).flat_map(|a| (a + 1..vertices as u32).map(move |b| (a, b)));
        Graph::new(vertices, edges).expect("complete graph is simple")
    }

    pub fn edgeless(vertices: usize) -> Graph {
        Graph::new(vertices, std::iter::empty()).expect("no edges")
    }

    pub fn cycle(vertices: usize) -> Graph {
        let n = vertices as u32;
        let edges = (0..n).map(|a| (a, (a + 1) % n));
        Graph::new(vertices, edges).expect("cycle graph is simple")
    }

    /// Parses edge-list text: one `u v` pair per line, `#` comments and
    /// blank lines ignored. The vertex count is inferred as max + 1.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut pairs = Vec::new();
        let mut max_vertex = 0u32;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<u32> {
                tok.ok_or_else(|| {
                    Error::InvalidInput(format!("line {}: expected `u v`", lineno + 1))
                })?
                .parse()
                .map_err(|_| Error::InvalidInput(format!("line {}: bad vertex", lineno + 1)))
            };
            let a = parse(it.next())?;
            let b = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::InvalidInput(format!(
                    "line {}: expected exactly two vertices",
                    lineno + 1
                )));
            }
            max_vertex = max_vertex.max(a).max(b);
            pairs.push((a, b));
        }
        if pairs.is_empty() {
            return Err(Error::InvalidInput("no edges in edge-list input".into()));
        }
        Graph::new(max_vertex as usize + 1, pairs)
    }

    /// Parses the JSON form `{"vertices": n, "edges": [[u, v], …]}`, which
    /// can also express isolated vertices.
    pub fn from_json(text: &str) -> Result<Graph> {
        #[derive(Deserialize)]
        struct GraphDto {
            vertices: usize,
            edges: Vec<(u32, u32)>,
        }
        let dto: GraphDto = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("bad graph JSON: {e}")))?;
        Graph::new(dto.vertices, dto.edges)
    }

    fn neighbor_masks(&self) -> Vec<Vec<u64>> {
        let words = self.vertex_count.div_ceil(64);
        let mut masks = vec![vec![0u64; words]; self.vertex_count];
        for &(a, b) in &self.edges {
            masks[a as usize][b as usize / 64] |= 1 << (b % 64);
            masks[b as usize][a as usize / 64] |= 1 << (a % 64);
        }
        masks
    }
}

/// Clique counts of the defining graph: `s(l)` cliques of size `l`,
/// including the empty clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalProfile {
    counts: Vec<u64>,
}

impl SphericalProfile {
    /// `s(l)`, zero beyond the clique number.
    pub fn s(&self, l: usize) -> u64 {
        self.counts.get(l).copied().unwrap_or(0)
    }

    /// Counts indexed by clique size, up to the clique number.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn clique_number(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Counts all cliques of the graph by size, by ordered extension: each
/// clique is visited once as its increasing vertex sequence, and candidates
/// are narrowed through neighbor masks.
pub fn clique_census(graph: &Graph) -> SphericalProfile {
    let n = graph.vertex_count;
    let masks = graph.neighbor_masks();
    let mut counts = vec![1u64]; // the empty clique

    fn bump(counts: &mut Vec<u64>, size: usize) {
        if counts.len() <= size {
            counts.resize(size + 1, 0);
        }
        counts[size] += 1;
    }

    fn extend(
        masks: &[Vec<u64>],
        candidates: &[u64],
        from: usize,
        size: usize,
        counts: &mut Vec<u64>,
    ) {
        let n = masks.len();
        for v in from..n {
            if candidates[v / 64] & (1 << (v % 64)) == 0 {
                continue;
            }
            bump(counts, size + 1);
            let next: Vec<u64> = candidates
                .iter()
                .zip(&masks[v])
                .map(|(c, m)| c & m)
                .collect();
            extend(masks, &next, v + 1, size + 1, counts);
        }
    }

    let words = n.div_ceil(64);
    let mut all = vec![u64::MAX; words];
    if !n.is_multiple_of(64) && words > 0 {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    extend(&masks, &all, 0, 0, &mut counts);
    SphericalProfile { counts }
}

/// `Σ s(l)·(2ⁿ−1)ˡ`: the height-n Euler characteristic of the classifying
/// space of the right-angled Coxeter group, at the prime 2. Also the number
/// of conjugation orbits of commuting n-tuples of 2-power-order elements.
pub fn chi_kn_coxeter(graph: &Graph, n: usize) -> BigInt {
    chi_kn_from_profile(&clique_census(graph), n)
}

pub fn chi_kn_from_profile(profile: &SphericalProfile, n: usize) -> BigInt {
    let base = BigInt::from(2u8).pow(n as u32) - 1;
    let mut power = BigInt::from(1);
    let mut total = BigInt::from(0);
    for &count in profile.counts() {
        total += BigInt::from(count) * &power;
        power *= &base;
    }
    total
}

/// `Σ s(l)·(−1/2)ˡ`: the orbifold Euler characteristic, the formal `n = −1`
/// substitution in the census formula.
pub fn chi_orb_coxeter(graph: &Graph) -> Rational {
    chi_orb_from_profile(&clique_census(graph))
}

pub fn chi_orb_from_profile(profile: &SphericalProfile) -> Rational {
    let base = Rational::new(BigInt::from(-1), BigInt::from(2));
    let mut power = Rational::from_integer(BigInt::from(1));
    let mut total = Rational::from_integer(BigInt::from(0));
    for &count in profile.counts() {
        total += Rational::from_integer(BigInt::from(count)) * &power;
        power *= &base;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    /// Brute-force oracle: checks every vertex subset.
    fn clique_profile_by_subsets(graph: &Graph) -> Vec<u64> {
        let n = graph.vertex_count();
        assert!(n <= 20);
        let mut counts = vec![0u64; n + 1];
        'subsets: for mask in 0u32..(1 << n) {
            let verts: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
            for (i, &a) in verts.iter().enumerate() {
                for &b in &verts[i + 1..] {
                    if !graph.has_edge(a, b) {
                        continue 'subsets;
                    }
                }
            }
            counts[verts.len()] += 1;
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts
    }

    #[test]
    fn complete_graph_profile_is_binomial() {
        let profile = clique_census(&Graph::complete(4));
        assert_eq!(profile.counts(), &[1, 4, 6, 4, 1]);
    }

    #[test]
    fn edgeless_graph_profile() {
        let profile = clique_census(&Graph::edgeless(5));
        assert_eq!(profile.counts(), &[1, 5]);
        assert_eq!(profile.s(2), 0);
    }

    #[test]
    fn pentagon_profile_matches_subset_oracle() {
        let pentagon = Graph::cycle(5);
        let profile = clique_census(&pentagon);
        assert_eq!(
            profile.counts(),
            clique_profile_by_subsets(&pentagon).as_slice()
        );
        assert_eq!(profile.counts(), &[1, 5, 5]);
    }

    #[test]
    fn triangle_free_formula() {
        let pentagon = Graph::cycle(5);
        for n in 0..=3u32 {
            let base = 2u64.pow(n) - 1;
            let direct = 1 + 5 * base + 5 * base * base;
            assert_eq!(chi_kn_coxeter(&pentagon, n as usize), BigInt::from(direct));
        }
        assert_eq!(chi_kn_coxeter(&pentagon, 1), BigInt::from(11));
        assert_eq!(chi_kn_coxeter(&pentagon, 2), BigInt::from(61));
    }

    #[test]
    fn complete_graph_gives_elementary_abelian_counts() {
        // W(K_s) = (C2)^s, whose census count is 2^{ns}.
        for s in 0..=4usize {
            let graph = Graph::complete(s);
            for n in 0..=3usize {
                assert_eq!(
                    chi_kn_coxeter(&graph, n),
                    BigInt::from(2u64).pow((n * s) as u32),
                    "s={s} n={n}"
                );
            }
        }
    }

    #[test]
    fn arity_zero_is_one() {
        for graph in [Graph::cycle(5), Graph::complete(3), Graph::edgeless(4)] {
            assert_eq!(chi_kn_coxeter(&graph, 0), BigInt::from(1));
        }
    }

    #[test]
    fn orbifold_values() {
        assert_eq!(chi_orb_coxeter(&Graph::cycle(5)), ratio(-1, 4));
        // A single vertex is C2.
        assert_eq!(chi_orb_coxeter(&Graph::edgeless(1)), ratio(1, 2));
        // A complete graph gives a finite group of order 2^s.
        for s in 1..=4usize {
            assert_eq!(
                chi_orb_coxeter(&Graph::complete(s)),
                Rational::new(BigInt::from(1), BigInt::from(2u64.pow(s as u32)))
            );
        }
    }

    #[test]
    fn adding_an_edge_never_decreases_chi() {
        let sparse = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let denser = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        for n in 1..=3 {
            assert!(chi_kn_coxeter(&denser, n) >= chi_kn_coxeter(&sparse, n));
        }
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 5)]).is_err());
        // Duplicate and reversed edges collapse.
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parses_edge_list_and_json() {
        let text = "# pentagon\n0 1\n1 2\n2 3\n3 4\n4 0\n";
        let graph = Graph::parse_edge_list(text).unwrap();
        assert_eq!(graph, Graph::cycle(5));
        assert!(Graph::parse_edge_list("0\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());

        let json = r#"{"vertices": 4, "edges": [[0,1],[2,3]]}"#;
        let graph = Graph::from_json(json).unwrap();
        assert_eq!(graph.vertex_count(), 4);
        assert_eq!(graph.edge_count(), 2);
        assert!(Graph::from_json("{}").is_err());
    }
}
