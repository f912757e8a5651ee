//! Censuses of commuting tuples of p-power-order elements and their
//! conjugation orbits.
//!
//! For a finite group the number of orbits of commuting n-tuples of
//! p-power-order elements under simultaneous conjugation is the height-n
//! Euler characteristic of the classifying space (Hopkins–Kuhn–Ravenel).
//! Two independent routes are provided: a direct enumeration
//! ([`census_naive`]) and the centralizer recursion ([`census_recursive`]).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::util::UnionFind;

/// Default cap on the raw tuple enumeration of a naive census.
pub const DEFAULT_CENSUS_CAP: u64 = 10_000_000;

/// One conjugation orbit of commuting tuples.
#[derive(Debug, Clone)]
pub struct TupleOrbit {
    /// Lexicographically least tuple of the orbit, in the group's
    /// deterministic element order.
    pub rep: Vec<Permutation>,
    pub size: u64,
    /// Joint centralizer of the representative tuple.
    pub centralizer: FiniteGroup,
}

/// Orbits of `n`-tuples of pairwise commuting p-power-order elements under
/// simultaneous conjugation.
#[derive(Debug, Clone)]
pub struct TupleCensus {
    pub prime: u64,
    pub arity: usize,
    pub orbits: Vec<TupleOrbit>,
    pub total_tuples: u64,
}

impl TupleCensus {
    pub fn orbit_count(&self) -> u64 {
        self.orbits.len() as u64
    }
}

/// Orbits of `(n+1)`-tuples whose first entry is an arbitrary element and
/// whose remaining `n` entries have p-power order, all pairwise commuting.
#[derive(Debug, Clone)]
pub struct ExtendedTupleCensus {
    pub prime: u64,
    /// Number of p-power slots (the tuple length is `arity + 1`).
    pub arity: usize,
    pub orbits: Vec<TupleOrbit>,
    pub total_tuples: u64,
}

impl ExtendedTupleCensus {
    pub fn orbit_count(&self) -> u64 {
        self.orbits.len() as u64
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(Error::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

fn is_p_power(mut value: u64, p: u64) -> bool {
    while value.is_multiple_of(p) {
        value /= p;
    }
    value == 1
}

/// Ids of the elements of p-power order (the identity included).
pub fn p_power_elements(g: &FiniteGroup, p: u64) -> Result<Vec<u32>> {
    check_prime(p)?;
    Ok((0..g.order() as u32)
        .filter(|&id| is_p_power(g.element_order(id), p))
        .collect())
}

/// Plain bitset over candidate indices.
#[derive(Clone)]
struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn zeros(len: usize) -> Self {
        Bitset {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn and_assign(&mut self, other: &Bitset) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

/// Enumerates commuting tuples and partitions them into conjugation orbits.
///
/// `first`: candidate ids for slot 0; `rest`: candidate ids for the other
/// `arity − 1` slots (must be sorted ascending). `total_len` is the tuple
/// length; when `total_len == 0` the single empty tuple is returned.
fn orbit_partition(
    g: &FiniteGroup,
    first: &[u32],
    rest: &[u32],
    total_len: usize,
    cap: u64,
) -> Result<(Vec<TupleOrbit>, u64)> {
    if total_len == 0 {
        return Ok((
            vec![TupleOrbit {
                rep: Vec::new(),
                size: 1,
                centralizer: g.centralizer_of_ids(&[]),
            }],
            1,
        ));
    }

    // The raw enumeration bound counts the full candidate product.
    let mut raw: u64 = first.len() as u64;
    for _ in 1..total_len {
        raw = raw.saturating_mul(rest.len() as u64);
        if raw > cap {
            return Err(Error::CensusTooLarge {
                estimated: raw,
                cap,
            });
        }
    }

    // Commutation bitsets over `rest` for every candidate element.
    let mut comm: HashMap<u32, Bitset> = HashMap::new();
    if total_len > 1 {
        for &x in first.iter().chain(rest) {
            if comm.contains_key(&x) {
                continue;
            }
            let mut bits = Bitset::zeros(rest.len());
            for (j, &y) in rest.iter().enumerate() {
                if g.element(x).commutes_with(g.element(y)) {
                    bits.set(j);
                }
            }
            comm.insert(x, bits);
        }
    }

    // Depth-first enumeration in lexicographic order.
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    let mut current = Vec::with_capacity(total_len);
    for &x in first {
        current.push(x);
        if total_len == 1 {
            tuples.push(current.clone());
        } else {
            dfs(
                rest,
                &comm,
                &mut current,
                comm[&x].clone(),
                total_len,
                &mut tuples,
            );
        }
        current.pop();
    }

    fn dfs(
        rest: &[u32],
        comm: &HashMap<u32, Bitset>,
        current: &mut Vec<u32>,
        mask: Bitset,
        total_len: usize,
        tuples: &mut Vec<Vec<u32>>,
    ) {
        let indices: Vec<usize> = mask.iter_ones().collect();
        for j in indices {
            let y = rest[j];
            current.push(y);
            if current.len() == total_len {
                tuples.push(current.clone());
            } else {
                let mut next = mask.clone();
                next.and_assign(&comm[&y]);
                dfs(rest, comm, current, next, total_len, tuples);
            }
            current.pop();
        }
    }

    let total = tuples.len() as u64;

    // Conjugating by the generators alone generates the orbit relation.
    let index: HashMap<&[u32], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let gen_ids: Vec<u32> = g
        .generators()
        .iter()
        .map(|p| g.id_of(p).expect("generators lie in the group"))
        .collect();
    let conj_tables: Vec<Vec<u32>> = gen_ids
        .iter()
        .map(|&gid| {
            (0..g.order() as u32)
                .map(|x| g.conjugate_id(x, gid))
                .collect()
        })
        .collect();

    let mut uf = UnionFind::new(tuples.len());
    let mut scratch = vec![0u32; total_len];
    for (i, tuple) in tuples.iter().enumerate() {
        for table in &conj_tables {
            for (s, &x) in scratch.iter_mut().zip(tuple) {
                *s = table[x as usize];
            }
            let j = index[scratch.as_slice()];
            uf.union(i, j);
        }
    }

    // Tuples were enumerated in lexicographic order, so the least index in
    // each class is the lexicographically minimal representative.
    let mut rep_of_root: HashMap<usize, usize> = HashMap::new();
    for i in 0..tuples.len() {
        let root = uf.find(i);
        rep_of_root.entry(root).or_insert(i);
    }
    let mut rep_indices: Vec<usize> = rep_of_root.values().copied().collect();
    rep_indices.sort_unstable();

    let orbits = rep_indices
        .into_iter()
        .map(|i| {
            let tuple = &tuples[i];
            let centralizer = g.centralizer_of_ids(tuple);
            let size = uf.class_size(i) as u64;
            debug_assert_eq!(size * centralizer.order(), g.order());
            TupleOrbit {
                rep: tuple.iter().map(|&x| g.element(x).clone()).collect(),
                size,
                centralizer,
            }
        })
        .collect();
    Ok((orbits, total))
}

/// Direct census: enumerates all commuting `n`-tuples of p-power-order
/// elements and partitions them under simultaneous conjugation.
pub fn census_naive(g: &FiniteGroup, p: u64, n: usize) -> Result<TupleCensus> {
    census_naive_capped(g, p, n, DEFAULT_CENSUS_CAP)
}

/// As [`census_naive`], with an explicit cap on the raw tuple enumeration.
pub fn census_naive_capped(g: &FiniteGroup, p: u64, n: usize, cap: u64) -> Result<TupleCensus> {
    let p_els = p_power_elements(g, p)?;
    let (orbits, total_tuples) = orbit_partition(g, &p_els, &p_els, n, cap)?;
    Ok(TupleCensus {
        prime: p,
        arity: n,
        orbits,
        total_tuples,
    })
}

/// Census of `(n+1)`-tuples whose first entry runs over the whole group.
pub fn census_extended(g: &FiniteGroup, p: u64, n: usize) -> Result<ExtendedTupleCensus> {
    census_extended_capped(g, p, n, DEFAULT_CENSUS_CAP)
}

pub fn census_extended_capped(
    g: &FiniteGroup,
    p: u64,
    n: usize,
    cap: u64,
) -> Result<ExtendedTupleCensus> {
    let p_els = p_power_elements(g, p)?;
    let all: Vec<u32> = (0..g.order() as u32).collect();
    let (orbits, total_tuples) = orbit_partition(g, &all, &p_els, n + 1, cap)?;
    Ok(ExtendedTupleCensus {
        prime: p,
        arity: n,
        orbits,
        total_tuples,
    })
}

/// Orbit count by the centralizer recursion: the orbits of `n`-tuples are
/// fibered over orbits of single elements, with fibers counted inside the
/// centralizer. Never materializes the tuple set.
pub fn census_recursive(g: &FiniteGroup, p: u64, n: usize) -> Result<u64> {
    check_prime(p)?;
    if n == 0 {
        return Ok(1);
    }
    let mut count = 0;
    for &rep in &g.conjugacy_classes().representatives() {
        if !is_p_power(g.element_order(rep), p) {
            continue;
        }
        let centralizer = g.centralizer_of_ids(&[rep]);
        count += census_recursive(&centralizer, p, n - 1)?;
    }
    Ok(count)
}

/// Height-n Euler characteristic of the classifying space of a finite group:
/// the orbit count of the census, with `n = 0` normalized to 1.
pub fn chi_kn_finite(g: &FiniteGroup, p: u64, n: usize) -> Result<u64> {
    census_recursive(g, p, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::parse_group;

    #[test]
    fn p_power_elements_of_s3() {
        let s3 = parse_group("S3").unwrap();
        // Brute force over element orders.
        let threes = p_power_elements(&s3, 3).unwrap();
        assert_eq!(threes.len(), 3);
        for &id in &threes {
            assert!(s3.element_order(id) == 1 || s3.element_order(id) == 3);
        }
        assert_eq!(p_power_elements(&s3, 2).unwrap().len(), 4);
        let trivial = parse_group("C1").unwrap();
        assert_eq!(p_power_elements(&trivial, 5).unwrap().len(), 1);
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let s3 = parse_group("S3").unwrap();
        assert!(matches!(p_power_elements(&s3, 4), Err(Error::NotPrime(4))));
        assert!(matches!(census_naive(&s3, 1, 1), Err(Error::NotPrime(1))));
        assert!(matches!(
            census_recursive(&s3, 6, 1),
            Err(Error::NotPrime(6))
        ));
    }

    #[test]
    fn census_values_from_closed_forms() {
        let s3 = parse_group("S3").unwrap();
        assert_eq!(census_naive(&s3, 3, 1).unwrap().orbit_count(), 2);
        let d8 = parse_group("D8").unwrap();
        assert_eq!(census_naive(&d8, 2, 1).unwrap().orbit_count(), 5);
        let s4 = parse_group("S4").unwrap();
        assert_eq!(census_naive(&s4, 2, 1).unwrap().orbit_count(), 4);
    }

    #[test]
    fn recursion_matches_naive_for_s3_pairs() {
        let s3 = parse_group("S3").unwrap();
        assert_eq!(census_recursive(&s3, 3, 2).unwrap(), 5);
        assert_eq!(census_naive(&s3, 3, 2).unwrap().orbit_count(), 5);
    }

    #[test]
    fn abelian_census_is_a_power() {
        let h = parse_group("C2xC4").unwrap();
        for n in 0..=3 {
            assert_eq!(census_recursive(&h, 2, n).unwrap(), 8u64.pow(n as u32));
        }
        let c6 = parse_group("C6").unwrap();
        assert_eq!(census_recursive(&c6, 3, 2).unwrap(), 9);
    }

    #[test]
    fn arity_zero_has_one_orbit() {
        let s4 = parse_group("S4").unwrap();
        let census = census_naive(&s4, 2, 0).unwrap();
        assert_eq!(census.orbit_count(), 1);
        assert_eq!(census.total_tuples, 1);
        assert_eq!(chi_kn_finite(&s4, 2, 0).unwrap(), 1);
    }

    #[test]
    fn orbit_sizes_satisfy_the_class_equation() {
        let s4 = parse_group("S4").unwrap();
        let census = census_naive(&s4, 2, 2).unwrap();
        let recovered: u64 = census
            .orbits
            .iter()
            .map(|o| s4.order() / o.centralizer.order())
            .sum();
        assert_eq!(recovered, census.total_tuples);
        for orbit in &census.orbits {
            assert_eq!(orbit.size * orbit.centralizer.order(), s4.order());
        }
    }

    #[test]
    fn extended_census_identities() {
        let s3 = parse_group("S3").unwrap();
        let ext = census_extended(&s3, 3, 1).unwrap();
        assert_eq!(ext.total_tuples, 12);
        // Orbit count of plain n-tuples equals |extended set| / |G|.
        assert_eq!(
            census_naive(&s3, 3, 1).unwrap().orbit_count(),
            ext.total_tuples / s3.order()
        );
        let trivial = parse_group("C1").unwrap();
        for n in 0..=3 {
            assert_eq!(census_extended(&trivial, 2, n).unwrap().orbit_count(), 1);
        }
    }

    #[test]
    fn chi_closed_forms_for_small_groups() {
        let d8 = parse_group("D8").unwrap();
        for n in 1..=3u32 {
            assert_eq!(
                chi_kn_finite(&d8, 2, n as usize).unwrap(),
                (3 * 4u64.pow(n) - 2u64.pow(n)) / 2
            );
        }
        let d12 = parse_group("D12").unwrap();
        for n in 1..=3u32 {
            assert_eq!(chi_kn_finite(&d12, 2, n as usize).unwrap(), 4u64.pow(n));
        }
        let c2 = parse_group("C2").unwrap();
        for n in 0..=4 {
            assert_eq!(chi_kn_finite(&c2, 3, n).unwrap(), 1);
        }
    }

    #[test]
    fn census_cap_is_enforced() {
        let big = parse_group("C2xC2xC2xC2").unwrap();
        // 16^3 = 4096 raw tuples exceed an artificial cap of 1000.
        assert!(matches!(
            census_naive_capped(&big, 2, 3, 1000),
            Err(Error::CensusTooLarge { .. })
        ));
        // The recursion is exempt from the cap.
        assert_eq!(census_recursive(&big, 2, 3).unwrap(), 16u64.pow(3));
    }

    #[test]
    fn monotone_growth_in_arity() {
        for spec in ["S3", "D8", "S4", "A4"] {
            let g = parse_group(spec).unwrap();
            for p in [2, 3] {
                let mut prev = 0;
                for n in 0..=3 {
                    let count = census_recursive(&g, p, n).unwrap();
                    assert!(count >= prev, "{spec} p={p} n={n}");
                    prev = count;
                }
            }
        }
    }
}
