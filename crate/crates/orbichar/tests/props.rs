//! Property tests for the algebraic invariants.

use num_bigint::BigInt;
use proptest::prelude::*;

use orbichar::burnside::{BurnsideClass, BurnsideRing};
use orbichar::cells::{Cell, ProperCellStructure};
use orbichar::coxeter::{self, Graph};
use orbichar::names::parse_group;
use orbichar::rational::{parse_rational, Rational};

/// Brute-force clique profile over all vertex subsets.
fn clique_profile_by_subsets(graph: &Graph) -> Vec<u64> {
    let n = graph.vertex_count();
    let mut counts = vec![0u64; n + 1];
    'subsets: for mask in 0u32..(1u32 << n) {
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

fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9).prop_flat_map(|n| {
        let pair_count = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::ANY, pair_count).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n as u32 {
                for b in a + 1..n as u32 {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).expect("generated graph is simple")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clique_census_matches_subset_enumeration(graph in arbitrary_graph()) {
        let profile = coxeter::clique_census(&graph);
        let oracle = clique_profile_by_subsets(&graph);
        prop_assert_eq!(profile.counts(), oracle.as_slice());
    }

    #[test]
    fn coxeter_chi_is_monotone_in_the_graph(graph in arbitrary_graph(), n in 1usize..=3) {
        // Dropping an edge never increases the count.
        if let Some((a, b)) = graph.edges().next() {
            let smaller = Graph::new(
                graph.vertex_count(),
                graph.edges().filter(|&e| e != (a, b)),
            ).unwrap();
            prop_assert!(
                coxeter::chi_kn_coxeter(&smaller, n) <= coxeter::chi_kn_coxeter(&graph, n)
            );
        }
    }
}

fn stabilizer_pool() -> Vec<&'static str> {
    vec!["C1", "C2", "C3", "C4", "C2xC2", "S3", "D8", "Q8", "C6"]
}

fn arbitrary_cells() -> impl Strategy<Value = ProperCellStructure> {
    let pool = stabilizer_pool();
    let count = pool.len();
    proptest::collection::vec((0u32..=3, 0..count, 1u32..=3), 1..=6).prop_map(move |raw| {
        let cells = raw
            .into_iter()
            .map(|(dim, idx, multiplicity)| Cell {
                dim,
                stabilizer: parse_group(stabilizer_pool()[idx]).unwrap(),
                multiplicity,
            })
            .collect();
        ProperCellStructure::new("random structure", cells)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cell_evaluation_factors_through_the_burnside_class(
        structure in arbitrary_cells(),
        p in prop_oneof![Just(2u64), Just(3u64)],
        n in 0usize..=2,
    ) {
        let ring = BurnsideRing::new();
        let class = structure.to_burnside_class(&ring);
        prop_assert_eq!(
            structure.chi_kn(p, n).unwrap(),
            ring.chi_kn(&class, p, n).unwrap()
        );
        prop_assert_eq!(
            BigInt::from(structure.chi_q()),
            BigInt::from(ring.chi_q(&class))
        );
        prop_assert_eq!(structure.chi_orb(), ring.chi_orb(&class));
    }

    #[test]
    fn cell_lists_are_order_independent(structure in arbitrary_cells(), seed in 0usize..6) {
        let ring = BurnsideRing::new();
        let mut shuffled = structure.clone();
        let len = shuffled.cells.len().max(1);
        shuffled.cells.rotate_left(seed % len);
        if seed % 2 == 0 {
            shuffled.cells.reverse();
        }
        prop_assert_eq!(
            structure.to_burnside_class(&ring),
            shuffled.to_burnside_class(&ring)
        );
        prop_assert_eq!(structure.chi_kn(2, 1).unwrap(), shuffled.chi_kn(2, 1).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_group_laws(coeffs in proptest::collection::vec(-5i64..=5, 4)) {
        let ring = BurnsideRing::new();
        let basis = ["C2", "C3", "D8", "S3"];
        let mut x = BurnsideClass::zero();
        for (spec, &c) in basis.iter().zip(&coeffs) {
            x = &x + &ring.class_of(&parse_group(spec).unwrap()).scale(c);
        }
        // Additive inverse and doubling.
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x + &x, x.scale(2));
        // chi_Q is the coefficient sum.
        prop_assert_eq!(ring.chi_q(&x), coeffs.iter().sum::<i64>());
        // chi_orb is linear.
        let expected: Rational = basis
            .iter()
            .zip(&coeffs)
            .map(|(spec, &c)| {
                let g = parse_group(spec).unwrap();
                Rational::new(BigInt::from(c), BigInt::from(g.order()))
            })
            .sum();
        prop_assert_eq!(ring.chi_orb(&x), expected);
    }

    #[test]
    fn rational_display_round_trips(num in -10_000i64..=10_000, den in 1i64..=10_000) {
        let value = Rational::new(BigInt::from(num), BigInt::from(den));
        prop_assert_eq!(parse_rational(&value.to_string()).unwrap(), value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn commuting_sets_generate_inside_their_centralizer(
        a in 0u32..24, b in 0u32..24,
    ) {
        let s4 = parse_group("S4").unwrap();
        if s4.element(a).commutes_with(s4.element(b)) {
            let set = [s4.element(a).clone(), s4.element(b).clone()];
            let generated = s4.subgroup_generated(&set).unwrap();
            let centralizer = s4.centralizer(&set).unwrap();
            for p in generated.elements() {
                prop_assert!(centralizer.contains(p));
            }
            // Lagrange on the subgroup.
            prop_assert_eq!(s4.order() % generated.order(), 0);
        }
    }
}
