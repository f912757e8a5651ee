//! Counting conjugation orbits of commuting tuples in finite groups.
//!
//! For a finite group the orbit count of commuting n-tuples of
//! p-power-order elements is the height-n Euler characteristic of its
//! classifying space. Run with:
//!
//! ```text
//! cargo run --example census_basics
//! ```

use orbichar::{census_naive, census_recursive, chi_kn_finite, parse_group};

fn main() -> orbichar::Result<()> {
    // Censuses of a dihedral group at the prime 2. All eight elements have
    // 2-power order, so single elements give the five conjugacy classes.
    let d8 = parse_group("D8")?;
    let census = census_naive(&d8, 2, 1)?;
    println!(
        "D8 at p=2, n=1: {} orbits among {} elements",
        census.orbit_count(),
        census.total_tuples
    );
    for orbit in &census.orbits {
        let rep: Vec<String> = orbit.rep.iter().map(|p| p.to_string()).collect();
        println!(
            "  orbit of ({}) has size {}, centralizer of order {}",
            rep.join(", "),
            orbit.size,
            orbit.centralizer.order()
        );
    }

    // Higher arity: the closed form is (3*4^n - 2^n)/2.
    print!("D8 at p=2, n=1..4:");
    for n in 1..=4 {
        print!(" {}", chi_kn_finite(&d8, 2, n)?);
    }
    println!();

    // The two counting routes always agree: direct enumeration vs the
    // recursion over centralizers of single elements.
    let s4 = parse_group("S4")?;
    for p in [2u64, 3, 5] {
        for n in 0..=3 {
            let naive = census_naive(&s4, p, n)?.orbit_count();
            let recursive = census_recursive(&s4, p, n)?;
            assert_eq!(naive, recursive);
            print!("{naive:>5}");
        }
        println!("   <- S4 at p={p}, n=0..3");
    }

    // A group with no p-torsion only ever has the identity tuple.
    let c2 = parse_group("C2")?;
    println!("C2 at p=3, n=10: {}", census_recursive(&c2, 3, 10)?);
    Ok(())
}
