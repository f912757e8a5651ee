//! The amalgamated product of two dihedral groups of order 8 along a
//! common cyclic subgroup of order 4.
//!
//! Bass–Serre theory gives a tree with two vertex orbits (stabilizers D8)
//! and one edge orbit (stabilizer C4); the alternating sum of census counts
//! over the cells computes the Euler characteristics of the classifying
//! space of the infinite amalgam. Run with:
//!
//! ```text
//! cargo run --example dihedral_amalgam
//! ```

use orbichar::cells::amalgam_auto;
use orbichar::{census_recursive, parse_group, BurnsideRing};

fn main() -> orbichar::Result<()> {
    let d8 = parse_group("D8")?;
    let c4 = parse_group("C4")?;
    let tree = amalgam_auto(&d8, &d8, &c4)?;
    println!("cell structure: {}", tree.label);

    // At (p, n) = (2, 1): D8 has 5 conjugacy classes, C4 has 4, giving
    // 2*5 - 4 = 6.
    let d8_classes = census_recursive(&d8, 2, 1)?;
    let c4_classes = census_recursive(&c4, 2, 1)?;
    println!(
        "per-cell counts at (p, n) = (2, 1): {d8_classes} + {d8_classes} - {c4_classes} = {}",
        tree.chi_kn(2, 1)?
    );

    println!("\nheight  chi");
    println!("    -1  {}", tree.chi_orb());
    println!("     0  {}", tree.chi_q());
    for n in 1..=4 {
        println!("     {n}  {}", tree.chi_kn(2, n)?);
    }

    // The same class in the Burnside ring: 2[D8] - [C4].
    let ring = BurnsideRing::new();
    let class = tree.to_burnside_class(&ring);
    println!("\nBurnside class: {}", ring.describe(&class));
    println!("chi_orb of the class: {}", ring.chi_orb(&class));
    Ok(())
}
