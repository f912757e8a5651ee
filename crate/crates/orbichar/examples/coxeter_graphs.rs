//! Right-angled Coxeter groups from their defining graphs.
//!
//! Every invariant is a function of the clique profile s(l): the census
//! count at height n is Σ s(l)(2ⁿ−1)ˡ, and the formal substitution
//! n = −1 recovers the orbifold Euler characteristic. Run with:
//!
//! ```text
//! cargo run --example coxeter_graphs
//! ```

use orbichar::coxeter::{chi_kn_coxeter, chi_orb_coxeter, clique_census, Graph};
use orbichar::{census_recursive, parse_group};

fn main() -> orbichar::Result<()> {
    let pentagon = Graph::cycle(5);
    let profile = clique_census(&pentagon);
    println!("pentagon: clique profile {:?}", profile.counts());
    println!("  chi_orb = {}", chi_orb_coxeter(&pentagon));
    for n in 0..=3 {
        println!("  height {n}: {}", chi_kn_coxeter(&pentagon, n));
    }

    // A complete graph on s vertices gives the finite group (C2)^s, and the
    // graph formula collapses to the plain census of commuting tuples.
    let square = Graph::complete(4);
    let elementary = parse_group("C2xC2xC2xC2")?;
    for n in 0..=3 {
        assert_eq!(
            chi_kn_coxeter(&square, n),
            census_recursive(&elementary, 2, n)?.into()
        );
    }
    println!("\ncomplete graph K4 matches the census of (C2)^4: 1, 16, 256, 4096");

    // Graphs parse from edge-list text or JSON.
    let path = Graph::parse_edge_list("0 1\n1 2\n2 3\n")?;
    println!(
        "\npath on 4 vertices: profile {:?}, chi_orb = {}",
        clique_census(&path).counts(),
        chi_orb_coxeter(&path)
    );
    let star = Graph::from_json(r#"{"vertices": 5, "edges": [[0,1],[0,2],[0,3],[0,4]]}"#)?;
    println!(
        "star on 5 vertices: profile {:?}, height 2 count = {}",
        clique_census(&star).counts(),
        chi_kn_coxeter(&star, 2)
    );
    Ok(())
}
