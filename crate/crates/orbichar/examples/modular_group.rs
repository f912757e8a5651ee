//! The modular group SL2(Z) two ways: through its Bass–Serre tree and
//! through the closed form for SL2 over rings of integers.
//!
//! SL2(Z) is the amalgam C6 ∗_C2 C4, so a tree with three equivariant
//! cells computes every characteristic; the same values fall out of the
//! zeta-value formula with the maximal-finite-subgroup table. Run with:
//!
//! ```text
//! cargo run --example modular_group
//! ```

use orbichar::cells::sl2z_tree;
use orbichar::closed::{chi_sl2_ok, chi_sl2_ok_p2, Constants};

fn main() -> orbichar::Result<()> {
    let tree = sl2z_tree();
    println!(
        "{}: chi_orb = {}, chi_Q = {}",
        tree.label,
        tree.chi_orb(),
        tree.chi_q()
    );
    println!("\nfrom the tree:");
    println!(
        "  p=2, n=1..3: {} {} {}",
        tree.chi_kn(2, 1)?,
        tree.chi_kn(2, 2)?,
        tree.chi_kn(2, 3)?
    );
    println!(
        "  p=3, n=1..3: {} {} {}",
        tree.chi_kn(3, 1)?,
        tree.chi_kn(3, 2)?,
        tree.chi_kn(3, 3)?
    );

    // The closed form takes zeta_Q(-1) = -1/12 and the maximal finite
    // subgroups (one class each of C4 and C6) as inputs.
    let constants = Constants::bundled();
    let zeta = &constants.zeta("Q").expect("bundled").value;
    println!("\nfrom the closed form with zeta_Q(-1) = {zeta}:");
    let maximal2 = constants.sl2_maximal_data("Q", 2).expect("bundled");
    print!("  p=2, n=1..3:");
    for n in 1..=3 {
        print!(" {}", chi_sl2_ok_p2(n, zeta, &maximal2)?);
    }
    let maximal3 = constants.sl2_maximal_data("Q", 3).expect("bundled");
    print!("\n  p=3, n=1..3:");
    for n in 1..=3 {
        print!(" {}", chi_sl2_ok(3, n, zeta, &maximal3)?);
    }
    println!();

    // The same formula over the golden-ratio integers Z[(1+sqrt5)/2],
    // where zeta_K(-1) = 1/30 and there are two classes each of maximal
    // C4, C6 and C10: the values are 2*3^n + 2 at p = 3.
    let zeta5 = &constants.zeta("Q(sqrt5)").expect("bundled").value;
    let maximal5 = constants.sl2_maximal_data("Q(sqrt5)", 3).expect("bundled");
    print!("\nSL2(O_Q(sqrt5)) at p=3, n=1..3:");
    for n in 1..=3 {
        print!(" {}", chi_sl2_ok(3, n, zeta5, &maximal5)?);
    }
    println!();
    Ok(())
}
