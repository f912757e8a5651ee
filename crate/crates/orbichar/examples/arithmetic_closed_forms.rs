//! Closed forms for arithmetic, crystallographic and mapping class groups.
//!
//! The number-theoretic inputs (zeta values, class numbers, rational Euler
//! characteristics) ship in a constants file together with their sources;
//! the formulas evaluate exactly. Run with:
//!
//! ```text
//! cargo run --example arithmetic_closed_forms
//! ```

use orbichar::closed::{
    chi_crystallographic, chi_gl2_at_3, chi_gl_pminus1, chi_mapping_class, chi_sp_pminus1,
    Constants,
};

fn main() -> orbichar::Result<()> {
    let constants = Constants::bundled();

    // Symplectic groups: chi_Q + 2^((p-1)/2) h_p^- (p^n-1)/(p-1).
    let chi_q = constants.chi_q("Sp18(Z)").unwrap().value.clone().unwrap();
    let h_minus = constants.h_minus(19).unwrap().value;
    print!("Sp18(Z) at p=19, n=1..3:");
    for n in 1..=3 {
        print!(" {}", chi_sp_pminus1(19, n, &chi_q, h_minus)?);
    }
    println!("   (chi_Q = {chi_q}, h- = {h_minus})");

    // Mapping class groups of genus (p-1)/2.
    let chi_q = constants.chi_q("Gamma15").unwrap().value.clone().unwrap();
    print!("Gamma_15 at p=31, n=1..3:");
    for n in 1..=3 {
        print!(" {}", chi_mapping_class(31, n, &chi_q)?);
    }
    println!("   (chi_Q = {chi_q} from the Harer-Zagier table)");

    // General linear groups: the characteristic equals the rational one;
    // the decomposition carries torus summands instead.
    let chi_q = constants.chi_q_gl(5).unwrap();
    let summands = chi_gl_pminus1(5, 2, &chi_q.value, constants.class_number(5).unwrap().value)?;
    println!(
        "GL4(Z) at p=5, n=2: chi = {}, {} torus summands of dimension {}",
        summands.chi_kn, summands.summand_count, summands.torus_dim
    );

    // The p = 3 case of GL2(Z) is special: centralizers are finite.
    print!("GL2(Z) at p=3, n=1..3:");
    for n in 1..=3 {
        print!(" {}", chi_gl2_at_3(n));
    }
    println!();

    // Crystallographic groups Z^m x| C_p with a free action: r p^n - r/p.
    print!("Z^4 x| C5 (free, r=5), heights -1..3:");
    for n in -1..=3i64 {
        print!(" {}", chi_crystallographic(5, n, 5, true, false)?);
    }
    println!();

    // With fixed points every height vanishes.
    println!(
        "with fixed vectors instead: {}",
        chi_crystallographic(5, 2, 5, false, true)?
    );
    Ok(())
}
