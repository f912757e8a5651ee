//! Evaluating the Soulé cell structure for SL3(Z).
//!
//! The built-in structure records the sixteen equivariant cell orbits of
//! Soulé's model with their stabilizers (S4, D8, D12, S3, C2, C2×C2 and
//! free cells). The alternating sum of census counts over the cells gives
//! 3^n at p = 3 and 2^(2n+1) − 2^(n+1) + 1 at p = 2. Run with:
//!
//! ```text
//! cargo run --example sl3z_complex
//! ```

use orbichar::soule_sl3;
use orbichar::BurnsideRing;

fn main() -> orbichar::Result<()> {
    let soule = soule_sl3();
    println!("{}", soule.label);
    println!("dim  stabilizer  multiplicity");
    for cell in &soule.cells {
        println!(
            "{:>3}  {:<10}  {}",
            cell.dim,
            cell.stabilizer.display_name(),
            cell.multiplicity
        );
    }

    let ring = BurnsideRing::new();
    let class = soule.to_burnside_class(&ring);
    println!("\nBurnside class: {}", ring.describe(&class));
    println!("chi_Q = {} (the quotient is contractible)", soule.chi_q());
    println!("chi_orb = {}", soule.chi_orb());

    for p in [2u64, 3, 5] {
        print!("p={p}, n=1..3:");
        for n in 1..=3 {
            print!(" {}", soule.chi_kn(p, n)?);
        }
        println!();
    }

    // The file format round-trips, so custom complexes can be stored next
    // to the built-ins.
    println!("\nas JSON:\n{}", soule.to_json());
    Ok(())
}
