//! The Burnside ring of classes [G] with its loop and shift operators.
//!
//! The ring is free on isomorphism classes of finite groups with
//! [G][H] = [G×H]. The loop operator replaces a class by the sum of its
//! element centralizers; the p-typical shift does the same over orbits of
//! commuting p-power tuples. Composing them steps along the chromatic
//! sequence chi_orb, chi_Q, chi_K(1), chi_K(2), …  Run with:
//!
//! ```text
//! cargo run --example burnside_operators
//! ```

use num_bigint::BigInt;
use orbichar::rational::Rational;
use orbichar::{parse_group, BurnsideRing};

fn main() -> orbichar::Result<()> {
    let ring = BurnsideRing::new();
    let s4 = ring.class_of(&parse_group("S4")?);

    // The basis rule for multiplication.
    let d12 = ring.class_of(&parse_group("D12")?);
    let product = ring.multiply(&s4, &d12)?;
    println!("[S4]*[D12] = {}", ring.describe(&product));
    println!(
        "chi_orb is multiplicative: {} = {} * {}",
        ring.chi_orb(&product),
        ring.chi_orb(&s4),
        ring.chi_orb(&d12)
    );

    // The loop operator sends [G] to the sum of centralizer classes; its
    // orbifold characteristic is the class equation, hence chi_Q.
    let looped = ring.loop_op(&s4);
    println!("\nloop [S4] = {}", ring.describe(&looped));
    println!("chi_orb(loop [S4]) = {} = chi_Q[S4]", ring.chi_orb(&looped));

    // The shift operator steps the chromatic height: evaluating chi_K(m)
    // after a height-n shift gives chi_K(m+n).
    for n in 0..=2usize {
        let shifted = ring.p_shift(&s4, 2, n)?;
        println!("\nshift by n={n} at p=2: {}", ring.describe(&shifted));
        for m in 0..=(2 - n) {
            let left = ring.chi_kn(&shifted, 2, m)?;
            let right = ring.chi_kn(&s4, 2, m + n)?;
            assert_eq!(left, right);
            println!(
                "  chi_K({m}) of the shift = chi_K({}) of [S4] = {left}",
                m + n
            );
        }
        // One more loop lands at height −1: the orbifold value computes
        // chi_K(n) itself.
        let orbifold = ring.chi_orb(&ring.loop_op(&shifted));
        assert_eq!(orbifold, Rational::from_integer(ring.chi_kn(&s4, 2, n)?));
        println!("  chi_orb(loop(shift)) = {orbifold}");
    }

    // phi_K counts conjugacy classes of embeddings of K; on the diagonal it
    // is the order of the outer automorphism group.
    let q8 = parse_group("Q8")?;
    println!(
        "\nphi_Q8[Q8] = {} = |Out(Q8)|",
        ring.phi_k(&ring.class_of(&q8), &q8)
    );
    assert_eq!(ring.chi_q(&s4), 1);
    assert_eq!(ring.chi_kn(&s4, 2, 0)?, BigInt::from(1));
    Ok(())
}
