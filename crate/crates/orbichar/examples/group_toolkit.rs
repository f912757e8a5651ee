//! The finite-group substrate: specs, closure, conjugacy, centralizers,
//! products, and isomorphism classification.
//!
//! Run with:
//!
//! ```text
//! cargo run --example group_toolkit
//! ```

use orbichar::{is_isomorphic, monomorphism_classes, parse_group, FiniteGroup, Permutation};

fn main() -> orbichar::Result<()> {
    // Groups come from the spec grammar or from explicit generators.
    let s4 = parse_group("S4")?;
    println!("{s4}: {} conjugacy classes", s4.conjugacy_classes().count());

    let r = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]])?;
    let s = Permutation::from_cycles(4, &[vec![0, 2]])?;
    let d8 = FiniteGroup::closure(&[r.clone(), s])?;
    println!("<(0 1 2 3), (0 2)> has order {}", d8.order());

    // Class sizes multiply with centralizer orders to the group order.
    for &rep in &d8.conjugacy_classes().representatives() {
        let centralizer = d8.centralizer(&[d8.element(rep).clone()])?;
        println!(
            "  class of {} has size {}, centralizer order {}",
            d8.element(rep),
            d8.conjugacy_classes().classes()[d8.class_index(rep)].len(),
            centralizer.order()
        );
    }

    // The rotation generates a C4 inside D8.
    let c4 = d8.subgroup_generated(&[r])?;
    println!("rotation subgroup has order {}", c4.order());

    // Isomorphism classification reduces products to familiar names.
    let d12 = parse_group("D12")?;
    let s3xc2 = parse_group("S3xC2")?;
    println!("D12 = S3xC2? {}", is_isomorphic(&d12, &s3xc2));
    println!(
        "C4 = C2xC2? {}",
        is_isomorphic(&parse_group("C4")?, &parse_group("C2xC2")?)
    );

    // Counting conjugacy classes of embeddings; the diagonal counts outer
    // automorphisms.
    println!(
        "embeddings of C3 in S4 up to conjugacy: {}",
        monomorphism_classes(&parse_group("C3")?, &s4)
    );
    println!(
        "|Out(C2xC2)| = {}",
        monomorphism_classes(&parse_group("C2xC2")?, &parse_group("C2xC2")?)
    );
    Ok(())
}
