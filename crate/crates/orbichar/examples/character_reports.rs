//! Character decomposition reports: how the localized cohomology of a
//! classifying space splits into summands indexed by tuple orbits.
//!
//! For finite groups every summand is free of rank one in even degree; for
//! the arithmetic families the centralizers contribute torus factors
//! (L ⊕ L[1])^⊗d or the ambient group's own cohomology. Run with:
//!
//! ```text
//! cargo run --example character_reports
//! ```

use orbichar::coxeter::Graph;
use orbichar::parse_group;
use orbichar::report::{report_coxeter, report_finite, report_gl, report_sp};

fn print_report(report: &orbichar::CharacterReport) {
    println!(
        "{} at p={}, height {}: {} summands",
        report.target,
        report.prime,
        report.height,
        report.summand_count()
    );
    for summand in &report.summands {
        println!(
            "  {:>6} x {:<28} {}",
            summand.count.to_string(),
            summand.centralizer,
            summand.contribution.describe()
        );
    }
    let (even, odd, unresolved) = report.known_free_rank();
    println!(
        "  known free part: even rank {even}, odd rank {odd}{}\n",
        if unresolved {
            " (plus the ambient cohomology)"
        } else {
            ""
        }
    );
}

fn main() -> orbichar::Result<()> {
    // Finite group: one rank-one even summand per tuple orbit.
    let s4 = parse_group("S4")?;
    print_report(&report_finite(&s4, 2, 2)?);

    // GL4(Z) at p=5: torus summands whose Euler characteristics cancel.
    print_report(&report_gl(5, 1, 1)?);

    // Sp4(Z) at p=5: finite centralizers C5 x C2.
    print_report(&report_sp(5, 1, 1)?);

    // A Coxeter group: free module whose rank is the census count.
    print_report(&report_coxeter(&Graph::cycle(5), 2));
    Ok(())
}
