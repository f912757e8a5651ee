//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every comparison is exact; run with `--nocapture` to see the lines
//! for passing criteria too.

use orbichar::verify::{self, Check, CRITERIA};

fn run_criterion(number: u8) {
    let (_, tag, description) = CRITERIA
        .iter()
        .find(|(n, _, _)| *n == number)
        .expect("criterion number");
    let checks: Vec<Check> = verify::run(Some(tag))
        .into_iter()
        .filter(|c| c.criterion == number)
        .collect();
    assert!(!checks.is_empty(), "criterion {number} produced no checks");
    let failures: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion {number} [{status}] {description} ({} checks)",
        checks.len()
    );
    for failure in &failures {
        println!(
            "    {}: expected {}, got {}",
            failure.name, failure.expected, failure.got
        );
    }
    assert!(
        failures.is_empty(),
        "criterion {number} ({description}) failed {} of {} checks",
        failures.len(),
        checks.len()
    );
}

#[test]
fn criterion_1_finite_group_census_closed_forms() {
    run_criterion(1);
}

#[test]
fn criterion_2_recursion_equals_enumeration() {
    run_criterion(2);
}

#[test]
fn criterion_3_sl3z_cell_complex() {
    run_criterion(3);
}

#[test]
fn criterion_4_amalgam_trees() {
    run_criterion(4);
}

#[test]
fn criterion_5_chromatic_ladder() {
    run_criterion(5);
}

#[test]
fn criterion_6_basis_triangularity() {
    run_criterion(6);
}

#[test]
fn criterion_7_coxeter_formulas() {
    run_criterion(7);
}

#[test]
fn criterion_8_arithmetic_closed_forms() {
    run_criterion(8);
}

#[test]
fn criterion_9_ring_homomorphism_laws() {
    run_criterion(9);
}
