//! The acceptance suite: one test per criterion, each printing its
//! pass/fail line. Run with `cargo test -p dagger-harness --test acceptance`
//! (or `orthokit suite` for the same battery through the CLI).

use dagger_harness::acceptance::run_criterion;

fn run(id: usize) {
    let report = run_criterion(id);
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_01_dacey_criteria_equivalence() {
    run(1);
}

#[test]
fn criterion_02_adjoint_synthesis_completeness() {
    run(2);
}

#[test]
fn criterion_03_kernel_image_duality() {
    run(3);
}

#[test]
fn criterion_04_projection_criteria_equivalence() {
    run(4);
}

#[test]
fn criterion_05_exact_orthomodularity() {
    run(5);
}

#[test]
fn criterion_06_linear_adjoint_bridge() {
    run(6);
}

#[test]
fn criterion_07_semiadditive_agreement() {
    run(7);
}

#[test]
fn criterion_08_strict_square_root_dichotomy() {
    run(8);
}

#[test]
fn criterion_09_hypothesis_harness_fixtures() {
    run(9);
}

#[test]
fn criterion_10_cross_module_bridge() {
    run(10);
}
