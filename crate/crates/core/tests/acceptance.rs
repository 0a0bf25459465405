//! The acceptance gate: every suite must pass, printing one line per
//! criterion.  Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use starcat::bounds::Budget;
use starcat::{corpus, suites};

fn gate(name: &str, report: &starcat::report::Report) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "[{status}] {name}: {}/{} checks",
        report.checks.iter().filter(|c| c.status == starcat::report::Status::Pass).count(),
        report.checks.len()
    );
    if !report.passed() {
        for c in &report.checks {
            if c.status == starcat::report::Status::Fail {
                println!("    FAIL {} — {}", c.name, c.witness.as_deref().unwrap_or(""));
            }
        }
    }
    assert!(report.passed(), "criterion failed: {name}");
}

#[test]
fn criterion_1_representability() {
    let report = suites::representability_suite(&corpus::categories(), &Budget::default());
    assert!(report.checks.len() >= 10 * 3);
    gate("1 representability", &report);
}

#[test]
fn criterion_2_equivalence_characterization() {
    let cats = corpus::categories();
    let morphisms = corpus::morphisms();
    assert!(morphisms.len() >= 30);
    let report = suites::equivalence_suite(&cats, &morphisms, &Budget::default());
    gate("2 equivalence-characterization", &report);
}

#[test]
fn criterion_3_exponential_law() {
    let report = suites::exponential_suite(
        suites::builtin_triples_times(),
        suites::builtin_triples_tensor(),
        &Budget::default(),
    );
    assert!(report.checks.len() >= 10);
    gate("3 exponential-law", &report);
}

#[test]
fn criterion_4_factorizations() {
    let report = suites::factorization_suite(
        &corpus::categories(),
        &corpus::morphisms(),
        &Budget::default(),
    );
    gate("4 factorization", &report);
}

#[test]
fn criterion_5_model_axioms() {
    let report = suites::model_suite(
        &corpus::categories(),
        &corpus::morphisms(),
        &corpus::retract_diagrams(6),
        &Budget::default(),
    );
    gate("5 model-axioms", &report);
}

#[test]
fn criterion_6_fixed_points() {
    let report = suites::fixed_point_suite(
        &corpus::actions(),
        &corpus::linear_actions(),
        &Budget::default(),
    );
    // ≥ 6 actions with the iso check, plus unit and fibrancy lines.
    assert!(report.checks.iter().filter(|c| c.name.contains("≅ lim resolution")).count() >= 6);
    gate("6 fixed-point", &report);
}

#[test]
fn criterion_7_orbits() {
    let report = suites::orbit_suite(
        &[starcat::equivariant::FinGroup::cyclic(2), starcat::equivariant::FinGroup::cyclic(3)],
        &suites::builtin_groupoids(),
        true,
        &Budget::default(),
    );
    gate("7 orbit", &report);
}

#[test]
fn criterion_8_controlled() {
    let report = suites::controlled_suite(&suites::builtin_spaces(), &Budget::default());
    gate("8 controlled", &report);
}

#[test]
fn criterion_9_pi() {
    let report = suites::pi_suite(&suites::builtin_groupoids(), &Budget::default());
    gate("9 pi", &report);
}
