//! The spectrum-generating walk, step by step.
//!
//! Starting from one normalized eigenvalue on a base summand, transition
//! quotients between lattice neighbours determine the whole spectrum. This
//! prints the quotient diagram around a summand, propagates from the base,
//! and confirms the result against the closed form.
//!
//! ```bash
//! cargo run --example spectrum_generating
//! ```

use sphere_spectra::engine::{
    canonical_base, neighbors, propagate, transition_quotient, verify_against_closed_form,
    OperatorSpec,
};
use sphere_spectra::weights::{BundleSpec, Family, IsotypicLabel, Sign};

fn main() {
    let bundle = BundleSpec::new(5, 2, Family::Symmetric, None).unwrap();
    let op = OperatorSpec::higher_spin();

    let center = IsotypicLabel::new(Some(Sign::Plus), 2, Some(1));
    println!("quotients out of {center} on the k = 2 bundle over S^5:");
    for dst in neighbors(&bundle, &center).unwrap() {
        let q = transition_quotient(&bundle, &center, &dst, &op).unwrap();
        println!("  {center} -> {dst}: {q}");
    }

    let (base_label, base_value) = canonical_base(&bundle);
    println!("\npropagating from {base_label} = {base_value}:");
    let table = propagate(&bundle, &op, (&base_label, &base_value), 3).unwrap();
    for entry in table.entries.iter().take(12) {
        println!(
            "  {} -> {}  (multiplicity {})",
            entry.label,
            entry.eigenvalue.as_ref().unwrap(),
            entry.multiplicity
        );
    }

    let report = verify_against_closed_form(&bundle, &op, 10).unwrap();
    println!(
        "\nclosed-form agreement over {} summands: {}",
        report.rows.len(),
        if report.pass { "exact" } else { "FAILED" }
    );
    assert!(report.pass);
}
