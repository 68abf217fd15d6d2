//! Brute-force cross-check of the label enumeration.
//!
//! Independently of the (ε, j, q) coordinates, every dominant Spin(n+1)
//! weight with bounded first entry is generated by exhaustive recursion and
//! filtered through the branching rule. The surviving set must coincide
//! exactly with the weights of the enumerated labels.

use std::collections::BTreeSet;

use sphere_spectra::weights::{
    branches, enumerate_labels, label_to_weight, BundleSpec, Chirality, Family, Weight,
};

/// All dominant Spin(m) weights with the given entry parity (0 integral,
/// 1 half-odd) and first entry at most `max_twice`/2, in doubled coordinates.
fn dominant_weights(m: u32, parity: i64, max_twice: i64) -> Vec<Weight> {
    let rank = (m / 2) as usize;
    let mut out = Vec::new();
    let mut stack: Vec<i64> = Vec::with_capacity(rank);
    gen(m, rank, parity, max_twice, &mut stack, &mut out);
    return out;

    fn gen(m: u32, rank: usize, parity: i64, bound: i64, stack: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if stack.len() == rank {
            out.push(Weight::from_twice(stack));
            return;
        }
        let last_slot = stack.len() == rank - 1;
        let hi = stack.last().copied().unwrap_or(bound);
        // The final slot of an even-rank group may be negative.
        let lo = if last_slot && m % 2 == 0 { -hi } else { 0 };
        let mut t = lo;
        // Align to parity.
        if (t - parity).rem_euclid(2) != 0 {
            t += 1;
        }
        while t <= hi {
            stack.push(t);
            gen(m, rank, parity, bound, stack, out);
            stack.pop();
            t += 2;
        }
    }
}

fn check_bundle(b: BundleSpec, j_max: u32) {
    let lambda = b.m_weight();
    let lam_first = lambda.entries()[0].twice();
    let bound = lam_first + 2 * j_max as i64;
    let parity = lam_first.rem_euclid(2);
    let brute: BTreeSet<Vec<i64>> = dominant_weights(b.n() + 1, parity, bound)
        .into_iter()
        .filter(|alpha| branches(alpha, &lambda, b.n()).unwrap())
        .map(|alpha| alpha.entries().iter().map(|h| h.twice()).collect())
        .collect();
    let enumerated: BTreeSet<Vec<i64>> = enumerate_labels(&b, j_max)
        .iter()
        .map(|lab| {
            label_to_weight(&b, lab)
                .unwrap()
                .entries()
                .iter()
                .map(|h| h.twice())
                .collect()
        })
        .collect();
    assert_eq!(
        enumerated.len(),
        enumerate_labels(&b, j_max).len(),
        "duplicate weights among labels for {b:?}"
    );
    assert_eq!(enumerated, brute, "label lattice disagrees with brute force for {b:?}");
}

#[test]
fn symmetric_bundles_match_brute_force() {
    for (n, k) in [(3u32, 0u32), (3, 2), (4, 0), (4, 2), (5, 1), (5, 3), (6, 2), (7, 1)] {
        let chir = if n % 2 == 0 { Some(Chirality::Plus) } else { None };
        check_bundle(BundleSpec::new(n, k, Family::Symmetric, chir).unwrap(), 12);
    }
}

#[test]
fn form_bundles_match_brute_force() {
    for (n, k) in [(3u32, 0u32), (3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2), (7, 2), (7, 3)] {
        let chir = if n % 2 == 0 { Some(Chirality::Plus) } else { None };
        check_bundle(BundleSpec::new(n, k, Family::Form, chir).unwrap(), 12);
    }
}

#[test]
fn chirality_does_not_change_the_lattice() {
    // Both chiralities of an even-n bundle branch to the same Spin(n+1) set.
    for family in [Family::Symmetric, Family::Form] {
        let plus = BundleSpec::new(6, 1, family, Some(Chirality::Plus)).unwrap();
        let minus = BundleSpec::new(6, 1, family, Some(Chirality::Minus)).unwrap();
        let weights = |b: &BundleSpec| -> Vec<Weight> {
            enumerate_labels(b, 6)
                .iter()
                .map(|lab| label_to_weight(b, lab).unwrap())
                .collect()
        };
        assert_eq!(weights(&plus), weights(&minus));
        check_bundle(minus, 8);
    }
}
