//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every identity is exact rational equality, zero tolerance; the only
//! non-exact checks are the wall-clock bounds of criterion 8.

use std::time::Instant;

use sphere_spectra::closed_form::{
    d_odd_eigen, factored_identity_check, higher_spin_eigen, higher_spin_sq_eigen, spectral_z,
    tt_star_eigen, GammaRatioSpec, ZVariant,
};
use sphere_spectra::engine::{transition_quotient, verify_against_closed_form, OperatorSpec};
use sphere_spectra::rep::lichnerowicz_check;
use sphere_spectra::tables::{build_table, to_json_bytes, TableOperator, TableRequest};
use sphere_spectra::verify::{run_suite, tt_star_two_path, SuiteKind, VerifyOptions};
use sphere_spectra::weights::{
    label_to_weight, BundleSpec, Chirality, Family, IsotypicLabel, Sign,
};
use sphere_spectra::{rat, Error, Rational};

struct Criterion {
    number: u32,
    name: &'static str,
    start: Instant,
    limit_secs: Option<f64>,
    cases: u64,
    failure: Option<String>,
}

impl Criterion {
    fn new(number: u32, name: &'static str, limit_secs: Option<f64>) -> Self {
        Criterion { number, name, start: Instant::now(), limit_secs, cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed().as_secs_f64();
        if let (None, Some(limit)) = (&self.failure, self.limit_secs) {
            if elapsed >= limit {
                self.failure = Some(format!("took {elapsed:.2} s, limit {limit} s"));
            }
        }
        let status = if self.failure.is_none() { "PASS" } else { "FAIL" };
        println!(
            "criterion {} ({}): {} [{} checks, {:.2} s]",
            self.number, self.name, status, self.cases, elapsed
        );
        if let Some(f) = self.failure {
            panic!("criterion {} failed: {f}", self.number);
        }
    }
}

fn symmetric(n: u32, k: u32) -> BundleSpec {
    let chir = if n % 2 == 0 { Some(Chirality::Plus) } else { None };
    BundleSpec::new(n, k, Family::Symmetric, chir).unwrap()
}

fn form(n: u32, k: u32) -> Option<BundleSpec> {
    let chir = if n % 2 == 0 { Some(Chirality::Plus) } else { None };
    BundleSpec::new(n, k, Family::Form, chir).ok()
}

#[test]
fn criterion_1_diagram_reproduction() {
    let mut c = Criterion::new(1, "diagram reproduction", Some(1.0));

    // Spot checks of the five first-order quotients straight from the
    // transition diagram, then the full sweep through the verify suite.
    for n in [3u32, 5, 7, 9] {
        for k in 0..=3u32 {
            let b = symmetric(n, k);
            let op = OperatorSpec::higher_spin();
            for j in 0..=10u32 {
                for q in 0..=k {
                    let src = IsotypicLabel::new(Some(Sign::Plus), j, Some(q));
                    let level = rat(n as i64 + 2 * (k + j) as i64, 2);
                    let up = IsotypicLabel::new(Some(Sign::Plus), j + 1, Some(q));
                    let got = transition_quotient(&b, &src, &up, &op).unwrap();
                    let expected = (&level + rat(1, 1)) / &level;
                    c.case(got == expected, || format!("n={n} k={k} j={j} q={q}: up-quotient"));
                    let flip = IsotypicLabel::new(Some(Sign::Minus), j, Some(q));
                    let got = transition_quotient(&b, &src, &flip, &op).unwrap();
                    c.case(got == rat(-1, 1), || format!("n={n} k={k} j={j} q={q}: flip"));
                }
            }
        }
    }
    let report = run_suite(
        SuiteKind::Diagrams,
        &VerifyOptions { n_min: 3, n_max: 9, k_max: 3, l_max: 3, j_max: 10 },
    );
    for check in &report.checks {
        c.cases += check.cases;
        c.case(check.pass, || check.failure.clone().unwrap_or_default());
    }
    c.finish();
}

#[test]
fn criterion_2_closed_form_vs_engine() {
    let mut c = Criterion::new(2, "closed form vs engine", Some(5.0));
    for n in 3..=10u32 {
        for k in 0..=3u32 {
            let b = symmetric(n, k);
            match verify_against_closed_form(&b, &OperatorSpec::higher_spin(), 10) {
                Ok(rep) => {
                    c.cases += rep.rows.len() as u64 - 1;
                    c.case(rep.pass, || format!("higher spin n={n} k={k}"));
                }
                Err(e) => c.case(false, || format!("higher spin n={n} k={k}: {e}")),
            }
            let Some(fb) = form(n, k) else { continue };
            for l in 0..=3u32 {
                let two_r = 2 * l as u64 + 1;
                let op = OperatorSpec::factored_odd_order(two_r).unwrap();
                match verify_against_closed_form(&fb, &op, 10) {
                    Ok(rep) => {
                        c.cases += rep.rows.len() as u64 - 1;
                        c.case(rep.pass, || format!("D-odd n={n} k={k} 2r={two_r}"));
                    }
                    Err(e) => c.case(false, || format!("D-odd n={n} k={k} 2r={two_r}: {e}")),
                }
                let op = OperatorSpec::spectral_function(two_r).unwrap();
                match verify_against_closed_form(&fb, &op, 10) {
                    Ok(rep) => {
                        c.cases += rep.rows.len() as u64 - 1;
                        c.case(rep.pass, || format!("Z n={n} k={k} 2r={two_r}"));
                    }
                    Err(e) => c.case(false, || format!("Z n={n} k={k} 2r={two_r}: {e}")),
                }
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_3_lichnerowicz_identity() {
    let mut c = Criterion::new(3, "Lichnerowicz identity", Some(1.0));
    for n in 3..=10u32 {
        for k in 0..=3u32 {
            let b = symmetric(n, k);
            for j in 0..=10u32 {
                let eps = if b.is_odd() { Some(Sign::Plus) } else { None };
                let lab = IsotypicLabel::new(eps, j, Some(k));
                let alpha = label_to_weight(&b, &lab).unwrap();
                let mu_sq = if b.is_odd() {
                    let mu = higher_spin_eigen(n, k, j, k, Sign::Plus).unwrap();
                    &mu * &mu
                } else {
                    higher_spin_sq_eigen(n, k, j, k).unwrap()
                };
                let ok = lichnerowicz_check(&b, &alpha, &mu_sq).unwrap();
                c.case(ok, || format!("n={n} k={k} j={j}"));
            }
        }
    }
    c.finish();
}

/// Binomial coefficient by explicit Pascal recursion, independent of the
/// Weyl-dimension code path.
fn binomial(n: u64, k: u64) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = vec![1u128];
        for w in row.windows(2) {
            next.push(w[0] + w[1]);
        }
        next.push(1);
        row = next;
    }
    row[k as usize]
}

#[test]
fn criterion_4_dirac_ground_truth() {
    let mut c = Criterion::new(4, "Dirac spectrum on the 3-sphere", Some(1.0));
    let doc = build_table(&TableRequest {
        bundle: symmetric(3, 0),
        operator: TableOperator::HigherSpin,
        j_max: 20,
        threads: 1,
    })
    .unwrap();
    for entry in &doc.entries {
        let j = entry.j as i64;
        let expected_mult = ((j + 1) * (j + 2)).to_string();
        // Classical closed form: 2^(n/2 rounded down) * C(n - 1 + j, j).
        let classical = (2u128 * binomial(2 + entry.j as u64, entry.j as u64)).to_string();
        let eig = entry.eigenvalue.as_ref().unwrap();
        let expected_num = (entry.eps.unwrap() * (3 + 2 * j)).to_string();
        c.case(eig[0] == expected_num && eig[1] == "2", || {
            format!("j={j} eps={:?}: eigenvalue {eig:?}", entry.eps)
        });
        c.case(entry.multiplicity == expected_mult, || {
            format!("j={j}: multiplicity {} vs (j+1)(j+2)", entry.multiplicity)
        });
        c.case(entry.multiplicity == classical, || {
            format!("j={j}: multiplicity {} vs classical {classical}", entry.multiplicity)
        });
    }
    c.finish();
}

#[test]
fn criterion_5_spectral_function_spot_values() {
    let mut c = Criterion::new(5, "spectral-function spot values", Some(1.0));
    let z = |j: u32| {
        spectral_z(&GammaRatioSpec::new(3, 3, j, ZVariant::SpinorOdd { eps: Sign::Plus }).unwrap())
            .unwrap()
    };
    c.case(z(0) == rat(1, 1), || format!("Z(0) = {}", z(0)));
    c.case(z(1) == rat(7, 1), || format!("Z(1) = {}", z(1)));
    for j in 0..=20u32 {
        let ratio = d_odd_eigen(3, 1, j, Sign::Plus) / z(j);
        c.case(ratio == rat(15, 8), || format!("D3/Z at j={j}: {ratio}"));
    }
    c.finish();
}

#[test]
fn criterion_6_factored_identity_sweep() {
    let mut c = Criterion::new(6, "factored-identity sweep", Some(5.0));
    for n in [5u32, 7, 9] {
        for k in 1..=3u32 {
            if 2 * k >= n {
                continue;
            }
            for j in 0..=10u32 {
                // Two-path TT* agreement: lemma value vs Bochner route.
                let lemma = tt_star_eigen(n, k, j, 0).unwrap();
                let route = tt_star_two_path(n, k, j).unwrap();
                c.case(lemma == route, || {
                    format!("TT* n={n} k={k} j={j}: {lemma} vs {route}")
                });
                c.case(tt_star_eigen(n, k, j, 1).unwrap() == rat(0, 1), || {
                    format!("TT* n={n} k={k} j={j}: nonzero on q=1")
                });
                for l in 1..=3u32 {
                    for q in 0..=1u32 {
                        for eps in [Sign::Plus, Sign::Minus] {
                            match factored_identity_check(n, k, l, j, q, eps) {
                                Ok(ok) => c.case(ok, || {
                                    format!("identity n={n} k={k} l={l} j={j} q={q}")
                                }),
                                // No c_i pole exists on this odd-n grid.
                                Err(e) => c.case(false, || {
                                    format!("identity n={n} k={k} l={l} j={j} q={q}: {e}")
                                }),
                            }
                        }
                    }
                }
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_7_loop_consistency() {
    let mut c = Criterion::new(7, "lattice loop consistency", None);
    let one = rat(1, 1);
    let mut bundles: Vec<(BundleSpec, Vec<u64>)> = Vec::new();
    for n in 3..=10u32 {
        for k in 0..=3u32 {
            bundles.push((symmetric(n, k), vec![1]));
            if let Some(fb) = form(n, k) {
                bundles.push((fb, vec![1, 3, 5, 7]));
            }
        }
    }
    for (b, orders) in &bundles {
        for &two_r in orders {
            let op = OperatorSpec::spectral_function(two_r).unwrap();
            let q_values = b.q_choices();
            let eps_values: Vec<Option<Sign>> = if b.is_odd() {
                vec![Some(Sign::Plus), Some(Sign::Minus)]
            } else {
                vec![None]
            };
            for j in 0..=9u32 {
                for &eps in &eps_values {
                    // j/q plaquettes
                    for w in q_values.windows(2) {
                        let cycle = [
                            IsotypicLabel::new(eps, j, w[0]),
                            IsotypicLabel::new(eps, j + 1, w[0]),
                            IsotypicLabel::new(eps, j + 1, w[1]),
                            IsotypicLabel::new(eps, j, w[1]),
                        ];
                        check_cycle(&mut c, b, &op, &cycle, &one);
                    }
                    // j/flip plaquettes
                    if let Some(e) = eps {
                        for &q in &q_values {
                            let cycle = [
                                IsotypicLabel::new(Some(e), j, q),
                                IsotypicLabel::new(Some(e), j + 1, q),
                                IsotypicLabel::new(Some(e.flip()), j + 1, q),
                                IsotypicLabel::new(Some(e.flip()), j, q),
                            ];
                            check_cycle(&mut c, b, &op, &cycle, &one);
                        }
                    }
                }
            }
        }
    }
    c.finish();
}

fn check_cycle(
    c: &mut Criterion,
    b: &BundleSpec,
    op: &OperatorSpec,
    cycle: &[IsotypicLabel; 4],
    one: &Rational,
) {
    let mut product = rat(1, 1);
    for i in 0..4 {
        match transition_quotient(b, &cycle[i], &cycle[(i + 1) % 4], op) {
            Ok(q) => product *= q,
            // A pole edge carries no constraint; the cycle is vacuous.
            Err(Error::Pole(_)) => return,
            Err(e) => {
                c.case(false, || format!("cycle at {}: {e}", cycle[0]));
                return;
            }
        }
    }
    c.case(product == *one, || format!("cycle at {} multiplies to {product}", cycle[0]));
}

#[test]
fn criterion_8_large_table_performance() {
    let mut c = Criterion::new(8, "large-table performance and determinism", None);
    let request = TableRequest {
        bundle: symmetric(9, 3),
        operator: TableOperator::HigherSpin,
        j_max: 10_000,
        threads: 1,
    };

    let start = Instant::now();
    let serial = to_json_bytes(&build_table(&request).unwrap());
    let serial_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let parallel = to_json_bytes(&build_table(&TableRequest { threads: 0, ..request }).unwrap());
    let parallel_secs = start.elapsed().as_secs_f64();

    let rows = 10_001 * 4 * 2;
    let doc: serde_json::Value = serde_json::from_slice(&serial).unwrap();
    c.case(doc["entries"].as_array().unwrap().len() == rows, || {
        format!("expected {rows} entries")
    });
    c.case(serial == parallel, || "serial and parallel bytes differ".to_string());
    c.case(serial_secs < 10.0, || format!("serial build took {serial_secs:.2} s (limit 10 s)"));
    c.case(parallel_secs < 3.0, || {
        format!("parallel build took {parallel_secs:.2} s (limit 3 s)")
    });
    println!(
        "  criterion 8 timing: serial {serial_secs:.2} s, parallel {parallel_secs:.2} s, {rows} rows"
    );
    c.finish();
}
