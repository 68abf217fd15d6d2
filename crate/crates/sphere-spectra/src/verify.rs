//! Consistency suites comparing the lattice engine, the closed-form
//! evaluators, and the representation-theoretic backend against each other.
//!
//! Every check is an exact rational identity swept over a parameter grid;
//! there are no tolerances. Reports are machine readable and record case
//! counts plus the first failing point with both values.

use serde::Serialize;

use crate::closed_form::{
    c_i_const, d_odd_eigen, d_odd_k_eigen, factored_identity_check, higher_spin_eigen,
    higher_spin_sq_eigen, p_k_eigen, p_k_sq_eigen, spectral_z, tt_star_eigen, GammaRatioSpec,
    ZVariant,
};
use crate::engine::{
    canonical_base, propagate, transition_quotient, verify_against_closed_form, OperatorSpec,
};
use crate::rep::{bochner, lichnerowicz_check};
use crate::weights::{label_to_weight, BundleSpec, Chirality, Family, IsotypicLabel, Sign};
use crate::{rat, Error, Rational, Result};

/// Grid bounds for a verification run. `n` runs over both parities in
/// `n_min..=n_max`; families and orders are clipped to what each n admits.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub n_min: u32,
    pub n_max: u32,
    pub k_max: u32,
    pub l_max: u32,
    pub j_max: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { n_min: 3, n_max: 9, k_max: 3, l_max: 3, j_max: 10 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Diagrams,
    Lichnerowicz,
    ClosedVsEngine,
    FactoredIdentity,
    Proportionality,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 5] = [
        SuiteKind::Diagrams,
        SuiteKind::Lichnerowicz,
        SuiteKind::ClosedVsEngine,
        SuiteKind::FactoredIdentity,
        SuiteKind::Proportionality,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Diagrams => "diagrams",
            SuiteKind::Lichnerowicz => "lichnerowicz",
            SuiteKind::ClosedVsEngine => "closed-vs-engine",
            SuiteKind::FactoredIdentity => "factored-identity",
            SuiteKind::Proportionality => "proportionality",
        }
    }
}

/// One named check: how many grid cases ran and the first failure, if any.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

struct Check {
    name: String,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            pass: self.failure.is_none(),
            failure: self.failure,
        }
    }
}

fn symmetric_bundle(n: u32, k: u32) -> BundleSpec {
    let chir = if n % 2 == 0 { Some(Chirality::Plus) } else { None };
    BundleSpec::new(n, k, Family::Symmetric, chir).expect("valid symmetric bundle")
}

fn form_bundle(n: u32, k: u32) -> Option<BundleSpec> {
    let chir = if n % 2 == 0 { Some(Chirality::Plus) } else { None };
    BundleSpec::new(n, k, Family::Form, chir).ok()
}

fn signs(b: &BundleSpec) -> &'static [Option<Sign>] {
    if b.is_odd() {
        &[Some(Sign::Plus), Some(Sign::Minus)]
    } else {
        &[None]
    }
}

/// Scalar eigenvalue of T*T on the (j, q = 1) summand over the (k−1)-form
/// bundle, evaluated from the Bochner Laplacian:
/// (1/k)(∇*∇ + (n − k + 3/2)(k − 1) − ∂²/(n − 2k + 2)), with
/// ∂² = ∇*∇ + n(n−1)/4 + (k − 1) on that summand.
///
/// This is the independent second route to the T_{k−1}T*_{k−1} spectrum on
/// (j, q = 0) summands; it must agree with [`tt_star_eigen`] exactly.
pub fn tt_star_two_path(n: u32, k: u32, j: u32) -> Result<Rational> {
    if k < 1 || 2 * k >= n {
        return Err(Error::domain(format!("need 1 <= k < n/2, got k = {k}, n = {n}")));
    }
    let chir = if n % 2 == 0 { Some(Chirality::Plus) } else { None };
    let lower = BundleSpec::new(n, k - 1, Family::Form, chir)?;
    let eps = if n % 2 == 1 { Some(Sign::Plus) } else { None };
    // The image summand under T* sits over the (k−1)-form bundle with the
    // same highest weight; for k = 1 that is the spinor-bundle summand at
    // level j + 1.
    let lab = if k == 1 {
        IsotypicLabel::new(eps, j + 1, None)
    } else {
        IsotypicLabel::new(eps, j, Some(1))
    };
    let boch = bochner(&label_to_weight(&lower, &lab)?, &lower)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let dirac_sq = &boch + rat(n_i * (n_i - 1), 4) + rat(k_i - 1, 1);
    let curvature_term = rat(2 * (n_i - k_i) + 3, 2) * rat(k_i - 1, 1);
    Ok((&boch + curvature_term - dirac_sq / rat(n_i - 2 * k_i + 2, 1)) / rat(k_i, 1))
}

fn diagrams_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut symmetric = Check::new("symmetric-family first-order quotients");
    let op1 = OperatorSpec::higher_spin();
    for n in opts.n_min..=opts.n_max {
        for k in 0..=opts.k_max {
            let b = symmetric_bundle(n, k);
            for &eps in signs(&b) {
                for j in 0..=opts.j_max {
                    for q in 0..=k {
                        let src = IsotypicLabel::new(eps, j, Some(q));
                        let level = rat(n as i64 + 2 * (k + j) as i64, 2);
                        let (n_i, q_i) = (n as i64, q as i64);
                        let mut expect = vec![(
                            IsotypicLabel::new(eps, j + 1, Some(q)),
                            (&level + rat(1, 1)) / &level,
                        )];
                        if j > 0 {
                            expect.push((
                                IsotypicLabel::new(eps, j - 1, Some(q)),
                                (&level - rat(1, 1)) / &level,
                            ));
                        }
                        if q < k {
                            expect.push((
                                IsotypicLabel::new(eps, j, Some(q + 1)),
                                rat(n_i + 2 * q_i, n_i + 2 * q_i - 2),
                            ));
                        }
                        if q > 0 {
                            expect.push((
                                IsotypicLabel::new(eps, j, Some(q - 1)),
                                rat(n_i + 2 * q_i - 4, n_i + 2 * q_i - 2),
                            ));
                        }
                        if let Some(e) = eps {
                            expect.push((
                                IsotypicLabel::new(Some(e.flip()), j, Some(q)),
                                rat(-1, 1),
                            ));
                        }
                        for (dst, formula) in expect {
                            let got = transition_quotient(&b, &src, &dst, &op1);
                            symmetric.case(got.as_ref() == Ok(&formula), || {
                                format!("n={n} k={k} {src} -> {dst}: engine {got:?}, diagram {formula}")
                            });
                        }
                    }
                }
            }
        }
    }

    let mut forms = Check::new("form-family quotients for odd orders");
    for two_r in (1..=2 * opts.l_max as u64 + 1).step_by(2) {
        let op = OperatorSpec::spectral_function(two_r).expect("positive order");
        let two_r_i = two_r as i64;
        for n in opts.n_min..=opts.n_max {
            for k in 0..=opts.k_max {
                let Some(b) = form_bundle(n, k) else { continue };
                for &eps in signs(&b) {
                    for j in 0..=opts.j_max {
                        for &q in &b.q_choices() {
                            let src = IsotypicLabel::new(eps, j, q);
                            // 2J+1 with J = n/2 + j (k = 0) or n/2 + 1 + j.
                            let shift = if k == 0 { 0 } else { 2 };
                            let twice_level = n as i64 + shift + 2 * j as i64;
                            let mut expect = vec![(
                                IsotypicLabel::new(eps, j + 1, q),
                                (twice_level + 1 + two_r_i, twice_level + 1 - two_r_i),
                            )];
                            if j > 0 {
                                expect.push((
                                    IsotypicLabel::new(eps, j - 1, q),
                                    (-(twice_level - 1) + two_r_i, -(twice_level - 1) - two_r_i),
                                ));
                            }
                            let gap = n as i64 - 2 * k as i64 + 1;
                            if q == Some(1) {
                                expect.push((
                                    IsotypicLabel::new(eps, j, Some(0)),
                                    (gap - two_r_i, gap + two_r_i),
                                ));
                            }
                            if q == Some(0) {
                                expect.push((
                                    IsotypicLabel::new(eps, j, Some(1)),
                                    (gap + two_r_i, gap - two_r_i),
                                ));
                            }
                            if let Some(e) = eps {
                                expect.push((IsotypicLabel::new(Some(e.flip()), j, q), (-1, 1)));
                            }
                            for (dst, (num, den)) in expect {
                                let got = transition_quotient(&b, &src, &dst, &op);
                                let ok = if den == 0 {
                                    matches!(got, Err(Error::Pole(_)))
                                } else {
                                    got.as_ref() == Ok(&rat(num, den))
                                };
                                forms.case(ok, || {
                                    format!(
                                        "2r={two_r} n={n} k={k} {src} -> {dst}: engine {got:?}, diagram {num}/{den}"
                                    )
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    let checks = vec![symmetric.finish(), forms.finish()];
    let pass = checks.iter().all(|c| c.pass);
    SuiteReport { suite: SuiteKind::Diagrams.name().into(), checks, pass }
}

fn lichnerowicz_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut check = Check::new("Dirac-slice square equals Bochner + n(n-1)/4 + k");
    for n in opts.n_min..=opts.n_max {
        for k in 0..=opts.k_max {
            let b = symmetric_bundle(n, k);
            for j in 0..=opts.j_max {
                let eps = if b.is_odd() { Some(Sign::Plus) } else { None };
                let lab = IsotypicLabel::new(eps, j, Some(k));
                let alpha = label_to_weight(&b, &lab).expect("valid label");
                let mu_sq = if b.is_odd() {
                    let mu = higher_spin_eigen(n, k, j, k, Sign::Plus).expect("valid eigenvalue");
                    &mu * &mu
                } else {
                    higher_spin_sq_eigen(n, k, j, k).expect("valid eigenvalue")
                };
                let ok = lichnerowicz_check(&b, &alpha, &mu_sq).unwrap_or(false);
                check.case(ok, || format!("n={n} k={k} j={j}: {mu_sq} fails the identity"));
            }
        }
    }
    let checks = vec![check.finish()];
    let pass = checks.iter().all(|c| c.pass);
    SuiteReport { suite: SuiteKind::Lichnerowicz.name().into(), checks, pass }
}

fn closed_vs_engine_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut checks = Vec::new();

    let mut hs = Check::new("higher spin (and its square) vs propagation");
    for n in opts.n_min..=opts.n_max {
        for k in 0..=opts.k_max {
            let b = symmetric_bundle(n, k);
            match verify_against_closed_form(&b, &OperatorSpec::higher_spin(), opts.j_max) {
                Ok(rep) => hs.case(rep.pass, || {
                    format!("n={n} k={k}: {}", describe_mismatch(&rep))
                }),
                Err(e) => hs.case(false, || format!("n={n} k={k}: {e}")),
            }
        }
    }
    checks.push(hs.finish());

    let mut dodd = Check::new("factored odd-order operators vs propagation");
    let mut zfun = Check::new("spectral functions vs propagation (one global constant)");
    for n in opts.n_min..=opts.n_max {
        for k in 0..=opts.k_max {
            let Some(b) = form_bundle(n, k) else { continue };
            for l in 0..=opts.l_max {
                let two_r = 2 * l as u64 + 1;
                let op = OperatorSpec::factored_odd_order(two_r).expect("odd order");
                match verify_against_closed_form(&b, &op, opts.j_max) {
                    Ok(rep) => dodd.case(rep.pass, || {
                        format!("n={n} k={k} 2r={two_r}: {}", describe_mismatch(&rep))
                    }),
                    Err(e) => dodd.case(false, || format!("n={n} k={k} 2r={two_r}: {e}")),
                }
                let op = OperatorSpec::spectral_function(two_r).expect("positive order");
                match verify_against_closed_form(&b, &op, opts.j_max) {
                    Ok(rep) => zfun.case(rep.pass, || {
                        format!("n={n} k={k} 2r={two_r}: {}", describe_mismatch(&rep))
                    }),
                    Err(e) => zfun.case(false, || format!("n={n} k={k} 2r={two_r}: {e}")),
                }
            }
        }
    }
    checks.push(dodd.finish());
    checks.push(zfun.finish());

    let mut pk = Check::new("P_k vs propagation");
    for n in opts.n_min..=opts.n_max {
        for k in 1..=opts.k_max {
            let Some(b) = form_bundle(n, k) else { continue };
            let op = OperatorSpec::spectral_function(1).expect("positive order");
            let (base_label, _) = canonical_base(&b);
            // Anchor the propagation at P_k's own base value (n−2k+2)(n/2+1).
            let base_value = rat((n as i64 - 2 * k as i64 + 2) * (n as i64 + 2), 2);
            let table = match propagate(&b, &op, (&base_label, &base_value), opts.j_max) {
                Ok(t) => t,
                Err(e) => {
                    pk.case(false, || format!("n={n} k={k}: {e}"));
                    continue;
                }
            };
            for entry in &table.entries {
                let lab = entry.label;
                let eps = lab.eps.unwrap_or(Sign::Plus);
                let q = lab.q.unwrap_or(0);
                let ok = match (&entry.eigenvalue, b.is_odd()) {
                    (Some(v), true) => p_k_eigen(n, k, lab.j, q, eps).ok() == Some(v.clone()),
                    (Some(v), false) => p_k_sq_eigen(n, k, lab.j, q).ok() == Some(v * v),
                    (None, _) => false,
                };
                pk.case(ok, || {
                    format!("n={n} k={k} {lab}: engine {:?} vs closed form", entry.eigenvalue)
                });
            }
        }
    }
    checks.push(pk.finish());

    let pass = checks.iter().all(|c| c.pass);
    SuiteReport { suite: SuiteKind::ClosedVsEngine.name().into(), checks, pass }
}

fn describe_mismatch(rep: &crate::engine::EngineClosedReport) -> String {
    match rep.first_mismatch() {
        Some(row) => format!(
            "at {}: engine {:?}, closed form {:?}",
            row.label, row.engine, row.closed
        ),
        None => "mismatch outside compared rows".to_string(),
    }
}

fn factored_identity_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut identity = Check::new("factored operators equal their telescoped product");
    let mut two_path = Check::new("TT* lemma value vs Bochner-route evaluation");
    for n in opts.n_min..=opts.n_max {
        for k in 1..=opts.k_max {
            let Some(b) = form_bundle(n, k) else { continue };
            for j in 0..=opts.j_max {
                match (tt_star_eigen(n, k, j, 0), tt_star_two_path(n, k, j)) {
                    (Ok(lemma), Ok(route)) => two_path.case(lemma == route, || {
                        format!("n={n} k={k} j={j}: lemma {lemma} vs Bochner route {route}")
                    }),
                    (a, b) => two_path.case(false, || format!("n={n} k={k} j={j}: {a:?} vs {b:?}")),
                }
                two_path.case(tt_star_eigen(n, k, j, 1) == Ok(rat(0, 1)), || {
                    format!("n={n} k={k} j={j}: TT* does not vanish on q = 1")
                });
            }
            for l in 1..=opts.l_max {
                // Skip grid points where some c_i is itself singular.
                if (1..=l).any(|i| matches!(c_i_const(n, k, i), Err(Error::Pole(_)))) {
                    continue;
                }
                for j in 0..=opts.j_max {
                    for q in 0..=1u32 {
                        for &eps in signs(&b) {
                            let eps = eps.unwrap_or(Sign::Plus);
                            let ok = factored_identity_check(n, k, l, j, q, eps).unwrap_or(false);
                            identity.case(ok, || {
                                format!("n={n} k={k} l={l} j={j} q={q}: identity fails")
                            });
                        }
                    }
                }
            }
        }
    }
    let checks = vec![identity.finish(), two_path.finish()];
    let pass = checks.iter().all(|c| c.pass);
    SuiteReport { suite: SuiteKind::FactoredIdentity.name().into(), checks, pass }
}

fn proportionality_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut dirac = Check::new("order-one spectral function scales to the Dirac spectrum");
    let mut rs = Check::new("k = 1 spectral function scales to the Rarita-Schwinger spectrum");
    let mut pk = Check::new("P_k equals (n-2k+2)(n/2+1) times the order-one spectral function");
    let mut constancy = Check::new("factored operators are constant multiples of spectral functions");

    for n in opts.n_min..=opts.n_max {
        if n % 2 == 1 {
            for j in 0..=opts.j_max {
                for eps in [Sign::Plus, Sign::Minus] {
                    let z = spectral_z(
                        &GammaRatioSpec::new(n, 1, j, ZVariant::SpinorOdd { eps })
                            .expect("valid spec"),
                    )
                    .expect("order one is regular");
                    let lhs = z * rat(n as i64, 2);
                    let rhs = rat(eps.value() * (n as i64 + 2 * j as i64), 2);
                    dirac.case(lhs == rhs, || format!("n={n} j={j} eps={eps}: {lhs} vs {rhs}"));
                }
            }
            if n > 2 {
                for j in 0..=opts.j_max {
                    for q in 0..=1u32 {
                        for eps in [Sign::Plus, Sign::Minus] {
                            let z = spectral_z(
                                &GammaRatioSpec::new(n, 1, j, ZVariant::FormOdd { k: 1, q, eps })
                                    .expect("valid spec"),
                            )
                            .expect("order one is regular");
                            let lhs = z * rat(n as i64 + 2, 2);
                            let rhs = higher_spin_eigen(n, 1, j, q, eps).expect("valid");
                            rs.case(lhs == rhs, || {
                                format!("n={n} j={j} q={q} eps={eps}: {lhs} vs {rhs}")
                            });
                        }
                    }
                }
            }
        }
        for k in 1..=opts.k_max {
            let Some(b) = form_bundle(n, k) else { continue };
            for j in 0..=opts.j_max {
                for q in 0..=1u32 {
                    for &eps in signs(&b) {
                        let variant = match eps {
                            Some(e) => ZVariant::FormOdd { k, q, eps: e },
                            None => ZVariant::FormEven { k, q },
                        };
                        let z = spectral_z(&GammaRatioSpec::new(n, 1, j, variant).expect("valid"))
                            .expect("order one is regular");
                        let scale = rat((n as i64 - 2 * k as i64 + 2) * (n as i64 + 2), 2);
                        let lhs = z * scale;
                        let ok = if b.is_odd() {
                            p_k_eigen(n, k, j, q, eps.unwrap()).ok() == Some(lhs.clone())
                        } else {
                            p_k_sq_eigen(n, k, j, q).ok() == Some(&lhs * &lhs)
                        };
                        pk.case(ok, || format!("n={n} k={k} j={j} q={q}: P_k vs Z mismatch"));
                    }
                }
            }
        }
        // D/Z constancy across each lattice, by cross-multiplication so zero
        // eigenvalues (even n) need no special treatment.
        for k in 0..=opts.k_max {
            let Some(b) = form_bundle(n, k) else { continue };
            for l in 0..=opts.l_max {
                let two_r = 2 * l as u64 + 1;
                let mut reference: Option<(Rational, Rational)> = None;
                for j in 0..=opts.j_max {
                    for &q in &b.q_choices() {
                        for &eps in signs(&b) {
                            let variant = match (k, eps) {
                                (0, Some(e)) => ZVariant::SpinorOdd { eps: e },
                                (0, None) => ZVariant::SpinorEven,
                                (_, Some(e)) => ZVariant::FormOdd { k, q: q.unwrap(), eps: e },
                                (_, None) => ZVariant::FormEven { k, q: q.unwrap() },
                            };
                            let z = match spectral_z(
                                &GammaRatioSpec::new(n, two_r, j, variant).expect("valid"),
                            ) {
                                Ok(z) => z,
                                // Singular normalization: nothing to compare.
                                Err(Error::Pole(_)) => continue,
                                Err(e) => {
                                    constancy.case(false, || format!("n={n} k={k} 2r={two_r}: {e}"));
                                    continue;
                                }
                            };
                            let eps_v = eps.unwrap_or(Sign::Plus);
                            let d = if k == 0 {
                                d_odd_eigen(n, l, j, eps_v)
                            } else {
                                d_odd_k_eigen(n, k, l, j, q.unwrap(), eps_v).expect("valid")
                            };
                            match &reference {
                                None => reference = Some((d, z)),
                                Some((d0, z0)) => {
                                    constancy.case(&d * z0 == &z * d0, || {
                                        format!(
                                            "n={n} k={k} 2r={two_r} j={j} q={q:?}: D/Z ratio drifts"
                                        )
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let checks = vec![dirac.finish(), rs.finish(), pk.finish(), constancy.finish()];
    let pass = checks.iter().all(|c| c.pass);
    SuiteReport { suite: SuiteKind::Proportionality.name().into(), checks, pass }
}

pub fn run_suite(kind: SuiteKind, opts: &VerifyOptions) -> SuiteReport {
    match kind {
        SuiteKind::Diagrams => diagrams_suite(opts),
        SuiteKind::Lichnerowicz => lichnerowicz_suite(opts),
        SuiteKind::ClosedVsEngine => closed_vs_engine_suite(opts),
        SuiteKind::FactoredIdentity => factored_identity_suite(opts),
        SuiteKind::Proportionality => proportionality_suite(opts),
    }
}

pub fn run_suites(kinds: &[SuiteKind], opts: &VerifyOptions) -> Vec<SuiteReport> {
    kinds.iter().map(|k| run_suite(*k, opts)).collect()
}
