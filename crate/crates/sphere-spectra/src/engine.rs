//! The spectrum-generating lattice.
//!
//! Multiplication by the conformal factor maps each isotypic summand into its
//! lattice neighbours, and compressing the intertwining relation onto a
//! neighbouring pair turns the eigenvalue ratio into an explicit quotient
//! (Δ + 2r)/(Δ − 2r), where Δ is the difference of the Bochner Laplacian
//! values of the two summands and 2r is the operator order. One normalized
//! eigenvalue therefore determines the whole spectrum: this module builds the
//! lattice, evaluates the quotients, propagates values breadth-first from a
//! base summand, and re-checks every edge (so every closed lattice loop
//! multiplies to exactly 1).
//!
//! Edges live in label coordinates, exactly as the transition diagrams are
//! drawn. Where the q entry and the sign slot coincide in the underlying
//! weights, the ε-flip edge is the composite through q = 0; its quotient is
//! still exactly −1, which the loop checks confirm.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::closed_form::{
    d_odd_eigen, d_odd_k_eigen, higher_spin_eigen, higher_spin_sq_eigen, spectral_z,
    GammaRatioSpec, ZVariant,
};
use crate::rep::{bochner, weyl_dim};
use crate::weights::{
    enumerate_labels, label_to_weight, BundleSpec, Family, IsotypicLabel, Sign, Weight,
};
use crate::{rat, Error, Rational, Result};

/// What kind of operator the engine is propagating. The lattice mechanics
/// depend only on the order; the kind selects the closed-form evaluator used
/// in cross-checks and is echoed into serialized tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// First-order operator on spinor-valued symmetric tensors.
    HigherSpin,
    /// Gamma-ratio spectral function of general order on spinor forms.
    SpectralFunction,
    /// Factored odd-order differential operator on spinor forms.
    FactoredOddOrder,
}

/// An intertwining operator of order 2r.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSpec {
    kind: OperatorKind,
    order_2r: Rational,
}

impl OperatorSpec {
    pub fn higher_spin() -> Self {
        OperatorSpec { kind: OperatorKind::HigherSpin, order_2r: rat(1, 1) }
    }

    pub fn spectral_function(two_r: u64) -> Result<Self> {
        if two_r == 0 {
            return Err(Error::domain("operator order 2r must be positive"));
        }
        Ok(OperatorSpec {
            kind: OperatorKind::SpectralFunction,
            order_2r: rat(two_r as i64, 1),
        })
    }

    pub fn factored_odd_order(two_r: u64) -> Result<Self> {
        if two_r % 2 != 1 {
            return Err(Error::domain(format!(
                "factored odd-order operators need odd 2r, got {two_r}"
            )));
        }
        Ok(OperatorSpec {
            kind: OperatorKind::FactoredOddOrder,
            order_2r: rat(two_r as i64, 1),
        })
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn order_2r(&self) -> &Rational {
        &self.order_2r
    }

    /// The order as an odd positive integer, when it is one.
    pub fn order_as_odd_int(&self) -> Option<u64> {
        if !self.order_2r.is_integer() {
            return None;
        }
        let n = self.order_2r.to_integer();
        if n.is_positive() && !(&n % BigInt::from(2)).is_zero() {
            n.to_u64()
        } else {
            None
        }
    }
}

/// The lattice neighbours of `lab`: j ± 1, q ± 1 (clipped to the label
/// ranges), then the ε-flip for odd n or the non-constraining diagonal
/// self-term for even n, in that order.
pub fn neighbors(b: &BundleSpec, lab: &IsotypicLabel) -> Result<Vec<IsotypicLabel>> {
    b.validate_label(lab)?;
    let mut out = Vec::with_capacity(6);
    out.push(IsotypicLabel::new(lab.eps, lab.j + 1, lab.q));
    if lab.j > 0 {
        out.push(IsotypicLabel::new(lab.eps, lab.j - 1, lab.q));
    }
    if let Some(q) = lab.q {
        let q_max = match b.family() {
            Family::Symmetric => b.k(),
            Family::Form => 1,
        };
        if q < q_max {
            out.push(IsotypicLabel::new(lab.eps, lab.j, Some(q + 1)));
        }
        if q > 0 {
            out.push(IsotypicLabel::new(lab.eps, lab.j, Some(q - 1)));
        }
    }
    match lab.eps {
        Some(e) => out.push(IsotypicLabel::new(Some(e.flip()), lab.j, lab.q)),
        None => out.push(*lab),
    }
    Ok(out)
}

fn bochner_of(b: &BundleSpec, lab: &IsotypicLabel) -> Result<Rational> {
    bochner(&label_to_weight(b, lab)?, b)
}

/// The eigenvalue quotient μ(dst)/μ(src) = (Δ + 2r)/(Δ − 2r) across one
/// lattice edge, Δ being the Bochner difference. The ε-flip edge has Δ = 0
/// and quotient −1 for every order. Δ = 2r is a pole: the compressed
/// relation degenerates and the quotient does not exist.
pub fn transition_quotient(
    b: &BundleSpec,
    src: &IsotypicLabel,
    dst: &IsotypicLabel,
    op: &OperatorSpec,
) -> Result<Rational> {
    if src == dst {
        return Err(Error::NonConstraining(format!(
            "the diagonal term at {src} carries no eigenvalue constraint"
        )));
    }
    if !neighbors(b, src)?.contains(dst) {
        return Err(Error::domain(format!("{dst} is not a lattice neighbour of {src}")));
    }
    let delta = bochner_of(b, dst)? - bochner_of(b, src)?;
    let two_r = op.order_2r();
    if &delta == two_r {
        return Err(Error::pole(format!(
            "transition {src} -> {dst} hits the pole delta = 2r = {two_r}"
        )));
    }
    Ok((&delta + two_r) / (&delta - two_r))
}

/// One summand of a computed spectrum. `eigenvalue` is `None` when the value
/// is not determined by propagation (a pole blocked every path from the base).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub label: IsotypicLabel,
    pub weight: Weight,
    pub eigenvalue: Option<Rational>,
    pub multiplicity: BigInt,
}

/// A full spectrum over one bundle: one entry per isotypic summand with
/// j ≤ j_max, in (j, q, ε) order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumTable {
    pub bundle: BundleSpec,
    pub operator: OperatorSpec,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    pub fn pole_count(&self) -> usize {
        self.entries.iter().filter(|e| e.eigenvalue.is_none()).count()
    }

    pub fn eigenvalue(&self, lab: &IsotypicLabel) -> Option<&Rational> {
        self.entries
            .iter()
            .find(|e| e.label == *lab)
            .and_then(|e| e.eigenvalue.as_ref())
    }
}

/// The base summand and normalization from which a spectrum is generated:
/// the Dirac-slice summand with value n/2 + k for the symmetric family, and
/// the top summand with value +1 for the form family.
pub fn canonical_base(b: &BundleSpec) -> (IsotypicLabel, Rational) {
    let eps = if b.is_odd() { Some(Sign::Plus) } else { None };
    match b.family() {
        Family::Symmetric => (
            IsotypicLabel::new(eps, 0, Some(b.k())),
            rat(b.n() as i64 + 2 * b.k() as i64, 2),
        ),
        Family::Form => (IsotypicLabel::new(eps, 0, b.top_q()), rat(1, 1)),
    }
}

/// Propagates eigenvalues from `base` across the whole lattice with j ≤
/// j_max, multiplying transition quotients along a breadth-first tree, then
/// re-checks every lattice edge, so path independence (every loop of
/// quotients multiplies to 1) is verified, not assumed.
///
/// Edges whose quotient has a pole are never traversed; summands that only a
/// pole edge would reach are left undetermined and appear with `eigenvalue:
/// None`. Multiplicities are Weyl dimensions of the acting group.
pub fn propagate(
    b: &BundleSpec,
    op: &OperatorSpec,
    base: (&IsotypicLabel, &Rational),
    j_max: u32,
) -> Result<SpectrumTable> {
    let (base_label, base_value) = base;
    b.validate_label(base_label)?;
    if base_label.j > j_max {
        return Err(Error::domain(format!(
            "base label {base_label} lies outside j <= {j_max}"
        )));
    }
    let labels = enumerate_labels(b, j_max);
    let index: HashMap<IsotypicLabel, usize> =
        labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let mut boch = Vec::with_capacity(labels.len());
    let mut weights = Vec::with_capacity(labels.len());
    for lab in &labels {
        let w = label_to_weight(b, lab)?;
        boch.push(bochner(&w, b)?);
        weights.push(w);
    }
    let two_r = op.order_2r();

    let mut values: Vec<Option<Rational>> = vec![None; labels.len()];
    let base_idx = index[base_label];
    values[base_idx] = Some(base_value.clone());
    let mut queue = VecDeque::from([base_idx]);
    let mut saw_pole_edge = false;
    while let Some(s) = queue.pop_front() {
        for dst in neighbors(b, &labels[s])? {
            if dst == labels[s] {
                continue;
            }
            let Some(&d) = index.get(&dst) else { continue };
            let delta = &boch[d] - &boch[s];
            if &delta == two_r {
                saw_pole_edge = true;
                continue;
            }
            if values[d].is_none() {
                let quot = (&delta + two_r) / (&delta - two_r);
                let propagated = values[s].as_ref().map(|v| v * quot);
                values[d] = propagated;
                queue.push_back(d);
            }
        }
    }

    // Redundancy pass: every edge between determined summands must satisfy
    // μ(dst)(Δ − 2r) = μ(src)(Δ + 2r). Together with the spanning tree this
    // forces every lattice loop of quotients to multiply to 1.
    for s in 0..labels.len() {
        let Some(vs) = &values[s] else { continue };
        for dst in neighbors(b, &labels[s])? {
            if dst == labels[s] {
                continue;
            }
            let Some(&d) = index.get(&dst) else { continue };
            let Some(vd) = &values[d] else { continue };
            let delta = &boch[d] - &boch[s];
            if vd * (&delta - two_r) != vs * (&delta + two_r) {
                return Err(Error::internal(format!(
                    "inconsistent transition {} -> {}: values {} and {}",
                    labels[s], dst, vs, vd
                )));
            }
        }
    }

    if !saw_pole_edge && values.iter().any(Option::is_none) {
        return Err(Error::internal("lattice is disconnected below j_max".to_string()));
    }

    let mut entries = Vec::with_capacity(labels.len());
    for (i, lab) in labels.iter().enumerate() {
        entries.push(SpectrumEntry {
            label: *lab,
            weight: weights[i].clone(),
            eigenvalue: values[i].take(),
            multiplicity: weyl_dim(&weights[i], b.n() + 1)?,
        });
    }
    Ok(SpectrumTable { bundle: *b, operator: op.clone(), entries })
}

/// Outcome of comparing one summand between the engine and the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOutcome {
    Equal,
    Mismatch,
    /// No comparison possible: the value is pole-blocked on at least one side.
    PoleSkipped,
}

#[derive(Clone, Debug)]
pub struct ComparisonRow {
    pub label: IsotypicLabel,
    pub engine: Option<Rational>,
    pub closed: Option<Rational>,
    pub outcome: RowOutcome,
}

/// Report of an engine / closed-form cross-check over one bundle.
#[derive(Clone, Debug)]
pub struct EngineClosedReport {
    pub rows: Vec<ComparisonRow>,
    pub pass: bool,
    pub note: Option<String>,
}

impl EngineClosedReport {
    pub fn first_mismatch(&self) -> Option<&ComparisonRow> {
        self.rows.iter().find(|r| r.outcome == RowOutcome::Mismatch)
    }
}

fn closed_value(b: &BundleSpec, op: &OperatorSpec, lab: &IsotypicLabel) -> Result<Rational> {
    let eps = lab.eps.unwrap_or(Sign::Plus);
    let q = lab.q.unwrap_or(0);
    match op.kind() {
        OperatorKind::HigherSpin => {
            if b.is_odd() {
                higher_spin_eigen(b.n(), b.k(), lab.j, q, eps)
            } else {
                higher_spin_sq_eigen(b.n(), b.k(), lab.j, q)
            }
        }
        OperatorKind::FactoredOddOrder => {
            let two_r = op
                .order_as_odd_int()
                .ok_or_else(|| Error::domain("factored operators need odd integer order"))?;
            let l = ((two_r - 1) / 2) as u32;
            if b.k() == 0 {
                Ok(d_odd_eigen(b.n(), l, lab.j, eps))
            } else {
                d_odd_k_eigen(b.n(), b.k(), l, lab.j, q, eps)
            }
        }
        OperatorKind::SpectralFunction => {
            let two_r = op
                .order_as_odd_int()
                .ok_or_else(|| Error::domain("exact spectral functions need odd integer order"))?;
            let variant = match (b.is_odd(), b.k()) {
                (true, 0) => ZVariant::SpinorOdd { eps },
                (false, 0) => ZVariant::SpinorEven,
                (true, k) => ZVariant::FormOdd { k, q, eps },
                (false, k) => ZVariant::FormEven { k, q },
            };
            spectral_z(&GammaRatioSpec::new(b.n(), two_r, lab.j, variant)?)
        }
    }
}

/// Runs the engine against the matching closed-form evaluator over every
/// summand with j ≤ j_max.
///
/// Eigenvalue-operator tables (higher spin, factored odd order) are anchored
/// at the closed form's own base value and must agree entrywise exactly; for
/// even n the first-order symmetric-family engine values are squared before
/// comparison. Spectral-function tables use the canonical ±1 normalization
/// and must agree up to one global constant, which the report records.
pub fn verify_against_closed_form(
    b: &BundleSpec,
    op: &OperatorSpec,
    j_max: u32,
) -> Result<EngineClosedReport> {
    match (op.kind(), b.family()) {
        (OperatorKind::HigherSpin, Family::Symmetric) => {}
        (OperatorKind::FactoredOddOrder, Family::Form) => {}
        (OperatorKind::SpectralFunction, Family::Form) => {}
        _ => {
            return Err(Error::domain(format!(
                "no closed form for {:?} on the {} family",
                op.kind(),
                b.family().as_str()
            )))
        }
    }
    let (base_label, canonical_value) = canonical_base(b);
    let square_engine = op.kind() == OperatorKind::HigherSpin && !b.is_odd();

    // Anchor: eigenvalue operators start from their own closed-form base
    // value; spectral functions keep the canonical normalization.
    let (base_value, ratio_mode) = match op.kind() {
        OperatorKind::SpectralFunction => (canonical_value, true),
        OperatorKind::HigherSpin => (canonical_value, false),
        OperatorKind::FactoredOddOrder => (closed_value(b, op, &base_label)?, false),
    };

    let table = propagate(b, op, (&base_label, &base_value), j_max)?;

    let mut constant: Option<Rational> = None;
    if ratio_mode {
        match closed_value(b, op, &base_label) {
            Ok(v) => constant = Some(v / &base_value),
            Err(Error::Pole(msg)) => {
                // The spectral-function normalization itself is singular;
                // there is nothing exact to compare against.
                let rows = table
                    .entries
                    .iter()
                    .map(|e| ComparisonRow {
                        label: e.label,
                        engine: e.eigenvalue.clone(),
                        closed: None,
                        outcome: RowOutcome::PoleSkipped,
                    })
                    .collect();
                return Ok(EngineClosedReport { rows, pass: true, note: Some(msg) });
            }
            Err(e) => return Err(e),
        }
    }

    let mut rows = Vec::with_capacity(table.entries.len());
    let mut pass = true;
    for entry in &table.entries {
        let closed = match closed_value(b, op, &entry.label) {
            Ok(v) => Some(v),
            Err(Error::Pole(_)) => None,
            Err(e) => return Err(e),
        };
        let engine = entry.eigenvalue.clone().map(|v| {
            if square_engine {
                &v * &v
            } else {
                v
            }
        });
        let outcome = match (&engine, &closed) {
            (Some(e), Some(c)) => {
                let reference = match &constant {
                    Some(k) => k * e,
                    None => e.clone(),
                };
                if reference == *c {
                    RowOutcome::Equal
                } else {
                    pass = false;
                    RowOutcome::Mismatch
                }
            }
            _ => RowOutcome::PoleSkipped,
        };
        rows.push(ComparisonRow { label: entry.label, engine, closed, outcome });
    }
    Ok(EngineClosedReport { rows, pass, note: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Chirality;

    fn sym(n: u32, k: u32) -> BundleSpec {
        if n % 2 == 1 {
            BundleSpec::new(n, k, Family::Symmetric, None).unwrap()
        } else {
            BundleSpec::new(n, k, Family::Symmetric, Some(Chirality::Plus)).unwrap()
        }
    }

    fn form(n: u32, k: u32) -> BundleSpec {
        if n % 2 == 1 {
            BundleSpec::new(n, k, Family::Form, None).unwrap()
        } else {
            BundleSpec::new(n, k, Family::Form, Some(Chirality::Plus)).unwrap()
        }
    }

    fn lab(eps: i64, j: u32, q: u32) -> IsotypicLabel {
        let s = if eps > 0 { Sign::Plus } else { Sign::Minus };
        IsotypicLabel::new(Some(s), j, Some(q))
    }

    #[test]
    fn neighbor_examples() {
        let b = sym(5, 2);
        assert_eq!(
            neighbors(&b, &lab(1, 2, 1)).unwrap(),
            vec![lab(1, 3, 1), lab(1, 1, 1), lab(1, 2, 2), lab(1, 2, 0), lab(-1, 2, 1)]
        );
        let b = sym(5, 1);
        assert_eq!(
            neighbors(&b, &lab(1, 0, 0)).unwrap(),
            vec![lab(1, 1, 0), lab(1, 0, 1), lab(-1, 0, 0)]
        );
        let b = form(3, 0);
        let l = IsotypicLabel::new(Some(Sign::Plus), 2, None);
        assert_eq!(
            neighbors(&b, &l).unwrap(),
            vec![
                IsotypicLabel::new(Some(Sign::Plus), 3, None),
                IsotypicLabel::new(Some(Sign::Plus), 1, None),
                IsotypicLabel::new(Some(Sign::Minus), 2, None),
            ]
        );
    }

    #[test]
    fn even_n_lists_diagonal_self_term() {
        let b = sym(4, 1);
        let l = IsotypicLabel::new(None, 1, Some(1));
        let ns = neighbors(&b, &l).unwrap();
        assert_eq!(ns.last(), Some(&l));
        let op = OperatorSpec::higher_spin();
        assert!(matches!(
            transition_quotient(&b, &l, &l, &op),
            Err(Error::NonConstraining(_))
        ));
    }

    #[test]
    fn first_order_symmetric_quotients() {
        // Diagram values: (J+1)/J up, (J−1)/J down, (n+2q)/(n+2q−2) right-up,
        // (n+2q−4)/(n+2q−2) right-down, −1 flip, with J = n/2 + k + j.
        let op = OperatorSpec::higher_spin();
        for (n, k) in [(3u32, 1u32), (5, 2), (7, 3)] {
            let b = sym(n, k);
            for j in 0..=4 {
                for q in 0..=k {
                    let src = lab(1, j, q);
                    let level = rat(n as i64 + 2 * (k + j) as i64, 2);
                    let up = transition_quotient(&b, &src, &lab(1, j + 1, q), &op).unwrap();
                    assert_eq!(up, (&level + rat(1, 1)) / &level);
                    if j > 0 {
                        let down = transition_quotient(&b, &src, &lab(1, j - 1, q), &op).unwrap();
                        assert_eq!(down, (&level - rat(1, 1)) / &level);
                    }
                    if q < k {
                        let right = transition_quotient(&b, &src, &lab(1, j, q + 1), &op).unwrap();
                        assert_eq!(right, rat(n as i64 + 2 * q as i64, n as i64 + 2 * q as i64 - 2));
                    }
                    if q > 0 {
                        let left = transition_quotient(&b, &src, &lab(1, j, q - 1), &op).unwrap();
                        assert_eq!(
                            left,
                            rat(n as i64 + 2 * q as i64 - 4, n as i64 + 2 * q as i64 - 2)
                        );
                    }
                    let flip = transition_quotient(&b, &src, &lab(-1, j, q), &op).unwrap();
                    assert_eq!(flip, rat(-1, 1));
                }
            }
        }
    }

    #[test]
    fn flip_quotient_is_minus_one_for_any_order() {
        let b = form(7, 2);
        for two_r in [1u64, 3, 5, 7] {
            let op = OperatorSpec::spectral_function(two_r).unwrap();
            let q = transition_quotient(&b, &lab(1, 3, 1), &lab(-1, 3, 1), &op).unwrap();
            assert_eq!(q, rat(-1, 1));
        }
    }

    #[test]
    fn propagate_example_symmetric() {
        let b = sym(3, 1);
        let op = OperatorSpec::higher_spin();
        let base = lab(1, 0, 1);
        let table = propagate(&b, &op, (&base, &rat(5, 2)), 1).unwrap();
        assert_eq!(table.eigenvalue(&lab(1, 1, 1)), Some(&rat(7, 2)));
        assert_eq!(table.eigenvalue(&lab(1, 0, 0)), Some(&rat(5, 6)));
        assert_eq!(table.eigenvalue(&lab(-1, 0, 1)), Some(&rat(-5, 2)));
        assert_eq!(table.pole_count(), 0);
    }

    #[test]
    fn propagate_example_third_order() {
        let b = form(3, 0);
        let op = OperatorSpec::spectral_function(3).unwrap();
        let base = IsotypicLabel::new(Some(Sign::Plus), 0, None);
        let table = propagate(&b, &op, (&base, &rat(1, 1)), 1).unwrap();
        let up = IsotypicLabel::new(Some(Sign::Plus), 1, None);
        assert_eq!(table.eigenvalue(&up), Some(&rat(7, 1)));
    }

    #[test]
    fn propagate_marks_pole_blocked_summands() {
        // Even n with 2r = n + 1: the upward edge out of j = 0 is singular,
        // so nothing above the base is determined.
        let b = form(4, 0);
        let op = OperatorSpec::spectral_function(5).unwrap();
        let base = IsotypicLabel::new(None, 0, None);
        let table = propagate(&b, &op, (&base, &rat(1, 1)), 3).unwrap();
        assert_eq!(table.eigenvalue(&base), Some(&rat(1, 1)));
        assert_eq!(table.pole_count(), 3);
    }

    #[test]
    fn quotient_reciprocity_and_loops() {
        let b = sym(5, 2);
        let op = OperatorSpec::higher_spin();
        let one = rat(1, 1);
        for j in 0..=3u32 {
            for q in 0..=2u32 {
                let a = lab(1, j, q);
                for dst in neighbors(&b, &a).unwrap() {
                    if dst == a || dst.j > 3 {
                        continue;
                    }
                    let fwd = transition_quotient(&b, &a, &dst, &op).unwrap();
                    let back = transition_quotient(&b, &dst, &a, &op).unwrap();
                    assert_eq!(&fwd * &back, one);
                }
                // 4-cycle through (j, q) -> (j+1, q) -> (j+1, q+1) -> (j, q+1)
                if q < 2 {
                    let p = [lab(1, j, q), lab(1, j + 1, q), lab(1, j + 1, q + 1), lab(1, j, q + 1)];
                    let mut prod = rat(1, 1);
                    for i in 0..4 {
                        prod *= transition_quotient(&b, &p[i], &p[(i + 1) % 4], &op).unwrap();
                    }
                    assert_eq!(prod, one);
                }
            }
        }
    }

    #[test]
    fn closed_form_agreement_spot_checks() {
        let rep = verify_against_closed_form(&sym(5, 2), &OperatorSpec::higher_spin(), 6).unwrap();
        assert!(rep.pass, "first mismatch: {:?}", rep.first_mismatch());
        let rep = verify_against_closed_form(&sym(4, 1), &OperatorSpec::higher_spin(), 6).unwrap();
        assert!(rep.pass);
        let rep = verify_against_closed_form(
            &form(5, 1),
            &OperatorSpec::factored_odd_order(3).unwrap(),
            6,
        )
        .unwrap();
        assert!(rep.pass);
        let rep = verify_against_closed_form(
            &form(3, 0),
            &OperatorSpec::spectral_function(3).unwrap(),
            6,
        )
        .unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn pole_blocked_factored_table_agrees_on_determined_prefix() {
        // n = 4, 2r = 7: the closed form vanishes on the two determined
        // summands and everything above is pole-blocked.
        let rep = verify_against_closed_form(
            &form(4, 0),
            &OperatorSpec::factored_odd_order(7).unwrap(),
            5,
        )
        .unwrap();
        assert!(rep.pass);
        let skipped = rep.rows.iter().filter(|r| r.outcome == RowOutcome::PoleSkipped).count();
        assert_eq!(skipped, 4);
        assert_eq!(rep.rows[0].engine, Some(rat(0, 1)));
        assert_eq!(rep.rows[1].engine, Some(rat(0, 1)));
    }
}
