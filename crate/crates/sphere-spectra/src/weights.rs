//! Dominant weights, the Spin(n+1) ↓ Spin(n) branching rule, and the
//! (ε, j, q) coordinates of the isotypic summands sitting over a bundle.
//!
//! A dominant weight for Spin(m) is a tuple of ⌊m/2⌋ half-integers, all
//! integral or all strictly half-odd, weakly decreasing, with the last entry
//! nonnegative for m odd and bounded below by −λ_{l−1} for m even. Branching
//! between consecutive spin groups is the classical interlacing condition and
//! is always multiplicity free, which is what lets every summand be addressed
//! by a small coordinate tuple instead of a full weight.

use std::fmt;

use crate::half::Half;
use crate::{Error, Result};

/// Sign ε = ±1 distinguishing the two summands that a last-slot sign flip
/// exchanges. Present only when the acting group has even rank (n odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// The two bundle families carrying the operators: spinor-valued trace-free
/// symmetric k-tensors, and spinor-valued k-forms, both Clifford trace free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Symmetric,
    Form,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Symmetric => "symmetric",
            Family::Form => "form",
        }
    }
}

/// Spinor chirality for even-dimensional spheres.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    fn half(self) -> Half {
        match self {
            Chirality::Plus => Half::HALF,
            Chirality::Minus => -Half::HALF,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Chirality::Plus => "+",
            Chirality::Minus => "-",
        }
    }
}

/// Rank of Spin(m), i.e. the number of weight slots.
pub fn spin_rank(m: u32) -> usize {
    (m / 2) as usize
}

/// A Spin(m) highest weight. Entries are exact half-integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    entries: Vec<Half>,
}

impl Weight {
    pub fn new(entries: Vec<Half>) -> Self {
        Weight { entries }
    }

    /// Convenience constructor from doubled entries: `from_twice(&[3, 1])`
    /// is (3/2, 1/2).
    pub fn from_twice(twice: &[i64]) -> Self {
        Weight {
            entries: twice.iter().map(|&t| Half::from_twice(t)).collect(),
        }
    }

    pub fn entries(&self) -> &[Half] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// True iff `w` is a dominant Spin(m) weight: consistent integrality plus the
/// weakly decreasing chain, with the even-rank sign allowance in the last slot.
///
/// A length mismatch is a structural error rather than `false`.
pub fn validate_dominant(w: &Weight, m: u32) -> Result<bool> {
    if m < 3 {
        return Err(Error::domain(format!("Spin({m}) is out of range; need m >= 3")));
    }
    let l = spin_rank(m);
    if w.len() != l {
        return Err(Error::structural(format!(
            "weight {w} has {} entries, Spin({m}) needs {l}",
            w.len()
        )));
    }
    let e = w.entries();
    let parity = e[0].twice().rem_euclid(2);
    if e.iter().any(|x| x.twice().rem_euclid(2) != parity) {
        return Ok(false);
    }
    for i in 0..l - 1 {
        if e[i] < e[i + 1] {
            return Ok(false);
        }
    }
    let last_ok = if m % 2 == 1 {
        e[l - 1] >= Half::ZERO
    } else if l >= 2 {
        e[l - 2] >= e[l - 1].abs()
    } else {
        true
    };
    Ok(last_ok)
}

/// Half-sum of positive roots for Spin(m): ρ_i = (m − 2i)/2.
pub fn rho(m: u32) -> Weight {
    assert!(m >= 3, "Spin({m}) is out of range; need m >= 3");
    let l = spin_rank(m);
    Weight::new(
        (1..=l)
            .map(|i| Half::from_twice(m as i64 - 2 * i as i64))
            .collect(),
    )
}

/// The branching rule deciding whether the Spin(n) type `lambda` occurs in
/// the restriction of the Spin(n+1) type `alpha`: the first entries differ by
/// an integer and the two weights interlace, with the absolute-value
/// comparison falling on the last slot of the even-rank group.
pub fn branches(alpha: &Weight, lambda: &Weight, n: u32) -> Result<bool> {
    if !validate_dominant(alpha, n + 1)? {
        return Err(Error::domain(format!("{alpha} is not dominant for Spin({})", n + 1)));
    }
    if !validate_dominant(lambda, n)? {
        return Err(Error::domain(format!("{lambda} is not dominant for Spin({n})")));
    }
    let a = alpha.entries();
    let lam = lambda.entries();
    if (a[0].twice() - lam[0].twice()) % 2 != 0 {
        return Ok(false);
    }
    let l = lam.len();
    if n % 2 == 1 {
        // alpha has l+1 entries: a1 >= λ1 >= a2 >= ... >= λl >= |a_{l+1}|.
        for i in 0..l {
            if a[i] < lam[i] {
                return Ok(false);
            }
            let next = if i + 1 < l { a[i + 1] } else { a[l].abs() };
            if lam[i] < next {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        // alpha has l entries: a1 >= λ1 >= a2 >= ... >= λ_{l−1} >= a_l >= |λ_l|.
        for i in 0..l - 1 {
            if a[i] < lam[i] || lam[i] < a[i + 1] {
                return Ok(false);
            }
        }
        Ok(a[l - 1] >= lam[l - 1].abs())
    }
}

/// The bundle over Sⁿ on which an operator family lives: the Spin(n) type is
/// determined by the sphere dimension n, the tensor valence k, the family,
/// and (for even n) the spinor chirality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BundleSpec {
    n: u32,
    k: u32,
    family: Family,
    chirality: Option<Chirality>,
}

impl BundleSpec {
    pub fn new(n: u32, k: u32, family: Family, chirality: Option<Chirality>) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("sphere dimension n = {n} out of range; need n >= 3")));
        }
        if n % 2 == 1 && chirality.is_some() {
            return Err(Error::domain(format!(
                "chirality is only defined for even n (got n = {n})"
            )));
        }
        if n % 2 == 0 && chirality.is_none() {
            return Err(Error::domain(format!("even n = {n} requires a chirality")));
        }
        if family == Family::Form && 2 * k >= n {
            return Err(Error::domain(format!(
                "form family requires k < n/2 (got k = {k}, n = {n})"
            )));
        }
        Ok(BundleSpec { n, k, family, chirality })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn chirality(&self) -> Option<Chirality> {
        self.chirality
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    /// Rank of the isometry group Spin(n+1) acting on sections.
    pub fn acting_rank(&self) -> usize {
        spin_rank(self.n + 1)
    }

    /// The Spin(n) highest weight of the bundle.
    pub fn m_weight(&self) -> Weight {
        let l = spin_rank(self.n);
        let mut entries = vec![Half::HALF; l];
        match self.family {
            Family::Symmetric => {
                entries[0] = Half::from_twice(1 + 2 * self.k as i64);
            }
            Family::Form => {
                for slot in entries.iter_mut().take(self.k as usize) {
                    *slot = Half::from_twice(3);
                }
            }
        }
        if let Some(c) = self.chirality {
            entries[l - 1] = c.half();
        }
        Weight::new(entries)
    }

    /// The q coordinates the lattice carries: 0..=k for the symmetric family,
    /// {0, 1} for forms with k >= 1, and nothing for k = 0 forms.
    pub fn q_choices(&self) -> Vec<Option<u32>> {
        match (self.family, self.k) {
            (Family::Symmetric, k) => (0..=k).map(Some).collect(),
            (Family::Form, 0) => vec![None],
            (Family::Form, _) => vec![Some(0), Some(1)],
        }
    }

    /// The q value of the summand on which the operator reduces to the Dirac
    /// slice (q = k for symmetric, q = 1 for forms).
    pub fn top_q(&self) -> Option<u32> {
        match (self.family, self.k) {
            (Family::Symmetric, k) => Some(k),
            (Family::Form, 0) => None,
            (Family::Form, _) => Some(1),
        }
    }

    pub fn validate_label(&self, lab: &IsotypicLabel) -> Result<()> {
        match (self.is_odd(), lab.eps) {
            (true, None) => {
                return Err(Error::domain(format!(
                    "label {lab} lacks eps, required for odd n = {}",
                    self.n
                )))
            }
            (false, Some(_)) => {
                return Err(Error::domain(format!(
                    "label {lab} carries eps, which does not exist for even n = {}",
                    self.n
                )))
            }
            _ => {}
        }
        let q_ok = match (self.family, self.k, lab.q) {
            (Family::Symmetric, k, Some(q)) => q <= k,
            (Family::Form, 0, None) => true,
            (Family::Form, k, Some(q)) if k >= 1 => q <= 1,
            _ => false,
        };
        if !q_ok {
            return Err(Error::domain(format!(
                "label {lab} has an out-of-range q for {} family with k = {}",
                self.family.as_str(),
                self.k
            )));
        }
        Ok(())
    }
}

/// Coordinates (ε, j, q) of one isotypic summand in the section space of a
/// bundle. `eps` exists only for odd n; `q` is absent for k = 0 forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IsotypicLabel {
    pub eps: Option<Sign>,
    pub j: u32,
    pub q: Option<u32>,
}

impl IsotypicLabel {
    pub fn new(eps: Option<Sign>, j: u32, q: Option<u32>) -> Self {
        IsotypicLabel { eps, j, q }
    }

    /// Lexicographic key (j, q, ε) with +1 ordered before −1.
    pub fn sort_key(&self) -> (u32, u32, u8) {
        let q = self.q.unwrap_or(0);
        let e = match self.eps {
            None | Some(Sign::Plus) => 0,
            Some(Sign::Minus) => 1,
        };
        (self.j, q, e)
    }
}

impl fmt::Display for IsotypicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if let Some(e) = self.eps {
            write!(f, "eps={e}, ")?;
        }
        write!(f, "j={}", self.j)?;
        if let Some(q) = self.q {
            write!(f, ", q={q}")?;
        }
        write!(f, ")")
    }
}

/// The explicit Spin(n+1) highest weight of the summand labelled `lab`.
///
/// The first slot carries j, the q entry sits in the second slot for the
/// symmetric family and in the (k+1)-st slot for forms, and ε signs the last
/// slot for odd n. When the q slot and the sign slot coincide (n = 3
/// symmetric, or forms with k = (n−1)/2) the last entry is ε·(1/2 + q).
pub fn label_to_weight(b: &BundleSpec, lab: &IsotypicLabel) -> Result<Weight> {
    b.validate_label(lab)?;
    let r = b.acting_rank();
    let j = lab.j as i64;
    let k = b.k() as i64;
    let mut s = vec![Half::HALF; r];
    match (b.family(), b.is_odd()) {
        (Family::Symmetric, true) => {
            let eps = lab.eps.unwrap().value();
            let q = lab.q.unwrap() as i64;
            s[0] = Half::from_twice(1 + 2 * k + 2 * j);
            if r == 2 {
                s[1] = Half::from_twice(eps * (1 + 2 * q));
            } else {
                s[1] = Half::from_twice(1 + 2 * q);
                s[r - 1] = Half::from_twice(eps);
            }
        }
        (Family::Symmetric, false) => {
            let q = lab.q.unwrap() as i64;
            s[0] = Half::from_twice(1 + 2 * k + 2 * j);
            s[1] = Half::from_twice(1 + 2 * q);
        }
        (Family::Form, true) => {
            let eps = lab.eps.unwrap().value();
            if k == 0 {
                s[0] = Half::from_twice(1 + 2 * j);
                s[r - 1] = Half::from_twice(eps);
            } else {
                let q = lab.q.unwrap() as i64;
                s[0] = Half::from_twice(3 + 2 * j);
                for slot in s.iter_mut().take(k as usize).skip(1) {
                    *slot = Half::from_twice(3);
                }
                if k as usize == r - 1 {
                    // q entry and sign slot coincide.
                    s[r - 1] = Half::from_twice(eps * (1 + 2 * q));
                } else {
                    s[k as usize] = Half::from_twice(1 + 2 * q);
                    s[r - 1] = Half::from_twice(eps);
                }
            }
        }
        (Family::Form, false) => {
            if k == 0 {
                s[0] = Half::from_twice(1 + 2 * j);
            } else {
                let q = lab.q.unwrap() as i64;
                s[0] = Half::from_twice(3 + 2 * j);
                for slot in s.iter_mut().take(k as usize).skip(1) {
                    *slot = Half::from_twice(3);
                }
                s[k as usize] = Half::from_twice(1 + 2 * q);
            }
        }
    }
    Ok(Weight::new(s))
}

/// Every label with j ≤ j_max, in lexicographic (j, q, ε) order with +1
/// before −1. Branching here is multiplicity free, so this enumerates each
/// isotypic summand exactly once.
pub fn enumerate_labels(b: &BundleSpec, j_max: u32) -> Vec<IsotypicLabel> {
    let q_choices = b.q_choices();
    let eps_choices: &[Option<Sign>] = if b.is_odd() {
        &[Some(Sign::Plus), Some(Sign::Minus)]
    } else {
        &[None]
    };
    let mut out = Vec::with_capacity((j_max as usize + 1) * q_choices.len() * eps_choices.len());
    for j in 0..=j_max {
        for &q in &q_choices {
            for &eps in eps_choices {
                out.push(IsotypicLabel::new(eps, j, q));
            }
        }
    }
    out
}
