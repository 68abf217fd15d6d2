//! Closed-form eigenvalue evaluators.
//!
//! Everything here is a direct formula in exact rational arithmetic: the
//! first-order operators on spinor-valued symmetric tensors (odd n) and their
//! squares (even n), the Gamma-ratio spectral functions of arbitrary odd
//! order on spinor-form bundles, the first-order form-family operator P_k,
//! the second-order piece T_{k−1}T*_{k−1}, and the factored odd-order
//! operators built from them. The lattice engine in [`crate::engine`]
//! recomputes the same spectra by propagating transition quotients, and the
//! two paths are compared exactly by the verification suites.

use crate::gamma::ln_abs_gamma;
use crate::weights::Sign;
use crate::{rat, Error, Rational, Result};

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(msg))
    }
}

/// Eigenvalue of the first-order higher spin operator on the summand
/// (ε, j, q) over the spinor-valued trace-free symmetric k-tensors on Sⁿ,
/// n odd:  ε · (n + 2q − 2)/(n + 2k − 2) · (n/2 + k + j).
///
/// k = 0 is the Dirac operator, k = 1 the Rarita-Schwinger operator.
pub fn higher_spin_eigen(n: u32, k: u32, j: u32, q: u32, eps: Sign) -> Result<Rational> {
    require(n >= 3, format!("need n >= 3, got {n}"))?;
    require(
        n % 2 == 1,
        format!("higher_spin_eigen needs odd n (got {n}); use higher_spin_sq_eigen"),
    )?;
    require(q <= k, format!("need q <= k, got q = {q}, k = {k}"))?;
    let (n, k, j, q) = (n as i64, k as i64, j as i64, q as i64);
    Ok(rat(eps.value() * (n + 2 * q - 2), n + 2 * k - 2) * rat(n + 2 * (k + j), 2))
}

/// Eigenvalue of the squared higher spin operator for even n:
/// [(n + 2q − 2)/(n + 2k − 2) · (n/2 + k + j)]².
pub fn higher_spin_sq_eigen(n: u32, k: u32, j: u32, q: u32) -> Result<Rational> {
    require(n >= 4 && n % 2 == 0, format!("higher_spin_sq_eigen needs even n >= 4, got {n}"))?;
    require(q <= k, format!("need q <= k, got q = {q}, k = {k}"))?;
    let (n, k, j, q) = (n as i64, k as i64, j as i64, q as i64);
    let v = rat(n + 2 * q - 2, n + 2 * k - 2) * rat(n + 2 * (k + j), 2);
    Ok(&v * &v)
}

/// Γ(x + m)/Γ(x) as the rising factorial Π_{i<m} (x + i), exact.
///
/// A zero factor means the evaluation crosses a Gamma pole; that is reported
/// as a pole error rather than silently returning 0.
pub fn gamma_ratio(x: &Rational, m: u64) -> Result<Rational> {
    let mut acc = rat(1, 1);
    let mut term = x.clone();
    for i in 0..m {
        if term == rat(0, 1) {
            return Err(Error::pole(format!("gamma ratio crosses a pole at {x} + {i}")));
        }
        acc *= &term;
        term += rat(1, 1);
    }
    Ok(acc)
}

/// Rising factorial allowing zero factors (used for spectral-function
/// numerators, where a zero is a genuine zero of the spectrum).
fn rising(x: &Rational, m: u64) -> Rational {
    let mut acc = rat(1, 1);
    let mut term = x.clone();
    for _ in 0..m {
        acc *= &term;
        term += rat(1, 1);
    }
    acc
}

/// Which spectral-function lattice a Gamma-ratio evaluation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZVariant {
    /// Spinor bundle, n odd: summands 𝒱_ε(j).
    SpinorOdd { eps: Sign },
    /// Spinor bundle, n even: summands 𝒱(j); eigenvalues of the exchanged
    /// (chirality-restored) operator, normalized to 1 at j = 0.
    SpinorEven,
    /// Clifford-trace-free spinor k-forms, n odd, k >= 1: summands 𝒱_ε(j, q).
    FormOdd { k: u32, q: u32, eps: Sign },
    /// Spinor k-forms, n even, k >= 1: summands 𝒱(j, q).
    FormEven { k: u32, q: u32 },
}

/// An order-2r spectral-function evaluation point. Exact evaluation needs 2r
/// an odd positive integer, so that the Gamma arguments differ by integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaRatioSpec {
    pub n: u32,
    pub two_r: u64,
    pub j: u32,
    pub variant: ZVariant,
}

impl GammaRatioSpec {
    pub fn new(n: u32, two_r: u64, j: u32, variant: ZVariant) -> Result<Self> {
        require(n >= 3, format!("need n >= 3, got {n}"))?;
        require(two_r % 2 == 1, format!("exact evaluation needs odd 2r, got {two_r}"))?;
        let odd = n % 2 == 1;
        match variant {
            ZVariant::SpinorOdd { .. } => require(odd, format!("SpinorOdd needs odd n, got {n}"))?,
            ZVariant::SpinorEven => require(!odd, format!("SpinorEven needs even n, got {n}"))?,
            ZVariant::FormOdd { k, q, .. } => {
                require(odd, format!("FormOdd needs odd n, got {n}"))?;
                require(k >= 1 && 2 * k < n, format!("need 1 <= k < n/2, got k = {k}"))?;
                require(q <= 1, format!("form family has q in {{0, 1}}, got {q}"))?;
            }
            ZVariant::FormEven { k, q } => {
                require(!odd, format!("FormEven needs even n, got {n}"))?;
                require(k >= 1 && 2 * k < n, format!("need 1 <= k < n/2, got k = {k}"))?;
                require(q <= 1, format!("form family has q in {{0, 1}}, got {q}"))?;
            }
        }
        Ok(GammaRatioSpec { n, two_r, j, variant })
    }

    fn k(&self) -> u32 {
        match self.variant {
            ZVariant::SpinorOdd { .. } | ZVariant::SpinorEven => 0,
            ZVariant::FormOdd { k, .. } | ZVariant::FormEven { k, .. } => k,
        }
    }

    /// The spectral level J: n/2 + j on the spinor bundle, n/2 + 1 + j on the
    /// form bundles with k >= 1.
    pub fn level(&self) -> Rational {
        let shift = if self.k() == 0 { 0 } else { 2 };
        rat(self.n as i64 + shift + 2 * self.j as i64, 2)
    }
}

/// The spectral function: the eigenvalue of the order-2r intertwining
/// operator on the labelled summand,
///
/// ```text
///        Γ(J + 1/2 + r) Γ(n/2 + c − r)
///   ε · ──────────────────────────────── · prefactor(q)
///        Γ(J + 1/2 − r) Γ(n/2 + c + r)
/// ```
///
/// with c = 1/2 on the spinor bundle and c = 3/2 on forms, and for k >= 1 the
/// rational prefactor (n − 2k + 1 + 2(2q−1)r)/(n − 2k + 1 + 2r). Normalized
/// so the top summand at j = 0 has eigenvalue ε (odd n) or 1 (even n).
///
/// A pole error means the normalizing Gamma factor is singular (even n with
/// 2r large); zeros of the numerator are genuine zeros and evaluate to 0.
pub fn spectral_z(spec: &GammaRatioSpec) -> Result<Rational> {
    let n = spec.n as i64;
    let two_r = spec.two_r as i64;
    let level = spec.level();
    // J + 1/2 − r and n/2 + c − r, with c − 1/2 equal to the level shift.
    let num_arg = &level + rat(1 - two_r, 2);
    let c_twice = if spec.k() == 0 { 1 } else { 3 };
    let den_arg = rat(n + c_twice - two_r, 2);
    let den = gamma_ratio(&den_arg, spec.two_r).map_err(|_| {
        Error::pole(format!(
            "spectral function normalization is singular for n = {n}, 2r = {two_r}"
        ))
    })?;
    let num = rising(&num_arg, spec.two_r);
    let mut value = num / den;
    match spec.variant {
        ZVariant::SpinorOdd { eps } => {
            value *= rat(eps.value(), 1);
        }
        ZVariant::SpinorEven => {}
        ZVariant::FormOdd { k, q, eps } => {
            let k = k as i64;
            let pm = 2 * q as i64 - 1;
            value *= rat(n - 2 * k + 1 + pm * two_r, n - 2 * k + 1 + two_r);
            value *= rat(eps.value(), 1);
        }
        ZVariant::FormEven { k, q } => {
            let k = k as i64;
            let pm = 2 * q as i64 - 1;
            value *= rat(n - 2 * k + 1 + pm * two_r, n - 2 * k + 1 + two_r);
        }
    }
    Ok(value)
}

/// Floating-point spectral function for arbitrary real order 2r > 0, via
/// log-Gamma. Relative accuracy is about 1e-12; exact odd-integer orders
/// should use [`spectral_z`].
pub fn spectral_z_float(n: u32, j: u32, r: f64, variant: &ZVariant) -> Result<f64> {
    require(r > 0.0, format!("need r > 0, got {r}"))?;
    let k = match *variant {
        ZVariant::SpinorOdd { .. } | ZVariant::SpinorEven => 0,
        ZVariant::FormOdd { k, .. } | ZVariant::FormEven { k, .. } => k,
    };
    let level = n as f64 / 2.0 + if k == 0 { 0.0 } else { 1.0 } + j as f64;
    let c = if k == 0 { 0.5 } else { 1.5 };
    let args = [
        (level + 0.5 + r, 1.0),
        (level + 0.5 - r, -1.0),
        (n as f64 / 2.0 + c - r, 1.0),
        (n as f64 / 2.0 + c + r, -1.0),
    ];
    let mut ln_sum = 0.0;
    let mut sign = 1.0;
    for (x, dir) in args {
        let (ln_abs, s) =
            ln_abs_gamma(x).ok_or_else(|| Error::pole(format!("Gamma pole at argument {x}")))?;
        ln_sum += dir * ln_abs;
        sign *= s;
    }
    let mut value = sign * ln_sum.exp();
    match *variant {
        ZVariant::SpinorOdd { eps } => value *= eps.value() as f64,
        ZVariant::SpinorEven => {}
        ZVariant::FormOdd { k, q, eps } => {
            let m = (n as f64) - 2.0 * k as f64 + 1.0;
            value *= eps.value() as f64 * (m + 2.0 * (2.0 * q as f64 - 1.0) * r) / (m + 2.0 * r);
        }
        ZVariant::FormEven { k, q } => {
            let m = (n as f64) - 2.0 * k as f64 + 1.0;
            value *= (m + 2.0 * (2.0 * q as f64 - 1.0) * r) / (m + 2.0 * r);
        }
    }
    Ok(value)
}

/// Eigenvalue of the first-order conformally invariant operator P_k on
/// Clifford-trace-free spinor k-forms, n odd: ε (n − 2k + 2q)(n/2 + 1 + j).
pub fn p_k_eigen(n: u32, k: u32, j: u32, q: u32, eps: Sign) -> Result<Rational> {
    require(n % 2 == 1, format!("p_k_eigen needs odd n (got {n}); use p_k_sq_eigen"))?;
    require(k >= 1 && 2 * k < n, format!("need 1 <= k < n/2, got k = {k}, n = {n}"))?;
    require(q <= 1, format!("form family has q in {{0, 1}}, got {q}"))?;
    let (n, k, j, q) = (n as i64, k as i64, j as i64, q as i64);
    Ok(rat(eps.value() * (n - 2 * k + 2 * q), 1) * rat(n + 2 + 2 * j, 2))
}

/// Eigenvalue of P_k² for even n: (n − 2k + 2q)² (n/2 + 1 + j)².
pub fn p_k_sq_eigen(n: u32, k: u32, j: u32, q: u32) -> Result<Rational> {
    require(n % 2 == 0 && n >= 4, format!("p_k_sq_eigen needs even n >= 4, got {n}"))?;
    require(k >= 1 && 2 * k < n, format!("need 1 <= k < n/2, got k = {k}, n = {n}"))?;
    require(q <= 1, format!("form family has q in {{0, 1}}, got {q}"))?;
    let (n, k, j, q) = (n as i64, k as i64, j as i64, q as i64);
    let lin = rat(n - 2 * k + 2 * q, 1) * rat(n + 2 + 2 * j, 2);
    Ok(&lin * &lin)
}

/// Scalar action of T_{k−1} T*_{k−1} on the form-family summands: 0 on q = 1
/// and (n − 2k + 1)(J² − (n/2 − k + 1)²)/(k (n − 2k + 2)) on q = 0, with
/// J = n/2 + 1 + j. Independent of ε and of the chirality.
pub fn tt_star_eigen(n: u32, k: u32, j: u32, q: u32) -> Result<Rational> {
    require(k >= 1, "T_{k-1} is undefined for k = 0")?;
    require(2 * k < n, format!("need k < n/2, got k = {k}, n = {n}"))?;
    require(q <= 1, format!("form family has q in {{0, 1}}, got {q}"))?;
    if q == 1 {
        return Ok(rat(0, 1));
    }
    let (n, k, j) = (n as i64, k as i64, j as i64);
    let level = rat(n + 2 + 2 * j, 2);
    let gap = rat(n - 2 * k + 2, 2);
    Ok(rat(n - 2 * k + 1, 1) * (&level * &level - &gap * &gap) / rat(k * (n - 2 * k + 2), 1))
}

/// The constant c_i = 16 k i² / ((n−2k+2)(n−2k+2−2i)(n−2k+2+2i)) appearing in
/// the factored odd-order operators.
pub fn c_i_const(n: u32, k: u32, i: u32) -> Result<Rational> {
    require(k >= 1 && 2 * k < n, format!("need 1 <= k < n/2, got k = {k}, n = {n}"))?;
    require(i >= 1, "need i >= 1")?;
    let (n, k, i) = (n as i64, k as i64, i as i64);
    let m = n - 2 * k + 2;
    if m - 2 * i == 0 {
        return Err(Error::pole(format!("c_i has a pole at i = {i} for n = {n}, k = {k}")));
    }
    Ok(rat(16 * k * i * i, m * (m - 2 * i) * (m + 2 * i)))
}

/// Eigenvalue of the odd-order operator D_{2l+1} on the spinor bundle:
/// ε · J · Π_{p=1}^{l} (J² − p²) with J = n/2 + j. For even n these are the
/// eigenvalues of the chirality-restored operator, reported with ε = +1.
pub fn d_odd_eigen(n: u32, l: u32, j: u32, eps: Sign) -> Rational {
    let level = rat(n as i64 + 2 * j as i64, 2);
    let mut acc = rat(eps.value(), 1) * &level;
    for p in 1..=l as i64 {
        acc *= &level * &level - rat(p * p, 1);
    }
    acc
}

/// Eigenvalue of the factored odd-order operator D_{2l+1,k} on spinor
/// k-forms, k >= 1: with J = n/2 + 1 + j,
///
/// ```text
///   q = 1:  ε · J (J² − 1²) ⋯ (J² − l²)
///   q = 0:  ε · (n − 2k − 2l)/(n − 2k + 2 + 2l) · J (J² − 1²) ⋯ (J² − l²)
/// ```
pub fn d_odd_k_eigen(n: u32, k: u32, l: u32, j: u32, q: u32, eps: Sign) -> Result<Rational> {
    require(k >= 1 && 2 * k < n, format!("need 1 <= k < n/2, got k = {k}, n = {n}"))?;
    require(q <= 1, format!("form family has q in {{0, 1}}, got {q}"))?;
    let level = rat(n as i64 + 2 + 2 * j as i64, 2);
    let mut acc = rat(eps.value(), 1) * &level;
    for i in 1..=l as i64 {
        acc *= &level * &level - rat(i * i, 1);
    }
    if q == 0 {
        let (n, k, l) = (n as i64, k as i64, l as i64);
        acc *= rat(n - 2 * k - 2 * l, n - 2 * k + 2 + 2 * l);
    }
    Ok(acc)
}

/// Verifies the telescoping identity behind the factored operators: the
/// product of P_k/(n−2k+2) with the factors P_k²/(n−2k+2)² − i² − c_i·TT*
/// evaluates, summand by summand, to the D_{2l+1,k} eigenvalue. For even n
/// the squared analogue is checked. Pole errors from c_i propagate.
pub fn factored_identity_check(n: u32, k: u32, l: u32, j: u32, q: u32, eps: Sign) -> Result<bool> {
    require(k >= 1 && 2 * k < n, format!("need 1 <= k < n/2, got k = {k}, n = {n}"))?;
    require(q <= 1, format!("form family has q in {{0, 1}}, got {q}"))?;
    let m = rat(n as i64 - 2 * k as i64 + 2, 1);
    let tt = tt_star_eigen(n, k, j, q)?;
    if n % 2 == 1 {
        let p = p_k_eigen(n, k, j, q, eps)?;
        let p_norm_sq = (&p * &p) / (&m * &m);
        let mut lhs = &p / &m;
        for i in 1..=l {
            lhs *= &p_norm_sq - rat(i as i64 * i as i64, 1) - c_i_const(n, k, i)? * &tt;
        }
        Ok(lhs == d_odd_k_eigen(n, k, l, j, q, eps)?)
    } else {
        let p_sq = p_k_sq_eigen(n, k, j, q)?;
        let p_norm_sq = &p_sq / (&m * &m);
        let mut lhs = p_norm_sq.clone();
        for i in 1..=l {
            let factor = &p_norm_sq - rat(i as i64 * i as i64, 1) - c_i_const(n, k, i)? * &tt;
            lhs *= &factor * &factor;
        }
        let rhs = d_odd_k_eigen(n, k, l, j, q, Sign::Plus)?;
        Ok(lhs == &rhs * &rhs)
    }
}

/// On the round sphere the third-order twistor-bundle operator S₃ is
/// n(n+2)/4 times D_{3,1}; this returns that constant.
pub fn s3_ratio(n: u32) -> Rational {
    rat(n as i64 * (n as i64 + 2), 4)
}
