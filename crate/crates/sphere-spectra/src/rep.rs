//! Casimir eigenvalues, Bochner Laplacian values, and Weyl dimensions.
//!
//! These are the standard representation-theoretic quantities evaluated with
//! exact arithmetic. They form the independent backend against which the
//! spectrum-generating lattice and the closed-form eigenvalue formulas are
//! cross-checked: the connection Laplacian ∇*∇ acts on an isotypic summand
//! 𝒱(α) of a homogeneous bundle over Sⁿ = Spin(n+1)/Spin(n) as the Casimir
//! difference c(α) − c(λ), and the square of the Dirac-type slice satisfies
//! ∂² = ∇*∇ + n(n−1)/4 + k on Clifford-trace-free spinor k-tensors.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::weights::{validate_dominant, BundleSpec, Weight};
use crate::{rat, Error, Rational, Result};

/// Casimir eigenvalue ⟨w, w + 2ρ⟩ = Σᵢ wᵢ(wᵢ + m − 2i) for Spin(m).
pub fn casimir(w: &Weight, m: u32) -> Result<Rational> {
    if !validate_dominant(w, m)? {
        return Err(Error::domain(format!("{w} is not dominant for Spin({m})")));
    }
    // In doubled coordinates t = 2w: Σ t(t + 2m − 4i) / 4.
    let mut sum: i128 = 0;
    for (i, e) in w.entries().iter().enumerate() {
        let t = e.twice() as i128;
        let slot = (i + 1) as i128;
        sum += t * (t + 2 * m as i128 - 4 * slot);
    }
    Ok(Rational::new(BigInt::from(sum), BigInt::from(4)))
}

/// Eigenvalue of the Bochner Laplacian ∇*∇ on the summand of type `alpha`
/// over the bundle `b`, for the unit round sphere: c(α) over Spin(n+1) minus
/// c(λ) over Spin(n).
pub fn bochner(alpha: &Weight, b: &BundleSpec) -> Result<Rational> {
    let lambda = b.m_weight();
    if !crate::weights::branches(alpha, &lambda, b.n())? {
        return Err(Error::domain(format!(
            "{alpha} does not branch over the bundle type {lambda}"
        )));
    }
    Ok(casimir(alpha, b.n() + 1)? - casimir(&lambda, b.n())?)
}

/// Dimension of the irreducible Spin(m) representation with highest weight
/// `w`, via the Weyl product over the explicit positive roots (eᵢ ± eⱼ, plus
/// the short roots eᵢ when m is odd).
pub fn weyl_dim(w: &Weight, m: u32) -> Result<BigInt> {
    if !validate_dominant(w, m)? {
        return Err(Error::domain(format!("{w} is not dominant for Spin({m})")));
    }
    let l = w.len();
    // Doubled shifted coordinates: a_i = 2(w_i + ρ_i), b_i = 2ρ_i.
    let a: Vec<i64> = w
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| e.twice() + m as i64 - 2 * (i as i64 + 1))
        .collect();
    let b: Vec<i64> = (1..=l as i64).map(|i| m as i64 - 2 * i).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..l {
        for j in i + 1..l {
            num *= BigInt::from(a[i] * a[i] - a[j] * a[j]);
            den *= BigInt::from(b[i] * b[i] - b[j] * b[j]);
        }
        if m % 2 == 1 {
            num *= BigInt::from(a[i]);
            den *= BigInt::from(b[i]);
        }
    }
    if !(&num % &den).is_zero() {
        return Err(Error::internal(format!(
            "Weyl product for {w} over Spin({m}) is not integral"
        )));
    }
    Ok(num / den)
}

/// Checks the Lichnerowicz-type identity μ² = ∇*∇ + n(n−1)/4 + k on a
/// summand where the operator restricts to the Dirac slice ∂.
pub fn lichnerowicz_check(b: &BundleSpec, alpha: &Weight, mu_sq: &Rational) -> Result<bool> {
    let expected = bochner(alpha, b)? + rat((b.n() * (b.n() - 1)) as i64, 4) + rat(b.k() as i64, 1);
    Ok(*mu_sq == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{enumerate_labels, label_to_weight, Family, IsotypicLabel, Sign};

    fn w(twice: &[i64]) -> Weight {
        Weight::from_twice(twice)
    }

    #[test]
    fn casimir_examples() {
        assert_eq!(casimir(&w(&[1]), 3).unwrap(), rat(3, 4));
        assert_eq!(casimir(&w(&[0, 0]), 5).unwrap(), rat(0, 1));
        assert_eq!(casimir(&w(&[0, 0, 0]), 6).unwrap(), rat(0, 1));
        // (3/2)(3/2 + 2) + (1/2)(1/2) over Spin(4)
        assert_eq!(casimir(&w(&[3, 1]), 4).unwrap(), rat(11, 2));
    }

    #[test]
    fn casimir_rejects_non_dominant() {
        assert!(matches!(casimir(&w(&[1, 3]), 4), Err(Error::Domain(_))));
    }

    #[test]
    fn casimir_first_slot_difference() {
        // c(w + e1) − c(w) = 2 w1 + 1 + (m − 2)
        let cases = [(w(&[3, 1]), 5u32), (w(&[5, 3, 1]), 7), (w(&[4, 2, 0]), 6), (w(&[7, 1]), 4)];
        for (wt, m) in cases {
            let mut up = wt.entries().to_vec();
            up[0] = up[0] + crate::half::Half::from_int(1);
            let up = Weight::new(up);
            let diff = casimir(&up, m).unwrap() - casimir(&wt, m).unwrap();
            let expected = wt.entries()[0].to_rational() * rat(2, 1) + rat(m as i64 - 1, 1);
            assert_eq!(diff, expected);
        }
    }

    #[test]
    fn bochner_examples() {
        let b = BundleSpec::new(3, 0, Family::Symmetric, None).unwrap();
        assert_eq!(bochner(&w(&[1, 1]), &b).unwrap(), rat(3, 4));
        assert_eq!(bochner(&w(&[3, 1]), &b).unwrap(), rat(19, 4));

        let b = BundleSpec::new(3, 1, Family::Symmetric, None).unwrap();
        // v with v + n(n-1)/4 + k = (5/2)^2
        assert_eq!(bochner(&w(&[3, 3]), &b).unwrap(), rat(25, 4) - rat(6, 4) - rat(1, 1));
    }

    #[test]
    fn bochner_rejects_non_branching() {
        let b = BundleSpec::new(3, 1, Family::Symmetric, None).unwrap();
        assert!(matches!(bochner(&w(&[1, 1]), &b), Err(Error::Domain(_))));
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&w(&[1, 1]), 4).unwrap(), BigInt::from(2));
        assert_eq!(weyl_dim(&w(&[0, 0]), 5).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(&w(&[2, 0]), 5).unwrap(), BigInt::from(5));
        // spinor representations
        assert_eq!(weyl_dim(&w(&[1, 1]), 5).unwrap(), BigInt::from(4));
        assert_eq!(weyl_dim(&w(&[1, 1, 1]), 7).unwrap(), BigInt::from(8));
        // adjoint of so(5) has dimension 10
        assert_eq!(weyl_dim(&w(&[2, 2]), 5).unwrap(), BigInt::from(10));
    }

    #[test]
    fn weyl_dim_sign_flip_symmetry() {
        for entries in [[5i64, 3, 1], [7, 3, 3], [9, 5, 1]] {
            let plus = w(&entries);
            let mut neg = entries;
            neg[2] = -neg[2];
            let minus = w(&neg);
            assert_eq!(weyl_dim(&plus, 6).unwrap(), weyl_dim(&minus, 6).unwrap());
        }
    }

    #[test]
    fn lichnerowicz_examples() {
        let b = BundleSpec::new(3, 0, Family::Symmetric, None).unwrap();
        assert!(lichnerowicz_check(&b, &w(&[3, 1]), &rat(25, 4)).unwrap());
        assert!(!lichnerowicz_check(&b, &w(&[3, 1]), &rat(6, 1)).unwrap());
        let b = BundleSpec::new(3, 1, Family::Symmetric, None).unwrap();
        assert!(lichnerowicz_check(&b, &w(&[3, 3]), &rat(25, 4)).unwrap());
    }

    #[test]
    fn lichnerowicz_sweep() {
        // (n/2 + k + j)^2 = ∇*∇ + n(n−1)/4 + k on the q = k summand.
        for n in [3u32, 5, 7, 9] {
            for k in 0..=3u32 {
                let b = BundleSpec::new(n, k, Family::Symmetric, None).unwrap();
                for j in 0..=10u32 {
                    let lab = IsotypicLabel::new(Some(Sign::Plus), j, Some(k));
                    let alpha = label_to_weight(&b, &lab).unwrap();
                    let mu = rat(n as i64 + 2 * (k as i64 + j as i64), 2);
                    assert!(
                        lichnerowicz_check(&b, &alpha, &(&mu * &mu)).unwrap(),
                        "sweep failed at n={n} k={k} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn bochner_increasing_in_j() {
        let bundles = [
            BundleSpec::new(5, 2, Family::Symmetric, None).unwrap(),
            BundleSpec::new(6, 1, Family::Form, Some(crate::weights::Chirality::Plus)).unwrap(),
        ];
        for b in &bundles {
            for base in enumerate_labels(b, 0) {
                let mut prev: Option<Rational> = None;
                for j in 0..=8u32 {
                    let lab = IsotypicLabel::new(base.eps, j, base.q);
                    let val = bochner(&label_to_weight(b, &lab).unwrap(), b).unwrap();
                    if let Some(p) = prev {
                        assert!(val > p, "bochner not increasing at {lab} over {b:?}");
                    }
                    prev = Some(val);
                }
            }
        }
    }
}
