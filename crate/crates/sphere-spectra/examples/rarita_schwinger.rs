//! The Rarita-Schwinger operator (k = 1) and its cross-checks.
//!
//! The twistor bundle is simultaneously the k = 1 symmetric bundle and the
//! k = 1 form bundle, so the same spectrum is reachable three ways: the
//! higher spin formula, the order-one spectral function (scaled by (n+2)/2),
//! and the square root of the Lichnerowicz-type identity on the top summand.
//!
//! ```bash
//! cargo run --example rarita_schwinger
//! ```

use sphere_spectra::closed_form::{higher_spin_eigen, spectral_z, GammaRatioSpec, ZVariant};
use sphere_spectra::rep::{bochner, lichnerowicz_check};
use sphere_spectra::weights::{label_to_weight, BundleSpec, Family, IsotypicLabel, Sign};
use sphere_spectra::rat;

fn main() {
    let n = 5u32;
    let bundle = BundleSpec::new(n, 1, Family::Symmetric, None).unwrap();
    println!("Rarita-Schwinger spectrum on S^{n}:");
    println!("{:>4} {:>4} {:>14} {:>14}", "j", "q", "higher-spin", "(n+2)/2 * Z");
    for j in 0..5 {
        for q in 0..=1u32 {
            let direct = higher_spin_eigen(n, 1, j, q, Sign::Plus).unwrap();
            let z = spectral_z(
                &GammaRatioSpec::new(n, 1, j, ZVariant::FormOdd { k: 1, q, eps: Sign::Plus })
                    .unwrap(),
            )
            .unwrap();
            let scaled = z * rat(n as i64 + 2, 2);
            assert_eq!(direct, scaled);
            println!("{j:>4} {q:>4} {direct:>14} {scaled:>14}");
        }
    }

    println!("\nLichnerowicz-type identity on the q = k summands:");
    for j in 0..5 {
        let label = IsotypicLabel::new(Some(Sign::Plus), j, Some(1));
        let alpha = label_to_weight(&bundle, &label).unwrap();
        let mu = higher_spin_eigen(n, 1, j, 1, Sign::Plus).unwrap();
        let ok = lichnerowicz_check(&bundle, &alpha, &(&mu * &mu)).unwrap();
        let nabla = bochner(&alpha, &bundle).unwrap();
        println!("  j={j}: mu^2 = {} = {nabla} + n(n-1)/4 + k  ({ok})", &mu * &mu);
        assert!(ok);
    }
}
