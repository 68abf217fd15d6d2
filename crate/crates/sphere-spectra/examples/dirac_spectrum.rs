//! The Dirac spectrum on round spheres.
//!
//! The spinor bundle is the k = 0 member of both operator families; the
//! eigenvalues are ±(n/2 + j) and the multiplicities come out of the Weyl
//! dimension formula.
//!
//! ```bash
//! cargo run --example dirac_spectrum
//! ```

use sphere_spectra::closed_form::higher_spin_eigen;
use sphere_spectra::rep::weyl_dim;
use sphere_spectra::weights::{label_to_weight, BundleSpec, Family, IsotypicLabel, Sign};

fn main() {
    for n in [3u32, 7] {
        let bundle = BundleSpec::new(n, 0, Family::Symmetric, None).unwrap();
        println!("Dirac operator on S^{n}:");
        println!("{:>4} {:>10} {:>14} {:>18}", "j", "eigenvalue", "multiplicity", "weight");
        for j in 0..6 {
            for eps in [Sign::Plus, Sign::Minus] {
                let label = IsotypicLabel::new(Some(eps), j, Some(0));
                let weight = label_to_weight(&bundle, &label).unwrap();
                let eigen = higher_spin_eigen(n, 0, j, 0, eps).unwrap();
                let mult = weyl_dim(&weight, n + 1).unwrap();
                println!("{j:>4} {eigen:>10} {mult:>14} {:>18}", weight.to_string());
            }
        }
        println!();
    }
}
