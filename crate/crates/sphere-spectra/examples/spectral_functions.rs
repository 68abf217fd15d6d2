//! Gamma-ratio spectral functions: exact at odd integer orders, floating
//! point at arbitrary real orders, with poles reported rather than hidden.
//!
//! ```bash
//! cargo run --example spectral_functions
//! ```

use num_traits::ToPrimitive;
use sphere_spectra::closed_form::{spectral_z, spectral_z_float, GammaRatioSpec, ZVariant};
use sphere_spectra::weights::Sign;
use sphere_spectra::Error;

fn main() {
    let variant = ZVariant::SpinorOdd { eps: Sign::Plus };
    println!("Z(r, j) on the spinor bundle over S^3, 2r = 3:");
    for j in 0..6 {
        let exact = spectral_z(&GammaRatioSpec::new(3, 3, j, variant).unwrap()).unwrap();
        let float = spectral_z_float(3, j, 1.5, &variant).unwrap();
        println!(
            "  j={j}: {exact:>8}   (float path {float:.12}, diff {:.1e})",
            (float - exact.to_f64().unwrap()).abs()
        );
    }

    println!("\nnon-integer order 2r = 2.6 (floating evaluation only):");
    for j in 0..4 {
        let v = spectral_z_float(3, j, 1.3, &variant).unwrap();
        println!("  j={j}: {v:.12}");
    }

    println!("\nsingular normalization on an even sphere (2r = n + 1):");
    match spectral_z(&GammaRatioSpec::new(4, 5, 0, ZVariant::SpinorEven).unwrap()) {
        Err(Error::Pole(msg)) => println!("  {msg}"),
        other => panic!("expected a pole, got {other:?}"),
    }
}
