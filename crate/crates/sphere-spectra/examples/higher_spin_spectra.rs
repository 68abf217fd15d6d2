//! Higher spin operators on spinor-valued trace-free symmetric k-tensors.
//!
//! For odd n the operator acts as ε (n+2q−2)/(n+2k−2) (n/2+k+j) on the
//! (ε, j, q) summand. For even n the operator swaps spinor chiralities and
//! only its square has eigenvalues.
//!
//! ```bash
//! cargo run --example higher_spin_spectra
//! ```

use sphere_spectra::closed_form::{higher_spin_eigen, higher_spin_sq_eigen};
use sphere_spectra::weights::Sign;

fn main() {
    let (n, k) = (5u32, 2u32);
    println!("spin-{}/2 operator on S^{n} (k = {k}):", 2 * k + 1);
    println!("{:>4} {:>4} {:>12}", "j", "q", "eigenvalue");
    for j in 0..4 {
        for q in 0..=k {
            let v = higher_spin_eigen(n, k, j, q, Sign::Plus).unwrap();
            println!("{j:>4} {q:>4} {v:>12}");
        }
    }
    println!("(the ε = −1 summands carry the negated values)\n");

    let (n, k) = (4u32, 1u32);
    println!("squared operator on S^{n} (k = {k}, chirality-swapping):");
    println!("{:>4} {:>4} {:>12}", "j", "q", "eigenvalue");
    for j in 0..4 {
        for q in 0..=k {
            let v = higher_spin_sq_eigen(n, k, j, q).unwrap();
            println!("{j:>4} {q:>4} {v:>12}");
        }
    }
}
