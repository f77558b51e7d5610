//! Prints `π_g` on the Chevalley basis of `sl_3` and checks it is a homomorphism.

use wakimoto::lie::Lie;
use wakimoto::weyl_poly::{pi_g_basis, verify_pi_hom};

fn main() {
    let g = Lie::new(3).expect("rank is valid");
    for (i, img) in pi_g_basis(&g).iter().enumerate() {
        let b = g.basis[i];
        println!("{:>4} -> {}", g.symbol(b), img.render(&g));
    }
    println!("failing brackets: {}", verify_pi_hom(&g).len());
}
