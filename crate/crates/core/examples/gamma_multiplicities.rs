//! Spectrum of the `sl_2` Casimir on weight spaces of a relaxed Fock module.

use wakimoto::lie::Lie;
use wakimoto::rational::{fmt_q, frac};
use wakimoto::root_data::Weight;
use wakimoto::weyl_poly::gamma_alpha_multiplicity;

fn main() {
    let g = Lie::new(2).expect("rank is valid");
    let lambda = Weight::new(vec![frac(1, 2)]);
    for shift in 1..=3i64 {
        let mu = lambda.add(&Weight::from_ints(&[2 * shift]));
        let rep = gamma_alpha_multiplicity(&g, &lambda, 0, &mu, 6).expect("integral offset");
        let spectrum: Vec<String> = rep
            .eigenvalues
            .iter()
            .map(|(ev, m)| format!("{} x{m}", fmt_q(ev)))
            .collect();
        println!("mu = {}: {}", mu.render(), spectrum.join(", "));
    }
}
