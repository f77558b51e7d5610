//! The twisted Verma character of `sl_3` along `θ` matches the `θ`-relaxed Fock module.

use wakimoto::character::Window;
use wakimoto::lie::Lie;
use wakimoto::root_data::Weight;
use wakimoto::weyl_poly::{fock_character, twist_character, FockKind};

fn main() {
    let g = Lie::new(3).expect("rank is valid");
    let lambda = Weight::zero(2);
    let window = Window::new(1, 0);
    for cap in 1..=3 {
        let twisted = twist_character(&g, &lambda, 2, &window, cap).expect("finite cells");
        let fock =
            fock_character(&g, FockKind::Gt(2), &lambda, &window, cap).expect("finite cells");
        println!(
            "cap {cap}: zero weight {} (equal: {})",
            twisted.get(&[0, 0], 0).count,
            twisted == fock
        );
    }
}
