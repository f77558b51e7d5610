//! Compares the relaxed Verma and relaxed Wakimoto characters of `sl_2`.

use wakimoto::character::Window;
use wakimoto::lie::Lie;
use wakimoto::rational::frac;
use wakimoto::relaxed::{character_relaxed_verma, character_relaxed_wakimoto};
use wakimoto::root_data::Weight;
use wakimoto::weyl_poly::FockKind;

fn main() {
    let g = Lie::new(2).expect("rank is valid");
    let lambda = Weight::new(vec![frac(-1, 2)]);
    let window = Window::new(3, 3);
    let verma =
        character_relaxed_verma(&g, FockKind::Gt(0), &lambda, &window, 0).expect("finite cells");
    let free =
        character_relaxed_wakimoto(&g, FockKind::Gt(0), &lambda, &window, 0).expect("finite cells");
    for ((offset, d), m) in &verma.cells {
        println!("offset {offset:?} degree {d}: {}", m.count);
    }
    println!("characters agree: {}", verma == free);
}
