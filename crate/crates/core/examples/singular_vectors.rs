//! Singular vectors in a relaxed Verma module of `sl_2` at `k = -1/2`.

use wakimoto::character::Window;
use wakimoto::lie::Lie;
use wakimoto::rational::frac;
use wakimoto::relaxed::{find_singular_vectors, RelaxedVerma};
use wakimoto::root_data::Weight;
use wakimoto::weyl_poly::FockKind;

fn main() {
    let g = Lie::new(2).expect("rank is valid");
    let rv =
        RelaxedVerma::new(&g, FockKind::Verma, Weight::zero(1), frac(-1, 2)).expect("noncritical");
    for s in find_singular_vectors(&rv, &Window::new(4, 4)).expect("finite window") {
        println!(
            "energy {} offset {:?}: {}",
            s.energy,
            s.offset,
            s.vector.render(&g)
        );
    }
}
