//! Checks the affine bracket on a slice of a relaxed Wakimoto module of `sl_2`.

use wakimoto::affine::{verify_affine_comm, CommSlice, Realization};
use wakimoto::lie::Lie;
use wakimoto::rational::frac;
use wakimoto::root_data::Weight;
use wakimoto::weyl_poly::FockKind;

fn main() {
    let g = Lie::new(2).expect("rank is valid");
    let lambda = Weight::new(vec![frac(1, 3)]);
    let real = Realization::new(&g, FockKind::Gt(0), lambda, frac(-1, 2)).expect("generic level");
    let report = verify_affine_comm(
        &real,
        CommSlice {
            dmax: 2,
            top_max: 1,
            mode_max: 1,
        },
    );
    println!(
        "{} commutators checked, {} failures",
        report.checks,
        report.failures.len()
    );
}
