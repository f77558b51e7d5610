//! Lists `Ω_k(p_Σ)` for every parabolic of `sl_3` at `k = -3/2`.

use wakimoto::admissible::{all_sigmas, omega_direct, omega_theorem, AdmissibleLevel};

fn main() {
    let lvl = AdmissibleLevel::from_pq(3, 3, 2).expect("admissible");
    for sigma in all_sigmas(3) {
        let omega = omega_theorem(&sigma, &lvl);
        let shown: Vec<String> = omega.iter().map(|w| w.render()).collect();
        println!(
            "Σ = {sigma:?}: {} (oracle agrees: {})",
            shown.join(" "),
            omega == omega_direct(&sigma, &lvl)
        );
    }
}
