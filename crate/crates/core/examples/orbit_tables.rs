//! Nilpotent orbits of `sl_5` with their Richardson parabolics.

use wakimoto::admissible::{orbit_q, orbit_table};

fn main() {
    for row in orbit_table(5) {
        let covers: Vec<String> = row.covers.iter().map(ToString::to_string).collect();
        println!(
            "{:<12} dim {:>2} {:?} covers {} from {:?}",
            row.partition.to_string(),
            row.dim,
            row.labels,
            covers.join(" "),
            row.sigmas
        );
    }
    println!("orbit for q = 2: {}", orbit_q(5, 2));
}
