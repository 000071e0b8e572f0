//! Counts finite topologies through the type-A correspondence: closed sets
//! of A_{n-1} are topologies on n points, special sets are the T0 ones,
//! and Weyl conjugacy is homeomorphism.
//!
//!     cargo run --example topology_counts

use rootclosed::topology;

fn main() {
    println!(
        "{:>3} {:>10} {:>10} {:>12} {:>10}",
        "n", "labeled", "T0", "classes", "T0 classes"
    );
    for n in 1..=6 {
        let labeled = topology::count_labeled(n, false, 6).unwrap();
        let labeled_t0 = topology::count_labeled(n, true, 6).unwrap();
        let classes = topology::count_classes(n, false, 6).unwrap();
        let classes_t0 = topology::count_classes(n, true, 6).unwrap();
        println!(
            "{:>3} {:>10} {:>10} {:>12} {:>10}",
            n, labeled, labeled_t0, classes, classes_t0
        );
    }
    println!();
    for n in 2..=4 {
        let oracle = topology::brute_force_matrix_count(n, false);
        let fast = topology::count_labeled(n, false, 6).unwrap();
        println!(
            "n={}: matrix oracle {} vs orbit-stabilizer sum {} -> {}",
            n,
            oracle,
            fast,
            if oracle == fast { "agree" } else { "DISAGREE" }
        );
    }
}
