//! Classifies the closed subsets of the rank-3 irreducible root systems
//! and prints the per-kind class counts plus a few sample classes.
//!
//!     cargo run --example classify_rank3

use rootclosed::enumerate::classify_all;
use rootclosed::root_system::{Family, RootSystem, RootSystemType};
use rootclosed::setspec::format_set;
use rootclosed::weyl::WeylAction;
use std::sync::Arc;

fn main() {
    println!(
        "{:<6} {:>8} {:>8} {:>10} {:>8} {:>10}",
        "type", "special", "mixed", "symmetric", "total", "elapsed"
    );
    for family in [Family::A, Family::B, Family::C] {
        let rtype = RootSystemType::new(family, 3).unwrap();
        let rs = Arc::new(RootSystem::build(rtype));
        let wa = WeylAction::new(rs.clone());
        let result = classify_all(&wa, 1).unwrap();
        println!(
            "{:<6} {:>8} {:>8} {:>10} {:>8} {:>8}ms",
            rtype.to_string(),
            result.counts.special,
            result.counts.mixed,
            result.counts.symmetric,
            result.counts.total,
            result.elapsed.as_millis()
        );
        for rec in result.symmetric.iter() {
            println!(
                "    symmetric class, {} roots, stabilizer order {}: {}",
                rec.rep.len(),
                rec.stab_order,
                format_set(&rs, rec.rep)
            );
        }
    }
}
