//! Computes setwise stabilizers of closed sets inside the Weyl group,
//! printing generator words in the simple reflections.
//!
//!     cargo run --example stabilizer_query

use rootclosed::closed::RootSet;
use rootclosed::root_system::{Family, RootSystem, RootSystemType};
use rootclosed::setspec::{format_set, parse_set};
use rootclosed::weyl::WeylAction;
use std::sync::Arc;

fn show(wa: &WeylAction, rs: &RootSystem, set: RootSet) {
    let stab = wa.stabilizer_of_closed_set(set);
    println!(
        "set {{{}}}: stabilizer order {}",
        format_set(rs, set),
        stab.order()
    );
    for g in stab.gens() {
        let word = wa
            .word(g)
            .map(|w| {
                if w.is_empty() {
                    "1".into()
                } else {
                    w.iter()
                        .map(|j| format!("s{}", j + 1))
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            })
            .unwrap_or_default();
        println!("    generator {}", word);
    }
}

fn main() {
    let rs = Arc::new(RootSystem::build(
        RootSystemType::new(Family::A, 3).unwrap(),
    ));
    let wa = WeylAction::new(rs.clone());
    show(&wa, &rs, RootSet::positive(&rs));
    show(&wa, &rs, parse_set(&rs, "a1,-a1").unwrap());
    show(&wa, &rs, parse_set(&rs, "a1,a3,-a1,-a3").unwrap());
    show(&wa, &rs, RootSet::full(rs.num_roots()));

    let rsb = Arc::new(RootSystem::build(
        RootSystemType::new(Family::B, 3).unwrap(),
    ));
    let wb = WeylAction::new(rsb.clone());
    let row2 = parse_set(
        &rsb,
        "a1,a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    )
    .unwrap();
    show(&wb, &rsb, row2);
}
