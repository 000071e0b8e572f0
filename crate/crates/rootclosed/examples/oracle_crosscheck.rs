//! Cross-checks the classification pipeline against the brute-force
//! oracle, which filters every subset for closedness and partitions the
//! survivors into orbits by explicit group elements.
//!
//!     cargo run --example oracle_crosscheck

use rootclosed::enumerate::{brute_force_classify, classify_all};
use rootclosed::root_system::{Family, RootSystem, RootSystemType};
use rootclosed::weyl::WeylAction;
use std::sync::Arc;

fn main() {
    for (family, rank) in [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 3),
        (Family::C, 3),
    ] {
        let rtype = RootSystemType::new(family, rank).unwrap();
        let rs = Arc::new(RootSystem::build(rtype));
        let wa = WeylAction::new(rs);
        let fast = classify_all(&wa, 1).unwrap();
        let brute = brute_force_classify(&wa).unwrap();
        let agree = fast.counts == brute.counts
            && fast.all_records().all(|f| {
                brute
                    .all_records()
                    .filter(|b| wa.group().transporter(f.rep.0, b.rep.0).is_some())
                    .count()
                    == 1
            });
        println!(
            "{}: pipeline {}/{}/{}/{} vs oracle {}/{}/{}/{} -> {}",
            rtype,
            fast.counts.special,
            fast.counts.mixed,
            fast.counts.symmetric,
            fast.counts.total,
            brute.counts.special,
            brute.counts.mixed,
            brute.counts.symmetric,
            brute.counts.total,
            if agree {
                "orbit partitions agree"
            } else {
                "DISAGREE"
            }
        );
    }
}
