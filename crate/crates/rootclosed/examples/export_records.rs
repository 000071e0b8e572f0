//! Exports a classification as JSON Lines and reads it back.
//!
//!     cargo run --example export_records

use rootclosed::enumerate::{classify_all, ClassKind};
use rootclosed::export::{parse_jsonl, to_export_records, write_jsonl};
use rootclosed::root_system::{Family, RootSystem, RootSystemType};
use rootclosed::weyl::WeylAction;
use std::sync::Arc;

fn main() {
    let rs = Arc::new(RootSystem::build(
        RootSystemType::new(Family::B, 3).unwrap(),
    ));
    let wa = WeylAction::new(rs.clone());
    let result = classify_all(&wa, 1).unwrap();
    let records = to_export_records(
        &rs,
        &result,
        &[ClassKind::Special, ClassKind::Mixed, ClassKind::Symmetric],
    );
    let text = write_jsonl(&records);
    let back = parse_jsonl(&text).unwrap();
    assert_eq!(records, back);
    println!(
        "{} records, {} bytes, round-trip ok; first two lines:",
        records.len(),
        text.len()
    );
    for line in text.lines().take(2) {
        println!("{}", line);
    }
}
