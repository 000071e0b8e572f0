//! Decides conjugacy of toral parts of regular subalgebras: two subspaces
//! of the Cartan subalgebra over the same closed set are conjugate exactly
//! when an element of the set's stabilizer carries one span onto the other.
//!
//!     cargo run --example regular_conjugacy

use rootclosed::regular::{required_coroots, toral_conjugate, ToralSubspace};
use rootclosed::root_system::{Family, RootSystem, RootSystemType};
use rootclosed::setspec::parse_set;
use rootclosed::weyl::WeylAction;
use std::sync::Arc;

/// sl4 diagonal (a1,a2,a3,a4), trace zero, in simple-coroot coordinates.
fn diag(d: [i64; 4]) -> ToralSubspace {
    assert_eq!(d.iter().sum::<i64>(), 0);
    ToralSubspace::from_ints(3, &[&[d[0], d[0] + d[1], d[0] + d[1] + d[2]]]).unwrap()
}

fn main() {
    let rs = Arc::new(RootSystem::build(
        RootSystemType::new(Family::A, 3).unwrap(),
    ));
    let wa = WeylAction::new(rs.clone());

    // special class with stabilizer <s1>: lines through diag(a1,a2,a3,a4)
    // are conjugate iff the triples match up to scalar or a swap of the
    // first two entries
    let t = parse_set(&rs, "a2,a3,a1+a2,a2+a3,a1+a2+a3").unwrap();
    for (label, other) in [
        ("diag(2,1,3,-6)", diag([2, 1, 3, -6])),
        ("diag(1,3,2,-6)", diag([1, 3, 2, -6])),
        ("diag(1,2,3,-6)", diag([1, 2, 3, -6])),
    ] {
        let witness = toral_conjugate(&wa, t, &diag([1, 2, 3, -6]), &other).unwrap();
        match witness {
            Some(w) => println!(
                "diag(1,2,3,-6) ~ {}: witness word {:?}",
                label,
                wa.word(&w).unwrap()
            ),
            None => println!("diag(1,2,3,-6) !~ {}", label),
        }
    }

    // symmetric pair {a1, -a1}: the coroot of a1 is forced into the toral part
    let pair = parse_set(&rs, "a1,-a1").unwrap();
    println!(
        "required coroots over {{a1,-a1}}: {:?}",
        required_coroots(&rs, pair)
    );
}
