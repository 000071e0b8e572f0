//! Reference class counts per irreducible type, and the tiered
//! verification runs built on them.

use crate::enumerate::{brute_force_classify, classify_all, Counts};
use crate::root_system::{Family, RootSystem, RootSystemType};
use crate::sampling::{random_closed_set, random_weyl_element, SplitMix64};
use crate::weyl::WeylAction;
use std::fmt;
use std::sync::Arc;
use std::time::Duration;

/// Known (special, mixed, symmetric, total) class counts.
pub const KNOWN_COUNTS: &[(Family, usize, Counts)] = &[
    (
        Family::A,
        3,
        Counts {
            special: 15,
            mixed: 13,
            symmetric: 4,
            total: 32,
        },
    ),
    (
        Family::B,
        3,
        Counts {
            special: 46,
            mixed: 33,
            symmetric: 9,
            total: 88,
        },
    ),
    (
        Family::C,
        3,
        Counts {
            special: 44,
            mixed: 34,
            symmetric: 9,
            total: 87,
        },
    ),
    (
        Family::A,
        4,
        Counts {
            special: 62,
            mixed: 70,
            symmetric: 6,
            total: 138,
        },
    ),
    (
        Family::B,
        4,
        Counts {
            special: 429,
            mixed: 311,
            symmetric: 19,
            total: 759,
        },
    ),
    (
        Family::C,
        4,
        Counts {
            special: 401,
            mixed: 334,
            symmetric: 19,
            total: 754,
        },
    ),
    (
        Family::D,
        4,
        Counts {
            special: 110,
            mixed: 102,
            symmetric: 11,
            total: 223,
        },
    ),
    (
        Family::F,
        4,
        Counts {
            special: 3579,
            mixed: 1242,
            symmetric: 23,
            total: 4844,
        },
    ),
    (
        Family::A,
        5,
        Counts {
            special: 317,
            mixed: 390,
            symmetric: 10,
            total: 717,
        },
    ),
    (
        Family::B,
        5,
        Counts {
            special: 6267,
            mixed: 3592,
            symmetric: 35,
            total: 9894,
        },
    ),
    (
        Family::C,
        5,
        Counts {
            special: 5744,
            mixed: 4074,
            symmetric: 35,
            total: 9853,
        },
    ),
    (
        Family::D,
        5,
        Counts {
            special: 1145,
            mixed: 877,
            symmetric: 15,
            total: 2037,
        },
    ),
];

pub fn known_counts(family: Family, rank: usize) -> Option<Counts> {
    KNOWN_COUNTS
        .iter()
        .find(|(f, r, _)| *f == family && *r == rank)
        .map(|(_, _, c)| *c)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyLevel {
    Fast,
    Full,
    Extended,
}

impl VerifyLevel {
    pub fn parse(s: &str) -> Option<VerifyLevel> {
        match s {
            "fast" => Some(VerifyLevel::Fast),
            "full" => Some(VerifyLevel::Full),
            "extended" => Some(VerifyLevel::Extended),
            _ => None,
        }
    }

    fn targets(self) -> &'static [(Family, usize)] {
        match self {
            VerifyLevel::Fast => &[(Family::A, 3), (Family::B, 3), (Family::C, 3)],
            VerifyLevel::Full => &[
                (Family::A, 3),
                (Family::B, 3),
                (Family::C, 3),
                (Family::A, 4),
                (Family::B, 4),
                (Family::C, 4),
                (Family::D, 4),
                (Family::F, 4),
            ],
            VerifyLevel::Extended => &[
                (Family::A, 3),
                (Family::B, 3),
                (Family::C, 3),
                (Family::A, 4),
                (Family::B, 4),
                (Family::C, 4),
                (Family::D, 4),
                (Family::F, 4),
                (Family::A, 5),
                (Family::B, 5),
                (Family::C, 5),
                (Family::D, 5),
            ],
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub lines: Vec<String>,
    pub all_ok: bool,
    pub elapsed: Duration,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{}", line)?;
        }
        Ok(())
    }
}

/// Runs the tiered verification: reference counts at every target, the
/// brute-force oracle at rank 3, and a seeded invariance sample.
pub fn run_verify(level: VerifyLevel, jobs: usize, seed: u64) -> VerifyReport {
    let start = std::time::Instant::now();
    let mut lines = Vec::new();
    let mut all_ok = true;
    let mut check = |name: String, ok: bool, detail: String| {
        all_ok &= ok;
        lines.push(format!(
            "{} {} {}",
            if ok { "ok " } else { "FAIL" },
            name,
            detail
        ));
    };

    for &(family, rank) in level.targets() {
        let rtype = RootSystemType::new(family, rank).expect("valid target");
        let rs = Arc::new(RootSystem::build(rtype));
        let wa = WeylAction::new(rs);
        let expected = known_counts(family, rank).expect("target has golden counts");
        match classify_all(&wa, jobs) {
            Ok(result) => {
                check(
                    format!("counts[{}]", rtype),
                    result.counts == expected,
                    format!(
                        "special={} mixed={} symmetric={} total={} (expected {}/{}/{}/{})",
                        result.counts.special,
                        result.counts.mixed,
                        result.counts.symmetric,
                        result.counts.total,
                        expected.special,
                        expected.mixed,
                        expected.symmetric,
                        expected.total
                    ),
                );
            }
            Err(e) => check(format!("counts[{}]", rtype), false, e.to_string()),
        }
        if rank <= 3 {
            let brute = brute_force_classify(&wa).expect("rank 3 is brute-forceable");
            check(
                format!("oracle[{}]", rtype),
                brute.counts == expected,
                format!(
                    "brute force gives {}/{}/{}/{}",
                    brute.counts.special,
                    brute.counts.mixed,
                    brute.counts.symmetric,
                    brute.counts.total
                ),
            );
        }
    }

    // seeded invariance spot check on B3
    let rs = Arc::new(RootSystem::build(
        RootSystemType::new(Family::B, 3).unwrap(),
    ));
    let wa = WeylAction::new(rs.clone());
    let mut rng = SplitMix64::new(seed);
    let mut invariance_ok = true;
    for _ in 0..200 {
        let set = random_closed_set(&rs, &mut rng);
        let w = random_weyl_element(&wa, &mut rng);
        let moved = crate::closed::RootSet(w.apply_mask(set.0));
        invariance_ok &= wa.sigma(moved) == wa.sigma(set);
        invariance_ok &= wa.delta_default(moved) == wa.delta_default(set);
        invariance_ok &= wa.gram_key(moved) == wa.gram_key(set);
    }
    check(
        "invariance[B3]".to_string(),
        invariance_ok,
        format!("200 sampled pairs, seed {}", seed),
    );

    VerifyReport {
        lines,
        all_ok,
        elapsed: start.elapsed(),
    }
}
