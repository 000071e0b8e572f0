//! Published rank-3 classification rows, in simple-root notation.
//! `PHIPOS` stands for the full positive system and `PHI` for the
//! whole root system. Three source rows duplicate earlier classes (see
//! `KNOWN_DUPLICATES`): two verbatim repeats, plus B3 special row 46
//! whose stray trailing root makes it conjugate to row 16. They are
//! checked for closedness and kind but excluded from the pairwise
//! non-conjugacy assertion.

pub const A3_SPECIAL: &[&str] = &[
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3",
    "a2,a3,a1+a2,a2+a3,a1+a2+a3",
    "a1,a2,a1+a2,a2+a3,a1+a2+a3",
    "a1,a3,a1+a2,a2+a3,a1+a2+a3",
    "a3,a1+a2,a2+a3,a1+a2+a3",
    "a1,a1+a2,a2+a3,a1+a2+a3",
    "a2,a1+a2,a2+a3,a1+a2+a3",
    "a3,a1+a2,a1+a2+a3",
    "a1+a2,a2+a3,a1+a2+a3",
    "a3,a2+a3,a1+a2+a3",
    "a1,a1+a2,a1+a2+a3",
    "a1+a2,a2+a3",
    "a1+a2,a1+a2+a3",
    "a3,a1+a2+a3",
    "a3",
];

pub const A3_MIXED: &[&str] = &[
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a1",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a2",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a1,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a1,-a2,-a1-a2",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,-a2,-a3,-a2-a3",
    "a2,a3,a1+a2,a2+a3,a1+a2+a3,-a3",
    "a1,a2,a1+a2,a2+a3,a1+a2+a3,-a1",
    "a1,a3,a2+a3,a1+a2+a3,-a1",
    "a1,a2,a1+a2,a1+a2+a3,-a2",
    "a1+a2,a2+a3,-a1-a2",
    "a3,a1+a2,a1+a2+a3,-a3",
    "a3,a1+a2,a1+a2+a3,-a1-a2",
];

pub const A3_SYMMETRIC: &[&str] = &[
    "a1,-a1",
    "a1,a2,a1+a2,-a1,-a2,-a1-a2",
    "a1,a3,-a1,-a3",
    "PHI",
];

pub const B3_SPECIAL: &[&str] = &[
    "PHIPOS",
    "a1,a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a3,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a1+a2,a2+a3,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a2,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a3,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a3,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+2a2+2a3",
    "a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2,a2+a3,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a3,a1+a2,a1+a2+a3,a1+a2+2a3",
    "a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a2,a1+a2+a3,a2+2a3,a1+2a2+2a3",
    "a3,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a2,a1+a2+2a3,a1+2a2+2a3",
    "a2,a1+a2+a3,a2+2a3",
    "a3,a1+a2+a3,a1+a2+2a3",
    "a2,a1+a2+a3,a1+2a2+2a3",
    "a1+a2,a1+a2+a3,a1+a2+2a3",
    "a1+a2,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2+a3,a1+a2+2a3,a1+2a2+2a3",
    "a2+2a3,a1+a2+2a3,a1+2a2+2a3",
    "a1+a2+a3,a2+2a3",
    "a2,a2+2a3",
    "a1+a2+a3,a1+a2+2a3",
    "a1+a2+2a3,a1+2a2+2a3",
    "a1+a2+a3",
    "a2+2a3",
    "a1,a1+a2,a1+a2+2a3,a1+2a2+2a3,-a2",
];

pub const B3_MIXED: &[&str] = &[
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a1,a2,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1",
    "a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a3",
    "a1,a2,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a2,-a1-a2",
    "a1,a3,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1",
    "a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1",
    "a3,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1-a2",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2,-a3,-a2-a3,-a2-2a3",
    "a1,a2,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a1,a3,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a3",
    "a1,a2,a1+a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2,-a2-2a3",
    "a2,a1+a2+a3,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a1,a2,a1+a2,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a2,-a2-2a3",
    "a3,a1+a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a3",
    "a3,a1+a2,a1+a2+a3,a1+a2+2a3,-a1-a2",
    "a3,a1+a2,a1+a2+a3,a1+a2+2a3,-a3",
    "a2,a1+a2+a3,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a2,-a1-a2",
    "a1,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1",
    "a2,a1+a2+a3,a2+2a3,-a2",
    "a2,a1+a2+a3,a2+2a3,-a1-a2-a3",
    "a2,a1+a2+2a3,a1+2a2+2a3,-a2",
    "a2,a1+a2+a3,-a2",
    "a2,a1+a2+a3,a2+2a3,-a2,-a2-2a3",
    "a2,a2+2a3,-a2",
    "a1+a2+a3,a2+2a3,-a1-a2-a3",
    "a2,a1+a2+a3,a2+2a3,-a2,-a1-a2-a3",
];

pub const B3_SYMMETRIC: &[&str] = &[
    "a1,-a1",
    "a3,-a3",
    "a1,a3,-a1,-a3",
    "a1,a1+2a2+2a3,-a1,-a1-2a2-2a3",
    "a1,a2,a1+a2,-a1,-a2,-a1-a2",
    "a1,a2+a3,a1+a2+a3,a1+2a2+2a3,-a1,-a2-a3,-a1-a2-a3,-a1-2a2-2a3",
    "a1,a3,a1+2a2+2a3,-a1,-a3,-a1-2a2-2a3",
    "a1,a2,a1+a2,a2+2a3,a1+a2+2a3,a1+2a2+2a3,-a1,-a2,-a1-a2,-a2-2a3,-a1-a2-2a3,-a1-2a2-2a3",
    "PHI",
];

pub const C3_SPECIAL: &[&str] = &[
    "PHIPOS",
    "a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1,a2,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a2,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1,a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3",
    "a3,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a3,a1+a2,a1+a2+a3,2a1+2a2+a3",
    "a1+a2,a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3",
    "a3,a1+a2+a3,2a2+a3,2a1+2a2+a3",
    "a3,a1+a2+a3,2a2+a3,a1+2a2+a3",
    "a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a2+a3,a1+2a2+a3",
    "a3,2a2+a3,2a1+2a2+a3",
    "a1+a2+a3,2a2+a3,2a1+2a2+a3",
    "a2+a3,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2,a1+a2+a3,2a1+2a2+a3",
    "a3,a1+a2+a3,2a1+2a2+a3",
    "a2+a3,a1+a2+a3,a1+2a2+a3",
    "a1+a2,a1+2a2+a3,2a1+2a2+a3",
    "a1+a2+a3,2a2+a3",
    "2a2+a3,2a1+2a2+a3",
    "a2+a3,a1+2a2+a3",
    "a1+a2+a3,2a1+2a2+a3",
    "a1+a2+a3",
    "2a2+a3",
];

pub const C3_MIXED: &[&str] = &[
    "a3,a1+a2,a1+a2+a3,2a1+2a2+a3,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2",
    "a1,a2,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1",
    "a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-a3",
    "a1,a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-a2,-a1-a2",
    "a1,a3,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1",
    "a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3",
    "a3,a1+a2,a2+a3,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1-a2",
    "a1,a2,a3,a1+a2,a2+a3,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2,-a3,-a2-a3,-2a2-a3",
    "a1,a3,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3",
    "a1,a2,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2",
    "a1,a3,a1+a2,a1+a2+a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3,-2a2-a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a1-a2",
    "a3,a1+a2,a1+a2+a3,a1+2a2+a3,2a1+2a2+a3,-a3",
    "a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a3,-2a2-a3",
    "a3,a1+a2,a1+a2+a3,2a1+2a2+a3,-a1-a2",
    "a3,a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a1-a2,-2a2-a3",
    "a1+a2,a2+a3,a1+2a2+a3,2a1+2a2+a3,-a2-a3",
    "a3,2a2+a3,2a1+2a2+a3,-a3",
    "a1+a2,a2+a3,a1+2a2+a3,-a1-a2",
    "a1+a2+a3,2a2+a3,2a1+2a2+a3,-2a2-a3",
    "a1+a2+a3,2a2+a3,-2a2-a3",
    "a3,a1+a2,a1+a2+a3,2a2+a3,2a1+2a2+a3,-a3,-a1-a2,-a1-a2-a3,-2a1-2a2-a3",
    "a3,2a2+a3,-a3",
    "a1+a2,2a2+a3,-a1-a2",
    "a3,2a2+a3,2a1+2a2+a3,-a3,-2a1-2a2-a3",
];

pub const C3_SYMMETRIC: &[&str] = &[
    "a1,-a1",
    "a3,-a3",
    "a1,a3,-a1,-a3",
    "a3,2a2+a3,-a3,-2a2-a3",
    "a1,a2,a1+a2,-a1,-a2,-a1-a2",
    "a1,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-2a2-a3,-a1-2a2-a3,-2a1-2a2-a3",
    "a3,2a2+a3,2a1+2a2+a3,-a3,-2a2-a3,-2a1-2a2-a3",
    "a1,a3,2a2+a3,a1+2a2+a3,2a1+2a2+a3,-a1,-a3,-2a2-a3,-a1-2a2-a3,-2a1-2a2-a3",
    "PHI",
];

/// (section, duplicate row position, earlier row position),
/// 0-based within the section lists above.
pub const KNOWN_DUPLICATES: &[(&str, usize, usize)] = &[
    ("B3_SPECIAL", 4, 1),
    ("B3_SPECIAL", 45, 15),
    ("C3_SPECIAL", 6, 3),
];
