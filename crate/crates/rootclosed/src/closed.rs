//! Subsets of a root system as bitmasks, and the closure operations the
//! classification is built from.
//!
//! A subset `T` is closed when `a, b in T` and `a+b` a root imply `a+b in T`.
//! Every closed set splits into a symmetric part (elements whose negative is
//! also present, always a root subsystem) and a special part (the rest,
//! itself closed).

use crate::root_system::RootSystem;
use std::fmt;

/// A set of root indices packed into a `u128`; usable through rank 7.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn from_indices(indices: &[usize]) -> RootSet {
        RootSet(indices.iter().fold(0u128, |m, &i| m | 1 << i))
    }

    pub fn full(n: usize) -> RootSet {
        if n == 128 {
            RootSet(!0u128)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn positive(rs: &RootSystem) -> RootSet {
        RootSet::full(rs.num_positive())
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersect(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn minus(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> IndexIter {
        IndexIter(self.0)
    }

    /// `{-a : a in self}`.
    pub fn negated(self, rs: &RootSystem) -> RootSet {
        let mut out = RootSet::EMPTY;
        for i in self.indices() {
            out.insert(rs.neg(i));
        }
        out
    }

    /// Lexicographic order on the ascending index lists.
    pub fn lex_le(self, other: RootSet) -> bool {
        if self == other {
            return true;
        }
        let diff = self.0 ^ other.0;
        let i = diff.trailing_zeros();
        if self.0 >> i & 1 == 1 {
            // self owns the first divergence; it is smaller unless other
            // runs out of elements there
            if i == 127 {
                false
            } else {
                other.0 >> (i + 1) != 0
            }
        } else if i == 127 {
            true
        } else {
            self.0 >> (i + 1) == 0
        }
    }

    pub fn lex_min(self, other: RootSet) -> RootSet {
        if self.lex_le(other) {
            self
        } else {
            other
        }
    }
}

pub struct IndexIter(u128);

impl Iterator for IndexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotClosed {
    pub i: usize,
    pub j: usize,
    pub sum: usize,
}

impl fmt::Display for NotClosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not closed: roots {} and {} sum to root {} outside the set",
            self.i, self.j, self.sum
        )
    }
}

impl std::error::Error for NotClosed {}

/// First pair violating closedness, if any.
pub fn closure_violation(rs: &RootSystem, set: RootSet) -> Option<NotClosed> {
    for i in set.indices() {
        for j in set.indices() {
            if j > i {
                break;
            }
            if let Some(k) = rs.add_roots(i, j) {
                if !set.contains(k) {
                    return Some(NotClosed { i, j, sum: k });
                }
            }
        }
    }
    None
}

pub fn is_closed(rs: &RootSystem, set: RootSet) -> bool {
    closure_violation(rs, set).is_none()
}

/// Smallest closed set containing `set`.
pub fn close_up(rs: &RootSystem, set: RootSet) -> RootSet {
    let mut cur = set;
    loop {
        let mut next = cur;
        for i in cur.indices() {
            for j in cur.indices() {
                if j > i {
                    break;
                }
                if let Some(k) = rs.add_roots(i, j) {
                    next.insert(k);
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Symmetric and special parts `(T^r, T^u)` of a closed set.
pub fn split_parts(rs: &RootSystem, set: RootSet) -> (RootSet, RootSet) {
    let sym = set.intersect(set.negated(rs));
    let spec = set.minus(sym);
    debug_assert!(is_closed(rs, sym));
    debug_assert!(is_closed(rs, spec));
    (sym, spec)
}

/// Elements of `T` expressible as a sum of two elements of `T`.
pub fn sum_set(rs: &RootSystem, set: RootSet) -> RootSet {
    let mut out = RootSet::EMPTY;
    for i in set.indices() {
        for j in set.indices() {
            if j > i {
                break;
            }
            if let Some(k) = rs.add_roots(i, j) {
                if set.contains(k) {
                    out.insert(k);
                }
            }
        }
    }
    out
}

/// `N+(S)`: positive roots outside `S` whose adjunction stays closed.
pub fn positive_normalizer(rs: &RootSystem, set: RootSet) -> RootSet {
    let mut out = RootSet::EMPTY;
    for b in 0..rs.num_positive() {
        if set.contains(b) {
            continue;
        }
        if extension_is_closed(rs, set, b) {
            out.insert(b);
        }
    }
    out
}

/// Whether `set + {b}` is closed, assuming `set` is.
fn extension_is_closed(rs: &RootSystem, set: RootSet, b: usize) -> bool {
    if let Some(k) = rs.add_roots(b, b) {
        if !set.contains(k) && k != b {
            return false;
        }
    }
    for i in set.indices() {
        if let Some(k) = rs.add_roots(i, b) {
            if k != b && !set.contains(k) {
                return false;
            }
        }
    }
    true
}

/// The maximal symmetric part attachable to a special closed set `T`:
/// all roots `a` outside `T U -T` with `T U {a, -a}` closed. The result is
/// a closed root subsystem, and `T` union the result is closed.
pub fn symmetric_hull(rs: &RootSystem, t: RootSet) -> RootSet {
    let tneg = t.negated(rs);
    let mut out = RootSet::EMPTY;
    for a in 0..rs.num_roots() {
        if t.contains(a) || tneg.contains(a) {
            continue;
        }
        let mut cand = t;
        cand.insert(a);
        cand.insert(rs.neg(a));
        if is_closed(rs, cand) {
            out.insert(a);
        }
    }
    debug_assert!(is_closed(rs, out.union(t)));
    debug_assert_eq!(split_parts(rs, out.union(t)).0, out);
    out
}

/// Every closed subset, including the empty set; exhaustive search, so the
/// root count must be at most 20.
pub fn all_closed_sets(rs: &RootSystem) -> Vec<RootSet> {
    let n = rs.num_roots();
    assert!(n <= 20, "exhaustive enumeration is for small systems");
    (0u128..(1 << n))
        .map(RootSet)
        .filter(|&s| is_closed(rs, s))
        .collect()
}
