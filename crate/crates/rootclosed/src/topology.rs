//! Finite topologies on `{1..n}` as closed subsets of the root system of
//! type A_{n-1}.
//!
//! A topology corresponds to the reflexive-transitive boolean matrix of its
//! point closures; dropping the diagonal gives a closed set of roots, with
//! T0 topologies matching the special closed sets and homeomorphism matching
//! Weyl-group (symmetric-group) conjugacy. Labeled counts then follow from
//! orbit-stabilizer sums over the classification.

use crate::closed::{self, RootSet};
use crate::enumerate::{self, EnumerateError};
use crate::root_system::{Family, RootSystem, RootSystemType};
use crate::weyl::WeylAction;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyError {
    NotReflexive { i: usize },
    NotTransitive { i: usize, j: usize, k: usize },
    NotClosed(closed::NotClosed),
    SizeCap { n: usize, cap: usize },
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::NotReflexive { i } => write!(f, "matrix not reflexive at {}", i),
            TopologyError::NotTransitive { i, j, k } => {
                write!(
                    f,
                    "transitivity fails: ({},{}) and ({},{}) set but ({},{}) not",
                    i, j, j, k, i, k
                )
            }
            TopologyError::NotClosed(e) => write!(f, "{}", e),
            TopologyError::SizeCap { n, cap } => {
                write!(f, "point count {} exceeds cap {}", n, cap)
            }
        }
    }
}

impl std::error::Error for TopologyError {}

/// Closure matrix of a finite topology: `m[i][j] = true` iff point `i`
/// lies in the closure of point `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TopologyMatrix {
    n: usize,
    m: Vec<bool>,
}

impl TopologyMatrix {
    pub fn new(n: usize, m: Vec<bool>) -> Result<TopologyMatrix, TopologyError> {
        assert_eq!(m.len(), n * n);
        let t = TopologyMatrix { n, m };
        t.validate()?;
        Ok(t)
    }

    pub fn discrete(n: usize) -> TopologyMatrix {
        let mut m = vec![false; n * n];
        for i in 0..n {
            m[i * n + i] = true;
        }
        TopologyMatrix { n, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.m[i * self.n + j]
    }

    fn validate(&self) -> Result<(), TopologyError> {
        let n = self.n;
        for i in 0..n {
            if !self.get(i, i) {
                return Err(TopologyError::NotReflexive { i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.get(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.get(j, k) && !self.get(i, k) {
                        return Err(TopologyError::NotTransitive { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// T0: no two distinct points close over each other both ways.
    pub fn is_t0(&self) -> bool {
        for i in 0..self.n {
            for j in 0..i {
                if self.get(i, j) && self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

/// The A_{n-1} root system used by the correspondence (`n >= 2`).
pub fn bridge_system(n: usize) -> Arc<RootSystem> {
    assert!(n >= 2);
    Arc::new(RootSystem::build(
        RootSystemType::new(Family::A, n - 1).unwrap(),
    ))
}

/// Root index of `alpha_{ij}` (1-based points, `i != j`): the root
/// `alpha_i + ... + alpha_{j-1}` for `i < j`, negated for `i > j`.
pub fn pair_root(rs: &RootSystem, i: usize, j: usize) -> usize {
    assert!(i != j && i >= 1 && j >= 1 && i <= rs.rank() + 1 && j <= rs.rank() + 1);
    let (lo, hi, flip) = if i < j { (i, j, false) } else { (j, i, true) };
    let mut coords = vec![0i64; rs.rank()];
    for c in coords.iter_mut().take(hi - 1).skip(lo - 1) {
        *c = 1;
    }
    let idx = rs.index_of(&coords).expect("chain sum is a root");
    if flip {
        rs.neg(idx)
    } else {
        idx
    }
}

/// Inverse of [`pair_root`].
pub fn root_pair(rs: &RootSystem, idx: usize) -> (usize, usize) {
    let n = rs.rank() + 1;
    for i in 1..=n {
        for j in 1..=n {
            if i != j && pair_root(rs, i, j) == idx {
                return (i, j);
            }
        }
    }
    unreachable!("every A-type root is a pair root")
}

/// Closed set of `A_{n-1}` attached to a topology matrix.
pub fn closed_from_matrix(rs: &RootSystem, t: &TopologyMatrix) -> RootSet {
    let n = t.n();
    assert_eq!(n, rs.rank() + 1);
    let mut out = RootSet::EMPTY;
    for i in 1..=n {
        for j in 1..=n {
            if i != j && t.get(i - 1, j - 1) {
                out.insert(pair_root(rs, i, j));
            }
        }
    }
    debug_assert!(closed::is_closed(rs, out));
    out
}

/// Topology matrix attached to a closed set of `A_{n-1}`.
pub fn matrix_from_closed(rs: &RootSystem, set: RootSet) -> Result<TopologyMatrix, TopologyError> {
    if let Some(v) = closed::closure_violation(rs, set) {
        return Err(TopologyError::NotClosed(v));
    }
    let n = rs.rank() + 1;
    let mut t = TopologyMatrix::discrete(n);
    for idx in set.indices() {
        let (i, j) = root_pair(rs, idx);
        t.m[(i - 1) * n + (j - 1)] = true;
    }
    t.validate()?;
    Ok(t)
}

/// Count of labeled topologies (or labeled T0 topologies) on `n` points
/// by orbit-stabilizer over the conjugacy classification, including the
/// empty closed set (the discrete topology).
pub fn count_labeled(n: usize, t0_only: bool, cap: usize) -> Result<u128, TopologyError> {
    if n > cap {
        return Err(TopologyError::SizeCap { n, cap });
    }
    if n <= 1 {
        return Ok(1);
    }
    let wa = WeylAction::new(bridge_system(n));
    let weyl_order = wa.group().order();
    let result = enumerate::classify_all(&wa, 1).map_err(|e| match e {
        EnumerateError::TooManyRoots { roots, .. } => TopologyError::SizeCap { n: roots, cap },
    })?;
    let mut total: u128 = 1; // the discrete topology
    for rec in result.all_records() {
        if t0_only && rec.kind != enumerate::ClassKind::Special {
            continue;
        }
        total += weyl_order / rec.stab_order;
    }
    Ok(total)
}

/// Number of conjugacy classes behind [`count_labeled`], again counting
/// the empty set.
pub fn count_classes(n: usize, t0_only: bool, cap: usize) -> Result<u128, TopologyError> {
    if n > cap {
        return Err(TopologyError::SizeCap { n, cap });
    }
    if n <= 1 {
        return Ok(1);
    }
    let wa = WeylAction::new(bridge_system(n));
    let result = enumerate::classify_all(&wa, 1).map_err(|e| match e {
        EnumerateError::TooManyRoots { roots, .. } => TopologyError::SizeCap { n: roots, cap },
    })?;
    let classes = if t0_only {
        result.counts.special
    } else {
        result.counts.total
    };
    Ok(classes as u128 + 1)
}

/// Brute-force oracle: enumerate all boolean matrices and keep those that
/// are reflexive and transitive.
pub fn brute_force_matrix_count(n: usize, t0_only: bool) -> u128 {
    if n <= 1 {
        return 1;
    }
    let off_diag = n * n - n;
    assert!(off_diag <= 24, "matrix oracle is for small n");
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut count = 0u128;
    'outer: for bits in 0u32..(1u32 << off_diag) {
        let mut m = vec![false; n * n];
        for i in 0..n {
            m[i * n + i] = true;
        }
        for (b, &(i, j)) in positions.iter().enumerate() {
            if bits >> b & 1 == 1 {
                m[i * n + j] = true;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !m[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if m[j * n + k] && !m[i * n + k] {
                        continue 'outer;
                    }
                }
            }
        }
        if t0_only {
            for i in 0..n {
                for j in 0..i {
                    if m[i * n + j] && m[j * n + i] {
                        continue 'outer;
                    }
                }
            }
        }
        count += 1;
    }
    count
}
