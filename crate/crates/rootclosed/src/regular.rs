//! Regular subalgebra support: a closed set `T` plus a toral subspace `t`
//! of the Cartan subalgebra determines a regular subalgebra, provided `t`
//! contains the coroots of the symmetric part of `T`. Conjugacy of two
//! toral parts over the same `T` is decided inside the stabilizer of `T`,
//! with the Weyl group acting on coroot coordinates.

use crate::closed::RootSet;
use crate::group::GroupError;
use crate::perm::Perm;
use crate::ratio::{in_span, mat_vec, rref, Ratio};
use crate::root_system::RootSystem;
use crate::weyl::WeylAction;
use std::fmt;

/// A subspace of the Cartan subalgebra, spanned by vectors in coordinates
/// over the simple coroots, canonicalized by reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ToralSubspace {
    basis: Vec<Vec<Ratio>>,
    rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ToralError {
    WrongLength { expected: usize, got: usize },
    Dependent,
}

impl fmt::Display for ToralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToralError::WrongLength { expected, got } => {
                write!(
                    f,
                    "basis vector length {} does not match rank {}",
                    got, expected
                )
            }
            ToralError::Dependent => write!(f, "basis vectors are linearly dependent"),
        }
    }
}

impl std::error::Error for ToralError {}

impl ToralSubspace {
    pub fn new(rank: usize, basis: Vec<Vec<Ratio>>) -> Result<ToralSubspace, ToralError> {
        for v in &basis {
            if v.len() != rank {
                return Err(ToralError::WrongLength {
                    expected: rank,
                    got: v.len(),
                });
            }
        }
        let n = basis.len();
        let mut rows = basis;
        if rref(&mut rows) != n {
            return Err(ToralError::Dependent);
        }
        Ok(ToralSubspace { basis: rows, rank })
    }

    pub fn zero(rank: usize) -> ToralSubspace {
        ToralSubspace {
            basis: Vec::new(),
            rank,
        }
    }

    pub fn from_ints(rank: usize, basis: &[&[i64]]) -> Result<ToralSubspace, ToralError> {
        ToralSubspace::new(
            rank,
            basis
                .iter()
                .map(|v| v.iter().map(|&x| Ratio::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Ratio>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Ratio]) -> bool {
        in_span(&self.basis, v)
    }

    /// Image under a rank x rank matrix, re-canonicalized.
    pub fn apply(&self, m: &[Vec<Ratio>]) -> ToralSubspace {
        let mut rows: Vec<Vec<Ratio>> = self.basis.iter().map(|v| mat_vec(m, v)).collect();
        rref(&mut rows);
        ToralSubspace {
            basis: rows,
            rank: self.rank,
        }
    }
}

/// A closed set plus a toral part; valid when the coroots forced by the
/// symmetric part lie in the span.
#[derive(Clone, Debug)]
pub struct RegularSubalgebraDescriptor {
    pub set: RootSet,
    pub toral: ToralSubspace,
}

/// Coroot coordinates of root `i` over the simple coroots:
/// `alpha^v = sum_j k_j (alpha_j, alpha_j)/(alpha, alpha) alpha_j^v`.
pub fn coroot_coords(rs: &RootSystem, i: usize) -> Vec<Ratio> {
    let norm = Ratio::from_int(rs.form(i, i));
    rs.root(i)
        .iter()
        .enumerate()
        .map(|(j, &k)| Ratio::from_int(2 * k * rs.simple_half_norm(j)) / norm)
        .collect()
}

/// Coroots forced into the toral part: one per `{a, -a}` pair in `T`.
pub fn required_coroots(rs: &RootSystem, set: RootSet) -> Vec<Vec<Ratio>> {
    set.indices()
        .filter(|&i| rs.is_positive(i) && set.contains(rs.neg(i)))
        .map(|i| coroot_coords(rs, i))
        .collect()
}

/// Whether `toral` is a valid toral part for `set`.
pub fn is_valid_toral(rs: &RootSystem, set: RootSet, toral: &ToralSubspace) -> bool {
    required_coroots(rs, set).iter().all(|c| toral.contains(c))
}

/// Matrix of a Weyl element acting on coroot coordinates: column `j` holds
/// the coroot coordinates of `w(alpha_j)^v`.
pub fn weyl_coroot_matrix(wa: &WeylAction, w: &Perm) -> Vec<Vec<Ratio>> {
    let rs = wa.rs();
    let l = rs.rank();
    let mut m = vec![vec![Ratio::ZERO; l]; l];
    for j in 0..l {
        let image = coroot_coords(rs, w.apply(rs.simple_root(j)));
        for (row, x) in m.iter_mut().zip(image) {
            row[j] = x;
        }
    }
    m
}

/// Searches the stabilizer of `set` for an element carrying `t1` onto `t2`.
/// Both subspaces must be valid toral parts for `set`.
pub fn toral_conjugate(
    wa: &WeylAction,
    set: RootSet,
    t1: &ToralSubspace,
    t2: &ToralSubspace,
) -> Result<Option<Perm>, GroupError> {
    if t1.dim() != t2.dim() {
        return Ok(None);
    }
    let stab = wa.stabilizer_of_closed_set(set);
    for w in stab.elements()? {
        let m = weyl_coroot_matrix(wa, &w);
        if &t1.apply(&m) == t2 {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Same search over explicit subalgebra descriptors.
pub fn descriptors_conjugate(
    wa: &WeylAction,
    a: &RegularSubalgebraDescriptor,
    b: &RegularSubalgebraDescriptor,
) -> Result<Option<Perm>, GroupError> {
    if a.set != b.set {
        return Ok(None);
    }
    toral_conjugate(wa, a.set, &a.toral, &b.toral)
}
