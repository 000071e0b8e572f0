//! The Weyl group as permutations of root indices, dominant-weight
//! reduction, and the conjugacy invariants used to prune the search:
//! the dominant sum vector, the dominant sum of a form-bounded companion
//! set, and an order-free Gram-matrix key.

use crate::closed::RootSet;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::ratio::Ratio;
use crate::root_system::{RootSystem, Weight};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Bound on entries kept in the per-set invariant caches.
const CACHE_MAX: usize = 1 << 20;

/// Conjugacy invariants of a closed set, comparable across candidates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InvariantKey {
    pub size: usize,
    pub sigma: Weight,
    pub delta: Weight,
    pub gram: Vec<Vec<i64>>,
}

/// A root system together with its Weyl group acting on root indices.
pub struct WeylAction {
    rs: Arc<RootSystem>,
    simple_refl: Vec<Perm>,
    group: PermGroup,
    sigma_cache: Mutex<HashMap<u128, Weight>>,
    key_cache: Mutex<HashMap<u128, Arc<InvariantKey>>>,
}

impl WeylAction {
    /// The Weyl group generated by the simple reflections.
    pub fn new(rs: Arc<RootSystem>) -> WeylAction {
        let simple_refl: Vec<Perm> = (0..rs.rank())
            .map(|j| reflection_perm(&rs, rs.simple_root(j)))
            .collect();
        let group =
            PermGroup::from_generators(rs.num_roots(), simple_refl.clone()).expect("valid gens");
        WeylAction {
            rs,
            simple_refl,
            group,
            sigma_cache: Mutex::new(HashMap::new()),
            key_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rs(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn simple_reflection(&self, j: usize) -> &Perm {
        &self.simple_refl[j]
    }

    /// Reflection in an arbitrary root.
    pub fn reflection(&self, root: usize) -> Perm {
        reflection_perm(&self.rs, root)
    }

    /// Sum vector of a set in fundamental-weight coordinates.
    pub fn sum_vector(&self, set: RootSet) -> Weight {
        let l = self.rs.rank();
        let mut coords = vec![0i64; l];
        for i in set.indices() {
            for (c, k) in coords.iter_mut().zip(self.rs.root(i)) {
                *c += k;
            }
        }
        self.rs.weight_of_coords(&coords)
    }

    /// The unique dominant conjugate of `v` plus a witness `w` with
    /// `w(v)` dominant. Always picks the smallest negative coordinate,
    /// so the witness is reproducible.
    pub fn dominant_conjugate(&self, v: &Weight) -> (Weight, Perm) {
        let cartan = self.rs.cartan();
        let l = self.rs.rank();
        let mut m = v.0.clone();
        let mut w = Perm::identity(self.rs.num_roots());
        loop {
            let Some(j) = (0..l).find(|&j| m[j] < 0) else {
                return (Weight(m), w);
            };
            let mj = m[j];
            for (i, mi) in m.iter_mut().enumerate() {
                *mi -= mj * cartan[i][j];
            }
            w = self.simple_refl[j].compose(&w);
        }
    }

    /// Invariant sigma: the dominant conjugate of the sum vector.
    pub fn sigma(&self, set: RootSet) -> Weight {
        if let Some(hit) = self.sigma_cache.lock().unwrap().get(&set.0) {
            return hit.clone();
        }
        let out = self.dominant_conjugate(&self.sum_vector(set)).0;
        let mut cache = self.sigma_cache.lock().unwrap();
        if cache.len() < CACHE_MAX {
            cache.insert(set.0, out.clone());
        }
        out
    }

    /// The companion set `{a in Phi : (a, b) >= r for all b in S}`.
    pub fn form_bounded_set(&self, set: RootSet, r: Ratio) -> RootSet {
        let mut out = RootSet::EMPTY;
        'roots: for a in 0..self.rs.num_roots() {
            for b in set.indices() {
                if Ratio::from_int(self.rs.form(a, b)) < r {
                    continue 'roots;
                }
            }
            out.insert(a);
        }
        out
    }

    /// Invariant delta^r: sigma of the companion set; `r = -1` by default.
    pub fn delta(&self, set: RootSet, r: Ratio) -> Weight {
        self.sigma(self.form_bounded_set(set, r))
    }

    pub fn delta_default(&self, set: RootSet) -> Weight {
        self.delta(set, Ratio::from_int(-1))
    }

    /// Gram-matrix key: inner-product rows each sorted, then the row list
    /// sorted lexicographically. Invariant under reordering and under W.
    pub fn gram_key(&self, set: RootSet) -> Vec<Vec<i64>> {
        let idx: Vec<usize> = set.indices().collect();
        let mut rows: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| {
                let mut row: Vec<i64> = idx.iter().map(|&j| self.rs.form(i, j)).collect();
                row.sort_unstable();
                row
            })
            .collect();
        rows.sort_unstable();
        rows
    }

    /// Full invariant key (size, sigma, delta^-1, Gram), cached per set.
    pub fn invariant_key(&self, set: RootSet) -> Arc<InvariantKey> {
        if let Some(hit) = self.key_cache.lock().unwrap().get(&set.0) {
            return hit.clone();
        }
        let key = Arc::new(InvariantKey {
            size: set.len(),
            sigma: self.sigma(set),
            delta: self.delta_default(set),
            gram: self.gram_key(set),
        });
        let mut cache = self.key_cache.lock().unwrap();
        if cache.len() < CACHE_MAX {
            cache.insert(set.0, key.clone());
        }
        key
    }

    /// Applies a Weyl element to a weight: `m'_i = <v, (w^-1 alpha_i)^v>`.
    pub fn weight_action(&self, w: &Perm, v: &Weight) -> Weight {
        let rs = &self.rs;
        let l = rs.rank();
        let winv = w.inverse();
        let m = (0..l)
            .map(|i| {
                let gamma = winv.apply(rs.simple_root(i));
                let coords = rs.root(gamma);
                let ip: i64 = (0..l)
                    .map(|j| v.0[j] * rs.simple_half_norm(j) * coords[j])
                    .sum();
                let norm = rs.form(gamma, gamma);
                debug_assert_eq!(2 * ip % norm, 0);
                2 * ip / norm
            })
            .collect();
        Weight(m)
    }

    /// Stabilizer of a weight under the Weyl action: conjugate the simple
    /// reflections at the zero coordinates of the dominant representative.
    pub fn weight_stabilizer(&self, v: &Weight) -> PermGroup {
        let (dom, w) = self.dominant_conjugate(v);
        let winv = w.inverse();
        let gens: Vec<Perm> = (0..self.rs.rank())
            .filter(|&i| dom.0[i] == 0)
            .map(|i| winv.compose(&self.simple_refl[i].compose(&w)))
            .collect();
        PermGroup::from_generators(self.rs.num_roots(), gens).expect("valid gens")
    }

    /// Setwise stabilizer `W_T` of a closed set, seeded by the stabilizer
    /// of the sum vector: if every sum-vector stabilizer generator already
    /// fixes `T` we are done, otherwise backtrack inside that subgroup.
    pub fn stabilizer_of_closed_set(&self, set: RootSet) -> PermGroup {
        let seed = self.weight_stabilizer(&self.sum_vector(set));
        if seed.gens().iter().all(|g| g.apply_mask(set.0) == set.0) {
            return seed;
        }
        seed.set_stabilizer(set.0)
    }

    /// Expresses a Weyl element as a word in simple reflections, returned
    /// in product order (apply the last entry first).
    pub fn word(&self, w: &Perm) -> Option<Vec<usize>> {
        let rs = &self.rs;
        let mut cur = w.clone();
        let mut word = Vec::new();
        let bound = rs.num_positive() + 1;
        while !cur.is_identity() {
            if word.len() > bound {
                return None;
            }
            let j = (0..rs.rank()).find(|&j| !rs.is_positive(cur.apply(rs.simple_root(j))))?;
            cur = cur.compose(&self.simple_refl[j]);
            word.push(j);
        }
        word.reverse();
        Some(word)
    }

    /// Product of simple reflections given in the order of [`Self::word`].
    pub fn from_word(&self, word: &[usize]) -> Perm {
        let mut p = Perm::identity(self.rs.num_roots());
        for &j in word {
            p = p.compose(&self.simple_refl[j]);
        }
        p
    }
}

/// The reflection in `root` as a permutation of root indices.
fn reflection_perm(rs: &RootSystem, root: usize) -> Perm {
    let images: Vec<usize> = (0..rs.num_roots())
        .map(|i| {
            let c = rs.pairing(i, root);
            let mut coords = rs.root(i).to_vec();
            for (x, k) in coords.iter_mut().zip(rs.root(root)) {
                *x -= c * k;
            }
            rs.index_of(&coords).expect("reflections permute roots")
        })
        .collect();
    Perm::from_images(images).expect("reflection is a bijection")
}
