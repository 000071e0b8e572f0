//! Permutation groups backed by a deterministic stabilizer chain.
//!
//! The chain uses the fixed base `0, 1, 2, ...` (levels with a trivial orbit
//! are skipped), so transversals, element enumeration and backtrack searches
//! are reproducible across runs. Set stabilizers and transporters are found
//! by depth-first search over the chain with pruning on base-point images;
//! both are cross-checked against brute force in the tests.

use crate::perm::Perm;
use std::fmt;
use std::sync::OnceLock;

/// Iteration cap for explicit element enumeration.
pub const DEFAULT_ELEMENT_CAP: u128 = 1_000_000;

/// The element-iteration cap, overridable via `ROOTCLOSED_ELEMENT_CAP`.
pub fn element_cap() -> u128 {
    std::env::var("ROOTCLOSED_ELEMENT_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    DegreeMismatch,
    CapExceeded { order: u128, cap: u128 },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::DegreeMismatch => write!(f, "generator degree mismatch"),
            GroupError::CapExceeded { order, cap } => {
                write!(f, "group order {} exceeds iteration cap {}", order, cap)
            }
        }
    }
}

impl std::error::Error for GroupError {}

struct Level {
    /// Strong generators whose smallest moved point is this level's point.
    gens: Vec<Perm>,
    /// `transversal[q]` maps the level point to `q`.
    transversal: Vec<Option<Perm>>,
    /// Orbit of the level point, ascending.
    orbit: Vec<usize>,
}

struct StabChain {
    degree: usize,
    levels: Vec<Option<Level>>,
}

impl StabChain {
    fn orbit_len(&self, p: usize) -> usize {
        match &self.levels[p] {
            Some(l) => l.orbit.len(),
            None => 1,
        }
    }
}

pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> PermGroup {
        PermGroup::from_generators_unchecked(self.degree, self.gens.clone())
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} gens, order {})",
            self.degree,
            self.gens.len(),
            self.order()
        )
    }
}

/// Strong generators fixing the base points `0..m` pointwise: everything
/// assigned to level `m` or deeper.
fn strong_gens_from(chain: &StabChain, m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for level in chain.levels.iter().skip(m).flatten() {
        out.extend(level.gens.iter().cloned());
    }
    out
}

/// Recomputes the orbit and transversal of point `m` under `gens`.
fn recompute_level(chain: &mut StabChain, m: usize, gens: &[Perm]) {
    let degree = chain.degree;
    let mut transversal: Vec<Option<Perm>> = vec![None; degree];
    transversal[m] = Some(Perm::identity(degree));
    let mut queue = vec![m];
    let mut qi = 0;
    while qi < queue.len() {
        let p = queue[qi];
        qi += 1;
        for g in gens {
            let q = g.apply(p);
            if transversal[q].is_none() {
                transversal[q] = Some(g.compose(transversal[p].as_ref().unwrap()));
                queue.push(q);
            }
        }
    }
    queue.sort_unstable();
    let level = chain.levels[m].as_mut().unwrap();
    level.transversal = transversal;
    level.orbit = queue;
}

/// Sifts `g` through the chain; returns the non-identity residue, if any.
fn sift_residue(chain: &StabChain, g: &Perm) -> Option<Perm> {
    let mut h = g.clone();
    loop {
        let m = h.smallest_moved()?;
        let Some(level) = &chain.levels[m] else {
            return Some(h);
        };
        match &level.transversal[h.apply(m)] {
            Some(u) => h = u.inverse().compose(&h),
            None => return Some(h),
        }
    }
}

fn ensure_level(chain: &mut StabChain, m: usize) {
    if chain.levels[m].is_none() {
        let mut transversal: Vec<Option<Perm>> = vec![None; chain.degree];
        transversal[m] = Some(Perm::identity(chain.degree));
        chain.levels[m] = Some(Level {
            gens: Vec::new(),
            transversal,
            orbit: vec![m],
        });
    }
}

/// Deterministic Schreier-Sims: place each generator at the level of its
/// smallest moved point, then iterate orbit recomputation and Schreier
/// verification until every Schreier generator sifts to the identity.
fn build_chain(degree: usize, gens: &[Perm]) -> StabChain {
    let mut chain = StabChain {
        degree,
        levels: (0..degree).map(|_| None).collect(),
    };
    for g in gens {
        if let Some(m) = g.smallest_moved() {
            ensure_level(&mut chain, m);
            chain.levels[m].as_mut().unwrap().gens.push(g.clone());
        }
    }
    loop {
        let active: Vec<usize> = (0..degree).filter(|&m| chain.levels[m].is_some()).collect();
        for &m in &active {
            let gens_m = strong_gens_from(&chain, m);
            recompute_level(&mut chain, m, &gens_m);
        }
        let mut added = false;
        for &m in &active {
            let gens_m = strong_gens_from(&chain, m);
            let orbit = chain.levels[m].as_ref().unwrap().orbit.clone();
            for &p in &orbit {
                for s in &gens_m {
                    let q = s.apply(p);
                    let (up, uq) = {
                        let level = chain.levels[m].as_ref().unwrap();
                        (
                            level.transversal[p].as_ref().unwrap().clone(),
                            level.transversal[q].as_ref().unwrap().clone(),
                        )
                    };
                    let schreier = uq.inverse().compose(&s.compose(&up));
                    if let Some(res) = sift_residue(&chain, &schreier) {
                        let mm = res.smallest_moved().expect("residue moves a point");
                        ensure_level(&mut chain, mm);
                        chain.levels[mm].as_mut().unwrap().gens.push(res);
                        added = true;
                    }
                }
            }
            if added {
                break;
            }
        }
        if !added {
            return chain;
        }
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            gens: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> Result<PermGroup, GroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        Ok(PermGroup::from_generators_unchecked(degree, gens))
    }

    fn from_generators_unchecked(degree: usize, gens: Vec<Perm>) -> PermGroup {
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup {
            degree,
            gens,
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| build_chain(self.degree, &self.gens))
    }

    /// Group order as the product of transversal lengths.
    pub fn order(&self) -> u128 {
        self.chain()
            .levels
            .iter()
            .map(|l| l.as_ref().map_or(1u128, |l| l.orbit.len() as u128))
            .product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let chain = self.chain();
        let mut h = g.clone();
        loop {
            let Some(m) = h.smallest_moved() else {
                return true;
            };
            let Some(level) = &chain.levels[m] else {
                return false;
            };
            let img = h.apply(m);
            match &level.transversal[img] {
                Some(u) => h = u.inverse().compose(&h),
                None => return false,
            }
        }
    }

    /// Orbit partition of `points`; blocks ascending by smallest member,
    /// members ascending. `points` must be invariant under the group.
    pub fn orbits(&self, points: &[usize]) -> Vec<Vec<usize>> {
        let mut in_set = vec![false; self.degree];
        for &p in points {
            in_set[p] = true;
        }
        let mut sorted: Vec<usize> = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut seen = vec![false; self.degree];
        let mut blocks = Vec::new();
        for &start in &sorted {
            if seen[start] {
                continue;
            }
            let mut block = vec![start];
            seen[start] = true;
            let mut qi = 0;
            while qi < block.len() {
                let p = block[qi];
                qi += 1;
                for g in &self.gens {
                    let q = g.apply(p);
                    debug_assert!(in_set[q], "point set not invariant under the group");
                    if !seen[q] {
                        seen[q] = true;
                        block.push(q);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// Orbit of a single point, ascending.
    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut block = vec![point];
        seen[point] = true;
        let mut qi = 0;
        while qi < block.len() {
            let p = block[qi];
            qi += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    block.push(q);
                }
            }
        }
        block.sort_unstable();
        block
    }

    /// Setwise stabilizer `{g : g(S) = S}` of a point-set bitmask.
    pub fn set_stabilizer(&self, set: u128) -> PermGroup {
        assert!(self.degree <= 128, "set searches require degree <= 128");
        let chain = self.chain();
        let mut found: Vec<Perm> = Vec::new();
        let mut known = PermGroup::trivial(self.degree);
        self.dfs_stab(
            chain,
            set,
            0,
            &Perm::identity(self.degree),
            true,
            &mut found,
            &mut known,
        );
        PermGroup::from_generators_unchecked(self.degree, found)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_stab(
        &self,
        chain: &StabChain,
        set: u128,
        p: usize,
        partial: &Perm,
        prefix_id: bool,
        found: &mut Vec<Perm>,
        known: &mut PermGroup,
    ) {
        if p == self.degree {
            if !partial.is_identity() && !known.contains(partial) {
                found.push(partial.clone());
                *known = PermGroup::from_generators_unchecked(self.degree, found.clone());
            }
            return;
        }
        let in_set = |x: usize| set >> x & 1 == 1;
        match &chain.levels[p] {
            None => {
                let c = partial.apply(p);
                if in_set(p) == in_set(c) {
                    self.dfs_stab(chain, set, p + 1, partial, prefix_id, found, known);
                }
            }
            Some(level) => {
                for &delta in &level.orbit {
                    let c = partial.apply(delta);
                    if in_set(p) != in_set(c) {
                        continue;
                    }
                    if prefix_id && delta != p && !min_in_known_orbit(known, p, delta) {
                        continue;
                    }
                    let u = level.transversal[delta].as_ref().unwrap();
                    let next = partial.compose(u);
                    self.dfs_stab(
                        chain,
                        set,
                        p + 1,
                        &next,
                        prefix_id && delta == p,
                        found,
                        known,
                    );
                }
            }
        }
    }

    /// Some `g` with `g(S1) = S2`, or `None` if the sets are not conjugate.
    pub fn transporter(&self, s1: u128, s2: u128) -> Option<Perm> {
        assert!(self.degree <= 128, "set searches require degree <= 128");
        if s1.count_ones() != s2.count_ones() {
            return None;
        }
        if s1 == s2 {
            return Some(Perm::identity(self.degree));
        }
        let chain = self.chain();
        let result = self.dfs_transport(chain, s1, s2, 0, &Perm::identity(self.degree));
        if let Some(g) = &result {
            debug_assert_eq!(g.apply_mask(s1), s2);
        }
        result
    }

    fn dfs_transport(
        &self,
        chain: &StabChain,
        s1: u128,
        s2: u128,
        p: usize,
        partial: &Perm,
    ) -> Option<Perm> {
        if p == self.degree {
            return Some(partial.clone());
        }
        let in1 = |x: usize| s1 >> x & 1 == 1;
        let in2 = |x: usize| s2 >> x & 1 == 1;
        match &chain.levels[p] {
            None => {
                let c = partial.apply(p);
                if in1(p) == in2(c) {
                    self.dfs_transport(chain, s1, s2, p + 1, partial)
                } else {
                    None
                }
            }
            Some(level) => {
                for &delta in &level.orbit {
                    let c = partial.apply(delta);
                    if in1(p) != in2(c) {
                        continue;
                    }
                    let u = level.transversal[delta].as_ref().unwrap();
                    let next = partial.compose(u);
                    if let Some(g) = self.dfs_transport(chain, s1, s2, p + 1, &next) {
                        return Some(g);
                    }
                }
                None
            }
        }
    }

    /// Iterator over all elements, failing if the order exceeds `cap`.
    pub fn elements_capped(&self, cap: u128) -> Result<Elements<'_>, GroupError> {
        let order = self.order();
        if order > cap {
            return Err(GroupError::CapExceeded { order, cap });
        }
        let chain = self.chain();
        let levels: Vec<usize> = (0..self.degree)
            .filter(|&p| chain.orbit_len(p) > 1)
            .collect();
        Ok(Elements {
            chain,
            degree: self.degree,
            levels,
            pos: None,
        })
    }

    /// Iterator over all elements under the configured cap.
    pub fn elements(&self) -> Result<Elements<'_>, GroupError> {
        self.elements_capped(element_cap())
    }
}

/// `delta` is minimal in its orbit under the subgroup of `known` fixing
/// the points `0..p` pointwise.
fn min_in_known_orbit(known: &PermGroup, p: usize, delta: usize) -> bool {
    if known.gens().is_empty() {
        return true;
    }
    let chain = known.chain();
    let mut gens: Vec<&Perm> = Vec::new();
    for q in p..known.degree() {
        if let Some(level) = &chain.levels[q] {
            gens.extend(level.gens.iter());
        }
    }
    if gens.is_empty() {
        return true;
    }
    let mut seen = vec![false; known.degree()];
    let mut stack = vec![delta];
    seen[delta] = true;
    while let Some(x) = stack.pop() {
        for g in &gens {
            let y = g.apply(x);
            if y < delta {
                return false;
            }
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    true
}

/// Streaming enumeration of group elements in transversal order.
pub struct Elements<'a> {
    chain: &'a StabChain,
    degree: usize,
    levels: Vec<usize>,
    /// Odometer over each level's orbit plus prefix products; None = fresh.
    pos: Option<(Vec<usize>, Vec<Perm>)>,
}

fn rebuild_prefix(
    chain: &StabChain,
    levels: &[usize],
    pos: &[usize],
    prefix: &mut Vec<Perm>,
    from: usize,
) {
    prefix.truncate(from);
    for (k, &lv) in levels.iter().enumerate().skip(from) {
        let level = chain.levels[lv].as_ref().unwrap();
        let delta = level.orbit[pos[k]];
        let u = level.transversal[delta].as_ref().unwrap();
        let next = match prefix.last() {
            Some(prev) => prev.compose(u),
            None => u.clone(),
        };
        prefix.push(next);
    }
}

impl Iterator for Elements<'_> {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        match &mut self.pos {
            None => {
                let pos = vec![0; self.levels.len()];
                let mut prefix = Vec::with_capacity(self.levels.len());
                rebuild_prefix(self.chain, &self.levels, &pos, &mut prefix, 0);
                let out = prefix
                    .last()
                    .cloned()
                    .unwrap_or_else(|| Perm::identity(self.degree));
                self.pos = Some((pos, prefix));
                Some(out)
            }
            Some((pos, prefix)) => {
                // advance odometer from the deepest level
                let mut k = self.levels.len();
                loop {
                    if k == 0 {
                        return None;
                    }
                    k -= 1;
                    let lv = self.levels[k];
                    let len = self.chain.levels[lv].as_ref().unwrap().orbit.len();
                    if pos[k] + 1 < len {
                        pos[k] += 1;
                        for x in pos.iter_mut().skip(k + 1) {
                            *x = 0;
                        }
                        break;
                    }
                }
                rebuild_prefix(self.chain, &self.levels, pos, prefix, k);
                prefix.last().cloned()
            }
        }
    }
}
