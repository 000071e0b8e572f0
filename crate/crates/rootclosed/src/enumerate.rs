//! Classification of the closed subsets of a root system up to Weyl-group
//! conjugacy.
//!
//! Special (symmetric-part-free) classes come from a successor recursion:
//! starting from the positive system, repeatedly delete one root from
//! `T \ (T+T)`, one candidate per stabilizer orbit, keeping a candidate only
//! when the parent's dominant sum vector is minimal among all closed
//! extensions. Symmetric classes (closed root subsystems) come from the
//! extended-diagram recursion on bases. Mixed classes are assembled per
//! special class `T` by attaching symmetric subsets of the maximal hull and
//! removing stabilizer-conjugate copies. A brute-force oracle over all
//! subsets backs the whole pipeline at small rank.

use crate::closed::{self, RootSet};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::root_system::RootSystem;
use crate::weyl::{InvariantKey, WeylAction};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ClassKind {
    Special,
    Mixed,
    Symmetric,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Special => "special",
            ClassKind::Mixed => "mixed",
            ClassKind::Symmetric => "symmetric",
        }
    }
}

/// One conjugacy class of closed subsets.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub rep: RootSet,
    pub kind: ClassKind,
    pub sym_part: RootSet,
    pub spec_part: RootSet,
    pub stab_gens: Vec<Perm>,
    pub stab_order: u128,
    pub key: Arc<InvariantKey>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Counts {
    pub special: usize,
    pub mixed: usize,
    pub symmetric: usize,
    pub total: usize,
}

#[derive(Debug)]
pub struct ClassificationResult {
    pub special: Vec<ClassRecord>,
    pub mixed: Vec<ClassRecord>,
    pub symmetric: Vec<ClassRecord>,
    pub counts: Counts,
    pub elapsed: Duration,
}

impl ClassificationResult {
    pub fn all_records(&self) -> impl Iterator<Item = &ClassRecord> {
        self.special
            .iter()
            .chain(self.mixed.iter())
            .chain(self.symmetric.iter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    TooManyRoots { roots: usize, limit: usize },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::TooManyRoots { roots, limit } => {
                write!(f, "{} roots exceed the supported limit of {}", roots, limit)
            }
        }
    }
}

impl std::error::Error for EnumerateError {}

/// Ordered map from invariant keys to class indices; conjugacy tests are
/// only attempted inside one bucket.
#[derive(Default)]
struct Buckets {
    map: HashMap<InvariantKey, Vec<usize>>,
}

impl Buckets {
    fn entry(&mut self, key: &InvariantKey) -> &mut Vec<usize> {
        self.map.entry(key.clone()).or_default()
    }
}

/// Deterministic fork-join map: chunks processed in order, results spliced
/// back in order, so the output does not depend on the thread count.
pub fn par_map<T: Sync, U: Send>(jobs: usize, items: &[T], f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let threads = jobs.min(items.len());
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let f = &f;
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| scope.spawn(move || c.iter().map(f).collect::<Vec<U>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// One class of special closed sets, with its stabilizer.
pub struct SpecialClass {
    pub mask: RootSet,
    pub key: Arc<InvariantKey>,
    pub stab: PermGroup,
}

/// Successor candidates of a special class: delete one representative per
/// stabilizer orbit on `T \ (T+T)`.
pub fn special_successors(wa: &WeylAction, t: RootSet, stab: &PermGroup) -> Vec<RootSet> {
    let rs = wa.rs();
    let core = t.minus(closed::sum_set(rs, t));
    debug_assert!(
        t.is_empty() || !core.is_empty(),
        "T+T is strictly contained in special T"
    );
    let points: Vec<usize> = core.indices().collect();
    stab.orbits(&points)
        .iter()
        .map(|orbit| {
            let mut s = t;
            s.remove(orbit[0]);
            debug_assert!(closed::is_closed(rs, s));
            s
        })
        .collect()
}

/// All classes of nonempty special closed sets, largest first.
pub fn enumerate_special(wa: &WeylAction, jobs: usize) -> Vec<SpecialClass> {
    let rs = wa.rs();
    let pos = RootSet::positive(rs);
    let mut out: Vec<SpecialClass> = Vec::new();
    let mut level = vec![SpecialClass {
        mask: pos,
        key: wa.invariant_key(pos),
        stab: wa.stabilizer_of_closed_set(pos),
    }];
    loop {
        let size = level[0].mask.len();
        let descend = size > 1;
        let packets: Vec<Vec<(RootSet, Arc<InvariantKey>)>> = if descend {
            par_map(jobs, &level, |parent| {
                let sigma_t = wa.sigma(parent.mask);
                special_successors(wa, parent.mask, &parent.stab)
                    .into_iter()
                    .filter_map(|s| {
                        let exts = closed::positive_normalizer(rs, s);
                        let min_sigma = exts
                            .indices()
                            .map(|b| {
                                let mut tp = s;
                                tp.insert(b);
                                wa.sigma(tp)
                            })
                            .min()
                            .expect("every proper special set extends");
                        (sigma_t == min_sigma).then(|| (s, wa.invariant_key(s)))
                    })
                    .collect()
            })
        } else {
            Vec::new()
        };
        out.append(&mut level);
        if !descend {
            break;
        }

        let mut accepted: Vec<(RootSet, Arc<InvariantKey>)> = Vec::new();
        let mut buckets = Buckets::default();
        for (s, key) in packets.into_iter().flatten() {
            let bucket = buckets.entry(&key);
            let mut matched = false;
            for &ci in bucket.iter() {
                if wa.group().transporter(s.0, accepted[ci].0 .0).is_some() {
                    accepted[ci].0 = accepted[ci].0.lex_min(s);
                    matched = true;
                    break;
                }
            }
            if !matched {
                bucket.push(accepted.len());
                accepted.push((s, key));
            }
        }
        if accepted.is_empty() {
            break;
        }
        let stabs = par_map(jobs, &accepted, |(m, _)| wa.stabilizer_of_closed_set(*m));
        level = accepted
            .into_iter()
            .zip(stabs)
            .map(|((mask, key), stab)| SpecialClass { mask, key, stab })
            .collect();
    }
    out
}

/// Positive part of a symmetric closed set together with its base
/// (the indecomposable elements of the positive part).
fn subsystem_base(rs: &RootSystem, container: RootSet) -> Vec<usize> {
    let positive: Vec<usize> = container.indices().filter(|&i| rs.is_positive(i)).collect();
    let pos_set: HashSet<usize> = positive.iter().copied().collect();
    positive
        .iter()
        .copied()
        .filter(|&b| {
            !positive.iter().any(|&g| {
                rs.add_roots(b, rs.neg(g))
                    .map(|d| d != b && pos_set.contains(&d))
                    .unwrap_or(false)
            })
        })
        .collect()
}

/// Root subsystem generated by a set of roots: closure under mutual
/// reflections.
fn subsystem_from_base(rs: &RootSystem, base: &[usize]) -> RootSet {
    let mut set = RootSet::from_indices(base);
    loop {
        let mut next = set;
        for g in set.indices() {
            for d in set.indices() {
                let c = rs.pairing(d, g);
                let mut coords = rs.root(d).to_vec();
                for (x, k) in coords.iter_mut().zip(rs.root(g)) {
                    *x -= c * k;
                }
                next.insert(rs.index_of(&coords).expect("reflection image is a root"));
            }
        }
        if next == set {
            for i in set.indices() {
                next.insert(rs.neg(i));
            }
            if next == set {
                return set;
            }
        }
        set = next;
    }
}

/// Highest root of an irreducible base: the unique dominant root of
/// maximal length in the generated subsystem.
fn highest_root(rs: &RootSystem, comp: &[usize], sub: RootSet) -> usize {
    let mut best: Option<usize> = None;
    for d in sub.indices() {
        if comp.iter().any(|&b| rs.form(d, b) < 0) {
            continue;
        }
        best = Some(match best {
            None => d,
            Some(cur) => {
                let (nd, nc) = (rs.form(d, d), rs.form(cur, cur));
                debug_assert_ne!(nd, nc, "two dominant roots of equal length");
                if nd > nc {
                    d
                } else {
                    cur
                }
            }
        });
    }
    best.expect("irreducible component has a highest root")
}

fn components(rs: &RootSystem, base: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; base.len()];
    let mut comps = Vec::new();
    for start in 0..base.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut qi = 0;
        while qi < comp.len() {
            let i = comp[qi];
            qi += 1;
            for j in 0..base.len() {
                if !seen[j] && rs.form(base[i], base[j]) != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
        }
        comps.push(comp.into_iter().map(|i| base[i]).collect());
    }
    comps
}

/// Classes of nonempty symmetric closed subsets of `container` up to
/// conjugacy by `ambient`, via the extended-diagram recursion: drop a base
/// node, or adjoin the lowest root of one irreducible component and then
/// drop a node of it. Distinct classes of the same isomorphism type stay
/// separate because conjugacy is tested on the actual root sets.
pub fn enumerate_subsystems(
    wa: &WeylAction,
    container: RootSet,
    ambient: &PermGroup,
) -> Vec<RootSet> {
    let rs = wa.rs();
    if container.is_empty() {
        return Vec::new();
    }
    let base0 = subsystem_base(rs, container);
    debug_assert_eq!(subsystem_from_base(rs, &base0), container);

    let mut classes: Vec<RootSet> = vec![container];
    let mut buckets = Buckets::default();
    buckets.entry(&wa.invariant_key(container)).push(0);
    let mut visited: HashSet<u128> = HashSet::new();
    visited.insert(container.0);
    let mut queue: Vec<Vec<usize>> = vec![base0];
    let mut qi = 0;

    while qi < queue.len() {
        let base = queue[qi].clone();
        qi += 1;
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        for k in 0..base.len() {
            let mut b2 = base.clone();
            b2.remove(k);
            if !b2.is_empty() {
                candidates.push(b2);
            }
        }
        for comp in components(rs, &base) {
            let sub = subsystem_from_base(rs, &comp);
            let gamma0 = rs.neg(highest_root(rs, &comp, sub));
            for &drop in &comp {
                let mut b2: Vec<usize> = base.iter().copied().filter(|&b| b != drop).collect();
                b2.push(gamma0);
                b2.sort_unstable();
                candidates.push(b2);
            }
        }
        for b2 in candidates {
            let sub = subsystem_from_base(rs, &b2);
            if sub.is_empty() || !visited.insert(sub.0) {
                continue;
            }
            debug_assert!(closed::is_closed(rs, sub));
            debug_assert!(sub.is_subset_of(container));
            let key = wa.invariant_key(sub);
            let bucket = buckets.entry(&key);
            let mut matched = false;
            for &ci in bucket.iter() {
                if ambient.transporter(sub.0, classes[ci].0).is_some() {
                    classes[ci] = classes[ci].lex_min(sub);
                    matched = true;
                    break;
                }
            }
            if !matched {
                bucket.push(classes.len());
                classes.push(sub);
                queue.push(b2);
            }
        }
    }
    classes
}

/// Mixed classes whose special part is the class of `t`: attach nonempty
/// symmetric subsets of the hull, up to the subsystem's own Weyl group,
/// then remove stabilizer-conjugate copies.
pub fn enumerate_mixed_for(wa: &WeylAction, t: RootSet, stab_t: &PermGroup) -> Vec<RootSet> {
    let rs = wa.rs();
    let hull = closed::symmetric_hull(rs, t);
    if hull.is_empty() {
        return Vec::new();
    }
    let base = subsystem_base(rs, hull);
    let hull_gens: Vec<Perm> = base.iter().map(|&b| wa.reflection(b)).collect();
    let hull_group = PermGroup::from_generators(rs.num_roots(), hull_gens).expect("valid gens");
    debug_assert!(hull_group.gens().iter().all(|g| g.apply_mask(t.0) == t.0));

    let parts = enumerate_subsystems(wa, hull, &hull_group);

    // stabilizer elements listed once when the group is small
    let elems: Option<Vec<Perm>> = if stab_t.order() <= 4096 {
        stab_t.elements_capped(4096).ok().map(|it| it.collect())
    } else {
        None
    };
    let conjugate = |a: RootSet, b: RootSet| -> bool {
        match &elems {
            Some(list) => list.iter().any(|e| e.apply_mask(a.0) == b.0),
            None => stab_t.transporter(a.0, b.0).is_some(),
        }
    };

    let mut out: Vec<RootSet> = Vec::new();
    let mut buckets = Buckets::default();
    for p in parts {
        let q = p.union(t);
        debug_assert!(closed::is_closed(rs, q));
        let key = wa.invariant_key(q);
        let bucket = buckets.entry(&key);
        let mut matched = false;
        for &ci in bucket.iter() {
            if conjugate(q, out[ci]) {
                out[ci] = out[ci].lex_min(q);
                matched = true;
                break;
            }
        }
        if !matched {
            bucket.push(out.len());
            out.push(q);
        }
    }
    out
}

fn make_record(wa: &WeylAction, mask: RootSet, kind: ClassKind, stab: PermGroup) -> ClassRecord {
    let (sym, spec) = closed::split_parts(wa.rs(), mask);
    match kind {
        ClassKind::Special => debug_assert!(sym.is_empty() && !spec.is_empty()),
        ClassKind::Symmetric => debug_assert!(spec.is_empty() && !sym.is_empty()),
        ClassKind::Mixed => debug_assert!(!sym.is_empty() && !spec.is_empty()),
    }
    let stab_order = stab.order();
    ClassRecord {
        rep: mask,
        kind,
        sym_part: sym,
        spec_part: spec,
        stab_gens: stab.gens().to_vec(),
        stab_order,
        key: wa.invariant_key(mask),
    }
}

/// Full classification; the empty set is excluded throughout.
pub fn classify_all(wa: &WeylAction, jobs: usize) -> Result<ClassificationResult, EnumerateError> {
    let rs = wa.rs();
    if rs.num_roots() > 128 {
        return Err(EnumerateError::TooManyRoots {
            roots: rs.num_roots(),
            limit: 128,
        });
    }
    let start = Instant::now();

    let specials = enumerate_special(wa, jobs);
    let mixed_masks: Vec<Vec<RootSet>> = par_map(jobs, &specials, |sc| {
        enumerate_mixed_for(wa, sc.mask, &sc.stab)
    });
    let symmetric_masks = enumerate_subsystems(wa, RootSet::full(rs.num_roots()), wa.group());

    let special: Vec<ClassRecord> = specials
        .into_iter()
        .map(|sc| {
            let stab_order = sc.stab.order();
            ClassRecord {
                rep: sc.mask,
                kind: ClassKind::Special,
                sym_part: RootSet::EMPTY,
                spec_part: sc.mask,
                stab_gens: sc.stab.gens().to_vec(),
                stab_order,
                key: sc.key,
            }
        })
        .collect();

    let mixed_flat: Vec<RootSet> = mixed_masks.into_iter().flatten().collect();
    let mixed: Vec<ClassRecord> = {
        let stabs = par_map(jobs, &mixed_flat, |m| wa.stabilizer_of_closed_set(*m));
        mixed_flat
            .iter()
            .zip(stabs)
            .map(|(&m, stab)| make_record(wa, m, ClassKind::Mixed, stab))
            .collect()
    };

    let symmetric: Vec<ClassRecord> = {
        let stabs = par_map(jobs, &symmetric_masks, |m| wa.stabilizer_of_closed_set(*m));
        symmetric_masks
            .iter()
            .zip(stabs)
            .map(|(&m, stab)| make_record(wa, m, ClassKind::Symmetric, stab))
            .collect()
    };

    let counts = Counts {
        special: special.len(),
        mixed: mixed.len(),
        symmetric: symmetric.len(),
        total: special.len() + mixed.len() + symmetric.len(),
    };
    Ok(ClassificationResult {
        special,
        mixed,
        symmetric,
        counts,
        elapsed: start.elapsed(),
    })
}

/// Independent oracle: enumerate every subset, keep the closed ones, and
/// partition them into orbits by applying explicitly listed group elements.
/// Avoids the stabilizer chain and the backtrack searches entirely.
pub fn brute_force_classify(wa: &WeylAction) -> Result<ClassificationResult, EnumerateError> {
    let rs = wa.rs();
    let n = rs.num_roots();
    if n > 20 {
        return Err(EnumerateError::TooManyRoots {
            roots: n,
            limit: 20,
        });
    }
    let start = Instant::now();

    // group elements by plain closure over the simple reflections
    let mut elems: Vec<Perm> = vec![Perm::identity(n)];
    let mut seen: HashSet<Perm> = elems.iter().cloned().collect();
    let mut qi = 0;
    while qi < elems.len() {
        let e = elems[qi].clone();
        qi += 1;
        for j in 0..rs.rank() {
            let f = wa.simple_reflection(j).compose(&e);
            if seen.insert(f.clone()) {
                elems.push(f);
            }
        }
    }

    let mut visited: HashSet<u128> = HashSet::new();
    let mut by_kind: [Vec<(RootSet, Vec<Perm>)>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for mask in 1u128..(1u128 << n) {
        if visited.contains(&mask) {
            continue;
        }
        let set = RootSet(mask);
        if !closed::is_closed(rs, set) {
            continue;
        }
        let mut rep = set;
        for e in &elems {
            let image = e.apply_mask(mask);
            visited.insert(image);
            rep = rep.lex_min(RootSet(image));
        }
        let stab: Vec<Perm> = elems
            .iter()
            .filter(|e| e.apply_mask(rep.0) == rep.0)
            .cloned()
            .collect();
        let (sym, spec) = closed::split_parts(rs, rep);
        let slot = if sym.is_empty() {
            0
        } else if spec.is_empty() {
            2
        } else {
            1
        };
        by_kind[slot].push((rep, stab));
    }

    let build = |list: &[(RootSet, Vec<Perm>)], kind: ClassKind| -> Vec<ClassRecord> {
        list.iter()
            .map(|(rep, stab)| {
                let (sym, spec) = closed::split_parts(rs, *rep);
                ClassRecord {
                    rep: *rep,
                    kind,
                    sym_part: sym,
                    spec_part: spec,
                    stab_gens: stab.clone(),
                    stab_order: stab.len() as u128,
                    key: wa.invariant_key(*rep),
                }
            })
            .collect()
    };
    let special = build(&by_kind[0], ClassKind::Special);
    let mixed = build(&by_kind[1], ClassKind::Mixed);
    let symmetric = build(&by_kind[2], ClassKind::Symmetric);
    let counts = Counts {
        special: special.len(),
        mixed: mixed.len(),
        symmetric: symmetric.len(),
        total: special.len() + mixed.len() + symmetric.len(),
    };
    Ok(ClassificationResult {
        special,
        mixed,
        symmetric,
        counts,
        elapsed: start.elapsed(),
    })
}
