//! Partitions of a weight into positive roots: enumeration and memoized
//! counting, optionally restricted to a root subset and to the hand-capacity
//! constraint that encodes juggling with capacity `m`.
//!
//! Roots are consumed in canonical order. When a root with a positive entry at
//! coordinate `x` is reached, every root that can raise coordinate `x` has
//! already been consumed, so the residual at `x` bounds its multiplicity.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::juggling::JugglingState;
use crate::roots::{PositiveRoot, RootSystem, Weight};
use crate::Count;

/// Canonical multiset of positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootPartition {
    entries: Vec<(PositiveRoot, u64)>,
}

impl RootPartition {
    pub fn empty() -> Self {
        RootPartition::default()
    }

    /// Builds the canonical form from an arbitrary list of roots (repeats allowed).
    pub fn from_roots<I: IntoIterator<Item = PositiveRoot>>(roots: I) -> Self {
        let mut v: Vec<PositiveRoot> = roots.into_iter().collect();
        v.sort();
        let mut entries: Vec<(PositiveRoot, u64)> = Vec::new();
        for r in v {
            match entries.last_mut() {
                Some((last, m)) if *last == r => *m += 1,
                _ => entries.push((r, 1)),
            }
        }
        RootPartition { entries }
    }

    pub fn entries(&self) -> &[(PositiveRoot, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of roots counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, root: &PositiveRoot) -> u64 {
        self.entries
            .iter()
            .find(|(r, _)| r == root)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// Every root, repeated by multiplicity, in canonical order.
    pub fn roots(&self) -> impl Iterator<Item = PositiveRoot> + '_ {
        self.entries
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(*r, *m as usize))
    }

    pub fn weight(&self, ambient: usize) -> Result<Weight> {
        let mut v = vec![0i64; ambient];
        for (r, m) in &self.entries {
            if r.max_index() > ambient {
                return domain(format!("root {r} does not fit in dimension {ambient}"));
            }
            r.add_to(&mut v, *m as i64);
        }
        Ok(Weight(v))
    }
}

impl fmt::Display for RootPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(r, m)| if *m == 1 { r.to_string() } else { format!("{r}^{m}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Duplicate-free, canonically ordered subset of the positive roots of a
/// root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    system: RootSystem,
    roots: Vec<PositiveRoot>,
}

impl RootSet {
    pub fn full(system: RootSystem) -> Self {
        RootSet { roots: system.positive_roots(), system }
    }

    pub fn new(system: RootSystem, roots: impl IntoIterator<Item = PositiveRoot>) -> Result<Self> {
        let all = system.positive_roots();
        let mut v: Vec<PositiveRoot> = roots.into_iter().collect();
        v.sort();
        v.dedup();
        if let Some(bad) = v.iter().find(|r| all.binary_search(r).is_err()) {
            return domain(format!(
                "root {bad} is not a positive root of {}{}",
                system.lie_type(),
                system.rank()
            ));
        }
        Ok(RootSet { system, roots: v })
    }

    /// Keep the roots satisfying `pred`.
    pub fn filtered(system: RootSystem, pred: impl Fn(&PositiveRoot) -> bool) -> Self {
        let roots = system.positive_roots().into_iter().filter(|r| pred(r)).collect();
        RootSet { system, roots }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn ambient(&self) -> usize {
        self.system.ambient()
    }

    pub fn contains(&self, r: &PositiveRoot) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    pub fn is_subset_of(&self, other: &RootSet) -> bool {
        self.roots.iter().all(|r| other.contains(r))
    }

    fn all_type_a(&self) -> bool {
        self.roots.iter().all(PositiveRoot::is_type_a)
    }
}

/// Hand-capacity side condition: `a_j + #{roots ending at j} <= m` for all j.
#[derive(Debug, Clone)]
struct Capacity {
    initial: Vec<i64>,
    cap: i64,
    target: Vec<i64>,
}

struct Search<'a> {
    roots: &'a [PositiveRoot],
    ambient: usize,
    system: RootSystem,
    type_a: bool,
    /// `closing[k]` lists coordinates touched by no root at index >= k+1 but
    /// by root k; they must be zero once root k is done.
    closing: Vec<Vec<usize>>,
    untouched: Vec<usize>,
    capacity: Option<Capacity>,
    /// Each root comes in this many distinguishable copies.
    colors: u64,
    memo: HashMap<(usize, Vec<i64>), BigUint>,
}

impl<'a> Search<'a> {
    fn new(set: &'a RootSet, capacity: Option<Capacity>) -> Self {
        let ambient = set.ambient();
        let roots = set.roots();
        let mut last: Vec<Option<usize>> = vec![None; ambient];
        for (k, r) in roots.iter().enumerate() {
            for x in 1..=ambient {
                if r.coord(x) != 0 {
                    last[x - 1] = Some(k);
                }
            }
        }
        let mut closing = vec![Vec::new(); roots.len()];
        let mut untouched = Vec::new();
        for (x, l) in last.iter().enumerate() {
            match l {
                Some(k) => closing[*k].push(x),
                None => untouched.push(x),
            }
        }
        Search {
            roots,
            ambient,
            system: *set.system(),
            type_a: set.all_type_a(),
            closing,
            untouched,
            capacity,
            colors: 1,
            memo: HashMap::new(),
        }
    }

    fn feasible(&self, residual: &[i64]) -> bool {
        if self.type_a {
            let mut p = 0;
            for &x in residual {
                p += x;
                if p < 0 {
                    return false;
                }
            }
            p == 0
        } else {
            self.system.in_cone(residual)
        }
    }

    fn start_ok(&self, residual: &[i64]) -> bool {
        if residual.len() != self.ambient || !self.untouched.iter().all(|&x| residual[x] == 0) {
            return false;
        }
        match &self.capacity {
            Some(c) => c.initial.iter().all(|&a| a <= c.cap),
            None => true,
        }
    }

    /// Largest admissible multiplicity of root `k` against `residual`.
    fn max_mult(&self, k: usize, residual: &[i64]) -> i64 {
        let r = &self.roots[k];
        let mut bound = i64::MAX;
        for x in [r.i, r.j] {
            if x == 0 {
                continue;
            }
            let c = r.coord(x);
            if c > 0 {
                bound = bound.min(residual[x - 1].max(0) / c);
            }
        }
        if let Some(cap) = &self.capacity {
            // root (i,j) raises the ball count landing at j
            if r.j >= 1 {
                let j = r.j - 1;
                let landed = residual[j] - cap.target[j];
                let a = cap.initial.get(j).copied().unwrap_or(0);
                bound = bound.min((cap.cap - a - landed).max(0));
            }
        }
        bound
    }

    fn closed_ok(&self, k: usize, residual: &[i64]) -> bool {
        self.closing[k].iter().all(|&x| residual[x] == 0)
    }

    fn count(&mut self, k: usize, residual: &mut Vec<i64>) -> BigUint {
        if !self.feasible(residual) {
            return BigUint::zero();
        }
        if k == self.roots.len() {
            return if residual.iter().all(|&x| x == 0) {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        if let Some(v) = self.memo.get(&(k, residual.clone())) {
            return v.clone();
        }
        let key = (k, residual.clone());
        let root = self.roots[k];
        let bound = self.max_mult(k, residual);
        let mut total = BigUint::zero();
        let mut used = 0i64;
        loop {
            if self.closed_ok(k, residual) {
                let rest = self.count(k + 1, residual);
                if self.colors == 1 {
                    total += rest;
                } else if !rest.is_zero() {
                    // multisets of size `used` over `colors` copies
                    let ways = BigUint::from(used as u64 + self.colors - 1);
                    total += rest * binomial(&ways, self.colors - 1);
                }
            }
            if used == bound {
                break;
            }
            root.add_to(residual, -1);
            used += 1;
        }
        root.add_to(residual, used);
        self.memo.insert(key, total.clone());
        total
    }

    fn enumerate(
        &mut self,
        k: usize,
        residual: &mut Vec<i64>,
        chosen: &mut Vec<(PositiveRoot, u64)>,
        out: &mut Vec<RootPartition>,
    ) {
        if self.count(k, residual).is_zero() {
            return;
        }
        if k == self.roots.len() {
            out.push(RootPartition { entries: chosen.clone() });
            return;
        }
        let root = self.roots[k];
        let bound = self.max_mult(k, residual);
        let mut used = 0i64;
        loop {
            if self.closed_ok(k, residual) {
                if used > 0 {
                    chosen.push((root, used as u64));
                }
                self.enumerate(k + 1, residual, chosen, out);
                if used > 0 {
                    chosen.pop();
                }
            }
            if used == bound {
                break;
            }
            root.add_to(residual, -1);
            used += 1;
        }
        root.add_to(residual, used);
    }
}

fn binomial(n: &BigUint, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * (n - BigUint::from(t)) / BigUint::from(t + 1);
    }
    acc
}

fn check_dims(target: &Weight, allowed: &RootSet) -> Result<()> {
    if target.ambient() != allowed.ambient() {
        return domain(format!(
            "weight {target} has dimension {}, root set lives in dimension {}",
            target.ambient(),
            allowed.ambient()
        ));
    }
    Ok(())
}

/// All multisets of roots from `allowed` summing to `target`, canonically sorted.
pub fn enumerate_partitions(target: &Weight, allowed: &RootSet) -> Result<Vec<RootPartition>> {
    check_dims(target, allowed)?;
    let mut search = Search::new(allowed, None);
    let mut out = Vec::new();
    let mut residual = target.0.clone();
    if search.start_ok(&residual) {
        search.enumerate(0, &mut residual, &mut Vec::new(), &mut out);
    }
    out.sort();
    Ok(out)
}

/// K_allowed(target).
pub fn count_partitions(target: &Weight, allowed: &RootSet) -> Result<Count> {
    check_dims(target, allowed)?;
    let mut search = Search::new(allowed, None);
    let mut residual = target.0.clone();
    if !search.start_ok(&residual) {
        return Ok(BigUint::zero());
    }
    Ok(search.count(0, &mut residual))
}

/// Counts partitions of many targets over one root set, sharing the memo
/// table between calls.
pub struct PartitionCounter<'a> {
    search: Search<'a>,
}

impl<'a> PartitionCounter<'a> {
    pub fn new(allowed: &'a RootSet) -> Self {
        PartitionCounter { search: Search::new(allowed, None) }
    }

    pub fn count(&mut self, target: &[i64]) -> Count {
        let mut residual = target.to_vec();
        if !self.search.start_ok(&residual) {
            return BigUint::zero();
        }
        self.search.count(0, &mut residual)
    }
}

/// Partitions of `target` where every root of `allowed` comes in `colors`
/// distinguishable copies.
pub fn count_colored_partitions(target: &Weight, allowed: &RootSet, colors: u64) -> Result<Count> {
    check_dims(target, allowed)?;
    if colors == 0 {
        return domain("at least one color is needed");
    }
    let mut search = Search::new(allowed, None);
    search.colors = colors;
    let mut residual = target.0.clone();
    if !search.start_ok(&residual) {
        return Ok(BigUint::zero());
    }
    Ok(search.count(0, &mut residual))
}

/// Kostant's partition function over the full positive system.
pub fn kostant(system: RootSystem, target: &Weight) -> Result<Count> {
    count_partitions(target, &RootSet::full(system))
}

fn capacity_setup(
    target: &Weight,
    allowed: &RootSet,
    initial: &JugglingState,
    capacity: u32,
) -> Result<Capacity> {
    check_dims(target, allowed)?;
    if let Some(bad) = allowed.roots().iter().find(|r| !r.is_type_a()) {
        return domain(format!("capacity restriction needs roots of the form e_i-e_j, got {bad}"));
    }
    if initial.height() > target.ambient() {
        return domain(format!(
            "initial state {initial} is taller than the weight dimension {}",
            target.ambient()
        ));
    }
    Ok(Capacity {
        initial: initial.entries().to_vec(),
        cap: i64::from(capacity),
        target: target.0.clone(),
    })
}

/// Number of partitions `p` of `target` over `allowed` with
/// `a_j + #{e_i - e_j in p} <= capacity` for every `j`.
pub fn count_capacity_restricted(
    target: &Weight,
    allowed: &RootSet,
    initial: &JugglingState,
    capacity: u32,
) -> Result<Count> {
    let cap = capacity_setup(target, allowed, initial, capacity)?;
    let mut search = Search::new(allowed, Some(cap));
    let mut residual = target.0.clone();
    if !search.start_ok(&residual) {
        return Ok(BigUint::zero());
    }
    Ok(search.count(0, &mut residual))
}

pub fn enumerate_capacity_restricted(
    target: &Weight,
    allowed: &RootSet,
    initial: &JugglingState,
    capacity: u32,
) -> Result<Vec<RootPartition>> {
    let cap = capacity_setup(target, allowed, initial, capacity)?;
    let mut search = Search::new(allowed, Some(cap));
    let mut out = Vec::new();
    let mut residual = target.0.clone();
    if search.start_ok(&residual) {
        search.enumerate(0, &mut residual, &mut Vec::new(), &mut out);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{simple_coords, weight_from_simple, LieType};

    fn a(r: usize) -> RootSystem {
        RootSystem::new(LieType::A, r).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Brute force: all multiplicity vectors whose total height fits in the
    /// height of the target.
    fn brute_force(sys: &RootSystem, target: &[i64]) -> u64 {
        fn ht(sys: &RootSystem, w: &Weight) -> i64 {
            simple_coords(sys, w).unwrap().expect("in root lattice").iter().sum()
        }
        fn go(k: usize, budget: i64, acc: &mut Vec<i64>, target: &[i64], roots: &[(PositiveRoot, i64)]) -> u64 {
            if k == roots.len() {
                return (acc.as_slice() == target) as u64;
            }
            let (root, h) = roots[k];
            let mut n = 0;
            let mut c = 0;
            while c * h <= budget {
                root.add_to(acc, c);
                n += go(k + 1, budget - c * h, acc, target, roots);
                root.add_to(acc, -c);
                c += 1;
            }
            n
        }
        let roots: Vec<(PositiveRoot, i64)> = sys
            .positive_roots()
            .into_iter()
            .map(|r| (r, ht(sys, &r.to_weight(sys.ambient()).unwrap())))
            .collect();
        let budget = ht(sys, &Weight(target.to_vec()));
        go(0, budget, &mut vec![0; target.len()], target, &roots)
    }

    #[test]
    fn example_a3() {
        let sys = a(3);
        let mu = weight_from_simple(&sys, &[1, 2, 1]).unwrap();
        assert_eq!(kostant(sys, &mu).unwrap(), big(5));
        let parts = enumerate_partitions(&mu, &RootSet::full(sys)).unwrap();
        assert_eq!(parts.len(), 5);
        for p in &parts {
            assert_eq!(p.weight(4).unwrap(), mu);
        }
    }

    #[test]
    fn zero_weight_has_one_partition() {
        let sys = a(3);
        let z = Weight::zero(4);
        assert_eq!(kostant(sys, &z).unwrap(), big(1));
        assert_eq!(enumerate_partitions(&z, &RootSet::full(sys)).unwrap(), vec![RootPartition::empty()]);
    }

    #[test]
    fn a2_twice_highest_root() {
        let sys = a(2);
        let mu = weight_from_simple(&sys, &[2, 2]).unwrap();
        assert_eq!(kostant(sys, &mu).unwrap(), big(3));
    }

    #[test]
    fn d4_highest_root_brute_force() {
        let sys = RootSystem::new(LieType::D, 4).unwrap();
        let mu = sys.highest_root();
        let bf = brute_force(&sys, &mu.0);
        assert_eq!(bf, 15);
        assert_eq!(kostant(sys, &mu).unwrap(), big(15));
        assert_eq!(enumerate_partitions(&mu, &RootSet::full(sys)).unwrap().len(), 15);
    }

    #[test]
    fn unreachable_is_zero() {
        let sys = a(1);
        assert_eq!(kostant(sys, &Weight(vec![-1, 1])).unwrap(), big(0));
        assert_eq!(kostant(sys, &Weight(vec![1, 0])).unwrap(), big(0));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(count_partitions(&Weight(vec![1, -1]), &RootSet::full(a(2))).is_err());
    }

    #[test]
    fn matches_brute_force_on_bcd() {
        for (ty, r) in [(LieType::B, 2), (LieType::B, 3), (LieType::C, 3), (LieType::D, 4)] {
            let sys = RootSystem::new(ty, r).unwrap();
            for v in [vec![1, 1, 0, 0], vec![2, 0, 0, 0], vec![1, 0, 1, 0], vec![2, 1, 1, 0]] {
                let target: Vec<i64> = v[..sys.ambient()].to_vec();
                let expected = brute_force(&sys, &target);
                let got = count_partitions(&Weight(target.clone()), &RootSet::full(sys)).unwrap();
                assert_eq!(got, big(expected), "{ty}{r} {target:?}");
            }
        }
    }

    #[test]
    fn capacity_example_table_row() {
        // js(<1,1>,<1,1>,3,2): delta = e1+e2-e4-e5 in A_4, throws at times <= 3
        let sys = a(4);
        let lam = RootSet::filtered(sys, |r| r.i <= 3);
        let delta = Weight(vec![1, 1, 0, -1, -1]);
        let a = JugglingState::new(vec![1, 1]);
        assert_eq!(count_capacity_restricted(&delta, &lam, &a, 2).unwrap(), big(11));
        assert_eq!(
            enumerate_capacity_restricted(&delta, &lam, &a, 2).unwrap().len(),
            11
        );
    }

    #[test]
    fn capacity_vacuous_and_zero_target() {
        let sys = a(3);
        let full = RootSet::full(sys);
        let mu = Weight(vec![1, 1, 1, -3]);
        let init = JugglingState::new(vec![1, 1, 1]);
        assert_eq!(
            count_capacity_restricted(&mu, &full, &init, 3).unwrap(),
            count_partitions(&mu, &full).unwrap()
        );
        assert_eq!(
            count_capacity_restricted(&Weight::zero(4), &full, &JugglingState::empty(), 1).unwrap(),
            big(1)
        );
    }

    #[test]
    fn capacity_rejects_non_type_a() {
        let sys = RootSystem::new(LieType::B, 2).unwrap();
        let err = count_capacity_restricted(&Weight(vec![1, 1]), &RootSet::full(sys), &JugglingState::empty(), 2);
        assert!(err.is_err());
    }

    #[test]
    fn enumeration_agrees_with_count_on_grid() {
        let sys = a(3);
        let full = RootSet::full(sys);
        let mut seen = 0;
        for x in -2..=2 {
            for y in -2..=2 {
                for z in -2..=2 {
                    let w = Weight(vec![x, y, z, -(x + y + z)]);
                    let parts = enumerate_partitions(&w, &full).unwrap();
                    assert_eq!(BigUint::from(parts.len()), count_partitions(&w, &full).unwrap());
                    let prefix_ok = x >= 0 && x + y >= 0 && x + y + z >= 0;
                    assert_eq!(!parts.is_empty(), prefix_ok, "{w}");
                    for p in &parts {
                        assert_eq!(&p.weight(4).unwrap(), &w);
                    }
                    assert!(parts.windows(2).all(|p| p[0] < p[1]));
                    seen += parts.len();
                }
            }
        }
        assert!(seen > 100);
    }

    #[test]
    fn two_colors() {
        // partitions of e1 - e3 with doubled roots: {1-3} twice, {1-2,2-3} four ways
        let sys = a(2);
        let w = Weight(vec![1, 0, -1]);
        assert_eq!(count_colored_partitions(&w, &RootSet::full(sys), 2).unwrap(), big(6));
        assert_eq!(count_colored_partitions(&w, &RootSet::full(sys), 1).unwrap(), big(2));
        let w2 = Weight(vec![2, -2, 0]);
        assert_eq!(count_colored_partitions(&w2, &RootSet::full(sys), 2).unwrap(), big(3));
    }

    #[test]
    fn restriction_is_monotone() {
        let sys = a(3);
        let full = RootSet::full(sys);
        let short = RootSet::filtered(sys, |r| r.j - r.i <= 2);
        let w = Weight(vec![2, 1, -1, -2]);
        assert!(count_partitions(&w, &short).unwrap() <= count_partitions(&w, &full).unwrap());
        assert!(short.is_subset_of(&full));
    }
}
