//! Types B, C and D: two-conveyor juggling, the reduction of B/C/D partition
//! functions to sums of type-A ones, and the highest-root bijections into type A.
//!
//! In the two-conveyor model a state is a pair `(s, t)`: `s` is an ordinary
//! (signed) juggling state and `t` holds reflected balls, which are never
//! thrown. At each time the `t_1` reflected balls cancel against `t_1` of the
//! `s_1` standard balls in hand. The rest are thrown up (`e_i - e_{i+j}`),
//! thrown down into the reflected conveyor (`e_i + e_{i+j}`), or dropped:
//! one at a time in type B (`e_i`), two at a time in type C (`2e_i`), never
//! in type D.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::juggling::{js, JugglingState};
use crate::kostant::{count_colored_partitions, kostant, PartitionCounter, RootPartition, RootSet};
use crate::roots::{LieType, PositiveRoot, RootKind, RootSystem, Weight};
use crate::Count;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BcdState {
    standard: JugglingState,
    reflected: JugglingState,
}

impl BcdState {
    pub fn new(standard: JugglingState, reflected: JugglingState) -> Result<Self> {
        if reflected.entries().iter().any(|&x| x < 0) {
            return domain(format!("reflected conveyor {reflected} has negative entries"));
        }
        Ok(BcdState { standard, reflected })
    }

    pub fn empty() -> Self {
        BcdState::default()
    }

    pub fn standard(&self) -> &JugglingState {
        &self.standard
    }

    pub fn reflected(&self) -> &JugglingState {
        &self.reflected
    }
}

impl fmt::Display for BcdState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.standard, self.reflected)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BcdEvent {
    Up { time: usize, height: usize },
    Down { time: usize, height: usize },
    SingleDrop { time: usize },
    DoubleDrop { time: usize },
    Cancel { time: usize },
}

impl BcdEvent {
    /// The positive root recorded by the event; cancellations record none.
    pub fn root(&self) -> Option<PositiveRoot> {
        match *self {
            BcdEvent::Up { time, height } => Some(PositiveRoot::minus(time, time + height)),
            BcdEvent::Down { time, height } => Some(PositiveRoot::plus(time, time + height)),
            BcdEvent::SingleDrop { time } => Some(PositiveRoot::single(time)),
            BcdEvent::DoubleDrop { time } => Some(PositiveRoot::double(time)),
            BcdEvent::Cancel { .. } => None,
        }
    }
}

fn check_bcd(ty: LieType) -> Result<()> {
    if ty == LieType::A {
        return domain("the two-conveyor model is for types B, C and D");
    }
    Ok(())
}

/// Weak compositions of `total` into `parts` parts.
fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn go(left: i64, idx: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(cur.clone());
            return;
        }
        for c in 0..=left {
            cur[idx] = c;
            go(left - c, idx + 1, cur, out);
        }
    }
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(total, 0, &mut vec![0; parts], &mut out);
    out
}

fn shift(s: &JugglingState, len: usize) -> Vec<i64> {
    let mut v = vec![0i64; len.max(s.height().saturating_sub(1))];
    for (k, &x) in s.entries().iter().enumerate().skip(1) {
        v[k - 1] = x;
    }
    v
}

/// Successors of `state` (the state at time `time - 1`) under the throws,
/// drops and cancellations of `time`. Balls land no later than `horizon`.
pub fn bcd_successors(
    ty: LieType,
    state: &BcdState,
    time: usize,
    horizon: usize,
) -> Result<Vec<(BcdState, Vec<BcdEvent>)>> {
    check_bcd(ty)?;
    let s1 = state.standard.get(1);
    let t1 = state.reflected.get(1);
    if s1 < t1 {
        return Ok(Vec::new());
    }
    let free = s1 - t1;
    let room = horizon.saturating_sub(time);
    let std0 = shift(&state.standard, room);
    let refl0 = shift(&state.reflected, room);
    let drops: Vec<i64> = match ty {
        LieType::B => (0..=free).collect(),
        LieType::C => (0..=free).step_by(2).collect(),
        _ => vec![0],
    };
    let mut out = Vec::new();
    for d in drops {
        for comp in compositions(free - d, 2 * room) {
            let mut std = std0.clone();
            let mut refl = refl0.clone();
            let mut events = vec![BcdEvent::Cancel { time }; t1 as usize];
            match ty {
                LieType::B => events.extend(std::iter::repeat_n(BcdEvent::SingleDrop { time }, d as usize)),
                LieType::C => events.extend(std::iter::repeat_n(BcdEvent::DoubleDrop { time }, d as usize / 2)),
                _ => {}
            }
            for h in 1..=room {
                let up = comp[h - 1];
                let down = comp[room + h - 1];
                std[h - 1] += up;
                refl[h - 1] += down;
                events.extend(std::iter::repeat_n(BcdEvent::Up { time, height: h }, up as usize));
                events.extend(std::iter::repeat_n(BcdEvent::Down { time, height: h }, down as usize));
            }
            events.sort();
            let next = BcdState { standard: JugglingState::new(std), reflected: JugglingState::new(refl) };
            out.push((next, events));
        }
    }
    Ok(out)
}

/// A two-conveyor sequence from `(mu, 0)` to `(0, 0)` in `r` steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BcdSequence {
    pub states: Vec<BcdState>,
    pub events: Vec<BcdEvent>,
}

impl BcdSequence {
    pub fn partition(&self) -> RootPartition {
        RootPartition::from_roots(self.events.iter().filter_map(BcdEvent::root))
    }

    /// Standard balls in hand over all times equal the balls removed by
    /// throws, drops and cancellations.
    pub fn balanced(&self) -> bool {
        let in_hand: i64 = self.states.iter().map(|s| s.standard.get(1).max(0)).sum();
        let used: i64 = self
            .events
            .iter()
            .map(|e| match e {
                BcdEvent::DoubleDrop { .. } => 2,
                _ => 1,
            })
            .sum();
        let cancels = self.events.iter().filter(|e| matches!(e, BcdEvent::Cancel { .. })).count() as i64;
        let downs = self.events.iter().filter(|e| matches!(e, BcdEvent::Down { .. })).count() as i64;
        in_hand == used && cancels == downs
    }
}

struct Conveyor {
    ty: LieType,
    start: BcdState,
    steps: usize,
}

impl Conveyor {
    fn new(ty: LieType, mu: &Weight) -> Result<Self> {
        check_bcd(ty)?;
        RootSystem::new(ty, mu.ambient())?;
        Ok(Conveyor {
            ty,
            start: BcdState { standard: JugglingState::new(mu.0.clone()), reflected: JugglingState::empty() },
            steps: mu.ambient(),
        })
    }

    fn next(&self, s: &BcdState, time: usize) -> Vec<(BcdState, Vec<BcdEvent>)> {
        bcd_successors(self.ty, s, time, self.steps).expect("type checked")
    }

    fn count(&self) -> Count {
        let mut layer: BTreeMap<BcdState, Count> = BTreeMap::new();
        layer.insert(self.start.clone(), BigUint::one());
        for time in 1..=self.steps {
            let mut next: BTreeMap<BcdState, Count> = BTreeMap::new();
            for (s, c) in &layer {
                for (t, _) in self.next(s, time) {
                    *next.entry(t).or_insert_with(BigUint::zero) += c;
                }
            }
            layer = next;
        }
        layer.remove(&BcdState::empty()).unwrap_or_else(BigUint::zero)
    }

    fn completions(&self, time: usize, s: &BcdState, memo: &mut HashMap<(usize, BcdState), bool>) -> bool {
        if time == self.steps {
            return *s == BcdState::empty();
        }
        if let Some(&v) = memo.get(&(time, s.clone())) {
            return v;
        }
        let v = self.next(s, time + 1).iter().any(|(t, _)| self.completions(time + 1, t, memo));
        memo.insert((time, s.clone()), v);
        v
    }

    fn enumerate(&self) -> Vec<BcdSequence> {
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        let mut stack = vec![BcdSequence { states: vec![self.start.clone()], events: Vec::new() }];
        while let Some(seq) = stack.pop() {
            let time = seq.states.len() - 1;
            let cur = &seq.states[time];
            if !self.completions(time, cur, &mut memo) {
                continue;
            }
            if time == self.steps {
                let mut done = seq;
                done.events.sort();
                out.push(done);
                continue;
            }
            for (t, ev) in self.next(cur, time + 1) {
                let mut s = seq.clone();
                s.states.push(t);
                s.events.extend(ev);
                stack.push(s);
            }
        }
        out.sort();
        out
    }
}

/// Two-conveyor sequences from `(mu, 0)` to `(0, 0)` in `r = dim(mu)` steps.
/// Their number is `K_type(mu)`.
pub fn bcd_count(ty: LieType, mu: &Weight) -> Result<Count> {
    Ok(Conveyor::new(ty, mu)?.count())
}

pub fn bcd_enumerate(ty: LieType, mu: &Weight) -> Result<Vec<BcdSequence>> {
    Ok(Conveyor::new(ty, mu)?.enumerate())
}

/// Prefix sums `P_1..P_d`.
fn prefix_sums(v: &[i64]) -> Vec<i64> {
    v.iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Largest multiplicity of a non-type-A root `g` keeping every prefix sum of
/// the residual nonnegative. These roots only lower prefix sums, so this is
/// a hard bound.
fn complement_bound(g: &PositiveRoot, residual: &[i64]) -> i64 {
    let p = prefix_sums(residual);
    let d = p.len();
    let mut bound = i64::MAX;
    for k in g.i..=d {
        let drop = match g.kind {
            RootKind::EPlus if k >= g.j => 2,
            RootKind::EDouble => 2,
            _ => 1,
        };
        bound = bound.min(p[k - 1].max(0) / drop);
    }
    bound
}

struct SchmidtBincer<'a> {
    complement: Vec<PositiveRoot>,
    counter: PartitionCounter<'a>,
}

impl SchmidtBincer<'_> {
    fn run(&mut self, k: usize, residual: &mut Vec<i64>) -> Count {
        if prefix_sums(residual).iter().any(|&x| x < 0) {
            return BigUint::zero();
        }
        if k == self.complement.len() {
            return self.counter.count(residual);
        }
        let g = self.complement[k];
        let bound = complement_bound(&g, residual);
        let mut total = BigUint::zero();
        for c in 0..=bound {
            if c > 0 {
                g.add_to(residual, -1);
            }
            total += self.run(k + 1, residual);
        }
        g.add_to(residual, bound);
        total
    }
}

/// `K_type(mu)` as a sum over configurations `c` of the non-type-A positive
/// roots of the type-A count `K_{A}(mu - sum c_g g)`, the type-A roots living
/// in the same `r` coordinates.
pub fn schmidt_bincer_count(ty: LieType, rank: usize, mu: &Weight) -> Result<Count> {
    check_bcd(ty)?;
    let sys = RootSystem::new(ty, rank)?;
    if mu.ambient() != rank {
        return domain(format!("weight {mu} has dimension {}, expected {rank}", mu.ambient()));
    }
    let a_roots = RootSet::full(RootSystem::new(LieType::A, rank - 1)?);
    let complement: Vec<PositiveRoot> = sys.positive_roots().into_iter().filter(|r| !r.is_type_a()).collect();
    let mut sb = SchmidtBincer { complement, counter: PartitionCounter::new(&a_roots) };
    let mut residual = mu.0.clone();
    Ok(sb.run(0, &mut residual))
}

/// Diagnostic: summing `K_A(mu - sum c_b b)` over configurations of the
/// type-A roots themselves. This counts partitions into two copies of each
/// type-A root and ignores the other roots entirely.
pub fn schmidt_bincer_type_a_sum(ty: LieType, rank: usize, mu: &Weight) -> Result<Count> {
    check_bcd(ty)?;
    RootSystem::new(ty, rank)?;
    if mu.ambient() != rank {
        return domain(format!("weight {mu} has dimension {}, expected {rank}", mu.ambient()));
    }
    let a_roots = RootSet::full(RootSystem::new(LieType::A, rank - 1)?);
    count_colored_partitions(mu, &a_roots, 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestRootCounts {
    pub lie_type: LieType,
    pub rank: usize,
    pub oracle: Count,
    pub juggling: Count,
    pub schmidt_bincer: Count,
    pub two_conveyor: Count,
}

impl HighestRootCounts {
    pub fn agree(&self) -> bool {
        self.oracle == self.juggling && self.oracle == self.schmidt_bincer && self.oracle == self.two_conveyor
    }
}

/// Type-A juggling count matching the highest root of a B/C/D system.
pub fn highest_root_juggling(ty: LieType, rank: usize) -> Result<Count> {
    check_bcd(ty)?;
    RootSystem::new(ty, rank)?;
    Ok(match ty {
        LieType::B => js(&[1, 1], &[1, 1], rank),
        LieType::C => js(&[2], &[2], rank),
        LieType::D => js(&[1, 1], &[1, 1], rank - 2) * BigUint::from(5u32),
        LieType::A => unreachable!(),
    })
}

pub fn count_highest_root_bcd(ty: LieType, rank: usize) -> Result<HighestRootCounts> {
    check_bcd(ty)?;
    let sys = RootSystem::new(ty, rank)?;
    let h = sys.highest_root();
    Ok(HighestRootCounts {
        lie_type: ty,
        rank,
        oracle: kostant(sys, &h)?,
        juggling: highest_root_juggling(ty, rank)?,
        schmidt_bincer: schmidt_bincer_count(ty, rank, &h)?,
        two_conveyor: bcd_count(ty, &h)?,
    })
}

fn check_partition_of(p: &RootPartition, set: &RootSet, target: &Weight, what: &str) -> Result<()> {
    if let Some((bad, _)) = p.entries().iter().find(|(r, _)| !set.contains(r)) {
        return domain(format!("root {bad} is not allowed in a partition of {what}"));
    }
    let w = p.weight(target.ambient())?;
    if w != *target {
        return domain(format!("{p} sums to {w}, not to {what} = {target}"));
    }
    Ok(())
}

fn b_system(rank: usize) -> Result<(RootSystem, RootSet, Weight, Weight)> {
    let b = RootSystem::new(LieType::B, rank)?;
    let a = RootSystem::new(LieType::A, rank + 1)?;
    let lam = RootSet::filtered(a, |r| *r != PositiveRoot::minus(rank + 1, rank + 2));
    let mut target = vec![0i64; rank + 2];
    target[0] = 1;
    target[1] = 1;
    target[rank] = -1;
    target[rank + 1] = -1;
    Ok((b, lam, b.highest_root(), Weight(target)))
}

/// Sends a partition of the highest root of `B_r` to a partition of
/// `e_1 + e_2 - e_{r+1} - e_{r+2}` avoiding `e_{r+1} - e_{r+2}`.
///
/// `e_i + e_j` becomes `e_i - e_{r+2}` and `e_j - e_{r+1}`. Two short roots
/// `e_x, e_y` with `x <= y` become `e_x - e_{r+1}` and `e_y - e_{r+2}`.
pub fn b_to_a_map(rank: usize, p: &RootPartition) -> Result<RootPartition> {
    let (b, _, h, _) = b_system(rank)?;
    check_partition_of(p, &RootSet::full(b), &h, "the highest root")?;
    let (top, mid) = (rank + 2, rank + 1);
    let mut out: Vec<PositiveRoot> = p.roots().filter(PositiveRoot::is_type_a).collect();
    let plus: Vec<PositiveRoot> = p.roots().filter(|r| r.kind == RootKind::EPlus).collect();
    let singles: Vec<usize> = p.roots().filter(|r| r.kind == RootKind::ESingle).map(|r| r.i).collect();
    match (plus.as_slice(), singles.as_slice()) {
        ([g], []) => {
            out.push(PositiveRoot::minus(g.i, top));
            out.push(PositiveRoot::minus(g.j, mid));
        }
        ([], [x, y]) => {
            out.push(PositiveRoot::minus(*x.min(y), mid));
            out.push(PositiveRoot::minus(*x.max(y), top));
        }
        _ => return domain(format!("{p} does not have the shape of a highest-root partition")),
    }
    Ok(RootPartition::from_roots(out))
}

/// Inverse of [`b_to_a_map`].
pub fn a_to_b_map(rank: usize, q: &RootPartition) -> Result<RootPartition> {
    let (_, lam, _, target) = b_system(rank)?;
    check_partition_of(q, &lam, &target, "e1+e2-e(r+1)-e(r+2)")?;
    let (top, mid) = (rank + 2, rank + 1);
    let mut out: Vec<PositiveRoot> = q.roots().filter(|r| r.j < mid).collect();
    let to_top: Vec<usize> = q.roots().filter(|r| r.j == top).map(|r| r.i).collect();
    let to_mid: Vec<usize> = q.roots().filter(|r| r.j == mid).map(|r| r.i).collect();
    let (i, j) = match (to_top.as_slice(), to_mid.as_slice()) {
        ([i], [j]) => (*i, *j),
        _ => return domain(format!("{q} does not end in one root at each of the last two coordinates")),
    };
    if i < j {
        out.push(PositiveRoot::plus(i, j));
    } else {
        out.push(PositiveRoot::single(i));
        out.push(PositiveRoot::single(j));
    }
    Ok(RootPartition::from_roots(out))
}

/// Sends a partition of the highest root `2e_1` of `C_r` to a partition of
/// `2e_1 - 2e_{r+1}` in `A_r`: the unique root `e_i + e_j` (or `2e_i`) becomes
/// `e_i - e_{r+1}` and `e_j - e_{r+1}` (or two copies of `e_i - e_{r+1}`).
pub fn c_to_a_map(rank: usize, p: &RootPartition) -> Result<RootPartition> {
    let c = RootSystem::new(LieType::C, rank)?;
    check_partition_of(p, &RootSet::full(c), &c.highest_root(), "the highest root")?;
    let end = rank + 1;
    let mut out: Vec<PositiveRoot> = p.roots().filter(PositiveRoot::is_type_a).collect();
    let rest: Vec<PositiveRoot> = p.roots().filter(|r| !r.is_type_a()).collect();
    match rest.as_slice() {
        [g] if g.kind == RootKind::EPlus => {
            out.push(PositiveRoot::minus(g.i, end));
            out.push(PositiveRoot::minus(g.j, end));
        }
        [g] if g.kind == RootKind::EDouble => {
            out.push(PositiveRoot::minus(g.i, end));
            out.push(PositiveRoot::minus(g.i, end));
        }
        _ => return domain(format!("{p} does not have the shape of a highest-root partition")),
    }
    Ok(RootPartition::from_roots(out))
}

/// Inverse of [`c_to_a_map`].
pub fn a_to_c_map(rank: usize, q: &RootPartition) -> Result<RootPartition> {
    let a = RootSystem::new(LieType::A, rank)?;
    RootSystem::new(LieType::C, rank)?;
    let target = a.highest_root().scaled(2);
    check_partition_of(q, &RootSet::full(a), &target, "twice the highest root")?;
    let end = rank + 1;
    let mut out: Vec<PositiveRoot> = q.roots().filter(|r| r.j < end).collect();
    let ends: Vec<usize> = q.roots().filter(|r| r.j == end).map(|r| r.i).collect();
    match ends.as_slice() {
        [x, y] if x == y => out.push(PositiveRoot::double(*x)),
        [x, y] => out.push(PositiveRoot::plus(*x.min(y), *x.max(y))),
        _ => return domain(format!("{q} does not end in two roots at the last coordinate")),
    }
    Ok(RootPartition::from_roots(out))
}

/// Target weight and root set of [`b_to_a_map`].
pub fn b_to_a_codomain(rank: usize) -> Result<(Weight, RootSet)> {
    let (_, lam, _, target) = b_system(rank)?;
    Ok((target, lam))
}

/// Target weight and root set of [`c_to_a_map`].
pub fn c_to_a_codomain(rank: usize) -> Result<(Weight, RootSet)> {
    let a = RootSystem::new(LieType::A, rank)?;
    RootSystem::new(LieType::C, rank)?;
    Ok((a.highest_root().scaled(2), RootSet::full(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::enumerate_partitions;

    fn st(v: &[i64]) -> JugglingState {
        JugglingState::new(v.to_vec())
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn successor_examples() {
        let s = BcdState::new(st(&[1]), st(&[1])).unwrap();
        let next = bcd_successors(LieType::D, &s, 1, 1).unwrap();
        assert_eq!(next, vec![(BcdState::empty(), vec![BcdEvent::Cancel { time: 1 }])]);

        let c = bcd_successors(LieType::C, &BcdState::new(st(&[2]), st(&[])).unwrap(), 1, 3).unwrap();
        assert!(c.iter().any(|(s, e)| *s == BcdState::empty() && e == &vec![BcdEvent::DoubleDrop { time: 1 }]));
        let b = bcd_successors(LieType::B, &BcdState::new(st(&[1]), st(&[])).unwrap(), 1, 3).unwrap();
        assert!(b.iter().any(|(s, e)| *s == BcdState::empty() && e == &vec![BcdEvent::SingleDrop { time: 1 }]));
        let d = bcd_successors(LieType::D, &BcdState::new(st(&[1]), st(&[])).unwrap(), 1, 3).unwrap();
        assert!(d.iter().all(|(s, _)| *s != BcdState::empty()));
        assert!(bcd_successors(LieType::A, &BcdState::empty(), 1, 3).is_err());
        assert!(BcdState::new(st(&[1]), st(&[-1])).is_err());
    }

    #[test]
    fn reflected_excess_is_dead() {
        let s = BcdState::new(st(&[0, 1]), st(&[1])).unwrap();
        assert!(bcd_successors(LieType::B, &s, 1, 4).unwrap().is_empty());
    }

    #[test]
    fn anchors() {
        for (ty, r, v) in [(LieType::B, 2, 3u64), (LieType::C, 3, 10), (LieType::D, 4, 15)] {
            let c = count_highest_root_bcd(ty, r).unwrap();
            assert!(c.agree(), "{c:?}");
            assert_eq!(c.oracle, big(v));
        }
    }

    #[test]
    fn schmidt_bincer_examples() {
        assert_eq!(schmidt_bincer_count(LieType::B, 2, &Weight(vec![1, 1])).unwrap(), big(3));
        assert_eq!(schmidt_bincer_count(LieType::C, 3, &Weight(vec![2, 0, 0])).unwrap(), big(10));
        assert_eq!(schmidt_bincer_count(LieType::D, 4, &Weight(vec![0; 4])).unwrap(), big(1));
        assert!(schmidt_bincer_count(LieType::A, 2, &Weight(vec![1, -1])).is_err());
    }

    #[test]
    fn conveyor_sequences_are_partitions() {
        for (ty, r) in [(LieType::B, 3), (LieType::C, 3), (LieType::D, 4)] {
            let sys = RootSystem::new(ty, r).unwrap();
            let h = sys.highest_root();
            let seqs = bcd_enumerate(ty, &h).unwrap();
            let mut parts: Vec<RootPartition> = seqs.iter().map(BcdSequence::partition).collect();
            assert!(seqs.iter().all(BcdSequence::balanced));
            parts.sort();
            assert_eq!(parts, enumerate_partitions(&h, &RootSet::full(sys)).unwrap());
        }
    }

    #[test]
    fn b_maps() {
        let p = RootPartition::from_roots([PositiveRoot::plus(1, 2)]);
        let q = b_to_a_map(2, &p).unwrap();
        assert_eq!(q, RootPartition::from_roots([PositiveRoot::minus(1, 4), PositiveRoot::minus(2, 3)]));
        assert_eq!(a_to_b_map(2, &q).unwrap(), p);
        let p = RootPartition::from_roots([PositiveRoot::single(1), PositiveRoot::single(2)]);
        let q = b_to_a_map(2, &p).unwrap();
        assert_eq!(q, RootPartition::from_roots([PositiveRoot::minus(1, 3), PositiveRoot::minus(2, 4)]));
        assert_eq!(a_to_b_map(2, &q).unwrap(), p);
        assert!(b_to_a_map(2, &RootPartition::from_roots([PositiveRoot::single(1)])).is_err());
    }

    #[test]
    fn c_maps() {
        let p = RootPartition::from_roots([PositiveRoot::double(1)]);
        let q = c_to_a_map(3, &p).unwrap();
        assert_eq!(q, RootPartition::from_roots([PositiveRoot::minus(1, 4), PositiveRoot::minus(1, 4)]));
        assert_eq!(a_to_c_map(3, &q).unwrap(), p);
        let p = RootPartition::from_roots([PositiveRoot::minus(1, 3), PositiveRoot::plus(2, 3), PositiveRoot::minus(2, 3), PositiveRoot::plus(1, 3)]);
        assert!(c_to_a_map(3, &p).is_err());
    }

    #[test]
    fn literal_reading_differs() {
        let h = Weight(vec![1, 1]);
        assert_eq!(schmidt_bincer_type_a_sum(LieType::B, 2, &h).unwrap(), big(0));
    }
}
