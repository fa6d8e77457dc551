//! Magic multiplex juggling in type A.
//!
//! A state at time `i` stores at height `k` the signed number of balls that
//! will reach the hand at time `i + k`. Negative entries are magic balls.
//! From `s` at time `i-1`, every ball at height 1 is thrown at time `i`: a
//! throw to height `j` lands at time `i + j`. A negative height-1 entry has no
//! successor.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::roots::{PositiveRoot, Weight};
use crate::{parse_ints, Count};

/// Signed ball counts per height, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct JugglingState(Vec<i64>);

impl JugglingState {
    pub fn new(mut heights: Vec<i64>) -> Self {
        while heights.last() == Some(&0) {
            heights.pop();
        }
        JugglingState(heights)
    }

    pub fn empty() -> Self {
        JugglingState(Vec::new())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Entry at 1-based height `k`, zero past the end.
    pub fn get(&self, k: usize) -> i64 {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// Net ball count (magic balls count negatively).
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn positive_total(&self) -> i64 {
        self.0.iter().filter(|&&x| x > 0).sum()
    }

    pub fn max_entry(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }
}

impl fmt::Display for JugglingState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl FromStr for JugglingState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(JugglingState::new(parse_ints(s)?))
    }
}

/// Throw `T_{time,height}`: at `time`, a ball is sent to `height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Throw {
    pub time: usize,
    pub height: usize,
}

impl Throw {
    pub fn new(time: usize, height: usize) -> Self {
        Throw { time, height }
    }

    /// Time at which the ball lands.
    pub fn landing(&self) -> usize {
        self.time + self.height
    }

    pub fn root(&self) -> PositiveRoot {
        PositiveRoot::minus(self.time, self.landing())
    }
}

impl fmt::Display for Throw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.time, self.height)
    }
}

impl FromStr for Throw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad throw `{s}`, expected time:height"));
        let (a, b) = s.trim().split_once(':').ok_or_else(bad)?;
        let time: usize = a.trim().parse().map_err(|_| bad())?;
        let height: usize = b.trim().parse().map_err(|_| bad())?;
        if time == 0 || height == 0 {
            return Err(bad());
        }
        Ok(Throw { time, height })
    }
}

/// Which throws are permitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ThrowSet {
    /// Every throw landing inside the horizon.
    #[default]
    All,
    /// Listed heights at every time.
    Heights(BTreeSet<usize>),
    /// Exactly the listed throws.
    Explicit(BTreeSet<Throw>),
}

impl ThrowSet {
    pub fn heights<I: IntoIterator<Item = usize>>(h: I) -> Self {
        ThrowSet::Heights(h.into_iter().collect())
    }

    pub fn explicit<I: IntoIterator<Item = Throw>>(t: I) -> Self {
        ThrowSet::Explicit(t.into_iter().collect())
    }

    pub fn allows(&self, time: usize, height: usize) -> bool {
        match self {
            ThrowSet::All => true,
            ThrowSet::Heights(h) => h.contains(&height),
            ThrowSet::Explicit(t) => t.contains(&Throw { time, height }),
        }
    }

    /// `a ⊆ b` on the throws of `T_r` (times `1..=r`, landing by `r+1`).
    pub fn is_subset_within(&self, other: &ThrowSet, r: usize) -> bool {
        (1..=r).all(|i| (1..=r + 1 - i).all(|j| !self.allows(i, j) || other.allows(i, j)))
    }
}

/// A sequence of states `s_0, ..., s_n` together with the throws it performs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JugglingSequence {
    states: Vec<JugglingState>,
    throws: Vec<Throw>,
}

impl JugglingSequence {
    /// Recovers the throws from consecutive states and checks every transition.
    pub fn from_states(states: Vec<JugglingState>) -> Result<Self> {
        if states.is_empty() {
            return domain("a juggling sequence needs at least one state");
        }
        let mut throws = Vec::new();
        for (idx, w) in states.windows(2).enumerate() {
            let time = idx + 1;
            let (prev, next) = (&w[0], &w[1]);
            let s1 = prev.get(1);
            if s1 < 0 {
                return domain(format!("state {prev} at time {idx} has a magic ball at height 1"));
            }
            let h = next.height().max(prev.height());
            let mut thrown = 0;
            for k in 1..=h {
                let b = next.get(k) - prev.get(k + 1);
                if b < 0 {
                    return domain(format!("{prev} -> {next} removes balls at height {k}"));
                }
                thrown += b;
                throws.extend(std::iter::repeat_n(Throw::new(time, k), b as usize));
            }
            if thrown != s1 {
                return domain(format!("{prev} -> {next} throws {thrown} balls, expected {s1}"));
            }
        }
        Ok(JugglingSequence { states, throws })
    }

    pub fn states(&self) -> &[JugglingState] {
        &self.states
    }

    /// Sorted multiset of throws.
    pub fn throws(&self) -> &[Throw] {
        &self.throws
    }

    /// Number of transitions.
    pub fn len(&self) -> usize {
        self.states.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn initial(&self) -> &JugglingState {
        &self.states[0]
    }

    pub fn terminal(&self) -> &JugglingState {
        self.states.last().expect("nonempty")
    }

    pub fn max_positive_entry(&self) -> i64 {
        self.states.iter().map(JugglingState::max_entry).max().unwrap_or(0)
    }
}

impl fmt::Display for JugglingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.states.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Sum of the roots of all throws, in dimension `ambient`.
pub fn net_change_vector(seq: &JugglingSequence, ambient: usize) -> Result<Weight> {
    let mut v = vec![0i64; ambient];
    for t in seq.throws() {
        if t.landing() > ambient {
            return domain(format!("throw {t} lands past dimension {ambient}"));
        }
        t.root().add_to(&mut v, 1);
    }
    Ok(Weight(v))
}

/// `a_1 e_1 + ... + a_s e_s - (b_1 e_{n+1} + ... + b_t e_{n+t})` in dimension
/// `max(s, n+t)`.
pub fn delta(a: &JugglingState, b: &JugglingState, n: usize) -> Weight {
    let dim = a.height().max(n + b.height());
    let mut v = a.padded(dim);
    for (k, &x) in b.entries().iter().enumerate() {
        v[n + k] -= x;
    }
    Weight(v)
}

/// Upper bound for the post-throw entry at height `k` (1-based).
type Bound<'a> = &'a dyn Fn(usize) -> Option<i64>;

fn distribute(
    shifted: &[i64],
    heights: &[usize],
    balls: i64,
    bound: Bound<'_>,
    time: usize,
    out: &mut Vec<(JugglingState, Vec<Throw>)>,
) {
    fn go(
        idx: usize,
        left: i64,
        cur: &mut Vec<i64>,
        heights: &[usize],
        bound: Bound<'_>,
        time: usize,
        thrown: &mut Vec<Throw>,
        out: &mut Vec<(JugglingState, Vec<Throw>)>,
    ) {
        if idx == heights.len() {
            if left == 0 {
                out.push((JugglingState::new(cur.clone()), thrown.clone()));
            }
            return;
        }
        let h = heights[idx];
        let base = cur[h - 1];
        let mut most = left;
        if idx + 1 == heights.len() {
            // the last height takes the remainder
            if bound(h).is_some_and(|ub| base + left > ub) {
                return;
            }
            cur[h - 1] = base + left;
            let before = thrown.len();
            thrown.extend(std::iter::repeat_n(Throw::new(time, h), left as usize));
            go(idx + 1, 0, cur, heights, bound, time, thrown, out);
            thrown.truncate(before);
            cur[h - 1] = base;
            return;
        }
        if let Some(ub) = bound(h) {
            most = most.min(ub - base);
        }
        let before = thrown.len();
        for c in 0..=most {
            cur[h - 1] = base + c;
            if c > 0 {
                thrown.push(Throw::new(time, h));
            }
            go(idx + 1, left - c, cur, heights, bound, time, thrown, out);
        }
        thrown.truncate(before);
        cur[h - 1] = base;
    }
    let mut cur = shifted.to_vec();
    let mut thrown = Vec::new();
    if heights.is_empty() {
        if balls == 0 {
            out.push((JugglingState::new(cur), thrown));
        }
        return;
    }
    go(0, balls, &mut cur, heights, bound, time, &mut thrown, out);
}

fn successors_with(
    state: &JugglingState,
    time: usize,
    allowed: &ThrowSet,
    horizon: usize,
    bound: Bound<'_>,
) -> Vec<(JugglingState, Vec<Throw>)> {
    let s1 = state.get(1);
    if s1 < 0 {
        return Vec::new();
    }
    let room = horizon.saturating_sub(time);
    let len = room.max(state.height().saturating_sub(1));
    let mut shifted = vec![0i64; len];
    for (k, x) in state.entries().iter().enumerate().skip(1) {
        shifted[k - 1] = *x;
    }
    // untouched heights must already respect the bound
    for (k, &x) in shifted.iter().enumerate() {
        if let Some(ub) = bound(k + 1) {
            if x > ub {
                return Vec::new();
            }
        }
    }
    let heights: Vec<usize> = (1..=room).filter(|&j| allowed.allows(time, j)).collect();
    let mut out = Vec::new();
    distribute(&shifted, &heights, s1, bound, time, &mut out);
    out
}

/// Every state reachable from `state` (the state at time `time - 1`) by the
/// throws at `time`, together with those throws. Balls may land at times up to
/// `horizon`; positive entries of the result never exceed `capacity`.
pub fn successors(
    state: &JugglingState,
    time: usize,
    capacity: Option<u32>,
    allowed: &ThrowSet,
    horizon: usize,
) -> Vec<(JugglingState, Vec<Throw>)> {
    let cap = capacity.map(i64::from);
    let bound = move |_k: usize| cap;
    successors_with(state, time, allowed, horizon, &bound)
}

/// The set `JS(a, b, n, m)` restricted to a throw set.
#[derive(Debug, Clone)]
pub struct JugglingProblem {
    pub initial: JugglingState,
    pub terminal: JugglingState,
    pub length: usize,
    pub capacity: Option<u32>,
    pub throws: ThrowSet,
}

impl JugglingProblem {
    pub fn new(initial: JugglingState, terminal: JugglingState, length: usize) -> Self {
        JugglingProblem { initial, terminal, length, capacity: None, throws: ThrowSet::All }
    }

    pub fn with_capacity(mut self, capacity: Option<u32>) -> Self {
        self.capacity = capacity;
        self
    }

    pub fn with_throws(mut self, throws: ThrowSet) -> Self {
        self.throws = throws;
        self
    }

    /// Last time at which a ball may land.
    pub fn horizon(&self) -> usize {
        self.initial.height().max(self.length + self.terminal.height())
    }

    /// Bound on the entry landing at time `c`. Entries only grow until they
    /// are thrown, so anything landing after `n` is capped by the terminal state.
    fn coordinate_bound(&self, c: usize) -> Option<i64> {
        let cap = self.capacity.map(i64::from);
        let n = self.length;
        if c > n {
            let b = self.terminal.get(c - n);
            Some(match cap {
                Some(m) => b.min(m),
                None => b,
            })
        } else {
            cap
        }
    }

    fn initial_ok(&self) -> bool {
        if self.initial.total() != self.terminal.total() {
            return false;
        }
        if let Some(m) = self.capacity {
            let m = i64::from(m);
            if self.initial.max_entry() > m || self.terminal.max_entry() > m {
                return false;
            }
        }
        let n = self.length;
        (n + 1..=self.initial.height()).all(|c| self.initial.get(c) <= self.terminal.get(c - n))
    }

    /// Successors of the state at time `time - 1`, pruned against the terminal state.
    pub fn successors(&self, state: &JugglingState, time: usize) -> Vec<(JugglingState, Vec<Throw>)> {
        let bound = |k: usize| self.coordinate_bound(time + k);
        successors_with(state, time, &self.throws, self.horizon(), &bound)
    }

    fn step_layer(&self, layer: BTreeMap<JugglingState, Count>, time: usize) -> BTreeMap<JugglingState, Count> {
        let items: Vec<(JugglingState, Count)> = layer.into_iter().collect();
        let expand = |(s, c): &(JugglingState, Count)| -> Vec<(JugglingState, Count)> {
            self.successors(s, time).into_iter().map(|(t, _)| (t, c.clone())).collect()
        };
        let parts: Vec<Vec<(JugglingState, Count)>> = if items.len() >= 64 {
            items.par_iter().map(expand).collect()
        } else {
            items.iter().map(expand).collect()
        };
        let mut next: BTreeMap<JugglingState, Count> = BTreeMap::new();
        for (s, c) in parts.into_iter().flatten() {
            *next.entry(s).or_insert_with(BigUint::zero) += c;
        }
        next
    }

    /// `js(a, b, n, m)` by forward dynamic programming over time layers.
    pub fn count(&self) -> Count {
        if !self.initial_ok() {
            return BigUint::zero();
        }
        let mut layer = BTreeMap::new();
        layer.insert(self.initial.clone(), BigUint::one());
        for time in 1..=self.length {
            layer = self.step_layer(layer, time);
            if layer.is_empty() {
                return BigUint::zero();
            }
        }
        layer.remove(&self.terminal).unwrap_or_else(BigUint::zero)
    }

    fn completions(
        &self,
        time: usize,
        state: &JugglingState,
        memo: &mut HashMap<(usize, JugglingState), Count>,
    ) -> Count {
        if time == self.length {
            return if *state == self.terminal { BigUint::one() } else { BigUint::zero() };
        }
        if let Some(c) = memo.get(&(time, state.clone())) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        for (next, _) in self.successors(state, time + 1) {
            total += self.completions(time + 1, &next, memo);
        }
        memo.insert((time, state.clone()), total.clone());
        total
    }

    /// Number of sequences, computed backwards by memoized recursion.
    pub fn count_backward(&self) -> Count {
        if !self.initial_ok() {
            return BigUint::zero();
        }
        self.completions(0, &self.initial, &mut HashMap::new())
    }

    /// All sequences, sorted by their state lists.
    pub fn enumerate(&self) -> Vec<JugglingSequence> {
        let mut out = Vec::new();
        if !self.initial_ok() {
            return out;
        }
        let mut memo = HashMap::new();
        let mut path = vec![self.initial.clone()];
        let mut throws = Vec::new();
        self.walk(&mut path, &mut throws, &mut memo, &mut out);
        out.sort();
        out
    }

    fn walk(
        &self,
        path: &mut Vec<JugglingState>,
        throws: &mut Vec<Throw>,
        memo: &mut HashMap<(usize, JugglingState), Count>,
        out: &mut Vec<JugglingSequence>,
    ) {
        let time = path.len() - 1;
        let state = path[time].clone();
        if self.completions(time, &state, memo).is_zero() {
            return;
        }
        if time == self.length {
            let mut t = throws.clone();
            t.sort();
            out.push(JugglingSequence { states: path.clone(), throws: t });
            return;
        }
        for (next, thrown) in self.successors(&state, time + 1) {
            path.push(next);
            let before = throws.len();
            throws.extend(thrown);
            self.walk(path, throws, memo, out);
            throws.truncate(before);
            path.pop();
        }
    }
}

/// `js(a, b, n, m)` restricted to `allowed`.
pub fn count_sequences(
    a: &JugglingState,
    b: &JugglingState,
    n: usize,
    capacity: Option<u32>,
    allowed: &ThrowSet,
) -> Count {
    JugglingProblem::new(a.clone(), b.clone(), n)
        .with_capacity(capacity)
        .with_throws(allowed.clone())
        .count()
}

/// Unrestricted, capacity-free `js(a, b, n)`.
pub fn js(a: &[i64], b: &[i64], n: usize) -> Count {
    count_sequences(
        &JugglingState::new(a.to_vec()),
        &JugglingState::new(b.to_vec()),
        n,
        None,
        &ThrowSet::All,
    )
}

/// `JS(a, b, n, m)` restricted to `allowed`.
pub fn enumerate_sequences(
    a: &JugglingState,
    b: &JugglingState,
    n: usize,
    capacity: Option<u32>,
    allowed: &ThrowSet,
) -> Vec<JugglingSequence> {
    JugglingProblem::new(a.clone(), b.clone(), n)
        .with_capacity(capacity)
        .with_throws(allowed.clone())
        .enumerate()
}

/// Labeled state: at each height, one signed count per label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledState {
    labels: usize,
    heights: Vec<Vec<i64>>,
}

impl LabeledState {
    pub fn new(labels: usize, mut heights: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(bad) = heights.iter().find(|u| u.len() != labels) {
            return domain(format!("height tuple {bad:?} does not have {labels} labels"));
        }
        while heights.last().is_some_and(|u| u.iter().all(|&x| x == 0)) {
            heights.pop();
        }
        Ok(LabeledState { labels, heights })
    }

    /// Stacks per-label states into one labeled state.
    pub fn from_labels(states: &[JugglingState]) -> Self {
        let h = states.iter().map(JugglingState::height).max().unwrap_or(0);
        let heights = (1..=h).map(|k| states.iter().map(|s| s.get(k)).collect()).collect();
        LabeledState { labels: states.len(), heights }
    }

    pub fn labels(&self) -> usize {
        self.labels
    }

    pub fn height(&self) -> usize {
        self.heights.len()
    }

    pub fn tuples(&self) -> &[Vec<i64>] {
        &self.heights
    }

    /// The juggling state formed by the balls of one label (0-based).
    pub fn label(&self, j: usize) -> JugglingState {
        JugglingState::new(self.heights.iter().map(|u| u[j]).collect())
    }

    pub fn decompose(&self) -> Vec<JugglingState> {
        (0..self.labels).map(|j| self.label(j)).collect()
    }
}

impl fmt::Display for LabeledState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .heights
            .iter()
            .map(|u| format!("[{}]", u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// `ljs(a, b, n)` as the product of the per-label counts. Hand capacities
/// couple the labels, so passing one is rejected.
pub fn labeled_count(a: &LabeledState, b: &LabeledState, n: usize, capacity: Option<u32>) -> Result<Count> {
    if capacity.is_some() {
        return domain("labeled counts factor over labels only without a hand capacity");
    }
    if a.labels() != b.labels() {
        return domain(format!("label counts differ: {} vs {}", a.labels(), b.labels()));
    }
    let mut total = BigUint::one();
    for j in 0..a.labels() {
        total *= js(a.label(j).entries(), b.label(j).entries(), n);
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

/// Every labeled sequence from `a` to `b` in `n` steps, by brute-force search
/// over the joint labeled states (no factorization, no pruning beyond the
/// landing horizon).
pub fn enumerate_labeled_sequences(a: &LabeledState, b: &LabeledState, n: usize) -> Result<Vec<Vec<LabeledState>>> {
    if a.labels() != b.labels() {
        return domain(format!("label counts differ: {} vs {}", a.labels(), b.labels()));
    }
    let horizon = a.height().max(n + b.height());

    fn labeled_successors(s: &LabeledState, time: usize, horizon: usize) -> Vec<LabeledState> {
        let l = s.labels;
        let room = horizon.saturating_sub(time);
        let len = room.max(s.height().saturating_sub(1));
        let mut shifted = vec![vec![0i64; l]; len];
        for (k, u) in s.heights.iter().enumerate().skip(1) {
            shifted[k - 1] = u.clone();
        }
        let first = s.heights.first().cloned().unwrap_or_else(|| vec![0; l]);
        if first.iter().any(|&x| x < 0) {
            return Vec::new();
        }
        let mut results = vec![shifted];
        for (label, &balls) in first.iter().enumerate() {
            let mut next = Vec::new();
            for base in &results {
                let mut comps = Vec::new();
                compositions(balls, room, &mut vec![0; room], 0, &mut comps);
                for c in comps {
                    let mut t = base.clone();
                    for (k, &x) in c.iter().enumerate() {
                        t[k][label] += x;
                    }
                    next.push(t);
                }
            }
            results = next;
        }
        results
            .into_iter()
            .map(|h| LabeledState::new(l, h).expect("tuple lengths"))
            .collect()
    }

    fn compositions(left: i64, parts: usize, cur: &mut Vec<i64>, idx: usize, out: &mut Vec<Vec<i64>>) {
        if idx == parts {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..=left {
            cur[idx] = c;
            compositions(left - c, parts, cur, idx + 1, out);
        }
        cur[idx] = 0;
    }

    let mut out = Vec::new();
    let mut stack = vec![vec![a.clone()]];
    while let Some(path) = stack.pop() {
        let time = path.len() - 1;
        if time == n {
            if path[time] == *b {
                out.push(path);
            }
            continue;
        }
        for next in labeled_successors(&path[time], time + 1, horizon) {
            let mut p = path.clone();
            p.push(next);
            stack.push(p);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(v: &[i64]) -> JugglingState {
        JugglingState::new(v.to_vec())
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn normalization() {
        assert_eq!(st(&[1, 0, 0]), st(&[1]));
        assert_eq!(st(&[0, 0]).height(), 0);
        assert_eq!("<1,0,-1>".parse::<JugglingState>().unwrap(), st(&[1, 0, -1]));
        assert_eq!("".parse::<JugglingState>().unwrap(), JugglingState::empty());
        assert_eq!(st(&[2, -1]).to_string(), "<2,-1>");
    }

    #[test]
    fn successors_in_context() {
        let p = JugglingProblem::new(st(&[1, 1]), st(&[1, 1]), 3).with_capacity(Some(2));
        let next: Vec<JugglingState> = p.successors(&st(&[1, 1]), 1).into_iter().map(|x| x.0).collect();
        for want in [st(&[2]), st(&[1, 1]), st(&[1, 0, 1])] {
            assert!(next.contains(&want), "{want}");
        }
    }

    #[test]
    fn pure_descent() {
        let next = successors(&st(&[0, 1, 1]), 1, None, &ThrowSet::All, 10);
        assert_eq!(next, vec![(st(&[1, 1]), vec![])]);
    }

    #[test]
    fn magic_cancellation() {
        let next = successors(&st(&[3, 0, -1]), 2, None, &ThrowSet::All, 5);
        let hit = next.iter().find(|(s, _)| *s == st(&[1, 0, 1])).expect("present");
        assert_eq!(hit.1, vec![Throw::new(2, 1), Throw::new(2, 2), Throw::new(2, 3)]);
        assert!(successors(&st(&[-1, 1]), 1, None, &ThrowSet::All, 5).is_empty());
    }

    #[test]
    fn small_counts() {
        let p = |a: &[i64], b: &[i64], n, m| count_sequences(&st(a), &st(b), n, m, &ThrowSet::All);
        assert_eq!(p(&[1, 1], &[1, 1], 3, Some(2)), big(11));
        assert_eq!(p(&[2], &[2], 2, Some(2)), big(3));
        assert_eq!(p(&[1], &[2], 5, None), big(0));
        assert_eq!(p(&[1], &[1], 3, None), big(4));
        assert_eq!(p(&[], &[], 4, None), big(1));
    }

    #[test]
    fn restricted_example() {
        let a = st(&[1, 1, 0, -1]);
        let b = st(&[1]);
        let seqs = enumerate_sequences(&a, &b, 4, None, &ThrowSet::heights([1, 3]));
        assert_eq!(seqs.len(), 4);
        assert!(seqs.iter().all(|s| s.throws().iter().all(|t| t.height == 1 || t.height == 3)));
    }

    #[test]
    fn sample_sequences() {
        let s1 = JugglingSequence::from_states(vec![st(&[1, 1]), st(&[2]), st(&[0, 1, 1]), st(&[1, 1])]).unwrap();
        assert_eq!(net_change_vector(&s1, 5).unwrap().0, vec![1, 1, 0, -1, -1]);
        let s2 = JugglingSequence::from_states(vec![
            st(&[2, 1, 0, -1]),
            st(&[3, 0, -1]),
            st(&[1, 0, 1]),
            st(&[1, 1]),
        ])
        .unwrap();
        assert_eq!(net_change_vector(&s2, 5).unwrap().0, vec![2, 1, 0, -2, -1]);
        let idle = JugglingSequence::from_states(vec![st(&[0, 0, 1]), st(&[0, 1]), st(&[1])]).unwrap();
        assert!(net_change_vector(&idle, 3).unwrap().is_zero());
        assert!(JugglingSequence::from_states(vec![st(&[1]), st(&[])]).is_err());
        assert!(JugglingSequence::from_states(vec![st(&[-1]), st(&[0, -1])]).is_err());
    }

    #[test]
    fn backward_and_forward_agree() {
        for (a, b, n) in [(vec![1, 1], vec![1, 1], 4), (vec![2, 1, 0, -1], vec![1, 1], 3), (vec![3], vec![3], 4)] {
            for m in [None, Some(1), Some(2)] {
                let p = JugglingProblem::new(st(&a), st(&b), n).with_capacity(m);
                assert_eq!(p.count(), p.count_backward());
                assert_eq!(BigUint::from(p.enumerate().len()), p.count());
            }
        }
    }

    #[test]
    fn enumerated_sequences_are_valid() {
        let a = st(&[2, 1, 0, -1]);
        let b = st(&[1, 1]);
        let seqs = enumerate_sequences(&a, &b, 3, Some(3), &ThrowSet::All);
        assert!(!seqs.is_empty());
        for s in &seqs {
            let again = JugglingSequence::from_states(s.states().to_vec()).unwrap();
            assert_eq!(&again, s);
            assert_eq!(net_change_vector(s, 5).unwrap(), delta(&a, &b, 3));
            assert!(s.max_positive_entry() <= 3);
        }
    }

    #[test]
    fn labeled() {
        let fig = LabeledState::new(3, vec![vec![1, 2, 1], vec![1, -1, 0], vec![0, 1, 2]]).unwrap();
        assert_eq!(fig.decompose(), vec![st(&[1, 1]), st(&[2, -1, 1]), st(&[1, 0, 2])]);
        assert_eq!(labeled_count(&fig, &fig, 0, None).unwrap(), big(1));
        let one = LabeledState::from_labels(&[st(&[1]), st(&[1])]);
        assert_eq!(labeled_count(&one, &one, 3, None).unwrap(), big(16));
        assert_eq!(enumerate_labeled_sequences(&one, &one, 3).unwrap().len(), 16);
        assert!(labeled_count(&one, &one, 3, Some(2)).is_err());
        let single = LabeledState::from_labels(&[st(&[1, 1])]);
        assert_eq!(labeled_count(&single, &single, 3, None).unwrap(), js(&[1, 1], &[1, 1], 3));
    }
}
